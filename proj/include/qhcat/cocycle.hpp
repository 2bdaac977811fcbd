// Copyright 2026 The qhcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHCAT_COCYCLE_HPP_
#define QHCAT_COCYCLE_HPP_

#include <optional>
#include <vector>

#include "qhcat/category.hpp"
#include "qhcat/exactla.hpp"

namespace qhcat {

// Nonzero rational value on each composable pair (t, s). Entries are
// explicit: an unset composable pair is a validation error, never an
// implicit 1.
class Cocycle {
 public:
  Cocycle() = default;
  explicit Cocycle(std::size_t num_morphisms) : m_(num_morphisms), values_(num_morphisms * num_morphisms) {}

  std::size_t num_morphisms() const { return m_; }
  void set(MorphismId t, MorphismId s, Rat value);
  bool has(MorphismId t, MorphismId s) const { return values_[t * m_ + s].has_value(); }
  const std::optional<Rat>& get(MorphismId t, MorphismId s) const { return values_[t * m_ + s]; }
  // Throws InputError if the entry is missing.
  const Rat& at(MorphismId t, MorphismId s) const;
  bool is_trivial() const;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::optional<Rat>> values_;
};

Cocycle trivial_cocycle(const FiniteCategory& c);

// Checks that entries exist exactly on composable pairs, are nonzero, and
// satisfy a(u∘t, s) a(u, t) = a(u, t∘s) a(t, s) on every composable triple.
ValidationReport validate_cocycle(const FiniteCategory& c, const Cocycle& a);

}  // namespace qhcat

#endif  // QHCAT_COCYCLE_HPP_
