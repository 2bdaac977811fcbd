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

// Finite categories with a dense composition table, their validation, and
// the splitness test (every morphism has a pseudo-inverse).

#ifndef QHCAT_CATEGORY_HPP_
#define QHCAT_CATEGORY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhcat/errors.hpp"

namespace qhcat {

using ObjectId = std::size_t;
using MorphismId = std::size_t;
// Sorted, duplicate-free list of morphism ids.
using MorphismSet = std::vector<MorphismId>;

inline constexpr MorphismId kUndefined = SIZE_MAX;

struct Morphism {
  std::string name;
  ObjectId dom = 0;
  ObjectId cod = 0;
};

// A violated axiom, with the morphisms that exhibit it.
struct Violation {
  std::string kind;
  std::string message;
  std::vector<MorphismId> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

class FiniteCategory {
 public:
  FiniteCategory() = default;
  // `comp` is row-major over (t, s): comp[t * m + s] is t∘s, or kUndefined.
  // Only shapes and id ranges are checked here; validate() checks the axioms.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<MorphismId> identities, std::vector<MorphismId> comp);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(MorphismId s) const;
  const std::string& name(MorphismId s) const { return morphism(s).name; }
  MorphismId identity(ObjectId x) const;
  const std::vector<MorphismId>& identities() const { return identities_; }

  // t∘s, or kUndefined; no bounds checking.
  MorphismId comp(MorphismId t, MorphismId s) const { return comp_[t * morphisms_.size() + s]; }
  // t∘s, absent exactly when cod(s) != dom(t). Throws InputError on bad ids.
  std::optional<MorphismId> compose(MorphismId t, MorphismId s) const;
  bool composable(MorphismId t, MorphismId s) const { return morphisms_[s].cod == morphisms_[t].dom; }
  bool is_idempotent(MorphismId s) const { return comp(s, s) == s; }
  bool is_endomorphism(MorphismId s) const { return morphisms_[s].dom == morphisms_[s].cod; }

  // Morphisms X -> Y.
  std::vector<MorphismId> hom_set(ObjectId x, ObjectId y) const;
  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<MorphismId> find_morphism(const std::string& name) const;

  const std::vector<MorphismId>& comp_table() const { return comp_; }

  friend bool operator==(const FiniteCategory&, const FiniteCategory&);

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<MorphismId> comp_;
};

bool operator==(const Morphism& a, const Morphism& b);

// Identity neutrality, dom/cod consistency of the table, and associativity
// over all composable triples. Stops each family of checks at its first
// offence.
ValidationReport validate(const FiniteCategory& c);

struct SplitWitness {
  // pseudo_inverse[s] = u with s∘u∘s = s and u∘s∘u = u.
  std::vector<MorphismId> pseudo_inverse;
};

struct SplitCheck {
  std::optional<SplitWitness> witness;
  // Set when witness is absent: a morphism with no pseudo-inverse.
  MorphismId offender = kUndefined;
  bool split() const { return witness.has_value(); }
};

// Picks the first t (by id) with s∘t∘s = s and returns u = t∘s∘t.
SplitCheck is_split(const FiniteCategory& c);

// One-object category from a monoid table, table[t][s] = t∘s. Throws
// InputError if the table is not square, has no two-sided identity, or is
// not associative. Names default to "m0", "m1", ...
FiniteCategory from_monoid(const std::vector<std::vector<std::size_t>>& table,
                           std::vector<std::string> names = {});

// Composition table of a one-object category, table[t][s] = t∘s.
std::vector<std::vector<std::size_t>> monoid_table(const FiniteCategory& c);

// Disjoint union; morphism ids of `b` are shifted by a.num_morphisms().
FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace qhcat

#endif  // QHCAT_CATEGORY_HPP_
