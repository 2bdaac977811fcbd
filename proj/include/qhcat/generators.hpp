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

// Bundled example categories: transformation monoids, small groups and
// monoids, and the Temperley-Lieb / Brauer / partition diagram monoids with
// the loop-counting cocycle delta^{#loops}.

#ifndef QHCAT_GENERATORS_HPP_
#define QHCAT_GENERATORS_HPP_

#include <string>
#include <vector>

#include "qhcat/category.hpp"
#include "qhcat/cocycle.hpp"

namespace qhcat {

struct CategoryWithCocycle {
  FiniteCategory category;
  Cocycle cocycle;
};

enum class DiagramKind { kTemperleyLieb, kBrauer, kPartition };

struct DiagramCategory {
  DiagramKind kind = DiagramKind::kPartition;
  int n = 0;
  Rat delta;
  // Canonical block labels of each diagram over points 0..n-1 (top row) and
  // n..2n-1 (bottom row), in morphism-id order.
  std::vector<std::vector<int>> diagrams;
  FiniteCategory category;
  Cocycle cocycle;
};

// All maps {1..n} -> {1..n}, one object, t∘s = t after s. 1 <= n <= 4.
FiniteCategory full_transformation_monoid(int n);
// Cyclic group of order n as a one-object category. 1 <= n <= 64.
FiniteCategory cyclic_group(int n);
// The monoid {1, x, 0} with x∘x = 0; not split.
FiniteCategory nilpotent_monoid();

// Throws InputError for delta = 0 or n outside the caps (TL n <= 6,
// Brauer n <= 4, partition n <= 3; all n >= 1).
DiagramCategory temperley_lieb(int n, const Rat& delta);
DiagramCategory brauer(int n, const Rat& delta);
DiagramCategory partition_category(int n, const Rat& delta);

// Number of closed components left in the middle row when stacking `top`
// on `bottom`, together with the canonical labels of the composite.
struct Stacked {
  std::vector<int> diagram;
  int loops = 0;
};
Stacked stack_diagrams(const std::vector<int>& top, const std::vector<int>& bottom, int n);

// builtin:<family>:<n>[:<p>/<q>] with families t, tl, brauer, partition,
// cyclic and n3 (no parameters). Several specs joined by '+' give their
// disjoint union, e.g. "builtin:t:2+cyclic:2". Throws InputError.
CategoryWithCocycle builtin(const std::string& spec);

// The fixed corpus the acceptance suite and CLI examples run over.
std::vector<std::string> bundled_examples();

}  // namespace qhcat

#endif  // QHCAT_GENERATORS_HPP_
