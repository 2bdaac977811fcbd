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

// J-classes of a finite split category and the per-class data the heredity
// chain is built from.
//
// Layers are numbered 0..n-1 in an admissible order: if S_i lies J-below S_j
// then i < j. The chain ideal "S_{<=i}" is the union of layers 0..i, and
// "S_{<=i-1}" for layer 0 is empty.

#ifndef QHCAT_GREEN_HPP_
#define QHCAT_GREEN_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhcat/category.hpp"

namespace qhcat {

// Mor∘s∘Mor.
MorphismSet principal_ideal(const FiniteCategory& c, MorphismId s);
// Mor∘s.
MorphismSet left_ideal(const FiniteCategory& c, MorphismId s);
MorphismSet idempotents(const FiniteCategory& c);

// Some (s, t) with e = s∘t and f = t∘s, s in e∘Hom(Y,X)∘f, t in
// f∘Hom(X,Y)∘e; absent when e and f are not equivalent. Throws InputError
// if e or f is not idempotent.
std::optional<std::pair<MorphismId, MorphismId>> idempotent_equivalent(const FiniteCategory& c, MorphismId e,
                                                                         MorphismId f);

enum class TieBreak {
  kLeastFirst,     // among J-minimal remaining classes, take the least representative id
  kGreatestFirst,  // ... the greatest; yields a different linear extension when one exists
};

enum class RepChoice {
  kLeastIdempotent,
  kGreatestIdempotent,
};

struct GreenOptions {
  TieBreak tie_break = TieBreak::kLeastFirst;
  RepChoice rep_choice = RepChoice::kLeastIdempotent;
};

struct JClassDecomposition {
  std::vector<MorphismSet> classes;
  std::vector<std::size_t> layer_of;  // morphism id -> layer
  // below[i][j]: S_i <_J S_j (strict).
  std::vector<std::vector<bool>> below;
  std::vector<MorphismId> reps;
  bool admissible = false;

  std::size_t size() const { return classes.size(); }
  bool less_j(std::size_t i, std::size_t j) const { return below[i][j]; }
  // Members of layers 0..i; i = -1 gives the empty set.
  MorphismSet up_to(long i) const;
  // Members of layers j with j <=_J i.
  MorphismSet j_below_or_equal(std::size_t i) const;
  // Hasse diagram of <_J as (lower, upper) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
};

// Throws ConsistencyError if some class has no idempotent.
JClassDecomposition j_decompose(const FiniteCategory& c, const GreenOptions& opts = {});

struct LayerLocal {
  MorphismId rep = kUndefined;
  MorphismSet corner;           // e∘S∘e
  MorphismSet gamma;            // maximal subgroup at e
  MorphismSet jset;             // (e∘S∘e) ∩ S_{<=i-1}
  MorphismSet idempotent_class; // idempotents of the layer, [e]
  MorphismSet epsilon;          // idempotents whose left traces partition the layer
  std::vector<MorphismSet> blocks;  // (S∘e) ∩ S_i for e in epsilon
};

using LocalData = std::vector<LayerLocal>;

// Units of e∘End(X)∘e, computed directly from the monoid structure.
MorphismSet units_of_corner(const FiniteCategory& c, MorphismId e);
// (S∘e) ∩ layer.
MorphismSet left_trace(const FiniteCategory& c, MorphismId e, const MorphismSet& layer);

// Computes Γ twice (as corner units and as (e∘S∘e) ∩ S_i) and throws
// ConsistencyError if the two disagree or if the ε-blocks fail to
// partition the layer.
LayerLocal layer_local(const FiniteCategory& c, const JClassDecomposition& jdec, std::size_t i, MorphismId e);
LocalData local_data(const FiniteCategory& c, const JClassDecomposition& jdec);

struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

// Per layer: S_{<=_J i} and S_{<=i} are two-sided ideals; within a layer,
// S∘s ⊆ S∘t forces equality; for every s with witness t, S∘s = S∘t∘s.
CheckReport check_ideal_lemmas(const FiniteCategory& c, const JClassDecomposition& jdec, const SplitWitness& w);

bool is_two_sided_ideal(const FiniteCategory& c, const MorphismSet& set);

}  // namespace qhcat

#endif  // QHCAT_GREEN_HPP_
