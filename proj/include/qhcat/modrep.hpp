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

// Finite-dimensional left modules over a twisted category algebra, and the
// standard / simple / projective modules indexed by (layer, r).
//
// Splitting (of modules and of idempotents) is driven by minimal
// polynomials of endomorphisms. A summand is declared indecomposable only
// when its endomorphism ring is certified local: either End/rad(End) is
// one-dimensional, or some probed element generates a field of full
// dimension modulo the radical. Anything undecided within the configured
// bounds raises InstanceTooLarge.

#ifndef QHCAT_MODREP_HPP_
#define QHCAT_MODREP_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhcat/algebra.hpp"
#include "qhcat/green.hpp"
#include "qhcat/heredity.hpp"

namespace qhcat {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2013cafeULL;

struct SplitConfig {
  int max_min_poly_degree = 16;
  int max_iterations = 64;
  std::uint64_t seed = kDefaultSeed;
};

struct LeftModule {
  std::size_t dim = 0;
  // action[s] is the matrix of basis morphism s.
  std::vector<Mat> action;

  Mat act(std::span<const Rat> element) const;
};

LeftModule regular_module(const CategoryAlgebra& alg);
// `sub` must be invariant under left multiplication (InputError otherwise).
LeftModule left_ideal_module(const CategoryAlgebra& alg, const Subspace& sub);
LeftModule submodule(const LeftModule& m, const Subspace& sub);
LeftModule quotient_module(const LeftModule& m, const Subspace& sub);
// upper/lower with lower ⊆ upper, both submodules of m.
LeftModule subquotient(const LeftModule& m, const Subspace& upper, const Subspace& lower);
// upper/lower for left ideals lower ⊆ upper of A.
LeftModule algebra_subquotient(const CategoryAlgebra& alg, const Subspace& upper, const Subspace& lower);
bool is_submodule(const LeftModule& m, const Subspace& sub);
// action(t)·action(s) = a(t,s)·action(t∘s) (or 0) for all basis pairs, and
// the unit acts as the identity.
bool check_module_axioms(const CategoryAlgebra& alg, const LeftModule& m);
// A·span(vectors) inside m.
Subspace generated_submodule(const CategoryAlgebra& alg, const LeftModule& m, const std::vector<Vec>& vectors);

// Rad(M) = J(A)·M.
Subspace module_radical(const LeftModule& m, const Subspace& radical);
LeftModule head(const LeftModule& m, const Subspace& radical);

// Intertwiners F (dim N x dim M, flattened row-major) with
// F·action_M(s) = action_N(s)·F for every algebra generator.
Subspace hom_space(const CategoryAlgebra& alg, const LeftModule& m, const LeftModule& n);
Mat hom_matrix(const LeftModule& m, const LeftModule& n, std::span<const Rat> flat);
std::vector<Mat> endomorphism_basis(const CategoryAlgebra& alg, const LeftModule& m);

bool isomorphic(const CategoryAlgebra& alg, const LeftModule& m, const LeftModule& n, const SplitConfig& cfg = {});
// J(A)·M = 0 and End(M) certified to be a division algebra.
bool is_simple(const CategoryAlgebra& alg, const LeftModule& m, const Subspace& radical, const SplitConfig& cfg = {});

// Indecomposable summands with dimensions adding up to m.dim.
std::vector<LeftModule> endo_split(const CategoryAlgebra& alg, const LeftModule& m, const SplitConfig& cfg = {});

// Orthogonal primitive idempotents summing to the idempotent g.
std::vector<Vec> primitive_idempotents(const CategoryAlgebra& alg, const Vec& g, const SplitConfig& cfg = {});

// Q = Ae'/A·kJ_e for an idempotent e of layer i.
LeftModule q_module_at(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t layer, MorphismId e);
LeftModule q_module(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                    std::size_t layer);

struct Weight {
  std::size_t layer = 0;
  std::size_t r = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

struct FiltrationStep {
  std::size_t layer = 0;  // quotient J_j f / J_{j-1} f with j = layer
  std::size_t dim = 0;
  std::vector<std::size_t> summands;  // indices into StandardFamily::lambda
};

struct ProjectiveCover {
  Vec idempotent;  // f, primitive in the corner e'Ae'
  Subspace span;   // A·f inside A
  LeftModule module;
  std::vector<FiltrationStep> steps;  // nonzero steps, bottom first
};

struct StandardFamily {
  std::vector<Weight> lambda;  // layer ascending, then r
  std::vector<LeftModule> delta;
  std::vector<LeftModule> simple;
  std::vector<std::size_t> n;        // multiplicity of Δ in Q_layer
  std::vector<std::size_t> end_dim;  // dim End(D)
  std::vector<std::size_t> l;        // classes per layer
  std::vector<LeftModule> q;         // Q per layer
  std::vector<ProjectiveCover> covers;
  // decomposition[a][b] = [Δ_a : D_b].
  std::vector<std::vector<std::size_t>> decomposition;

  std::size_t size() const { return lambda.size(); }
  std::optional<std::size_t> index_of(Weight w) const;
};

// (i,r) < (j,s) iff S_j <_J S_i.
bool weight_less(const JClassDecomposition& jdec, Weight a, Weight b);

// Δ, D, n, l, Q, projective covers and the decomposition matrix. Throws
// ConsistencyError if some Δ has a non-simple head, InstanceTooLarge if
// splitting exceeds the configured bounds.
StandardFamily standard_modules(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                                const Subspace& radical, const SplitConfig& cfg = {});

// P for weight w: the first primitive idempotent f of e'Ae' (in splitting
// order) with Af/J_{i-1}f ≅ Δ_w, together with the filtration by J_j·f.
// Only family.lambda/delta are read.
ProjectiveCover projective_cover(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                                 const StandardFamily& family, Weight w, const SplitConfig& cfg = {});

// [M : D_idx] = dim Hom(P_idx, M) / dim End(D_idx), with dim Hom(Af, M)
// computed as rank(f acting on M).
std::size_t composition_multiplicity(const LeftModule& m, const StandardFamily& family, std::size_t idx);
std::vector<std::size_t> composition_factors(const LeftModule& m, const StandardFamily& family);

struct AxiomReport {
  CheckReport head_simple;
  CheckReport radical_factors;  // includes the annihilation check
  CheckReport top_quotient;
  CheckReport lower_quotients;
  CheckReport unitriangular;
  bool ok() const {
    return head_simple.ok() && radical_factors.ok() && top_quotient.ok() && lower_quotients.ok() &&
           unitriangular.ok();
  }
};

AxiomReport verify_standard_axioms(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                   const StandardFamily& family, const Subspace& radical,
                                   const SplitConfig& cfg = {});

struct Lemma44Layer {
  std::size_t layer = 0;
  std::size_t quotient_dim = 0;  // dim J_i/J_{i-1}
  std::size_t epsilon = 0;
  std::size_t predicted_dim = 0;  // |ε| Σ_r n_r dim Δ_r
  bool multiplicities_match = false;
  // Each Ae'+J_{i-1} / J_{i-1} for e in ε is isomorphic to Q, and their
  // dimensions add up to the quotient.
  bool summands_match = false;
  bool ok() const { return quotient_dim == predicted_dim && multiplicities_match && summands_match; }
};

std::vector<Lemma44Layer> check_lemma44(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                        const LocalData& local, const StandardFamily& family,
                                        const HeredityChain& chain, const SplitConfig& cfg = {});

// Q built from two distinct idempotents of the layer are isomorphic; true
// when the layer has a single idempotent.
bool idempotent_independence_check(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t layer,
                                   const SplitConfig& cfg = {});

// Trace of each Γ_e element (id order) on m; orders Δ within a layer.
std::vector<Rat> gamma_character(const LeftModule& m, const MorphismSet& gamma);

}  // namespace qhcat

#endif  // QHCAT_MODREP_HPP_
