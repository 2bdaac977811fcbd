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

// The ideal chain 0 = J_0 ⊂ J_1 ⊂ ... ⊂ J_n = A spanned by the J-layers, and
// the per-layer checks that make it a heredity chain.

#ifndef QHCAT_HEREDITY_HPP_
#define QHCAT_HEREDITY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qhcat/algebra.hpp"
#include "qhcat/green.hpp"

namespace qhcat {

struct HeredityChain {
  // sets[i] = S_{<=i-1} in 0-based layers, so sets[0] is empty and
  // sets.back() is Mor(C).
  std::vector<MorphismSet> sets;
  std::vector<Subspace> ideals;

  std::size_t length() const { return sets.empty() ? 0 : sets.size() - 1; }
};

// Throws ConsistencyError if an inclusion is not strict or some J_i is not a
// two-sided ideal.
HeredityChain build_chain(const CategoryAlgebra& alg, const JClassDecomposition& jdec);

// The checks below take 1 <= i <= chain.length().

// J_i = J_{i-1} + A e_i' A.
bool check_generation(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const HeredityChain& chain,
                      std::size_t i);

// (s, u-index, t): s·u·t ∉ J_{i-1} with s, t ∈ S_{<=i} and u the radical
// basis vector at that index.
using RadicalWitness = std::array<std::size_t, 3>;

bool check_radical_square(const CategoryAlgebra& alg, const HeredityChain& chain, std::size_t i,
                          const Subspace& radical, RadicalWitness* witness = nullptr);

struct ProjectivityLedger {
  std::vector<MorphismId> idempotents;  // ε_i
  std::vector<std::size_t> summand_dims;
  std::size_t sum_dim = 0;       // dimension of the sum of the images
  std::size_t quotient_dim = 0;  // dim J_i/J_{i-1}
  bool spans = false;
  bool direct = false;
  bool ok() const { return spans && direct; }
};

ProjectivityLedger check_projectivity(const CategoryAlgebra& alg, const HeredityChain& chain, std::size_t i,
                                      const LocalData& local);

struct LayerCertificate {
  std::size_t layer = 0;  // 0-based
  MorphismId rep = kUndefined;
  std::size_t size = 0;   // |S_i|
  std::size_t gamma = 0;  // |Γ_e|
  bool generation = false;
  bool radical_square = false;
  std::optional<RadicalWitness> radical_witness;
  ProjectivityLedger projectivity;
  std::size_t q_dim = 0;  // dim Ae'/A·kJ_e
  bool q_identity = false;  // |ε| dim Q = |S_i|
  bool ok() const { return generation && radical_square && projectivity.ok() && q_identity; }
};

struct StageResult {
  std::string name;
  bool passed = false;
  std::string message;
  std::vector<std::string> witness;  // morphism names
};

struct CertifyOptions {
  GreenOptions green;
  // Stage name after which to stop; empty runs the whole pipeline.
  std::string stop_after;
};

struct HeredityCertificate {
  std::vector<StageResult> stages;
  std::vector<LayerCertificate> layers;
  std::vector<std::size_t> chain_dims;
  bool chain_strict = false;
  std::size_t algebra_dim = 0;
  std::size_t radical_dim = 0;
  bool radicals_agree = false;
  std::size_t nilpotency = 0;
  std::vector<std::string> radical_basis;  // formatted elements
  bool passed = false;
  bool complete = false;  // false when stopped early

  const StageResult* first_failure() const;
};

// Stage order: validate, split, green, algebra, radical, heredity, modules.
// Stops at the first failing stage, or after opts.stop_after; passed is
// true when every stage that ran passed.
HeredityCertificate certify(const FiniteCategory& c, const Cocycle& a, const CertifyOptions& opts = {});

std::string format_element(const FiniteCategory& c, std::span<const Rat> v);

}  // namespace qhcat

#endif  // QHCAT_HEREDITY_HPP_
