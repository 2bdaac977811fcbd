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

// The twisted category algebra: basis Mor(C), t·s = a(t,s) t∘s when the
// composite exists and 0 otherwise.

#ifndef QHCAT_ALGEBRA_HPP_
#define QHCAT_ALGEBRA_HPP_

#include <map>
#include <vector>

#include "qhcat/category.hpp"
#include "qhcat/cocycle.hpp"
#include "qhcat/exactla.hpp"
#include "qhcat/green.hpp"

namespace qhcat {

// Sparse algebra element; never stores zero coefficients.
using Element = std::map<MorphismId, Rat>;

class CategoryAlgebra {
 public:
  // Throws InputError unless the cocycle validates against the category.
  CategoryAlgebra(FiniteCategory c, Cocycle a);

  std::size_t dim() const { return category_.num_morphisms(); }
  const FiniteCategory& category() const { return category_; }
  const Cocycle& cocycle() const { return cocycle_; }

  // Basis product t·s as (morphism, coefficient); morphism is kUndefined
  // when the product is zero.
  MorphismId product(MorphismId t, MorphismId s) const { return category_.comp(t, s); }
  const Rat& coefficient(MorphismId t, MorphismId s) const { return coeff_[t * dim() + s]; }

  Element basis(MorphismId s) const;
  Element unit() const;
  Element multiply(const Element& x, const Element& y) const;

  Vec to_vec(const Element& x) const;
  Element from_vec(std::span<const Rat> v) const;
  Vec multiply(std::span<const Rat> x, std::span<const Rat> y) const;
  // s·v and v·s for a basis morphism s.
  Vec left_mul(MorphismId s, std::span<const Rat> v) const;
  Vec right_mul(std::span<const Rat> v, MorphismId s) const;

  // Basis morphisms (identities first) whose composites exhaust Mor(C), so
  // that closure under them implies closure under the whole algebra.
  const std::vector<MorphismId>& generators() const { return generators_; }

 private:
  FiniteCategory category_;
  Cocycle cocycle_;
  std::vector<Rat> coeff_;
  std::vector<MorphismId> generators_;
};

// e' = a(e,e)^{-1} e; throws InputError unless e is an idempotent.
Element idempotent_lift(const CategoryAlgebra& alg, MorphismId e);

struct Corner {
  MorphismId e = kUndefined;
  MorphismSet basis;       // e∘S∘e
  MorphismSet gamma_part;  // basis ∩ S_i
  MorphismSet j_part;      // basis ∩ S_{<=i-1}
};

// Corner at the representative of layer i. Throws ConsistencyError if the
// Γ/J split is not exhaustive, kJ_e is not an ideal of the corner, or k_aΓ_e
// is not a unital subalgebra with unit e'.
Corner corner(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t i);

// Radical as the set of u with e_i'·a·u·b·e_i' ∈ kJ_{e_i} for all i and all
// basis a, b (valid over Q, where every |Γ_e| is invertible).
Subspace radical_corner_criterion(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                  const LocalData& local);
// Radical of the trace form (x, y) -> tr(L_x L_y) of the regular
// representation.
Subspace radical_trace_form(const CategoryAlgebra& alg);

// Smallest two-sided ideal containing the generators.
Subspace ideal_span(const CategoryAlgebra& alg, const std::vector<Vec>& generators);
// Smallest left ideal containing the generators.
Subspace left_ideal_span(const CategoryAlgebra& alg, const std::vector<Vec>& generators);
bool is_two_sided_ideal(const CategoryAlgebra& alg, const Subspace& sub);
// Span of all products x·y with x in a, y in b.
Subspace product_span(const CategoryAlgebra& alg, const Subspace& a, const Subspace& b);
// Least k with rad^k = 0, or 0 if the radical is not nilpotent within
// dim + 1 steps.
std::size_t nilpotency_index(const CategoryAlgebra& alg, const Subspace& radical);

// Associativity of the twisted product on all basis triples.
bool check_associative(const CategoryAlgebra& alg);

}  // namespace qhcat

#endif  // QHCAT_ALGEBRA_HPP_
