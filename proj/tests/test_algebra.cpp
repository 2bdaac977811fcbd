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

#include <doctest.h>

#include "oracles.hpp"
#include "qhcat/algebra.hpp"
#include "qhcat/generators.hpp"

using namespace qhcat;

TEST_CASE("TL_2 at delta 3") {
  DiagramCategory tl = temperley_lieb(2, Rat(3));
  CategoryAlgebra alg(tl.category, tl.cocycle);
  const MorphismId u = *tl.category.find_morphism("d0011");
  Element uu = alg.multiply(alg.basis(u), alg.basis(u));
  CHECK(uu == Element{{u, Rat(3)}});
  CHECK(idempotent_lift(alg, u) == Element{{u, Rat(1, 3)}});
  Element lift = idempotent_lift(alg, u);
  CHECK(alg.multiply(lift, lift) == lift);
  CHECK(alg.multiply(alg.unit(), alg.basis(u)) == alg.basis(u));
  CHECK(radical_trace_form(alg).empty());
  CHECK(check_associative(alg));
}

TEST_CASE("corner and radical of T_2") {
  FiniteCategory t2 = full_transformation_monoid(2);
  CategoryAlgebra alg(t2, trivial_cocycle(t2));
  JClassDecomposition jdec = j_decompose(t2);
  LocalData local = local_data(t2, jdec);
  Corner top = corner(alg, jdec, 1);
  CHECK(top.basis.size() == 4);
  CHECK(top.gamma_part.size() == 2);
  CHECK(top.j_part.size() == 2);
  Corner bottom = corner(alg, jdec, 0);
  CHECK(bottom.basis.size() == 1);

  Subspace rad = radical_corner_criterion(alg, jdec, local);
  Vec expected(4);
  expected[*t2.find_morphism("f11")] = 1;
  expected[*t2.find_morphism("f22")] = -1;
  CHECK(rad == Subspace::span(4, {expected}));
  CHECK(rad == radical_trace_form(alg));
  CHECK(nilpotency_index(alg, rad) == 2);
  CHECK(is_two_sided_ideal(alg, rad));
  CHECK(product_span(alg, rad, rad).empty());
}

TEST_CASE("trace-form radical is the kernel of the regular trace Gram matrix") {
  for (const std::string& spec : bundled_examples()) {
    CAPTURE(spec);
    CategoryWithCocycle cc = builtin(spec);
    CategoryAlgebra alg(cc.category, cc.cocycle);
    CHECK(radical_trace_form(alg) == nullspace(oracle::trace_gram(cc.category, cc.cocycle)));
  }
}

TEST_CASE("ideal spans") {
  FiniteCategory t2 = full_transformation_monoid(2);
  CategoryAlgebra alg(t2, trivial_cocycle(t2));
  Vec c1 = alg.to_vec(alg.basis(*t2.find_morphism("f11")));
  CHECK(ideal_span(alg, {c1}).dim() == 2);
  CHECK(left_ideal_span(alg, {c1}).dim() == 2);
  Vec sw = alg.to_vec(alg.basis(*t2.find_morphism("f21")));
  CHECK(ideal_span(alg, {sw}).dim() == 4);
  CHECK_FALSE(is_two_sided_ideal(alg, Subspace::span(4, {c1})));
}

TEST_CASE("element and vector forms agree") {
  DiagramCategory tl = temperley_lieb(3, Rat(2));
  CategoryAlgebra alg(tl.category, tl.cocycle);
  const std::size_t m = alg.dim();
  Vec x(m), y(m);
  for (std::size_t k = 0; k < m; ++k) {
    x[k] = Rat(static_cast<long>(k) + 1, 2);
    y[k] = Rat(3 - static_cast<long>(k));
  }
  CHECK(alg.to_vec(alg.multiply(alg.from_vec(x), alg.from_vec(y))) == alg.multiply(x, y));
  for (MorphismId s = 0; s < m; ++s) {
    CHECK(alg.left_mul(s, y) == alg.multiply(alg.to_vec(alg.basis(s)), y));
    CHECK(alg.right_mul(x, s) == alg.multiply(x, alg.to_vec(alg.basis(s))));
  }
}
