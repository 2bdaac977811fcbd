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

#include "qhcat/poly.hpp"

using namespace qhcat;

namespace {

Poly expand(const std::vector<Factor>& fs) {
  Poly p = Poly::constant(1);
  for (const auto& f : fs) p = p * pow(f.poly, f.multiplicity);
  return p;
}

}  // namespace

TEST_CASE("division and gcd") {
  Poly a({-1, 0, 1});  // x^2 - 1
  Poly b({1, 1});      // x + 1
  auto [q, r] = divmod(a, b);
  CHECK(q == Poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, Poly({1, 2, 1})) == Poly({1, 1}));
  CHECK(Poly({1, 2, 3}).derivative() == Poly({2, 6}));
  CHECK(Poly({1, 2, 3}).eval(Rat(2)) == 17);
}

TEST_CASE("minimal polynomial of small matrices") {
  CHECK(min_poly(Mat{{2, 0}, {0, 2}}) == Poly({-2, 1}));
  CHECK(min_poly(Mat{{0, 1}, {0, 0}}) == Poly({0, 0, 1}));
  Mat rot{{0, -1}, {1, 0}};
  Poly mp = min_poly(rot);
  CHECK(mp == Poly({1, 0, 1}));
  CHECK(mp.eval(rot).is_zero());
}

TEST_CASE("factoring over the rationals") {
  Poly p = Poly({-1, 0, 1}) * Poly({1, 0, 1}) * Poly({2, -3, 1});  // (x^2-1)(x^2+1)(x-1)(x-2)
  auto fs = factor_rational(p);
  CHECK(expand(fs) == p.monic());
  int linear = 0, quadratic = 0;
  for (const auto& f : fs) {
    if (f.poly.degree() == 1) ++linear;
    if (f.poly.degree() == 2) ++quadratic;
  }
  CHECK(linear == 3);
  CHECK(quadratic == 1);
  for (const auto& f : fs)
    if (f.poly == Poly::linear(1)) CHECK(f.multiplicity == 2);

  auto irr = factor_rational(Poly({1, 1, 1}));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].poly.degree() == 2);

  Poly half = Poly({Rat(-1, 4), 0, 1});  // (x - 1/2)(x + 1/2)
  CHECK(factor_rational(half).size() == 2);
}
