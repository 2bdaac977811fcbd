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
#include "qhcat/exactla.hpp"

using namespace qhcat;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("rref of a rank two matrix") {
  Mat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  Rref r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == Mat{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  CHECK(rank(m) == 2);
}

TEST_CASE("determinant agrees with the permutation expansion") {
  Mat m{{2, -1, 0, 3}, {1, Rat(1, 2), 4, 0}, {0, 0, 1, -2}, {5, 1, 1, 1}};
  CHECK(determinant(m) == oracle::det_leibniz(m));
  Mat singular{{1, 2}, {2, 4}};
  CHECK(determinant(singular) == 0);
}

TEST_CASE("nullspace and solve") {
  Mat m{{1, 1, 0}, {0, 1, 1}};
  Subspace ns = nullspace(m);
  REQUIRE(ns.dim() == 1);
  CHECK(is_zero(m.apply(ns.basis_rows()[0])));

  Mat a{{2, 1}, {1, 3}};
  Vec b{Rat(3), Rat(5)};
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a.apply(*x) == b);
  Mat s{{1, 1}, {1, 1}};
  CHECK_FALSE(solve(s, Vec{Rat(1), Rat(2)}));
}

TEST_CASE("subspace sum, intersection and coordinates") {
  Subspace u = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace w = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK((u + w).dim() == 3);
  Subspace i = u.intersect(w);
  REQUIRE(i.dim() == 1);
  CHECK(i.contains(Vec{0, 5, 0}));
  CHECK_FALSE(i.contains(Vec{1, 0, 0}));
  CHECK(u.contains(i));

  Subspace v(3);
  CHECK(v.insert({1, 1, 0}));
  CHECK_FALSE(v.insert({2, 2, 0}));
  CHECK(v.insert({0, 1, 1}));
  Vec target{1, 3, 2};
  Vec c = v.coordinates(target);
  Vec back(3);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t j = 0; j < 3; ++j) back[j] += c[k] * v.basis_rows()[k][j];
  CHECK(back == target);
  CHECK(Subspace::coordinate(3, std::vector<std::size_t>{0, 2}) == Subspace::span(3, {{0, 0, 1}, {1, 0, 0}}));
}

TEST_CASE("matrix arithmetic") {
  Mat a{{1, 2}, {3, 4}};
  CHECK(a * Mat::identity(2) == a);
  CHECK(a.transpose() == Mat{{1, 3}, {2, 4}});
  CHECK((a - a).is_zero());
  CHECK(a * a == Mat{{7, 10}, {15, 22}});
}
