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

#include <algorithm>

#include "oracles.hpp"
#include "qhcat/generators.hpp"
#include "qhcat/modrep.hpp"

using namespace qhcat;

namespace {

struct Setup {
  CategoryAlgebra alg;
  JClassDecomposition jdec;
  LocalData local;
  Subspace radical;
};

Setup make(const std::string& spec) {
  CategoryWithCocycle cc = builtin(spec);
  CategoryAlgebra alg(cc.category, cc.cocycle);
  JClassDecomposition jdec = j_decompose(cc.category);
  LocalData local = local_data(cc.category, jdec);
  Subspace rad = radical_trace_form(alg);
  return {std::move(alg), std::move(jdec), std::move(local), std::move(rad)};
}

std::vector<std::size_t> dims(const std::vector<LeftModule>& ms) {
  std::vector<std::size_t> out;
  for (const auto& m : ms) out.push_back(m.dim);
  return out;
}

}  // namespace

TEST_CASE("regular module and submodules") {
  Setup s = make("builtin:t:2");
  LeftModule reg = regular_module(s.alg);
  CHECK(reg.dim == 4);
  CHECK(check_module_axioms(s.alg, reg));
  CHECK(is_submodule(reg, s.radical));
  LeftModule r = submodule(reg, s.radical);
  CHECK(r.dim == 1);
  CHECK(check_module_axioms(s.alg, r));
  LeftModule q = quotient_module(reg, s.radical);
  CHECK(q.dim == 3);
  CHECK(check_module_axioms(s.alg, q));
  CHECK(module_radical(q, s.radical).empty());
  CHECK(head(reg, s.radical).dim == 3);
}

TEST_CASE("standard modules of T_2") {
  Setup s = make("builtin:t:2");
  StandardFamily fam = standard_modules(s.alg, s.jdec, s.local, s.radical);
  REQUIRE(fam.size() == 3);
  CHECK(dims(fam.delta) == std::vector<std::size_t>{2, 1, 1});
  CHECK(dims(fam.simple) == std::vector<std::size_t>{1, 1, 1});
  CHECK(fam.l == std::vector<std::size_t>{1, 2});
  CHECK(module_radical(fam.delta[0], s.radical).dim() == 1);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(is_simple(s.alg, fam.simple[a], s.radical));
    CHECK(fam.end_dim[a] == 1);
    for (std::size_t b = 0; b < 3; ++b) CHECK(isomorphic(s.alg, fam.simple[a], fam.simple[b]) == (a == b));
  }
  CHECK_FALSE(is_simple(s.alg, fam.delta[0], s.radical));
  // One off-diagonal entry: the constants Δ has the sign simple below its head.
  std::size_t off = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) CHECK(fam.decomposition[a][b] == 1);
      else off += fam.decomposition[a][b];
    }
  CHECK(off == 1);
  CHECK(verify_standard_axioms(s.alg, s.jdec, fam, s.radical).ok());
}

TEST_CASE("homomorphisms and splitting") {
  Setup s = make("builtin:t:2");
  LeftModule reg = regular_module(s.alg);
  CHECK(hom_space(s.alg, reg, reg).dim() == 4);
  CHECK(endomorphism_basis(s.alg, reg).size() == 4);
  std::vector<LeftModule> parts = endo_split(s.alg, reg);
  std::vector<std::size_t> d = dims(parts);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::size_t>{1, 1, 2});
  Vec one = s.alg.to_vec(s.alg.unit());
  std::vector<Vec> ids = primitive_idempotents(s.alg, one);
  CHECK(ids.size() == 3);
  Vec sum(4);
  for (const auto& f : ids) {
    CHECK(s.alg.multiply(f, f) == f);
    for (std::size_t k = 0; k < 4; ++k) sum[k] += f[k];
  }
  CHECK(sum == one);
}

TEST_CASE("cyclic group of order 3 has a two-dimensional simple") {
  Setup s = make("builtin:cyclic:3");
  StandardFamily fam = standard_modules(s.alg, s.jdec, s.local, s.radical);
  REQUIRE(fam.size() == 2);
  CHECK(dims(fam.simple) == std::vector<std::size_t>{1, 2});
  CHECK(fam.end_dim == std::vector<std::size_t>{1, 2});
  CHECK(is_simple(s.alg, fam.simple[1], s.radical));
  std::size_t total = 0;
  for (std::size_t a = 0; a < fam.size(); ++a) total += fam.simple[a].dim * fam.covers[a].module.dim / fam.end_dim[a];
  CHECK(total == 3);
}

TEST_CASE("TL_3 at delta 1") {
  Setup s = make("builtin:tl:3:1");
  StandardFamily fam = standard_modules(s.alg, s.jdec, s.local, s.radical);
  CHECK(dims(fam.delta) == std::vector<std::size_t>{2, 1});
  std::vector<std::size_t> p;
  for (const auto& c : fam.covers) p.push_back(c.module.dim);
  CHECK(p == std::vector<std::size_t>{2, 3});
  CHECK(fam.decomposition == std::vector<std::vector<std::size_t>>{{1, 1}, {0, 1}});
  CHECK(verify_standard_axioms(s.alg, s.jdec, fam, s.radical).ok());
  HeredityChain chain = build_chain(s.alg, s.jdec);
  for (const auto& layer : check_lemma44(s.alg, s.jdec, s.local, fam, chain)) CHECK(layer.ok());
  for (std::size_t i = 0; i < s.jdec.size(); ++i) CHECK(idempotent_independence_check(s.alg, s.jdec, i));
}

TEST_CASE("composition factors match enumeration on T_2") {
  Setup s = make("builtin:t:2");
  StandardFamily fam = standard_modules(s.alg, s.jdec, s.local, s.radical);
  LeftModule reg = regular_module(s.alg);
  auto brute = oracle::composition_by_enumeration(s.alg, reg, fam, s.radical);
  REQUIRE(brute);
  CHECK(*brute == composition_factors(reg, fam));
  CHECK(composition_factors(reg, fam) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("weights are ordered by the J-order") {
  Setup s = make("builtin:t:2");
  CHECK(weight_less(s.jdec, {1, 0}, {0, 0}));
  CHECK_FALSE(weight_less(s.jdec, {0, 0}, {1, 0}));
  CHECK_FALSE(weight_less(s.jdec, {1, 0}, {1, 1}));
}
