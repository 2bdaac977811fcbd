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

#include "qhcat/generators.hpp"
#include "qhcat/heredity.hpp"

using namespace qhcat;

namespace {

std::vector<std::size_t> dims(const HeredityChain& chain) {
  std::vector<std::size_t> out;
  for (const auto& j : chain.ideals) out.push_back(j.dim());
  return out;
}

}  // namespace

TEST_CASE("chain of T_2") {
  FiniteCategory t2 = full_transformation_monoid(2);
  CategoryAlgebra alg(t2, trivial_cocycle(t2));
  JClassDecomposition jdec = j_decompose(t2);
  LocalData local = local_data(t2, jdec);
  HeredityChain chain = build_chain(alg, jdec);
  CHECK(dims(chain) == std::vector<std::size_t>{0, 2, 4});
  CHECK(chain.length() == 2);
  Subspace rad = radical_trace_form(alg);
  for (std::size_t i = 1; i <= 2; ++i) {
    CAPTURE(i);
    CHECK(check_generation(alg, jdec, chain, i));
    CHECK(check_radical_square(alg, chain, i, rad));
    CHECK(check_projectivity(alg, chain, i, local).ok());
  }
  CHECK_THROWS_AS(check_generation(alg, jdec, chain, 0), std::out_of_range);
  CHECK_THROWS_AS(check_generation(alg, jdec, chain, 3), std::out_of_range);
}

TEST_CASE("projectivity ledger of B_3") {
  DiagramCategory b3 = brauer(3, Rat(1));
  CategoryAlgebra alg(b3.category, b3.cocycle);
  JClassDecomposition jdec = j_decompose(b3.category);
  LocalData local = local_data(b3.category, jdec);
  HeredityChain chain = build_chain(alg, jdec);
  CHECK(dims(chain) == std::vector<std::size_t>{0, 9, 15});
  ProjectivityLedger p = check_projectivity(alg, chain, 1, local);
  CHECK(p.summand_dims == std::vector<std::size_t>{3, 3, 3});
  CHECK(p.quotient_dim == 9);
  CHECK(p.sum_dim == 9);
  CHECK(p.ok());
}

TEST_CASE("a radical element outside the sandwich is caught") {
  FiniteCategory t2 = full_transformation_monoid(2);
  CategoryAlgebra alg(t2, trivial_cocycle(t2));
  JClassDecomposition jdec = j_decompose(t2);
  HeredityChain chain = build_chain(alg, jdec);
  // Pretend the swap is radical: c·swap·c is a constant, outside J_0 = 0.
  Vec fake(4);
  fake[*t2.find_morphism("f21")] = 1;
  RadicalWitness w{};
  CHECK_FALSE(check_radical_square(alg, chain, 1, Subspace::span(4, {fake}), &w));
  CHECK(w[1] == 0);
}

TEST_CASE("certify the small cases") {
  FiniteCategory t2 = full_transformation_monoid(2);
  HeredityCertificate cert = certify(t2, trivial_cocycle(t2));
  CHECK(cert.passed);
  CHECK(cert.complete);
  CHECK(cert.radical_dim == 1);
  CHECK(cert.radical_basis == std::vector<std::string>{"f11 - f22"});
  CHECK(cert.chain_dims == std::vector<std::size_t>{0, 2, 4});
  REQUIRE(cert.layers.size() == 2);
  CHECK(cert.layers[0].q_dim == 2);
  CHECK(cert.layers[1].q_dim == 2);

  FiniteCategory n3 = nilpotent_monoid();
  HeredityCertificate bad = certify(n3, trivial_cocycle(n3));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.first_failure());
  CHECK(bad.first_failure()->name == "split");
  CHECK(bad.first_failure()->witness == std::vector<std::string>{"x"});

  DiagramCategory tl = temperley_lieb(3, Rat(1));
  HeredityCertificate c3 = certify(tl.category, tl.cocycle);
  CHECK(c3.passed);
  CHECK(c3.radicals_agree);
  CHECK(c3.radical_dim > 0);
  for (const auto& layer : c3.layers) CHECK(layer.ok());
}

TEST_CASE("certify can stop early") {
  FiniteCategory t2 = full_transformation_monoid(2);
  CertifyOptions opts;
  opts.stop_after = "green";
  HeredityCertificate cert = certify(t2, trivial_cocycle(t2), opts);
  CHECK(cert.passed);
  CHECK_FALSE(cert.complete);
  CHECK(cert.stages.size() == 3);
  CHECK(cert.layers.empty());
}

TEST_CASE("elements print with their coefficients") {
  FiniteCategory t2 = full_transformation_monoid(2);
  Vec v(4);
  v[0] = Rat(1, 2);
  v[3] = -2;
  CHECK(format_element(t2, v) == "1/2*" + t2.name(0) + " - 2*" + t2.name(3));
  CHECK(format_element(t2, Vec(4)) == "0");
}
