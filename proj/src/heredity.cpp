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

#include "qhcat/heredity.hpp"

#include <algorithm>

#include "qhcat/errors.hpp"
#include "qhcat/modrep.hpp"

namespace qhcat {

namespace {

bool supported_in(std::span<const Rat> v, const std::vector<bool>& allowed) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!allowed[k] && sgn(v[k]) != 0) return false;
  return true;
}

std::vector<bool> indicator(std::size_t m, const MorphismSet& set) {
  std::vector<bool> out(m, false);
  for (MorphismId s : set) out[s] = true;
  return out;
}

void check_layer_index(const HeredityChain& chain, std::size_t i) {
  if (i < 1 || i > chain.length()) throw std::out_of_range("heredity layer index out of range");
}

std::vector<std::string> names(const FiniteCategory& c, const std::vector<MorphismId>& ids) {
  std::vector<std::string> out;
  for (MorphismId s : ids) out.push_back(c.name(s));
  return out;
}

}  // namespace

std::string format_element(const FiniteCategory& c, std::span<const Rat> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    Rat mag = abs(v[k]);
    if (out.empty()) {
      if (sgn(v[k]) < 0) out += "-";
    } else {
      out += sgn(v[k]) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += c.name(k);
  }
  return out.empty() ? "0" : out;
}

HeredityChain build_chain(const CategoryAlgebra& alg, const JClassDecomposition& jdec) {
  const std::size_t m = alg.dim();
  HeredityChain chain;
  for (long i = -1; i < static_cast<long>(jdec.size()); ++i) {
    MorphismSet set = jdec.up_to(i);
    Subspace span = Subspace::coordinate(m, set);
    if (!chain.ideals.empty()) {
      const std::size_t prev = chain.ideals.back().dim();
      if (span.dim() != prev + jdec.classes[i].size() || span.dim() == prev) {
        throw ConsistencyError("chain inclusion J_" + std::to_string(i) + " ⊂ J_" + std::to_string(i + 1) +
                               " is not strict of the expected dimension");
      }
    }
    if (!is_two_sided_ideal(alg, span)) {
      throw ConsistencyError("J_" + std::to_string(i + 1) + " is not a two-sided ideal");
    }
    chain.sets.push_back(std::move(set));
    chain.ideals.push_back(std::move(span));
  }
  if (chain.ideals.back().dim() != m) throw ConsistencyError("chain does not end at the whole algebra");
  return chain;
}

bool check_generation(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const HeredityChain& chain,
                      std::size_t i) {
  check_layer_index(chain, i);
  const Vec lift = alg.to_vec(idempotent_lift(alg, jdec.reps.at(i - 1)));
  return chain.ideals[i - 1] + ideal_span(alg, {lift}) == chain.ideals[i];
}

bool check_radical_square(const CategoryAlgebra& alg, const HeredityChain& chain, std::size_t i,
                          const Subspace& radical, RadicalWitness* witness) {
  check_layer_index(chain, i);
  const std::vector<bool> lower = indicator(alg.dim(), chain.sets[i - 1]);
  const auto& rad = radical.basis_rows();
  for (std::size_t k = 0; k < rad.size(); ++k) {
    for (MorphismId t : chain.sets[i]) {
      const Vec ut = alg.right_mul(rad[k], t);
      if (is_zero(ut)) continue;
      for (MorphismId s : chain.sets[i]) {
        if (!supported_in(alg.left_mul(s, ut), lower)) {
          if (witness) *witness = {s, k, t};
          return false;
        }
      }
    }
  }
  return true;
}

ProjectivityLedger check_projectivity(const CategoryAlgebra& alg, const HeredityChain& chain, std::size_t i,
                                      const LocalData& local) {
  check_layer_index(chain, i);
  const Subspace& below = chain.ideals[i - 1];
  const Subspace& upper = chain.ideals[i];
  ProjectivityLedger ledger;
  ledger.quotient_dim = upper.dim() - below.dim();
  Subspace total = below;
  std::size_t summed = 0;
  for (MorphismId e : local.at(i - 1).epsilon) {
    ledger.idempotents.push_back(e);
    const Vec lift = alg.to_vec(idempotent_lift(alg, e));
    Subspace image = left_ideal_span(alg, {lift}) + below;
    const std::size_t d = image.dim() - below.dim();
    ledger.summand_dims.push_back(d);
    summed += d;
    total = total + image;
  }
  ledger.sum_dim = total.dim() - below.dim();
  ledger.spans = total == upper;
  ledger.direct = summed == ledger.quotient_dim;
  return ledger;
}

const StageResult* HeredityCertificate::first_failure() const {
  for (const auto& s : stages)
    if (!s.passed) return &s;
  return nullptr;
}

HeredityCertificate certify(const FiniteCategory& c, const Cocycle& a, const CertifyOptions& opts) {
  HeredityCertificate cert;
  cert.algebra_dim = c.num_morphisms();
  auto stage = [&](const std::string& name) -> StageResult& {
    cert.stages.push_back({name, true, "", {}});
    return cert.stages.back();
  };
  auto stop = [&](const std::string& name) { return opts.stop_after == name; };
  auto finish = [&]() {
    cert.passed = true;
    return cert;
  };
  auto fail = [&](StageResult& s, std::string msg, std::vector<std::string> witness = {}) {
    s.passed = false;
    s.message = std::move(msg);
    s.witness = std::move(witness);
    return cert;
  };

  {
    StageResult& s = stage("validate");
    ValidationReport cat = validate(c);
    if (!cat.ok()) {
      const Violation& v = cat.violations.front();
      return fail(s, v.kind + ": " + v.message, names(c, v.witness));
    }
    ValidationReport coc = validate_cocycle(c, a);
    if (!coc.ok()) {
      const Violation& v = coc.violations.front();
      return fail(s, v.kind + ": " + v.message, names(c, v.witness));
    }
  }

  if (stop("validate")) return finish();

  SplitCheck split = is_split(c);
  {
    StageResult& s = stage("split");
    if (!split.split()) return fail(s, "morphism without a pseudo-inverse", {c.name(split.offender)});
  }

  if (stop("split")) return finish();

  JClassDecomposition jdec;
  LocalData local;
  {
    StageResult& s = stage("green");
    try {
      jdec = j_decompose(c, opts.green);
      local = local_data(c, jdec);
    } catch (const ConsistencyError& e) {
      return fail(s, e.what());
    }
    if (!jdec.admissible) return fail(s, "layer order is not admissible");
    CheckReport lemmas = check_ideal_lemmas(c, jdec, *split.witness);
    if (!lemmas.ok()) return fail(s, lemmas.failures.front());
  }

  if (stop("green")) return finish();

  std::optional<CategoryAlgebra> alg;
  {
    StageResult& s = stage("algebra");
    alg.emplace(c, a);
    if (!check_associative(*alg)) return fail(s, "twisted product is not associative");
  }

  if (stop("algebra")) return finish();

  Subspace radical;
  {
    StageResult& s = stage("radical");
    try {
      radical = radical_corner_criterion(*alg, jdec, local);
    } catch (const ConsistencyError& e) {
      return fail(s, e.what());
    }
    const Subspace oracle = radical_trace_form(*alg);
    cert.radicals_agree = radical == oracle;
    cert.radical_dim = radical.dim();
    for (const auto& row : radical.basis_rows()) cert.radical_basis.push_back(format_element(c, row));
    cert.nilpotency = nilpotency_index(*alg, radical);
    if (!cert.radicals_agree) {
      return fail(s, "corner criterion (dim " + std::to_string(radical.dim()) + ") and trace form (dim " +
                         std::to_string(oracle.dim()) + ") disagree");
    }
    if (!is_two_sided_ideal(*alg, radical)) return fail(s, "radical is not a two-sided ideal");
    if (cert.nilpotency == 0) return fail(s, "radical is not nilpotent");
  }

  if (stop("radical")) return finish();

  HeredityChain chain;
  {
    StageResult& s = stage("heredity");
    try {
      chain = build_chain(*alg, jdec);
    } catch (const ConsistencyError& e) {
      return fail(s, e.what());
    }
    cert.chain_strict = true;
    for (const auto& ideal : chain.ideals) cert.chain_dims.push_back(ideal.dim());
    for (std::size_t i = 1; i <= chain.length(); ++i) {
      LayerCertificate layer;
      layer.layer = i - 1;
      layer.rep = jdec.reps[i - 1];
      layer.size = jdec.classes[i - 1].size();
      layer.gamma = local[i - 1].gamma.size();
      layer.generation = check_generation(*alg, jdec, chain, i);
      RadicalWitness w{};
      layer.radical_square = check_radical_square(*alg, chain, i, radical, &w);
      if (!layer.radical_square) layer.radical_witness = w;
      layer.projectivity = check_projectivity(*alg, chain, i, local);
      cert.layers.push_back(std::move(layer));
    }
    for (const auto& layer : cert.layers) {
      const std::string where = "layer " + std::to_string(layer.layer);
      if (!layer.generation) return fail(s, where + ": not generated by its idempotent", {c.name(layer.rep)});
      if (!layer.radical_square) {
        const auto& w = *layer.radical_witness;
        return fail(s, where + ": s·u·t outside the previous ideal for u = " +
                           format_element(c, radical.basis_rows()[w[1]]),
                    {c.name(w[0]), c.name(w[2])});
      }
      if (!layer.projectivity.ok()) {
        return fail(s, where + ": left ideals of ε do not decompose the quotient",
                    names(c, layer.projectivity.idempotents));
      }
    }
  }

  if (stop("heredity")) return finish();

  {
    StageResult& s = stage("modules");
    for (auto& layer : cert.layers) {
      layer.q_dim = q_module(*alg, jdec, local, layer.layer).dim;
      layer.q_identity = local[layer.layer].epsilon.size() * layer.q_dim == layer.size;
    }
    for (const auto& layer : cert.layers) {
      if (!layer.q_identity) {
        return fail(s, "layer " + std::to_string(layer.layer) + ": |ε|·dim Q = " +
                           std::to_string(local[layer.layer].epsilon.size() * layer.q_dim) + " but |S_i| = " +
                           std::to_string(layer.size),
                    {c.name(layer.rep)});
      }
    }
  }

  cert.complete = true;
  return finish();
}

}  // namespace qhcat
