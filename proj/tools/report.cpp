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

#include "report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qhcat/category_file.hpp"
#include "qhcat/errors.hpp"
#include "qhcat/generators.hpp"
#include "qhcat/heredity.hpp"

namespace qhcat::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json stage_json(const StageResult& s) {
  Json j;
  j["name"] = s.name;
  j["passed"] = s.passed;
  if (!s.message.empty()) j["message"] = s.message;
  if (!s.witness.empty()) j["witness"] = s.witness;
  return j;
}

Json check_json(const CheckReport& r) {
  Json j;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  return j;
}

std::vector<std::string> names(const FiniteCategory& c, const MorphismSet& set) {
  std::vector<std::string> out;
  for (MorphismId s : set) out.push_back(c.name(s));
  return out;
}

CategoryWithCocycle load_input(const std::string& input) {
  if (input.rfind("builtin:", 0) == 0) return builtin(input);
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open '" + input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_category(buf.str());
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

Json certificate_json(const FiniteCategory& c, const HeredityCertificate& cert) {
  Json j;
  j["algebra_dim"] = cert.algebra_dim;
  Json rad;
  rad["dim"] = cert.radical_dim;
  rad["methods_agree"] = cert.radicals_agree;
  rad["nilpotency_index"] = cert.nilpotency;
  rad["basis"] = cert.radical_basis;
  j["radical"] = rad;
  j["chain_dims"] = cert.chain_dims;
  j["chain_strict"] = cert.chain_strict;
  Json layers = Json::array();
  for (const auto& l : cert.layers) {
    Json x;
    x["layer"] = l.layer;
    x["representative"] = c.name(l.rep);
    x["size"] = l.size;
    x["gamma"] = l.gamma;
    x["generation"] = l.generation;
    x["radical_square"] = l.radical_square;
    if (l.radical_witness) {
      const auto& w = *l.radical_witness;
      x["radical_witness"] = {{"s", c.name(w[0])}, {"u_index", w[1]}, {"t", c.name(w[2])}};
    }
    Json p;
    p["epsilon"] = names(c, l.projectivity.idempotents);
    p["summand_dims"] = l.projectivity.summand_dims;
    p["sum_dim"] = l.projectivity.sum_dim;
    p["quotient_dim"] = l.projectivity.quotient_dim;
    p["spans"] = l.projectivity.spans;
    p["direct"] = l.projectivity.direct;
    x["projectivity"] = p;
    x["q_dim"] = l.q_dim;
    x["q_identity"] = l.q_identity;
    layers.push_back(x);
  }
  j["layers"] = layers;
  return j;
}

Json analysis_json(const FiniteCategory& c, const GreenOptions& green) {
  const JClassDecomposition jdec = j_decompose(c, green);
  const LocalData local = local_data(c, jdec);
  Json j;
  Json classes = Json::array();
  for (std::size_t i = 0; i < jdec.size(); ++i) {
    Json x;
    x["layer"] = i;
    x["size"] = jdec.classes[i].size();
    x["representative"] = c.name(jdec.reps[i]);
    x["idempotents"] = names(c, local[i].idempotent_class);
    x["gamma"] = names(c, local[i].gamma);
    x["epsilon"] = names(c, local[i].epsilon);
    x["members"] = names(c, jdec.classes[i]);
    classes.push_back(x);
  }
  j["num_classes"] = jdec.size();
  j["classes"] = classes;
  Json hasse = Json::array();
  for (const auto& [lo, hi] : jdec.hasse()) hasse.push_back({lo, hi});
  j["hasse"] = hasse;
  std::vector<std::size_t> gamma_sizes, epsilon_sizes;
  for (const auto& l : local) {
    gamma_sizes.push_back(l.gamma.size());
    epsilon_sizes.push_back(l.epsilon.size());
  }
  j["gamma_sizes"] = gamma_sizes;
  j["epsilon_sizes"] = epsilon_sizes;
  return j;
}

// Returns false if any module-level check fails.
bool standard_json(const CategoryWithCocycle& cc, const RunOptions& opts, Json& out) {
  const SplitConfig cfg{.seed = opts.seed};
  const CategoryAlgebra alg(cc.category, cc.cocycle);
  const JClassDecomposition jdec = j_decompose(cc.category, opts.green);
  const LocalData local = local_data(cc.category, jdec);
  const Subspace radical = radical_corner_criterion(alg, jdec, local);
  const HeredityChain chain = build_chain(alg, jdec);
  const StandardFamily fam = standard_modules(alg, jdec, local, radical, cfg);

  Json weights = Json::array();
  Rat audit = 0;
  for (std::size_t a = 0; a < fam.size(); ++a) {
    Json w;
    w["layer"] = fam.lambda[a].layer;
    w["r"] = fam.lambda[a].r;
    w["delta_dim"] = fam.delta[a].dim;
    w["simple_dim"] = fam.simple[a].dim;
    w["end_dim"] = fam.end_dim[a];
    w["n"] = fam.n[a];
    w["projective_dim"] = fam.covers[a].module.dim;
    w["projective_idempotent"] = format_element(cc.category, fam.covers[a].idempotent);
    Json steps = Json::array();
    for (const auto& s : fam.covers[a].steps) {
      Json step;
      step["layer"] = s.layer;
      step["dim"] = s.dim;
      step["summands"] = s.summands;
      steps.push_back(step);
    }
    w["filtration"] = steps;
    weights.push_back(w);
    audit += Rat(fam.simple[a].dim * fam.covers[a].module.dim) / Rat(fam.end_dim[a]);
  }
  out["weights"] = weights;
  out["classes_per_layer"] = fam.l;
  out["decomposition_matrix"] = fam.decomposition;

  bool ok = true;
  Json ledger = Json::array();
  for (const auto& row : check_lemma44(alg, jdec, local, fam, chain, cfg)) {
    Json x;
    x["layer"] = row.layer;
    x["quotient_dim"] = row.quotient_dim;
    x["epsilon"] = row.epsilon;
    x["predicted_dim"] = row.predicted_dim;
    x["multiplicities_match"] = row.multiplicities_match;
    x["summands_match"] = row.summands_match;
    x["ok"] = row.ok();
    ok = ok && row.ok();
    ledger.push_back(x);
  }
  out["layer_ledger"] = ledger;

  const AxiomReport axioms = verify_standard_axioms(alg, jdec, fam, radical, cfg);
  Json ax;
  ax["head_simple"] = check_json(axioms.head_simple);
  ax["radical_factors"] = check_json(axioms.radical_factors);
  ax["top_quotient"] = check_json(axioms.top_quotient);
  ax["lower_quotients"] = check_json(axioms.lower_quotients);
  ax["unitriangular"] = check_json(axioms.unitriangular);
  ax["ok"] = axioms.ok();
  out["axioms"] = ax;
  ok = ok && axioms.ok();

  std::vector<bool> independence;
  for (std::size_t i = 0; i < jdec.size(); ++i) independence.push_back(idempotent_independence_check(alg, jdec, i, cfg));
  out["idempotent_independence"] = independence;
  for (bool b : independence) ok = ok && b;

  Json dims;
  dims["sum_dim_simple_times_projective_over_end"] = to_string(audit);
  dims["algebra_dim"] = alg.dim();
  dims["ok"] = audit == Rat(alg.dim());
  out["dimension_audit"] = dims;
  return ok && audit == Rat(alg.dim());
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_object())) return false;
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(v, indent + 2, os);
    } else if (v.is_array() && !flat(v)) {
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        render(item, indent + 4, os);
      }
    } else if (v.is_array()) {
      os << pad << it.key() << ": " << v.dump() << '\n';
    } else {
      os << pad << it.key() << ": " << scalar(v) << '\n';
    }
  }
}

}  // namespace

std::size_t default_max_dim() {
  if (const char* env = std::getenv("QHCAT_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 512;
}

RunResult run_command(const std::string& command, const std::string& input, const RunOptions& opts) {
  static const std::vector<std::string> kCommands = {"validate", "analyze", "certify", "standard"};
  static const std::vector<std::string> kStages = {"validate", "split",    "green",  "algebra",
                                                   "radical",  "heredity", "modules"};
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  Json& rep = res.report;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = command;
  rep["input"] = input;
  rep["seed"] = opts.seed;
  auto finish = [&](int code) {
    res.exit_code = code;
    rep["exit_code"] = code;
    if (opts.timings) {
      rep["timings_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return res;
  };
  auto error = [&](int code, const std::string& kind, const std::string& what) {
    rep["passed"] = false;
    rep["error"] = {{"kind", kind}, {"message", what}};
    return finish(code);
  };

  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    return error(kUsage, "usage", "unknown command '" + command + "'");
  }
  if (!opts.stop_after.empty() && std::find(kStages.begin(), kStages.end(), opts.stop_after) == kStages.end()) {
    return error(kUsage, "usage", "unknown stage '" + opts.stop_after + "'");
  }

  std::optional<CategoryWithCocycle> cc;
  try {
    cc = load_input(input);
  } catch (const ZeroCocycleValue& e) {
    rep["stages"] = Json::array({stage_json({"validate", false, e.what(), {}})});
    rep["passed"] = false;
    return finish(kMathFailure);
  } catch (const UsageError& e) {
    return error(kUsage, "usage", e.what());
  } catch (const InputError& e) {
    return error(kUsage, "input", e.what());
  }
  rep["category"] = {{"objects", cc->category.num_objects()}, {"morphisms", cc->category.num_morphisms()}};
  if (cc->category.num_morphisms() > opts.max_dim) {
    return error(kResourceBound, "instance_too_large",
                 std::to_string(cc->category.num_morphisms()) + " morphisms exceed --max-dim " +
                     std::to_string(opts.max_dim));
  }

  try {
    CertifyOptions copts;
    copts.green = opts.green;
    if (command == "validate") copts.stop_after = "validate";
    else if (command == "analyze") copts.stop_after = "green";
    if (!opts.stop_after.empty()) {
      auto pos = [&](const std::string& s) { return std::find(kStages.begin(), kStages.end(), s) - kStages.begin(); };
      if (copts.stop_after.empty() || pos(opts.stop_after) < pos(copts.stop_after)) copts.stop_after = opts.stop_after;
    }
    const HeredityCertificate cert = certify(cc->category, cc->cocycle, copts);
    Json stages = Json::array();
    for (const auto& s : cert.stages) stages.push_back(stage_json(s));
    rep["stages"] = stages;
    rep["passed"] = cert.passed;
    if (!cert.passed) return finish(kMathFailure);

    Json result;
    if (command == "analyze" && copts.stop_after == "green") result = analysis_json(cc->category, opts.green);
    if ((command == "certify" || command == "standard") && !cert.layers.empty()) {
      result = certificate_json(cc->category, cert);
    }
    bool ok = true;
    if (command == "standard" && cert.complete) {
      Json modules;
      ok = standard_json(*cc, opts, modules);
      result["standard"] = modules;
      if (!ok) {
        rep["stages"].back()["passed"] = false;
        rep["stages"].back()["message"] = "standard module checks failed";
      }
      rep["passed"] = ok;
    }
    if (!result.is_null()) rep["result"] = result;
    return finish(ok ? kPass : kMathFailure);
  } catch (const InstanceTooLarge& e) {
    return error(kResourceBound, "instance_too_large", e.what());
  } catch (const ConsistencyError& e) {
    return error(kMathFailure, "consistency", e.what());
  } catch (const InputError& e) {
    return error(kMathFailure, "input", e.what());
  }
}

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace qhcat::cli
