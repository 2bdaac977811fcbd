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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "qhcat/errors.hpp"
#include "qhcat/generators.hpp"
#include "qhcat/heredity.hpp"
#include "qhcat/modrep.hpp"
#include "report.hpp"

using namespace qhcat;

namespace {

constexpr double kRadicalBudgetSeconds = 60.0;
constexpr std::size_t kEnumerationMaxDim = 6;
constexpr int kMaxCatalanN = 4;
constexpr int kMaxBrauerN = 4;
constexpr int kMaxPartitionN = 3;

struct Instance {
  std::string spec;
  CategoryWithCocycle cc;
  CategoryAlgebra alg;
  JClassDecomposition jdec;
  LocalData local;
  Subspace radical;
  StandardFamily family;
};

Instance build(const std::string& spec, const GreenOptions& green = {}) {
  CategoryWithCocycle cc = builtin(spec);
  CategoryAlgebra alg(cc.category, cc.cocycle);
  JClassDecomposition jdec = j_decompose(cc.category, green);
  LocalData local = local_data(cc.category, jdec);
  Subspace radical = radical_trace_form(alg);
  StandardFamily family = standard_modules(alg, jdec, local, radical);
  return {spec, std::move(cc), std::move(alg), std::move(jdec), std::move(local), std::move(radical),
          std::move(family)};
}

class Suite {
 public:
  void run(int number, const std::string& title, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    if (!ok) ++failures_;
    std::printf("%s %2d %s", ok ? "PASS" : "FAIL", number, title.c_str());
    if (!detail.str().empty()) std::printf(" [%s]", detail.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::vector<std::pair<std::size_t, std::size_t>> dim_pairs(const StandardFamily& fam) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < fam.size(); ++a) out.emplace_back(fam.delta[a].dim, fam.simple[a].dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  const std::vector<std::string> bundled = bundled_examples();
  std::vector<Instance> instances;
  std::map<std::string, const Instance*> by_spec;
  Suite suite;

  suite.run(1, "radical: corner criterion equals trace form on every bundled example", [&](std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& spec : bundled) {
      CategoryWithCocycle cc = builtin(spec);
      CategoryAlgebra alg(cc.category, cc.cocycle);
      JClassDecomposition jdec = j_decompose(cc.category);
      LocalData local = local_data(cc.category, jdec);
      if (radical_corner_criterion(alg, jdec, local) != radical_trace_form(alg)) {
        out << spec << " disagrees; ";
        ok = false;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << bundled.size() << " examples in " << secs << " s, budget " << kRadicalBudgetSeconds << " s";
    return ok && secs <= kRadicalBudgetSeconds;
  });

  for (const auto& spec : bundled) instances.push_back(build(spec));
  for (const auto& inst : instances) by_spec[inst.spec] = &inst;

  suite.run(2, "certify passes on every bundled example, TL_3(1) with nonzero radical", [&](std::ostream& out) {
    bool ok = true;
    for (const auto& inst : instances) {
      HeredityCertificate cert = certify(inst.cc.category, inst.cc.cocycle);
      bool layers = true;
      for (const auto& l : cert.layers) layers = layers && l.ok();
      if (!cert.passed || !cert.complete || !layers) {
        out << inst.spec << " fails; ";
        ok = false;
      }
    }
    const Instance& tl = *by_spec.at("builtin:tl:3:1");
    out << "TL_3(1) radical dim " << tl.radical.dim();
    return ok && tl.radical.dim() > 0;
  });

  suite.run(3, "negative control: non-split monoid and zero loop value", [&](std::ostream& out) {
    FiniteCategory n3 = nilpotent_monoid();
    HeredityCertificate cert = certify(n3, trivial_cocycle(n3));
    const StageResult* f = cert.first_failure();
    bool ok = !cert.passed && f && f->name == "split" && f->witness == std::vector<std::string>{"x"};
    if (f) out << "n3 stops at " << f->name << " with witness " << (f->witness.empty() ? "-" : f->witness[0]);
    auto rejects = [](const std::function<void()>& make) {
      try {
        make();
      } catch (const ZeroCocycleValue&) {
        return true;
      }
      return false;
    };
    const bool zero = rejects([] { temperley_lieb(3, Rat(0)); }) && rejects([] { brauer(2, Rat(0)); }) &&
                      rejects([] { partition_category(1, Rat(0)); });
    out << "; delta 0 rejected: " << (zero ? "yes" : "no");
    return ok && zero;
  });

  suite.run(4, "layer ledger dim J_i/J_{i-1} = |eps| sum n dim Delta on every layer", [&](std::ostream& out) {
    bool ok = true;
    std::size_t layers = 0;
    for (const auto& inst : instances) {
      HeredityChain chain = build_chain(inst.alg, inst.jdec);
      for (const auto& row : check_lemma44(inst.alg, inst.jdec, inst.local, inst.family, chain)) {
        ++layers;
        if (!row.ok()) {
          out << inst.spec << " layer " << row.layer << ": " << row.quotient_dim << " vs " << row.predicted_dim
              << "; ";
          ok = false;
        }
      }
    }
    out << layers << " layers";
    return ok;
  });

  suite.run(5, "T_2 gold values", [&](std::ostream& out) {
    const Instance& t2 = *by_spec.at("builtin:t:2");
    const StandardFamily& fam = t2.family;
    const FiniteCategory& c = t2.cc.category;
    bool ok = t2.jdec.size() == 2 && fam.size() == 3;
    std::vector<std::size_t> d, s;
    for (std::size_t a = 0; a < fam.size(); ++a) {
      d.push_back(fam.delta[a].dim);
      s.push_back(fam.simple[a].dim);
    }
    ok = ok && d == std::vector<std::size_t>{2, 1, 1} && s == std::vector<std::size_t>{1, 1, 1};
    Vec gen(4);
    gen[*c.find_morphism("f11")] = 1;
    gen[*c.find_morphism("f22")] = -1;
    ok = ok && t2.radical == Subspace::span(4, {gen});
    // Constants layer is layer 0; the sign simple is the one where the swap acts by -1.
    std::size_t konst = kUndefined, sign = kUndefined;
    const MorphismId swap = *c.find_morphism("f21");
    for (std::size_t a = 0; a < fam.size(); ++a) {
      if (fam.lambda[a].layer == 0) konst = a;
      else if (fam.simple[a].action[swap](0, 0) == -1) sign = a;
    }
    ok = ok && konst != kUndefined && sign != kUndefined;
    if (ok) {
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = 0; b < fam.size(); ++b) {
          const std::size_t want = a == b ? 1 : (a == konst && b == sign ? 1 : 0);
          ok = ok && fam.decomposition[a][b] == want;
        }
    }
    out << "Delta dims " << d[0] << "," << d[1] << "," << d[2] << "; radical " << t2.radical.dim() << " = "
        << format_element(c, t2.radical.basis_rows().at(0));
    return ok;
  });

  suite.run(6, "dimension counts and sum dim D dim P = dim A", [&](std::ostream& out) {
    bool ok = true;
    for (int n = 1; n <= kMaxCatalanN; ++n)
      ok = ok && temperley_lieb(n, Rat(1)).category.num_morphisms() == oracle::catalan(n);
    for (int n = 1; n <= kMaxBrauerN; ++n)
      ok = ok && brauer(n, Rat(1)).category.num_morphisms() == oracle::double_factorial_odd(n);
    for (int n = 1; n <= kMaxPartitionN; ++n)
      ok = ok && partition_category(n, Rat(1)).category.num_morphisms() == oracle::bell(2 * n);
    if (!ok) out << "diagram count mismatch; ";
    for (const auto& inst : instances) {
      Rat total = 0;
      for (std::size_t a = 0; a < inst.family.size(); ++a)
        total += Rat(inst.family.simple[a].dim * inst.family.covers[a].module.dim) / Rat(inst.family.end_dim[a]);
      if (total != Rat(inst.alg.dim())) {
        out << inst.spec << " sums to " << to_string(total) << "; ";
        ok = false;
      }
    }
    out << instances.size() << " examples";
    return ok;
  });

  suite.run(7, "standard module axioms on T_2, T_3, TL_3(1), TL_3(2), B_3(1)", [&](std::ostream& out) {
    bool ok = true;
    for (const char* spec : {"builtin:t:2", "builtin:t:3", "builtin:tl:3:1", "builtin:tl:3:2", "builtin:brauer:3:1"}) {
      const Instance& inst = *by_spec.at(spec);
      AxiomReport r = verify_standard_axioms(inst.alg, inst.jdec, inst.family, inst.radical);
      if (!r.ok()) {
        out << spec << " fails; ";
        ok = false;
      }
    }
    return ok;
  });

  suite.run(8, "alternate layer order and representatives give the same answers", [&](std::ostream& out) {
    const GreenOptions alt{TieBreak::kGreatestFirst, RepChoice::kGreatestIdempotent};
    bool ok = true;
    std::size_t reordered = 0;
    for (const auto& inst : instances) {
      CertifyOptions opts;
      opts.green = alt;
      HeredityCertificate cert = certify(inst.cc.category, inst.cc.cocycle, opts);
      Instance other = build(inst.spec, alt);
      if (other.jdec.reps != inst.jdec.reps) ++reordered;
      bool independent = true;
      for (std::size_t i = 0; i < inst.jdec.size(); ++i)
        independent = independent && idempotent_independence_check(inst.alg, inst.jdec, i);
      if (!cert.passed || dim_pairs(other.family) != dim_pairs(inst.family) || !independent) {
        out << inst.spec << " differs; ";
        ok = false;
      }
    }
    out << reordered << " examples with different representatives";
    return ok && reordered > 0;
  });

  suite.run(9, "composition multiplicities agree with submodule enumeration (dim <= 6)", [&](std::ostream& out) {
    bool ok = true;
    std::size_t modules = 0;
    for (const auto& inst : instances) {
      if (inst.alg.dim() > kEnumerationMaxDim) continue;
      std::vector<LeftModule> ms = inst.family.delta;
      ms.push_back(regular_module(inst.alg));
      for (const auto& p : inst.family.covers) ms.push_back(p.module);
      for (const auto& m : ms) {
        ++modules;
        auto brute = oracle::composition_by_enumeration(inst.alg, m, inst.family, inst.radical);
        if (!brute || *brute != composition_factors(m, inst.family)) {
          out << inst.spec << " module of dim " << m.dim << " disagrees; ";
          ok = false;
        }
      }
    }
    out << modules << " modules";
    return ok;
  });

  suite.run(10, "two runs of every command give byte-identical JSON", [&](std::ostream& out) {
    bool ok = true;
    std::size_t runs = 0;
    cli::RunOptions opts;
    for (const char* cmd : {"validate", "analyze", "certify", "standard"})
      for (const auto& spec : bundled) {
        const std::string a = cli::run_command(cmd, spec, opts).report.dump(2);
        const std::string b = cli::run_command(cmd, spec, opts).report.dump(2);
        ++runs;
        if (a != b) {
          out << cmd << " " << spec << " differs; ";
          ok = false;
        }
      }
    out << runs << " command pairs";
    return ok;
  });

  return suite.failures();
}
