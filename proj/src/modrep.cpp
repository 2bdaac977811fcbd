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

#include "qhcat/modrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qhcat/errors.hpp"
#include "qhcat/poly.hpp"

namespace qhcat {

namespace {

using Rng = std::mt19937_64;
using ApplyFn = std::function<Vec(MorphismId, const Vec&)>;

LeftModule build_subquotient(std::size_t num_morphisms, const ApplyFn& apply, const Subspace& upper,
                             const Subspace& lower) {
  std::vector<Vec> reduced;
  for (const auto& u : upper.basis_rows()) reduced.push_back(lower.reduce(u));
  const Subspace reps = Subspace::span(upper.ambient_dim(), reduced);
  if (upper.dim() != lower.dim() + reps.dim()) throw InputError("lower subspace is not contained in upper");
  LeftModule out;
  out.dim = reps.dim();
  out.action.assign(num_morphisms, Mat(out.dim, out.dim));
  for (MorphismId s = 0; s < num_morphisms; ++s) {
    for (std::size_t k = 0; k < out.dim; ++k) {
      Vec image = apply(s, reps.basis_rows()[k]);
      if (!upper.contains(image)) throw InputError("subspace is not invariant under the action");
      image = lower.reduce(std::move(image));
      const Vec coords = reps.coordinates(image);
      for (std::size_t r = 0; r < out.dim; ++r) out.action[s](r, k) = coords[r];
    }
  }
  return out;
}

ApplyFn module_apply(const LeftModule& m) {
  return [&m](MorphismId s, const Vec& v) { return m.action[s].apply(v); };
}

ApplyFn algebra_apply(const CategoryAlgebra& alg) {
  return [&alg](MorphismId s, const Vec& v) { return alg.left_mul(s, v); };
}

Rat trace(const Mat& a) {
  Rat t = 0;
  for (std::size_t k = 0; k < a.rows(); ++k) t += a(k, k);
  return t;
}

Rat trace_product(const Mat& a, const Mat& b) {
  Rat t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

Mat combine(const std::vector<Mat>& basis, const std::vector<Rat>& coeffs) {
  Mat out(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(coeffs[k]) != 0) out += basis[k] * coeffs[k];
  return out;
}

// Candidate coefficient vectors over a basis of size n: unit vectors, then
// adjacent pairs, then seeded random combinations.
class Candidates {
 public:
  Candidates(std::size_t n, Rng& rng, int spread) : n_(n), rng_(rng), dist_(-spread, spread) {}

  std::vector<Rat> next() {
    std::vector<Rat> c(n_);
    if (step_ < n_) {
      c[step_] = 1;
    } else if (n_ > 1 && step_ < 2 * n_ - 1) {
      const std::size_t k = step_ - n_;
      c[k] = 1;
      c[k + 1] = 2;
    } else {
      for (auto& x : c) x = dist_(rng_);
    }
    ++step_;
    return c;
  }

 private:
  std::size_t n_;
  std::size_t step_ = 0;
  Rng& rng_;
  std::uniform_int_distribution<int> dist_;
};

struct Splitting {
  std::vector<Rat> coeffs;
  Mat op;
  Poly a;  // a, b coprime with a·b = min_poly(op)
  Poly b;
};

// Dimension of E / J(E) for a matrix algebra E given by a basis; J(E) is the
// radical of the trace form, which is exact in characteristic zero.
std::size_t semisimple_dim(const std::vector<Mat>& basis) {
  const std::size_t n = basis.size();
  Mat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gram(i, j) = gram(j, i) = trace_product(basis[i], basis[j]);
  return n - nullspace(gram).dim();
}

// nullopt when E is certified local.
std::optional<Splitting> find_splitting(const std::vector<Mat>& basis, const SplitConfig& cfg, Rng& rng,
                                        const std::string& what) {
  if (basis.size() <= 1) return std::nullopt;
  const std::size_t top = semisimple_dim(basis);
  if (top == 1) return std::nullopt;
  Candidates candidates(basis.size(), rng, 9);
  int skipped = 0;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    std::vector<Rat> c = candidates.next();
    Mat op = combine(basis, c);
    Poly p = min_poly(op);
    if (p.degree() > cfg.max_min_poly_degree) {
      ++skipped;
      continue;
    }
    std::vector<Factor> factors = factor_rational(p);
    if (factors.size() >= 2) {
      Poly a = pow(factors.front().poly, factors.front().multiplicity);
      Poly b = divmod(p, a).first;
      return Splitting{std::move(c), std::move(op), std::move(a), std::move(b)};
    }
    if (factors.size() == 1 && factors.front().poly.degree() == static_cast<int>(top)) return std::nullopt;
  }
  throw InstanceTooLarge("could not split or certify " + what + " within " + std::to_string(cfg.max_iterations) +
                         " probes (" + std::to_string(skipped) + " exceeded minimal-polynomial degree " +
                         std::to_string(cfg.max_min_poly_degree) + ")");
}

void split_module(const CategoryAlgebra& alg, const LeftModule& m, const SplitConfig& cfg, Rng& rng,
                  std::vector<LeftModule>& out) {
  if (m.dim <= 1) {
    out.push_back(m);
    return;
  }
  const std::vector<Mat> ends = endomorphism_basis(alg, m);
  auto split = find_splitting(ends, cfg, rng, "a module endomorphism ring");
  if (!split) {
    out.push_back(m);
    return;
  }
  const Subspace k1 = nullspace(split->a.eval(split->op));
  const Subspace k2 = nullspace(split->b.eval(split->op));
  if (k1.dim() + k2.dim() != m.dim) throw ConsistencyError("primary decomposition does not add up");
  split_module(alg, submodule(m, k1), cfg, rng, out);
  split_module(alg, submodule(m, k2), cfg, rng, out);
}

// g·A·g together with the left-multiplication matrices of its basis.
struct CornerRep {
  Subspace space;
  std::vector<Mat> left;
};

CornerRep corner_rep(const CategoryAlgebra& alg, const Vec& g) {
  std::vector<Vec> span;
  for (MorphismId s = 0; s < alg.dim(); ++s) {
    Vec gs = alg.right_mul(g, s);
    if (is_zero(gs)) continue;
    span.push_back(alg.multiply(gs, g));
  }
  CornerRep rep{Subspace::span(alg.dim(), span), {}};
  const std::size_t d = rep.space.dim();
  for (const auto& x : rep.space.basis_rows()) {
    Mat op(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec coords = rep.space.coordinates(alg.multiply(x, rep.space.basis_rows()[k]));
      for (std::size_t r = 0; r < d; ++r) op(r, k) = coords[r];
    }
    rep.left.push_back(std::move(op));
  }
  return rep;
}

void split_idempotent(const CategoryAlgebra& alg, const Vec& g, const SplitConfig& cfg, Rng& rng,
                      std::vector<Vec>& out) {
  const CornerRep rep = corner_rep(alg, g);
  auto split = find_splitting(rep.left, cfg, rng, "a corner algebra");
  if (!split) {
    out.push_back(g);
    return;
  }
  const Subspace k1 = nullspace(split->a.eval(split->op));
  const Subspace k2 = nullspace(split->b.eval(split->op));
  const std::size_t d = rep.space.dim();
  if (k1.dim() + k2.dim() != d) throw ConsistencyError("corner primary decomposition does not add up");
  Mat cols(d, d);
  std::size_t c = 0;
  for (const Subspace* k : {&k1, &k2})
    for (const auto& v : k->basis_rows()) {
      for (std::size_t r = 0; r < d; ++r) cols(r, c) = v[r];
      ++c;
    }
  const auto x = solve(cols, rep.space.coordinates(g));
  if (!x) throw ConsistencyError("unit of the corner is outside the primary decomposition");
  Vec f1(alg.dim());
  for (std::size_t j = 0; j < k1.dim(); ++j) {
    Vec piece(d);
    for (std::size_t r = 0; r < d; ++r) piece[r] = k1.basis_rows()[j][r] * (*x)[j];
    for (std::size_t r = 0; r < d; ++r)
      if (sgn(piece[r]) != 0)
        for (std::size_t t = 0; t < alg.dim(); ++t) f1[t] += piece[r] * rep.space.basis_rows()[r][t];
  }
  Vec f2(alg.dim());
  for (std::size_t t = 0; t < alg.dim(); ++t) f2[t] = g[t] - f1[t];
  if (is_zero(f1) || is_zero(f2) || alg.multiply(f1, f1) != f1 || alg.multiply(f1, f2) != Vec(alg.dim())) {
    throw ConsistencyError("corner splitting did not produce orthogonal idempotents");
  }
  split_idempotent(alg, f1, cfg, rng, out);
  split_idempotent(alg, f2, cfg, rng, out);
}

Subspace left_span_times(const CategoryAlgebra& alg, const MorphismSet& set, const Vec& f) {
  std::vector<Vec> rows;
  for (MorphismId s : set) rows.push_back(alg.left_mul(s, f));
  return Subspace::span(alg.dim(), rows);
}

std::optional<std::size_t> match_delta(const CategoryAlgebra& alg, const StandardFamily& family, std::size_t layer,
                                       const LeftModule& m, const SplitConfig& cfg) {
  for (std::size_t a = 0; a < family.size(); ++a)
    if (family.lambda[a].layer == layer && isomorphic(alg, family.delta[a], m, cfg)) return a;
  return std::nullopt;
}

ProjectiveCover make_cover(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const StandardFamily& family,
                           std::size_t layer, const Vec& f, const SplitConfig& cfg) {
  ProjectiveCover cover;
  cover.idempotent = f;
  cover.span = left_ideal_span(alg, {f});
  cover.module = left_ideal_module(alg, cover.span);
  Subspace prev(alg.dim());
  for (std::size_t j = 0; j <= layer; ++j) {
    Subspace cur = left_span_times(alg, jdec.up_to(static_cast<long>(j)), f);
    if (cur.dim() == prev.dim()) continue;
    FiltrationStep step;
    step.layer = j;
    step.dim = cur.dim() - prev.dim();
    const LeftModule quotient = algebra_subquotient(alg, cur, prev);
    for (const auto& part : endo_split(alg, quotient, cfg)) {
      auto b = match_delta(alg, family, j, part, cfg);
      step.summands.push_back(b ? *b : kUndefined);
    }
    cover.steps.push_back(std::move(step));
    prev = std::move(cur);
  }
  return cover;
}

// Covers for every weight of the layer, in family order.
std::vector<ProjectiveCover> layer_covers(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                          const LocalData& local, const StandardFamily& family, std::size_t layer,
                                          const SplitConfig& cfg) {
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < family.size(); ++a)
    if (family.lambda[a].layer == layer) members.push_back(a);
  std::vector<std::optional<ProjectiveCover>> found(members.size());
  const Vec g = alg.to_vec(idempotent_lift(alg, local.at(layer).rep));
  const MorphismSet lower = jdec.up_to(static_cast<long>(layer) - 1);
  for (const Vec& f : primitive_idempotents(alg, g, cfg)) {
    const Subspace whole = left_ideal_span(alg, {f});
    const Subspace below = left_span_times(alg, lower, f);
    if (whole.dim() == below.dim()) continue;
    const LeftModule top = algebra_subquotient(alg, whole, below);
    auto a = match_delta(alg, family, layer, top, cfg);
    if (!a) throw ConsistencyError("top of a projective in layer " + std::to_string(layer) + " matches no Δ");
    const std::size_t pos = std::find(members.begin(), members.end(), *a) - members.begin();
    if (!found[pos]) found[pos] = make_cover(alg, jdec, family, layer, f, cfg);
  }
  std::vector<ProjectiveCover> out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!found[k]) {
      throw ConsistencyError("no primitive idempotent covers Δ at layer " + std::to_string(layer) + ", r = " +
                             std::to_string(family.lambda[members[k]].r));
    }
    out.push_back(std::move(*found[k]));
  }
  return out;
}

}  // namespace

Mat LeftModule::act(std::span<const Rat> element) const {
  Mat out(dim, dim);
  for (std::size_t s = 0; s < element.size(); ++s)
    if (sgn(element[s]) != 0) out += action[s] * element[s];
  return out;
}

LeftModule regular_module(const CategoryAlgebra& alg) {
  const std::size_t m = alg.dim();
  LeftModule out;
  out.dim = m;
  out.action.assign(m, Mat(m, m));
  for (MorphismId s = 0; s < m; ++s)
    for (MorphismId t = 0; t < m; ++t)
      if (alg.product(s, t) != kUndefined) out.action[s](alg.product(s, t), t) = alg.coefficient(s, t);
  return out;
}

LeftModule left_ideal_module(const CategoryAlgebra& alg, const Subspace& sub) {
  return build_subquotient(alg.dim(), algebra_apply(alg), sub, Subspace(alg.dim()));
}

LeftModule algebra_subquotient(const CategoryAlgebra& alg, const Subspace& upper, const Subspace& lower) {
  return build_subquotient(alg.dim(), algebra_apply(alg), upper, lower);
}

LeftModule submodule(const LeftModule& m, const Subspace& sub) {
  return build_subquotient(m.action.size(), module_apply(m), sub, Subspace(m.dim));
}

LeftModule quotient_module(const LeftModule& m, const Subspace& sub) {
  return build_subquotient(m.action.size(), module_apply(m), Subspace::full(m.dim), sub);
}

LeftModule subquotient(const LeftModule& m, const Subspace& upper, const Subspace& lower) {
  return build_subquotient(m.action.size(), module_apply(m), upper, lower);
}

bool is_submodule(const LeftModule& m, const Subspace& sub) {
  for (const auto& a : m.action)
    for (const auto& v : sub.basis_rows())
      if (!sub.contains(a.apply(v))) return false;
  return true;
}

bool check_module_axioms(const CategoryAlgebra& alg, const LeftModule& m) {
  const std::size_t n = alg.dim();
  if (m.action.size() != n) return false;
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim) return false;
  for (MorphismId t = 0; t < n; ++t) {
    for (MorphismId s = 0; s < n; ++s) {
      const Mat lhs = m.action[t] * m.action[s];
      const MorphismId ts = alg.product(t, s);
      if (ts == kUndefined ? !lhs.is_zero() : lhs != m.action[ts] * alg.coefficient(t, s)) return false;
    }
  }
  return m.act(alg.to_vec(alg.unit())) == Mat::identity(m.dim);
}

Subspace generated_submodule(const CategoryAlgebra& alg, const LeftModule& m, const std::vector<Vec>& vectors) {
  Subspace out(m.dim);
  std::vector<Vec> queue;
  for (const auto& v : vectors)
    if (out.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (MorphismId g : alg.generators()) {
      Vec w = m.action[g].apply(v);
      if (out.insert(w)) queue.push_back(std::move(w));
    }
  }
  return out;
}

Subspace module_radical(const LeftModule& m, const Subspace& radical) {
  Subspace out(m.dim);
  for (const auto& r : radical.basis_rows()) {
    const Mat a = m.act(r);
    for (std::size_t c = 0; c < m.dim && out.dim() < m.dim; ++c) out.insert(a.column(c));
  }
  return out;
}

LeftModule head(const LeftModule& m, const Subspace& radical) {
  return quotient_module(m, module_radical(m, radical));
}

Subspace hom_space(const CategoryAlgebra& alg, const LeftModule& m, const LeftModule& n) {
  const std::size_t dm = m.dim, dn = n.dim, unknowns = dm * dn;
  Subspace equations(unknowns);
  for (MorphismId g : alg.generators()) {
    const Mat& a = m.action[g];
    const Mat& b = n.action[g];
    for (std::size_t i = 0; i < dn; ++i) {
      for (std::size_t j = 0; j < dm; ++j) {
        Vec row(unknowns);
        for (std::size_t k = 0; k < dm; ++k) row[i * dm + k] += a(k, j);
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + j] -= b(i, k);
        if (!is_zero(row)) equations.insert(std::move(row));
        if (equations.dim() == unknowns) return Subspace(unknowns);
      }
    }
  }
  if (equations.empty()) return Subspace::full(unknowns);
  return nullspace(equations.basis());
}

Mat hom_matrix(const LeftModule& m, const LeftModule& n, std::span<const Rat> flat) {
  Mat out(n.dim, m.dim);
  for (std::size_t i = 0; i < n.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out(i, j) = flat[i * m.dim + j];
  return out;
}

std::vector<Mat> endomorphism_basis(const CategoryAlgebra& alg, const LeftModule& m) {
  std::vector<Mat> out;
  const Subspace homs = hom_space(alg, m, m);
  for (const auto& row : homs.basis_rows()) out.push_back(hom_matrix(m, m, row));
  return out;
}

bool isomorphic(const CategoryAlgebra& alg, const LeftModule& m, const LeftModule& n, const SplitConfig& cfg) {
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  for (std::size_t s = 0; s < m.action.size(); ++s)
    if (trace(m.action[s]) != trace(n.action[s])) return false;
  std::vector<Mat> homs;
  const Subspace space = hom_space(alg, m, n);
  for (const auto& row : space.basis_rows()) homs.push_back(hom_matrix(m, n, row));
  if (homs.empty()) return false;
  Rng rng(cfg.seed);
  Candidates candidates(homs.size(), rng, 1000);
  for (int iter = 0; iter < cfg.max_iterations; ++iter)
    if (sgn(determinant(combine(homs, candidates.next()))) != 0) return true;
  for (std::size_t i = 0; i < homs.size(); ++i)
    for (std::size_t j = i + 1; j < homs.size(); ++j)
      for (int c : {-1, 2, -2, 3})
        if (sgn(determinant(homs[i] + homs[j] * Rat(c))) != 0) return true;
  return false;
}

bool is_simple(const CategoryAlgebra& alg, const LeftModule& m, const Subspace& radical, const SplitConfig& cfg) {
  if (m.dim == 0) return false;
  if (!module_radical(m, radical).empty()) return false;
  Rng rng(cfg.seed);
  return !find_splitting(endomorphism_basis(alg, m), cfg, rng, "an endomorphism ring").has_value();
}

std::vector<LeftModule> endo_split(const CategoryAlgebra& alg, const LeftModule& m, const SplitConfig& cfg) {
  std::vector<LeftModule> out;
  if (m.dim == 0) return out;
  Rng rng(cfg.seed);
  split_module(alg, m, cfg, rng, out);
  return out;
}

std::vector<Vec> primitive_idempotents(const CategoryAlgebra& alg, const Vec& g, const SplitConfig& cfg) {
  if (alg.multiply(g, g) != g) throw std::invalid_argument("primitive_idempotents: not an idempotent");
  std::vector<Vec> out;
  if (is_zero(g)) return out;
  Rng rng(cfg.seed);
  split_idempotent(alg, g, cfg, rng, out);
  return out;
}

LeftModule q_module_at(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t layer,
                       MorphismId e) {
  const FiniteCategory& c = alg.category();
  if (!c.is_endomorphism(e) || !c.is_idempotent(e) || jdec.layer_of.at(e) != layer) {
    throw std::invalid_argument("q_module_at: '" + c.name(e) + "' is not an idempotent of layer " +
                                std::to_string(layer));
  }
  const Vec lift = alg.to_vec(idempotent_lift(alg, e));
  const Subspace whole = left_ideal_span(alg, {lift});
  std::vector<Vec> jgens;
  for (MorphismId s : c.hom_set(c.morphism(e).dom, c.morphism(e).dom)) {
    const MorphismId ese = c.comp(e, c.comp(s, e));
    if (jdec.layer_of[ese] < layer) {
      Vec v(alg.dim());
      v[ese] = 1;
      jgens.push_back(std::move(v));
    }
  }
  const Subspace below = jgens.empty() ? Subspace(alg.dim()) : left_ideal_span(alg, jgens);
  return algebra_subquotient(alg, whole, below);
}

LeftModule q_module(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                    std::size_t layer) {
  return q_module_at(alg, jdec, layer, local.at(layer).rep);
}

std::optional<std::size_t> StandardFamily::index_of(Weight w) const {
  for (std::size_t a = 0; a < lambda.size(); ++a)
    if (lambda[a] == w) return a;
  return std::nullopt;
}

bool weight_less(const JClassDecomposition& jdec, Weight a, Weight b) { return jdec.less_j(b.layer, a.layer); }

std::vector<Rat> gamma_character(const LeftModule& m, const MorphismSet& gamma) {
  std::vector<Rat> out;
  for (MorphismId g : gamma) out.push_back(trace(m.action[g]));
  return out;
}

StandardFamily standard_modules(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                                const Subspace& radical, const SplitConfig& cfg) {
  StandardFamily fam;
  for (std::size_t i = 0; i < jdec.size(); ++i) {
    LeftModule q = q_module(alg, jdec, local, i);
    std::vector<LeftModule> classes;
    std::vector<std::size_t> counts;
    for (auto& part : endo_split(alg, q, cfg)) {
      std::size_t k = 0;
      while (k < classes.size() && !isomorphic(alg, classes[k], part, cfg)) ++k;
      if (k == classes.size()) {
        classes.push_back(std::move(part));
        counts.push_back(0);
      }
      ++counts[k];
    }
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<Rat>> chars;
    for (const auto& d : classes) chars.push_back(gamma_character(d, local[i].gamma));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (classes[x].dim != classes[y].dim) return classes[x].dim < classes[y].dim;
      return chars[x] < chars[y];
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
      LeftModule& delta = classes[order[r]];
      LeftModule d = head(delta, radical);
      if (!is_simple(alg, d, radical, cfg)) {
        throw ConsistencyError("head of Δ(" + std::to_string(i) + "," + std::to_string(r) + ") is not simple");
      }
      fam.lambda.push_back({i, r});
      fam.end_dim.push_back(endomorphism_basis(alg, d).size());
      fam.simple.push_back(std::move(d));
      fam.delta.push_back(std::move(delta));
      fam.n.push_back(counts[order[r]]);
    }
    fam.l.push_back(classes.size());
    fam.q.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < jdec.size(); ++i)
    for (auto& cover : layer_covers(alg, jdec, local, fam, i, cfg)) fam.covers.push_back(std::move(cover));
  for (std::size_t a = 0; a < fam.size(); ++a) fam.decomposition.push_back(composition_factors(fam.delta[a], fam));
  return fam;
}

ProjectiveCover projective_cover(const CategoryAlgebra& alg, const JClassDecomposition& jdec, const LocalData& local,
                                 const StandardFamily& family, Weight w, const SplitConfig& cfg) {
  auto idx = family.index_of(w);
  if (!idx) throw std::invalid_argument("projective_cover: unknown weight");
  auto covers = layer_covers(alg, jdec, local, family, w.layer, cfg);
  return std::move(covers.at(w.r));
}

std::size_t composition_multiplicity(const LeftModule& m, const StandardFamily& family, std::size_t idx) {
  if (m.dim == 0) return 0;
  const std::size_t r = rank(m.act(family.covers.at(idx).idempotent));
  const std::size_t e = family.end_dim.at(idx);
  if (r % e != 0) throw ConsistencyError("dim Hom(P, M) is not a multiple of dim End(D)");
  return r / e;
}

std::vector<std::size_t> composition_factors(const LeftModule& m, const StandardFamily& family) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < family.size(); ++b) out.push_back(composition_multiplicity(m, family, b));
  return out;
}

AxiomReport verify_standard_axioms(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                   const StandardFamily& family, const Subspace& radical, const SplitConfig& cfg) {
  AxiomReport rep;
  auto label = [&](std::size_t a) {
    return "(" + std::to_string(family.lambda[a].layer) + "," + std::to_string(family.lambda[a].r) + ")";
  };
  for (std::size_t a = 0; a < family.size(); ++a) {
    const Weight w = family.lambda[a];
    const LeftModule& delta = family.delta[a];

    const LeftModule hd = head(delta, radical);
    rep.head_simple.expect(is_simple(alg, hd, radical, cfg), "head of Δ" + label(a) + " is not simple");
    rep.head_simple.expect(isomorphic(alg, hd, family.simple[a], cfg), "head of Δ" + label(a) + " is not D" + label(a));
    std::vector<std::size_t> unit(family.size(), 0);
    unit[a] = 1;
    rep.head_simple.expect(composition_factors(hd, family) == unit,
                           "head of Δ" + label(a) + " has composition factors other than D" + label(a));

    const LeftModule rad = submodule(delta, module_radical(delta, radical));
    const auto factors = composition_factors(rad, family);
    std::size_t total = 0;
    for (std::size_t b = 0; b < family.size(); ++b) {
      total += factors[b] * family.simple[b].dim;
      if (factors[b] != 0) {
        rep.radical_factors.expect(weight_less(jdec, family.lambda[b], w),
                                   "D" + label(b) + " occurs in Rad Δ" + label(a) + " out of order");
      }
    }
    rep.radical_factors.expect(total == rad.dim, "composition factors of Rad Δ" + label(a) + " miss dimensions");
    for (std::size_t j = 0; j < jdec.size(); ++j) {
      if (j == w.layer || jdec.less_j(w.layer, j)) continue;
      bool zero = true;
      for (MorphismId s : jdec.classes[j]) zero = zero && delta.action[s].is_zero();
      rep.radical_factors.expect(zero, "layer " + std::to_string(j) + " does not annihilate Δ" + label(a));
    }

    const ProjectiveCover& cover = family.covers[a];
    std::size_t step_total = 0;
    for (const auto& step : cover.steps) step_total += step.dim;
    rep.top_quotient.expect(step_total == cover.module.dim, "filtration of P" + label(a) + " does not exhaust it");
    rep.top_quotient.expect(!cover.steps.empty() && cover.steps.back().layer == w.layer &&
                                cover.steps.back().summands == std::vector<std::size_t>{a},
                            "top quotient of P" + label(a) + " is not Δ" + label(a));
    for (std::size_t k = 0; k + 1 < cover.steps.size(); ++k) {
      for (std::size_t b : cover.steps[k].summands) {
        rep.lower_quotients.expect(b != kUndefined && weight_less(jdec, w, family.lambda[b]),
                                   "lower quotient of P" + label(a) + " at layer " +
                                       std::to_string(cover.steps[k].layer) + " is not a later Δ");
      }
    }

    for (std::size_t b = 0; b < family.size(); ++b) {
      const std::size_t v = family.decomposition[a][b];
      if (b == a) {
        rep.unitriangular.expect(v == 1, "[Δ" + label(a) + " : D" + label(a) + "] != 1");
      } else if (v != 0) {
        rep.unitriangular.expect(weight_less(jdec, family.lambda[b], w),
                                 "[Δ" + label(a) + " : D" + label(b) + "] != 0 out of order");
      }
    }
  }
  return rep;
}

std::vector<Lemma44Layer> check_lemma44(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                        const LocalData& local, const StandardFamily& family,
                                        const HeredityChain& chain, const SplitConfig& cfg) {
  std::vector<Lemma44Layer> out;
  for (std::size_t i = 0; i < jdec.size(); ++i) {
    Lemma44Layer row;
    row.layer = i;
    const Subspace& below = chain.ideals.at(i);
    const Subspace& upper = chain.ideals.at(i + 1);
    row.quotient_dim = upper.dim() - below.dim();
    row.epsilon = local[i].epsilon.size();
    std::vector<std::size_t> predicted(family.size(), 0);
    std::size_t per_copy = 0;
    for (std::size_t a = 0; a < family.size(); ++a) {
      if (family.lambda[a].layer != i) continue;
      per_copy += family.n[a] * family.delta[a].dim;
      for (std::size_t b = 0; b < family.size(); ++b)
        predicted[b] += row.epsilon * family.n[a] * family.decomposition[a][b];
    }
    row.predicted_dim = row.epsilon * per_copy;
    const LeftModule quotient = algebra_subquotient(alg, upper, below);
    row.multiplicities_match = composition_factors(quotient, family) == predicted;
    bool summands = true;
    std::size_t dims = 0;
    for (MorphismId e : local[i].epsilon) {
      const Vec lift = alg.to_vec(idempotent_lift(alg, e));
      const Subspace image = left_ideal_span(alg, {lift}) + below;
      const LeftModule part = algebra_subquotient(alg, image, below);
      dims += part.dim;
      summands = summands && isomorphic(alg, part, family.q[i], cfg);
    }
    row.summands_match = summands && dims == row.quotient_dim;
    out.push_back(row);
  }
  return out;
}

bool idempotent_independence_check(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t layer,
                                   const SplitConfig& cfg) {
  const FiniteCategory& c = alg.category();
  const MorphismId rep = jdec.reps.at(layer);
  const LeftModule base = q_module_at(alg, jdec, layer, rep);
  for (MorphismId e : jdec.classes[layer]) {
    if (e == rep || !c.is_endomorphism(e) || !c.is_idempotent(e)) continue;
    if (!isomorphic(alg, base, q_module_at(alg, jdec, layer, e), cfg)) return false;
  }
  return true;
}

}  // namespace qhcat
