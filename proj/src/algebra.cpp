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

#include "qhcat/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qhcat {

namespace {

std::vector<MorphismId> generating_set(const FiniteCategory& c) {
  const std::size_t m = c.num_morphisms();
  std::vector<MorphismId> gens(c.identities().begin(), c.identities().end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<char> reached(m, 0);
  auto close = [&] {
    std::deque<MorphismId> queue;
    for (MorphismId s = 0; s < m; ++s)
      if (reached[s]) queue.push_back(s);
    for (MorphismId g : gens)
      if (!reached[g]) {
        reached[g] = 1;
        queue.push_back(g);
      }
    while (!queue.empty()) {
      MorphismId x = queue.front();
      queue.pop_front();
      for (MorphismId g : gens) {
        for (MorphismId y : {c.comp(g, x), c.comp(x, g)}) {
          if (y != kUndefined && !reached[y]) {
            reached[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
  };
  close();
  for (MorphismId s = 0; s < m; ++s) {
    if (reached[s]) continue;
    gens.push_back(s);
    close();
  }
  return gens;
}

}  // namespace

CategoryAlgebra::CategoryAlgebra(FiniteCategory c, Cocycle a) : category_(std::move(c)), cocycle_(std::move(a)) {
  ValidationReport cat = validate(category_);
  if (!cat.ok()) throw InputError("invalid category: " + cat.violations.front().message);
  ValidationReport coc = validate_cocycle(category_, cocycle_);
  if (!coc.ok()) throw InputError("invalid cocycle: " + coc.violations.front().message);
  const std::size_t m = dim();
  coeff_.assign(m * m, Rat(0));
  for (MorphismId t = 0; t < m; ++t)
    for (MorphismId s = 0; s < m; ++s)
      if (category_.comp(t, s) != kUndefined) coeff_[t * m + s] = cocycle_.at(t, s);
  generators_ = generating_set(category_);
}

Element CategoryAlgebra::basis(MorphismId s) const {
  category_.morphism(s);
  return {{s, Rat(1)}};
}

Element CategoryAlgebra::unit() const {
  Element u;
  for (MorphismId id : category_.identities()) u[id] = 1 / coefficient(id, id);
  return u;
}

Element CategoryAlgebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [t, a] : x) {
    for (const auto& [s, b] : y) {
      MorphismId r = product(t, s);
      if (r == kUndefined) continue;
      out[r] += a * b * coefficient(t, s);
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Vec CategoryAlgebra::to_vec(const Element& x) const {
  Vec v(dim());
  for (const auto& [s, a] : x) v.at(s) = a;
  return v;
}

Element CategoryAlgebra::from_vec(std::span<const Rat> v) const {
  Element x;
  for (MorphismId s = 0; s < v.size(); ++s)
    if (sgn(v[s]) != 0) x[s] = v[s];
  return x;
}

Vec CategoryAlgebra::multiply(std::span<const Rat> x, std::span<const Rat> y) const {
  const std::size_t m = dim();
  Vec out(m);
  for (MorphismId t = 0; t < m; ++t) {
    if (sgn(x[t]) == 0) continue;
    for (MorphismId s = 0; s < m; ++s) {
      if (sgn(y[s]) == 0) continue;
      MorphismId r = product(t, s);
      if (r != kUndefined) out[r] += x[t] * y[s] * coefficient(t, s);
    }
  }
  return out;
}

Vec CategoryAlgebra::left_mul(MorphismId t, std::span<const Rat> v) const {
  Vec out(dim());
  for (MorphismId s = 0; s < dim(); ++s) {
    if (sgn(v[s]) == 0) continue;
    MorphismId r = product(t, s);
    if (r != kUndefined) out[r] += v[s] * coefficient(t, s);
  }
  return out;
}

Vec CategoryAlgebra::right_mul(std::span<const Rat> v, MorphismId s) const {
  Vec out(dim());
  for (MorphismId t = 0; t < dim(); ++t) {
    if (sgn(v[t]) == 0) continue;
    MorphismId r = product(t, s);
    if (r != kUndefined) out[r] += v[t] * coefficient(t, s);
  }
  return out;
}

Element idempotent_lift(const CategoryAlgebra& alg, MorphismId e) {
  const FiniteCategory& c = alg.category();
  if (!c.is_endomorphism(e) || !c.is_idempotent(e)) {
    throw InputError("idempotent_lift: '" + c.name(e) + "' is not an idempotent");
  }
  return {{e, 1 / alg.coefficient(e, e)}};
}

Corner corner(const CategoryAlgebra& alg, const JClassDecomposition& jdec, std::size_t i) {
  const FiniteCategory& c = alg.category();
  Corner out;
  out.e = jdec.reps.at(i);
  const MorphismId e = out.e;
  const ObjectId x = c.morphism(e).dom;
  std::set<MorphismId> basis;
  for (MorphismId s : c.hom_set(x, x)) basis.insert(c.comp(e, c.comp(s, e)));
  out.basis.assign(basis.begin(), basis.end());
  for (MorphismId s : out.basis) {
    if (jdec.layer_of[s] == i) out.gamma_part.push_back(s);
    else if (jdec.layer_of[s] < i) out.j_part.push_back(s);
  }
  if (out.gamma_part.size() + out.j_part.size() != out.basis.size()) {
    throw ConsistencyError("corner at '" + c.name(e) + "' is not the union of its Γ and J parts");
  }
  auto in = [](const MorphismSet& set, MorphismId s) { return std::binary_search(set.begin(), set.end(), s); };
  for (MorphismId a : out.basis) {
    for (MorphismId b : out.j_part) {
      if (!in(out.j_part, c.comp(a, b)) || !in(out.j_part, c.comp(b, a))) {
        throw ConsistencyError("kJ_e is not an ideal of the corner at '" + c.name(e) + "'");
      }
    }
  }
  const Element lift = idempotent_lift(alg, e);
  for (MorphismId g : out.gamma_part) {
    for (MorphismId h : out.gamma_part) {
      if (!in(out.gamma_part, c.comp(g, h))) {
        throw ConsistencyError("k_aΓ_e is not closed under the product at '" + c.name(e) + "'");
      }
    }
    const Element gb = alg.basis(g);
    if (alg.multiply(lift, gb) != gb || alg.multiply(gb, lift) != gb) {
      throw ConsistencyError("e' is not the unit of k_aΓ_e at '" + c.name(e) + "'");
    }
  }
  return out;
}

Subspace radical_corner_criterion(const CategoryAlgebra& alg, const JClassDecomposition& jdec,
                                  const LocalData& local) {
  const FiniteCategory& c = alg.category();
  const std::size_t m = alg.dim();
  Subspace conditions(m);
  // Sparse rows are deduplicated up to scaling before they reach the RREF.
  std::set<std::vector<std::pair<MorphismId, Rat>>> seen;
  for (std::size_t i = 0; i < jdec.size() && conditions.dim() < m; ++i) {
    const MorphismId e = jdec.reps[i];
    const MorphismSet& gamma = local[i].gamma;
    const ObjectId x = c.morphism(e).dom;
    // e'·a is a multiple of e∘a, and b·e' of b∘e, so it suffices to let a
    // run over the distinct e∘s and b over the distinct s∘e.
    std::set<MorphismId> lefts, rights;
    for (MorphismId s = 0; s < m; ++s) {
      if (c.morphism(s).cod == x) rights.insert(c.comp(s, e));
      if (c.morphism(s).dom == x) lefts.insert(c.comp(e, s));
    }
    std::vector<std::vector<std::pair<MorphismId, Rat>>> rows(m);
    for (MorphismId a : lefts) {
      for (MorphismId b : rights) {
        for (auto& r : rows) r.clear();
        for (MorphismId u = 0; u < m; ++u) {
          const MorphismId au = c.comp(a, u);
          if (au == kUndefined) continue;
          const MorphismId aub = c.comp(au, b);
          if (aub == kUndefined || jdec.layer_of[aub] != i) continue;
          if (!std::binary_search(gamma.begin(), gamma.end(), aub)) continue;
          rows[aub].emplace_back(u, alg.coefficient(a, u) * alg.coefficient(au, b));
        }
        for (auto& r : rows) {
          if (r.empty()) continue;
          Rat lead = r.front().second;
          for (auto& [k, v] : r) v /= lead;
          if (!seen.insert(r).second) continue;
          Vec dense(m);
          for (const auto& [k, v] : r) dense[k] = v;
          conditions.insert(std::move(dense));
          if (conditions.dim() == m) break;
        }
      }
    }
  }
  return nullspace(conditions.basis());
}

Subspace radical_trace_form(const CategoryAlgebra& alg) {
  const FiniteCategory& c = alg.category();
  const std::size_t m = alg.dim();
  Mat gram(m, m);
  for (MorphismId s = 0; s < m; ++s) {
    for (MorphismId t = s; t < m; ++t) {
      Rat tr = 0;
      for (MorphismId x = 0; x < m; ++x) {
        const MorphismId tx = c.comp(t, x);
        if (tx == kUndefined) continue;
        const MorphismId stx = c.comp(s, tx);
        if (stx != x) continue;
        tr += alg.coefficient(t, x) * alg.coefficient(s, tx);
      }
      gram(s, t) = tr;
      gram(t, s) = tr;
    }
  }
  return nullspace(gram);
}

namespace {

Subspace closure(const CategoryAlgebra& alg, const std::vector<Vec>& generators, bool two_sided) {
  Subspace span(alg.dim());
  std::deque<Vec> queue;
  for (const auto& g : generators) {
    if (span.insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (MorphismId g : alg.generators()) {
      Vec lv = alg.left_mul(g, v);
      if (span.insert(lv)) queue.push_back(std::move(lv));
      if (two_sided) {
        Vec rv = alg.right_mul(v, g);
        if (span.insert(rv)) queue.push_back(std::move(rv));
      }
    }
  }
  return span;
}

}  // namespace

Subspace ideal_span(const CategoryAlgebra& alg, const std::vector<Vec>& generators) {
  return closure(alg, generators, true);
}

Subspace left_ideal_span(const CategoryAlgebra& alg, const std::vector<Vec>& generators) {
  return closure(alg, generators, false);
}

bool is_two_sided_ideal(const CategoryAlgebra& alg, const Subspace& sub) {
  for (const Vec& v : sub.basis_rows()) {
    for (MorphismId g : alg.generators()) {
      if (!sub.contains(alg.left_mul(g, v)) || !sub.contains(alg.right_mul(v, g))) return false;
    }
  }
  return true;
}

Subspace product_span(const CategoryAlgebra& alg, const Subspace& a, const Subspace& b) {
  Subspace out(alg.dim());
  for (const Vec& x : a.basis_rows())
    for (const Vec& y : b.basis_rows()) out.insert(alg.multiply(x, y));
  return out;
}

std::size_t nilpotency_index(const CategoryAlgebra& alg, const Subspace& radical) {
  if (radical.empty()) return 1;
  Subspace power = radical;
  for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
    if (power.empty()) return k;
    power = product_span(alg, power, radical);
  }
  return 0;
}

bool check_associative(const CategoryAlgebra& alg) {
  const FiniteCategory& c = alg.category();
  const std::size_t m = alg.dim();
  for (MorphismId u = 0; u < m; ++u) {
    for (MorphismId t = 0; t < m; ++t) {
      const MorphismId ut = c.comp(u, t);
      if (ut == kUndefined) continue;
      for (MorphismId s = 0; s < m; ++s) {
        const MorphismId ts = c.comp(t, s);
        if (ts == kUndefined) continue;
        if (c.comp(ut, s) != c.comp(u, ts)) return false;
        if (alg.coefficient(u, t) * alg.coefficient(ut, s) != alg.coefficient(t, s) * alg.coefficient(u, ts)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qhcat
