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

// Slow, independent reference computations used only by the tests. None of
// these call the library routine they are meant to check.

#ifndef QHCAT_TESTS_ORACLES_HPP_
#define QHCAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "qhcat/algebra.hpp"
#include "qhcat/generators.hpp"
#include "qhcat/modrep.hpp"

namespace qhcat::oracle {

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline std::uint64_t double_factorial_odd(int n) {  // (2n-1)!!
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

inline std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (std::uint64_t v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(row);
  }
  return tri[n][0];
}

// Determinant by cofactor expansion over all permutations.
inline Rat det_leibniz(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// s <=_J t iff s = u∘t∘v for some u, v; enumerated over all pairs.
inline std::vector<std::vector<bool>> j_leq(const FiniteCategory& c) {
  const std::size_t m = c.num_morphisms();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (MorphismId t = 0; t < m; ++t)
    for (MorphismId u = 0; u < m; ++u) {
      if (!c.composable(u, t)) continue;
      const MorphismId ut = *c.compose(u, t);
      for (MorphismId v = 0; v < m; ++v)
        if (c.composable(ut, v)) leq[*c.compose(ut, v)][t] = true;
    }
  return leq;
}

// Gram matrix tr(L_s L_t) of the regular representation, read directly off
// the composition table: L_s L_t sends x to a(t,x) a(s,t∘x) s∘t∘x.
inline Mat trace_gram(const FiniteCategory& c, const Cocycle& a) {
  const std::size_t m = c.num_morphisms();
  Mat g(m, m);
  for (MorphismId s = 0; s < m; ++s)
    for (MorphismId t = 0; t < m; ++t)
      for (MorphismId x = 0; x < m; ++x) {
        if (!c.composable(t, x)) continue;
        const MorphismId tx = *c.compose(t, x);
        if (!c.composable(s, tx) || *c.compose(s, tx) != x) continue;
        g(s, t) += a.at(t, x) * a.at(s, tx);
      }
  return g;
}

// Stacking by explicit graph search: top diagram on points 0..2n-1, bottom
// on 2n..4n-1 with bottom's top row glued to top's bottom row.
struct Stack {
  std::vector<int> labels;
  int loops = 0;
};

inline Stack stack_bruteforce(const std::vector<int>& top, const std::vector<int>& bottom, int n) {
  // Vertices: 0..n-1 outer top, n..2n-1 middle, 2n..3n-1 outer bottom.
  const int v = 3 * n;
  std::vector<std::vector<int>> adj(v);
  auto link = [&](int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  // The top diagram's bottom row p in n..2n-1 is middle vertex p.
  auto place_top = [](int p) { return p; };
  auto place_bottom = [&](int p) { return p < n ? n + p : 2 * n + (p - n); };
  for (int p = 0; p < 2 * n; ++p)
    for (int q = p + 1; q < 2 * n; ++q) {
      if (top[p] == top[q]) link(place_top(p), place_top(q));
      if (bottom[p] == bottom[q]) link(place_bottom(p), place_bottom(q));
    }
  std::vector<int> comp(v, -1);
  int ncomp = 0;
  for (int s = 0; s < v; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  Stack out;
  std::set<int> outer;
  for (int p = 0; p < n; ++p) outer.insert(comp[p]);
  for (int p = 2 * n; p < 3 * n; ++p) outer.insert(comp[p]);
  std::set<int> middle;
  for (int p = n; p < 2 * n; ++p)
    if (!outer.count(comp[p])) middle.insert(comp[p]);
  out.loops = static_cast<int>(middle.size());
  std::map<int, int> relabel;
  for (int p = 0; p < 2 * n; ++p) {
    const int x = p < n ? p : 2 * n + (p - n);
    auto [it, fresh] = relabel.try_emplace(comp[x], static_cast<int>(relabel.size()));
    out.labels.push_back(it->second);
  }
  return out;
}

// Composition multiplicities by building a composition series out of
// submodules generated by vectors with entries in {-1, 0, 1}, then naming
// each factor by an isomorphism test against the simples. nullopt if the
// search fails to reach simple factors.
inline std::optional<std::vector<std::size_t>> composition_by_enumeration(const CategoryAlgebra& alg,
                                                                          const LeftModule& m,
                                                                          const StandardFamily& fam,
                                                                          const Subspace& radical) {
  const std::size_t d = m.dim;
  std::vector<Subspace> cyclic;
  std::vector<int> digits(d, -1);
  while (true) {
    Vec v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = digits[k];
    if (!is_zero(v)) {
      Subspace s = generated_submodule(alg, m, {v});
      if (std::find(cyclic.begin(), cyclic.end(), s) == cyclic.end()) cyclic.push_back(std::move(s));
    }
    std::size_t k = 0;
    while (k < d && digits[k] == 1) digits[k++] = -1;
    if (k == d) break;
    ++digits[k];
  }
  std::vector<std::size_t> counts(fam.size(), 0);
  Subspace current(d);
  while (current.dim() < d) {
    std::optional<Subspace> best;
    for (const auto& c : cyclic) {
      Subspace next = current + c;
      if (next.dim() == current.dim()) continue;
      if (!best || next.dim() < best->dim()) best = std::move(next);
    }
    if (!best) return std::nullopt;
    const LeftModule factor = subquotient(m, *best, current);
    if (!module_radical(factor, radical).empty()) return std::nullopt;
    std::optional<std::size_t> match;
    for (std::size_t b = 0; b < fam.size() && !match; ++b)
      if (isomorphic(alg, factor, fam.simple[b])) match = b;
    if (!match) return std::nullopt;
    ++counts[*match];
    current = std::move(*best);
  }
  return counts;
}

}  // namespace qhcat::oracle

#endif  // QHCAT_TESTS_ORACLES_HPP_
