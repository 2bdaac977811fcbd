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

#include "qhcat/green.hpp"

#include <algorithm>
#include <map>

namespace qhcat {

namespace {

using Mask = std::vector<char>;

Mask to_mask(std::size_t m, const MorphismSet& set) {
  Mask mask(m, 0);
  for (auto s : set) mask[s] = 1;
  return mask;
}

MorphismSet from_mask(const Mask& mask) {
  MorphismSet out;
  for (std::size_t s = 0; s < mask.size(); ++s)
    if (mask[s]) out.push_back(s);
  return out;
}

Mask ideal_mask(const FiniteCategory& c, MorphismId s) {
  const std::size_t m = c.num_morphisms();
  Mask left(m, 0);
  for (MorphismId a = 0; a < m; ++a) {
    MorphismId as = c.comp(a, s);
    if (as != kUndefined) left[as] = 1;
  }
  Mask out(m, 0);
  for (MorphismId x = 0; x < m; ++x) {
    if (!left[x]) continue;
    for (MorphismId b = 0; b < m; ++b) {
      MorphismId xb = c.comp(x, b);
      if (xb != kUndefined) out[xb] = 1;
    }
  }
  return out;
}

Mask left_mask(const FiniteCategory& c, MorphismId s) {
  Mask out(c.num_morphisms(), 0);
  for (MorphismId a = 0; a < c.num_morphisms(); ++a) {
    MorphismId as = c.comp(a, s);
    if (as != kUndefined) out[as] = 1;
  }
  return out;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && !b[k]) return false;
  return true;
}

MorphismSet intersect(const MorphismSet& a, const MorphismSet& b) {
  MorphismSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MorphismSet principal_ideal(const FiniteCategory& c, MorphismId s) {
  c.morphism(s);
  return from_mask(ideal_mask(c, s));
}

MorphismSet left_ideal(const FiniteCategory& c, MorphismId s) {
  c.morphism(s);
  return from_mask(left_mask(c, s));
}

MorphismSet idempotents(const FiniteCategory& c) {
  MorphismSet out;
  for (MorphismId s = 0; s < c.num_morphisms(); ++s)
    if (c.is_endomorphism(s) && c.is_idempotent(s)) out.push_back(s);
  return out;
}

std::optional<std::pair<MorphismId, MorphismId>> idempotent_equivalent(const FiniteCategory& c, MorphismId e,
                                                                         MorphismId f) {
  for (MorphismId x : {e, f}) {
    if (!c.is_endomorphism(x) || !c.is_idempotent(x)) {
      throw InputError("idempotent_equivalent: '" + c.name(x) + "' is not an idempotent");
    }
  }
  const ObjectId X = c.morphism(e).dom, Y = c.morphism(f).dom;
  MorphismSet ss, ts;
  for (MorphismId h : c.hom_set(Y, X)) ss.push_back(c.comp(e, c.comp(h, f)));
  for (MorphismId h : c.hom_set(X, Y)) ts.push_back(c.comp(f, c.comp(h, e)));
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (MorphismId s : ss)
    for (MorphismId t : ts)
      if (c.comp(s, t) == e && c.comp(t, s) == f) return std::make_pair(s, t);
  return std::nullopt;
}

MorphismSet JClassDecomposition::up_to(long i) const {
  MorphismSet out;
  for (long j = 0; j <= i; ++j) out.insert(out.end(), classes[j].begin(), classes[j].end());
  std::sort(out.begin(), out.end());
  return out;
}

MorphismSet JClassDecomposition::j_below_or_equal(std::size_t i) const {
  MorphismSet out;
  for (std::size_t j = 0; j < size(); ++j)
    if (j == i || below[j][i]) out.insert(out.end(), classes[j].begin(), classes[j].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> JClassDecomposition::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (!below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size() && covered; ++k) covered = !(below[i][k] && below[k][j]);
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

JClassDecomposition j_decompose(const FiniteCategory& c, const GreenOptions& opts) {
  const std::size_t m = c.num_morphisms();
  std::map<Mask, std::size_t> index;
  std::vector<Mask> ideals;
  std::vector<MorphismSet> raw_classes;
  for (MorphismId s = 0; s < m; ++s) {
    Mask ideal = ideal_mask(c, s);
    auto [it, inserted] = index.try_emplace(ideal, raw_classes.size());
    if (inserted) {
      ideals.push_back(ideal);
      raw_classes.emplace_back();
    }
    raw_classes[it->second].push_back(s);
  }
  const std::size_t n = raw_classes.size();

  std::vector<MorphismId> least_idem(n, kUndefined), rep(n, kUndefined);
  for (std::size_t k = 0; k < n; ++k) {
    for (MorphismId s : raw_classes[k]) {
      if (!c.is_endomorphism(s) || !c.is_idempotent(s)) continue;
      if (least_idem[k] == kUndefined) least_idem[k] = s;
      if (opts.rep_choice == RepChoice::kLeastIdempotent ? rep[k] == kUndefined : true) rep[k] = s;
    }
    if (rep[k] == kUndefined) {
      throw ConsistencyError("J-class of '" + c.name(raw_classes[k].front()) +
                             "' contains no idempotent (category not split?)");
    }
  }

  // raw_below[a][b]: class a strictly J-below class b.
  std::vector<std::vector<bool>> raw_below(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) raw_below[a][b] = a != b && subset(ideals[a], ideals[b]);

  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (placed[k]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) minimal = placed[j] || !raw_below[j][k];
      if (!minimal) continue;
      if (pick == n) {
        pick = k;
      } else if (opts.tie_break == TieBreak::kLeastFirst ? least_idem[k] < least_idem[pick]
                                                          : least_idem[k] > least_idem[pick]) {
        pick = k;
      }
    }
    if (pick == n) throw ConsistencyError("J-order has a cycle");
    placed[pick] = true;
    order.push_back(pick);
  }

  JClassDecomposition out;
  out.layer_of.assign(m, 0);
  out.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    out.classes.push_back(raw_classes[order[i]]);
    out.reps.push_back(rep[order[i]]);
    for (MorphismId s : raw_classes[order[i]]) out.layer_of[s] = i;
    for (std::size_t j = 0; j < n; ++j) out.below[i][j] = raw_below[order[i]][order[j]];
  }
  out.admissible = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.below[i][j] && i > j) out.admissible = false;
  return out;
}

MorphismSet units_of_corner(const FiniteCategory& c, MorphismId e) {
  const ObjectId x = c.morphism(e).dom;
  MorphismSet monoid;
  for (MorphismId s : c.hom_set(x, x)) monoid.push_back(c.comp(e, c.comp(s, e)));
  std::sort(monoid.begin(), monoid.end());
  monoid.erase(std::unique(monoid.begin(), monoid.end()), monoid.end());
  MorphismSet units;
  for (MorphismId a : monoid) {
    for (MorphismId b : monoid) {
      if (c.comp(a, b) == e && c.comp(b, a) == e) {
        units.push_back(a);
        break;
      }
    }
  }
  return units;
}

MorphismSet left_trace(const FiniteCategory& c, MorphismId e, const MorphismSet& layer) {
  return intersect(left_ideal(c, e), layer);
}

LayerLocal layer_local(const FiniteCategory& c, const JClassDecomposition& jdec, std::size_t i, MorphismId e) {
  if (!c.is_endomorphism(e) || !c.is_idempotent(e)) throw InputError("layer_local: not an idempotent");
  const MorphismSet& layer = jdec.classes[i];
  LayerLocal out;
  out.rep = e;
  const ObjectId x = c.morphism(e).dom;
  for (MorphismId s : c.hom_set(x, x)) out.corner.push_back(c.comp(e, c.comp(s, e)));
  std::sort(out.corner.begin(), out.corner.end());
  out.corner.erase(std::unique(out.corner.begin(), out.corner.end()), out.corner.end());

  out.gamma = intersect(out.corner, layer);
  if (units_of_corner(c, e) != out.gamma) {
    throw ConsistencyError("maximal subgroup at '" + c.name(e) + "': corner units differ from (e∘S∘e) ∩ S_i");
  }
  out.jset = intersect(out.corner, jdec.up_to(static_cast<long>(i) - 1));
  if (out.gamma.size() + out.jset.size() != out.corner.size()) {
    throw ConsistencyError("e∘S∘e is not the disjoint union of Γ_e and J_e at '" + c.name(e) + "'");
  }
  for (MorphismId a : out.gamma)
    for (MorphismId b : out.gamma)
      if (!std::binary_search(out.gamma.begin(), out.gamma.end(), c.comp(a, b))) {
        throw ConsistencyError("Γ_e is not closed under composition at '" + c.name(e) + "'");
      }

  for (MorphismId f : layer)
    if (c.is_endomorphism(f) && c.is_idempotent(f)) out.idempotent_class.push_back(f);

  // Greedy ε: keep e when its left trace misses every kept block. Every
  // other trace must coincide with a kept block.
  std::vector<char> covered(c.num_morphisms(), 0);
  std::vector<MorphismId> scan = out.idempotent_class;
  // The layer representative leads so that it is always in ε.
  std::stable_partition(scan.begin(), scan.end(), [e](MorphismId f) { return f == e; });
  for (MorphismId f : scan) {
    MorphismSet block = left_trace(c, f, layer);
    bool hit = std::any_of(block.begin(), block.end(), [&](MorphismId s) { return covered[s] != 0; });
    if (!hit) {
      for (MorphismId s : block) covered[s] = 1;
      out.epsilon.push_back(f);
      out.blocks.push_back(std::move(block));
    } else if (std::find(out.blocks.begin(), out.blocks.end(), block) == out.blocks.end()) {
      throw ConsistencyError("left traces in layer " + std::to_string(i) + " are neither equal nor disjoint");
    }
  }
  for (MorphismId s : layer) {
    if (!covered[s]) throw ConsistencyError("ε-blocks do not cover layer " + std::to_string(i));
  }
  return out;
}

LocalData local_data(const FiniteCategory& c, const JClassDecomposition& jdec) {
  LocalData out;
  for (std::size_t i = 0; i < jdec.size(); ++i) out.push_back(layer_local(c, jdec, i, jdec.reps[i]));
  return out;
}

bool is_two_sided_ideal(const FiniteCategory& c, const MorphismSet& set) {
  const Mask mask = to_mask(c.num_morphisms(), set);
  for (MorphismId s : set) {
    for (MorphismId a = 0; a < c.num_morphisms(); ++a) {
      MorphismId as = c.comp(a, s), sa = c.comp(s, a);
      if (as != kUndefined && !mask[as]) return false;
      if (sa != kUndefined && !mask[sa]) return false;
    }
  }
  return true;
}

CheckReport check_ideal_lemmas(const FiniteCategory& c, const JClassDecomposition& jdec, const SplitWitness& w) {
  CheckReport report;
  const std::size_t m = c.num_morphisms();
  for (std::size_t i = 0; i < jdec.size(); ++i) {
    report.expect(is_two_sided_ideal(c, jdec.j_below_or_equal(i)),
                  "S_{<=_J " + std::to_string(i) + "} is not a two-sided ideal");
    report.expect(is_two_sided_ideal(c, jdec.up_to(static_cast<long>(i))),
                  "S_{<=" + std::to_string(i) + "} is not a two-sided ideal");
  }
  std::vector<Mask> left(m);
  for (MorphismId s = 0; s < m; ++s) left[s] = left_mask(c, s);
  for (const auto& cls : jdec.classes) {
    for (MorphismId s : cls)
      for (MorphismId t : cls)
        if (subset(left[s], left[t])) {
          report.expect(left[s] == left[t], "S∘" + c.name(s) + " ⊊ S∘" + c.name(t) + " within one J-class");
        }
  }
  for (MorphismId s = 0; s < m; ++s) {
    const MorphismId t = w.pseudo_inverse[s];
    const MorphismId ts = c.comp(t, s), st = c.comp(s, t);
    report.expect(left[s] == left[ts], "S∘s != S∘t∘s at '" + c.name(s) + "'");
    report.expect(c.is_idempotent(st) && c.is_idempotent(ts), "s∘t or t∘s not idempotent at '" + c.name(s) + "'");
    report.expect(jdec.layer_of[st] == jdec.layer_of[s] && jdec.layer_of[ts] == jdec.layer_of[s],
                  "J(s∘t) = J(s) = J(t∘s) fails at '" + c.name(s) + "'");
  }
  return report;
}

}  // namespace qhcat
