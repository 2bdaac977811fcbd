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

#include "qhcat/generators.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qhcat {

FiniteCategory full_transformation_monoid(int n) {
  if (n < 1 || n > 4) throw InputError("full_transformation_monoid: n must be in 1..4");
  std::vector<std::vector<int>> maps;
  std::vector<int> f(n, 0);
  while (true) {
    maps.push_back(f);
    int k = n - 1;
    while (k >= 0 && ++f[k] == n) f[k--] = 0;
    if (k < 0) break;
  }
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    index[maps[k]] = k;
    std::string name = "f";
    for (int v : maps[k]) name += std::to_string(v + 1);
    names.push_back(name);
  }
  const std::size_t m = maps.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<int> ts(n);
      for (int x = 0; x < n; ++x) ts[x] = maps[t][maps[s][x]];
      table[t][s] = index.at(ts);
    }
  }
  return from_monoid(table, names);
}

FiniteCategory cyclic_group(int n) {
  if (n < 1 || n > 64) throw InputError("cyclic_group: n must be in 1..64");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back("g" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return from_monoid(table, names);
}

FiniteCategory nilpotent_monoid() {
  // 0 = 1, 1 = x, 2 = zero
  std::vector<std::vector<std::size_t>> table = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  return from_monoid(table, {"1", "x", "0"});
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

std::vector<int> canonical(const std::vector<int>& labels) {
  std::map<int, int> relabel;
  std::vector<int> out;
  for (int l : labels) {
    auto [it, inserted] = relabel.try_emplace(l, static_cast<int>(relabel.size()));
    out.push_back(it->second);
  }
  return out;
}

// Restricted growth strings of the given length.
void set_partitions(int len, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> rgs(len, 0);
  std::function<void(int, int)> rec = [&](int pos, int max_label) {
    if (pos == len) {
      emit(rgs);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[pos] = l;
      rec(pos + 1, std::max(max_label, l));
    }
  };
  if (len == 0) {
    emit(rgs);
    return;
  }
  rgs[0] = 0;
  rec(1, 0);
}

bool is_perfect_matching(const std::vector<int>& d) {
  std::map<int, int> sizes;
  for (int l : d) ++sizes[l];
  for (auto [l, k] : sizes)
    if (k != 2) return false;
  return true;
}

// Top points sit at boundary positions 0..n-1 left to right, bottom points
// at 2n-1..n right to left.
bool is_planar(const std::vector<int>& d, int n) {
  auto pos = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  std::map<int, std::vector<int>> blocks;
  for (int p = 0; p < 2 * n; ++p) blocks[d[p]].push_back(pos(p));
  std::vector<std::pair<int, int>> arcs;
  for (auto& [l, ps] : blocks) arcs.emplace_back(std::min(ps[0], ps[1]), std::max(ps[0], ps[1]));
  for (const auto& [a, b] : arcs)
    for (const auto& [c, e] : arcs)
      if (a < c && c < b && b < e) return false;
  return true;
}

std::string diagram_name(const std::vector<int>& d) {
  std::string name = "d";
  for (int l : d) name += static_cast<char>(l < 10 ? '0' + l : 'a' + (l - 10));
  return name;
}

DiagramCategory make_diagram_category(DiagramKind kind, int n, const Rat& delta) {
  if (sgn(delta) == 0) throw ZeroCocycleValue("cocycle values must be nonzero (delta = 0)");
  DiagramCategory out;
  out.kind = kind;
  out.n = n;
  out.delta = delta;
  set_partitions(2 * n, [&](const std::vector<int>& d) {
    if (kind != DiagramKind::kPartition && !is_perfect_matching(d)) return;
    if (kind == DiagramKind::kTemperleyLieb && !is_planar(d, n)) return;
    out.diagrams.push_back(d);
  });
  std::map<std::vector<int>, std::size_t> index;
  std::vector<Morphism> morphisms;
  for (std::size_t k = 0; k < out.diagrams.size(); ++k) {
    index[out.diagrams[k]] = k;
    morphisms.push_back({diagram_name(out.diagrams[k]), 0, 0});
  }
  std::vector<int> id(2 * n);
  for (int i = 0; i < n; ++i) id[i] = id[n + i] = i;
  const std::size_t m = out.diagrams.size();
  std::vector<MorphismId> comp(m * m);
  out.cocycle = Cocycle(m);
  // delta^k for the loop counts that occur.
  std::vector<Rat> powers = {Rat(1)};
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t s = 0; s < m; ++s) {
      Stacked st = stack_diagrams(out.diagrams[t], out.diagrams[s], n);
      comp[t * m + s] = index.at(st.diagram);
      while (powers.size() <= static_cast<std::size_t>(st.loops)) powers.push_back(powers.back() * delta);
      out.cocycle.set(t, s, powers[st.loops]);
    }
  }
  out.category = FiniteCategory({"X"}, std::move(morphisms), {index.at(canonical(id))}, std::move(comp));
  return out;
}

}  // namespace

Stacked stack_diagrams(const std::vector<int>& top, const std::vector<int>& bottom, int n) {
  // Points: 0..n-1 bottom row of `bottom`, n..2n-1 middle, 2n..3n-1 top row
  // of `top`.
  UnionFind uf(3 * n);
  auto link = [&](const std::vector<int>& d, int top_offset, int bottom_offset) {
    std::map<int, int> first;
    for (int p = 0; p < 2 * n; ++p) {
      int point = p < n ? top_offset + p : bottom_offset + (p - n);
      auto [it, inserted] = first.try_emplace(d[p], point);
      if (!inserted) uf.unite(point, it->second);
    }
  };
  link(bottom, n, 0);
  link(top, 2 * n, n);
  std::vector<int> outer(2 * n);
  for (int i = 0; i < n; ++i) {
    outer[i] = uf.find(2 * n + i);
    outer[n + i] = uf.find(i);
  }
  Stacked st;
  st.diagram = canonical(outer);
  std::map<int, bool> touches_outer;
  for (int p = 0; p < 3 * n; ++p) {
    bool is_outer = p < n || p >= 2 * n;
    touches_outer[uf.find(p)] |= is_outer;
  }
  for (auto [root, outer_flag] : touches_outer)
    if (!outer_flag) ++st.loops;
  return st;
}

DiagramCategory temperley_lieb(int n, const Rat& delta) {
  if (n < 1 || n > 6) throw InputError("temperley_lieb: n must be in 1..6");
  return make_diagram_category(DiagramKind::kTemperleyLieb, n, delta);
}

DiagramCategory brauer(int n, const Rat& delta) {
  if (n < 1 || n > 4) throw InputError("brauer: n must be in 1..4");
  return make_diagram_category(DiagramKind::kBrauer, n, delta);
}

DiagramCategory partition_category(int n, const Rat& delta) {
  if (n < 1 || n > 3) throw InputError("partition_category: n must be in 1..3");
  return make_diagram_category(DiagramKind::kPartition, n, delta);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_n(const std::string& text, const std::string& spec) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 3) {
    throw InputError("builtin spec '" + spec + "': bad size '" + text + "'");
  }
  return std::stoi(text);
}

CategoryWithCocycle builtin_one(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw InputError("empty builtin spec");
  const std::string& family = parts[0];
  auto no_delta = [&](FiniteCategory c) {
    if (parts.size() > 2) throw InputError("builtin family '" + family + "' takes no cocycle parameter");
    Cocycle a = trivial_cocycle(c);
    return CategoryWithCocycle{std::move(c), std::move(a)};
  };
  if (family == "n3") {
    if (parts.size() != 1) throw InputError("builtin family 'n3' takes no parameters");
    FiniteCategory c = nilpotent_monoid();
    Cocycle a = trivial_cocycle(c);
    return {std::move(c), std::move(a)};
  }
  if (parts.size() < 2) throw InputError("builtin spec '" + spec + "' needs a size");
  const int n = parse_n(parts[1], spec);
  if (family == "t") return no_delta(full_transformation_monoid(n));
  if (family == "cyclic") return no_delta(cyclic_group(n));
  if (family == "tl" || family == "brauer" || family == "partition") {
    if (parts.size() > 3) throw InputError("builtin spec '" + spec + "' has too many fields");
    Rat delta = 1;
    if (parts.size() == 3) {
      try {
        delta = parse_rat(parts[2]);
      } catch (const std::invalid_argument& e) {
        throw InputError("builtin spec '" + spec + "': " + e.what());
      }
    }
    DiagramCategory d = family == "tl"       ? temperley_lieb(n, delta)
                        : family == "brauer" ? brauer(n, delta)
                                             : partition_category(n, delta);
    return {std::move(d.category), std::move(d.cocycle)};
  }
  throw InputError("unknown builtin family '" + family + "'");
}

}  // namespace

CategoryWithCocycle builtin(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) != 0) throw InputError("builtin spec must start with 'builtin:'");
  auto pieces = split(spec.substr(prefix.size()), '+');
  if (pieces.empty()) throw InputError("empty builtin spec");
  CategoryWithCocycle acc = builtin_one(pieces[0]);
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    CategoryWithCocycle next = builtin_one(pieces[k]);
    const std::size_t ma = acc.category.num_morphisms();
    FiniteCategory joined = disjoint_union(acc.category, next.category);
    Cocycle a(joined.num_morphisms());
    for (MorphismId t = 0; t < ma; ++t)
      for (MorphismId s = 0; s < ma; ++s)
        if (acc.cocycle.has(t, s)) a.set(t, s, acc.cocycle.at(t, s));
    const std::size_t mb = next.category.num_morphisms();
    for (MorphismId t = 0; t < mb; ++t)
      for (MorphismId s = 0; s < mb; ++s)
        if (next.cocycle.has(t, s)) a.set(t + ma, s + ma, next.cocycle.at(t, s));
    acc = {std::move(joined), std::move(a)};
  }
  return acc;
}

std::vector<std::string> bundled_examples() {
  return {
      "builtin:t:1",          "builtin:t:2",          "builtin:t:3",          "builtin:cyclic:2",
      "builtin:cyclic:3",     "builtin:tl:2:1",       "builtin:tl:2:2",       "builtin:tl:2:3",
      "builtin:tl:3:1",       "builtin:tl:3:2",       "builtin:tl:3:3",       "builtin:brauer:2:1",
      "builtin:brauer:2:2",   "builtin:brauer:3:1",   "builtin:brauer:3:2",   "builtin:partition:1:1",
      "builtin:partition:2:1", "builtin:t:2+cyclic:2",
  };
}

}  // namespace qhcat
