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

#include "qhcat/category.hpp"

namespace qhcat {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<MorphismId> identities, std::vector<MorphismId> comp)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      comp_(std::move(comp)) {
  const std::size_t m = morphisms_.size();
  if (identities_.size() != objects_.size()) throw InputError("one identity per object required");
  if (comp_.size() != m * m) throw InputError("composition table must be |Mor| x |Mor|");
  for (const auto& f : morphisms_) {
    if (f.dom >= objects_.size() || f.cod >= objects_.size()) {
      throw InputError("morphism '" + f.name + "' has an unknown domain or codomain");
    }
  }
  for (ObjectId x = 0; x < identities_.size(); ++x) {
    if (identities_[x] >= m) throw InputError("identity of object '" + objects_[x] + "' is not a morphism");
  }
  for (MorphismId v : comp_) {
    if (v != kUndefined && v >= m) throw InputError("composition table refers to an unknown morphism");
  }
}

const Morphism& FiniteCategory::morphism(MorphismId s) const {
  if (s >= morphisms_.size()) throw InputError("unknown morphism id " + std::to_string(s));
  return morphisms_[s];
}

MorphismId FiniteCategory::identity(ObjectId x) const {
  if (x >= identities_.size()) throw InputError("unknown object id " + std::to_string(x));
  return identities_[x];
}

std::optional<MorphismId> FiniteCategory::compose(MorphismId t, MorphismId s) const {
  morphism(t);
  morphism(s);
  if (!composable(t, s)) return std::nullopt;
  MorphismId r = comp(t, s);
  if (r == kUndefined) return std::nullopt;
  return r;
}

std::vector<MorphismId> FiniteCategory::hom_set(ObjectId x, ObjectId y) const {
  if (x >= objects_.size() || y >= objects_.size()) throw InputError("unknown object id");
  std::vector<MorphismId> out;
  for (MorphismId s = 0; s < morphisms_.size(); ++s) {
    if (morphisms_[s].dom == x && morphisms_[s].cod == y) out.push_back(s);
  }
  return out;
}

std::optional<ObjectId> FiniteCategory::find_object(const std::string& name) const {
  for (ObjectId x = 0; x < objects_.size(); ++x)
    if (objects_[x] == name) return x;
  return std::nullopt;
}

std::optional<MorphismId> FiniteCategory::find_morphism(const std::string& name) const {
  for (MorphismId s = 0; s < morphisms_.size(); ++s)
    if (morphisms_[s].name == name) return s;
  return std::nullopt;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.name == b.name && a.dom == b.dom && a.cod == b.cod;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
         a.comp_ == b.comp_;
}

namespace {

std::string triple_name(const FiniteCategory& c, MorphismId u, MorphismId t, MorphismId s) {
  return "(" + c.name(u) + ", " + c.name(t) + ", " + c.name(s) + ")";
}

}  // namespace

ValidationReport validate(const FiniteCategory& c) {
  ValidationReport report;
  const std::size_t m = c.num_morphisms();

  for (ObjectId x = 0; x < c.num_objects(); ++x) {
    const MorphismId id = c.identity(x);
    const Morphism& f = c.morphism(id);
    if (f.dom != x || f.cod != x) {
      report.violations.push_back({"identity", "identity of '" + c.objects()[x] + "' is not an endomorphism of it", {id}});
    }
  }

  bool table_ok = true;
  for (MorphismId t = 0; t < m && table_ok; ++t) {
    for (MorphismId s = 0; s < m; ++s) {
      const MorphismId r = c.comp(t, s);
      if (c.composable(t, s) != (r != kUndefined)) {
        report.violations.push_back({"composition domain",
                                     "t∘s must be defined exactly when cod(s) = dom(t): (" + c.name(t) + ", " +
                                         c.name(s) + ")",
                                     {t, s}});
        table_ok = false;
        break;
      }
      if (r == kUndefined) continue;
      if (c.morphism(r).dom != c.morphism(s).dom || c.morphism(r).cod != c.morphism(t).cod) {
        report.violations.push_back(
            {"dom/cod", "dom/cod of " + c.name(t) + "∘" + c.name(s) + " inconsistent", {t, s, r}});
        table_ok = false;
        break;
      }
    }
  }
  if (!table_ok || !report.ok()) return report;

  for (MorphismId s = 0; s < m; ++s) {
    const Morphism& f = c.morphism(s);
    if (c.comp(c.identity(f.cod), s) != s || c.comp(s, c.identity(f.dom)) != s) {
      report.violations.push_back({"identity not neutral", "identity not neutral on '" + f.name + "'", {s}});
      break;
    }
  }

  for (MorphismId u = 0; u < m; ++u) {
    for (MorphismId t = 0; t < m; ++t) {
      const MorphismId ut = c.comp(u, t);
      if (ut == kUndefined) continue;
      for (MorphismId s = 0; s < m; ++s) {
        const MorphismId ts = c.comp(t, s);
        if (ts == kUndefined) continue;
        if (c.comp(ut, s) != c.comp(u, ts)) {
          report.violations.push_back({"associativity", "(u∘t)∘s != u∘(t∘s) at " + triple_name(c, u, t, s), {u, t, s}});
          return report;
        }
      }
    }
  }
  return report;
}

SplitCheck is_split(const FiniteCategory& c) {
  const std::size_t m = c.num_morphisms();
  SplitWitness w;
  w.pseudo_inverse.assign(m, kUndefined);
  for (MorphismId s = 0; s < m; ++s) {
    const Morphism& f = c.morphism(s);
    for (MorphismId t : c.hom_set(f.cod, f.dom)) {
      if (c.comp(s, c.comp(t, s)) == s) {
        w.pseudo_inverse[s] = c.comp(t, c.comp(s, t));
        break;
      }
    }
    if (w.pseudo_inverse[s] == kUndefined) return {std::nullopt, s};
  }
  return {std::move(w), kUndefined};
}

FiniteCategory from_monoid(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names) {
  const std::size_t m = table.size();
  if (m == 0) throw InputError("monoid table is empty");
  for (const auto& row : table) {
    if (row.size() != m) throw InputError("monoid table is not square");
    for (auto v : row)
      if (v >= m) throw InputError("monoid table entry out of range");
  }
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < m && !unit; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) unit = e;
  }
  if (!unit) throw InputError("monoid table has no two-sided identity");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t d = 0; d < m; ++d)
        if (table[table[a][b]][d] != table[a][table[b][d]]) {
          throw InputError("monoid table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                           ", " + std::to_string(d) + ")");
        }
  if (names.empty()) {
    for (std::size_t k = 0; k < m; ++k) names.push_back("m" + std::to_string(k));
  }
  if (names.size() != m) throw InputError("monoid names do not match table size");
  std::vector<Morphism> morphisms;
  for (auto& n : names) morphisms.push_back({std::move(n), 0, 0});
  std::vector<MorphismId> comp(m * m);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s) comp[t * m + s] = table[t][s];
  return FiniteCategory({"X"}, std::move(morphisms), {*unit}, std::move(comp));
}

std::vector<std::vector<std::size_t>> monoid_table(const FiniteCategory& c) {
  if (c.num_objects() != 1) throw InputError("monoid_table needs a one-object category");
  const std::size_t m = c.num_morphisms();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s) table[t][s] = c.comp(t, s);
  return table;
}

FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b) {
  const std::size_t ma = a.num_morphisms(), mb = b.num_morphisms(), m = ma + mb;
  const std::size_t oa = a.num_objects();
  // Names from `b` that clash with names in `a` get a "'" suffix.
  std::vector<std::string> objects = a.objects();
  for (const auto& x : b.objects()) objects.push_back(a.find_object(x) ? x + "'" : x);
  std::vector<Morphism> morphisms = a.morphisms();
  for (const auto& f : b.morphisms()) {
    morphisms.push_back({a.find_morphism(f.name) ? f.name + "'" : f.name, f.dom + oa, f.cod + oa});
  }
  std::vector<MorphismId> ids = a.identities();
  for (auto id : b.identities()) ids.push_back(id + ma);
  std::vector<MorphismId> comp(m * m, kUndefined);
  for (std::size_t t = 0; t < ma; ++t)
    for (std::size_t s = 0; s < ma; ++s) comp[t * m + s] = a.comp(t, s);
  for (std::size_t t = 0; t < mb; ++t)
    for (std::size_t s = 0; s < mb; ++s) {
      MorphismId r = b.comp(t, s);
      comp[(t + ma) * m + s + ma] = r == kUndefined ? kUndefined : r + ma;
    }
  return FiniteCategory(std::move(objects), std::move(morphisms), std::move(ids), std::move(comp));
}

}  // namespace qhcat
