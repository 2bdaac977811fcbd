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

#include "qhcat/cocycle.hpp"

namespace qhcat {

void Cocycle::set(MorphismId t, MorphismId s, Rat value) {
  if (t >= m_ || s >= m_) throw InputError("cocycle entry refers to an unknown morphism");
  values_[t * m_ + s] = std::move(value);
}

const Rat& Cocycle::at(MorphismId t, MorphismId s) const {
  const auto& v = values_[t * m_ + s];
  if (!v) throw InputError("cocycle has no value at (" + std::to_string(t) + ", " + std::to_string(s) + ")");
  return *v;
}

bool Cocycle::is_trivial() const {
  for (const auto& v : values_)
    if (v && *v != 1) return false;
  return true;
}

Cocycle trivial_cocycle(const FiniteCategory& c) {
  const std::size_t m = c.num_morphisms();
  Cocycle a(m);
  for (MorphismId t = 0; t < m; ++t)
    for (MorphismId s = 0; s < m; ++s)
      if (c.composable(t, s)) a.set(t, s, 1);
  return a;
}

ValidationReport validate_cocycle(const FiniteCategory& c, const Cocycle& a) {
  ValidationReport report;
  const std::size_t m = c.num_morphisms();
  if (a.num_morphisms() != m) {
    report.violations.push_back({"size", "cocycle size does not match the category", {}});
    return report;
  }
  for (MorphismId t = 0; t < m; ++t) {
    for (MorphismId s = 0; s < m; ++s) {
      const bool comp = c.composable(t, s);
      if (comp && !a.has(t, s)) {
        report.violations.push_back(
            {"missing value", "no cocycle value at (" + c.name(t) + ", " + c.name(s) + ")", {t, s}});
        return report;
      }
      if (!comp && a.has(t, s)) {
        report.violations.push_back(
            {"non-composable entry", "cocycle value on non-composable pair (" + c.name(t) + ", " + c.name(s) + ")",
             {t, s}});
        return report;
      }
      if (comp && sgn(a.at(t, s)) == 0) {
        report.violations.push_back({"zero value", "cocycle value is zero at (" + c.name(t) + ", " + c.name(s) + ")",
                                     {t, s}});
        return report;
      }
    }
  }
  for (MorphismId u = 0; u < m; ++u) {
    for (MorphismId t = 0; t < m; ++t) {
      const MorphismId ut = c.comp(u, t);
      if (ut == kUndefined) continue;
      for (MorphismId s = 0; s < m; ++s) {
        const MorphismId ts = c.comp(t, s);
        if (ts == kUndefined) continue;
        if (a.at(ut, s) * a.at(u, t) != a.at(u, ts) * a.at(t, s)) {
          report.violations.push_back({"cocycle identity",
                                       "cocycle identity fails at (" + c.name(u) + ", " + c.name(t) + ", " +
                                           c.name(s) + ")",
                                       {u, t, s}});
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace qhcat
