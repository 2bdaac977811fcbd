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

#include "qhcat/category_file.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace qhcat {

namespace {

std::string summarize(const ValidationReport& a, const ValidationReport& b) {
  std::string msg = "validation failed";
  for (const auto* r : {&a, &b})
    for (const auto& v : r->violations) msg += "; " + v.kind + ": " + v.message;
  return msg;
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

enum class Section { kNone, kObjects, kMorphisms, kIdentities, kComp, kCocycle };

}  // namespace

ValidationFailure::ValidationFailure(ValidationReport category, ValidationReport cocycle)
    : InputError(summarize(category, cocycle)), category_(std::move(category)), cocycle_(std::move(cocycle)) {}

CategoryWithCocycle parse_category(const std::string& text) {
  static const std::array<std::pair<const char*, Section>, 5> kHeaders = {{
      {"OBJECTS", Section::kObjects},
      {"MORPHISMS", Section::kMorphisms},
      {"IDENTITIES", Section::kIdentities},
      {"COMP", Section::kComp},
      {"COCYCLE", Section::kCocycle},
  }};
  std::vector<std::string> objects;
  std::map<std::string, ObjectId> object_index;
  std::vector<Morphism> morphisms;
  std::map<std::string, MorphismId> morphism_index;
  std::map<ObjectId, MorphismId> identities;
  std::vector<std::array<MorphismId, 3>> comps;
  std::vector<std::tuple<MorphismId, MorphismId, Rat>> cocycle_entries;
  bool saw_cocycle = false;
  Section section = Section::kNone;
  std::size_t line_no = 0;

  auto object_of = [&](const Token& tok) {
    auto it = object_index.find(tok.text);
    if (it == object_index.end()) throw ParseError(line_no, tok.column, "unknown object '" + tok.text + "'");
    return it->second;
  };
  auto morphism_of = [&](const Token& tok) {
    auto it = morphism_index.find(tok.text);
    if (it == morphism_index.end()) throw ParseError(line_no, tok.column, "unknown morphism '" + tok.text + "'");
    return it->second;
  };
  auto expect_count = [&](const std::vector<Token>& toks, std::size_t n, const char* what) {
    if (toks.size() != n) {
      std::size_t col = toks.size() > n ? toks[n].column : toks.back().column;
      throw ParseError(line_no, col, std::string("expected ") + what);
    }
  };

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    bool header = false;
    for (const auto& [name, sec] : kHeaders) {
      if (toks[0].text != name) continue;
      if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "unexpected token after section header");
      if (static_cast<int>(sec) <= static_cast<int>(section)) {
        throw ParseError(line_no, toks[0].column, std::string("section ") + name + " out of order or repeated");
      }
      section = sec;
      saw_cocycle |= sec == Section::kCocycle;
      header = true;
    }
    if (header) continue;
    switch (section) {
      case Section::kNone:
        throw ParseError(line_no, toks[0].column, "content before the OBJECTS section");
      case Section::kObjects: {
        expect_count(toks, 1, "one object name");
        if (!object_index.try_emplace(toks[0].text, objects.size()).second) {
          throw ParseError(line_no, toks[0].column, "duplicate object '" + toks[0].text + "'");
        }
        objects.push_back(toks[0].text);
        break;
      }
      case Section::kMorphisms: {
        expect_count(toks, 3, "<name> <dom> <cod>");
        if (morphism_index.count(toks[0].text)) {
          throw ParseError(line_no, toks[0].column, "duplicate morphism '" + toks[0].text + "'");
        }
        ObjectId dom = object_of(toks[1]), cod = object_of(toks[2]);
        morphism_index[toks[0].text] = morphisms.size();
        morphisms.push_back({toks[0].text, dom, cod});
        break;
      }
      case Section::kIdentities: {
        expect_count(toks, 2, "<object> <morphism>");
        ObjectId x = object_of(toks[0]);
        MorphismId id = morphism_of(toks[1]);
        if (!identities.try_emplace(x, id).second) {
          throw ParseError(line_no, toks[0].column, "second identity for object '" + toks[0].text + "'");
        }
        break;
      }
      case Section::kComp: {
        expect_count(toks, 3, "<t> <s> <t∘s>");
        comps.push_back({morphism_of(toks[0]), morphism_of(toks[1]), morphism_of(toks[2])});
        break;
      }
      case Section::kCocycle: {
        expect_count(toks, 3, "<t> <s> <p>/<q>");
        MorphismId t = morphism_of(toks[0]), s = morphism_of(toks[1]);
        try {
          cocycle_entries.emplace_back(t, s, parse_rat(toks[2].text));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, toks[2].column, e.what());
        }
        break;
      }
    }
  }
  if (section < Section::kComp) {
    throw ParseError(line_no + 1, 1, "document ends before the COMP section");
  }
  std::vector<MorphismId> ids(objects.size());
  for (ObjectId x = 0; x < objects.size(); ++x) {
    auto it = identities.find(x);
    if (it == identities.end()) throw ParseError(line_no + 1, 1, "object '" + objects[x] + "' has no identity");
    ids[x] = it->second;
  }
  const std::size_t m = morphisms.size();
  std::vector<MorphismId> table(m * m, kUndefined);
  for (const auto& [t, s, r] : comps) {
    MorphismId& slot = table[t * m + s];
    if (slot != kUndefined && slot != r) {
      throw InputError("conflicting COMP entries for (" + morphisms[t].name + ", " + morphisms[s].name + ")");
    }
    slot = r;
  }
  FiniteCategory c(std::move(objects), std::move(morphisms), std::move(ids), std::move(table));
  Cocycle a = saw_cocycle ? Cocycle(m) : trivial_cocycle(c);
  for (auto& [t, s, v] : cocycle_entries) {
    if (a.has(t, s) && a.at(t, s) != v) {
      throw InputError("conflicting COCYCLE entries for (" + c.name(t) + ", " + c.name(s) + ")");
    }
    a.set(t, s, std::move(v));
  }
  return {std::move(c), std::move(a)};
}

std::string format_category(const FiniteCategory& c, const Cocycle& a) {
  std::ostringstream os;
  os << "OBJECTS\n";
  for (const auto& x : c.objects()) os << x << '\n';
  os << "MORPHISMS\n";
  for (const auto& f : c.morphisms()) os << f.name << ' ' << c.objects()[f.dom] << ' ' << c.objects()[f.cod] << '\n';
  os << "IDENTITIES\n";
  for (ObjectId x = 0; x < c.num_objects(); ++x) os << c.objects()[x] << ' ' << c.name(c.identity(x)) << '\n';
  os << "COMP\n";
  const std::size_t m = c.num_morphisms();
  for (MorphismId t = 0; t < m; ++t)
    for (MorphismId s = 0; s < m; ++s)
      if (c.comp(t, s) != kUndefined) os << c.name(t) << ' ' << c.name(s) << ' ' << c.name(c.comp(t, s)) << '\n';
  if (!a.is_trivial()) {
    os << "COCYCLE\n";
    for (MorphismId t = 0; t < m; ++t)
      for (MorphismId s = 0; s < m; ++s)
        if (a.has(t, s)) {
          const Rat& v = a.at(t, s);
          os << c.name(t) << ' ' << c.name(s) << ' ' << v.get_num().get_str() << '/' << v.get_den().get_str() << '\n';
        }
  }
  return os.str();
}

CategoryWithCocycle load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  CategoryWithCocycle cc = parse_category(buf.str());
  ValidationReport cat = validate(cc.category);
  ValidationReport coc = cat.ok() ? validate_cocycle(cc.category, cc.cocycle) : ValidationReport{};
  if (!cat.ok() || !coc.ok()) throw ValidationFailure(std::move(cat), std::move(coc));
  return cc;
}

void save(const FiniteCategory& c, const Cocycle& a, const std::string& path) {
  ValidationReport cat = validate(c);
  ValidationReport coc = cat.ok() ? validate_cocycle(c, a) : ValidationReport{};
  if (!cat.ok() || !coc.ok()) throw ValidationFailure(std::move(cat), std::move(coc));
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << format_category(c, a);
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace qhcat
