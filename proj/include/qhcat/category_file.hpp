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

// Line-oriented text format for a category with a cocycle:
//
//   OBJECTS
//   <object-name>
//   MORPHISMS
//   <morphism-name> <dom> <cod>
//   IDENTITIES
//   <object-name> <morphism-name>
//   COMP
//   <t> <s> <t∘s>            one line per composable pair
//   COCYCLE
//   <t> <s> <p>/<q>          one line per composable pair; section
//                            omitted for the trivial cocycle
//
// Names are whitespace-free tokens; '#' starts a comment.

#ifndef QHCAT_CATEGORY_FILE_HPP_
#define QHCAT_CATEGORY_FILE_HPP_

#include <string>

#include "qhcat/errors.hpp"
#include "qhcat/generators.hpp"

namespace qhcat {

// Both validators' findings when a parsed document is not a category with a
// valid cocycle.
class ValidationFailure : public InputError {
 public:
  ValidationFailure(ValidationReport category, ValidationReport cocycle);
  const ValidationReport& category_report() const { return category_; }
  const ValidationReport& cocycle_report() const { return cocycle_; }

 private:
  ValidationReport category_;
  ValidationReport cocycle_;
};

// Syntax only: throws ParseError (with line and column) on malformed text
// but performs no axiom checks. A missing COCYCLE section yields the
// trivial cocycle.
CategoryWithCocycle parse_category(const std::string& text);
std::string format_category(const FiniteCategory& c, const Cocycle& a);

// parse_category + both validators; throws ValidationFailure.
CategoryWithCocycle load(const std::string& path);
// Throws ValidationFailure on invalid input, InputError on IO failure.
void save(const FiniteCategory& c, const Cocycle& a, const std::string& path);

}  // namespace qhcat

#endif  // QHCAT_CATEGORY_FILE_HPP_
