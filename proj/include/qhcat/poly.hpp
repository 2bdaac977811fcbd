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

#ifndef QHCAT_POLY_HPP_
#define QHCAT_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "qhcat/errors.hpp"
#include "qhcat/exactla.hpp"

namespace qhcat {

// Univariate polynomial over Q, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly x();
  // x - root
  static Poly linear(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;
  Mat eval(const Mat& m) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, int e);
std::string to_string(const Poly& p);

// Monic polynomial of least degree annihilating the square matrix `op`.
Poly min_poly(const Mat& op);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity = 1;
};

inline constexpr int kDefaultKroneckerDegree = 12;

// Irreducible factorization over Q: square-free decomposition, rational
// roots, then Kronecker's interpolation search on whatever remains. Factors
// are monic and sorted by (degree, coefficients). Throws InstanceTooLarge
// when a residual factor without rational roots exceeds `max_search_degree`.
std::vector<Factor> factor_rational(const Poly& p, int max_search_degree = kDefaultKroneckerDegree);

}  // namespace qhcat

#endif  // QHCAT_POLY_HPP_
