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

#include "qhcat/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace qhcat {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }
Poly Poly::x() { return Poly({0, 1}); }
Poly Poly::linear(const Rat& root) { return Poly({-root, 1}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return inv * *this;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Mat Poly::eval(const Mat& m) const {
  if (!m.square()) throw std::invalid_argument("Poly::eval: non-square matrix");
  Mat acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + *it * Mat::identity(m.rows());
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  std::vector<Rat> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quot(a.degree() - db + 1);
  Rat inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rat f = rem[k] * inv;
    quot[k - db] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& p, int e) {
  Poly out = Poly::constant(1);
  for (int k = 0; k < e; ++k) out = out * p;
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

Poly min_poly(const Mat& op) {
  if (!op.square()) throw std::invalid_argument("min_poly: non-square matrix");
  const std::size_t n = op.rows();
  // Echelon rows over vec(op^k), each tagged with the combination of powers
  // that produced it; the first power that reduces to zero yields the
  // minimal polynomial.
  struct Row {
    Vec v;
    std::size_t pivot;
    Vec combo;
  };
  std::vector<Row> rows;
  Mat power = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = power(r, c);
    Vec combo(k + 1);
    combo[k] = 1;
    for (const Row& row : rows) {
      if (sgn(v[row.pivot]) == 0) continue;
      Rat f = v[row.pivot] / row.v[row.pivot];
      for (std::size_t c = row.pivot; c < v.size(); ++c) {
        if (sgn(row.v[c]) != 0) v[c] -= f * row.v[c];
      }
      for (std::size_t c = 0; c < row.combo.size(); ++c) combo[c] -= f * row.combo[c];
    }
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) return Poly(std::move(combo)).monic();
    rows.push_back({std::move(v), p, std::move(combo)});
    power = power * op;
  }
  throw ConsistencyError("min_poly: no dependency found within degree n");
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Primitive integer polynomial with positive leading coefficient, same roots.
ZPoly to_primitive(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  ZPoly z;
  for (const auto& c : p.coeffs()) {
    Rat scaled = c * lcm_den;
    z.push_back(scaled.get_num());
  }
  mpz_class content = 0;
  for (const auto& c : z) content = gcd(content, c);
  if (content != 0) {
    if (z.back() < 0) content = -content;
    for (auto& c : z) c /= content;
  }
  return z;
}

Poly from_z(const ZPoly& z) {
  std::vector<Rat> c;
  for (const auto& x : z) c.emplace_back(x);
  return Poly(std::move(c));
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Rat> find_rational_root(const Poly& p) {
  ZPoly z = to_primitive(p);
  if (z.empty()) return std::nullopt;
  if (z[0] == 0) return Rat(0);
  for (const auto& num : positive_divisors(z.front())) {
    for (const auto& den : positive_divisors(z.back())) {
      for (int sign : {1, -1}) {
        Rat cand(num * sign, den);
        cand.canonicalize();
        if (sgn(p.eval(cand)) == 0) return cand;
      }
    }
  }
  return std::nullopt;
}

Poly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Poly basis = Poly::constant(ys[j]);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == j) continue;
      basis = basis * (Rat(1) / (xs[j] - xs[k]) * Poly::linear(xs[k]));
    }
    out = out + basis;
  }
  return out;
}

bool integral(const Poly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rat& c) { return c.get_den() == 1; });
}

// A nontrivial factor of degree `d` of the primitive square-free `f`, if any.
std::optional<Poly> kronecker_factor(const Poly& f, int d) {
  std::vector<std::pair<mpz_class, long>> samples;
  for (long a = -24; a <= 24; ++a) {
    Rat v = f.eval(Rat(a));
    if (sgn(v) == 0) continue;
    samples.emplace_back(abs(v.get_num()), a);
  }
  std::sort(samples.begin(), samples.end());
  if (samples.size() < static_cast<std::size_t>(d + 1)) return std::nullopt;
  samples.resize(d + 1);
  std::vector<Rat> xs;
  std::vector<std::vector<mpz_class>> choices;
  for (const auto& [val, a] : samples) {
    xs.emplace_back(a);
    std::vector<mpz_class> ds;
    for (const auto& dv : positive_divisors(val)) {
      ds.push_back(dv);
      ds.push_back(-dv);
    }
    choices.push_back(std::move(ds));
  }
  // Only positive values at the first sample: g and -g are the same factor.
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Rat> ys(choices.size());
  while (true) {
    bool skip = sgn(choices[0][idx[0]]) < 0;
    if (!skip) {
      for (std::size_t j = 0; j < choices.size(); ++j) ys[j] = Rat(choices[j][idx[j]]);
      Poly g = lagrange(xs, ys);
      if (g.degree() == d && integral(g)) {
        auto [q, r] = divmod(f, g);
        if (r.is_zero() && integral(q)) return g;
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return std::nullopt;
}

// Irreducible factors of a primitive square-free polynomial with no
// rational roots.
void factor_no_roots(const Poly& f, int max_degree, std::vector<Poly>& out) {
  if (f.degree() <= 3) {
    out.push_back(f.monic());
    return;
  }
  if (f.degree() > max_degree) {
    throw InstanceTooLarge("factor_rational: residual factor of degree " + std::to_string(f.degree()) +
                           " exceeds the Kronecker search bound " + std::to_string(max_degree));
  }
  for (int d = 2; d <= f.degree() / 2; ++d) {
    if (auto g = kronecker_factor(f, d)) {
      Poly q = divmod(f, *g).first;
      factor_no_roots(from_z(to_primitive(*g)), max_degree, out);
      factor_no_roots(from_z(to_primitive(q)), max_degree, out);
      return;
    }
  }
  out.push_back(f.monic());
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  }
  return false;
}

}  // namespace

std::vector<Factor> factor_rational(const Poly& p, int max_search_degree) {
  if (p.degree() < 1) throw std::invalid_argument("factor_rational: degree must be at least 1");
  // Yun's square-free decomposition.
  std::vector<std::pair<Poly, int>> squarefree;
  Poly f = p.monic();
  Poly a = gcd(f, f.derivative());
  Poly b = divmod(f, a).first;
  Poly c = divmod(f.derivative(), a).first;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly ai = gcd(b, d);
    Poly next_b = divmod(b, ai).first;
    Poly ci = divmod(d, ai).first;
    d = ci - next_b.derivative();
    b = std::move(next_b);
    if (ai.degree() > 0) squarefree.emplace_back(std::move(ai), i);
  }
  std::vector<Factor> out;
  for (auto& [part, mult] : squarefree) {
    Poly rest = part;
    while (rest.degree() >= 1) {
      auto root = find_rational_root(rest);
      if (!root) break;
      out.push_back({Poly::linear(*root), mult});
      rest = divmod(rest, Poly::linear(*root)).first;
    }
    if (rest.degree() >= 1) {
      std::vector<Poly> irreducibles;
      factor_no_roots(from_z(to_primitive(rest)), max_search_degree, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return poly_less(x.poly, y.poly); });
  return out;
}

}  // namespace qhcat
