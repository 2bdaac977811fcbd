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

#include "qhcat/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace qhcat {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash || !digit_before) throw std::invalid_argument("malformed rational '" + text + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rat r;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Mat::is_zero() const { return qhcat::is_zero(data_); }

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rat& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat *: shape mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& y = b(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Rref rref(Mat m) {
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) swap(m(p, k), m(lead_row, k));
    }
    Rat inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Rat determinant(Mat m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec v(n);
    v[k] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(k);
  }
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vec>& vectors) {
  Subspace s(n);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::span(const Mat& rows) {
  Rref r = rref(rows);
  Subspace s(rows.cols());
  for (std::size_t k = 0; k < r.rank; ++k) {
    auto row = r.reduced.row(k);
    s.rows_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::coordinate(std::size_t n, std::span<const std::size_t> coords) {
  std::vector<std::size_t> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(n);
  for (std::size_t k : sorted) {
    if (k >= n) throw std::out_of_range("coordinate subspace index");
    Vec v(n);
    v[k] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(k);
  }
  return s;
}

Mat Subspace::basis() const { return Mat::from_rows(rows_, ambient_); }

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    Rat f = v[p];
    const Vec& row = rows_[k];
    for (std::size_t c = p; c < ambient_; ++c) {
      if (sgn(row[c]) != 0) v[c] -= f * row[c];
    }
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  Rat inv = 1 / v[p];
  for (std::size_t c = p; c < ambient_; ++c) v[c] *= inv;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rat f = row[p];
    for (std::size_t c = p; c < ambient_; ++c) {
      if (sgn(v[c]) != 0) row[c] -= f * v[c];
    }
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool Subspace::contains(std::span<const Rat> v) const {
  return qhcat::is_zero(reduce(Vec(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(other);
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(std::span<const Rat> v) const {
  if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  Vec out(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) out[k] = v[pivots_[k]];
  return out;
}

void Subspace::check_same_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_same_ambient(other);
  Subspace out = *this;
  for (const auto& v : other.rows_) out.insert(v);
  return out;
}

// Zassenhaus: row-reduce [[A, A], [B, 0]]; the rows whose left half vanishes
// carry a basis of the intersection in their right half.
Subspace Subspace::intersect(const Subspace& other) const {
  check_same_ambient(other);
  const std::size_t n = ambient_;
  Mat big(rows_.size() + other.rows_.size(), 2 * n);
  std::size_t r = 0;
  for (const auto& v : rows_) {
    for (std::size_t c = 0; c < n; ++c) big(r, c) = big(r, n + c) = v[c];
    ++r;
  }
  for (const auto& v : other.rows_) {
    for (std::size_t c = 0; c < n; ++c) big(r, c) = v[c];
    ++r;
  }
  Rref red = rref(std::move(big));
  Subspace out(n);
  for (std::size_t k = 0; k < red.rank; ++k) {
    if (red.pivots[k] < n) continue;
    auto row = red.reduced.row(k);
    out.insert(Vec(row.begin() + n, row.end()));
  }
  return out;
}

Subspace nullspace(const Mat& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Subspace out(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, free);
    out.insert(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Rref red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, m.cols());
  return x;
}

}  // namespace qhcat
