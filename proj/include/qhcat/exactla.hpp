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

// Exact rational linear algebra: dense matrices, reduced row-echelon forms,
// and subspaces kept in canonical (RREF) form. No floating point anywhere.

#ifndef QHCAT_EXACTLA_HPP_
#define QHCAT_EXACTLA_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhcat {

// GMP rationals are always kept canonical: lowest terms, positive
// denominator, zero as 0/1.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Parses "p", "-p" or "p/q" and canonicalizes. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

bool is_zero(std::span<const Rat> v);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  bool is_zero() const;
  Mat transpose() const;
  Vec apply(std::span<const Rat> v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::string to_string(const Mat& m);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(Mat m);
std::size_t rank(const Mat& m);
Rat determinant(Mat m);

// A linear subspace of Q^n held as its unique reduced row-echelon basis, so
// that two subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vec>& vectors);
  static Subspace span(const Mat& rows);
  // Span of the standard basis vectors e_k for k in `coords`.
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> coords);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  const std::vector<Vec>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat basis() const;

  // Adds v to the spanning set; returns true if the dimension grew.
  bool insert(Vec v);
  // v minus its projection along the pivot columns; zero iff v is a member.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of a member v with respect to basis_rows().
  Vec coordinates(std::span<const Rat> v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void check_same_ambient(const Subspace& other) const;

  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Kernel {v : m v = 0}.
Subspace nullspace(const Mat& m);
// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Rat> b);

}  // namespace qhcat

#endif  // QHCAT_EXACTLA_HPP_
