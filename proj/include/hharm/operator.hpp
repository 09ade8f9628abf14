// Copyright 2026 The hharm Authors.
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

#ifndef HHARM_OPERATOR_HPP_
#define HHARM_OPERATOR_HPP_

/// @file operator.hpp
/// @brief Dense exact rational matrices tagged with their levels.
///
/// An Operator is stored as an integer matrix over one common denominator,
/// kept in canonical form (den > 0, gcd of den and all entries is 1). That
/// makes equality structural and keeps products in integer arithmetic.
/// Products use 64-bit operands with 128-bit accumulators whenever the bit
/// lengths allow it, and fall back to arbitrary precision otherwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hharm/exact_arith.hpp"

namespace hharm {

/// Which space an Operator acts on: the level L^2(X_r) or all of L^2(X).
struct Level {
  static constexpr int kFull = -1;
  int r = kFull;

  static constexpr Level full() { return Level{}; }
  static constexpr Level at(int r) { return Level{r}; }
  constexpr bool is_full() const { return r == kFull; }
  friend constexpr bool operator==(Level, Level) = default;
};

inline std::string to_string(Level l) { return l.is_full() ? "FULL" : "X_" + std::to_string(l.r); }

namespace detail {

inline unsigned bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

inline unsigned max_bit_length(const std::vector<BigInt>& v) {
  unsigned out = 0;
  for (const BigInt& x : v) {
    if (x != 0) out = std::max(out, bit_length(x));
  }
  return out;
}

inline unsigned bit_length(std::size_t x) {
  unsigned out = 0;
  while (x != 0) {
    ++out;
    x >>= 1;
  }
  return out;
}

inline BigInt from_int128(__int128 x) { return BigInt(x); }

}  // namespace detail

class Operator {
 public:
  /// Zero operator.
  Operator(Level domain, Level codomain, std::size_t rows, std::size_t cols)
      : domain_(domain), codomain_(codomain), rows_(rows), cols_(cols), num_(rows * cols),
        den_(1) {}

  /// entries[i * cols + j] / den.
  static Operator from_scaled(Level domain, Level codomain, std::size_t rows, std::size_t cols,
                              std::vector<BigInt> entries, BigInt den) {
    if (entries.size() != rows * cols) throw std::invalid_argument("Operator: entry count mismatch");
    if (den == 0) throw std::domain_error("Operator: zero denominator");
    Operator out(domain, codomain, 0, 0);
    out.rows_ = rows;
    out.cols_ = cols;
    out.num_ = std::move(entries);
    out.den_ = std::move(den);
    out.normalize();
    return out;
  }

  static Operator from_rationals(Level domain, Level codomain, std::size_t rows,
                                 std::size_t cols, const std::vector<Rat>& entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("Operator: entry count mismatch");
    BigInt den = 1;
    for (const Rat& q : entries) den = boost::multiprecision::lcm(den, denominator_of(q));
    std::vector<BigInt> num(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      num[i] = numerator_of(entries[i]) * (den / denominator_of(entries[i]));
    }
    return from_scaled(domain, codomain, rows, cols, std::move(num), std::move(den));
  }

  static Operator identity(Level level, std::size_t dim) {
    Operator out(level, level, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) out.num_[i * dim + i] = 1;
    return out;
  }

  Level domain() const { return domain_; }
  Level codomain() const { return codomain_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat at(std::size_t row, std::size_t col) const { return make_rat(num_[row * cols_ + col], den_); }
  const BigInt& scaled_entry(std::size_t row, std::size_t col) const {
    return num_[row * cols_ + col];
  }
  const std::vector<BigInt>& scaled_entries() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const {
    for (const BigInt& x : num_) {
      if (x != 0) return false;
    }
    return true;
  }

  Operator transpose() const {
    Operator out(codomain_, domain_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.num_[j * rows_ + i] = num_[i * cols_ + j];
    }
    out.den_ = den_;
    return out;
  }

  Operator scaled(const Rat& q) const {
    if (q == 0) return Operator(domain_, codomain_, rows_, cols_);
    const BigInt qn = numerator_of(q);
    std::vector<BigInt> num(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * qn;
    return from_scaled(domain_, codomain_, rows_, cols_, std::move(num),
                       den_ * denominator_of(q));
  }

  Rat trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Operator::trace: not square");
    BigInt sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) sum += num_[i * cols_ + i];
    return make_rat(sum, den_);
  }

  friend Operator operator+(const Operator& a, const Operator& b) {
    require_same_shape(a, b, "operator+");
    const BigInt l = boost::multiprecision::lcm(a.den_, b.den_);
    const BigInt ma = l / a.den_;
    const BigInt mb = l / b.den_;
    std::vector<BigInt> num(a.num_.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * ma + b.num_[i] * mb;
    return from_scaled(a.domain_, a.codomain_, a.rows_, a.cols_, std::move(num), l);
  }

  friend Operator operator-(const Operator& a) { return a.scaled(Rat(-1)); }
  friend Operator operator-(const Operator& a, const Operator& b) { return a + (-b); }

  /// outer o inner: first inner, then outer.
  friend Operator compose(const Operator& outer, const Operator& inner) {
    if (outer.domain_ != inner.codomain_ || outer.cols_ != inner.rows_) {
      throw std::invalid_argument("compose: " + to_string(inner.domain_) + "->" +
                                  to_string(inner.codomain_) + " then " +
                                  to_string(outer.domain_) + "->" + to_string(outer.codomain_));
    }
    const std::size_t rows = outer.rows_, mid = outer.cols_, cols = inner.cols_;
    std::vector<BigInt> num(rows * cols);
    const unsigned bits_a = detail::max_bit_length(outer.num_);
    const unsigned bits_b = detail::max_bit_length(inner.num_);
    if (bits_a <= 62 && bits_b <= 62 && bits_a + bits_b + detail::bit_length(mid) <= 125) {
      compose_small(outer, inner, num);
    } else {
      compose_big(outer, inner, num);
    }
    return from_scaled(inner.domain_, outer.codomain_, rows, cols, std::move(num),
                       outer.den_ * inner.den_);
  }
  friend Operator operator*(const Operator& outer, const Operator& inner) {
    return compose(outer, inner);
  }

  /// Canonical form makes equality structural.
  friend bool operator==(const Operator& a, const Operator& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Hilbert-Schmidt inner product tr(a b*) = sum of entrywise products.
  friend Rat hs_inner(const Operator& a, const Operator& b) {
    require_same_shape(a, b, "hs_inner");
    const unsigned bits_a = detail::max_bit_length(a.num_);
    const unsigned bits_b = detail::max_bit_length(b.num_);
    BigInt sum = 0;
    if (bits_a <= 62 && bits_b <= 62 && bits_a + bits_b + detail::bit_length(a.num_.size()) <= 125) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0 || b.num_[i] == 0) continue;
        acc += static_cast<__int128>(static_cast<std::int64_t>(a.num_[i])) *
               static_cast<std::int64_t>(b.num_[i]);
      }
      sum = detail::from_int128(acc);
    } else {
      for (std::size_t i = 0; i < a.num_.size(); ++i) sum += a.num_[i] * b.num_[i];
    }
    return make_rat(sum, a.den_ * b.den_);
  }

 private:
  static void require_same_shape(const Operator& a, const Operator& b, const char* what) {
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_ || a.rows_ != b.rows_ ||
        a.cols_ != b.cols_) {
      throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }
  }

  // Nonzero pattern of `inner` by row, so sparse factors (permutations,
  // incidence matrices, the Laplacian) cost only their nonzeros.
  template <class Value, class Convert>
  static void row_lists(const Operator& m, std::vector<std::size_t>& start,
                        std::vector<std::size_t>& index, std::vector<Value>& value,
                        Convert convert) {
    start.assign(m.rows_ + 1, 0);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        const BigInt& x = m.num_[i * m.cols_ + j];
        if (x == 0) continue;
        index.push_back(j);
        value.push_back(convert(x));
      }
      start[i + 1] = index.size();
    }
  }

  static void compose_small(const Operator& outer, const Operator& inner, std::vector<BigInt>& out) {
    const std::size_t rows = outer.rows_, mid = outer.cols_, cols = inner.cols_;
    std::vector<std::int64_t> a(outer.num_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::int64_t>(outer.num_[i]);
    std::vector<std::size_t> start, index;
    std::vector<std::int64_t> value;
    row_lists<std::int64_t>(inner, start, index, value,
                            [](const BigInt& x) { return static_cast<std::int64_t>(x); });
    std::vector<__int128> acc(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t k = 0; k < mid; ++k) {
        const std::int64_t x = a[i * mid + k];
        if (x == 0) continue;
        for (std::size_t e = start[k]; e < start[k + 1]; ++e) {
          acc[index[e]] += static_cast<__int128>(x) * value[e];
          any = true;
        }
      }
      if (!any) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (acc[j] != 0) out[i * cols + j] = detail::from_int128(acc[j]);
      }
    }
  }

  static void compose_big(const Operator& outer, const Operator& inner, std::vector<BigInt>& out) {
    const std::size_t rows = outer.rows_, mid = outer.cols_, cols = inner.cols_;
    std::vector<std::size_t> start, index;
    std::vector<BigInt> value;
    row_lists<BigInt>(inner, start, index, value, [](const BigInt& x) { return x; });
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < mid; ++k) {
        const BigInt& x = outer.num_[i * mid + k];
        if (x == 0) continue;
        for (std::size_t e = start[k]; e < start[k + 1]; ++e) out[i * cols + index[e]] += x * value[e];
      }
    }
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (BigInt& x : num_) x = -x;
    }
    BigInt g = den_;
    bool all_zero = true;
    for (const BigInt& x : num_) {
      if (x == 0) continue;
      all_zero = false;
      if (g != 1) g = boost::multiprecision::gcd(g, x);
    }
    if (all_zero) {
      den_ = 1;
      return;
    }
    if (g == 1) return;
    den_ /= g;
    for (BigInt& x : num_) {
      if (x != 0) x /= g;
    }
  }

  Level domain_;
  Level codomain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> num_;
  BigInt den_;
};

/// First entry where a and b differ, with both values.
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  Rat lhs;
  Rat rhs;
};

inline std::optional<Mismatch> first_mismatch(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.domain() != b.domain() ||
      a.codomain() != b.codomain()) {
    throw std::invalid_argument("first_mismatch: shape mismatch");
  }
  if (a == b) return std::nullopt;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.scaled_entry(i, j) * b.denominator() != b.scaled_entry(i, j) * a.denominator()) {
        return Mismatch{i, j, a.at(i, j), b.at(i, j)};
      }
    }
  }
  return std::nullopt;
}

/// The c with a == c * b, if one exists (b == 0 requires a == 0, giving 0).
inline std::optional<Rat> proportionality(const Operator& a, const Operator& b) {
  const auto& bn = b.scaled_entries();
  for (std::size_t i = 0; i < bn.size(); ++i) {
    if (bn[i] == 0) continue;
    const Rat c = make_rat(a.scaled_entries()[i] * b.denominator(), bn[i] * a.denominator());
    if (a == b.scaled(c)) return c;
    return std::nullopt;
  }
  if (a.is_zero()) return Rat(0);
  return std::nullopt;
}

}  // namespace hharm

#endif  // HHARM_OPERATOR_HPP_
