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

#ifndef HHARM_EXACT_ARITH_HPP_
#define HHARM_EXACT_ARITH_HPP_

/// @file exact_arith.hpp
/// @brief Exact rational and quadratic-surd arithmetic.
///
/// Every quantity in this library is an exact rational number or a single
/// square root of one. `Rat` is Boost's arbitrary precision rational, which
/// keeps values in lowest terms with a positive denominator. `Surd` holds
/// q*sqrt(d) with d squarefree.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace hharm {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den in lowest terms. The Boost constructor rejects negative
/// denominators, so the sign is moved to the numerator first.
inline Rat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline BigInt numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

/// Falling factorial a(a-1)...(a-k+1); falling(a, 0) == 1.
inline Rat falling(const Rat& a, int k) {
  if (k < 0) throw std::invalid_argument("falling: negative length");
  Rat out(1);
  for (int i = 0; i < k; ++i) out *= a - i;
  return out;
}

/// Rising factorial a(a+1)...(a+k-1); rising(a, 0) == 1.
inline Rat rising(const Rat& a, int k) {
  if (k < 0) throw std::invalid_argument("rising: negative length");
  Rat out(1);
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

inline BigInt factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

/// Generalized binomial falling(t, j) / j!. Zero for j < 0.
inline Rat binom(const Rat& t, int j) {
  if (j < 0) return Rat(0);
  return falling(t, j) / Rat(factorial(j));
}

/// Integer binomial with C(a, b) = 0 unless 0 <= b <= a. In particular
/// C(n, -1) = 0.
inline BigInt binom_int(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

/// n! / prod(parts[i]!). Parts must be nonnegative and sum to n.
inline BigInt multinomial(int n, std::span<const int> parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  BigInt out = 1;
  int used = 0;
  for (int p : parts) {
    used += p;
    out *= binom_int(used, p);
  }
  return out;
}

inline BigInt multinomial(int n, std::initializer_list<int> parts) {
  return multinomial(n, std::span<const int>(parts.begin(), parts.size()));
}

namespace detail {

/// Splits m >= 0 as root^2 * core with core squarefree.
///
/// Trial division runs only while p^3 <= rest; what remains afterwards has
/// at most two prime factors, so it is either a perfect square or
/// squarefree.
inline std::pair<BigInt, BigInt> split_square(BigInt m) {
  if (m < 0) throw std::domain_error("split_square: negative radicand");
  if (m == 0) return {BigInt(0), BigInt(1)};
  BigInt root = 1;
  BigInt core = 1;
  for (BigInt p = 2; p * p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  BigInt r = boost::multiprecision::sqrt(m);
  if (r * r == m) {
    root *= r;
  } else {
    core *= m;
  }
  return {root, core};
}

}  // namespace detail

/// An exact value coefficient * sqrt(radicand).
///
/// Normal form: radicand is squarefree, and zero is stored as 0 * sqrt(1).
/// With that form two Surds are equal iff their fields are equal.
class Surd {
 public:
  Surd() : coeff_(0), radicand_(1) {}
  Surd(const Rat& q) : coeff_(q), radicand_(1) {}  // NOLINT(runtime/explicit)
  Surd(const Rat& q, const BigInt& radicand) : coeff_(q), radicand_(radicand) {
    if (radicand_ < 0) throw std::domain_error("Surd: negative radicand");
    normalize();
  }

  /// sqrt(x) for rational x >= 0, written as (1/den) * sqrt(num * den).
  static Surd sqrt(const Rat& x) {
    if (x < 0) throw std::domain_error("Surd::sqrt: negative argument");
    const BigInt num = numerator_of(x);
    const BigInt den = denominator_of(x);
    Surd out = Surd(Rat(1), num) * Surd(Rat(1), den);
    out.coeff_ /= Rat(den);
    return out;
  }

  const Rat& coefficient() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1; }
  bool is_zero() const { return coeff_ == 0; }

  /// The value as a Rat. Throws if the radicand is not 1.
  const Rat& rational() const {
    if (!is_rational()) throw std::domain_error("Surd::rational: irrational value " + str());
    return coeff_;
  }

  /// coefficient^2 * radicand.
  Rat square() const { return coeff_ * coeff_ * Rat(radicand_); }

  Surd inverse() const {
    if (is_zero()) throw std::domain_error("Surd::inverse: zero");
    Surd out;
    out.coeff_ = Rat(1) / (coeff_ * Rat(radicand_));
    out.radicand_ = radicand_;
    return out;
  }

  /// "q" when rational, "q*sqrt(d)" otherwise.
  std::string str() const {
    if (is_rational()) return to_string(coeff_);
    return to_string(coeff_) + "*sqrt(" + to_string(radicand_) + ")";
  }

  friend Surd operator*(const Surd& a, const Surd& b) {
    // Both radicands are squarefree: with g = gcd, a*b = g^2 (a/g)(b/g) and
    // the cofactors are coprime and squarefree.
    if (a.is_zero() || b.is_zero()) return Surd();
    const BigInt g = boost::multiprecision::gcd(a.radicand_, b.radicand_);
    Surd out;
    out.coeff_ = a.coeff_ * b.coeff_ * Rat(g);
    out.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
    return out;
  }
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }
  friend Surd operator-(const Surd& a) {
    Surd out = a;
    out.coeff_ = -out.coeff_;
    return out;
  }

  /// Defined when the radicands agree or one side is zero.
  friend Surd operator+(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_) {
      throw std::domain_error("Surd: sum of unlike radicals " + a.str() + " + " + b.str());
    }
    Surd out;
    out.coeff_ = a.coeff_ + b.coeff_;
    out.radicand_ = a.radicand_;
    out.normalize();
    return out;
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

 private:
  void normalize() {
    if (coeff_ == 0 || radicand_ == 0) {
      coeff_ = 0;
      radicand_ = 1;
      return;
    }
    auto [root, core] = detail::split_square(radicand_);
    coeff_ *= Rat(root);
    radicand_ = core;
  }

  Rat coeff_;
  BigInt radicand_;
};

inline Surd surd_mul(const Surd& a, const Surd& b) { return a * b; }
inline Rat surd_square(const Surd& a) { return a.square(); }

}  // namespace hharm

#endif  // HHARM_EXACT_ARITH_HPP_
