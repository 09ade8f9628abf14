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

#ifndef HHARM_SPECIAL_POLYS_HPP_
#define HHARM_SPECIAL_POLYS_HPP_

/// @file special_polys.hpp
/// @brief Hahn kernels, Krawtchouk polynomials and the orbit weight.
///
/// The kernel lambda_s^{r1,r2}(t, n) is the common value of the matrix of
/// the basis operator Lambda_s^{r1,r2} on the orbit |x2 \ x1| = t. It is a
/// polynomial of degree s in t, normalized by lambda(0) = 1. Three closed
/// forms are provided (discrete Taylor, Radon lift, Rodrigues) plus the two
/// binomial-ratio forms that only make sense on the integer window. They are
/// independent routes to the same polynomial and are cross-checked in the
/// test suites.
///
/// Hahn-parameter correspondence, for readers coming from the orthogonal
/// polynomial literature: the kernel is a Hahn polynomial with
/// N = N(r1,r2) + 1, mu = |r1 - r2|, nu = |n - r1 - r2|. Nothing here
/// depends on that convention.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hharm/exact_arith.hpp"

namespace hharm {

/// N(r1, r2) = min(r1, n - r1, r2, n - r2).
constexpr int usual_rank(int n, int r1, int r2) {
  return std::min({r1, n - r1, r2, n - r2});
}

/// A validated (n, r1, r2, s) with 0 <= r1, r2 <= n and 0 <= s <= N(r1, r2).
class ParamTriple {
 public:
  ParamTriple(int n, int r1, int r2, int s) : n_(n), r1_(r1), r2_(r2), s_(s) {
    if (!valid(n, r1, r2, s)) {
      throw std::invalid_argument("invalid parameters (n=" + std::to_string(n) +
                                  ", r1=" + std::to_string(r1) + ", r2=" + std::to_string(r2) +
                                  ", s=" + std::to_string(s) + ")");
    }
  }

  static constexpr bool valid(int n, int r1, int r2, int s) {
    return n >= 0 && r1 >= 0 && r1 <= n && r2 >= 0 && r2 <= n && s >= 0 &&
           s <= usual_rank(n, r1, r2);
  }

  int n() const { return n_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  int s() const { return s_; }

  /// Orbit window max(0, r2 - r1) <= k <= min(n - r1, r2).
  int k_min() const { return std::max(0, r2_ - r1_); }
  int k_max() const { return std::min(n_ - r1_, r2_); }

  std::string str() const {
    return "(n=" + std::to_string(n_) + ", r1=" + std::to_string(r1_) +
           ", r2=" + std::to_string(r2_) + ", s=" + std::to_string(s_) + ")";
  }

  friend auto operator<=>(const ParamTriple&, const ParamTriple&) = default;

 private:
  int n_;
  int r1_;
  int r2_;
  int s_;
};

/// All valid triples for ground-set size n, ordered by (r1, r2, s).
inline std::vector<ParamTriple> valid_triples(int n) {
  std::vector<ParamTriple> out;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) {
      for (int s = 0; s <= usual_rank(n, r1, r2); ++s) out.emplace_back(n, r1, r2, s);
    }
  }
  return out;
}

/// mu_s(n) = s(n - s + 1), minus the Laplacian eigenvalue on the s-th
/// isotypic component.
inline BigInt laplacian_mu(int s, int n) { return BigInt(s) * (n - s + 1); }

/// Discrete Taylor form:
///   sum_j (-1)^j C(t,j) [s]_j [n-s+1]_j / ([n-r1]_j [r2]_j).
inline Rat hahn_taylor(const ParamTriple& p, const Rat& t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  Rat sum(0);
  for (int j = 0; j <= s; ++j) {
    Rat term = binom(t, j) * falling(Rat(s), j) * falling(Rat(n - s + 1), j) /
               (falling(Rat(n - r1), j) * falling(Rat(r2), j));
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// Radon-lift form: lift the level-s kernel to level r2 by counting the
/// s-subsets of x2 that meet x2 \ x1 in j points, then normalize at t = 0.
/// The level-s kernel ratio is (-1)^j (r1-s+1)_j / [n-r1]_j.
inline Rat hahn_radon(const ParamTriple& p, const Rat& t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  Rat sum(0);
  for (int j = 0; j <= s; ++j) {
    Rat base_ratio = rising(Rat(r1 - s + 1), j) / falling(Rat(n - r1), j);
    if (j % 2 == 1) base_ratio = -base_ratio;
    sum += binom(t, j) * binom(Rat(r2) - t, s - j) * base_ratio;
  }
  return sum / Rat(binom_int(r2, s));
}

/// Newton expansion of the Rodrigues formula:
///   sum_j (-1)^j C(s,j) [t]_j [r2-t]_{s-j} [r1-r2+t]_j [n-r1-t]_{s-j}
///   / ([n-r1]_s [r2]_s).
inline Rat hahn_rodrigues(const ParamTriple& p, const Rat& t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  Rat sum(0);
  for (int j = 0; j <= s; ++j) {
    Rat term = Rat(binom_int(s, j)) * falling(t, j) * falling(Rat(r2) - t, s - j) *
               falling(Rat(r1 - r2) + t, j) * falling(Rat(n - r1) - t, s - j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum / (falling(Rat(n - r1), s) * falling(Rat(r2), s));
}

enum class ClassicalForm { first, second };

/// The two binomial-ratio expressions, defined only on the integer window.
inline Rat hahn_classical(const ParamTriple& p, int k, ClassicalForm form) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  if (k < p.k_min() || k > p.k_max()) {
    throw std::out_of_range("hahn_classical: k=" + std::to_string(k) + " outside window of " +
                            p.str());
  }
  BigInt sum = 0;
  Rat prefactor;
  BigInt denom;
  if (form == ClassicalForm::first) {
    for (int j = 0; j <= s; ++j) {
      BigInt term = binom_int(s, j) * binom_int(r1 - s, r1 - r2 + k - j) *
                    binom_int(n - r1 - s, k - j);
      sum += (j % 2 == 0) ? term : BigInt(-term);
    }
    prefactor = falling(Rat(r1), s) / falling(Rat(r2), s);
    denom = binom_int(r1, r1 - r2 + k) * binom_int(n - r1, k);
  } else {
    for (int j = 0; j <= s; ++j) {
      BigInt term = binom_int(s, j) * binom_int(r2 - s, k - j) *
                    binom_int(n - r2 - s, r1 - r2 + k - j);
      sum += (j % 2 == 0) ? term : BigInt(-term);
    }
    prefactor = falling(Rat(n - r2), s) / falling(Rat(n - r1), s);
    denom = binom_int(r2, k) * binom_int(n - r2, r1 - r2 + k);
  }
  return prefactor * make_rat(sum, denom);
}

/// Right-hand side of the lowering relation
///   Delta lambda_s^{r1,r2}(t, n) = -s(n-s+1)/(r2(n-r1)) lambda_{s-1}^{r1-1,r2-1}(t, n-2).
inline Rat hahn_delta(const ParamTriple& p, const Rat& t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  if (s == 0) throw std::invalid_argument("hahn_delta: requires s >= 1, got " + p.str());
  const ParamTriple lowered(n - 2, r1 - 1, r2 - 1, s - 1);
  return -make_rat(laplacian_mu(s, n), BigInt(r2) * (n - r1)) * hahn_taylor(lowered, t);
}

/// Coefficient of t^s: (-1)^s [n-s+1]_s / ([n-r1]_s [r2]_s).
inline Rat hahn_leading(const ParamTriple& p) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  Rat out = falling(Rat(n - s + 1), s) / (falling(Rat(n - r1), s) * falling(Rat(r2), s));
  return (s % 2 == 0) ? out : Rat(-out);
}

/// Kernel values on the integer window, evaluated with the Taylor form.
class KernelTable {
 public:
  explicit KernelTable(const ParamTriple& p) : params_(p) {
    values_.reserve(static_cast<std::size_t>(p.k_max() - p.k_min() + 1));
    for (int k = p.k_min(); k <= p.k_max(); ++k) values_.push_back(hahn_taylor(p, Rat(k)));
  }

  const ParamTriple& params() const { return params_; }
  int k_min() const { return params_.k_min(); }
  int k_max() const { return params_.k_max(); }
  const std::vector<Rat>& values() const { return values_; }

  const Rat& at(int k) const {
    if (k < k_min() || k > k_max()) {
      throw std::out_of_range("KernelTable: k=" + std::to_string(k) + " outside window");
    }
    return values_[static_cast<std::size_t>(k - k_min())];
  }

 private:
  ParamTriple params_;
  std::vector<Rat> values_;
};

/// Krawtchouk polynomial P_m(k, n) = sum_j (-1)^j C(k,j) C(n-k, m-j).
inline Rat krawtchouk(int m, const Rat& k, int n) {
  if (m < 0 || m > n) throw std::invalid_argument("krawtchouk: need 0 <= m <= n");
  Rat sum(0);
  for (int j = 0; j <= m; ++j) {
    Rat term = binom(k, j) * binom(Rat(n) - k, m - j);
    sum += (j % 2 == 0) ? term : Rat(-term);
  }
  return sum;
}

/// Integer-argument Krawtchouk value via integer binomials.
inline BigInt krawtchouk_int(int m, int k, int n) {
  if (m < 0 || m > n) throw std::invalid_argument("krawtchouk: need 0 <= m <= n");
  if (k < 0 || k > n) return numerator_of(krawtchouk(m, Rat(k), n));
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    BigInt term = binom_int(k, j) * binom_int(n - k, m - j);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

/// Orbit weight: the multinomial n! / (k! (r2-k)! (r1-r2+k)! (n-r1-k)!) on
/// the lattice, and 0 wherever one of the parts is negative (the poles of
/// the Gamma-function form).
inline BigInt weight(int n, int r1, int r2, int k) {
  const int parts[] = {k, r2 - k, r1 - r2 + k, n - r1 - k};
  for (int part : parts) {
    if (part < 0) return 0;
  }
  return multinomial(n, parts);
}

/// sigma(t) = t (r1 - r2 + t).
inline Rat hyper_sigma(int r1, int r2, const Rat& t) { return t * (Rat(r1 - r2) + t); }
/// tau(t) = r2 (n - r1) - n t.
inline Rat hyper_tau(int n, int r1, int r2, const Rat& t) {
  return Rat(BigInt(r2) * (n - r1)) - Rat(n) * t;
}

/// sigma Delta Nabla h + tau Delta h + mu h at t, for h the Taylor kernel.
inline Rat hypergeometric_residual(const ParamTriple& p, const Rat& t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2();
  const Rat h_prev = hahn_taylor(p, t - 1);
  const Rat h = hahn_taylor(p, t);
  const Rat h_next = hahn_taylor(p, t + 1);
  const Rat delta_nabla = h_next - 2 * h + h_prev;
  const Rat delta = h_next - h;
  return hyper_sigma(r1, r2, t) * delta_nabla + hyper_tau(n, r1, r2, t) * delta +
         Rat(laplacian_mu(p.s(), n)) * h;
}

/// Both sides of the Rodrigues formula at an integer point:
///   omega^{r1,r2}(t,n) lambda(t,n)
///   = [n]_{2s} / ([n-r1]_s [r2]_s) * Nabla^s omega^{r1-s,r2-s}(t, n-2s),
/// with Nabla^s expanded as sum_j (-1)^j C(s,j) f(t - j).
inline std::pair<Rat, Rat> rodrigues_check(const ParamTriple& p, int t) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  const Rat lhs = Rat(weight(n, r1, r2, t)) * hahn_taylor(p, Rat(t));
  BigInt nabla = 0;
  for (int j = 0; j <= s; ++j) {
    BigInt term = binom_int(s, j) * weight(n - 2 * s, r1 - s, r2 - s, t - j);
    nabla += (j % 2 == 0) ? term : BigInt(-term);
  }
  const Rat rhs = falling(Rat(n), 2 * s) / (falling(Rat(n - r1), s) * falling(Rat(r2), s)) *
                  Rat(nabla);
  return {lhs, rhs};
}

/// Delta(omega sigma)(t) and omega(t) tau(t) at an integer point.
inline std::pair<BigInt, BigInt> weight_difference_identity(int n, int r1, int r2, int t) {
  const BigInt here = weight(n, r1, r2, t) * BigInt(t) * (r1 - r2 + t);
  const BigInt next = weight(n, r1, r2, t + 1) * BigInt(t + 1) * (r1 - r2 + t + 1);
  const BigInt rhs = weight(n, r1, r2, t) * (BigInt(r2) * (n - r1) - BigInt(n) * t);
  return {next - here, rhs};
}

/// delta(omega sigma)(t) = omega(t+1) sigma(t+1) and
/// n(n-1) omega^{r1-1,r2-1}(t, n-2) at an integer point.
inline std::pair<BigInt, BigInt> weight_shift_identity(int n, int r1, int r2, int t) {
  const BigInt lhs = weight(n, r1, r2, t + 1) * BigInt(t + 1) * (r1 - r2 + t + 1);
  const BigInt rhs = BigInt(n) * (n - 1) * weight(n - 2, r1 - 1, r2 - 1, t);
  return {lhs, rhs};
}

}  // namespace hharm

#endif  // HHARM_SPECIAL_POLYS_HPP_
