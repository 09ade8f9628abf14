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

#ifndef HHARM_FOURIER_HPP_
#define HHARM_FOURIER_HPP_

/// @file fourier.hpp
/// @brief The hypercube Fourier transform (-1)^{|x & x'|} in the Lambda
/// basis, its block matrix K, and a fast Walsh-Hadamard oracle.
///
/// In the tilde basis the coefficients are
///   k_s^{r1,r2} = (-2)^s sqrt(C(n-2s,r2-s) / C(n-2s,r1-s)) P_{r1-s}(r2-s, n-2s).
/// Multiplying by alpha_s^{r1,r2} cancels the square roots, giving rational
/// plain-basis coefficients c_s^{r1,r2}.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hharm/exact_arith.hpp"
#include "hharm/harmonics.hpp"
#include "hharm/lattice.hpp"
#include "hharm/operator.hpp"
#include "hharm/report.hpp"
#include "hharm/special_polys.hpp"

namespace hharm {

inline Surd fourier_coeff_tilde(const ParamTriple& p) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  const Rat ratio = make_rat(binom_int(n - 2 * s, r2 - s), binom_int(n - 2 * s, r1 - s));
  BigInt scale = krawtchouk_int(r1 - s, r2 - s, n - 2 * s);
  for (int i = 0; i < s; ++i) scale *= -2;
  return Surd(Rat(scale)) * Surd::sqrt(ratio);
}

/// (-2)^s P_{r1-s}(r2-s, n-2s) [n-r1]_s [r2]_s / (C(n-2s, r1-s) s! [n-s+1]_s).
inline Rat fourier_coeff_plain(const ParamTriple& p) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  BigInt scale = krawtchouk_int(r1 - s, r2 - s, n - 2 * s);
  for (int i = 0; i < s; ++i) scale *= -2;
  return Rat(scale) * falling(Rat(n - r1), s) * falling(Rat(r2), s) /
         (Rat(binom_int(n - 2 * s, r1 - s)) * Rat(factorial(s)) * falling(Rat(n - s + 1), s));
}

/// sum_{r1,r2,s} c_s^{r1,r2} Lambda_s^{r1,r2} on the full space.
inline Operator assemble_fourier(int n) {
  require_guard(n, kMaxFullN, "assemble_fourier");
  std::vector<std::pair<int, int>> pairs;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) pairs.emplace_back(r1, r2);
  }
  std::vector<Operator> blocks(pairs.size(), Operator(Level::at(0), Level::at(0), 0, 0));
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [r1, r2] = pairs[i];
    Operator block(Level::at(r1), Level::at(r2), level_size(n, r2), level_size(n, r1));
    for (int s = 0; s <= usual_rank(n, r1, r2); ++s) {
      const ParamTriple p(n, r1, r2, s);
      block = block + lambda_op(p).scaled(fourier_coeff_plain(p));
    }
    blocks[i] = std::move(block);
  });
  return assemble_full(n, blocks);
}

/// F v without forming F; the butterfly on bit b pairs masks that differ in
/// bit b, which produces (-1)^{popcount(x & x')}.
inline std::vector<BigInt> fwht(std::vector<BigInt> v, int n) {
  if (n < 0 || n > 30 || v.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("fwht: input length " + std::to_string(v.size()) +
                                " is not 2^" + std::to_string(n));
  }
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t base = 0; base < v.size(); base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        BigInt a = v[i];
        v[i] += v[i + half];
        v[i + half] = a - v[i + half];
      }
    }
  }
  return v;
}

/// K = (k_s), with k_s indexed by r1, r2 in [s, n - s].
struct BlockMatrixK {
  int n = 0;
  std::vector<std::vector<std::vector<Surd>>> blocks;

  const Surd& at(int s, int r1, int r2) const { return blocks.at(s).at(r1 - s).at(r2 - s); }
};

inline BlockMatrixK block_matrix(int n) {
  BlockMatrixK out;
  out.n = n;
  for (int s = 0; s <= n / 2; ++s) {
    const int dim = n - 2 * s + 1;
    std::vector<std::vector<Surd>> block(dim, std::vector<Surd>(dim));
    for (int r1 = s; r1 <= n - s; ++r1) {
      for (int r2 = s; r2 <= n - s; ++r2) block[r1 - s][r2 - s] = fourier_coeff_tilde(ParamTriple(n, r1, r2, s));
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

/// Entry-by-entry product of two blocks. Every term of an entry shares the
/// radicand of C(n-2s, r2-s) / C(n-2s, r1-s), so sums stay in one Surd.
inline std::vector<std::vector<Surd>> block_product(const std::vector<std::vector<Surd>>& a,
                                                    const std::vector<std::vector<Surd>>& b) {
  const std::size_t dim = a.size();
  std::vector<std::vector<Surd>> out(dim, std::vector<Surd>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t m = 0; m < dim; ++m) out[i][j] = out[i][j] + a[i][m] * b[m][j];
    }
  }
  return out;
}

/// Dense decomposition of F, the rationality of k * alpha, and agreement of
/// the dense matrix with the fast transform.
inline Report check_fourier_decomposition(int n) {
  require_guard(n, 10, "check_fourier_decomposition");
  Report out;
  out.suite = "fourier";
  out.n = n;
  const Params np{{"n", n}};
  const Operator dense = fourier_matrix(n);
  check_equal(out, "assembled_equals_dense", np, assemble_fourier(n), dense);
  check_equal(out, "symmetric", np, dense, dense.transpose());
  check_equal(out, "square_is_scalar", np, dense * dense,
              Operator::identity(Level::full(), dense.rows()).scaled(Rat(BigInt(1) << n)));

  for (const ParamTriple& p : valid_triples(n)) {
    const Surd product = surd_mul(fourier_coeff_tilde(p), alpha_const(p));
    check_true(out, "k_alpha_rational", triple_params(p), product.is_rational(), product.str());
    check_equal(out, "k_alpha_closed_form", triple_params(p), product,
                Surd(fourier_coeff_plain(p)));
  }
  const Decomposition dec = decompose(dense, n);
  for (const auto& [p, c] : dec.coefficients) {
    check_equal(out, "decompose_matches", triple_params(p), c, fourier_coeff_plain(p));
  }

  // Row balance: every row but the one of the empty set has 2^{n-1} entries of each sign.
  bool balanced = true;
  for (std::size_t i = 0; i < dense.rows() && balanced; ++i) {
    long long plus = 0;
    for (std::size_t j = 0; j < dense.cols(); ++j) plus += dense.scaled_entry(i, j) > 0 ? 1 : 0;
    const long long expect = i == 0 ? static_cast<long long>(dense.cols()) : static_cast<long long>(dense.cols() / 2);
    balanced = plus == expect;
  }
  check_true(out, "row_balance", np, balanced, "unbalanced row");

  std::mt19937_64 rng(0xf00dULL + static_cast<unsigned>(n));
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  const std::size_t dim = dense.rows();
  bool agree = true;
  for (int trial = 0; trial < 100 && agree; ++trial) {
    std::vector<BigInt> v(dim);
    for (auto& x : v) x = dist(rng);
    const auto fast = fwht(v, n);
    for (std::size_t i = 0; i < dim && agree; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        if (dense.scaled_entry(i, j) > 0) {
          acc += v[j];
        } else {
          acc -= v[j];
        }
      }
      agree = acc == fast[i];
    }
  }
  check_true(out, "fwht_matches_dense", np, agree, "mismatch");
  return out;
}

/// fwht(fwht(v)) = 2^n v and <Fu, w> = <u, Fw> for random integer vectors.
inline Report check_fwht_involution(int n, int trials = 5) {
  Report out;
  out.suite = "fourier";
  out.n = n;
  std::mt19937_64 rng(0xbeefULL + static_cast<unsigned>(n));
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  std::vector<BigInt> delta(std::size_t{1} << n);
  delta[0] = 1;
  bool ones = true;
  for (const BigInt& x : fwht(delta, n)) ones = ones && x == 1;
  check_true(out, "fwht_delta_is_ones", {{"n", n}}, ones, "not all ones");
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<BigInt> v(std::size_t{1} << n);
    for (auto& x : v) x = dist(rng);
    const auto twice = fwht(fwht(v, n), n);
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) ok = twice[i] == (v[i] << n);
    check_true(out, "fwht_involution", {{"n", n}, {"trial", trial}}, ok, "mismatch");
    // Symmetry of F: <F u, w> = <u, F w>.
    std::vector<BigInt> w(v.size());
    for (auto& x : w) x = dist(rng);
    const auto fv = fwht(v, n);
    const auto fw = fwht(w, n);
    BigInt left = 0, right = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      left += fv[i] * w[i];
      right += v[i] * fw[i];
    }
    check_equal(out, "fwht_symmetric", {{"n", n}, {"trial", trial}}, left, right);
  }
  return out;
}

/// Conjugation identity per block, symmetry of K, block squares, and the
/// reassembly of F from K in the tilde basis.
inline Report check_theorem5(int n) {
  require_guard(n, 8, "check_theorem5");
  Report out;
  out.suite = "theorem5";
  out.n = n;
  BasisCache basis;
  const Operator dense = fourier_matrix(n);
  const BlockMatrixK k = block_matrix(n);

  for (int s0 = 0; s0 <= n / 2; ++s0) {
    for (int r = s0; r <= n - s0; ++r) {
      for (int r0 = s0; r0 <= n - s0; ++r0) {
        const Params params{{"n", n}, {"s0", s0}, {"r", r}, {"r0", r0}};
        const ParamTriple down(n, r0, s0, s0), up(n, s0, r, s0), diag(n, s0, s0, s0);
        const Operator lhs = basis.get(down) * restrict_block(dense, n, r, r0) * basis.get(up);
        // Lambda~(r0,s0) F Lambda~(s0,r) = k^{r,r0} Lambda~(s0,s0); dividing out
        // the alphas leaves a rational multiple of the plain diagonal operator.
        const Surd scalar = k.at(s0, r, r0) * alpha_const(diag) /
                            (alpha_const(down) * alpha_const(up));
        check_true(out, "conjugation_scalar_rational", params, scalar.is_rational(), scalar.str());
        if (scalar.is_rational()) {
          check_equal(out, "conjugation", params, lhs, basis.get(diag).scaled(scalar.rational()));
        }
        check_equal(out, "k_symmetric", params, k.at(s0, r, r0), k.at(s0, r0, r));
      }
    }
    const auto& block = k.blocks[s0];
    const auto square = block_product(block, block);
    bool scalar = true;
    for (std::size_t i = 0; i < square.size(); ++i) {
      for (std::size_t j = 0; j < square.size(); ++j) {
        scalar = scalar && square[i][j] == Surd(Rat(i == j ? BigInt(1) << n : BigInt(0)));
      }
    }
    check_true(out, "block_square_is_scalar", {{"n", n}, {"s", s0}}, scalar, "k_s^2 != 2^n I");
  }

  // F = Phi(K): sum of k_s^{r1,r2} tilde-Lambda, with k * alpha computed as Surds.
  std::vector<Operator> blocks;
  bool rational = true;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) {
      Operator block(Level::at(r1), Level::at(r2), level_size(n, r2), level_size(n, r1));
      for (int s = 0; s <= usual_rank(n, r1, r2); ++s) {
        const ParamTriple p(n, r1, r2, s);
        const Surd c = surd_mul(k.at(s, r1, r2), alpha_const(p));
        if (!c.is_rational()) {
          rational = false;
          continue;
        }
        block = block + basis.get(p).scaled(c.rational());
      }
      blocks.push_back(std::move(block));
    }
  }
  check_true(out, "phi_rational", {{"n", n}}, rational, "irrational coefficient");
  check_equal(out, "phi_reassembly", {{"n", n}}, assemble_full(n, blocks), dense);
  // K is symmetric, so reading the matrix of F as K or as its transpose is the same.
  out.notes.push_back("K equals its transpose, so the K and K^t readings of the block form coincide");
  return out;
}

/// P_m(0,n) = C(n,m), the reflection and duality relations, P_1 = n - 2k,
/// and k_s^{r1,r2} = k_s^{r2,r1}.
inline Report check_krawtchouk(int n) {
  require_guard(n, 20, "check_krawtchouk");
  Report out;
  out.suite = "krawtchouk";
  out.n = n;
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(n + 1));
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= n; ++k) table[m][k] = krawtchouk_int(m, k, n);
  }
  for (int m = 0; m <= n; ++m) {
    check_equal(out, "value_at_zero", {{"n", n}, {"m", m}}, table[m][0], binom_int(n, m));
    for (int k = 0; k <= n; ++k) {
      const Params params{{"n", n}, {"m", m}, {"k", k}};
      const BigInt reflected = (m % 2 == 0) ? table[m][n - k] : BigInt(-table[m][n - k]);
      check_equal(out, "reflection", params, table[m][k], reflected);
      check_equal(out, "duality", params, binom_int(n, k) * table[m][k],
                  binom_int(n, m) * table[k][m]);
      check_equal(out, "rational_form_agrees", params, Rat(table[m][k]),
                  krawtchouk(m, Rat(k), n));
    }
  }
  if (n >= 1) {
    for (int k = 0; k <= n; ++k) {
      check_equal(out, "degree_one", {{"n", n}, {"k", k}}, table[1][k], BigInt(n - 2 * k));
    }
  }
  for (const ParamTriple& p : valid_triples(n)) {
    if (n <= 12) {
      const Surd product = surd_mul(fourier_coeff_tilde(p), alpha_const(p));
      check_true(out, "k_alpha_rational", triple_params(p), product.is_rational(), product.str());
    }
    if (p.r1() > p.r2()) continue;
    check_equal(out, "k_symmetric", triple_params(p), fourier_coeff_tilde(p),
                fourier_coeff_tilde(ParamTriple(n, p.r2(), p.r1(), p.s())));
  }
  return out;
}

}  // namespace hharm

#endif  // HHARM_FOURIER_HPP_
