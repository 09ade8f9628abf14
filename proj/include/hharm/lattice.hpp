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

#ifndef HHARM_LATTICE_HPP_
#define HHARM_LATTICE_HPP_

/// @file lattice.hpp
/// @brief Subsets of an n-set as bitmasks, and the structural operators
/// between levels.
///
/// Basis order: within a level, subsets by increasing bitmask; on the full
/// space, all masks 0..2^n-1. With that order the Fourier matrix is the
/// usual Sylvester Hadamard matrix.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hharm/exact_arith.hpp"
#include "hharm/operator.hpp"

namespace hharm {

/// Thrown when a size argument exceeds an enumeration guard.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxSubsetN = 20;
/// Dense operators between levels: C(12, 6) = 924 rows at most.
inline constexpr int kMaxLevelN = 12;
/// Dense operators on the full space: 2^12 rows at most.
inline constexpr int kMaxFullN = 12;
inline constexpr int kMaxOrbitN = 12;

inline void require_guard(int n, int limit, const std::string& what) {
  if (n < 0) throw std::invalid_argument(what + ": negative n");
  if (n > limit) {
    throw GuardError(what + ": n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(limit));
  }
}

struct SubsetId {
  std::uint32_t bits = 0;

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(SubsetId other) const { return (other.bits & ~bits) == 0; }
  friend constexpr auto operator<=>(SubsetId, SubsetId) = default;
};

/// |x2 \ x1|.
constexpr int diff_size(SubsetId x2, SubsetId x1) { return std::popcount(x2.bits & ~x1.bits); }

inline std::uint64_t binom_u64(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t out = 1;
  for (int i = 1; i <= b; ++i) out = out * static_cast<std::uint64_t>(a - b + i) / i;
  return out;
}

inline std::size_t level_size(int n, int r) { return static_cast<std::size_t>(binom_u64(n, r)); }

/// All r-subsets of an n-set in increasing mask order.
inline std::vector<SubsetId> level_elements(int n, int r) {
  require_guard(n, kMaxSubsetN, "level_elements");
  if (r < 0 || r > n) throw std::invalid_argument("level_elements: r out of range");
  std::vector<SubsetId> out;
  out.reserve(level_size(n, r));
  if (r == 0) {
    out.push_back(SubsetId{0});
    return out;
  }
  // Gosper's hack: next larger mask with the same popcount.
  std::uint32_t x = (std::uint32_t{1} << r) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (x < limit) {
    out.push_back(SubsetId{x});
    const std::uint32_t c = x & (~x + 1);
    const std::uint32_t y = x + c;
    x = (((x ^ y) >> 2) / c) | y;
  }
  return out;
}

/// Position of x in level_elements(n, |x|). Increasing masks of a fixed
/// popcount are in colex order, so this is the combinatorial number system.
inline std::size_t level_index(SubsetId x) {
  std::size_t rank = 0;
  int i = 0;
  for (std::uint32_t b = x.bits; b != 0; b &= b - 1) {
    ++i;
    rank += static_cast<std::size_t>(binom_u64(std::countr_zero(b), i));
  }
  return rank;
}

inline std::size_t basis_index(SubsetId x, Level level) {
  return level.is_full() ? x.bits : level_index(x);
}

inline std::size_t level_dim(int n, Level level) {
  return level.is_full() ? (std::size_t{1} << n) : level_size(n, level.r);
}

inline std::vector<SubsetId> basis_elements(int n, Level level) {
  if (!level.is_full()) return level_elements(n, level.r);
  std::vector<SubsetId> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = SubsetId{static_cast<std::uint32_t>(i)};
  return out;
}

/// Pair counts |{(x2, x1) : |x2 \ x1| = k}| for every k, by enumeration.
inline std::map<int, BigInt> orbit_histogram(int n, int r1, int r2) {
  require_guard(n, kMaxOrbitN, "orbit_histogram");
  std::vector<long long> counts(n + 1, 0);
  const auto xs1 = level_elements(n, r1);
  const auto xs2 = level_elements(n, r2);
  for (SubsetId x2 : xs2) {
    for (SubsetId x1 : xs1) ++counts[diff_size(x2, x1)];
  }
  std::map<int, BigInt> out;
  for (int k = 0; k <= n; ++k) {
    if (counts[k] != 0) out.emplace(k, BigInt(counts[k]));
  }
  return out;
}

inline BigInt orbit_count(int n, int r1, int r2, int k) {
  const auto hist = orbit_histogram(n, r1, r2);
  const auto it = hist.find(k);
  return it == hist.end() ? BigInt(0) : it->second;
}

/// Operator level r1 -> level r2 with entry (x2, x1) = kernel(|x2 \ x1|).
template <class Kernel>
Operator intertwiner_from_kernel(int n, int r1, int r2, Kernel&& kernel) {
  require_guard(n, kMaxLevelN, "intertwiner_from_kernel");
  const int k_lo = std::max(0, r2 - r1);
  const int k_hi = std::min(n - r1, r2);
  std::vector<Rat> values(n + 1);
  BigInt den = 1;
  for (int k = k_lo; k <= k_hi; ++k) {
    values[k] = Rat(kernel(k));
    den = boost::multiprecision::lcm(den, denominator_of(values[k]));
  }
  std::vector<BigInt> scaled(n + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    scaled[k] = numerator_of(values[k]) * (den / denominator_of(values[k]));
  }
  const auto xs1 = level_elements(n, r1);
  const auto xs2 = level_elements(n, r2);
  std::vector<BigInt> entries(xs2.size() * xs1.size());
  for (std::size_t i = 0; i < xs2.size(); ++i) {
    for (std::size_t j = 0; j < xs1.size(); ++j) {
      const BigInt& v = scaled[diff_size(xs2[i], xs1[j])];
      if (v != 0) entries[i * xs1.size() + j] = v;
    }
  }
  return Operator::from_scaled(Level::at(r1), Level::at(r2), xs2.size(), xs1.size(),
                               std::move(entries), den);
}

/// (R psi)(x2) = sum of psi(x1) over x1 inside x2.
inline Operator radon_up(int n, int r1, int r2) {
  if (r1 > r2) throw std::invalid_argument("radon_up: requires r1 <= r2");
  require_guard(n, kMaxLevelN, "radon_up");
  const auto xs1 = level_elements(n, r1);
  const auto xs2 = level_elements(n, r2);
  std::vector<BigInt> entries(xs2.size() * xs1.size());
  for (std::size_t i = 0; i < xs2.size(); ++i) {
    for (std::size_t j = 0; j < xs1.size(); ++j) {
      if (xs2[i].contains(xs1[j])) entries[i * xs1.size() + j] = 1;
    }
  }
  return Operator::from_scaled(Level::at(r1), Level::at(r2), xs2.size(), xs1.size(),
                               std::move(entries), BigInt(1));
}

/// (R psi)(x1) = sum of psi(x2) over x2 containing x1; level r2 -> r1.
inline Operator radon_down(int n, int r2, int r1) {
  if (r1 > r2) throw std::invalid_argument("radon_down: requires r1 <= r2");
  return radon_up(n, r1, r2).transpose();
}

/// Level r -> level n - r, sending the basis vector of x to that of its
/// complement.
inline Operator complement_op(int n, int r) {
  require_guard(n, kMaxLevelN, "complement_op");
  if (r < 0 || r > n) throw std::invalid_argument("complement_op: r out of range");
  const auto xs = level_elements(n, r);
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<BigInt> entries(xs.size() * xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const std::size_t i = level_index(SubsetId{all & ~xs[j].bits});
    entries[i * xs.size() + j] = 1;
  }
  return Operator::from_scaled(Level::at(r), Level::at(n - r), xs.size(), xs.size(),
                               std::move(entries), BigInt(1));
}

inline SubsetId swap_bits(SubsetId x, int i, int j) {
  const std::uint32_t bi = (x.bits >> i) & 1U;
  const std::uint32_t bj = (x.bits >> j) & 1U;
  if (bi == bj) return x;
  return SubsetId{x.bits ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j))};
}

/// (L psi)(x) = sum over transpositions g of psi(gx) - C(n,2) psi(x), on
/// level r.
inline Operator laplacian_block(int n, int r) {
  require_guard(n, kMaxLevelN, "laplacian_block");
  if (r < 0 || r > n) throw std::invalid_argument("laplacian_block: r out of range");
  const auto xs = level_elements(n, r);
  const std::size_t dim = xs.size();
  std::vector<BigInt> entries(dim * dim);
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  for (std::size_t c = 0; c < dim; ++c) entries[c * dim + c] = -pairs;
  for (std::size_t c = 0; c < dim; ++c) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // Row x picks up psi(gx); g is an involution so the matrix is symmetric.
        entries[c * dim + level_index(swap_bits(xs[c], i, j))] += 1;
      }
    }
  }
  return Operator::from_scaled(Level::at(r), Level::at(r), dim, dim, std::move(entries),
                               BigInt(1));
}

/// Entry (x, x') = (-1)^{|x & x'|} on the full space.
inline Operator fourier_matrix(int n) {
  require_guard(n, kMaxFullN, "fourier_matrix");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<BigInt> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      entries[i * dim + j] = (std::popcount(static_cast<std::uint32_t>(i & j)) % 2 == 0) ? 1 : -1;
    }
  }
  return Operator::from_scaled(Level::full(), Level::full(), dim, dim, std::move(entries),
                               BigInt(1));
}

/// The level r1 -> level r2 block of an operator on the full space.
inline Operator restrict_block(const Operator& full, int n, int r1, int r2) {
  if (!full.domain().is_full() || !full.codomain().is_full()) {
    throw std::invalid_argument("restrict_block: operator is not on the full space");
  }
  const auto xs1 = level_elements(n, r1);
  const auto xs2 = level_elements(n, r2);
  std::vector<BigInt> entries(xs2.size() * xs1.size());
  for (std::size_t i = 0; i < xs2.size(); ++i) {
    for (std::size_t j = 0; j < xs1.size(); ++j) {
      entries[i * xs1.size() + j] = full.scaled_entry(xs2[i].bits, xs1[j].bits);
    }
  }
  return Operator::from_scaled(Level::at(r1), Level::at(r2), xs2.size(), xs1.size(),
                               std::move(entries), full.denominator());
}

/// Sum of level-to-level blocks placed into the full space.
inline Operator assemble_full(int n, const std::vector<Operator>& blocks) {
  require_guard(n, kMaxFullN, "assemble_full");
  const std::size_t dim = std::size_t{1} << n;
  BigInt den = 1;
  for (const Operator& b : blocks) {
    if (b.domain().is_full() || b.codomain().is_full()) {
      throw std::invalid_argument("assemble_full: blocks must act between levels");
    }
    den = boost::multiprecision::lcm(den, b.denominator());
  }
  std::vector<BigInt> entries(dim * dim);
  for (const Operator& b : blocks) {
    const auto xs1 = level_elements(n, b.domain().r);
    const auto xs2 = level_elements(n, b.codomain().r);
    const BigInt m = den / b.denominator();
    for (std::size_t i = 0; i < xs2.size(); ++i) {
      for (std::size_t j = 0; j < xs1.size(); ++j) {
        const BigInt& v = b.scaled_entry(i, j);
        if (v != 0) entries[xs2[i].bits * dim + xs1[j].bits] += v * m;
      }
    }
  }
  return Operator::from_scaled(Level::full(), Level::full(), dim, dim, std::move(entries), den);
}

/// perm[i] is the image of ground-set point i.
using Permutation = std::vector<int>;

inline SubsetId apply_permutation(const Permutation& g, SubsetId x) {
  std::uint32_t out = 0;
  for (std::uint32_t b = x.bits; b != 0; b &= b - 1) out |= std::uint32_t{1} << g[std::countr_zero(b)];
  return SubsetId{out};
}

inline std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 0; i + 1 < n; ++i) {
    Permutation g(n);
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[i], g[i + 1]);
    out.push_back(std::move(g));
  }
  return out;
}

template <class Rng>
Permutation random_permutation(int n, Rng& rng) {
  Permutation g(n);
  std::iota(g.begin(), g.end(), 0);
  std::shuffle(g.begin(), g.end(), rng);
  return g;
}

/// Permutation matrix of x -> gx on a level or on the full space.
inline Operator permutation_action(int n, Level level, const Permutation& g) {
  const auto xs = basis_elements(n, level);
  std::vector<BigInt> entries(xs.size() * xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    entries[basis_index(apply_permutation(g, xs[j]), level) * xs.size() + j] = 1;
  }
  return Operator::from_scaled(level, level, xs.size(), xs.size(), std::move(entries), BigInt(1));
}

/// Whether op(gx2, gx1) == op(x2, x1) for every basis pair, the matrix form
/// of P_g M = M P_g.
inline bool is_equivariant(const Operator& op, int n, const Permutation& g) {
  const auto xs1 = basis_elements(n, op.domain());
  const auto xs2 = basis_elements(n, op.codomain());
  if (xs1.size() != op.cols() || xs2.size() != op.rows()) {
    throw std::invalid_argument("is_equivariant: operator does not match n");
  }
  std::vector<std::size_t> image1(xs1.size());
  for (std::size_t j = 0; j < xs1.size(); ++j) {
    image1[j] = basis_index(apply_permutation(g, xs1[j]), op.domain());
  }
  for (std::size_t i = 0; i < xs2.size(); ++i) {
    const std::size_t gi = basis_index(apply_permutation(g, xs2[i]), op.codomain());
    for (std::size_t j = 0; j < xs1.size(); ++j) {
      if (op.scaled_entry(gi, image1[j]) != op.scaled_entry(i, j)) return false;
    }
  }
  return true;
}

}  // namespace hharm

#endif  // HHARM_LATTICE_HPP_
