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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hharm/lattice.hpp"
#include "hharm/operator.hpp"

namespace hharm {
namespace {

Rat q(long long num, long long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

TEST(Levels, EnumerationOrderAndIndex) {
  const auto xs = level_elements(4, 2);
  const std::vector<std::uint32_t> expected = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
  ASSERT_EQ(xs.size(), expected.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_EQ(xs[i].bits, expected[i]);
    EXPECT_EQ(level_index(xs[i]), i);
  }
  EXPECT_EQ(level_elements(5, 0).size(), 1U);
  EXPECT_EQ(level_elements(5, 5).front().bits, 0b11111U);
  EXPECT_THROW(level_elements(4, 5), std::invalid_argument);
}

TEST(Levels, IndexIsBijectionOnEveryLevel) {
  for (int n = 0; n <= 14; ++n) {
    std::size_t total = 0;
    for (int r = 0; r <= n; ++r) {
      const auto xs = level_elements(n, r);
      ASSERT_EQ(xs.size(), binom_u64(n, r));
      total += xs.size();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ASSERT_EQ(xs[i].size(), r);
        ASSERT_EQ(level_index(xs[i]), i);
        if (i > 0) {
          ASSERT_LT(xs[i - 1], xs[i]);
        }
      }
    }
    EXPECT_EQ(total, std::size_t{1} << n);
  }
}

TEST(Levels, DiffSizeAndContainment) {
  const SubsetId a{0b0110}, b{0b0011};
  EXPECT_EQ(diff_size(a, b), 1);
  EXPECT_EQ(diff_size(a, a), 0);
  EXPECT_TRUE(SubsetId{0b0111}.contains(b));
  EXPECT_FALSE(a.contains(b));
}

TEST(Guards, RaiseGuardError) {
  EXPECT_THROW(level_elements(kMaxSubsetN + 1, 1), GuardError);
  EXPECT_THROW(radon_up(kMaxLevelN + 1, 0, 1), GuardError);
  EXPECT_THROW(fourier_matrix(kMaxFullN + 1), GuardError);
  EXPECT_THROW(orbit_histogram(kMaxOrbitN + 1, 1, 1), GuardError);
  EXPECT_THROW(require_guard(-1, 5, "x"), std::invalid_argument);
  EXPECT_NO_THROW(require_guard(5, 5, "x"));
}

TEST(Orbits, CountsMatchExamples) {
  EXPECT_EQ(orbit_count(4, 2, 2, 1), 24);
  EXPECT_EQ(orbit_count(4, 2, 2, 0), 6);
  EXPECT_EQ(orbit_count(4, 2, 2, 2), 6);
  EXPECT_EQ(orbit_count(4, 2, 2, 3), 0);
  for (int n = 0; n <= 8; ++n) {
    for (int r1 = 0; r1 <= n; ++r1) {
      for (int r2 = 0; r2 <= n; ++r2) {
        BigInt total = 0;
        for (const auto& [k, c] : orbit_histogram(n, r1, r2)) total += c;
        EXPECT_EQ(total, BigInt(binom_u64(n, r1)) * binom_u64(n, r2));
      }
    }
  }
}

TEST(Radon, UpAndDown) {
  const Operator up = radon_up(3, 1, 2);
  EXPECT_EQ(up.rows(), 3U);
  EXPECT_EQ(up.cols(), 3U);
  // Each 2-subset contains two 1-subsets; each 1-subset lies in two 2-subsets.
  for (std::size_t i = 0; i < 3; ++i) {
    Rat row(0), col(0);
    for (std::size_t j = 0; j < 3; ++j) {
      row += up.at(i, j);
      col += up.at(j, i);
    }
    EXPECT_EQ(row, 2);
    EXPECT_EQ(col, 2);
  }
  EXPECT_EQ(radon_down(3, 2, 1), up.transpose());
  EXPECT_EQ(radon_down(3, 2, 1).domain(), Level::at(2));
  EXPECT_THROW(radon_up(3, 2, 1), std::invalid_argument);
  EXPECT_THROW(radon_down(3, 1, 2), std::invalid_argument);
  // Composites of up maps: R^{r2<-r} R^{r<-r1} = C(r2-r1, r-r1) R^{r2<-r1}.
  for (int n = 2; n <= 7; ++n) {
    for (int r1 = 0; r1 <= n; ++r1) {
      for (int r = r1; r <= n; ++r) {
        for (int r2 = r; r2 <= n; ++r2) {
          EXPECT_EQ(radon_up(n, r, r2) * radon_up(n, r1, r),
                    radon_up(n, r1, r2).scaled(Rat(binom_int(r2 - r1, r - r1))));
        }
      }
    }
  }
}

TEST(Complement, IsInvolutionAndPermutation) {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Operator c = complement_op(n, r);
      EXPECT_EQ(c.domain(), Level::at(r));
      EXPECT_EQ(c.codomain(), Level::at(n - r));
      EXPECT_EQ(complement_op(n, n - r) * c, Operator::identity(Level::at(r), level_size(n, r)));
      EXPECT_EQ(c.transpose(), complement_op(n, n - r));
    }
  }
}

TEST(Laplacian, SmallExample) {
  const Operator l = laplacian_block(2, 1);
  EXPECT_EQ(l.at(0, 0), -1);
  EXPECT_EQ(l.at(0, 1), 1);
  EXPECT_EQ(l.at(1, 0), 1);
  EXPECT_EQ(l.at(1, 1), -1);
  EXPECT_TRUE(laplacian_block(3, 0).is_zero());
}

TEST(Laplacian, RowsSumToZeroAndSymmetric) {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Operator l = laplacian_block(n, r);
      EXPECT_EQ(l, l.transpose());
      for (std::size_t i = 0; i < l.rows(); ++i) {
        Rat sum(0);
        for (std::size_t j = 0; j < l.cols(); ++j) sum += l.at(i, j);
        EXPECT_EQ(sum, 0);
      }
    }
  }
}

TEST(Fourier, DenseMatrix) {
  const Operator f1 = fourier_matrix(1);
  EXPECT_EQ(f1.at(0, 0), 1);
  EXPECT_EQ(f1.at(0, 1), 1);
  EXPECT_EQ(f1.at(1, 0), 1);
  EXPECT_EQ(f1.at(1, 1), -1);
  for (int n = 0; n <= 6; ++n) {
    const Operator f = fourier_matrix(n);
    const std::size_t dim = std::size_t{1} << n;
    EXPECT_EQ(f * f, Operator::identity(Level::full(), dim).scaled(Rat(static_cast<long long>(dim))));
  }
}

TEST(Blocks, RestrictAndAssembleRoundTrip) {
  const int n = 4;
  const Operator f = fourier_matrix(n);
  std::vector<Operator> blocks;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) blocks.push_back(restrict_block(f, n, r1, r2));
  }
  EXPECT_EQ(assemble_full(n, blocks), f);
  EXPECT_THROW(restrict_block(radon_up(3, 1, 2), 3, 1, 2), std::invalid_argument);
  EXPECT_THROW(assemble_full(3, {f}), std::invalid_argument);
}

TEST(Intertwiner, KernelOnDifferenceSize) {
  const Operator op = intertwiner_from_kernel(3, 1, 1, [](int k) { return Rat(k + 1); });
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(op.at(i, j), i == j ? 1 : 2);
  }
}

TEST(Permutations, ActionAndEquivariance) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Permutation g = random_permutation(n, rng);
      std::set<int> seen(g.begin(), g.end());
      EXPECT_EQ(static_cast<int>(seen.size()), n);
      for (int r1 = 0; r1 <= n; ++r1) {
        EXPECT_TRUE(is_equivariant(laplacian_block(n, r1), n, g));
        for (int r2 = r1; r2 <= n; ++r2) EXPECT_TRUE(is_equivariant(radon_up(n, r1, r2), n, g));
        const Operator pg = permutation_action(n, Level::at(r1), g);
        EXPECT_EQ(pg * pg.transpose(), Operator::identity(Level::at(r1), level_size(n, r1)));
        EXPECT_EQ(pg * laplacian_block(n, r1), laplacian_block(n, r1) * pg);
      }
    }
  }
  // A diagonal with distinct entries is not equivariant.
  std::vector<Rat> diag(9, Rat(0));
  diag[0] = 1;
  diag[4] = 2;
  diag[8] = 3;
  const Operator d = Operator::from_rationals(Level::at(1), Level::at(1), 3, 3, diag);
  EXPECT_FALSE(is_equivariant(d, 3, Permutation{1, 0, 2}));
}

TEST(Operators, ArithmeticAndNormalForm) {
  const Operator a = Operator::from_rationals(Level::at(0), Level::at(1), 2, 1, {q(1, 2), q(-3, 4)});
  EXPECT_EQ(a.denominator(), 4);
  EXPECT_EQ(a.scaled_entry(0, 0), 2);
  EXPECT_EQ(a.scaled(Rat(4)).denominator(), 1);
  EXPECT_EQ(a + (-a), Operator(Level::at(0), Level::at(1), 2, 1));
  EXPECT_EQ(a - a, Operator(Level::at(0), Level::at(1), 2, 1));
  EXPECT_EQ(hs_inner(a, a), q(13, 16));
  EXPECT_EQ(proportionality(a.scaled(q(-5, 3)), a), q(-5, 3));
  EXPECT_FALSE(proportionality(a, Operator::from_rationals(Level::at(0), Level::at(1), 2, 1,
                                                           {Rat(1), Rat(1)}))
                   .has_value());
  const auto miss = first_mismatch(a, a.scaled(Rat(2)));
  ASSERT_TRUE(miss.has_value());
  EXPECT_EQ(miss->row, 0U);
  EXPECT_THROW(a * a, std::invalid_argument);
  EXPECT_EQ((a.transpose() * a).at(0, 0), q(13, 16));
}

}  // namespace
}  // namespace hharm
