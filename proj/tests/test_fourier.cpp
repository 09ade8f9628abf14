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
#include <stdexcept>

#include "hharm/fourier.hpp"
#include "hharm/harmonics.hpp"

namespace hharm {
namespace {

struct FrozenKernel {
  int n, r1, r2, s, k;
  const char* value;
};
struct FrozenCoeff {
  int n, r1, r2, s;
  const char* value;
};
#include "frozen_values.inc"

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

TEST(Coefficients, FrozenPlainValues) {
  for (const auto& f : kFrozenFourierPlain) {
    const ParamTriple p(f.n, f.r1, f.r2, f.s);
    EXPECT_EQ(fourier_coeff_plain(p), Rat(f.value)) << p.str();
  }
}

TEST(Coefficients, FrozenValuesMatchDenseDecomposition) {
  for (int n = 1; n <= 5; ++n) {
    const auto dec = decompose(fourier_matrix(n), n);
    for (const auto& f : kFrozenFourierPlain) {
      if (f.n != n) continue;
      EXPECT_EQ(dec.coefficients.at(ParamTriple(f.n, f.r1, f.r2, f.s)), Rat(f.value));
    }
  }
}

TEST(Coefficients, SizeOneExample) {
  EXPECT_EQ(fourier_coeff_plain(ParamTriple(1, 0, 0, 0)), 1);
  EXPECT_EQ(fourier_coeff_plain(ParamTriple(1, 0, 1, 0)), 1);
  EXPECT_EQ(fourier_coeff_plain(ParamTriple(1, 1, 0, 0)), 1);
  EXPECT_EQ(fourier_coeff_plain(ParamTriple(1, 1, 1, 0)), -1);
  EXPECT_EQ(fourier_coeff_tilde(ParamTriple(1, 1, 1, 0)), Surd(Rat(-1)));
  EXPECT_EQ(assemble_fourier(1), fourier_matrix(1));
}

TEST(Coefficients, TildeIsPlainOverAlpha) {
  for (int n = 1; n <= 9; ++n) {
    for (const ParamTriple& p : valid_triples(n)) {
      EXPECT_EQ(surd_mul(fourier_coeff_tilde(p), alpha_const(p)), Surd(fourier_coeff_plain(p))) << p.str();
    }
  }
}

TEST(Assembly, MatchesDenseMatrix) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(assemble_fourier(n), fourier_matrix(n)) << n;
  EXPECT_THROW(assemble_fourier(kMaxFullN + 1), GuardError);
}

TEST(BlockMatrix, SizeOne) {
  const BlockMatrixK k = block_matrix(1);
  ASSERT_EQ(k.blocks.size(), 1U);
  EXPECT_EQ(k.at(0, 0, 0), Surd(Rat(1)));
  EXPECT_EQ(k.at(0, 0, 1), Surd(Rat(1)));
  EXPECT_EQ(k.at(0, 1, 0), Surd(Rat(1)));
  EXPECT_EQ(k.at(0, 1, 1), Surd(Rat(-1)));
}

TEST(BlockMatrix, BlocksSquareToScalarAndAreSymmetric) {
  for (int n = 1; n <= 12; ++n) {
    const BlockMatrixK k = block_matrix(n);
    for (int s = 0; s <= n / 2; ++s) {
      const auto& b = k.blocks[s];
      const auto sq = block_product(b, b);
      const Surd scale(Rat(BigInt(1) << n));
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          EXPECT_EQ(sq[i][j], i == j ? scale : Surd()) << n << " " << s;
          EXPECT_EQ(b[i][j], b[j][i]);
        }
      }
    }
  }
}

TEST(Fwht, Examples) {
  EXPECT_EQ(fwht(ints({1, 0}), 1), ints({1, 1}));
  EXPECT_EQ(fwht(ints({1, 2, 3, 4}), 2), ints({10, -2, -4, 0}));
  EXPECT_EQ(fwht(ints({7}), 0), ints({7}));
  EXPECT_THROW(fwht(ints({1, 2, 3}), 2), std::invalid_argument);
  EXPECT_THROW(fwht(ints({1, 2}), 2), std::invalid_argument);
}

TEST(Fwht, InvolutionUpToScaleAndDenseAgreement) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int n = 0; n <= 12; ++n) {
    std::vector<BigInt> v(std::size_t{1} << n);
    for (auto& x : v) x = dist(rng);
    auto twice = fwht(fwht(v, n), n);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(twice[i], v[i] << n);
    if (n <= 6) {
      const Operator f = fourier_matrix(n);
      const auto fast = fwht(v, n);
      for (std::size_t i = 0; i < v.size(); ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < v.size(); ++j) sum += f.scaled_entry(i, j) * v[j];
        EXPECT_EQ(fast[i], sum);
      }
    }
  }
}

TEST(Krawtchouk, ProductsOfKrawtchoukMatrices) {
  // sum_m P_i(m) P_m(j) = 2^n delta_ij.
  for (int n = 0; n <= 14; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        BigInt sum = 0;
        for (int m = 0; m <= n; ++m) sum += krawtchouk_int(i, m, n) * krawtchouk_int(m, j, n);
        EXPECT_EQ(sum, i == j ? BigInt(1) << n : BigInt(0));
      }
    }
  }
}

class FourierSuites : public ::testing::TestWithParam<int> {};

TEST_P(FourierSuites, Decomposition) {
  EXPECT_TRUE(check_fourier_decomposition(GetParam()).passed());
}
TEST_P(FourierSuites, Conjugation) { EXPECT_TRUE(check_theorem5(GetParam()).passed()); }
TEST_P(FourierSuites, Krawtchouk) { EXPECT_TRUE(check_krawtchouk(GetParam()).passed()); }
TEST_P(FourierSuites, FwhtInvolution) { EXPECT_TRUE(check_fwht_involution(GetParam()).passed()); }

INSTANTIATE_TEST_SUITE_P(UpToSix, FourierSuites, ::testing::Range(1, 7));

}  // namespace
}  // namespace hharm
