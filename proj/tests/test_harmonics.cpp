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

#include <stdexcept>

#include "hharm/harmonics.hpp"
#include "hharm/lattice.hpp"

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

Rat q(long long num, long long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

TEST(Basis, MatrixEntriesMatchFrozenKernels) {
  for (const auto& f : kFrozenKernels) {
    const ParamTriple p(f.n, f.r1, f.r2, f.s);
    const Operator lam = lambda_op(p);
    const auto xs1 = level_elements(f.n, f.r1);
    const auto xs2 = level_elements(f.n, f.r2);
    bool found = false;
    for (std::size_t i = 0; i < xs2.size() && !found; ++i) {
      for (std::size_t j = 0; j < xs1.size() && !found; ++j) {
        if (diff_size(xs2[i], xs1[j]) != f.k) continue;
        EXPECT_EQ(lam.at(i, j), Rat(f.value)) << p.str() << " k=" << f.k;
        found = true;
      }
    }
    EXPECT_TRUE(found) << p.str();
  }
}

TEST(Basis, FrozenHilbertSchmidtNorms) {
  for (const auto& f : kFrozenHsNorms) {
    const ParamTriple p(f.n, f.r1, f.r2, f.s);
    const Rat expected(f.value);
    const Operator lam = lambda_op(p);
    EXPECT_EQ(hs_inner(lam, lam), expected) << p.str();
    EXPECT_EQ(hs_norm_formula(p), expected) << p.str();
    EXPECT_EQ(hs_norm_by_weights(p), expected) << p.str();
  }
  EXPECT_EQ(hs_norm_formula(ParamTriple(4, 2, 2, 1)), 12);
}

TEST(Basis, Constants) {
  EXPECT_EQ(alpha_const(ParamTriple(2, 1, 1, 1)), Surd(q(1, 2)));
  EXPECT_EQ(alpha_const(ParamTriple(5, 2, 3, 0)), Surd(Rat(1)) / Surd::sqrt(Rat(100)));
  EXPECT_EQ(beta_const(4, 1), Surd::sqrt(q(1, 3)));
  EXPECT_EQ(isotypic_dim(6, 0), 1);
  EXPECT_EQ(isotypic_dim(6, 2), 9);
  EXPECT_EQ(to_string(Normalization::bar), "bar");
  const BasisElement e = basis_element(ParamTriple(4, 2, 2, 1), Normalization::tilde);
  EXPECT_EQ(e.scale, alpha_const(ParamTriple(4, 2, 2, 1)));
}

TEST(Basis, ProjectionsOnSmallLevel) {
  // n = 2, r = 1: P_0 averages, P_1 is the difference part.
  const Operator p0 = projection(2, 1, 0);
  const Operator p1 = projection(2, 1, 1);
  EXPECT_EQ(p0.at(0, 0), q(1, 2));
  EXPECT_EQ(p0.at(0, 1), q(1, 2));
  EXPECT_EQ(p1.at(0, 0), q(1, 2));
  EXPECT_EQ(p1.at(0, 1), q(-1, 2));
  EXPECT_EQ(p0 + p1, Operator::identity(Level::at(1), 2));
  EXPECT_TRUE((p0 * p1).is_zero());
}

TEST(Decompose, IdentityIsSumOfProjections) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto dec = decompose(Operator::identity(Level::at(r), level_size(n, r)), n);
      for (const auto& [p, c] : dec.coefficients) {
        EXPECT_EQ(c, make_rat(isotypic_dim(n, p.s()), binom_int(n, r))) << p.str();
      }
    }
  }
}

TEST(Decompose, BasisElementIsUnitVector) {
  for (const ParamTriple& p : valid_triples(5)) {
    const auto dec = decompose(lambda_op(p), 5);
    for (const auto& [t, c] : dec.coefficients) EXPECT_EQ(c, t == p ? Rat(1) : Rat(0)) << t.str();
  }
}

TEST(Decompose, LaplacianEigenvalues) {
  const int n = 6;
  for (int r = 0; r <= n; ++r) {
    const auto dec = decompose(laplacian_block(n, r), n);
    for (const auto& [p, c] : dec.coefficients) {
      EXPECT_EQ(c, -Rat(laplacian_mu(p.s(), n)) * make_rat(isotypic_dim(n, p.s()), binom_int(n, r)));
    }
  }
}

TEST(Decompose, RadonUpAndFullSpace) {
  const int n = 5;
  const auto dec = decompose(radon_up(n, 1, 3), n);
  // Radon lift constants: only s <= 1 appear.
  for (const auto& [p, c] : dec.coefficients) EXPECT_EQ(c != 0, p.s() <= 1) << p.str();
  const auto full = decompose(fourier_matrix(4), 4);
  EXPECT_EQ(full.coefficients.size(), valid_triples(4).size());
  const auto tilde = full.tilde();
  EXPECT_EQ(tilde.size(), full.coefficients.size());
}

TEST(Decompose, RejectsNonEquivariant) {
  std::vector<Rat> diag(9, Rat(0));
  diag[0] = 1;
  const Operator d = Operator::from_rationals(Level::at(1), Level::at(1), 3, 3, diag);
  EXPECT_THROW(decompose(d, 3), std::invalid_argument);
}

TEST(CompositionTuples, CoverEveryProduct) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& t : composition_tuples(n)) {
      EXPECT_TRUE(ParamTriple::valid(n, t.r1, t.r2, t.s));
      EXPECT_TRUE(ParamTriple::valid(n, t.r2, t.r3, t.s));
    }
  }
}

// The structural identities, as property checks over every tuple at small n.
class SmallSuites : public ::testing::TestWithParam<int> {};

TEST_P(SmallSuites, Multiplication) { EXPECT_TRUE(check_multiplication(GetParam()).passed()); }
TEST_P(SmallSuites, AdjointComplement) {
  EXPECT_TRUE(check_adjoint_complement(GetParam()).passed());
}
TEST_P(SmallSuites, TildeRelations) { EXPECT_TRUE(check_tilde_relations(GetParam()).passed()); }
TEST_P(SmallSuites, Laplacian) { EXPECT_TRUE(check_laplacian(GetParam()).passed()); }
TEST_P(SmallSuites, Radon) { EXPECT_TRUE(check_radon(GetParam()).passed()); }
TEST_P(SmallSuites, Spherical) {
  const int n = GetParam();
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= std::min(r, n - r); ++s) {
      const Report rep = check_spherical(n, r, s);
      EXPECT_TRUE(rep.passed()) << r << " " << s;
      EXPECT_EQ(rep.checks.size(), level_size(n, r));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(UpToFive, SmallSuites, ::testing::Range(1, 6));

TEST(Guards, SuiteLimits) {
  EXPECT_THROW(check_multiplication(9), GuardError);
  EXPECT_THROW(check_adjoint_complement(11), GuardError);
  EXPECT_THROW(check_spherical(9, 1, 0), GuardError);
}

}  // namespace
}  // namespace hharm
