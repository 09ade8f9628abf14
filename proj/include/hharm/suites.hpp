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

#ifndef HHARM_SUITES_HPP_
#define HHARM_SUITES_HPP_

/// @file suites.hpp
/// @brief Named verification suites. A suite at size n runs its checks for
/// every ground-set size 1..n and merges them into one Report.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hharm/exact_arith.hpp"
#include "hharm/fourier.hpp"
#include "hharm/harmonics.hpp"
#include "hharm/lattice.hpp"
#include "hharm/report.hpp"
#include "hharm/special_polys.hpp"

namespace hharm {

/// Deterministic stream per parameter tuple.
inline std::mt19937_64 tuple_rng(const ParamTriple& p, std::uint64_t salt = 0) {
  const std::uint64_t seed = 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(p.n() + 1) +
                             0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(p.r1() + 1) +
                             0x94d049bb133111ebULL * static_cast<std::uint64_t>(p.r2() + 1) +
                             0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(p.s() + 1) + salt;
  return std::mt19937_64(seed);
}

/// a / b with a in [-50, 50] and b in [1, 17].
inline Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 17);
  const int a = num(rng);
  const int b = den(rng);
  return make_rat(BigInt(a), BigInt(b));
}

/// Forward differences of order `order` of f at points t0, t0+1, ...
template <class F>
Rat forward_difference(F&& f, const Rat& t0, int order) {
  Rat sum(0);
  for (int j = 0; j <= order; ++j) {
    const Rat term = Rat(binom_int(order, j)) * f(t0 + j);
    sum += ((order - j) % 2 == 0) ? term : Rat(-term);
  }
  return sum;
}

/// Cross-formula agreement, normalization, degree, difference and
/// hypergeometric relations of the kernels.
inline Report check_kernels(int n) {
  require_guard(n, 12, "check_kernels");
  const auto triples = valid_triples(n);
  return run_items("kernels", n, triples, [n](const ParamTriple& p, Report& rep) {
    const int r1 = p.r1(), r2 = p.r2(), s = p.s();
    const Params params = triple_params(p);
    for (int k = p.k_min(); k <= p.k_max(); ++k) {
      const Params pk{{"n", n}, {"r1", r1}, {"r2", r2}, {"s", s}, {"k", k}};
      const Rat taylor = hahn_taylor(p, Rat(k));
      check_equal(rep, "radon_form", pk, hahn_radon(p, Rat(k)), taylor);
      check_equal(rep, "rodrigues_form", pk, hahn_rodrigues(p, Rat(k)), taylor);
      check_equal(rep, "classical_first", pk, hahn_classical(p, k, ClassicalForm::first), taylor);
      check_equal(rep, "classical_second", pk, hahn_classical(p, k, ClassicalForm::second), taylor);
    }
    check_equal(rep, "value_at_zero", params, hahn_taylor(p, Rat(0)), Rat(1));
    const Rat at_r2 = falling(Rat(r1), s) / falling(Rat(n - r1), s);
    check_equal(rep, "value_at_r2", params, hahn_taylor(p, Rat(r2)), s % 2 == 0 ? at_r2 : Rat(-at_r2));

    auto rng = tuple_rng(p);
    for (int trial = 0; trial < 5; ++trial) {
      const Rat t = random_rational(rng);
      const Params pt{{"n", n}, {"r1", r1}, {"r2", r2}, {"s", s}, {"trial", trial}};
      const Rat taylor = hahn_taylor(p, t);
      check_equal(rep, "radon_form_rational", pt, hahn_radon(p, t), taylor);
      check_equal(rep, "rodrigues_form_rational", pt, hahn_rodrigues(p, t), taylor);
      check_equal(rep, "hypergeometric_residual", pt, hypergeometric_residual(p, t), Rat(0));
      if (s >= 1) {
        check_equal(rep, "delta_lowering", pt, hahn_delta(p, t), hahn_taylor(p, t + 1) - taylor);
      }
    }

    // Degree exactly s: the s-th difference is s! times the leading coefficient.
    auto f = [&p](const Rat& t) { return hahn_taylor(p, t); };
    const Rat t0(p.k_min());
    check_equal(rep, "degree_bound", params, forward_difference(f, t0, s + 1), Rat(0));
    check_equal(rep, "leading_coefficient", params, forward_difference(f, t0, s),
                Rat(factorial(s)) * hahn_leading(p));
    check_true(rep, "leading_nonzero", params, hahn_leading(p) != 0, "zero");
    // The same differences taken on the integer window alone, where it is long enough.
    const KernelTable table(p);
    if (static_cast<int>(table.values().size()) >= s + 2) {
      auto g = [&table](const Rat& t) { return table.at(static_cast<int>(numerator_of(t))); };
      check_equal(rep, "window_degree_bound", params, forward_difference(g, t0, s + 1), Rat(0));
    }
    if (s >= 1) {
      const Rat expected = -Rat(laplacian_mu(s, n)) / Rat(BigInt(r2) * (n - r1));
      check_equal(rep, "delta_at_zero", params, hahn_delta(p, Rat(0)), expected);
    }

    // Recover mu from the difference equation at a point where h does not vanish.
    for (int k = p.k_min(); k <= p.k_max() + 1; ++k) {
      const Rat t(k);
      const Rat h = hahn_taylor(p, t);
      if (h == 0) continue;
      const Rat rest = hypergeometric_residual(p, t) - Rat(laplacian_mu(s, n)) * h;
      check_equal(rep, "mu_recovered", params, -rest / h, Rat(BigInt(s) * (n - s + 1)));
      break;
    }
  });
}

/// Orbit counts against the multinomial weight, the weight identities and
/// the Rodrigues formula on the integer lattice.
inline Report check_weights(int n) {
  require_guard(n, 12, "check_weights");
  std::vector<std::pair<int, int>> levels;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) levels.emplace_back(r1, r2);
  }
  return run_items("weights", n, levels, [n](const std::pair<int, int>& lv, Report& rep) {
    const auto [r1, r2] = lv;
    const auto hist = orbit_histogram(n, r1, r2);
    for (int k = -1; k <= n + 1; ++k) {
      const auto it = hist.find(k);
      check_equal(rep, "orbit_count", {{"n", n}, {"r1", r1}, {"r2", r2}, {"k", k}},
                  it == hist.end() ? BigInt(0) : it->second, weight(n, r1, r2, k));
    }
    if (r1 == r2) {
      check_equal(rep, "diagonal", {{"n", n}, {"r", r1}}, weight(n, r1, r1, 0), binom_int(n, r1));
    }
    const int k_min = std::max(0, r2 - r1);
    const int k_max = std::min(n - r1, r2);
    for (int t = k_min - 1; t <= k_max + 1; ++t) {
      const Params pt{{"n", n}, {"r1", r1}, {"r2", r2}, {"t", t}};
      const auto [d_lhs, d_rhs] = weight_difference_identity(n, r1, r2, t);
      check_equal(rep, "weight_difference", pt, d_lhs, d_rhs);
      if (r1 >= 1 && r2 >= 1 && n >= 2) {
        const auto [s_lhs, s_rhs] = weight_shift_identity(n, r1, r2, t);
        check_equal(rep, "weight_shift", pt, s_lhs, s_rhs);
      }
      for (int s = 0; s <= usual_rank(n, r1, r2); ++s) {
        const auto [lhs, rhs] = rodrigues_check(ParamTriple(n, r1, r2, s), t);
        check_equal(rep, "rodrigues",
                    {{"n", n}, {"r1", r1}, {"r2", r2}, {"s", s}, {"t", t}}, lhs, rhs);
      }
    }
  });
}

inline Report check_spherical_all(int n) {
  Report out;
  out.suite = "spherical";
  out.n = n;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= std::min(r, n - r); ++s) out.append(check_spherical(n, r, s));
  }
  return out;
}

struct SuiteInfo {
  const char* name;
  int max_n;
  Report (*run)(int n);
};

/// Registered suites in canonical order, with the largest size each allows.
inline const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> kSuites = {
      {"kernels", 12, &check_kernels},
      {"weights", 12, &check_weights},
      {"multiplication", 8, &check_multiplication},
      {"adjoint", 10, &check_adjoint_complement},
      {"tilde", 8, &check_tilde_relations},
      {"laplacian", 10, &check_laplacian},
      {"spherical", 8, &check_spherical_all},
      {"radon", 10, &check_radon},
      {"fourier", 10, &check_fourier_decomposition},
      {"theorem5", 8, &check_theorem5},
      {"krawtchouk", 20, &check_krawtchouk},
  };
  return kSuites;
}

inline const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& info : suite_registry()) {
    if (name == info.name) return info;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

/// Runs a suite for sizes 1..n. A negative n selects the suite maximum.
inline Report run_suite(const std::string& name, int n = -1, bool timed = false) {
  const SuiteInfo& info = find_suite(name);
  if (n < 0) n = info.max_n;
  require_guard(n, info.max_n, std::string("suite ") + info.name);
  const auto start = std::chrono::steady_clock::now();
  Report out;
  out.suite = info.name;
  out.n = n;
  for (int m = 1; m <= n; ++m) out.append(info.run(m));
  if (name == "fourier") {
    // The fast transform reaches sizes the dense matrices cannot.
    for (int m = 1; m <= 16; ++m) out.append(check_fwht_involution(m));
  }
  if (timed) {
    out.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  }
  return out;
}

}  // namespace hharm

#endif  // HHARM_SUITES_HPP_
