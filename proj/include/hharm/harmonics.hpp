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

#ifndef HHARM_HARMONICS_HPP_
#define HHARM_HARMONICS_HPP_

/// @file harmonics.hpp
/// @brief The basis Lambda_s^{r1,r2} of the commutant of S_n on L^2(P(Omega)),
/// its normalizations and the identities relating them.
///
/// Lambda_s^{r1,r2} maps level r1 to level r2 and has matrix entry
/// lambda_s^{r1,r2}(|x2 \ x1|). Irrational normalizations are never applied
/// to matrices: a tilde or bar operator is the plain matrix together with a
/// Surd scale, and relations between them are checked by comparing rational
/// matrices after dividing the scales.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hharm/exact_arith.hpp"
#include "hharm/lattice.hpp"
#include "hharm/operator.hpp"
#include "hharm/parallel.hpp"
#include "hharm/report.hpp"
#include "hharm/special_polys.hpp"

namespace hharm {

/// dim L^2(X_r)_s = C(n, s) - C(n, s - 1), with C(n, -1) = 0.
inline BigInt isotypic_dim(int n, int s) { return binom_int(n, s) - binom_int(n, s - 1); }

/// Plain Lambda_s^{r1,r2}, normalized by lambda(0) = 1.
inline Operator lambda_op(const ParamTriple& p) {
  return intertwiner_from_kernel(p.n(), p.r1(), p.r2(),
                                 [&p](int k) { return hahn_taylor(p, Rat(k)); });
}

/// [n-r1]_s [r2]_s / (sqrt(C(n-2s, r1-s) C(n-2s, r2-s)) s! [n-s+1]_s).
inline Surd alpha_const(const ParamTriple& p) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  const Rat q = falling(Rat(n - r1), s) * falling(Rat(r2), s) /
                (Rat(factorial(s)) * falling(Rat(n - s + 1), s));
  const Rat radicand = Rat(binom_int(n - 2 * s, r1 - s) * binom_int(n - 2 * s, r2 - s));
  return Surd(q) / Surd::sqrt(radicand);
}

/// 1 / sqrt(C(n,s) - C(n,s-1)).
inline Surd beta_const(int n, int s) { return Surd::sqrt(Rat(1) / Rat(isotypic_dim(n, s))); }

enum class Normalization { plain, tilde, bar };

inline std::string to_string(Normalization norm) {
  switch (norm) {
    case Normalization::plain: return "plain";
    case Normalization::tilde: return "tilde";
    case Normalization::bar: return "bar";
  }
  return "?";
}

/// The operator scale * matrix, with matrix the plain Lambda.
struct BasisElement {
  ParamTriple params;
  Operator matrix;
  Normalization normalization;
  Surd scale;
};

inline Surd normalization_scale(const ParamTriple& p, Normalization norm) {
  switch (norm) {
    case Normalization::plain: return Surd(Rat(1));
    case Normalization::tilde: return alpha_const(p);
    case Normalization::bar: return beta_const(p.n(), p.s()) * alpha_const(p);
  }
  throw std::invalid_argument("normalization_scale: unknown normalization");
}

inline BasisElement basis_element(const ParamTriple& p, Normalization norm = Normalization::plain) {
  return BasisElement{p, lambda_op(p), norm, normalization_scale(p, norm)};
}

/// P_s^r = (C(n,s) - C(n,s-1)) / C(n,r) * Lambda_s^{r,r}.
inline Operator projection(int n, int r, int s) {
  const ParamTriple p(n, r, r, s);
  return lambda_op(p).scaled(make_rat(isotypic_dim(n, s), binom_int(n, r)));
}

/// Closed form of tr(Lambda Lambda*):
///   [r1]_s [n-r2]_s / ([n-r1]_s [r2]_s) * C(n,r1) C(n,r2) / (C(n,s) - C(n,s-1)).
inline Rat hs_norm_formula(const ParamTriple& p) {
  const int n = p.n(), r1 = p.r1(), r2 = p.r2(), s = p.s();
  return falling(Rat(r1), s) * falling(Rat(n - r2), s) /
         (falling(Rat(n - r1), s) * falling(Rat(r2), s)) *
         Rat(binom_int(n, r1) * binom_int(n, r2)) / Rat(isotypic_dim(n, s));
}

/// tr(Lambda Lambda*) as sum over the window of omega(k) lambda(k)^2.
inline Rat hs_norm_by_weights(const ParamTriple& p) {
  Rat sum(0);
  for (int k = p.k_min(); k <= p.k_max(); ++k) {
    const Rat v = hahn_taylor(p, Rat(k));
    sum += Rat(weight(p.n(), p.r1(), p.r2(), k)) * v * v;
  }
  return sum;
}

/// Lazily built plain basis operators, safe to share between workers.
class BasisCache {
 public:
  const Operator& get(const ParamTriple& p) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      const auto it = ops_.find(p);
      if (it != ops_.end()) return *it->second;
    }
    auto op = std::make_shared<const Operator>(lambda_op(p));
    std::lock_guard<std::mutex> lock(mutex_);
    return *ops_.emplace(p, std::move(op)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<ParamTriple, std::shared_ptr<const Operator>> ops_;
};

inline Params triple_params(const ParamTriple& p) {
  return {{"n", p.n()}, {"r1", p.r1()}, {"r2", p.r2()}, {"s", p.s()}};
}

/// Records a * A == b * B for Surd scalars and rational matrices.
inline void check_scaled_equal(Report& report, std::string id, Params params, const Surd& a,
                               const Operator& lhs, const Surd& b, const Operator& rhs) {
  if (a.is_zero() || b.is_zero()) {
    const bool ok = (a.is_zero() || lhs.is_zero()) && (b.is_zero() || rhs.is_zero());
    check_true(report, std::move(id), std::move(params), ok, "one side vanishes, the other not");
    return;
  }
  const Surd q = b / a;
  if (!q.is_rational()) {
    check_true(report, std::move(id), std::move(params), lhs.is_zero() && rhs.is_zero(),
               "irrational scale ratio " + q.str());
    return;
  }
  check_equal(report, std::move(id), std::move(params), lhs, rhs.scaled(q.rational()));
}

/// Runs fn(item, report_part) for each item on the worker pool and merges the
/// parts in item order.
template <class Item, class Fn>
Report run_items(std::string suite, int n, const std::vector<Item>& items, Fn&& fn) {
  std::vector<Report> parts(items.size());
  parallel_for(items.size(), [&](std::size_t i) { fn(items[i], parts[i]); });
  Report out;
  out.suite = std::move(suite);
  out.n = n;
  for (auto& part : parts) out.append(std::move(part));
  return out;
}

/// Coefficients in the plain basis.
struct Decomposition {
  std::map<ParamTriple, Rat> coefficients;

  /// Coefficients with respect to the tilde basis: c / alpha.
  std::map<ParamTriple, Surd> tilde() const {
    std::map<ParamTriple, Surd> out;
    for (const auto& [p, c] : coefficients) out.emplace(p, Surd(c) / alpha_const(p));
    return out;
  }
};

/// Expands an equivariant operator (one level block, or the full space) in
/// the plain basis via Hilbert-Schmidt projections, and confirms the residual
/// vanishes.
inline Decomposition decompose(const Operator& op, int n, BasisCache* cache = nullptr) {
  for (const Permutation& g : adjacent_transpositions(n)) {
    if (!is_equivariant(op, n, g)) {
      throw std::invalid_argument("decompose: operator does not commute with the group action");
    }
  }
  BasisCache local;
  BasisCache& basis = cache != nullptr ? *cache : local;
  const bool full = op.domain().is_full();
  if (full != op.codomain().is_full()) {
    throw std::invalid_argument("decompose: mixed full and level operator");
  }
  Decomposition out;
  auto expand_block = [&](const Operator& block, int r1, int r2) {
    Operator rebuilt(Level::at(r1), Level::at(r2), block.rows(), block.cols());
    for (int s = 0; s <= usual_rank(n, r1, r2); ++s) {
      const ParamTriple p(n, r1, r2, s);
      const Operator& lam = basis.get(p);
      const Rat c = hs_inner(block, lam) / hs_inner(lam, lam);
      if (c != 0) rebuilt = rebuilt + lam.scaled(c);
      out.coefficients.emplace(p, c);
    }
    if (!(rebuilt == block)) {
      throw std::logic_error("decompose: nonzero residual on block " + std::to_string(r1) +
                             "->" + std::to_string(r2));
    }
  };
  if (full) {
    for (int r1 = 0; r1 <= n; ++r1) {
      for (int r2 = 0; r2 <= n; ++r2) expand_block(restrict_block(op, n, r1, r2), r1, r2);
    }
  } else {
    expand_block(op, op.domain().r, op.codomain().r);
  }
  return out;
}

/// Every (r1, r2, r3, s) for which both factors of a product exist.
struct CompositionTuple {
  int r1, r2, r3, s;
};

inline std::vector<CompositionTuple> composition_tuples(int n) {
  std::vector<CompositionTuple> out;
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = 0; r2 <= n; ++r2) {
      for (int r3 = 0; r3 <= n; ++r3) {
        const int top = std::min(usual_rank(n, r1, r2), usual_rank(n, r2, r3));
        for (int s = 0; s <= top; ++s) out.push_back({r1, r2, r3, s});
      }
    }
  }
  return out;
}

/// Lambda_s^{r2,r3} o Lambda_s^{r1,r2} = C(n,r2)/d_s * Lambda_s^{r1,r3}, the
/// recovered cocycle and its symmetries, and vanishing of products across
/// different s.
inline Report check_multiplication(int n) {
  require_guard(n, 8, "check_multiplication");
  BasisCache basis;
  const auto tuples = composition_tuples(n);
  std::vector<std::optional<Rat>> cocycle(tuples.size());
  Report out = run_items("multiplication", n, tuples, [&](const CompositionTuple& t, Report& rep) {
    const Params params{{"n", n}, {"r1", t.r1}, {"r2", t.r2}, {"r3", t.r3}, {"s", t.s}};
    const Operator lhs = basis.get(ParamTriple(n, t.r2, t.r3, t.s)) *
                         basis.get(ParamTriple(n, t.r1, t.r2, t.s));
    const Operator& target = basis.get(ParamTriple(n, t.r1, t.r3, t.s));
    const Rat expected = make_rat(binom_int(n, t.r2), isotypic_dim(n, t.s));
    check_equal(rep, "product", params, lhs, target.scaled(expected));
    const auto c = proportionality(lhs, target);
    check_true(rep, "cocycle_exists", params, c.has_value(), "product not proportional");
    if (c) {
      check_equal(rep, "cocycle_value", params, *c, expected);
      const std::size_t index = static_cast<std::size_t>(&t - tuples.data());
      cocycle[index] = *c;
    }
    // Products across different isotypic components vanish.
    for (int s2 = 0; s2 <= usual_rank(n, t.r1, t.r2); ++s2) {
      if (s2 == t.s) continue;
      const Operator cross = basis.get(ParamTriple(n, t.r2, t.r3, t.s)) *
                             basis.get(ParamTriple(n, t.r1, t.r2, s2));
      check_true(rep, "cross_component_zero",
                 {{"n", n}, {"r1", t.r1}, {"r2", t.r2}, {"r3", t.r3}, {"s", t.s}, {"s2", s2}},
                 cross.is_zero(), "nonzero product");
    }
  });

  // Symmetries of the recovered cocycle.
  std::map<std::tuple<int, int, int, int>, Rat> table;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (cocycle[i]) table.emplace(std::make_tuple(tuples[i].r1, tuples[i].r2, tuples[i].r3, tuples[i].s), *cocycle[i]);
  }
  std::map<std::pair<int, int>, Rat> by_middle;
  for (const auto& [key, c] : table) {
    const auto [r1, r2, r3, s] = key;
    const Params params{{"n", n}, {"r1", r1}, {"r2", r2}, {"r3", r3}, {"s", s}};
    const auto [it, fresh] = by_middle.emplace(std::make_pair(r2, s), c);
    if (!fresh) check_equal(out, "cocycle_depends_on_middle_only", params, c, it->second);
    auto compare = [&](const char* id, int a, int b, int d) {
      const auto other = table.find(std::make_tuple(a, b, d, s));
      if (other != table.end()) check_equal(out, id, params, c, other->second);
    };
    compare("cocycle_reversal", r3, r2, r1);
    compare("cocycle_complement_first", n - r1, r2, r3);
    compare("cocycle_complement_middle", r1, n - r2, r3);
    compare("cocycle_complement_last", r1, r2, n - r3);
  }
  return out;
}

/// Complement and adjoint relations, Hilbert-Schmidt norms and
/// orthogonality, and the dimension count of each diagonal block.
inline Report check_adjoint_complement(int n) {
  require_guard(n, 10, "check_adjoint_complement");
  BasisCache basis;
  const auto triples = valid_triples(n);
  Report out = run_items("adjoint", n, triples, [&](const ParamTriple& p, Report& rep) {
    const int r1 = p.r1(), r2 = p.r2(), s = p.s();
    const Params params = triple_params(p);
    const Operator& lam = basis.get(p);
    const Rat sign = (s % 2 == 0) ? Rat(1) : Rat(-1);

    const Rat c1 = sign * falling(Rat(r1), s) / falling(Rat(n - r1), s);
    check_equal(rep, "right_complement", params, lam * complement_op(n, n - r1),
                basis.get(ParamTriple(n, n - r1, r2, s)).scaled(c1));

    const Rat c2 = sign * falling(Rat(n - r2), s) / falling(Rat(r2), s);
    check_equal(rep, "left_complement", params, complement_op(n, r2) * lam,
                basis.get(ParamTriple(n, r1, n - r2, s)).scaled(c2));

    const Rat c3 = falling(Rat(r1), s) * falling(Rat(n - r2), s) /
                   (falling(Rat(n - r1), s) * falling(Rat(r2), s));
    check_equal(rep, "adjoint", params, lam.transpose(),
                basis.get(ParamTriple(n, r2, r1, s)).scaled(c3));

    const Rat norm = hs_inner(lam, lam);
    check_equal(rep, "hs_norm", params, norm, hs_norm_formula(p));
    check_equal(rep, "hs_norm_by_weights", params, norm, hs_norm_by_weights(p));
    for (int s2 = s + 1; s2 <= usual_rank(n, r1, r2); ++s2) {
      check_equal(rep, "hs_orthogonal",
                  {{"n", n}, {"r1", r1}, {"r2", r2}, {"s", s}, {"s2", s2}},
                  hs_inner(lam, basis.get(ParamTriple(n, r1, r2, s2))), Rat(0));
    }
  });
  for (int r = 0; r <= n; ++r) {
    check_equal(out, "diagonal_block_dimension", {{"n", n}, {"r", r}},
                BigInt(usual_rank(n, r, r) + 1),
                BigInt(static_cast<long long>(orbit_histogram(n, r, r).size())));
  }
  return out;
}

/// Relations of the tilde and bar normalizations. The composition law is
/// checked with right-hand level pair (r1, r3); see the report notes.
inline Report check_tilde_relations(int n) {
  require_guard(n, 8, "check_tilde_relations");
  BasisCache basis;
  const auto triples = valid_triples(n);
  Report out = run_items("tilde", n, triples, [&](const ParamTriple& p, Report& rep) {
    const int r1 = p.r1(), r2 = p.r2(), s = p.s();
    const Params params = triple_params(p);
    const Operator& lam = basis.get(p);
    const Surd sign = Surd(Rat(s % 2 == 0 ? 1 : -1));
    for (Normalization norm : {Normalization::tilde, Normalization::bar}) {
      const std::string tag = to_string(norm) + "_";
      const Surd a = normalization_scale(p, norm);
      const ParamTriple q_adj(n, r2, r1, s);
      check_scaled_equal(rep, tag + "adjoint", params, a, lam.transpose(),
                         normalization_scale(q_adj, norm), basis.get(q_adj));
      const ParamTriple q_right(n, n - r1, r2, s);
      check_scaled_equal(rep, tag + "right_complement", params, a,
                         lam * complement_op(n, n - r1), sign * normalization_scale(q_right, norm),
                         basis.get(q_right));
      const ParamTriple q_left(n, r1, n - r2, s);
      check_scaled_equal(rep, tag + "left_complement", params, a, complement_op(n, r2) * lam,
                         sign * normalization_scale(q_left, norm), basis.get(q_left));
      // Lambda* Lambda lands on the projection P_s^{r1}; for bar it is beta^2 P.
      const Surd norm_sq = norm == Normalization::tilde ? Surd(Rat(1)) : beta_const(n, s) * beta_const(n, s);
      check_scaled_equal(rep, tag + "unitary", params, a * a, lam.transpose() * lam, norm_sq,
                         projection(n, r1, s));
    }
    if (r1 == r2) {
      check_scaled_equal(rep, "tilde_diagonal_is_projection", params, alpha_const(p), lam,
                         Surd(Rat(1)), projection(n, r1, s));
      check_equal(rep, "alpha_diagonal_closed_form", params, alpha_const(p),
                  Surd(make_rat(isotypic_dim(n, s), binom_int(n, r1))));
    }
    // Orthonormality of the bar basis within the block (r1, r2); distinct
    // blocks act between different levels and are orthogonal trivially.
    for (int s2 = s; s2 <= usual_rank(n, r1, r2); ++s2) {
      const ParamTriple q(n, r1, r2, s2);
      const Surd value = normalization_scale(p, Normalization::bar) *
                         normalization_scale(q, Normalization::bar) *
                         Surd(hs_inner(lam, basis.get(q)));
      check_equal(rep, "bar_orthonormal", {{"n", n}, {"r1", r1}, {"r2", r2}, {"s", s}, {"s2", s2}},
                  value, Surd(Rat(s2 == s ? 1 : 0)));
    }
    // Composition laws over every middle level r2 -> r3.
    for (int r3 = 0; r3 <= n; ++r3) {
      if (s > usual_rank(n, r2, r3)) continue;
      const ParamTriple second(n, r2, r3, s);
      const ParamTriple target(n, r1, r3, s);
      const Operator product = basis.get(second) * lam;
      const Params tp{{"n", n}, {"r1", r1}, {"r2", r2}, {"r3", r3}, {"s", s}};
      check_scaled_equal(rep, "tilde_composition", tp, alpha_const(second) * alpha_const(p),
                         product, alpha_const(target), basis.get(target));
      check_scaled_equal(rep, "bar_composition", tp,
                         normalization_scale(second, Normalization::bar) *
                             normalization_scale(p, Normalization::bar),
                         product,
                         beta_const(n, s) * normalization_scale(target, Normalization::bar),
                         basis.get(target));
    }
  });
  out.notes.push_back(
      "composition laws are checked as tilde(r2,r3) o tilde(r1,r2) = tilde(r1,r3) and "
      "bar(r2,r3) o bar(r1,r2) = beta_s bar(r1,r3); the form with right-hand levels (r1,r2) "
      "only agrees when r2 = r3");
  return out;
}

/// L o Lambda + mu_s Lambda = 0, the spectral resolution of each Laplacian
/// block, and the projection identities.
inline Report check_laplacian(int n) {
  require_guard(n, 10, "check_laplacian");
  BasisCache basis;
  std::vector<Operator> blocks;
  for (int r = 0; r <= n; ++r) blocks.push_back(laplacian_block(n, r));
  const auto triples = valid_triples(n);
  Report out = run_items("laplacian", n, triples, [&](const ParamTriple& p, Report& rep) {
    const Operator& lam = basis.get(p);
    const Operator lhs = blocks[p.r2()] * lam + lam.scaled(Rat(laplacian_mu(p.s(), n)));
    check_true(rep, "eigen_relation", triple_params(p), lhs.is_zero(), "nonzero residual");
  });

  std::vector<int> levels;
  for (int r = 0; r <= n; ++r) levels.push_back(r);
  out.append(run_items("laplacian", n, levels, [&](const int& r, Report& rep) {
    const Params params{{"n", n}, {"r", r}};
    const Operator& lap = blocks[r];
    check_equal(rep, "symmetric", params, lap, lap.transpose());
    check_true(rep, "constants_in_kernel", params,
               (lap * basis.get(ParamTriple(n, 0, r, 0))).is_zero(), "L 1 != 0");
    const std::size_t dim = lap.rows();
    const int top = std::min(r, n - r);
    std::vector<Operator> proj;
    for (int s = 0; s <= top; ++s) proj.push_back(projection(n, r, s));
    Operator total(Level::at(r), Level::at(r), dim, dim);
    Operator spectral(Level::at(r), Level::at(r), dim, dim);
    for (int s = 0; s <= top; ++s) {
      const Params ps{{"n", n}, {"r", r}, {"s", s}};
      total = total + proj[s];
      spectral = spectral + proj[s].scaled(-Rat(laplacian_mu(s, n)));
      check_equal(rep, "projection_idempotent", ps, proj[s] * proj[s], proj[s]);
      check_equal(rep, "projection_symmetric", ps, proj[s], proj[s].transpose());
      check_equal(rep, "projection_trace", ps, proj[s].trace(), Rat(isotypic_dim(n, s)));
      for (int s2 = s + 1; s2 <= top; ++s2) {
        check_true(rep, "projections_orthogonal", {{"n", n}, {"r", r}, {"s", s}, {"s2", s2}},
                   (proj[s] * proj[s2]).is_zero(), "nonzero product");
      }
    }
    check_equal(rep, "projection_constants", params, proj[0],
                basis.get(ParamTriple(n, r, r, 0)).scaled(make_rat(1, binom_int(n, r))));
    check_equal(rep, "projections_complete", params, total, Operator::identity(Level::at(r), dim));
    check_equal(rep, "spectral_resolution", params, lap, spectral);
  }));
  for (int s = 0; s <= n / 2; ++s) {
    for (int s2 = s + 1; s2 <= n / 2; ++s2) {
      check_true(out, "mu_distinct", {{"n", n}, {"s", s}, {"s2", s2}},
                 laplacian_mu(s, n) != laplacian_mu(s2, n), "equal eigenvalues");
    }
  }
  return out;
}

/// Functional equation of the spherical function xi(x, x') = lambda_s^r(|x \ x'|):
/// the average of xi(y, x2) over the stabilizer orbit of x1 about x0 equals
/// xi(x1, x0) xi(x0, x2). The stabilizer orbit of x1 is {y : |y \ x0| = |x1 \ x0|}.
inline Report check_spherical(int n, int r, int s) {
  require_guard(n, 8, "check_spherical");
  const ParamTriple p(n, r, r, s);
  const int top = std::min(r, n - r);
  std::vector<Rat> lam(top + 1);
  for (int k = 0; k <= top; ++k) lam[k] = hahn_taylor(p, Rat(k));
  const auto xs = level_elements(n, r);
  Report out;
  out.suite = "spherical";
  out.n = n;
  for (std::size_t i0 = 0; i0 < xs.size(); ++i0) {
    const SubsetId x0 = xs[i0];
    const Params params{{"n", n}, {"r", r}, {"s", s}, {"x0", static_cast<long long>(x0.bits)}};
    bool ok = lam[0] == 1;
    std::string detail;
    std::vector<int> cls(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) cls[j] = diff_size(xs[j], x0);
    for (std::size_t i2 = 0; i2 < xs.size() && ok; ++i2) {
      const SubsetId x2 = xs[i2];
      // hist[a][b] = #{y : |y \ x0| = a, |y \ x2| = b}.
      std::vector<std::vector<long long>> hist(top + 1, std::vector<long long>(top + 1, 0));
      for (std::size_t j = 0; j < xs.size(); ++j) ++hist[cls[j]][diff_size(xs[j], x2)];
      const Rat outer = lam[diff_size(x0, x2)];
      for (int a = 0; a <= top; ++a) {
        long long count = 0;
        Rat sum(0);
        for (int b = 0; b <= top; ++b) {
          count += hist[a][b];
          sum += Rat(hist[a][b]) * lam[b];
        }
        if (count == 0) continue;
        const Rat average = sum / Rat(count);
        const Rat rhs = lam[a] * outer;
        if (average != rhs) {
          ok = false;
          detail = "x2=" + std::to_string(x2.bits) + " class " + std::to_string(a) + ": " +
                   to_string(average) + " vs " + to_string(rhs);
          break;
        }
      }
    }
    check_true(out, "functional_equation", params, ok, detail);
  }
  return out;
}

/// The Radon relations: the down transform kills the top component, the up
/// transform carries Lambda_s^{r1,s} to C(r2, s) Lambda_s^{r1,r2}, adjointness,
/// and equivariance of the structural operators for small n.
inline Report check_radon(int n) {
  require_guard(n, 10, "check_radon");
  BasisCache basis;
  const auto triples = valid_triples(n);
  Report out = run_items("radon", n, triples, [&](const ParamTriple& p, Report& rep) {
    const int r1 = p.r1(), r2 = p.r2(), s = p.s();
    const Params params = triple_params(p);
    if (r2 == s && s >= 1) {
      check_true(rep, "down_annihilates", params, (radon_down(n, s, s - 1) * basis.get(p)).is_zero(),
                 "nonzero product");
    }
    if (r2 >= s && ParamTriple::valid(n, r1, s, s)) {
      const Operator lifted = radon_up(n, s, r2) * basis.get(ParamTriple(n, r1, s, s));
      const auto c = proportionality(lifted, basis.get(p));
      check_true(rep, "lift_proportional", params, c.has_value(), "not proportional");
      if (c) check_equal(rep, "lift_constant", params, *c, Rat(binom_int(r2, s)));
    }
  });
  for (int r1 = 0; r1 <= n; ++r1) {
    for (int r2 = r1; r2 <= n; ++r2) {
      check_equal(out, "down_is_transpose", {{"n", n}, {"r1", r1}, {"r2", r2}},
                  radon_down(n, r2, r1), radon_up(n, r1, r2).transpose());
    }
  }
  if (n <= 6) {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(n));
    std::vector<Permutation> perms = adjacent_transpositions(n);
    for (int i = 0; i < 50; ++i) perms.push_back(random_permutation(n, rng));
    for (int r1 = 0; r1 <= n; ++r1) {
      for (int r2 = r1; r2 <= n; ++r2) {
        const Operator up = radon_up(n, r1, r2);
        const Operator down = radon_down(n, r2, r1);
        bool ok = true;
        for (const auto& g : perms) ok = ok && is_equivariant(up, n, g) && is_equivariant(down, n, g);
        check_true(out, "radon_equivariant", {{"n", n}, {"r1", r1}, {"r2", r2}}, ok, "fails");
      }
      const Operator comp = complement_op(n, r1);
      bool ok = true;
      for (const auto& g : perms) ok = ok && is_equivariant(comp, n, g);
      check_true(out, "complement_equivariant", {{"n", n}, {"r", r1}}, ok, "fails");
      check_equal(out, "complement_involution", {{"n", n}, {"r", r1}},
                  complement_op(n, n - r1) * comp, Operator::identity(Level::at(r1), comp.cols()));
    }
  }
  return out;
}

}  // namespace hharm

#endif  // HHARM_HARMONICS_HPP_
