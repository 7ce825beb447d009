#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/lattice.hpp"
#include "pdnf/linalg.hpp"
#include "pdnf/systems.hpp"

namespace pdnf {

/// Exact-rank witness for a set of integrals: the Jacobian of (V_1..V_k)
/// evaluated at `point` has rank `rank`.
struct IndependenceCertificate {
  bool independent = false;
  int rank = 0;
  int trials = 0;  ///< points evaluated before stopping
  std::vector<Rational> point;
};

struct IntegralSet {
  std::vector<ScalarSeries> V;
  std::string source;
  std::optional<IndependenceCertificate> certificate;

  std::size_t size() const { return V.size(); }
  bool empty() const { return V.empty(); }
};

/// H_k = y^{m_k} for each lattice generator, as polynomials read through degree N.
inline IntegralSet monomial_integrals(const LatticeBasis& basis, int N) {
  IntegralSet out;
  out.source = "lattice monomials";
  for (const auto& m : basis.generators) out.V.push_back(ScalarSeries::monomial(basis.nvars, N, m));
  return out;
}

inline IntegralSet monomial_integrals(const LatticeBasis& basis) { return monomial_integrals(basis, basis.bound); }

/// H_k o (id + phi)^{-1}: integrals of the normal form carried back to the
/// original coordinates.
inline IntegralSet pullback_integrals(const IntegralSet& H, const VecSeries& phi, int N) {
  IntegralSet out;
  out.source = "pullback of " + H.source;
  if (H.empty()) return out;
  const int n = phi.nvars();
  const VecSeries psi = invert(VecSeries::identity(n, N) + phi.with_truncation(N), N);
  for (const auto& h : H.V) out.V.push_back(compose(h.with_truncation(N), psi, N));
  return out;
}

/// V o F - V through degree N. Needs realizable eigenvalues.
inline ScalarSeries verify_integral_map(const ScalarSeries& V, const MapSystem& F, int N) {
  return compose(V.with_truncation(N), F.full(N), N) - V.truncated(N);
}

/// For a linear map with a possibly symbolic spectrum: V o B = V exactly
/// iff every monomial of V has mu^m = 1. Returns the offending monomials.
inline std::vector<Exponent> linear_integral_violations(const ScalarSeries& V, const EigenSpec& mu) {
  std::vector<Exponent> bad;
  for (const auto& [m, c] : V.terms())
    if (!is_resonant_map(mu, m, std::nullopt)) bad.push_back(m);
  return bad;
}

/// <grad V, lambda y + f> through degree N.
inline ScalarSeries verify_integral_field(const ScalarSeries& V, const FieldSystem& X, int N) {
  return lie_derivative(V.with_truncation(N), X.full(N), N);
}

namespace detail {

/// Solves L(W) = 0 for W with monomials of degree 1..d, where column[k] is
/// L applied to the k-th monomial. Returns the solution space in reduced
/// echelon form, monomials in graded-lex order.
inline std::vector<ScalarSeries> solve_graded_kernel(int n, int d, const std::vector<Exponent>& monos,
                                                     const std::vector<ScalarSeries>& columns) {
  std::vector<Exponent> rows_index;
  {
    std::map<Exponent, std::size_t, GradedLex> seen;
    for (const auto& col : columns)
      for (const auto& [m, c] : col.terms()) seen.emplace(m, 0);
    for (auto& [m, idx] : seen) {
      idx = rows_index.size();
      rows_index.push_back(m);
    }
  }
  std::vector<ScalarSeries> out;
  std::vector<std::vector<Scalar>> kernel;
  if (rows_index.empty()) {
    for (std::size_t k = 0; k < monos.size(); ++k) {
      std::vector<Scalar> e(monos.size(), Scalar(0));
      e[k] = Scalar(1);
      kernel.push_back(std::move(e));
    }
  } else {
    Matrix<Scalar> a(rows_index.size(), std::vector<Scalar>(monos.size(), Scalar(0)));
    std::map<Exponent, std::size_t, GradedLex> row_of;
    for (std::size_t r = 0; r < rows_index.size(); ++r) row_of[rows_index[r]] = r;
    for (std::size_t k = 0; k < monos.size(); ++k)
      for (const auto& [m, c] : columns[k].terms()) a[row_of[m]][k] = c;
    kernel = nullspace(a, monos.size());
  }
  rref(kernel);
  for (const auto& v : kernel) {
    ScalarSeries W(n, d);
    for (std::size_t k = 0; k < monos.size(); ++k) W.set(monos[k], v[k]);
    out.push_back(std::move(W));
  }
  return out;
}

}  // namespace detail

/// Polynomials W of degree <= d, no constant term, with W o F = W through
/// degree d. Monomials of W above d only affect degrees above d, so the
/// truncated system is exact.
inline IntegralSet search_integrals_map(const MapSystem& F, int d) {
  const int n = F.n();
  IntegralSet out;
  out.source = "search (map, degree " + std::to_string(d) + ")";
  const auto monos = exponents_in_degree_range(n, 1, d);
  if (!F.mu.realized()) {
    // Symbolic spectrum: only the linear map can be handled, monomial by monomial.
    if (!F.f.is_zero()) F.mu.require_realized();
    for (const auto& m : monos)
      if (is_resonant_map(F.mu, m, std::nullopt)) out.V.push_back(ScalarSeries::monomial(n, d, m));
    return out;
  }
  const VecSeries full = F.full(d);
  PowerCache<Scalar> cache(full, d);
  std::vector<ScalarSeries> columns;
  for (const auto& m : monos) columns.push_back(cache.power(m) - ScalarSeries::monomial(n, d, m));
  out.V = detail::solve_graded_kernel(n, d, monos, columns);
  return out;
}

/// Polynomials W of degree <= d with <grad W, X> = 0 through degree d.
inline IntegralSet search_integrals_field(const FieldSystem& X, int d) {
  const int n = X.n();
  IntegralSet out;
  out.source = "search (field, degree " + std::to_string(d) + ")";
  const auto monos = exponents_in_degree_range(n, 1, d);
  const VecSeries full = X.full(d);
  std::vector<ScalarSeries> columns;
  for (const auto& m : monos) columns.push_back(lie_derivative(ScalarSeries::monomial(n, d, m), full, d));
  out.V = detail::solve_graded_kernel(n, d, monos, columns);
  return out;
}

/// Exact rank of the Jacobian of V at rational points: first the all-ones
/// point, then pseudo-random points with nonzero coordinates. Stops at the
/// first point of full rank k. A failure only suggests dependence.
inline IndependenceCertificate independence_check(const IntegralSet& V, int trials = 8, std::uint64_t seed = 0) {
  if (V.empty()) throw std::invalid_argument("independence_check: no integrals");
  const int n = V.V.front().nvars();
  const int k = static_cast<int>(V.size());
  std::vector<std::vector<ScalarSeries>> grads;
  for (const auto& v : V.V) {
    std::vector<ScalarSeries> g;
    for (int i = 0; i < n; ++i) g.push_back(derivative(v, i));
    grads.push_back(std::move(g));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  IndependenceCertificate cert;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    std::vector<Rational> pt(static_cast<std::size_t>(n), Rational(1));
    if (t > 0)
      for (auto& x : pt) {
        long a = 0;
        while (a == 0) a = num(rng);
        x = make_rational(a, den(rng));
      }
    std::vector<Scalar> spt(pt.begin(), pt.end());
    Matrix<Scalar> J(static_cast<std::size_t>(k), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int r = 0; r < k; ++r)
      for (int i = 0; i < n; ++i) J[r][i] = evaluate(grads[r][i], spt);
    const int rk = static_cast<int>(rank(J));
    cert.trials = t + 1;
    if (rk > cert.rank || cert.point.empty()) {
      cert.rank = rk;
      cert.point = pt;
    }
    if (rk == k) {
      cert.independent = true;
      break;
    }
  }
  return cert;
}

}  // namespace pdnf
