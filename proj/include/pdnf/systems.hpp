#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdnf/eigen.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/series_ops.hpp"

namespace pdnf {

namespace detail {

inline void check_nonlinear(const VecSeries& f, int n) {
  if (f.size() != n || f.nvars() != n) throw std::invalid_argument("nonlinear part has the wrong dimension");
  for (int j = 0; j < n; ++j)
    for (const auto& [m, c] : f[j].terms())
      if (m.degree() < 2)
        throw std::invalid_argument("nonlinear part of component " + std::to_string(j + 1) +
                                    " has a term of degree " + std::to_string(m.degree()) + " at " + m.str());
}

}  // namespace detail

/// F(x) = B x + f(x) with B = diag(mu). The terms of f are a polynomial:
/// anything not listed is zero, so f can be read at any truncation degree.
struct MapSystem {
  EigenSpec mu;
  VecSeries f;

  MapSystem(EigenSpec spec, VecSeries nonlinear) : mu(std::move(spec)), f(std::move(nonlinear)) {
    if (!mu.is_multiplicative()) throw std::invalid_argument("a map needs a multiplicative spectrum");
    detail::check_nonlinear(f, mu.size());
  }

  int n() const { return mu.size(); }

  /// B y + f(y) through degree N; needs realizable eigenvalues.
  VecSeries full(int N) const {
    return VecSeries::diagonal(mu.require_realized(), N) + f.with_truncation(N);
  }

  /// Splits a full map with diagonal linear part. Non-diagonal linear parts
  /// are rejected: only the diagonalized setting is supported.
  static MapSystem from_full(const VecSeries& F) {
    const int n = F.size();
    const auto A = linear_part(F);
    std::vector<Scalar> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          d[i] = A[i][j];
        } else if (!A[i][j].is_zero()) {
          throw HypothesisError("linear part is not diagonal (entry " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "); supply the system in diagonalized coordinates");
        }
      }
    for (const auto& c : F.components())
      if (!c.coeff(Exponent(n)).is_zero()) throw std::invalid_argument("map has a constant term");
    return MapSystem(EigenSpec::mult_rational(d), F - VecSeries::diagonal(d, F.truncation()));
  }
};

/// dx/dt = A x + f(x) with A = diag(lambda).
struct FieldSystem {
  EigenSpec lambda;
  VecSeries f;

  FieldSystem(EigenSpec spec, VecSeries nonlinear) : lambda(std::move(spec)), f(std::move(nonlinear)) {
    if (lambda.form() != EigenForm::Additive) throw std::invalid_argument("a vector field needs an additive spectrum");
    detail::check_nonlinear(f, lambda.size());
  }

  int n() const { return lambda.size(); }

  VecSeries full(int N) const { return VecSeries::diagonal(lambda.values(), N) + f.with_truncation(N); }

  static FieldSystem from_full(const VecSeries& X) {
    const int n = X.size();
    const auto A = linear_part(X);
    std::vector<Scalar> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          d[i] = A[i][j];
        } else if (!A[i][j].is_zero()) {
          throw HypothesisError("linear part is not diagonal (entry " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "); supply the system in diagonalized coordinates");
        }
      }
    for (const auto& c : X.components())
      if (!c.coeff(Exponent(n)).is_zero()) throw std::invalid_argument("vector field has a constant term");
    return FieldSystem(EigenSpec::additive(d), X - VecSeries::diagonal(d, X.truncation()));
  }
};

}  // namespace pdnf
