#pragma once

#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/integrals.hpp"
#include "pdnf/systems.hpp"

namespace pdnf {

/// grad V_1 x ... x grad V_{n-1}. Each V_i is a first integral of the result.
inline VecSeries cross_field(const IntegralSet& V) {
  if (V.empty()) throw std::invalid_argument("cross_field: no integrals");
  const int n = V.V.front().nvars();
  if (static_cast<int>(V.size()) != n - 1)
    throw std::invalid_argument("cross_field: need exactly n-1 = " + std::to_string(n - 1) + " integrals, got " +
                                std::to_string(V.size()));
  std::vector<VecSeries> grads;
  for (const auto& v : V.V) grads.push_back(gradient(v));
  return cross(grads);
}

/// <grad V_i, X> for every i.
inline std::vector<ScalarSeries> tangency_residuals(const IntegralSet& V, const VecSeries& X) {
  std::vector<ScalarSeries> out;
  for (const auto& v : V.V) out.push_back(lie_derivative(v, X, X.truncation()));
  return out;
}

/// Full inverse of F = B (id + B^{-1} f) through degree N.
inline VecSeries inverse_map(const MapSystem& F, int N) {
  const auto mu = F.mu.require_realized();
  const int n = F.n();
  std::vector<Scalar> inv;
  for (const auto& m : mu) {
    if (m.is_zero()) throw HypothesisError("map has a zero eigenvalue and is not invertible");
    inv.push_back(Scalar(1) / m);
  }
  VecSeries unit = VecSeries::identity(n, N);
  for (int j = 0; j < n; ++j) unit[j] += F.f[j].with_truncation(N) * inv[j];
  return compose(invert(unit, N), VecSeries::diagonal(inv, N), N);
}

struct EmbeddingField {
  VecSeries X;
  int order = 0;
  IntegralSet integrals;
  ScalarSeries det_at_inverse;  ///< det DF o F^{-1}
  VecSeries equivariance_residual;
  std::vector<ScalarSeries> tangency;
  bool equivariant = false;
  bool tangent = false;
};

/// DF(y) X(y) - X(F(y)) through degree N.
inline VecSeries verify_equivariance(const MapSystem& F, const VecSeries& X, int N) {
  const VecSeries full = F.full(N);
  return matvec(jacobian(full), X.with_truncation(N), N) - compose(X.with_truncation(N), full, N);
}

/// X(y) = det DF(F^{-1}(y)) (grad V_1(y) x ... x grad V_{n-1}(y)), kept
/// through degree N. The cross product of gradients loses one degree, so V
/// should be known through N + 1 for X to be exact through N.
inline EmbeddingField embedding_field(const MapSystem& F, const IntegralSet& V, int N) {
  EmbeddingField out;
  out.integrals = V;
  const VecSeries Z = cross_field(V);
  const int M = std::min(N, Z.truncation());
  const VecSeries full = F.full(M);
  out.det_at_inverse = compose(det_series(jacobian(full), M), inverse_map(F, M), M);
  std::vector<ScalarSeries> comps;
  for (int i = 0; i < Z.size(); ++i) comps.push_back(mul(out.det_at_inverse, Z[i], M));
  out.X = VecSeries(std::move(comps)).with_truncation(M);
  out.order = M;
  out.equivariance_residual = verify_equivariance(F, out.X, M);
  out.equivariant = out.equivariance_residual.is_zero();
  out.tangency = tangency_residuals(V, out.X);
  out.tangent = true;
  for (const auto& t : out.tangency) out.tangent = out.tangent && t.is_zero();
  return out;
}

/// det DF o F^{-1} - 1. Whenever grad V_i o F = DF^{-T} grad V_i, the cross
/// product satisfies DF c = det DF . (c o F), so the equivariance residual
/// of the embedding field is det DF . (this series) . (c o F): it vanishes
/// only when det DF is identically 1 on the region spanned by c.
inline ScalarSeries equivariance_obstruction(const MapSystem& F, int N) {
  const VecSeries full = F.full(N);
  return compose(det_series(jacobian(full), N), inverse_map(F, N), N) - ScalarSeries::constant(F.n(), N, Scalar(1));
}

/// sum_{k=0..K} L_X^k(id) / k!, spatially truncated at N.
inline VecSeries time_one_map(const VecSeries& X, int K, int N) {
  const int n = X.nvars();
  const VecSeries Xn = X.with_truncation(N);
  std::vector<ScalarSeries> comps;
  for (int i = 0; i < n; ++i) {
    ScalarSeries term = ScalarSeries::variable(n, N, i);
    ScalarSeries sum = term;
    Rational fact(1);
    for (int k = 1; k <= K; ++k) {
      term = lie_derivative(term, Xn, N).with_truncation(N);
      fact *= k;
      sum += term * Scalar(Rational(1) / fact);
    }
    comps.push_back(sum);
  }
  return VecSeries(std::move(comps));
}

}  // namespace pdnf
