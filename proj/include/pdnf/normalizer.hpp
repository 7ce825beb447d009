#pragma once

#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/lattice.hpp"
#include "pdnf/systems.hpp"

namespace pdnf {

/// Conjugacy residual bookkeeping for one degree of a normalization.
struct DegreeRecord {
  int degree = 0;
  std::size_t normal_form_terms = 0;  ///< resonant coefficients routed to g
  std::size_t solved_terms = 0;       ///< coefficients of phi solved by division
  bool residual_zero = false;         ///< homogeneous residual of this degree vanished
};

/// Distinguished normalization x = Phi(y) = y + phi(y) together with the
/// normal form: F o Phi = Phi o G with G = B y + g for maps, and
/// DPhi . Y = X o Phi with Y = A y + g for fields.
struct NormalizationResult {
  SystemKind kind = SystemKind::Map;
  std::vector<Scalar> diag;  ///< realized mu or lambda
  VecSeries phi;
  VecSeries g;
  int order = 0;
  std::vector<DegreeRecord> degrees;
  bool verified = false;  ///< every residual degree 2..order is zero

  VecSeries Phi() const { return VecSeries::identity(static_cast<int>(diag.size()), order) + phi; }
  VecSeries normal_form() const { return VecSeries::diagonal(diag, order) + g; }
};

namespace detail {

inline void require_degree(const VecSeries& v, int s, const char* what) {
  if (v.truncation() < s) throw InvariantError(std::string(what) + " lost precision below degree " + std::to_string(s));
}

/// Splits the degree-s right-hand side R into resonant (to g) and
/// nonresonant (solved into phi) parts.
inline void split_degree(const EigenSpec& spec, const std::vector<Scalar>& diag, const VecSeries& R, int s,
                         NormalizationResult& res, DegreeRecord& rec) {
  for (int j = 0; j < R.size(); ++j) {
    for (const auto& [m, c] : R[j].terms()) {
      if (m.degree() != s) continue;
      const Scalar d = homological_divisor(spec, diag, m, j);
      const bool resonant = is_resonant(spec, m, j);
      if (resonant != d.is_zero()) {
        throw InvariantError("resonance test and homological divisor disagree at " + m.str() + ", component " +
                             std::to_string(j + 1));
      }
      if (resonant) {
        res.g[j].add_term(m, c);
        ++rec.normal_form_terms;
      } else {
        res.phi[j].add_term(m, c / d);
        ++rec.solved_terms;
      }
    }
  }
}

}  // namespace detail

inline VecSeries verify_conjugacy_map(const MapSystem& F, const NormalizationResult& result);
inline VecSeries verify_conjugacy_field(const FieldSystem& X, const NormalizationResult& result);

namespace detail {

inline void record_residuals(NormalizationResult& res, const VecSeries& residual) {
  res.verified = true;
  for (auto& rec : res.degrees) {
    rec.residual_zero = residual.homogeneous(rec.degree).is_zero();
    res.verified = res.verified && rec.residual_zero;
  }
  // Degrees 0 and 1 are part of the contract too.
  for (int j = 0; j < residual.size(); ++j)
    if (residual[j].valuation() < 2) res.verified = false;
}

}  // namespace detail

/// Degree-by-degree distinguished normalization of a diagonal map. At
/// degree s the homological equation reads
///   phi_s(B y) - B phi_s(y) + g_s(y) = [f(y + phi)]_s - [phi(B y + g)]_s
/// with phi, g known below degree s; coefficientwise the left side is
/// (mu^m - mu_j) phi + g.
inline NormalizationResult normalize_map(const MapSystem& F, int N) {
  if (N < 2) throw std::invalid_argument("normalization order must be at least 2");
  const int n = F.n();
  NormalizationResult res;
  res.kind = SystemKind::Map;
  res.diag = F.mu.require_realized();
  res.order = N;
  res.phi = VecSeries(n, N);
  res.g = VecSeries(n, N);
  const VecSeries f = F.f.with_truncation(N);
  const VecSeries id = VecSeries::identity(n, N);
  const VecSeries B = VecSeries::diagonal(res.diag, N);
  for (int s = 2; s <= N; ++s) {
    DegreeRecord rec;
    rec.degree = s;
    const VecSeries A = compose(f, (id + res.phi).truncated(s), s);
    const VecSeries C = compose(res.phi, (B + res.g).truncated(s), s);
    detail::require_degree(A, s, "f(y + phi)");
    detail::require_degree(C, s, "phi(B y + g)");
    detail::split_degree(F.mu, res.diag, (A - C).homogeneous(s), s, res, rec);
    res.degrees.push_back(rec);
  }
  detail::record_residuals(res, verify_conjugacy_map(F, res));
  return res;
}

/// Field version: (<m, lambda> - lambda_j) phi + g = [f(y + phi)]_s - [Dphi . g]_s.
inline NormalizationResult normalize_field(const FieldSystem& X, int N) {
  if (N < 2) throw std::invalid_argument("normalization order must be at least 2");
  const int n = X.n();
  NormalizationResult res;
  res.kind = SystemKind::Field;
  res.diag = X.lambda.values();
  res.order = N;
  res.phi = VecSeries(n, N);
  res.g = VecSeries(n, N);
  const VecSeries f = X.f.with_truncation(N);
  const VecSeries id = VecSeries::identity(n, N);
  for (int s = 2; s <= N; ++s) {
    DegreeRecord rec;
    rec.degree = s;
    const VecSeries A = compose(f, (id + res.phi).truncated(s), s);
    const VecSeries C = matvec(jacobian(res.phi), res.g, s);
    detail::require_degree(A, s, "f(y + phi)");
    detail::require_degree(C, s, "Dphi . g");
    detail::split_degree(X.lambda, res.diag, (A - C).homogeneous(s), s, res, rec);
    res.degrees.push_back(rec);
  }
  detail::record_residuals(res, verify_conjugacy_field(X, res));
  return res;
}

/// F o Phi - Phi o G through the result's order.
inline VecSeries verify_conjugacy_map(const MapSystem& F, const NormalizationResult& result) {
  const int N = result.order;
  const VecSeries Phi = result.Phi().with_truncation(N);
  const VecSeries G = result.normal_form().with_truncation(N);
  return compose(F.full(N), Phi, N) - compose(Phi, G, N);
}

/// DPhi . Y - X o Phi through the result's order.
inline VecSeries verify_conjugacy_field(const FieldSystem& X, const NormalizationResult& result) {
  const int N = result.order;
  const VecSeries Phi = result.Phi().with_truncation(N);
  const VecSeries Y = result.normal_form().with_truncation(N);
  return matvec(jacobian(Phi), Y, N) - compose(X.full(N), Phi, N);
}

/// Monomials of phi that are resonant or of g that are nonresonant, as
/// (component, exponent) pairs. Empty for every solver output.
inline std::vector<std::pair<int, Exponent>> splitting_violations(const EigenSpec& spec, const NormalizationResult& r) {
  std::vector<std::pair<int, Exponent>> bad;
  for (int j = 0; j < r.phi.size(); ++j) {
    for (const auto& [m, c] : r.phi[j].terms())
      if (is_resonant(spec, m, j)) bad.emplace_back(j, m);
    for (const auto& [m, c] : r.g[j].terms())
      if (!is_resonant(spec, m, j)) bad.emplace_back(j, m);
  }
  return bad;
}

}  // namespace pdnf
