#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <variant>
#include <vector>

#include "pdnf/bounds.hpp"
#include "pdnf/normalizer.hpp"

namespace pdnf {

/// Outcome of a shape test on a normal form. On failure, `component` and
/// `witness` name the first offending monomial (0-based component).
struct ShapeResult {
  bool ok = true;
  std::vector<ScalarSeries> p;  ///< map case: G_j = mu_j y_j (1 + p_j)
  ScalarSeries h;               ///< field case: g_j = lambda_j y_j h
  int component = -1;
  std::optional<Exponent> witness;
  std::string reason;
};

/// Divides each g_j by mu_j y_j. The quotients are known one degree lower
/// than g.
inline ShapeResult extract_integrable_shape_map(const NormalizationResult& result) {
  ShapeResult out;
  const int n = result.g.size();
  const int N = std::max(result.order - 1, 0);
  for (int j = 0; j < n; ++j) {
    ScalarSeries p(n, N);
    const Exponent yj = Exponent::unit(n, j);
    for (const auto& [m, c] : result.g[j].terms()) {
      if (m[j] == 0) {
        if (out.ok) {
          out.ok = false;
          out.component = j;
          out.witness = m;
          out.reason = "normal-form component " + std::to_string(j + 1) + " has monomial " + m.str() +
                       " not divisible by y" + std::to_string(j + 1);
        }
        continue;
      }
      p.set(m - yj, c / result.diag[j]);
    }
    out.p.push_back(std::move(p));
  }
  if (!out.ok) out.p.clear();
  return out;
}

/// prod_j (1 + p_j)^{m_kj} - 1 for every generator m_k, through degree N.
inline std::vector<ScalarSeries> check_functional_equations(const std::vector<ScalarSeries>& p,
                                                            const LatticeBasis& basis, int N) {
  std::vector<ScalarSeries> residuals;
  if (p.empty()) return residuals;
  const int n = p.front().nvars();
  for (const auto& m : basis.generators) {
    ScalarSeries prod = ScalarSeries::constant(n, N, Scalar(1));
    for (int j = 0; j < n; ++j)
      if (m[j] != 0) prod = mul(prod, unit_power(p[j], Rational(m[j]), N), N);
    residuals.push_back(prod - ScalarSeries::constant(n, N, Scalar(1)));
  }
  return residuals;
}

/// (1 + p_j) = (1 + p_iota)^{r_j} for every j.
struct SingleFunction {
  int iota = 0;  ///< 0-based
  std::vector<Rational> r;
};

/// The logarithms L_j = log(1 + p_j) satisfy sum_j m_kj L_j = 0 for every
/// generator, so L is proportional to the lattice normal v and
/// r_j = v_j / v_iota. iota is the component of minimal leading degree
/// (ties: fewer terms, then smaller height of the lowest coefficient, then
/// lower index).
inline SingleFunction reduce_to_single_function(const std::vector<ScalarSeries>& p, const LatticeBasis& basis) {
  const int n = static_cast<int>(p.size());
  if (basis.rank != n - 1) throw HypothesisError("reduction to a single function needs lattice rank n-1");
  SingleFunction out;
  out.r.assign(static_cast<std::size_t>(n), Rational(0));
  // Height of the lowest-order coefficient: max of |numerators| and denominators.
  auto height = [](const ScalarSeries& s) {
    const Scalar& c = s.terms().begin()->second;
    Integer h = 0;
    for (const Rational& x : {c.real(), c.imag()})
      h = std::max({h, Integer(abs(x.get_num())), Integer(x.get_den())});
    return h;
  };
  int best = -1;
  for (int j = 0; j < n; ++j) {
    if (p[j].is_zero()) continue;
    if (best < 0) {
      best = j;
      continue;
    }
    const auto key_j = std::make_tuple(p[j].valuation(), p[j].size());
    const auto key_b = std::make_tuple(p[best].valuation(), p[best].size());
    if (key_j < key_b || (key_j == key_b && height(p[j]) < height(p[best]))) best = j;
  }
  if (best < 0) return out;  // p = 0: iota = first component, all exponents 0
  out.iota = best;
  const auto v = lattice_normal(basis);
  if (v[best] == 0) throw HypothesisError("functional equations violated: p is not compatible with the lattice");
  int N = Exponent::kMaxDegree;
  for (const auto& s : p) N = std::min(N, s.truncation());
  for (int j = 0; j < n; ++j) {
    out.r[j] = make_rational(v[j], v[best]);
    const ScalarSeries lhs = ScalarSeries::constant(n, N, Scalar(1)) + p[j];
    if (unit_power(p[best], out.r[j], N) != lhs.truncated(N))
      throw HypothesisError("functional equations violated: 1 + p_" + std::to_string(j + 1) + " is not (1 + p_" +
                            std::to_string(best + 1) + ")^(" + to_string(out.r[j]) + ")");
  }
  return out;
}

/// g_j = lambda_j y_j h with one h for all j where lambda_j != 0, and
/// g_j = 0 where lambda_j = 0.
inline ShapeResult extract_common_factor_field(const NormalizationResult& result, const EigenSpec& lambda) {
  ShapeResult out;
  const int n = result.g.size();
  const int N = std::max(result.order - 1, 0);
  std::optional<ScalarSeries> common;
  int common_from = -1;
  auto fail = [&](int j, const Exponent& m, std::string why) {
    if (!out.ok) return;
    out.ok = false;
    out.component = j;
    out.witness = m;
    out.reason = std::move(why);
  };
  for (int j = 0; j < n && out.ok; ++j) {
    const Scalar& lj = lambda.values()[j];
    if (lj.is_zero()) {
      if (!result.g[j].is_zero())
        fail(j, result.g[j].terms().begin()->first,
             "component " + std::to_string(j + 1) + " has zero eigenvalue but a nonzero normal-form term");
      continue;
    }
    ScalarSeries h(n, N);
    const Exponent yj = Exponent::unit(n, j);
    for (const auto& [m, c] : result.g[j].terms()) {
      if (m[j] == 0) {
        fail(j, m, "normal-form component " + std::to_string(j + 1) + " has monomial " + m.str() +
                       " not divisible by y" + std::to_string(j + 1));
        break;
      }
      h.set(m - yj, c / lj);
    }
    if (!out.ok) break;
    if (!common) {
      common = h;
      common_from = j;
      continue;
    }
    const ScalarSeries diff = h - *common;
    if (!diff.is_zero()) {
      fail(j, diff.terms().begin()->first + yj,
           "components " + std::to_string(common_from + 1) + " and " + std::to_string(j + 1) +
               " have different factors at monomial " + diff.terms().begin()->first.str());
    }
  }
  if (out.ok) out.h = common ? *common : ScalarSeries(n, N);
  return out;
}

enum class Verdict { IntegrableConsistent, NotIntegrable, HypothesesNotMet };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IntegrableConsistent: return "integrable-consistent";
    case Verdict::NotIntegrable: return "not-integrable";
    case Verdict::HypothesesNotMet: return "hypotheses-not-met";
  }
  return "?";
}

struct IntegrabilityReport {
  SystemKind kind = SystemKind::Map;
  int degree_D = 0;
  int order_N = 0;
  bool hypotheses_met = false;
  LatticeBasis basis;
  bool rank_ok = false;
  std::optional<NormalizationResult> normalization;
  std::optional<ShapeResult> shape;
  std::vector<ScalarSeries> functional_residuals;
  bool functional_ok = false;
  std::optional<SingleFunction> reduction;
  Verdict verdict = Verdict::HypothesesNotMet;
  std::string witness;
};

inline bool map_hypotheses_hold(const EigenSpec& mu) {
  for (int i = 0; i < mu.size(); ++i) {
    if (mu.form() == EigenForm::MultBase ? !is_zero(mu.exponents()[i]) : mu.values()[i].norm2() != 1) return true;
  }
  return false;
}

inline bool field_hypotheses_hold(const EigenSpec& lambda) {
  for (const auto& l : lambda.values())
    if (!l.is_zero()) return true;
  return false;
}

namespace detail {

inline std::string lowest_term_witness(const ScalarSeries& s) {
  const auto& [m, c] = *s.terms().begin();
  return "coefficient " + c.str() + " at " + m.str();
}

}  // namespace detail

/// Lattice rank at D, normalization at N, shape and functional equations.
/// The verdict is certified only for these two bounds.
inline IntegrabilityReport classify(const MapSystem& F, int D, int N) {
  IntegrabilityReport rep;
  rep.kind = SystemKind::Map;
  rep.degree_D = D;
  rep.order_N = N;
  rep.hypotheses_met = map_hypotheses_hold(F.mu);
  if (!rep.hypotheses_met) {
    rep.verdict = Verdict::HypothesesNotMet;
    rep.witness = "every eigenvalue lies on the unit circle";
    return rep;
  }
  rep.basis = enumerate_lattice(F.mu, D);
  rep.rank_ok = rep.basis.full_rank();
  rep.normalization = normalize_map(F, N);
  if (!rep.normalization->verified) throw InvariantError("normalization failed its conjugacy check");
  if (!rep.rank_ok) {
    rep.verdict = Verdict::NotIntegrable;
    rep.witness = "resonant lattice has rank " + std::to_string(rep.basis.rank) + " < n-1 = " +
                  std::to_string(F.n() - 1) + " up to degree " + std::to_string(D);
    return rep;
  }
  rep.shape = extract_integrable_shape_map(*rep.normalization);
  if (!rep.shape->ok) {
    rep.verdict = Verdict::NotIntegrable;
    rep.witness = rep.shape->reason;
    return rep;
  }
  rep.functional_residuals = check_functional_equations(rep.shape->p, rep.basis, std::max(N - 1, 0));
  rep.functional_ok = true;
  for (std::size_t k = 0; k < rep.functional_residuals.size(); ++k) {
    if (!rep.functional_residuals[k].is_zero()) {
      rep.functional_ok = false;
      rep.verdict = Verdict::NotIntegrable;
      rep.witness = "functional equation for generator " + rep.basis.generators[k].str() + " fails: " +
                    detail::lowest_term_witness(rep.functional_residuals[k]);
      return rep;
    }
  }
  rep.reduction = reduce_to_single_function(rep.shape->p, rep.basis);
  rep.verdict = Verdict::IntegrableConsistent;
  return rep;
}

inline IntegrabilityReport classify(const FieldSystem& X, int D, int N) {
  IntegrabilityReport rep;
  rep.kind = SystemKind::Field;
  rep.degree_D = D;
  rep.order_N = N;
  rep.hypotheses_met = field_hypotheses_hold(X.lambda);
  if (!rep.hypotheses_met) {
    rep.verdict = Verdict::HypothesesNotMet;
    rep.witness = "every eigenvalue is zero";
    return rep;
  }
  rep.basis = enumerate_lattice(X.lambda, D);
  rep.rank_ok = rep.basis.full_rank();
  rep.normalization = normalize_field(X, N);
  if (!rep.normalization->verified) throw InvariantError("normalization failed its conjugacy check");
  if (!rep.rank_ok) {
    rep.verdict = Verdict::NotIntegrable;
    rep.witness = "resonant lattice has rank " + std::to_string(rep.basis.rank) + " < n-1 = " +
                  std::to_string(X.n() - 1) + " up to degree " + std::to_string(D);
    return rep;
  }
  rep.shape = extract_common_factor_field(*rep.normalization, X.lambda);
  rep.functional_ok = rep.shape->ok;
  if (!rep.shape->ok) {
    rep.verdict = Verdict::NotIntegrable;
    rep.witness = rep.shape->reason;
    return rep;
  }
  rep.verdict = Verdict::IntegrableConsistent;
  return rep;
}

/// Per-degree coefficient growth of a normalization, as an advisory proxy
/// for convergence. Logs are natural logs in double precision; they never
/// feed back into exact computations.
struct GrowthRow {
  int degree = 0;
  Rational max_magnitude;
  double log_magnitude = 0.0;
};

struct GrowthDiagnostic {
  std::vector<GrowthRow> rows;
  std::optional<double> slope;  ///< least-squares slope of log magnitude vs degree
  bool super_geometric = false;
};

inline double log_abs(const Rational& q) {
  // log(num) - log(den) through mantissa/exponent pairs, safe for huge values.
  auto log_int = [](const Integer& z) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
  };
  return log_int(q.get_num()) - log_int(q.get_den());
}

inline GrowthDiagnostic growth_diagnostic(const VecSeries& phi) {
  GrowthDiagnostic out;
  std::map<int, Rational> best;
  for (const auto& comp : phi.components())
    for (const auto& [m, c] : comp.terms()) {
      const Rational mag = magnitude_proxy(c);
      auto it = best.find(m.degree());
      if (it == best.end() || it->second < mag) best[m.degree()] = mag;
    }
  for (const auto& [d, mag] : best) out.rows.push_back({d, mag, log_abs(mag)});
  const std::size_t k = out.rows.size();
  if (k >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : out.rows) {
      sx += r.degree;
      sy += r.log_magnitude;
      sxx += static_cast<double>(r.degree) * r.degree;
      sxy += r.degree * r.log_magnitude;
    }
    const double den = static_cast<double>(k) * sxx - sx * sx;
    if (den != 0) out.slope = (static_cast<double>(k) * sxy - sx * sy) / den;
  }
  if (k >= 6) {
    // Compare the mean log-ratio of consecutive degrees at the start and end.
    std::vector<double> steps;
    for (std::size_t i = 1; i < k; ++i)
      steps.push_back((out.rows[i].log_magnitude - out.rows[i - 1].log_magnitude) /
                      (out.rows[i].degree - out.rows[i - 1].degree));
    const std::size_t third = steps.size() / 3;
    double first = 0, last = 0;
    for (std::size_t i = 0; i < third; ++i) {
      first += steps[i];
      last += steps[steps.size() - 1 - i];
    }
    out.super_geometric = (last - first) / static_cast<double>(third) > std::log(1.5);
  }
  return out;
}

}  // namespace pdnf
