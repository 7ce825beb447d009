#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/lattice.hpp"

namespace pdnf {

/// Lower bound on the nonzero homological divisors of an integrable
/// spectrum, together with the data it was computed from.
///
/// For maps: with v spanning the kernel of the generator matrix and c the
/// last index where v_c != 0, Delta = det(generators without column c) and
/// |mu_j| = alpha^{delta_j} with alpha = |mu_c|^{1/Delta}. For fields:
/// lambda_j = (nu_j / den_j) lambda_c and kappa = |lambda_c| / prod den_j.
struct SmallDivisorBound {
  SystemKind kind = SystemKind::Map;
  std::optional<Rational> value;          ///< exact value when rational
  std::optional<Rational> value_squared;  ///< exact square when rational
  std::string expression;                 ///< closed form, always present

  // Map certificate.
  std::vector<Integer> normal;
  int pivot = -1;
  Integer Delta;
  std::vector<Integer> delta;
  bool alpha_above_one = false;
  std::optional<Rational> alpha;
  std::string alpha_expression;
  std::optional<Rational> sigma1;
  std::string sigma1_expression;
  int phase_order = 1;  ///< order bound L for the unit-modulus ratios mu^m / mu_j
  std::string gamma_expression;
  std::string sigma2_expression;

  // Field certificate.
  std::vector<Integer> ratio_numerators;
  std::vector<Integer> ratio_denominators;

  bool claimed_only = false;

  /// A bare bound value with no certificate, e.g. to test a claim.
  static SmallDivisorBound claimed(SystemKind kind, const Rational& v) {
    SmallDivisorBound b;
    b.kind = kind;
    b.value = v;
    b.value_squared = v * v;
    b.expression = to_string(v);
    b.claimed_only = true;
    return b;
  }
};

namespace detail {

inline std::string power_string(const std::string& base, const Integer& e) {
  if (e == 1) return base;
  return base + "^(" + e.get_str() + ")";
}

inline Integer lcm_of_denominators(const std::vector<Rational>& qs) {
  Integer l(1);
  for (const auto& x : qs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

inline long small_gcd(const Integer& a, long b) {
  Integer g;
  Integer bb(b);
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), bb.get_mpz_t());
  return g.get_si();
}

/// beta^e for rational e and rational beta > 0, when it is rational.
inline std::optional<Rational> rational_real_power(const Rational& beta, const Rational& e) {
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_ulong_p()) return std::nullopt;
  return exact_root(rational_pow(beta, e.get_num().get_si()), e.get_den().get_ui());
}

inline Rational integer_power(const Rational& a, const Integer& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("exponent too large");
  return rational_pow(a, e.get_si());
}

}  // namespace detail

/// The map-case bound sigma. Requires a rank n-1 lattice and at least one
/// eigenvalue off the unit circle.
inline SmallDivisorBound small_divisor_bound_map(const EigenSpec& spec, const LatticeBasis& basis) {
  if (!spec.is_multiplicative()) throw std::invalid_argument("small_divisor_bound_map needs a multiplicative spectrum");
  const int n = spec.size();
  if (basis.rank != n - 1) {
    throw HypothesisError("small-divisor bound needs a resonant lattice of rank n-1 = " + std::to_string(n - 1) +
                          ", found rank " + std::to_string(basis.rank) + " up to degree " +
                          std::to_string(basis.bound));
  }
  bool off_circle = false;
  for (int i = 0; i < n; ++i) {
    if (spec.form() == EigenForm::MultBase) {
      off_circle = off_circle || !is_zero(spec.exponents()[i]);
    } else {
      off_circle = off_circle || spec.values()[i].norm2() != 1;
    }
  }
  if (!off_circle) throw HypothesisError("all eigenvalues have modulus 1");

  SmallDivisorBound b;
  b.kind = SystemKind::Map;
  b.normal = lattice_normal(basis);
  int c = n - 1;
  while (c >= 0 && b.normal[c] == 0) --c;
  if (c < 0) throw InvariantError("generators of rank n-1 have a zero kernel vector");
  b.pivot = c;
  const Integer sign = (c % 2 == 0) ? Integer(1) : Integer(-1);
  b.Delta = sign * b.normal[c];
  for (int j = 0; j < n; ++j) b.delta.push_back(sign * b.normal[j]);

  // Consistency of |mu_j| = alpha^{delta_j} with the actual moduli.
  for (int j = 0; j < n; ++j) {
    bool ok = true;
    if (spec.form() == EigenForm::MultBase) {
      ok = spec.exponents()[j] * Rational(b.Delta) == Rational(b.delta[j]) * spec.exponents()[c];
    } else {
      ok = detail::integer_power(spec.values()[j].norm2(), b.Delta) ==
           detail::integer_power(spec.values()[c].norm2(), b.delta[j]);
    }
    if (!ok) throw InvariantError("eigenvalue moduli are inconsistent with the resonant lattice");
  }

  const Integer delta_min = *std::min_element(b.delta.begin(), b.delta.end());
  const Integer delta_max = *std::max_element(b.delta.begin(), b.delta.end());
  const Integer abs_Delta = abs(b.Delta);

  if (spec.form() == EigenForm::MultBase) {
    const Rational e = spec.exponents()[c] / Rational(b.Delta);
    b.alpha_above_one = sgn(e) > 0;
    b.alpha_expression = "beta^(" + to_string(e) + ")";
    if (spec.base_value()) b.alpha = detail::rational_real_power(*spec.base_value(), e);
    const Integer P = detail::lcm_of_denominators(spec.phases());
    b.phase_order = static_cast<int>(detail::small_gcd(P, abs_Delta.get_si()));
  } else {
    const Rational& m2 = spec.values()[c].norm2();
    b.alpha_above_one = (m2 > 1) == (sgn(b.Delta) > 0);
    b.alpha_expression = "|mu_" + std::to_string(c + 1) + "|^(1/" + b.Delta.get_str() + ")";
    const Rational base = sgn(b.Delta) > 0 ? m2 : Rational(1) / m2;
    if (abs_Delta.fits_ulong_p()) {
      if (auto a2 = exact_root(base, abs_Delta.get_ui())) b.alpha = exact_root(*a2, 2);
    }
    // Unit-modulus ratios of Gaussian rationals that are roots of unity lie in {1, -1, i, -i}.
    long P = 1;
    for (const auto& mu : spec.values()) {
      if (!mu.is_real()) {
        P = 4;
      } else if (sgn(mu.real()) < 0) {
        P = std::max(P, 2L);
      }
    }
    b.phase_order = static_cast<int>(detail::small_gcd(abs_Delta, P));
  }

  // sigma1 = min_j |mu_j| * min(|alpha - 1|, |1/alpha - 1|).
  const Integer k = b.alpha_above_one ? Integer(delta_min - 1) : delta_max;
  b.sigma1_expression = b.alpha_above_one ? detail::power_string("alpha", k) + "*(alpha-1)"
                                          : detail::power_string("alpha", k) + "*(1-alpha)";
  if (b.alpha) {
    const Rational a = *b.alpha;
    b.sigma1 = detail::integer_power(a, k) * (b.alpha_above_one ? Rational(a - 1) : Rational(1 - a));
  }
  const Integer kmin = b.alpha_above_one ? delta_min : delta_max;
  if (b.phase_order <= 1) {
    b.gamma_expression = "none (trivial phase set)";
  } else {
    b.gamma_expression = "2*sin(pi/" + std::to_string(b.phase_order) + ")";
    b.sigma2_expression = detail::power_string("alpha", kmin) + "*" + b.gamma_expression;
  }
  // gamma >= 1 whenever the phase order is at most 6, and then sigma2 >= sigma1
  // because min(|alpha-1|, |1/alpha-1|) < 1.
  if (b.phase_order <= 6) {
    b.value = b.sigma1;
    if (b.value) b.value_squared = *b.value * *b.value;
    b.expression = b.sigma1_expression + ", alpha = " + b.alpha_expression;
  } else {
    b.expression = "min(" + b.sigma1_expression + ", " + b.sigma2_expression + "), alpha = " + b.alpha_expression;
  }
  return b;
}

/// The field-case bound kappa. Requires a rank n-1 lattice and lambda != 0.
inline SmallDivisorBound small_divisor_bound_field(const EigenSpec& spec, const LatticeBasis& basis) {
  if (spec.form() != EigenForm::Additive) throw std::invalid_argument("small_divisor_bound_field needs an additive spectrum");
  const int n = spec.size();
  if (std::all_of(spec.values().begin(), spec.values().end(), [](const Scalar& s) { return s.is_zero(); }))
    throw HypothesisError("all eigenvalues are zero");
  if (basis.rank != n - 1) {
    throw HypothesisError("small-divisor bound needs a resonant lattice of rank n-1 = " + std::to_string(n - 1) +
                          ", found rank " + std::to_string(basis.rank) + " up to degree " +
                          std::to_string(basis.bound));
  }
  SmallDivisorBound b;
  b.kind = SystemKind::Field;
  b.normal = lattice_normal(basis);
  int c = n - 1;
  while (c >= 0 && b.normal[c] == 0) --c;
  if (c < 0) throw InvariantError("generators of rank n-1 have a zero kernel vector");
  b.pivot = c;
  const Scalar& lc = spec.values()[c];
  Integer prod(1);
  for (int j = 0; j < n; ++j) {
    const Rational r = make_rational(b.normal[j], b.normal[c]);
    if (spec.values()[j] != lc * Scalar(r)) throw InvariantError("eigenvalues are not proportional to the lattice normal");
    b.ratio_numerators.push_back(r.get_num());
    b.ratio_denominators.push_back(r.get_den());
    if (j != c) prod *= r.get_den();
  }
  const Rational p(prod);
  b.value_squared = lc.norm2() / (p * p);
  b.value = exact_root(*b.value_squared, 2);
  b.expression = "|lambda_" + std::to_string(c + 1) + "|/" + prod.get_str();
  return b;
}

/// Outcome of an exhaustive check of a bound up to some degree.
struct BoundCheck {
  bool passed = true;
  std::string method;  ///< "exact" or "certificate"
  int degree = 0;
  long pairs = 0;      ///< nonresonant (m, j) pairs examined
  std::optional<Rational> min_gap_squared;
  std::optional<Rational> min_gap;
  std::optional<Exponent> witness;  ///< first pair attaining the minimum
  int witness_target = -1;
  std::optional<Exponent> counterexample;  ///< first pair below the bound
  int counterexample_target = -1;
  std::optional<Rational> counterexample_gap_squared;
  std::string counterexample_reason;
  long modulus_route = 0;  ///< certificate method: pairs separated by modulus
  long phase_route = 0;    ///< certificate method: equal modulus, separated by phase
};

namespace detail {

inline void record_failure(BoundCheck& r, const Exponent& m, int j, std::string why,
                           std::optional<Rational> gap2 = std::nullopt) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = m;
  r.counterexample_target = j;
  r.counterexample_reason = std::move(why);
  r.counterexample_gap_squared = std::move(gap2);
}

inline BoundCheck verify_exact(const EigenSpec& spec, const std::vector<Scalar>& diag,
                               const SmallDivisorBound& bound, int D) {
  BoundCheck r;
  r.method = "exact";
  r.degree = D;
  for (const auto& m : exponents_in_degree_range(spec.size(), 2, D)) {
    for (int j = 0; j < spec.size(); ++j) {
      const Scalar d = homological_divisor(spec, diag, m, j);
      if (d.is_zero()) continue;
      ++r.pairs;
      const Rational g2 = d.norm2();
      if (!r.min_gap_squared || g2 < *r.min_gap_squared) {
        r.min_gap_squared = g2;
        r.witness = m;
        r.witness_target = j;
      }
      if (bound.value_squared && g2 < *bound.value_squared)
        record_failure(r, m, j, "divisor smaller than the bound", g2);
    }
  }
  if (r.min_gap_squared) r.min_gap = exact_root(*r.min_gap_squared, 2);
  return r;
}

/// Symbolic check for map spectra whose bound is not a rational number:
/// every nonresonant divisor must either change the modulus (so the
/// alpha-power estimate applies) or, at equal modulus, be a ratio in the
/// predicted finite phase group.
inline BoundCheck verify_certificate(const EigenSpec& spec, const SmallDivisorBound& bound, int D) {
  BoundCheck r;
  r.method = "certificate";
  r.degree = D;
  const int n = spec.size();
  for (const auto& m : exponents_in_degree_range(n, 2, D)) {
    Integer sm(0);
    for (int k = 0; k < n; ++k) sm += Integer(m[k]) * bound.delta[k];
    for (int j = 0; j < n; ++j) {
      if (is_resonant_map(spec, m, j)) continue;
      ++r.pairs;
      const Integer s = sm - bound.delta[j];
      if (spec.form() == EigenForm::MultBase) {
        Rational da(0), db(0);
        for (int k = 0; k < n; ++k) {
          da += spec.exponents()[k] * m[k];
          db += spec.phases()[k] * m[k];
        }
        da -= spec.exponents()[j];
        db -= spec.phases()[j];
        if (da * Rational(bound.Delta) != Rational(s) * spec.exponents()[bound.pivot]) {
          record_failure(r, m, j, "modulus exponent disagrees with the certificate");
          continue;
        }
        if (s != 0) {
          ++r.modulus_route;
        } else if (Rational(db * bound.phase_order).get_den() == 1) {
          ++r.phase_route;
        } else {
          record_failure(r, m, j, "unit-modulus ratio outside the predicted phase group");
        }
      } else {
        if (s != 0) {
          ++r.modulus_route;
          continue;
        }
        const Scalar ratio = mult_power(spec, m) / spec.values()[j];
        if (ratio.norm2() != 1) {
          record_failure(r, m, j, "modulus exponent disagrees with the certificate");
        } else if (ratio.pow(bound.phase_order) == Scalar(1)) {
          ++r.phase_route;
        } else {
          record_failure(r, m, j, "unit-modulus ratio outside the predicted phase group");
        }
      }
    }
  }
  return r;
}

}  // namespace detail

/// Enumerates every (m, j) with 2 <= |m| <= D and nonzero divisor and checks
/// it against the bound. Never throws on failure: the result carries the
/// first counterexample in enumeration order.
inline BoundCheck verify_bound(const EigenSpec& spec, const SmallDivisorBound& bound, int D) {
  if (spec.form() == EigenForm::Additive) return detail::verify_exact(spec, spec.values(), bound, D);
  auto diag = spec.realized();
  if (diag && (bound.value_squared || bound.claimed_only)) return detail::verify_exact(spec, *diag, bound, D);
  if (bound.claimed_only) throw HypothesisError("a claimed bound can only be checked for realizable eigenvalues");
  BoundCheck r = detail::verify_certificate(spec, bound, D);
  if (diag) {
    // The bound is irrational but the divisors are not: report their minimum too.
    const BoundCheck e = detail::verify_exact(spec, *diag, bound, D);
    r.min_gap_squared = e.min_gap_squared;
    r.min_gap = e.min_gap;
    r.witness = e.witness;
    r.witness_target = e.witness_target;
  }
  return r;
}

/// verify_bound, escalating a failure to an InvariantError (the bound is a
/// theorem under its hypotheses, so a counterexample is a bug).
inline BoundCheck require_bound(const EigenSpec& spec, const SmallDivisorBound& bound, int D) {
  BoundCheck r = verify_bound(spec, bound, D);
  if (!r.passed) {
    throw InvariantError("small-divisor bound violated at m = " + r.counterexample->str() + ", j = " +
                         std::to_string(r.counterexample_target + 1) + ": " + r.counterexample_reason);
  }
  return r;
}

}  // namespace pdnf
