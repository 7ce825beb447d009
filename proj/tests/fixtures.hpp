#pragma once

// Systems with known answers, built from series operations only: pick a
// normal form G and a nonresonant change of variables Phi, then conjugate.
// Because the distinguished normalization is unique, normalizing the
// conjugated system must give back exactly (Phi, G).

#include <random>
#include <vector>

#include "pdnf/integrability.hpp"
#include "random_series.hpp"

namespace pdnf::testing {

struct MapFixture {
  EigenSpec spec;
  int order = 0;
  VecSeries Phi;                 ///< id + phi
  VecSeries G;                   ///< full normal form
  VecSeries F;                   ///< full conjugated map, Phi o G o Phi^{-1}
  std::vector<ScalarSeries> p;   ///< G_j = mu_j y_j (1 + p_j), known through order - 1
  ScalarSeries P;                ///< the planted first-integral polynomial (1 + p_j) = (1 + P)^{r_j}
  std::vector<Rational> r;

  MapSystem system() const {
    return MapSystem(spec, F - VecSeries::diagonal(spec.require_realized(), order));
  }
};

/// G_j = mu_j y_j (1 + P)^{r_j}, then F = Phi o G o Phi^{-1}.
inline MapFixture conjugated_map(const EigenSpec& spec, const ScalarSeries& P, const std::vector<Rational>& r,
                                 const VecSeries& Phi, int N) {
  MapFixture fx{spec, N, Phi.with_truncation(N), VecSeries(spec.size(), N), VecSeries(spec.size(), N), {}, P, r};
  const auto mu = spec.require_realized();
  const int n = spec.size();
  for (int j = 0; j < n; ++j) {
    const ScalarSeries unit = unit_power(P.with_truncation(N), r[j], N);
    fx.p.push_back((unit - ScalarSeries::constant(n, N, Scalar(1))).truncated(N - 1));
    fx.G[j] = mul(ScalarSeries::variable(n, N, j) * mu[j], unit, N);
  }
  fx.F = compose(fx.Phi, compose(fx.G, invert(fx.Phi, N), N), N);
  return fx;
}

/// mu = (1/2, 2), p_2 = y1 y2, p_1 = (1 + y1 y2)^{-1} - 1, Phi = (y1 + y2^2, y2).
inline MapFixture halfdouble_fixture(int N) {
  const auto spec = EigenSpec::mult_rational({Scalar(make_rational(1, 2)), Scalar(2)});
  ScalarSeries u = ScalarSeries::monomial(2, N, Exponent{1, 1});
  VecSeries Phi = VecSeries::identity(2, N);
  Phi[0].add_term(Exponent{0, 2}, Scalar(1));
  return conjugated_map(spec, u, {Rational(-1), Rational(1)}, Phi, N);
}

/// mu = beta^(-5, 2, 1) realized at beta = 2, psi = y1 y2^2 y3,
/// p = ((1+psi)^(-5/2) - 1, psi, (1+psi)^(1/2) - 1), conjugated by a
/// nonresonant Phi = (y1 + y2^2, y2, y3 + y1 y2).
inline MapFixture base2_3d_fixture(int N) {
  const auto spec = EigenSpec::mult_base({Rational(-5), Rational(2), Rational(1)}, {}, Rational(2));
  ScalarSeries psi = ScalarSeries::monomial(3, N, Exponent{1, 2, 1});
  VecSeries Phi = VecSeries::identity(3, N);
  Phi[0].add_term(Exponent{0, 2, 0}, Scalar(1));
  Phi[2].add_term(Exponent{1, 1, 0}, Scalar(1));
  return conjugated_map(spec, psi, {make_rational(-5, 2), Rational(1), make_rational(1, 2)}, Phi, N);
}

/// Random integrable map: integer exponents a with mixed signs, mu_i = +-beta^{a_i}
/// (rank n-1 lattice enforced), P a random combination of resonant
/// monomials, r = a / a_k, and a random nonresonant Phi of degree <= 6.
inline MapFixture random_integrable_map(std::uint64_t seed, int N = 6) {
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % 2);
  std::uniform_int_distribution<int> exp_d(-3, 3);
  while (true) {
    std::vector<long> a(static_cast<std::size_t>(n));
    bool pos = false, neg = false;
    for (auto& x : a) {
      do x = exp_d(rng);
      while (x == 0);
      pos = pos || x > 0;
      neg = neg || x < 0;
    }
    if (!pos || !neg) continue;
    const long beta = 2 + static_cast<long>(rng() % 2);
    std::vector<Rational> ar;
    for (auto x : a) ar.emplace_back(x);
    EigenSpec spec;
    if (rng() % 2 == 0) {
      spec = EigenSpec::mult_base(ar, {}, Rational(beta));
    } else {
      std::vector<Scalar> mu;
      for (auto x : a) mu.push_back(Scalar(rational_pow(Rational(beta), x)) * Scalar(rng() % 4 == 0 ? -1 : 1));
      spec = EigenSpec::mult_rational(mu);
    }
    const auto basis = enumerate_lattice(spec, N);
    if (!basis.full_rank()) continue;

    // P: random multiples of resonant monomials of degree <= N.
    ScalarSeries P(n, N);
    std::uniform_int_distribution<std::size_t> pick(0, basis.resonant.size() - 1);
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) P.add_term(basis.resonant[pick(rng)], Scalar(random_rational(rng, 3, 2)));
    if (P.is_zero()) continue;

    // r spans the kernel of the generators: proportional to the log-moduli a.
    std::size_t k = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (std::labs(a[i]) < std::labs(a[k])) k = i;
    std::vector<Rational> r;
    for (auto x : a) r.push_back(make_rational(x, a[k]));

    const auto mu = spec.require_realized();
    VecSeries Phi = VecSeries::identity(n, N);
    const auto pool = exponents_in_degree_range(n, 2, std::min(N, 6));
    std::uniform_int_distribution<std::size_t> pick_m(0, pool.size() - 1);
    for (int j = 0; j < n; ++j) {
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < count; ++t) {
        const Exponent m = pool[pick_m(rng)];
        if (!is_resonant_map(spec, m, j)) Phi[j].add_term(m, Scalar(random_rational(rng, 2, 3)));
      }
    }
    return conjugated_map(spec, P, r, Phi, N);
  }
}

struct FieldFixture {
  EigenSpec spec;
  int order = 0;
  VecSeries Phi;
  VecSeries Y;  ///< full normal form lambda_j y_j (1 + h)
  VecSeries X;  ///< (DPhi . Y) o Phi^{-1}
  ScalarSeries h;

  FieldSystem system() const { return FieldSystem(spec, X - VecSeries::diagonal(spec.values(), order)); }
};

inline FieldFixture conjugated_field(const EigenSpec& spec, const ScalarSeries& h, const VecSeries& Phi, int N) {
  const int n = spec.size();
  FieldFixture fx{spec, N, Phi.with_truncation(N), VecSeries(n, N), VecSeries(n, N), h.with_truncation(N)};
  const ScalarSeries one_plus_h = ScalarSeries::constant(n, N, Scalar(1)) + fx.h;
  for (int j = 0; j < n; ++j) fx.Y[j] = mul(ScalarSeries::variable(n, N, j) * spec.values()[j], one_plus_h, N);
  fx.X = compose(matvec(jacobian(fx.Phi), fx.Y, N), invert(fx.Phi, N), N);
  return fx;
}

/// Random field in the common-factor shape with integer eigenvalues of
/// mixed sign and a random nonresonant Phi.
inline FieldFixture random_integrable_field(std::uint64_t seed, int N = 6) {
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % 2);
  std::uniform_int_distribution<int> lam_d(-3, 3);
  while (true) {
    std::vector<Scalar> lam;
    bool pos = false, neg = false;
    for (int i = 0; i < n; ++i) {
      int x = 0;
      while (x == 0) x = lam_d(rng);
      pos = pos || x > 0;
      neg = neg || x < 0;
      lam.push_back(Scalar(x));
    }
    if (!pos || !neg) continue;
    const auto spec = EigenSpec::additive(lam);
    const auto basis = enumerate_lattice(spec, N);
    if (!basis.full_rank()) continue;
    ScalarSeries h(n, N);
    std::uniform_int_distribution<std::size_t> pick(0, basis.resonant.size() - 1);
    h.add_term(basis.resonant[pick(rng)], Scalar(random_rational(rng, 3, 2)));
    VecSeries Phi = VecSeries::identity(n, N);
    const auto pool = exponents_in_degree_range(n, 2, std::min(N, 6));
    std::uniform_int_distribution<std::size_t> pick_m(0, pool.size() - 1);
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < 2; ++t) {
        const Exponent m = pool[pick_m(rng)];
        if (!is_resonant_field(spec, m, j)) Phi[j].add_term(m, Scalar(random_rational(rng, 2, 3)));
      }
    return conjugated_field(spec, h, Phi, N);
  }
}

/// The planar center normal form (x(1 + x y), -y(1 + x y)).
inline FieldSystem center_field(int N) {
  const auto spec = EigenSpec::additive({Scalar(1), Scalar(-1)});
  VecSeries f(2, N);
  f[0].add_term(Exponent{2, 1}, Scalar(1));
  f[1].add_term(Exponent{1, 2}, Scalar(-1));
  return FieldSystem(spec, f);
}

}  // namespace pdnf::testing
