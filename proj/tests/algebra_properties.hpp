#pragma once

// Randomized algebraic identities for the series substrate. Shared between
// the unit tests and the acceptance runner; each check returns a
// description of the first failure, or nothing.

#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "pdnf/series_ops.hpp"
#include "random_series.hpp"

namespace pdnf::testing {

inline std::optional<std::string> fail(const std::string& what, std::uint64_t seed) {
  std::ostringstream os;
  os << what << " (seed " << seed << ")";
  return os.str();
}

/// Ring axioms at a random truncation degree, plus the evaluation
/// homomorphism p(x)q(x) = (pq)(x) on polynomials small enough that no
/// truncation happens.
inline std::optional<std::string> check_ring_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % 3);
  const int N = 2 + static_cast<int>(rng() % 5);
  const bool gaussian = rng() % 4 == 0;
  auto a = random_series(rng, n, N, 0, N, 4, gaussian);
  auto b = random_series(rng, n, N, 0, N, 4, gaussian);
  auto c = random_series(rng, n, N, 0, N, 4, gaussian);
  if ((a + b) + c != a + (b + c)) return fail("addition not associative", seed);
  if (mul(a, b, N) != mul(b, a, N)) return fail("product not commutative", seed);
  if (mul(mul(a, b, N), c, N) != mul(a, mul(b, c, N), N)) return fail("product not associative", seed);
  if (mul(a, b + c, N) != mul(a, b, N) + mul(a, c, N)) return fail("product not distributive", seed);

  const int low = 3;
  auto p = random_series(rng, n, 2 * low, 0, low, 4, gaussian);
  auto r = random_series(rng, n, 2 * low, 0, low, 4, gaussian);
  std::vector<Scalar> x;
  for (int i = 0; i < n; ++i) x.push_back(Scalar(random_rational(rng, 3, 3)));
  if (evaluate(mul(p, r, 2 * low), x) != evaluate(p, x) * evaluate(r, x))
    return fail("product disagrees with pointwise evaluation", seed);
  return std::nullopt;
}

/// Associativity of composition, two-sided inverses, and agreement of an
/// untruncated composition with pointwise evaluation.
inline std::optional<std::string> check_composition_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % 3);
  const int N = 3 + static_cast<int>(rng() % 3);
  auto F = random_vector_series(rng, n, N, 1, N, 3);
  auto G = random_vector_series(rng, n, N, 1, N, 3);
  auto H = random_vector_series(rng, n, N, 1, N, 3);
  if (compose(compose(F, G, N), H, N) != compose(F, compose(G, H, N), N))
    return fail("composition not associative", seed);

  auto phi = VecSeries::identity(n, N) + random_vector_series(rng, n, N, 2, N, 3);
  const auto psi = invert(phi, N);
  const auto id = VecSeries::identity(n, N);
  if (compose(phi, psi, N) != id) return fail("invert is not a right inverse", seed);
  if (compose(psi, phi, N) != id) return fail("invert is not a left inverse", seed);

  // deg(P) * deg(Q) <= 2 * 2 = 4 <= truncation: exact polynomial substitution.
  auto P = random_vector_series(rng, n, 4, 1, 2, 3);
  auto Q = random_vector_series(rng, n, 4, 1, 2, 3);
  std::vector<Scalar> x;
  for (int i = 0; i < n; ++i) x.push_back(Scalar(random_rational(rng, 3, 3)));
  const auto PQ = compose(P, Q, 4);
  std::vector<Scalar> qx;
  for (int i = 0; i < n; ++i) qx.push_back(evaluate(Q[i], x));
  for (int i = 0; i < n; ++i)
    if (evaluate(PQ[i], x) != evaluate(P[i], qx)) return fail("composition disagrees with evaluation", seed);
  return std::nullopt;
}

/// Exact orthogonality of the cross product, and (1+u)^(r1+r2) =
/// (1+u)^r1 (1+u)^r2.
inline std::optional<std::string> check_cross_power_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % 3);
  const int N = 3 + static_cast<int>(rng() % 3);
  std::vector<VecSeries> vs;
  for (int k = 0; k < n - 1; ++k) vs.push_back(random_vector_series(rng, n, N, 0, 2, 2, rng() % 3 == 0));
  const auto c = cross(vs, N);
  for (const auto& v : vs)
    if (!dot(c, v, N).is_zero()) return fail("cross product not orthogonal to an input", seed);

  auto u = random_series(rng, n, N, 1, N, 3);
  const Rational r1 = random_rational(rng, 4, 3);
  const Rational r2 = random_rational(rng, 4, 3);
  if (unit_power(u, r1 + r2, N) != mul(unit_power(u, r1, N), unit_power(u, r2, N), N))
    return fail("unit_power exponents do not add", seed);
  const long k = static_cast<long>(rng() % 4);
  ScalarSeries repeated = ScalarSeries::constant(n, N, Scalar(1));
  const auto one_plus_u = ScalarSeries::constant(n, N, Scalar(1)) + u;
  for (long i = 0; i < k; ++i) repeated = mul(repeated, one_plus_u, N);
  if (unit_power(u, Rational(k), N) != repeated) return fail("unit_power disagrees with repeated product", seed);
  return std::nullopt;
}

/// Runs `cases` seeds through every check; returns the first failure.
inline std::optional<std::string> run_algebra_suite(int cases, std::uint64_t base_seed = 1000) {
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    if (auto f = check_ring_case(seed)) return f;
    if (auto f = check_composition_case(seed)) return f;
    if (auto f = check_cross_power_case(seed)) return f;
  }
  return std::nullopt;
}

}  // namespace pdnf::testing
