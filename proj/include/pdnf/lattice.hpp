#pragma once

#include <numeric>
#include <vector>

#include "pdnf/eigen.hpp"
#include "pdnf/linalg.hpp"

namespace pdnf {

enum class SystemKind { Map, Field };

inline std::string to_string(SystemKind k) { return k == SystemKind::Map ? "map" : "field"; }

/// Resonant exponents {m : mu^m = 1} (maps) or {m : <m, lambda> = 0}
/// (fields) with 2 <= |m| <= bound, and a maximal independent subset.
struct LatticeBasis {
  SystemKind kind = SystemKind::Map;
  int nvars = 0;
  int bound = 0;
  std::vector<Exponent> resonant;  ///< every resonant exponent found, graded-lex order
  std::vector<Exponent> generators;
  int rank = 0;

  /// gcd of the entries of generators[k]. A generator can only have gcd > 1
  /// when m/gcd is not itself resonant (possible with nontrivial phases).
  int generator_gcd(std::size_t k) const {
    int g = 0;
    for (int i = 0; i < nvars; ++i) g = std::gcd(g, generators[k][i]);
    return g;
  }
  bool all_generators_primitive() const {
    for (std::size_t k = 0; k < generators.size(); ++k)
      if (generator_gcd(k) != 1) return false;
    return true;
  }
  bool full_rank() const { return rank == nvars - 1; }
};

inline std::vector<Rational> to_rational_vector(const Exponent& m) {
  std::vector<Rational> v;
  for (int i = 0; i < m.size(); ++i) v.emplace_back(m[i]);
  return v;
}

/// Enumerates the resonant set up to degree D and picks generators greedily
/// in graded-lex order: an exponent becomes a generator when it is
/// independent of the generators chosen so far. The first independent
/// element on any ray is also the smallest resonant element on that ray,
/// so no generator is a proper multiple of another resonant exponent.
inline LatticeBasis enumerate_lattice(const EigenSpec& spec, int D) {
  if (D < 2) throw std::invalid_argument("enumerate_lattice: degree bound must be at least 2");
  LatticeBasis basis;
  basis.kind = spec.is_multiplicative() ? SystemKind::Map : SystemKind::Field;
  basis.nvars = spec.size();
  basis.bound = D;
  EchelonBasis<Rational> echelon(static_cast<std::size_t>(spec.size()));
  for (const auto& m : exponents_in_degree_range(spec.size(), 2, D)) {
    if (!is_resonant(spec, m, std::nullopt)) continue;
    basis.resonant.push_back(m);
    if (echelon.insert(to_rational_vector(m))) basis.generators.push_back(m);
  }
  basis.rank = static_cast<int>(basis.generators.size());
  return basis;
}

/// Integer vector spanning the kernel of the generator matrix (rank n-1).
inline std::vector<Integer> lattice_normal(const LatticeBasis& basis) {
  std::vector<std::vector<long>> rows;
  for (const auto& g : basis.generators) {
    std::vector<long> r;
    for (int i = 0; i < basis.nvars; ++i) r.push_back(g[i]);
    rows.push_back(std::move(r));
  }
  return integer_cross(rows, static_cast<std::size_t>(basis.nvars));
}

}  // namespace pdnf
