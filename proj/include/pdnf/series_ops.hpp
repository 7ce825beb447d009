#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pdnf/series.hpp"

namespace pdnf {

namespace detail {

inline int cap_degree(long d) { return static_cast<int>(std::clamp<long>(d, 0, Exponent::kMaxDegree)); }

}  // namespace detail

/// Truncated product a*b through degree N. The result is further limited to
/// the degree through which the inputs actually determine the product.
template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b, int N) {
  a.check_same_dim(b);
  const long determined = std::min(static_cast<long>(a.truncation()) + b.valuation(),
                                   static_cast<long>(b.truncation()) + a.valuation());
  const int out_deg = detail::cap_degree(std::min<long>(N, determined));
  std::unordered_map<std::uint64_t, K> acc;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > out_deg) break;
    const int room = out_deg - ma.degree();
    for (const auto& [mb, cb] : b.terms()) {
      if (mb.degree() > room) break;
      const std::uint64_t key = ma.packed() + mb.packed();
      auto [it, inserted] = acc.try_emplace(key, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  Series<K> r(a.nvars(), out_deg);
  for (const auto& [key, c] : acc) r.set(Exponent::from_packed(a.nvars(), key), c);
  return r;
}

template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b) {
  return mul(a, b, std::min(a.truncation(), b.truncation()));
}

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
  return mul(a, b);
}

/// p(d_1 y_1, ..., d_n y_n): rescales each coefficient by d^m.
template <class K>
Series<K> scale_variables(const Series<K>& p, const std::vector<K>& d) {
  if (static_cast<int>(d.size()) != p.nvars()) throw std::invalid_argument("scale vector has wrong length");
  std::vector<std::vector<K>> powers(d.size());
  Series<K> r(p.nvars(), p.truncation());
  for (const auto& [m, c] : p.terms()) {
    K f = c;
    for (int i = 0; i < p.nvars(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(K(1));
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * d[i]);
      f *= pw[m[i]];
    }
    r.set(m, f);
  }
  return r;
}

template <class K>
VectorSeries<K> scale_variables(const VectorSeries<K>& p, const std::vector<K>& d) {
  VectorSeries<K> r = p;
  for (int i = 0; i < p.size(); ++i) r[i] = scale_variables(p[i], d);
  return r;
}

/// Memoized products inner^m, for substituting a constant-free vector series
/// into many monomials. Monomials that cannot reach degree <= `degree` are
/// never built.
template <class K>
class PowerCache {
 public:
  PowerCache(const VectorSeries<K>& inner, int degree) : inner_(inner), degree_(degree), val_(inner.valuation()) {
    const Exponent zero(inner.nvars());
    for (int i = 0; i < inner.size(); ++i)
      if (!pdnf::is_zero(inner[i].coeff(zero)))
        throw std::invalid_argument("substituted series has a constant term");
  }

  int degree() const { return degree_; }

  /// True when inner^m is identically zero through degree().
  bool vanishes(const Exponent& m) const {
    return m.degree() > 0 && static_cast<long>(m.degree()) * val_ > degree_;
  }

  const Series<K>& power(const Exponent& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    Series<K> value(inner_.nvars(), degree_);
    if (m.degree() == 0) {
      value = Series<K>::constant(inner_.nvars(), degree_, K(1));
    } else if (!vanishes(m)) {
      int last = m.size() - 1;
      while (m[last] == 0) --last;
      const Exponent unit = Exponent::unit(m.size(), last);
      const Exponent rest = m - unit;
      if (rest.degree() == 0) {
        value = inner_[last].truncated(degree_).with_truncation(degree_);
      } else {
        value = mul(power(rest), inner_[last], degree_).with_truncation(degree_);
      }
    }
    return cache_.emplace(m, std::move(value)).first->second;
  }

 private:
  const VectorSeries<K>& inner_;
  int degree_;
  int val_;
  std::map<Exponent, Series<K>, GradedLex> cache_;
};

namespace detail {

template <class K>
int composition_degree(const Series<K>& outer, const VectorSeries<K>& inner, int N) {
  if (outer.nvars() != inner.size()) throw std::invalid_argument("composition dimension mismatch");
  const long v = inner.valuation();
  long d = std::min<long>(N, inner.truncation());
  // Terms of outer beyond its truncation contribute from degree v*(N_outer+1).
  d = std::min<long>(d, v * (static_cast<long>(outer.truncation()) + 1) - 1);
  return cap_degree(d);
}

template <class K>
Series<K> compose_with_cache(const Series<K>& outer, PowerCache<K>& cache, int nvars) {
  Series<K> r(nvars, cache.degree());
  for (const auto& [m, c] : outer.terms()) {
    if (cache.vanishes(m)) continue;
    const Series<K>& pw = cache.power(m);
    for (const auto& [e, pc] : pw.terms()) r.add_term(e, c * pc);
  }
  return r;
}

}  // namespace detail

/// outer(inner(y)) truncated at N. inner must have no constant term.
template <class K>
Series<K> compose(const Series<K>& outer, const VectorSeries<K>& inner, int N) {
  const int d = detail::composition_degree(outer, inner, N);
  PowerCache<K> cache(inner, d);
  return detail::compose_with_cache(outer, cache, inner.nvars());
}

template <class K>
VectorSeries<K> compose(const VectorSeries<K>& outer, const VectorSeries<K>& inner, int N) {
  int d = N;
  for (int i = 0; i < outer.size(); ++i) d = std::min(d, detail::composition_degree(outer[i], inner, N));
  PowerCache<K> cache(inner, d);
  std::vector<Series<K>> comps;
  comps.reserve(static_cast<std::size_t>(outer.size()));
  for (int i = 0; i < outer.size(); ++i) comps.push_back(detail::compose_with_cache(outer[i], cache, inner.nvars()));
  return VectorSeries<K>(std::move(comps));
}

template <class K>
VectorSeries<K> compose(const VectorSeries<K>& outer, const VectorSeries<K>& inner) {
  return compose(outer, inner, std::min(outer.truncation(), inner.truncation()));
}

/// Linear part of a vector series as a dense matrix: entry (i, j) is the
/// coefficient of y_j in component i.
template <class K>
std::vector<std::vector<K>> linear_part(const VectorSeries<K>& v) {
  std::vector<std::vector<K>> a(v.size(), std::vector<K>(v.nvars(), K(0)));
  for (int i = 0; i < v.size(); ++i)
    for (int j = 0; j < v.nvars(); ++j) a[i][j] = v[i].coeff(Exponent::unit(v.nvars(), j));
  return a;
}

/// Compositional inverse of phi = id + O(|y|^2) through degree N, built one
/// degree at a time from psi = id - h(psi) where phi = id + h.
template <class K>
VectorSeries<K> invert(const VectorSeries<K>& phi, int N) {
  const int n = phi.nvars();
  if (phi.size() != n) throw std::invalid_argument("invert needs a square system");
  const Exponent zero(n);
  for (int i = 0; i < n; ++i) {
    if (!pdnf::is_zero(phi[i].coeff(zero))) throw std::invalid_argument("invert: series has a constant term");
    for (int j = 0; j < n; ++j) {
      const K expected = (i == j) ? K(1) : K(0);
      if (phi[i].coeff(Exponent::unit(n, j)) != expected)
        throw std::invalid_argument("invert: linear part is not the identity");
    }
  }
  N = std::min(N, phi.truncation());
  const VectorSeries<K> id = VectorSeries<K>::identity(n, N);
  const VectorSeries<K> h = (phi.truncated(N) - id);
  VectorSeries<K> psi = id;
  for (int d = 2; d <= N; ++d) psi = id.truncated(d) - compose(h, psi.with_truncation(d), d);
  return psi.with_truncation(N);
}

template <class K>
VectorSeries<K> invert(const VectorSeries<K>& phi) {
  return invert(phi, phi.truncation());
}

/// d/dy_i, truncated one degree lower than the input.
template <class K>
Series<K> derivative(const Series<K>& p, int i) {
  Series<K> r(p.nvars(), std::max(p.truncation() - 1, 0));
  const Exponent unit = Exponent::unit(p.nvars(), i);
  for (const auto& [m, c] : p.terms())
    if (m[i] > 0) r.set(m - unit, c * K(m[i]));
  return r;
}

template <class K>
VectorSeries<K> gradient(const Series<K>& p) {
  std::vector<Series<K>> comps;
  for (int i = 0; i < p.nvars(); ++i) comps.push_back(derivative(p, i));
  return VectorSeries<K>(std::move(comps));
}

template <class K>
SeriesMatrix<K> jacobian(const VectorSeries<K>& F) {
  SeriesMatrix<K> J(static_cast<std::size_t>(F.size()));
  for (int i = 0; i < F.size(); ++i)
    for (int j = 0; j < F.nvars(); ++j) J[i].push_back(derivative(F[i], j));
  return J;
}

template <class K>
Series<K> dot(const VectorSeries<K>& a, const VectorSeries<K>& b, int N) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Series<K> r(a.nvars(), N);
  for (int i = 0; i < a.size(); ++i) r += mul(a[i], b[i], N);
  return r;
}

template <class K>
VectorSeries<K> matvec(const SeriesMatrix<K>& M, const VectorSeries<K>& v, int N) {
  std::vector<Series<K>> comps;
  for (const auto& row : M) {
    if (static_cast<int>(row.size()) != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    Series<K> r(v.nvars(), N);
    for (int j = 0; j < v.size(); ++j) r += mul(row[j], v[j], N);
    comps.push_back(std::move(r));
  }
  return VectorSeries<K>(std::move(comps));
}

/// Directional derivative <grad p, X>.
template <class K>
Series<K> lie_derivative(const Series<K>& p, const VectorSeries<K>& X, int N) {
  return dot(gradient(p), X, N);
}

namespace detail {

/// Minors of the top rows of `rows` (k x ncols): after the call, the map
/// holds det(rows[0..k-1], columns S) for every column set S with |S| = k,
/// keyed by bitmask. Expansion is along the last row at each step.
template <class K>
std::unordered_map<unsigned, Series<K>> leading_minors(const std::vector<std::vector<Series<K>>>& rows, int ncols,
                                                       int nvars, int N) {
  std::unordered_map<unsigned, Series<K>> prev;
  prev.emplace(0u, Series<K>::constant(nvars, N, K(1)));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::unordered_map<unsigned, Series<K>> next;
    for (const auto& [mask, minor] : prev) {
      if (minor.is_zero()) continue;
      for (int c = 0; c < ncols; ++c) {
        const unsigned bit = 1u << c;
        if (mask & bit) continue;
        const Series<K>& entry = rows[k][static_cast<std::size_t>(c)];
        if (entry.is_zero()) continue;
        // Position of c within mask|bit, counted from the left.
        const int pos = __builtin_popcount(mask & (bit - 1));
        const bool negative = ((pos + static_cast<int>(k)) % 2) != 0;
        Series<K> term = mul(entry, minor, N);
        auto [it, inserted] = next.try_emplace(mask | bit, Series<K>(nvars, N));
        if (negative) {
          it->second -= term;
        } else {
          it->second += term;
        }
      }
    }
    prev = std::move(next);
  }
  return prev;
}

}  // namespace detail

/// Determinant of a square matrix of series, truncated at N, by Laplace
/// expansion with shared minors (O(2^n n) series products).
template <class K>
Series<K> det_series(const SeriesMatrix<K>& M, int N) {
  const int k = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("det_series: matrix is not square");
  if (k == 0) throw std::invalid_argument("det_series: empty matrix");
  const int nvars = M[0][0].nvars();
  auto minors = detail::leading_minors(M, k, nvars, N);
  auto it = minors.find((1u << k) - 1);
  return it == minors.end() ? Series<K>(nvars, N) : it->second;
}

template <class K>
Series<K> det_series(const SeriesMatrix<K>& M) {
  int N = Exponent::kMaxDegree;
  for (const auto& row : M)
    for (const auto& e : row) N = std::min(N, e.truncation());
  return det_series(M, N);
}

/// Generalized cross product of n-1 vectors of length n: the vector c with
/// <c, w> = det(w; v_1; ...; v_{n-1}), i.e. c_i = (-1)^i times the minor
/// that omits column i.
template <class K>
VectorSeries<K> cross(const std::vector<VectorSeries<K>>& vs, int N) {
  if (vs.empty()) throw std::invalid_argument("cross: needs n-1 vectors for n >= 2");
  const int n = vs.front().size();
  if (static_cast<int>(vs.size()) != n - 1) throw std::invalid_argument("cross: expected exactly n-1 vectors of length n");
  for (const auto& v : vs)
    if (v.size() != n) throw std::invalid_argument("cross: vectors differ in length");
  const int nvars = vs.front().nvars();
  std::vector<std::vector<Series<K>>> rows;
  for (const auto& v : vs) rows.push_back(v.components());
  auto minors = detail::leading_minors(rows, n, nvars, N);
  const unsigned full = (1u << n) - 1;
  std::vector<Series<K>> comps;
  for (int i = 0; i < n; ++i) {
    auto it = minors.find(full & ~(1u << i));
    Series<K> c = it == minors.end() ? Series<K>(nvars, N) : it->second;
    comps.push_back(i % 2 == 0 ? c : -c);
  }
  return VectorSeries<K>(std::move(comps));
}

template <class K>
VectorSeries<K> cross(const std::vector<VectorSeries<K>>& vs) {
  int N = Exponent::kMaxDegree;
  for (const auto& v : vs) N = std::min(N, v.truncation());
  return cross(vs, N);
}

/// (1 + u)^r through degree N via the binomial series, evaluated in Horner
/// form. u must have no constant term.
template <class K>
Series<K> unit_power(const Series<K>& u, const Rational& r, int N) {
  if (!pdnf::is_zero(u.coeff(Exponent(u.nvars()))))
    throw std::invalid_argument("unit_power: u has a constant term");
  const int n = u.nvars();
  const int v = u.valuation();
  const int kmax = v >= kInfiniteValuation ? 0 : N / v;
  const Series<K> one = Series<K>::constant(n, N, K(1));
  Series<K> acc = one;
  for (int k = kmax; k >= 1; --k) {
    const Rational factor = (r - (k - 1)) / k;
    acc = one + mul(u, acc, N) * K(factor);
  }
  return acc;
}

template <class K>
K evaluate(const Series<K>& p, const std::vector<K>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw std::invalid_argument("evaluate: point has wrong dimension");
  std::vector<std::vector<K>> powers(point.size(), std::vector<K>{K(1)});
  K total(0);
  for (const auto& [m, c] : p.terms()) {
    K t = c;
    for (int i = 0; i < p.nvars(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[m[i]];
    }
    total += t;
  }
  return total;
}

}  // namespace pdnf
