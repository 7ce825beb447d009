#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdnf/exponent.hpp"
#include "pdnf/scalar.hpp"

namespace pdnf {

/// Valuation reported for the zero series. Large enough that adding two of
/// them never overflows an int.
inline constexpr int kInfiniteValuation = 1 << 20;

/// Sparse multivariate power series in n variables, known exactly through
/// total degree `truncation()`. Coefficients live in K (Scalar or Rational).
///
/// Zero coefficients are never stored, so two series compare equal exactly
/// when their term maps agree. The truncation degree is bookkeeping and does
/// not take part in equality.
template <class K>
class Series {
 public:
  using Terms = std::map<Exponent, K, GradedLex>;

  Series() = default;
  Series(int nvars, int truncation) : n_(nvars), trunc_(truncation) {
    if (nvars < 0 || nvars > Exponent::kMaxVars) throw std::invalid_argument("series dimension out of range");
    if (truncation < 0 || truncation > Exponent::kMaxDegree) throw std::invalid_argument("truncation degree out of range");
  }

  static Series constant(int nvars, int truncation, const K& c) {
    Series s(nvars, truncation);
    s.add_term(Exponent(nvars), c);
    return s;
  }
  static Series monomial(int nvars, int truncation, const Exponent& m, const K& c = K(1)) {
    Series s(nvars, truncation);
    s.add_term(m, c);
    return s;
  }
  static Series variable(int nvars, int truncation, int i) {
    return monomial(nvars, truncation, Exponent::unit(nvars, i));
  }

  int nvars() const { return n_; }
  int truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const Exponent& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Sets the coefficient of y^m. Terms above the truncation degree are
  /// dropped silently, matching the meaning of a truncated series.
  void set(const Exponent& m, const K& c) {
    check_exponent(m);
    if (m.degree() > trunc_) return;
    if (pdnf::is_zero(c)) {
      terms_.erase(m);
    } else {
      terms_[m] = c;
    }
  }

  void add_term(const Exponent& m, const K& c) {
    check_exponent(m);
    if (m.degree() > trunc_ || pdnf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (pdnf::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Lowest degree carrying a nonzero coefficient.
  int valuation() const { return terms_.empty() ? kInfiniteValuation : terms_.begin()->first.degree(); }
  int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  Series truncated(int degree) const {
    Series r(n_, std::min(degree, trunc_));
    for (const auto& [m, c] : terms_) {
      if (m.degree() > r.trunc_) break;
      r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  /// The same terms, relabelled as known through `degree`. Used where a
  /// polynomial is exact (so raising the bookkeeping degree is harmless).
  Series with_truncation(int degree) const {
    Series r(n_, degree);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > degree) break;
      r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  /// Homogeneous component of degree s.
  Series homogeneous(int s) const {
    Series r(n_, trunc_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == s) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Series& operator+=(const Series& o) {
    check_same_dim(o);
    trunc_ = std::min(trunc_, o.trunc_);
    drop_above_truncation();
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_same_dim(o);
    trunc_ = std::min(trunc_, o.trunc_);
    drop_above_truncation();
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Series& operator*=(const K& k) {
    if (pdnf::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  Series& operator/=(const K& k) {
    if (pdnf::is_zero(k)) throw std::domain_error("series divided by zero");
    for (auto& [m, c] : terms_) c /= k;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const K& k) { return a *= k; }
  friend Series operator*(const K& k, Series a) { return a *= k; }
  friend Series operator/(Series a, const K& k) { return a /= k; }

  friend bool operator==(const Series& a, const Series& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  void check_same_dim(const Series& o) const {
    if (n_ != o.n_) throw std::invalid_argument("series dimension mismatch");
  }

 private:
  void check_exponent(const Exponent& m) const {
    if (m.size() != n_) throw std::invalid_argument("exponent dimension does not match series dimension");
  }
  void drop_above_truncation() {
    while (!terms_.empty() && terms_.rbegin()->first.degree() > trunc_) terms_.erase(std::prev(terms_.end()));
  }

  int n_ = 0;
  int trunc_ = 0;
  Terms terms_;
};

/// n component series in n variables (a map or vector field germ).
template <class K>
class VectorSeries {
 public:
  VectorSeries() = default;
  VectorSeries(int nvars, int truncation) : VectorSeries(nvars, nvars, truncation) {}
  VectorSeries(int ncomponents, int nvars, int truncation)
      : comps_(static_cast<std::size_t>(ncomponents), Series<K>(nvars, truncation)) {}
  explicit VectorSeries(std::vector<Series<K>> comps) : comps_(std::move(comps)) {
    for (const auto& c : comps_)
      if (c.nvars() != comps_.front().nvars()) throw std::invalid_argument("vector series components differ in dimension");
  }

  static VectorSeries identity(int nvars, int truncation) {
    VectorSeries v(nvars, truncation);
    for (int i = 0; i < nvars; ++i) v[i] = Series<K>::variable(nvars, truncation, i);
    return v;
  }

  /// The diagonal linear map y -> (d_1 y_1, ..., d_n y_n).
  static VectorSeries diagonal(const std::vector<K>& d, int truncation) {
    const int n = static_cast<int>(d.size());
    VectorSeries v(n, truncation);
    for (int i = 0; i < n; ++i) v[i] = Series<K>::variable(n, truncation, i) * d[i];
    return v;
  }

  int size() const { return static_cast<int>(comps_.size()); }
  int nvars() const { return comps_.empty() ? 0 : comps_.front().nvars(); }
  int truncation() const {
    int t = Exponent::kMaxDegree;
    for (const auto& c : comps_) t = std::min(t, c.truncation());
    return t;
  }
  int valuation() const {
    int v = kInfiniteValuation;
    for (const auto& c : comps_) v = std::min(v, c.valuation());
    return v;
  }
  bool is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Series<K>& c) { return c.is_zero(); });
  }

  Series<K>& operator[](int i) { return comps_.at(static_cast<std::size_t>(i)); }
  const Series<K>& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  const std::vector<Series<K>>& components() const { return comps_; }

  VectorSeries truncated(int degree) const {
    VectorSeries r = *this;
    for (auto& c : r.comps_) c = c.truncated(degree);
    return r;
  }
  VectorSeries with_truncation(int degree) const {
    VectorSeries r = *this;
    for (auto& c : r.comps_) c = c.with_truncation(degree);
    return r;
  }
  VectorSeries homogeneous(int s) const {
    VectorSeries r = *this;
    for (auto& c : r.comps_) c = c.homogeneous(s);
    return r;
  }

  VectorSeries& operator+=(const VectorSeries& o) {
    check_same_shape(o);
    for (int i = 0; i < size(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  VectorSeries& operator-=(const VectorSeries& o) {
    check_same_shape(o);
    for (int i = 0; i < size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
  }
  VectorSeries operator-() const {
    VectorSeries r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
  }
  friend VectorSeries operator+(VectorSeries a, const VectorSeries& b) { return a += b; }
  friend VectorSeries operator-(VectorSeries a, const VectorSeries& b) { return a -= b; }

  friend bool operator==(const VectorSeries& a, const VectorSeries& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const VectorSeries& a, const VectorSeries& b) { return !(a == b); }

 private:
  void check_same_shape(const VectorSeries& o) const {
    if (size() != o.size() || nvars() != o.nvars()) throw std::invalid_argument("vector series shape mismatch");
  }

  std::vector<Series<K>> comps_;
};

template <class K>
using SeriesMatrix = std::vector<std::vector<Series<K>>>;

inline std::string coeff_string(const Scalar& s) { return s.str(); }
inline std::string coeff_string(const Rational& q) { return to_string(q); }

/// Human-readable rendering, e.g. "y1 - 1/2*y1^2*y2". Terms appear in
/// graded-lex order.
template <class K>
std::string to_string(const Series<K>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    std::string mono;
    for (int i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string cs = coeff_string(c);
    bool negative = false;
    if (cs.find('i') != std::string::npos) {
      cs = "(" + cs + ")";
    } else if (cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Series<K>& s) {
  return os << to_string(s) << " [N=" << s.truncation() << "]";
}

template <class K>
std::ostream& operator<<(std::ostream& os, const VectorSeries<K>& v) {
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  return os << ")";
}

using ScalarSeries = Series<Scalar>;
using VecSeries = VectorSeries<Scalar>;

}  // namespace pdnf
