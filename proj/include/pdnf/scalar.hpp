#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pdnf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// q^e for a (possibly negative) integer exponent.
inline Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (is_zero(q)) throw std::domain_error("zero raised to a negative power");
    return rational_pow(Rational(1) / q, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

/// The exact k-th root of a nonnegative rational when it is rational.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (sgn(q) < 0) return std::nullopt;
  Integer rn, rd;
  const bool num_exact = mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), k) != 0;
  const bool den_exact = mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), k) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  return make_rational(rn, rd);
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Exact element of Q or Q(i). The imaginary part is zero for rationals, so
/// "is_real()" is the variant tag; both parts are always canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  /// |z|^2, always rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(long e) const {
    if (e < 0) return (Scalar(1) / *this).pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  std::string str() const {
    if (is_real()) return to_string(re_);
    std::string s;
    if (sgn(re_) != 0) s = to_string(re_) + (sgn(im_) > 0 ? "+" : "");
    return s + to_string(im_) + "i";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Magnitude proxy used by growth diagnostics: max of |num|/|den| over the
/// real and imaginary parts, still exact.
inline Rational magnitude_proxy(const Scalar& s) {
  Rational a = abs(s.real());
  Rational b = abs(s.imag());
  return a > b ? a : b;
}

}  // namespace pdnf
