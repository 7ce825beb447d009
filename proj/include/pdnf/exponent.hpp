#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdnf {

/// Multi-index m in Z_+^n, packed one byte per entry into a 64-bit word.
///
/// Entry 0 occupies the most significant byte, so for a fixed degree the
/// numeric order of the packed word is the lexicographic order of the
/// entries. Addition of exponents is a single integer add: no carries can
/// occur because every entry, and the total degree, is capped at kMaxDegree.
class Exponent {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxDegree = 255;

  Exponent() = default;
  explicit Exponent(int nvars) : n_(checked_nvars(nvars)) {}

  Exponent(std::initializer_list<int> entries)
      : Exponent(std::span<const int>(entries.begin(), entries.size())) {}

  explicit Exponent(std::span<const int> entries) : n_(checked_nvars(static_cast<int>(entries.size()))) {
    int deg = 0;
    for (int i = 0; i < n_; ++i) {
      if (entries[i] < 0) throw std::invalid_argument("negative exponent entry");
      deg += entries[i];
      if (deg > kMaxDegree) throw std::invalid_argument("exponent degree exceeds " + std::to_string(kMaxDegree));
      bits_ |= static_cast<std::uint64_t>(entries[i]) << shift(i);
    }
    degree_ = static_cast<std::uint16_t>(deg);
  }

  explicit Exponent(const std::vector<int>& entries) : Exponent(std::span<const int>(entries)) {}

  /// e_i, the i-th unit vector.
  static Exponent unit(int nvars, int i) {
    Exponent e(nvars);
    e.bits_ = std::uint64_t{1} << shift(i);
    e.degree_ = 1;
    return e;
  }

  /// Rebuilds an exponent from packed() output.
  static Exponent from_packed(int nvars, std::uint64_t bits) {
    Exponent e(nvars);
    e.bits_ = bits;
    int deg = 0;
    for (int i = 0; i < nvars; ++i) deg += e[i];
    e.degree_ = static_cast<std::uint16_t>(deg);
    return e;
  }

  int size() const { return n_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xFFu); }
  std::uint64_t packed() const { return bits_; }

  std::vector<int> entries() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
  }

  /// True when every entry of *this is <= the matching entry of other.
  bool divides(const Exponent& other) const {
    for (int i = 0; i < n_; ++i)
      if ((*this)[i] > other[i]) return false;
    return true;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("exponent dimension mismatch");
    if (a.degree_ + b.degree_ > kMaxDegree) throw std::overflow_error("exponent degree overflow");
    Exponent r(a.n_);
    r.bits_ = a.bits_ + b.bits_;
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  /// a - b, requires b.divides(a).
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    if (a.n_ != b.n_ || !b.divides(a)) throw std::invalid_argument("exponent subtraction underflow");
    Exponent r(a.n_);
    r.bits_ = a.bits_ - b.bits_;
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string((*this)[i]);
    }
    return s + ")";
  }

 private:
  static int shift(int i) { return 8 * (kMaxVars - 1 - i); }
  static std::uint8_t checked_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("number of variables must be in [0, 8]");
    return static_cast<std::uint8_t>(n);
  }

  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// x1 dominates x2 dominates ... so x1^2 < x1 x2 < x2^2.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.packed() > b.packed();
  }
};

/// All exponents in n variables with lo <= |m| <= hi, in graded-lex order.
inline std::vector<Exponent> exponents_in_degree_range(int nvars, int lo, int hi) {
  std::vector<Exponent> out;
  std::vector<int> m(nvars, 0);
  for (int d = lo; d <= hi; ++d) {
    if (nvars == 0) {
      if (d == 0) out.emplace_back(0);
      continue;
    }
    // Lexicographically descending compositions of d into nvars parts.
    m.assign(nvars, 0);
    m[0] = d;
    while (true) {
      out.emplace_back(m);
      // Next composition: find the rightmost non-last entry that is > 0.
      int k = nvars - 2;
      while (k >= 0 && m[k] == 0) --k;
      if (k < 0) break;
      m[k] -= 1;
      const int tail = m[nvars - 1];
      m[nvars - 1] = 0;
      m[k + 1] += tail + 1;
    }
  }
  return out;
}

}  // namespace pdnf
