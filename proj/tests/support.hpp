#pragma once

// Test-only helpers: a tiny polynomial reader so oracles can be written the
// way they would be on paper, e.g. poly(2, 4, "2*y1 + y2^2 - 1/2*y1^2*y2").

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdnf/series.hpp"

namespace pdnf::testing {

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Integer read_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw std::invalid_argument("poly: expected digits in '" + s + "'");
  return Integer(s.substr(start, i - start));
}

}  // namespace detail

/// Parses sums of terms like "3/4*i*y1^2*y3". Variables are y1..yn (x, y, z
/// are accepted as y1, y2, y3). The factor "i" is the imaginary unit.
template <class K = Scalar>
Series<K> poly(int n, int N, const std::string& text) {
  Series<K> out(n, N);
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i == text.size()) return out;
  bool first = true;
  while (true) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("poly: expected + or - in '" + text + "'");
    }
    first = false;
    K coeff(sign);
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    bool need_factor = true;
    while (need_factor) {
      detail::skip_ws(text, i);
      if (i >= text.size()) throw std::invalid_argument("poly: dangling operator in '" + text + "'");
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = detail::read_int(text, i);
        Integer den(1);
        if (i < text.size() && text[i] == '/') {
          ++i;
          den = detail::read_int(text, i);
        }
        coeff *= K(make_rational(num, den));
      } else if (c == 'i') {
        ++i;
        if constexpr (std::is_same_v<K, Scalar>) {
          coeff *= Scalar::i();
        } else {
          throw std::invalid_argument("poly: imaginary unit in a rational series");
        }
      } else if (c == 'y' || c == 'x' || c == 'z') {
        int var = 0;
        ++i;
        if (c == 'y' && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          var = static_cast<int>(detail::read_int(text, i).get_si()) - 1;
        } else {
          var = c == 'x' ? 0 : (c == 'y' ? 1 : 2);
        }
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(detail::read_int(text, i).get_si());
        }
        if (var < 0 || var >= n) throw std::invalid_argument("poly: variable out of range in '" + text + "'");
        m[static_cast<std::size_t>(var)] += e;
      } else {
        throw std::invalid_argument(std::string("poly: unexpected '") + c + "' in '" + text + "'");
      }
      detail::skip_ws(text, i);
      need_factor = i < text.size() && text[i] == '*';
      if (need_factor) ++i;
    }
    out.add_term(Exponent(m), coeff);
  }
  return out;
}

template <class K = Scalar>
VectorSeries<K> vpoly(int n, int N, const std::vector<std::string>& comps) {
  std::vector<Series<K>> v;
  for (const auto& c : comps) v.push_back(poly<K>(n, N, c));
  return VectorSeries<K>(std::move(v));
}

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace pdnf::testing
