#pragma once

// JSON reading and writing for system files and reports. Rationals are
// integer pairs [num, den], Gaussian rationals quadruples
// [re_num, re_den, im_num, im_den]. Integers beyond 64 bits are written as
// decimal strings and accepted in either form.

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/lattice.hpp"
#include "pdnf/systems.hpp"

namespace pdnf::io {

using json = nlohmann::json;

namespace detail {

inline bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

/// DOM builder that refuses decimals. Integer literals too large for 64
/// bits reach number_float too; they are kept exactly as strings.
class StrictSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(json::number_float_t, const std::string& literal) {
    if (is_integer_literal(literal)) {
      std::string copy = literal;
      return Base::string(copy);
    }
    throw ParseError("decimal number " + literal +
                     " is not allowed; write rationals as integer pairs such as [1, 2]");
  }

  template <class Exception>
  bool parse_error(std::size_t position, const std::string&, const Exception& ex) {
    throw ParseError("malformed JSON at byte " + std::to_string(position) + ": " + ex.what());
  }
};

}  // namespace detail

inline json parse_text(const std::string& text) {
  json root;
  detail::StrictSax sax(root);
  json::sax_parse(text, &sax);
  return root;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_file(const std::string& path) { return parse_text(read_file(path)); }

// --- scalar encoding -------------------------------------------------------

inline json encode(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline json encode(const Rational& q) { return json::array({encode(q.get_num()), encode(q.get_den())}); }

/// Pair when real, quadruple otherwise.
inline json encode(const Scalar& s) {
  if (s.is_real()) return encode(s.real());
  return json::array({encode(s.real().get_num()), encode(s.real().get_den()), encode(s.imag().get_num()),
                      encode(s.imag().get_den())});
}

inline json encode(const Exponent& m) {
  json a = json::array();
  for (int i = 0; i < m.size(); ++i) a.push_back(m[i]);
  return a;
}

inline Integer decode_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                           : Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string() && detail::is_integer_literal(j.get<std::string>())) return Integer(j.get<std::string>());
  throw ParseError(where + ": expected an integer");
}

inline int decode_small_int(const json& j, const std::string& where, int lo, int hi) {
  const Integer z = decode_integer(j, where);
  if (z < lo || z > hi)
    throw ParseError(where + ": value " + z.get_str() + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return static_cast<int>(z.get_si());
}

inline Rational decode_rational_parts(const json& num, const json& den, const std::string& where) {
  const Integer d = decode_integer(den, where);
  if (d == 0) throw ParseError(where + ": zero denominator");
  Rational q(decode_integer(num, where), d);
  q.canonicalize();
  return q;
}

inline Rational decode_rational(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected a rational [num, den]");
  return decode_rational_parts(j[0], j[1], where);
}

inline Scalar decode_scalar(const json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2) return Scalar(decode_rational(j, where));
  if (j.is_array() && j.size() == 4)
    return Scalar(decode_rational_parts(j[0], j[1], where), decode_rational_parts(j[2], j[3], where));
  throw ParseError(where + ": expected [num, den] or [re_num, re_den, im_num, im_den]");
}

inline Exponent decode_exponent(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(where + ": expected an exponent of length " + std::to_string(n));
  std::vector<int> e;
  for (std::size_t i = 0; i < j.size(); ++i)
    e.push_back(decode_small_int(j[i], where + "[" + std::to_string(i) + "]", 0, Exponent::kMaxDegree));
  int total = 0;
  for (int x : e) total += x;
  if (total > Exponent::kMaxDegree) throw ParseError(where + ": total degree exceeds " + std::to_string(Exponent::kMaxDegree));
  return Exponent(e);
}

// --- series ----------------------------------------------------------------

inline json encode(const ScalarSeries& s) {
  json a = json::array();
  for (const auto& [m, c] : s.terms()) a.push_back({{"exponent", encode(m)}, {"coeff", encode(c)}});
  return a;
}

/// Term list with 1-based components, the same layout as system files.
inline json encode(const VecSeries& v) {
  json a = json::array();
  for (int j = 0; j < v.size(); ++j)
    for (const auto& [m, c] : v[j].terms())
      a.push_back({{"component", j + 1}, {"exponent", encode(m)}, {"coeff", encode(c)}});
  return a;
}

inline ScalarSeries decode_scalar_series(const json& j, int n, int N, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a term list");
  ScalarSeries s(n, N);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Exponent m = decode_exponent(j[k].at("exponent"), n, at + ".exponent");
    if (m.degree() > N) throw ParseError(at + ": degree above the stated order " + std::to_string(N));
    if (!is_zero(s.coeff(m))) throw ParseError(at + ": repeated monomial " + m.str());
    s.set(m, decode_scalar(j[k].at("coeff"), at + ".coeff"));
  }
  return s;
}

inline VecSeries decode_vector_series(const json& j, int n, int N, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a term list");
  VecSeries v(n, N);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_object()) throw ParseError(at + ": expected a term object");
    const int comp = decode_small_int(j[k].value("component", json()), at + ".component", 1, n) - 1;
    const Exponent m = decode_exponent(j[k].value("exponent", json()), n, at + ".exponent");
    if (m.degree() > N) throw ParseError(at + ": degree above the stated order " + std::to_string(N));
    if (!is_zero(v[comp].coeff(m)))
      throw ParseError(at + ": repeated monomial " + m.str() + " in component " + std::to_string(comp + 1));
    const Scalar c = decode_scalar(j[k].value("coeff", json()), at + ".coeff");
    v[comp].set(m, c);
  }
  return v;
}

// --- eigen specs -----------------------------------------------------------

inline json encode(const EigenSpec& spec) {
  json e;
  e["form"] = to_string(spec.form());
  if (spec.form() == EigenForm::MultBase) {
    json a = json::array(), p = json::array();
    for (const auto& x : spec.exponents()) a.push_back(encode(x));
    for (const auto& x : spec.phases()) p.push_back(encode(x));
    e["exponents"] = a;
    e["phases"] = p;
    if (spec.base_value()) e["base_value"] = encode(*spec.base_value());
  } else {
    json v = json::array();
    for (const auto& x : spec.values()) v.push_back(encode(x));
    e["values"] = v;
  }
  return e;
}

inline EigenSpec decode_eigen(const json& j, int n, bool gaussian) {
  if (!j.is_object()) throw ParseError("eigen: expected an object");
  const std::string form = j.value("form", "");
  auto values = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
      throw ParseError(std::string("eigen.") + key + ": expected " + std::to_string(n) + " entries");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      const std::string at = std::string("eigen.") + key + "[" + std::to_string(i) + "]";
      out.push_back(decode_scalar(j[key][i], at));
      if (!gaussian && !out.back().is_real()) throw ParseError(at + ": complex value with scalars \"rational\"");
    }
    return out;
  };
  auto rationals = [&](const char* key, bool required) {
    std::vector<Rational> out;
    if (!j.contains(key)) {
      if (required) throw ParseError(std::string("eigen.") + key + ": missing");
      return out;
    }
    if (!j[key].is_array() || static_cast<int>(j[key].size()) != n)
      throw ParseError(std::string("eigen.") + key + ": expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < j[key].size(); ++i)
      out.push_back(decode_rational(j[key][i], std::string("eigen.") + key + "[" + std::to_string(i) + "]"));
    return out;
  };
  try {
    if (form == "additive") return EigenSpec::additive(values("values"));
    if (form == "mult-rational") return EigenSpec::mult_rational(values("values"));
    if (form == "mult-base") {
      std::optional<Rational> base;
      if (j.contains("base_value")) base = decode_rational(j["base_value"], "eigen.base_value");
      return EigenSpec::mult_base(rationals("exponents", true), rationals("phases", false), base);
    }
  } catch (const HypothesisError& e) {
    throw ParseError(std::string("eigen: ") + e.what());
  }
  throw ParseError("eigen.form: expected \"additive\", \"mult-rational\" or \"mult-base\", got \"" + form + "\"");
}

// --- system files ----------------------------------------------------------

struct SystemFile {
  SystemKind kind = SystemKind::Map;
  int n = 0;
  bool gaussian = false;
  EigenSpec spec;
  VecSeries f;
  int degree_D = 10;
  int order_N = 8;

  MapSystem map() const {
    if (kind != SystemKind::Map) throw HypothesisError("this command needs a map, the input is a field");
    return MapSystem(spec, f);
  }
  FieldSystem field() const {
    if (kind != SystemKind::Field) throw HypothesisError("this command needs a field, the input is a map");
    return FieldSystem(spec, f);
  }
};

inline SystemFile decode_system(const json& j) {
  if (!j.is_object()) throw ParseError("system file: expected a JSON object");
  SystemFile s;
  const std::string kind = j.value("kind", "");
  if (kind == "map") {
    s.kind = SystemKind::Map;
  } else if (kind == "field") {
    s.kind = SystemKind::Field;
  } else {
    throw ParseError("kind: expected \"map\" or \"field\"");
  }
  if (!j.contains("n")) throw ParseError("n: missing");
  s.n = decode_small_int(j["n"], "n", 1, 8);
  const std::string scalars = j.value("scalars", "rational");
  if (scalars != "rational" && scalars != "gaussian") throw ParseError("scalars: expected \"rational\" or \"gaussian\"");
  s.gaussian = scalars == "gaussian";
  if (!j.contains("eigen")) throw ParseError("eigen: missing");
  s.spec = decode_eigen(j["eigen"], s.n, s.gaussian);
  if (s.kind == SystemKind::Map && !s.spec.is_multiplicative())
    throw ParseError("eigen.form: a map needs \"mult-rational\" or \"mult-base\"");
  if (s.kind == SystemKind::Field && s.spec.is_multiplicative())
    throw ParseError("eigen.form: a field needs \"additive\"");
  if (j.contains("degree_D")) s.degree_D = decode_small_int(j["degree_D"], "degree_D", 2, Exponent::kMaxDegree);
  if (j.contains("order_N")) s.order_N = decode_small_int(j["order_N"], "order_N", 2, Exponent::kMaxDegree);

  const json terms = j.value("terms", json::array());
  s.f = decode_vector_series(terms, s.n, Exponent::kMaxDegree, "terms");
  int top = 2;
  for (int c = 0; c < s.n; ++c)
    for (const auto& [m, coeff] : s.f[c].terms()) {
      if (m.degree() < 2)
        throw ParseError("terms: component " + std::to_string(c + 1) + " has a term of degree " +
                         std::to_string(m.degree()) + " at " + m.str() +
                         "; constant and linear terms belong to the eigen block");
      if (!s.gaussian && !coeff.is_real())
        throw ParseError("terms: complex coefficient at " + m.str() + " with scalars \"rational\"");
      top = std::max(top, m.degree());
    }
  s.f = s.f.with_truncation(top);
  return s;
}

inline SystemFile load_system(const std::string& path) { return decode_system(parse_file(path)); }

inline json encode(const SystemFile& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["n"] = s.n;
  j["scalars"] = s.gaussian ? "gaussian" : "rational";
  j["eigen"] = encode(s.spec);
  j["terms"] = encode(s.f);
  j["degree_D"] = s.degree_D;
  j["order_N"] = s.order_N;
  return j;
}

/// Deterministic text form: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pdnf::io
