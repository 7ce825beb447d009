#pragma once

// Report assembly for the command-line front end. Every boolean claim in a
// report ("residual_zero", "verified", ...) is the outcome of an exact check
// made while building it; `verify_report` redoes those checks from the
// coefficients stored in the report itself.

#include <cstdio>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pdnf/bounds.hpp"
#include "pdnf/embedding.hpp"
#include "pdnf/integrability.hpp"
#include "pdnf/integrals.hpp"
#include "pdnf/json_io.hpp"

namespace pdnf::io {

struct RunOptions {
  std::optional<int> degree_D;
  std::optional<int> order_N;
  int trials = 8;
  std::uint64_t seed = 0;
  int lie_order = 12;
};

namespace detail {

inline std::string witness(const ScalarSeries& s) {
  if (s.is_zero()) return "";
  const auto& [m, c] = *s.terms().begin();
  return "monomial " + m.str() + " has coefficient " + c.str();
}

inline std::string witness(const VecSeries& v) {
  for (int j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) return "component " + std::to_string(j + 1) + ": " + witness(v[j]);
  return "";
}

inline std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline json exponent_list(const std::vector<Exponent>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(encode(m));
  return a;
}

inline json rational_list(const std::vector<Rational>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(encode(q));
  return a;
}

inline json integer_list(const std::vector<Integer>& zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(encode(z));
  return a;
}

inline json series_list(const std::vector<ScalarSeries>& ss) {
  json a = json::array();
  for (const auto& s : ss) a.push_back(encode(s));
  return a;
}

inline json input_section(const SystemFile& sys, int D, int N) {
  return {{"system", encode(sys)}, {"degree_D", D}, {"order_N", N}};
}

}  // namespace detail

inline json lattice_section(const LatticeBasis& b) {
  json gcds = json::array();
  for (std::size_t k = 0; k < b.generators.size(); ++k) gcds.push_back(b.generator_gcd(k));
  return {{"kind", to_string(b.kind)},
          {"degree_D", b.bound},
          {"rank", b.rank},
          {"full_rank", b.full_rank()},
          {"generators", detail::exponent_list(b.generators)},
          {"generator_gcds", gcds},
          {"resonant", detail::exponent_list(b.resonant)}};
}

inline json bounds_section(const EigenSpec& spec, const LatticeBasis& basis, int D) {
  json out;
  if (!basis.full_rank()) {
    out["available"] = false;
    out["reason"] = "the bound needs a resonant lattice of rank n-1";
    return out;
  }
  const auto bound = spec.is_multiplicative() ? small_divisor_bound_map(spec, basis)
                                              : small_divisor_bound_field(spec, basis);
  out["available"] = true;
  out["symbol"] = spec.is_multiplicative() ? "sigma" : "kappa";
  out["expression"] = bound.expression;
  out["value"] = bound.value ? encode(*bound.value) : json();
  out["value_squared"] = bound.value_squared ? encode(*bound.value_squared) : json();
  json cert;
  if (spec.is_multiplicative()) {
    cert = {{"normal", detail::integer_list(bound.normal)},
            {"pivot", bound.pivot + 1},
            {"Delta", encode(bound.Delta)},
            {"delta", detail::integer_list(bound.delta)},
            {"alpha_above_one", bound.alpha_above_one},
            {"alpha", bound.alpha_expression},
            {"sigma1", bound.sigma1_expression},
            {"phase_order", bound.phase_order},
            {"gamma", bound.gamma_expression},
            {"sigma2", bound.sigma2_expression}};
  } else {
    cert = {{"ratio_numerators", detail::integer_list(bound.ratio_numerators)},
            {"ratio_denominators", detail::integer_list(bound.ratio_denominators)}};
  }
  out["certificate"] = cert;
  const auto check = verify_bound(spec, bound, D);
  json v = {{"passed", check.passed}, {"method", check.method}, {"degree", check.degree}, {"pairs", check.pairs}};
  if (check.min_gap) v["min_gap"] = encode(*check.min_gap);
  if (check.min_gap_squared) v["min_gap_squared"] = encode(*check.min_gap_squared);
  if (check.witness) v["witness"] = {{"exponent", encode(*check.witness)}, {"component", check.witness_target + 1}};
  if (!check.passed)
    v["counterexample"] = {{"exponent", encode(*check.counterexample)},
                           {"component", check.counterexample_target + 1},
                           {"reason", check.counterexample_reason}};
  out["verification"] = v;
  return out;
}

inline json normalization_section(const NormalizationResult& r, const EigenSpec& spec) {
  json degrees = json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"normal_form_terms", d.normal_form_terms},
                       {"solved_terms", d.solved_terms},
                       {"residual_zero", d.residual_zero}});
  return {{"kind", to_string(r.kind)},
          {"order_N", r.order},
          {"diag", [&] {
             json a = json::array();
             for (const auto& x : r.diag) a.push_back(encode(x));
             return a;
           }()},
          {"phi", encode(r.phi)},
          {"g", encode(r.g)},
          {"residual_zero", r.verified},
          {"splitting_ok", splitting_violations(spec, r).empty()},
          {"degrees", degrees},
          {"note", "formal conjugacy through degree N; convergence is only indicated by the growth diagnostic"}};
}

inline json growth_section(const VecSeries& phi) {
  const auto g = growth_diagnostic(phi);
  json rows = json::array();
  for (const auto& row : g.rows)
    rows.push_back({{"degree", row.degree},
                    {"max_magnitude", encode(row.max_magnitude)},
                    {"log_magnitude", detail::fixed(row.log_magnitude)}});
  return {{"rows", rows},
          {"slope", g.slope ? json(detail::fixed(*g.slope)) : json()},
          {"super_geometric", g.super_geometric},
          {"advisory", true}};
}

inline json shape_section(const ShapeResult& s, SystemKind kind) {
  json out = {{"ok", s.ok}};
  if (s.ok) {
    if (kind == SystemKind::Map) {
      out["p"] = detail::series_list(s.p);
    } else {
      out["h"] = encode(s.h);
    }
  } else {
    out["witness"] = {{"component", s.component + 1}, {"exponent", encode(*s.witness)}};
    out["reason"] = s.reason;
  }
  return out;
}

inline json classification_section(const IntegrabilityReport& rep) {
  json out = {{"verdict", to_string(rep.verdict)},
              {"witness", rep.witness},
              {"hypotheses_met", rep.hypotheses_met},
              {"rank", rep.basis.rank},
              {"rank_ok", rep.rank_ok},
              {"functional_ok", rep.functional_ok},
              {"certified_through", {{"degree_D", rep.degree_D}, {"order_N", rep.order_N}}}};
  if (rep.shape) out["shape"] = shape_section(*rep.shape, rep.kind);
  if (!rep.functional_residuals.empty()) {
    bool zero = true;
    for (const auto& r : rep.functional_residuals) zero = zero && r.is_zero();
    out["functional_residuals_zero"] = zero;
  }
  if (rep.reduction) out["reduction"] = {{"iota", rep.reduction->iota + 1}, {"r", detail::rational_list(rep.reduction->r)}};
  return out;
}

inline json certificate_json(const IndependenceCertificate& c) {
  return {{"independent", c.independent}, {"rank", c.rank}, {"trials", c.trials}, {"point", detail::rational_list(c.point)}};
}

// --- commands --------------------------------------------------------------

inline int chosen_D(const SystemFile& s, const RunOptions& o) { return o.degree_D.value_or(s.degree_D); }
inline int chosen_N(const SystemFile& s, const RunOptions& o) { return o.order_N.value_or(s.order_N); }

inline json run_resonance(const SystemFile& sys, const RunOptions& o) {
  const int D = chosen_D(sys, o);
  const auto basis = enumerate_lattice(sys.spec, D);
  return {{"command", "resonance"},
          {"input", detail::input_section(sys, D, chosen_N(sys, o))},
          {"lattice", lattice_section(basis)},
          {"bounds", bounds_section(sys.spec, basis, D)}};
}

inline NormalizationResult normalize_system(const SystemFile& sys, int N) {
  return sys.kind == SystemKind::Map ? normalize_map(sys.map(), N) : normalize_field(sys.field(), N);
}

inline json run_normalize(const SystemFile& sys, const RunOptions& o) {
  const int N = chosen_N(sys, o);
  const auto r = normalize_system(sys, N);
  if (!r.verified) throw InvariantError("normalization residual is not zero: conjugacy check failed");
  return {{"command", "normalize"},
          {"input", detail::input_section(sys, chosen_D(sys, o), N)},
          {"normalization", normalization_section(r, sys.spec)},
          {"diagnostics", {{"growth", growth_section(r.phi)}}}};
}

inline json run_classify(const SystemFile& sys, const RunOptions& o) {
  const int D = chosen_D(sys, o), N = chosen_N(sys, o);
  const auto rep = sys.kind == SystemKind::Map ? classify(sys.map(), D, N) : classify(sys.field(), D, N);
  json out = {{"command", "classify"},
              {"input", detail::input_section(sys, D, N)},
              {"lattice", lattice_section(enumerate_lattice(sys.spec, D))},
              {"classification", classification_section(rep)}};
  if (rep.normalization) {
    out["normalization"] = normalization_section(*rep.normalization, sys.spec);
    out["diagnostics"] = {{"growth", growth_section(rep.normalization->phi)}};
  }
  return out;
}

namespace detail {

inline ScalarSeries integral_residual(const SystemFile& sys, const ScalarSeries& V, int N) {
  return sys.kind == SystemKind::Map ? verify_integral_map(V, sys.map(), N) : verify_integral_field(V, sys.field(), N);
}

/// Integrals found by search (and by pullback when the system has the
/// integrable shape), each with its exact residual check.
inline json integral_entries(const SystemFile& sys, const IntegralSet& set, int N, bool symbolic_linear) {
  json a = json::array();
  for (const auto& v : set.V) {
    json e = {{"series", encode(v)}, {"degree", N}};
    if (symbolic_linear) {
      const auto bad = linear_integral_violations(v, sys.spec);
      e["residual_zero"] = bad.empty();
      e["method"] = "exponent arithmetic";
    } else {
      const auto res = integral_residual(sys, v, N);
      e["residual_zero"] = res.is_zero();
      e["method"] = "exact composition";
      if (!res.is_zero()) e["witness"] = witness(res);
    }
    a.push_back(e);
  }
  return a;
}

}  // namespace detail

inline json run_integrals(const SystemFile& sys, const RunOptions& o) {
  const int D = chosen_D(sys, o), N = chosen_N(sys, o);
  const auto basis = enumerate_lattice(sys.spec, D);
  const bool symbolic = sys.kind == SystemKind::Map && !sys.spec.realized();
  if (symbolic && !sys.f.is_zero())
    throw HypothesisError("integrals of a nonlinear map need realizable eigenvalues (give eigen.base_value)");
  const IntegralSet found = sys.kind == SystemKind::Map ? search_integrals_map(sys.map(), N)
                                                       : search_integrals_field(sys.field(), N);
  json out = {{"command", "integrals"},
              {"input", detail::input_section(sys, D, N)},
              {"lattice", lattice_section(basis)}};
  json sec = {{"search", detail::integral_entries(sys, found, N, symbolic)}, {"search_degree", N}};
  if (!found.empty()) sec["search_independence"] = certificate_json(independence_check(found, o.trials, o.seed));

  if (!basis.generators.empty()) {
    const IntegralSet H = monomial_integrals(basis, N);
    if (symbolic) {
      sec["pullback"] = detail::integral_entries(sys, H, N, true);
    } else {
      const auto r = normalize_system(sys, N);
      const auto pulled = pullback_integrals(H, r.phi, N);
      sec["pullback"] = detail::integral_entries(sys, pulled, N, false);
      sec["pullback_independence"] = certificate_json(independence_check(pulled, o.trials, o.seed));
    }
  }
  out["integrals"] = sec;
  return out;
}

inline json run_embed(const SystemFile& sys, const RunOptions& o) {
  const int D = chosen_D(sys, o), N = chosen_N(sys, o);
  const MapSystem F = sys.map();
  const auto basis = enumerate_lattice(sys.spec, D);
  if (!basis.full_rank())
    throw HypothesisError("embedding needs n-1 integrals; the resonant lattice has rank " + std::to_string(basis.rank));
  // Integrals through N + 1 give the cross product through N.
  const auto r = normalize_map(F, N + 1);
  const auto V = pullback_integrals(monomial_integrals(basis, N + 1), r.phi, N + 1);
  for (std::size_t k = 0; k < V.size(); ++k) {
    const auto res = verify_integral_map(V.V[k], F, N + 1);
    if (!res.is_zero())
      throw HypothesisError("pulled-back integral " + std::to_string(k + 1) + " is not a first integral (" +
                            detail::witness(res) + "); the map is not integrable to this order");
  }
  const auto E = embedding_field(F, V, N);
  const auto obstruction = equivariance_obstruction(F, E.order);
  const auto phi1 = time_one_map(E.X, o.lie_order, E.order);
  const bool time_one_equal = phi1 == F.full(E.order);
  bool tangency_zero = true;
  for (const auto& t : E.tangency) tangency_zero = tangency_zero && t.is_zero();

  json emb = {{"X", encode(E.X)},
              {"order", E.order},
              {"integrals", detail::series_list(V.V)},
              {"det_at_inverse", encode(E.det_at_inverse)},
              {"equivariance_residual_zero", E.equivariant},
              {"tangency_residual_zero", tangency_zero},
              {"jacobian_obstruction_zero", obstruction.is_zero()},
              {"time_one", {{"lie_order", o.lie_order}, {"equals_F", time_one_equal}}}};
  if (!E.equivariant) emb["equivariance_witness"] = detail::witness(E.equivariance_residual);
  json flags = json::array();
  if (!E.equivariant)
    flags.push_back("equivariance-fails: DF.X - X o F is not zero; it equals det DF (det DF o F^-1 - 1) (c o F) "
                    "for the cross product c, so the construction is equivariant only when det DF = 1");
  if (!time_one_equal)
    flags.push_back("time-one-map-differs: the flow of X at time 1 is not F; an orbitwise time rescaling would be "
                    "needed for a literal embedding");
  emb["flags"] = flags;
  return {{"command", "embed"},
          {"input", detail::input_section(sys, D, N)},
          {"lattice", lattice_section(basis)},
          {"embedding", emb}};
}

// --- verification of emitted reports ---------------------------------------

struct VerifyOutcome {
  json report;
  bool ok = true;
};

inline VerifyOutcome verify_report(const json& rep) {
  VerifyOutcome out;
  json checks = json::array();
  auto record = [&](const std::string& name, bool ok, const std::string& why) {
    json c = {{"check", name}, {"ok", ok}};
    if (!ok) c["witness"] = why;
    checks.push_back(c);
    out.ok = out.ok && ok;
  };
  if (!rep.is_object() || !rep.contains("input") || !rep.contains("command"))
    throw ParseError("verify: not a report (missing \"command\" or \"input\")");
  const SystemFile sys = decode_system(rep["input"].at("system"));
  const int D = decode_small_int(rep["input"].at("degree_D"), "input.degree_D", 2, Exponent::kMaxDegree);
  const int N = decode_small_int(rep["input"].at("order_N"), "input.order_N", 2, Exponent::kMaxDegree);
  const int n = sys.n;

  if (rep.contains("lattice")) {
    const int LD = decode_small_int(rep["lattice"].at("degree_D"), "lattice.degree_D", 2, Exponent::kMaxDegree);
    const json fresh = lattice_section(enumerate_lattice(sys.spec, LD));
    record("lattice", fresh == rep["lattice"], "lattice section differs from a recomputation at D = " + std::to_string(LD));
  }
  if (rep.contains("bounds")) {
    const json fresh = bounds_section(sys.spec, enumerate_lattice(sys.spec, D), D);
    record("bounds", fresh == rep["bounds"], "bounds section differs from a recomputation");
  }
  if (rep.contains("normalization")) {
    const json& ns = rep["normalization"];
    const int order = decode_small_int(ns.at("order_N"), "normalization.order_N", 2, Exponent::kMaxDegree);
    NormalizationResult r;
    r.kind = sys.kind;
    r.order = order;
    r.diag = sys.kind == SystemKind::Map ? sys.spec.require_realized() : sys.spec.values();
    r.phi = decode_vector_series(ns.at("phi"), n, order, "normalization.phi");
    r.g = decode_vector_series(ns.at("g"), n, order, "normalization.g");
    const VecSeries res = sys.kind == SystemKind::Map ? verify_conjugacy_map(sys.map(), r)
                                                      : verify_conjugacy_field(sys.field(), r);
    const bool claimed = ns.value("residual_zero", false);
    record("conjugacy", res.is_zero() == claimed,
           claimed ? "conjugacy residual is not zero: " + detail::witness(res) : "report claims a nonzero residual");
    const auto bad = splitting_violations(sys.spec, r);
    record("splitting", bad.empty() == ns.value("splitting_ok", false),
           bad.empty() ? "report claims a splitting violation"
                       : "monomial " + bad.front().second.str() + " in component " +
                             std::to_string(bad.front().first + 1) + " is on the wrong side");
  }
  if (rep.contains("classification")) {
    const json fresh = classification_section(sys.kind == SystemKind::Map ? classify(sys.map(), D, N)
                                                                          : classify(sys.field(), D, N));
    record("classification", fresh == rep["classification"], "classification differs from a recomputation");
  }
  if (rep.contains("integrals")) {
    const json& is = rep["integrals"];
    const bool symbolic = sys.kind == SystemKind::Map && !sys.spec.realized();
    for (const char* key : {"search", "pullback"}) {
      if (!is.contains(key)) continue;
      for (std::size_t k = 0; k < is[key].size(); ++k) {
        const json& e = is[key][k];
        const std::string at = std::string("integrals.") + key + "[" + std::to_string(k) + "]";
        const int d = decode_small_int(e.at("degree"), at + ".degree", 1, Exponent::kMaxDegree);
        const ScalarSeries v = decode_scalar_series(e.at("series"), n, d, at + ".series");
        bool zero;
        std::string why;
        if (symbolic) {
          const auto bad = linear_integral_violations(v, sys.spec);
          zero = bad.empty();
          if (!zero) why = "monomial " + bad.front().str() + " is not resonant";
        } else {
          const auto res = detail::integral_residual(sys, v, d);
          zero = res.is_zero();
          why = detail::witness(res);
        }
        record(at, zero == e.value("residual_zero", false), zero ? "report claims a nonzero residual" : why);
      }
    }
  }
  if (rep.contains("embedding")) {
    const json& es = rep["embedding"];
    const int order = decode_small_int(es.at("order"), "embedding.order", 1, Exponent::kMaxDegree);
    const VecSeries X = decode_vector_series(es.at("X"), n, order, "embedding.X");
    const VecSeries res = verify_equivariance(sys.map(), X, order);
    const bool claimed = es.value("equivariance_residual_zero", false);
    record("equivariance", res.is_zero() == claimed,
           claimed ? "equivariance residual is not zero: " + detail::witness(res)
                   : "report claims a nonzero equivariance residual but it is zero");
    IntegralSet V;
    for (std::size_t k = 0; k < es.at("integrals").size(); ++k)
      V.V.push_back(decode_scalar_series(es["integrals"][k], n, order + 1, "embedding.integrals"));
    bool tangent = true;
    std::string why;
    for (const auto& t : tangency_residuals(V, X))
      if (!t.is_zero() && tangent) {
        tangent = false;
        why = detail::witness(t);
      }
    record("tangency", tangent == es.value("tangency_residual_zero", false),
           tangent ? "report claims a nonzero tangency residual" : "tangency residual is not zero: " + why);
  }
  out.report = {{"command", "verify"}, {"verified_command", rep["command"]}, {"checks", checks}, {"ok", out.ok}};
  return out;
}

// --- text rendering --------------------------------------------------------

namespace detail {

inline std::string rational_text(const json& j) {
  if (j.is_null()) return "n/a";
  const Scalar s = decode_scalar(j, "report");
  return s.str();
}

inline std::string vector_text(const json& terms, int n, int N) {
  if (terms.empty()) return "0";
  const VecSeries v = decode_vector_series(terms, n, N, "report");
  std::ostringstream os;
  for (int j = 0; j < v.size(); ++j) os << "\n    [" << j + 1 << "] " << to_string(v[j]);
  return os.str();
}

}  // namespace detail

inline std::string render_text(const json& rep) {
  std::ostringstream os;
  os << "command: " << rep.value("command", "?") << "\n";
  int n = 0;
  if (rep.contains("input")) {
    const auto& sys = rep["input"]["system"];
    n = sys.value("n", 0);
    os << "system: " << sys.value("kind", "?") << ", n = " << n << ", eigen " << sys["eigen"].value("form", "?")
       << ", D = " << rep["input"].value("degree_D", 0) << ", N = " << rep["input"].value("order_N", 0) << "\n";
  }
  if (rep.contains("lattice")) {
    const auto& l = rep["lattice"];
    os << "lattice: rank " << l.value("rank", 0) << (l.value("full_rank", false) ? " (n-1)" : "") << ", generators";
    for (const auto& g : l["generators"]) os << " " << g.dump();
    os << ", " << l["resonant"].size() << " resonant exponents up to degree " << l.value("degree_D", 0) << "\n";
  }
  if (rep.contains("bounds")) {
    const auto& b = rep["bounds"];
    if (b.value("available", false)) {
      os << "bound: " << b.value("symbol", "") << " = " << b.value("expression", "") << "\n";
      const auto& v = b["verification"];
      os << "  verification (" << v.value("method", "") << ", degree " << v.value("degree", 0)
         << "): " << (v.value("passed", false) ? "passed" : "FAILED");
      if (v.contains("min_gap")) os << ", minimum gap " << detail::rational_text(v["min_gap"]);
      if (v.contains("witness"))
        os << " at " << v["witness"]["exponent"].dump() << ", component " << v["witness"]["component"].dump();
      os << "\n";
    } else {
      os << "bound: not available (" << b.value("reason", "") << ")\n";
    }
  }
  if (rep.contains("normalization")) {
    const auto& ns = rep["normalization"];
    const int N = ns.value("order_N", 2);
    os << "normalization through degree " << N << ": residual " << (ns.value("residual_zero", false) ? "zero" : "NONZERO")
       << ", splitting " << (ns.value("splitting_ok", false) ? "ok" : "VIOLATED") << "\n";
    os << "  phi:" << detail::vector_text(ns["phi"], n, N) << "\n";
    os << "  g:" << detail::vector_text(ns["g"], n, N) << "\n";
  }
  if (rep.contains("classification")) {
    const auto& c = rep["classification"];
    os << "verdict: " << c.value("verdict", "?") << "\n";
    if (!c.value("witness", "").empty()) os << "  witness: " << c.value("witness", "") << "\n";
    if (c.contains("reduction")) {
      os << "  single function: iota = " << c["reduction"].value("iota", 0) << ", r =";
      for (const auto& r : c["reduction"]["r"]) os << " " << detail::rational_text(r);
      os << "\n";
    }
  }
  if (rep.contains("integrals")) {
    const auto& is = rep["integrals"];
    for (const char* key : {"search", "pullback"}) {
      if (!is.contains(key)) continue;
      os << key << " integrals: " << is[key].size() << "\n";
      for (const auto& e : is[key]) {
        const ScalarSeries v = decode_scalar_series(e["series"], n, e.value("degree", 2), "report");
        os << "  " << to_string(v) << "  [" << (e.value("residual_zero", false) ? "verified" : "NOT an integral")
           << "]\n";
      }
    }
  }
  if (rep.contains("embedding")) {
    const auto& es = rep["embedding"];
    const int N = es.value("order", 1);
    os << "embedding field through degree " << N << ":" << detail::vector_text(es["X"], n, N) << "\n";
    os << "  tangency residual " << (es.value("tangency_residual_zero", false) ? "zero" : "NONZERO")
       << ", equivariance residual " << (es.value("equivariance_residual_zero", false) ? "zero" : "NONZERO") << "\n";
    for (const auto& f : es["flags"]) os << "  flag: " << f.get<std::string>() << "\n";
  }
  if (rep.contains("diagnostics")) {
    const auto& g = rep["diagnostics"]["growth"];
    os << "growth: " << g["rows"].size() << " degrees, slope "
       << (g["slope"].is_null() ? std::string("n/a") : g["slope"].get<std::string>())
       << (g.value("super_geometric", false) ? ", super-geometric (advisory)" : "") << "\n";
  }
  if (rep.contains("checks")) {
    for (const auto& c : rep["checks"]) {
      os << (c.value("ok", false) ? "ok    " : "FAIL  ") << c.value("check", "");
      if (c.contains("witness")) os << ": " << c.value("witness", "");
      os << "\n";
    }
    os << (rep.value("ok", false) ? "all checks passed" : "verification FAILED") << "\n";
  }
  return os.str();
}

}  // namespace pdnf::io
