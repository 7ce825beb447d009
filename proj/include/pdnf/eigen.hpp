#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdnf/errors.hpp"
#include "pdnf/exponent.hpp"
#include "pdnf/scalar.hpp"

namespace pdnf {

enum class EigenForm {
  Additive,      ///< vector field eigenvalues lambda_i
  MultRational,  ///< map eigenvalues mu_i given directly
  MultBase,      ///< map eigenvalues mu_i = beta^{a_i} exp(2 pi i b_i), beta > 1 formal
};

inline std::string to_string(EigenForm f) {
  switch (f) {
    case EigenForm::Additive: return "additive";
    case EigenForm::MultRational: return "mult-rational";
    case EigenForm::MultBase: return "mult-base";
  }
  return "?";
}

/// Exact description of the diagonal of a linear part.
///
/// In the base form beta is never evaluated by the resonance code. An
/// optional `base_value` (a rational > 1) lets pipelines that need concrete
/// coefficients (normalization, embedding) realize mu_i exactly; this only
/// works when every beta^{a_i} is rational and every phase is a multiple of
/// a quarter turn.
class EigenSpec {
 public:
  static EigenSpec additive(std::vector<Scalar> lambda) {
    EigenSpec s;
    s.form_ = EigenForm::Additive;
    s.values_ = std::move(lambda);
    return s;
  }

  static EigenSpec mult_rational(std::vector<Scalar> mu) {
    for (const auto& m : mu)
      if (m.is_zero()) throw HypothesisError("map eigenvalues must be nonzero");
    EigenSpec s;
    s.form_ = EigenForm::MultRational;
    s.values_ = std::move(mu);
    return s;
  }

  static EigenSpec mult_base(std::vector<Rational> a, std::vector<Rational> b = {},
                             std::optional<Rational> base_value = std::nullopt) {
    if (b.empty()) b.assign(a.size(), Rational(0));
    if (a.size() != b.size()) throw std::invalid_argument("exponent and phase vectors differ in length");
    for (auto& x : b) {
      // Reduce into [0, 1).
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= Rational(fl);
    }
    if (base_value && *base_value <= 1) throw HypothesisError("base value must be greater than 1");
    EigenSpec s;
    s.form_ = EigenForm::MultBase;
    s.exponents_ = std::move(a);
    s.phases_ = std::move(b);
    s.base_value_ = std::move(base_value);
    return s;
  }

  EigenForm form() const { return form_; }
  bool is_multiplicative() const { return form_ != EigenForm::Additive; }
  int size() const {
    return static_cast<int>(form_ == EigenForm::MultBase ? exponents_.size() : values_.size());
  }

  /// lambda (additive) or mu (mult-rational).
  const std::vector<Scalar>& values() const { return values_; }
  const std::vector<Rational>& exponents() const { return exponents_; }
  const std::vector<Rational>& phases() const { return phases_; }
  const std::optional<Rational>& base_value() const { return base_value_; }

  /// Concrete diagonal entries, when they are exactly representable.
  std::optional<std::vector<Scalar>> realized() const {
    if (form_ != EigenForm::MultBase) return values_;
    if (!base_value_) return std::nullopt;
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      const Rational& a = exponents_[i];
      const auto num = a.get_num();
      if (!num.fits_slong_p() || !a.get_den().fits_ulong_p()) return std::nullopt;
      auto modulus = exact_root(rational_pow(*base_value_, num.get_si()), a.get_den().get_ui());
      if (!modulus) return std::nullopt;
      const Rational four_b = phases_[i] * 4;
      if (four_b.get_den() != 1) return std::nullopt;
      static const Scalar quarter_turns[4] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
      out.push_back(Scalar(*modulus) * quarter_turns[four_b.get_num().get_si()]);
    }
    return out;
  }

  /// Like realized(), but throws a HypothesisError naming the obstacle.
  std::vector<Scalar> require_realized() const {
    auto r = realized();
    if (!r) {
      throw HypothesisError(
          "eigenvalues beta^a exp(2 pi i b) are not exactly representable; supply a rational "
          "base_value with rational beta^a_i and quarter-turn phases");
    }
    return *r;
  }

  std::string str() const {
    std::string s = to_string(form_) + " (";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ", ";
      if (form_ == EigenForm::MultBase) {
        s += "beta^" + to_string(exponents_[i]);
        if (!is_zero(phases_[i])) s += "*e^(2pi i " + to_string(phases_[i]) + ")";
      } else {
        s += values_[i].str();
      }
    }
    s += ")";
    if (base_value_) s += " with beta = " + to_string(*base_value_);
    return s;
  }

 private:
  EigenForm form_ = EigenForm::Additive;
  std::vector<Scalar> values_;
  std::vector<Rational> exponents_;
  std::vector<Rational> phases_;
  std::optional<Rational> base_value_;
};

/// Index of a target eigenvalue, or none for first-integral resonance.
using Target = std::optional<int>;

namespace detail {

inline void check_exponent_size(const EigenSpec& spec, const Exponent& m, Target j) {
  if (m.size() != spec.size()) throw std::invalid_argument("exponent dimension does not match eigenvalue count");
  if (j && (*j < 0 || *j >= spec.size())) throw std::out_of_range("eigenvalue index out of range");
}

}  // namespace detail

/// mu^m for the mult-rational form.
inline Scalar mult_power(const EigenSpec& spec, const Exponent& m) {
  Scalar r(1);
  for (int i = 0; i < m.size(); ++i)
    if (m[i] > 0) r *= spec.values()[i].pow(m[i]);
  return r;
}

/// mu^m = mu_j (or mu^m = 1 when j is none), decided exactly.
inline bool is_resonant_map(const EigenSpec& spec, const Exponent& m, Target j) {
  if (!spec.is_multiplicative()) throw std::invalid_argument("is_resonant_map needs a multiplicative spectrum");
  detail::check_exponent_size(spec, m, j);
  if (spec.form() == EigenForm::MultRational) return mult_power(spec, m) == (j ? spec.values()[*j] : Scalar(1));
  Rational modulus(0), phase(0);
  for (int i = 0; i < m.size(); ++i) {
    modulus += spec.exponents()[i] * m[i];
    phase += spec.phases()[i] * m[i];
  }
  if (j) {
    modulus -= spec.exponents()[*j];
    phase -= spec.phases()[*j];
  }
  return is_zero(modulus) && phase.get_den() == 1;
}

/// <m, lambda> = lambda_j (or = 0 when j is none).
inline bool is_resonant_field(const EigenSpec& spec, const Exponent& m, Target j) {
  if (spec.form() != EigenForm::Additive) throw std::invalid_argument("is_resonant_field needs an additive spectrum");
  detail::check_exponent_size(spec, m, j);
  Scalar s(0);
  for (int i = 0; i < m.size(); ++i)
    if (m[i] > 0) s += spec.values()[i] * Scalar(m[i]);
  return s == (j ? spec.values()[*j] : Scalar(0));
}

inline bool is_resonant(const EigenSpec& spec, const Exponent& m, Target j) {
  return spec.is_multiplicative() ? is_resonant_map(spec, m, j) : is_resonant_field(spec, m, j);
}

/// The homological divisor for the monomial y^m e_j: mu^m - mu_j for maps
/// (using realized eigenvalues) or <m, lambda> - lambda_j for fields.
inline Scalar homological_divisor(const EigenSpec& spec, const std::vector<Scalar>& diag, const Exponent& m, Target j) {
  Scalar s(spec.is_multiplicative() ? 1 : 0);
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (spec.is_multiplicative()) {
      s *= diag[i].pow(m[i]);
    } else {
      s += diag[i] * Scalar(m[i]);
    }
  }
  if (j) {
    s -= diag[*j];
  } else if (spec.is_multiplicative()) {
    s -= Scalar(1);
  }
  return s;
}

}  // namespace pdnf
