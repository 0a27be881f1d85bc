#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace shakekit {

using BigInt = mpz_class;
static_assert(sizeof(long) == sizeof(long long), "BigInt conversions assume LP64");

/// A point on the unit circle, either an exact root of unity
/// exp(2*pi*i*k/m) or a floating angle in radians.
class UnitCirclePoint {
 public:
  struct Rational {
    std::int64_t k;
    std::int64_t m;
    bool operator==(const Rational&) const = default;
  };
  struct Angle {
    double theta;
    bool operator==(const Angle&) const = default;
  };

  /// Reduces k/m to lowest terms with 0 <= k < m. Throws DomainError for m < 1.
  static UnitCirclePoint root(std::int64_t k, std::int64_t m);
  static UnitCirclePoint angle(double theta);
  /// Parses "k/m".
  static UnitCirclePoint parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<Rational>(rep_); }
  const Rational& rational() const { return std::get<Rational>(rep_); }
  double theta() const;
  /// Real part, exact for the quarter-turn points.
  double re() const;
  std::complex<double> value() const;
  bool is_one() const;
  /// Multiplicative order for roots of unity, 0 for floating angles.
  std::int64_t order() const;
  std::string to_string() const;

  bool operator==(const UnitCirclePoint&) const = default;

 private:
  explicit UnitCirclePoint(std::variant<Rational, Angle> rep) : rep_(rep) {}
  std::variant<Rational, Angle> rep_;
};

/// Integer Laurent polynomial in one variable t. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const BigInt& c);  // NOLINT
  static LaurentPoly monomial(const BigInt& c, Exponent e);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_terms(const Terms& terms);
  /// Parses "a*t^k" terms joined by + and - (ASCII or U+2212).
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(Exponent e) const;
  Exponent min_exp() const;
  Exponent max_exp() const;
  bool is_symmetric() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Multiplies by t^k.
  LaurentPoly shifted(Exponent k) const;
  /// Exact quotient; throws DomainError if `divisor` does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  /// Value at a real or complex t (t != 0).
  std::complex<double> eval(std::complex<double> z) const;
  BigInt eval_at_one() const;
  /// a0 + sum_k a_k * 2*T_k(x) for a symmetric polynomial, x = Re(t).
  /// Only meaningful for symmetric polynomials; the caller checks.
  double eval_symmetric_real(double x) const;
  /// Sum of absolute values of the coefficients; bounds |p| on the circle.
  double l1_norm() const;

  std::string to_string() const;

 private:
  void add_term(Exponent e, const BigInt& c);
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
bool lp_is_symmetric(const LaurentPoly& p);
/// Symmetric inputs go through the real Chebyshev path and return an exactly
/// real result; anything else is evaluated directly in complex arithmetic.
std::complex<double> lp_eval_unit(const LaurentPoly& p, const UnitCirclePoint& z);

}  // namespace shakekit
