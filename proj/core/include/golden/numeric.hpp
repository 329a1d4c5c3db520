#pragma once

/**
 * @file numeric.hpp
 * @brief Exact and arbitrary-precision scalar types used throughout the library.
 *
 * Integer and Rational are the gmpxx classes. Real is a value-semantic RAII
 * wrapper over an MPFR number whose precision (in bits) travels with the
 * value: the result of a binary operation carries the larger of the operand
 * precisions and every operation rounds to nearest. There is no global
 * precision state, so values can be shared freely between threads.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace golden {

using Integer = mpz_class;
using Rational = mpq_class;

/// Precision of a Real, in bits of mantissa.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

class Real {
 public:
  Real();
  explicit Real(Precision bits);
  Real(long value, Precision bits);
  Real(int value, Precision bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, Precision bits);
  Real(const Integer& value, Precision bits);
  Real(const Rational& value, Precision bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal such as "1.25e-3".
  static Real parse(std::string_view text, Precision bits);

  Precision precision() const noexcept { return mpfr_get_prec(value_); }

  /// Same value correctly rounded to `bits`.
  Real rounded(Precision bits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  /// Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
  long exponent() const noexcept;

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 0) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) { return -(b - a); }
  friend Real operator/(long a, const Real& b) { return Real(a, b.precision()) / b; }
  friend Real operator*(const Real& a, const Integer& b);
  friend Real operator/(const Real& a, const Integer& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
/// x · 2^e exactly.
Real ldexp(const Real& x, long e);

Real pi(Precision bits);
/// 2^-bits, handy as a tolerance at a given precision.
Real epsilon(Precision bits);

/// Complex number over Real. Both parts share the value's precision.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Precision bits) : re(bits), im(bits) {}
  Complex(Real real_part) : re(std::move(real_part)), im(re.precision()) {}  // NOLINT(implicit)
  Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}

  Precision precision() const noexcept { return std::max(re.precision(), im.precision()); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  Complex rounded(Precision bits) const { return {re.rounded(bits), im.rounded(bits)}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

Complex conj(const Complex& z);
/// |z|²
Real norm(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch, Im in (-π, π].
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
Complex polar(const Real& r, const Real& theta);

}  // namespace golden
