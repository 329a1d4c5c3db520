#pragma once

/**
 * @file goldenfield.hpp
 * @brief Exact arithmetic in Q(√5) and its complexification Q(√5)(i).
 *
 * Every golden-ratio quantity (φ, φ′ = 1 − φ = −1/φ and their integer
 * powers) is held symbolically as a + b√5 with rational a, b, so that
 * identities between them are checked by structural equality.
 */

#include <iosfwd>
#include <string>

#include "golden/numeric.hpp"

namespace golden {

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long a) : a_(a) {}  // NOLINT(implicit)
  QuadraticNumber(Integer a) : a_(std::move(a)) {}  // NOLINT(implicit)
  QuadraticNumber(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT(implicit)
  QuadraticNumber(Rational a, Rational b);

  static QuadraticNumber sqrt5() { return {Rational(0), Rational(1)}; }

  /// Rational part.
  const Rational& a() const noexcept { return a_; }
  /// Coefficient of √5.
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }
  /// Exact sign of a + b√5 as a real number.
  int sign() const;

  /// a² − 5b²
  Rational field_norm() const { return a_ * a_ - 5 * b_ * b_; }

  QuadraticNumber operator-() const { return {-a_, -b_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "a", "b*sqrt5" or "a+b*sqrt5" with exact rational components.
  std::string to_string() const;
  /// Inverse of to_string.
  static QuadraticNumber parse(const std::string& text);

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

/// φ = (1 + √5)/2
QuadraticNumber phi();
/// φ′ = (1 − √5)/2
QuadraticNumber phi_conj();

enum class FieldOp { add, sub, mul, div };
QuadraticNumber field_ops(const QuadraticNumber& x, const QuadraticNumber& y, FieldOp op);

/// x^n for any integer n; DivisionByZero for 0 to a negative power.
QuadraticNumber power(const QuadraticNumber& x, long n);
/// a + b√5 ↦ a − b√5
QuadraticNumber conjugate(const QuadraticNumber& x);
QuadraticNumber abs(const QuadraticNumber& x);

/// a + b√5 rounded to `precision_bits`; requires precision_bits ≥ 32.
Real to_real(const QuadraticNumber& x, Precision precision_bits);

/// re + i·im with both parts in Q(√5).
struct ComplexQuadratic {
  QuadraticNumber re;
  QuadraticNumber im;

  ComplexQuadratic() = default;
  ComplexQuadratic(QuadraticNumber r) : re(std::move(r)) {}  // NOLINT(implicit)
  ComplexQuadratic(long r) : re(r) {}  // NOLINT(implicit)
  ComplexQuadratic(QuadraticNumber r, QuadraticNumber i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexQuadratic i() { return {QuadraticNumber(0), QuadraticNumber(1)}; }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  ComplexQuadratic operator-() const { return {-re, -im}; }
  ComplexQuadratic& operator+=(const ComplexQuadratic& rhs);
  ComplexQuadratic& operator-=(const ComplexQuadratic& rhs);
  ComplexQuadratic& operator*=(const ComplexQuadratic& rhs);
  ComplexQuadratic& operator/=(const ComplexQuadratic& rhs);

  friend ComplexQuadratic operator+(ComplexQuadratic x, const ComplexQuadratic& y) { return x += y; }
  friend ComplexQuadratic operator-(ComplexQuadratic x, const ComplexQuadratic& y) { return x -= y; }
  friend ComplexQuadratic operator*(ComplexQuadratic x, const ComplexQuadratic& y) { return x *= y; }
  friend ComplexQuadratic operator/(ComplexQuadratic x, const ComplexQuadratic& y) { return x /= y; }
  friend bool operator==(const ComplexQuadratic& x, const ComplexQuadratic& y) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const ComplexQuadratic& z);

ComplexQuadratic conj(const ComplexQuadratic& z);
ComplexQuadratic power(const ComplexQuadratic& z, long n);
Complex to_complex(const ComplexQuadratic& z, Precision precision_bits);

}  // namespace golden
