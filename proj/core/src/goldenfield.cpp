#include "golden/goldenfield.hpp"

#include <ostream>

#include "golden/errors.hpp"

namespace golden {

QuadraticNumber::QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int QuadraticNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare |a| with |b|√5 through their squares.
  const int c = cmp(a_ * a_, 5 * b_ * b_);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  Rational a = a_ * rhs.a_ + 5 * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "division by zero in Q(sqrt5)");
  // x / y = x · conj(y) / N(y); N(y) ≠ 0 because √5 is irrational.
  const Rational n = rhs.field_norm();
  *this *= conjugate(rhs);
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string QuadraticNumber::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += '+';
  }
  return out + b_.get_str() + "*sqrt5";
}

QuadraticNumber QuadraticNumber::parse(const std::string& text) {
  try {
    const std::string suffix = "*sqrt5";
    if (text.size() < suffix.size() || text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0) {
      return QuadraticNumber(Rational(text));
    }
    const std::string body = text.substr(0, text.size() - suffix.size());
    const auto split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0) return {Rational(0), Rational(body)};
    std::string b_part = body.substr(split);
    if (b_part.front() == '+') b_part.erase(0, 1);
    return {Rational(body.substr(0, split)), Rational(b_part)};
  } catch (const std::invalid_argument&) {
    throw DomainError(ErrorCode::InvalidArgument, "not an element of Q(sqrt5): '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.to_string(); }

QuadraticNumber phi() { return {Rational(1, 2), Rational(1, 2)}; }
QuadraticNumber phi_conj() { return {Rational(1, 2), Rational(-1, 2)}; }

QuadraticNumber field_ops(const QuadraticNumber& x, const QuadraticNumber& y, FieldOp op) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::div: return x / y;
  }
  throw DomainError(ErrorCode::InvalidArgument, "unknown field operation");
}

QuadraticNumber power(const QuadraticNumber& x, long n) {
  if (n < 0) {
    if (x.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "zero to a negative power");
    return QuadraticNumber(1) / power(x, -n);
  }
  QuadraticNumber result(1);
  QuadraticNumber base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

QuadraticNumber conjugate(const QuadraticNumber& x) { return {x.a(), -x.b()}; }

QuadraticNumber abs(const QuadraticNumber& x) { return x.sign() < 0 ? -x : x; }

Real to_real(const QuadraticNumber& x, Precision precision_bits) {
  if (precision_bits < 32) {
    throw DomainError(ErrorCode::InvalidArgument, "to_real needs at least 32 bits of precision");
  }
  const Precision work = precision_bits + 64;
  Real value = Real(x.a(), work) + Real(x.b(), work) * sqrt(Real(5L, work));
  return value.rounded(precision_bits);
}

// -- ComplexQuadratic -------------------------------------------------------

ComplexQuadratic& ComplexQuadratic::operator+=(const ComplexQuadratic& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

ComplexQuadratic& ComplexQuadratic::operator-=(const ComplexQuadratic& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

ComplexQuadratic& ComplexQuadratic::operator*=(const ComplexQuadratic& rhs) {
  if (im.is_zero() && rhs.im.is_zero()) {
    re *= rhs.re;
    return *this;
  }
  QuadraticNumber r = re * rhs.re - im * rhs.im;
  QuadraticNumber i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexQuadratic& ComplexQuadratic::operator/=(const ComplexQuadratic& rhs) {
  // re² + im² vanishes only at zero since Q(√5) is a real field.
  const QuadraticNumber d = rhs.re * rhs.re + rhs.im * rhs.im;
  if (d.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "division by zero in Q(sqrt5)(i)");
  *this *= conj(rhs);
  re /= d;
  im /= d;
  return *this;
}

std::string ComplexQuadratic::to_string() const {
  if (im.is_zero()) return re.to_string();
  return "(" + re.to_string() + ")+i*(" + im.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const ComplexQuadratic& z) { return os << z.to_string(); }

ComplexQuadratic conj(const ComplexQuadratic& z) { return {z.re, -z.im}; }

ComplexQuadratic power(const ComplexQuadratic& z, long n) {
  if (n < 0) return ComplexQuadratic(1) / power(z, -n);
  ComplexQuadratic result(1);
  ComplexQuadratic base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex to_complex(const ComplexQuadratic& z, Precision precision_bits) {
  return {to_real(z.re, precision_bits), to_real(z.im, precision_bits)};
}

}  // namespace golden
