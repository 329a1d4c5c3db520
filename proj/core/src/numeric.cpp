#include "golden/numeric.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "golden/errors.hpp"

namespace golden {

namespace {

Precision max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <class Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real::Real() : Real(kDefaultPrecision) {}

Real::Real(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, Precision bits) {
  Real out(bits);
  std::string buffer(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (buffer.empty() || end == nullptr || *end != '\0') {
    throw DomainError(ErrorCode::InvalidArgument, "not a decimal number: '" + buffer + "'");
  }
  return out;
}

Real Real::rounded(Precision bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long Real::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return -(1L << 40);
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) {
    // Enough digits to round-trip at this precision.
    digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
  }
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, long b) {
  Real out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, long b) {
  Real out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Integer& b) {
  Real out(a.precision());
  mpfr_mul_z(out.value_, a.value_, b.get_mpz_t(), MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Integer& b) {
  Real out(a.precision());
  mpfr_div_z(out.value_, a.value_, b.get_mpz_t(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real atan2(const Real& y, const Real& x) {
  Real out(max_prec(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(max_prec(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real pow(const Real& x, const Real& y) {
  Real out(max_prec(x, y));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real ldexp(const Real& x, long e) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

Real pi(Precision bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real epsilon(Precision bits) { return ldexp(Real(1L, bits), -static_cast<long>(bits)); }

// -- Complex ----------------------------------------------------------------

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  Real i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real d = norm(rhs);
  if (d.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "complex division by zero");
  Real r = (re * rhs.re + im * rhs.im) / d;
  Real i = (im * rhs.re - re * rhs.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  const Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError(ErrorCode::PoleHit, "logarithm of zero");
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  return polar(sqrt(abs(z)), arg(z) / 2L);
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L, z.precision())) / pow(z, -n);
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

}  // namespace golden
