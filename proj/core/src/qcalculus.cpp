#include "golden/qcalculus.hpp"

#include <string>
#include <utility>

#include "golden/errors.hpp"
#include "golden/sequences.hpp"

namespace golden {

namespace {

// Extra bits for the numerical difference quotient; the subtraction loses
// roughly log2|f / (x f')| bits and this covers moderate cases.
constexpr Precision kDerivativeGuardBits = 64;

std::size_t as_index(long n) { return static_cast<std::size_t>(n); }

ComplexQuadratic as_cq(const Integer& v) { return ComplexQuadratic(QuadraticNumber(v)); }

void require_nonnegative_degree(long n) {
  if (n < 0) throw DomainError(ErrorCode::NegativeIndex, "power must be nonnegative, got " + std::to_string(n));
}

// φ^{k(n-1-j)} φ′^{kj}
QuadraticNumber ladder_factor(long k, long n, long j) {
  return power(phi(), k * (n - 1 - j)) * power(phi_conj(), k * j);
}

}  // namespace

// -- GoldenPolynomial -------------------------------------------------------

GoldenPolynomial::GoldenPolynomial(std::vector<ComplexQuadratic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GoldenPolynomial GoldenPolynomial::constant(ComplexQuadratic c) { return GoldenPolynomial({std::move(c)}); }

GoldenPolynomial GoldenPolynomial::monomial(long n, ComplexQuadratic c) {
  require_nonnegative_degree(n);
  std::vector<ComplexQuadratic> coeffs(as_index(n) + 1);
  coeffs.back() = std::move(c);
  return GoldenPolynomial(std::move(coeffs));
}

void GoldenPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long GoldenPolynomial::degree() const noexcept {
  return coeffs_.empty() ? 0 : static_cast<long>(coeffs_.size()) - 1;
}

ComplexQuadratic GoldenPolynomial::coeff(long n) const {
  if (n < 0 || as_index(n) >= coeffs_.size()) return {};
  return coeffs_[as_index(n)];
}

ComplexQuadratic GoldenPolynomial::evaluate(const ComplexQuadratic& x) const {
  ComplexQuadratic acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex GoldenPolynomial::evaluate(const Complex& x, Precision precision_bits) const {
  Complex acc(precision_bits);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_complex(*it, precision_bits);
  return acc.rounded(precision_bits);
}

GoldenPolynomial GoldenPolynomial::scaled(const ComplexQuadratic& c) const {
  std::vector<ComplexQuadratic> out = coeffs_;
  ComplexQuadratic scale(1);
  for (auto& a : out) {
    a *= scale;
    scale *= c;
  }
  return GoldenPolynomial(std::move(out));
}

GoldenPolynomial GoldenPolynomial::operator-() const {
  GoldenPolynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

GoldenPolynomial& GoldenPolynomial::operator+=(const GoldenPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

GoldenPolynomial& GoldenPolynomial::operator-=(const GoldenPolynomial& rhs) { return *this += -rhs; }

GoldenPolynomial& GoldenPolynomial::operator*=(const GoldenPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ComplexQuadratic> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

GoldenPolynomial& GoldenPolynomial::operator*=(const ComplexQuadratic& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string GoldenPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

// -- BivariatePolynomial ----------------------------------------------------

BivariatePolynomial BivariatePolynomial::term(long i, long j, ComplexQuadratic c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::from_x(const GoldenPolynomial& p) {
  BivariatePolynomial out;
  for (long i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
  return out;
}

void BivariatePolynomial::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

bool BivariatePolynomial::is_zero() const { return rows_.empty(); }

long BivariatePolynomial::degree_x() const { return rows_.empty() ? 0 : static_cast<long>(rows_.size()) - 1; }

long BivariatePolynomial::degree_y() const {
  std::size_t d = 0;
  for (const auto& row : rows_) d = std::max(d, row.size());
  return d == 0 ? 0 : static_cast<long>(d) - 1;
}

ComplexQuadratic BivariatePolynomial::coeff(long i, long j) const {
  if (i < 0 || j < 0 || as_index(i) >= rows_.size()) return {};
  const auto& row = rows_[as_index(i)];
  return as_index(j) < row.size() ? row[as_index(j)] : ComplexQuadratic{};
}

void BivariatePolynomial::add_term(long i, long j, const ComplexQuadratic& c) {
  require_nonnegative_degree(i);
  require_nonnegative_degree(j);
  if (c.is_zero()) return;
  if (rows_.size() <= as_index(i)) rows_.resize(as_index(i) + 1);
  auto& row = rows_[as_index(i)];
  if (row.size() <= as_index(j)) row.resize(as_index(j) + 1);
  row[as_index(j)] += c;
  trim();
}

ComplexQuadratic BivariatePolynomial::evaluate(const ComplexQuadratic& x, const ComplexQuadratic& y) const {
  ComplexQuadratic acc;
  for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
    ComplexQuadratic inner;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y + *it;
    acc = acc * x + inner;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::real_part() const {
  BivariatePolynomial out = *this;
  for (auto& row : out.rows_) {
    for (auto& c : row) c = ComplexQuadratic(c.re);
  }
  out.trim();
  return out;
}

BivariatePolynomial BivariatePolynomial::imag_part() const {
  BivariatePolynomial out = *this;
  for (auto& row : out.rows_) {
    for (auto& c : row) c = ComplexQuadratic(c.im);
  }
  out.trim();
  return out;
}

BivariatePolynomial BivariatePolynomial::scaled_y(const ComplexQuadratic& c) const {
  BivariatePolynomial out = *this;
  for (auto& row : out.rows_) {
    ComplexQuadratic scale(1);
    for (auto& a : row) {
      a *= scale;
      scale *= c;
    }
  }
  out.trim();
  return out;
}

GoldenPolynomial BivariatePolynomial::at_y_zero() const {
  std::vector<ComplexQuadratic> out;
  for (const auto& row : rows_) out.push_back(row.empty() ? ComplexQuadratic{} : row.front());
  return GoldenPolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out = *this;
  for (auto& row : out.rows_) {
    for (auto& c : row) c = -c;
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (std::size_t i = 0; i < rhs.rows_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.rows_[i].size(); ++j) {
      if (rhs.rows_[i][j].is_zero()) continue;
      if (rows_.size() <= i) rows_.resize(i + 1);
      if (rows_[i].size() <= j) rows_[i].resize(j + 1);
      rows_[i][j] += rhs.rows_[i][j];
    }
  }
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) { return *this += -rhs; }

BivariatePolynomial& BivariatePolynomial::operator*=(const ComplexQuadratic& c) {
  for (auto& row : rows_) {
    for (auto& a : row) a *= c;
  }
  trim();
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    for (std::size_t j = 0; j < a.rows_[i].size(); ++j) {
      if (a.rows_[i][j].is_zero()) continue;
      for (std::size_t p = 0; p < b.rows_.size(); ++p) {
        for (std::size_t q = 0; q < b.rows_[p].size(); ++q) {
          if (b.rows_[p][q].is_zero()) continue;
          const auto r = i + p;
          const auto s = j + q;
          if (out.rows_.size() <= r) out.rows_.resize(r + 1);
          if (out.rows_[r].size() <= s) out.rows_[r].resize(s + 1);
          out.rows_[r][s] += a.rows_[i][j] * b.rows_[p][q];
        }
      }
    }
  }
  out.trim();
  return out;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.rows_ == b.rows_; }

// -- Golden derivative ------------------------------------------------------

NumericFunction log_periodic_sine(long m) {
  require_nonzero_order(m);
  return {[m](const Complex& x, Precision bits) {
            const Precision work = bits + 32;
            const Real period = Real(m, work) * log(to_real(phi(), work));
            return Complex(sin(pi(work) * log(abs(x.rounded(work))) / period).rounded(bits));
          },
          "sin(pi*ln|x|/ln(phi^" + std::to_string(m) + "))"};
}

NumericFunction exponential_function() {
  return {[](const Complex& x, Precision bits) { return exp(x.rounded(bits + 16)).rounded(bits); }, "exp(x)"};
}

GoldenPolynomial golden_derivative_poly(long k, const GoldenPolynomial& p) {
  require_nonzero_order(k);
  if (p.degree() == 0) return {};
  const auto f = fib_divisor_sequence(k, p.degree());
  std::vector<ComplexQuadratic> out(as_index(p.degree()));
  for (long n = 1; n <= p.degree(); ++n) out[as_index(n - 1)] = p.coeff(n) * as_cq(f[as_index(n)]);
  return GoldenPolynomial(std::move(out));
}

BivariatePolynomial golden_derivative_x(long k, const BivariatePolynomial& p) {
  require_nonzero_order(k);
  BivariatePolynomial out;
  const auto f = fib_divisor_sequence(k, std::max(1L, p.degree_x()));
  for (long i = 1; i <= p.degree_x(); ++i) {
    for (long j = 0; j <= p.degree_y(); ++j) out.add_term(i - 1, j, p.coeff(i, j) * as_cq(f[as_index(i)]));
  }
  return out;
}

BivariatePolynomial golden_derivative_y(long k, const BivariatePolynomial& p) {
  require_nonzero_order(k);
  BivariatePolynomial out;
  const auto f = fib_divisor_sequence(k, std::max(1L, p.degree_y()));
  for (long i = 0; i <= p.degree_x(); ++i) {
    for (long j = 1; j <= p.degree_y(); ++j) out.add_term(i, j - 1, p.coeff(i, j) * as_cq(f[as_index(j)]));
  }
  return out;
}

Complex golden_derivative_fn(long k, const NumericFunction& f, const Complex& x, Precision precision_bits) {
  require_nonzero_order(k);
  if (x.is_zero()) {
    throw DomainError(ErrorCode::EvaluationAtZero, "the Golden derivative is undefined at x = 0");
  }
  const Precision work = precision_bits + kDerivativeGuardBits;
  const Real qk = to_real(power(phi(), k), work);
  const Real qck = to_real(power(phi_conj(), k), work);
  const Complex xw = x.rounded(work);
  const Complex num = f.evaluate(xw * qk, work) - f.evaluate(xw * qck, work);
  return (num / (xw * (qk - qck))).rounded(precision_bits);
}

// -- Golden binomials -------------------------------------------------------

int binomial_twist_sign(long k, long m) {
  // k·m(m-1)/2 is odd only when k is odd and m ≡ 2, 3 (mod 4).
  const long pairs = (m * (m - 1) / 2) % 2;
  return (k % 2 != 0 && pairs != 0) ? -1 : 1;
}

GoldenPolynomial golden_binomial(long k, long n, const ComplexQuadratic& a, BinomialSign sign) {
  require_nonzero_order(k);
  require_nonnegative_degree(n);
  const ComplexQuadratic s = sign == BinomialSign::plus ? a : -a;
  GoldenPolynomial out = GoldenPolynomial::constant(1);
  for (long j = 0; j < n; ++j) {
    out *= GoldenPolynomial({s * ComplexQuadratic(ladder_factor(k, n, j)), ComplexQuadratic(1)});
  }
  return out;
}

GoldenPolynomial golden_binomial_expansion(long k, long n, const ComplexQuadratic& a, BinomialSign sign) {
  require_nonzero_order(k);
  require_nonnegative_degree(n);
  const ComplexQuadratic s = sign == BinomialSign::plus ? a : -a;
  const auto row = fibonomial_row(n, k);
  std::vector<ComplexQuadratic> coeffs(as_index(n) + 1);
  ComplexQuadratic s_power(1);
  for (long m = 0; m <= n; ++m) {
    coeffs[as_index(n - m)] = as_cq(row[as_index(m)]) * s_power * ComplexQuadratic(binomial_twist_sign(k, m));
    s_power *= s;
  }
  return GoldenPolynomial(std::move(coeffs));
}

BivariatePolynomial golden_binomial_xy(long k, long n, BinomialSign sign) {
  require_nonzero_order(k);
  require_nonnegative_degree(n);
  const long s = sign == BinomialSign::plus ? 1 : -1;
  BivariatePolynomial out = BivariatePolynomial::term(0, 0, 1);
  for (long j = 0; j < n; ++j) {
    BivariatePolynomial factor = BivariatePolynomial::term(1, 0, 1);
    factor.add_term(0, 1, ComplexQuadratic(ladder_factor(k, n, j) * QuadraticNumber(s)));
    out = out * factor;
  }
  return out;
}

// -- Taylor expansion and translation ----------------------------------------

std::vector<ComplexQuadratic> golden_taylor(long k, const GoldenPolynomial& p) {
  require_nonzero_order(k);
  std::vector<ComplexQuadratic> out;
  GoldenPolynomial d = p;
  for (long n = 0; n <= p.degree(); ++n) {
    out.push_back(d.coeff(0));
    d = golden_derivative_poly(k, d);
  }
  return out;
}

GoldenPolynomial taylor_resum(long k, const std::vector<ComplexQuadratic>& coefficients) {
  require_nonzero_order(k);
  std::vector<ComplexQuadratic> out;
  out.reserve(coefficients.size());
  Integer factorial = 1;
  const auto f = fib_divisor_sequence(k, std::max<long>(1, static_cast<long>(coefficients.size())));
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (n > 0) factorial *= f[n];
    out.push_back(coefficients[n] / as_cq(factorial));
  }
  return GoldenPolynomial(std::move(out));
}

GoldenPolynomial golden_translate(long k, const GoldenPolynomial& p, const ComplexQuadratic& y) {
  require_nonzero_order(k);
  const auto f = fib_divisor_sequence(k, std::max(1L, p.degree()));
  GoldenPolynomial out;
  GoldenPolynomial d = p;
  ComplexQuadratic y_power(1);
  Integer factorial = 1;
  for (long m = 0; m <= p.degree() && !d.is_zero(); ++m) {
    if (m > 0) factorial *= f[as_index(m)];
    const ComplexQuadratic w = y_power * ComplexQuadratic(binomial_twist_sign(k, m)) / as_cq(factorial);
    out += d * w;
    d = golden_derivative_poly(k, d);
    y_power *= y;
  }
  return out;
}

}  // namespace golden
