#pragma once

/**
 * @file qcalculus.hpp
 * @brief The k-th Golden derivative
 *
 *     D_k f(x) = (f(φ^k x) − f(φ′^k x)) / ((φ^k − φ′^k) x),
 *
 * acting exactly on polynomials over Q(√5)(i) and numerically on black-box
 * functions, together with Golden binomials, the Golden Taylor expansion
 * and the translation operator built from them.
 *
 * On monomials D_k x^n = F_n^(k) x^{n-1}, so every statement about
 * polynomials below is exact.
 */

#include <functional>
#include <string>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"

namespace golden {

/// Univariate polynomial with coefficients in Q(√5)(i), lowest degree first.
/// The zero polynomial has no stored coefficients and reports degree 0.
class GoldenPolynomial {
 public:
  GoldenPolynomial() = default;
  explicit GoldenPolynomial(std::vector<ComplexQuadratic> coeffs);

  static GoldenPolynomial constant(ComplexQuadratic c);
  static GoldenPolynomial monomial(long n, ComplexQuadratic c = ComplexQuadratic(1));

  long degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<ComplexQuadratic>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^n; zero beyond the degree.
  ComplexQuadratic coeff(long n) const;

  ComplexQuadratic evaluate(const ComplexQuadratic& x) const;
  Complex evaluate(const Complex& x, Precision precision_bits) const;
  /// p(c·x)
  GoldenPolynomial scaled(const ComplexQuadratic& c) const;

  GoldenPolynomial operator-() const;
  GoldenPolynomial& operator+=(const GoldenPolynomial& rhs);
  GoldenPolynomial& operator-=(const GoldenPolynomial& rhs);
  GoldenPolynomial& operator*=(const GoldenPolynomial& rhs);
  GoldenPolynomial& operator*=(const ComplexQuadratic& c);

  friend GoldenPolynomial operator+(GoldenPolynomial a, const GoldenPolynomial& b) { return a += b; }
  friend GoldenPolynomial operator-(GoldenPolynomial a, const GoldenPolynomial& b) { return a -= b; }
  friend GoldenPolynomial operator*(GoldenPolynomial a, const GoldenPolynomial& b) { return a *= b; }
  friend GoldenPolynomial operator*(GoldenPolynomial a, const ComplexQuadratic& c) { return a *= c; }
  friend GoldenPolynomial operator*(const ComplexQuadratic& c, GoldenPolynomial a) { return a *= c; }
  friend bool operator==(const GoldenPolynomial& a, const GoldenPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<ComplexQuadratic> coeffs_;
};

/// Polynomial in two commuting variables x, y; coefficient (i, j) multiplies x^i y^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;

  static BivariatePolynomial term(long i, long j, ComplexQuadratic c);
  /// Lifts p(x) to a polynomial in x alone.
  static BivariatePolynomial from_x(const GoldenPolynomial& p);

  bool is_zero() const;
  long degree_x() const;
  long degree_y() const;
  ComplexQuadratic coeff(long i, long j) const;
  void add_term(long i, long j, const ComplexQuadratic& c);

  ComplexQuadratic evaluate(const ComplexQuadratic& x, const ComplexQuadratic& y) const;
  /// Coefficient-wise real / imaginary parts; these are Re f and Im f when x, y are real.
  BivariatePolynomial real_part() const;
  BivariatePolynomial imag_part() const;
  /// f(x, c·y)
  BivariatePolynomial scaled_y(const ComplexQuadratic& c) const;
  /// The coefficient of y^0, as a polynomial in x.
  GoldenPolynomial at_y_zero() const;

  BivariatePolynomial operator-() const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const ComplexQuadratic& c);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const ComplexQuadratic& c) { return a *= c; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);

 private:
  void trim();
  // rows_[i][j] multiplies x^i y^j
  std::vector<std::vector<ComplexQuadratic>> rows_;
};

/// Black-box function of one complex variable evaluated at a given precision.
struct NumericFunction {
  std::function<Complex(const Complex&, Precision)> evaluate;
  std::string label;
};

/// sin(π ln|x| / ln φ^m): periodic for the m-th Golden derivative and every multiple of m.
NumericFunction log_periodic_sine(long m);
NumericFunction exponential_function();

/// x^n ↦ F_n^(k) x^{n-1}, exact.
GoldenPolynomial golden_derivative_poly(long k, const GoldenPolynomial& p);
/// ∂/∂x with order k acting on the x-powers only.
BivariatePolynomial golden_derivative_x(long k, const BivariatePolynomial& p);
BivariatePolynomial golden_derivative_y(long k, const BivariatePolynomial& p);

/// (f(φ^k x) − f(φ′^k x)) / ((φ^k − φ′^k) x) evaluated at `precision_bits`.
Complex golden_derivative_fn(long k, const NumericFunction& f, const Complex& x, Precision precision_bits);

enum class BinomialSign { plus, minus };

/// (x ± a)^n_F = ∏_{j=0}^{n-1} (x ± φ^{k(n-1-j)} φ′^{kj} a), and 1 for n = 0.
GoldenPolynomial golden_binomial(long k, long n, const ComplexQuadratic& a, BinomialSign sign);
/// Same polynomial from the expansion Σ_m [n m]_k (-1)^{k m(m-1)/2} x^{n-m} (±a)^m.
GoldenPolynomial golden_binomial_expansion(long k, long n, const ComplexQuadratic& a, BinomialSign sign);
/// (x ± y)^n_F as a polynomial in both x and y, product form.
BivariatePolynomial golden_binomial_xy(long k, long n, BinomialSign sign);

/// (-1)^{k m(m-1)/2}
int binomial_twist_sign(long k, long m);

/// c_n = (D_k^n p)(0), so that p(x) = Σ c_n x^n / F_n^(k)!.
std::vector<ComplexQuadratic> golden_taylor(long k, const GoldenPolynomial& p);
/// Σ c_n x^n / F_n^(k)!
GoldenPolynomial taylor_resum(long k, const std::vector<ComplexQuadratic>& coefficients);

/// E_F^{y D_k} p = Σ_m (-1)^{k m(m-1)/2} y^m (D_k^m p) / F_m^(k)!; finite on polynomials.
GoldenPolynomial golden_translate(long k, const GoldenPolynomial& p, const ComplexQuadratic& y);

}  // namespace golden
