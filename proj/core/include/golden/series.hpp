#pragma once

/**
 * @file series.hpp
 * @brief Generating functions of the Fibonacci divisors, Golden exponentials,
 *        the trigonometric identity battery, and Cauchy–Riemann / Laplace
 *        residuals of Golden analytic polynomials.
 *
 * Truncation orders are always supplied by the caller, and every truncated
 * sum comes back with a bound on the discarded tail.
 */

#include <string>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"
#include "golden/qcalculus.hpp"

namespace golden {

/// Maclaurin coefficients 0..N of x / (1 − L_k x + (−1)^k x²).
std::vector<Integer> generating_coeffs(long k, long N);

enum class ExpVariant {
  e,  ///< Σ x^n / F_n^(k)!
  E,  ///< Σ (−1)^{k n(n−1)/2} x^n / F_n^(k)!
};

struct TruncatedSeries {
  std::vector<Complex> coeffs;  ///< coeffs[n] multiplies x^n, n = 0..truncation_order
  long truncation_order = 0;
  Precision precision_bits = kDefaultPrecision;

  Complex evaluate(const Complex& x) const;
};

/// Coefficients of e_F or E_F of order k through x^N.
TruncatedSeries golden_exp_series(long k, ExpVariant variant, long N, Precision precision_bits);

struct SeriesValue {
  Complex value;
  /// Bound on |Σ_{n>N} term_n|; +∞ when the ratio |x|/|F_{N+1}^(k)| is not below 1.
  Real tail_bound;
};

/// Partial sum of e_F^x or E_F^x through order N, with its tail bound.
SeriesValue golden_exp_eval(long k, ExpVariant variant, const Complex& x, long N, Precision precision_bits);

/// x ↦ e_F^{λx} (or E_F^{λx}) summed to order N; for use with golden_derivative_fn.
NumericFunction golden_exp_function(long k, ExpVariant variant, Complex lambda, long N);

struct IdentityReport {
  std::string id;
  long k = 0;
  Real x;
  Real lhs;
  Real rhs;
  Real residual;

  /// Sets residual = |lhs − rhs|.
  void recompute_residual();
};

/// Σ_{n=1..N} F_n^(k) x^n / n! against e^{L_k x/2} sinh(√5 F_k x/2) / (√5 F_k/2).
/// The sum is carried with enough guard bits to absorb the cancellation of its largest term.
IdentityReport entire_gf_residual(long k, const Real& x, long N, Precision precision_bits);

/// The full battery of trigonometric identities for one order k.
/// Items whose right-hand side vanishes identically carry rhs = 0 exactly.
std::vector<IdentityReport> identity_suite(long k, Precision precision_bits);

struct AnalyticResiduals {
  QuadraticNumber cauchy_riemann_1;  ///< D_x^(k) u − D_y^(−k) v
  QuadraticNumber cauchy_riemann_2;  ///< D_y^(−k) u + D_x^(k) v
  QuadraticNumber laplace_u;         ///< (D_x^(k))² u + (D_y^(−k))² u
  QuadraticNumber laplace_v;
};

/// f((x+iy)_F) = Σ a_n (x+iy)^n_F split into u + iv as exact polynomials in x, y.
BivariatePolynomial golden_analytic(long k, const std::vector<ComplexQuadratic>& coeffs);

/// Exact residuals of the Cauchy–Riemann and Golden Laplace equations at (x, y).
AnalyticResiduals analytic_residuals(long k, const std::vector<ComplexQuadratic>& coeffs, const QuadraticNumber& x,
                                     const QuadraticNumber& y);

}  // namespace golden
