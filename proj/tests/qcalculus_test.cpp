#include <gtest/gtest.h>

#include <random>

#include "golden/errors.hpp"
#include "golden/qcalculus.hpp"
#include "golden/sequences.hpp"
#include "golden/series.hpp"
#include "oracles.hpp"

using namespace golden;

namespace {

GoldenPolynomial poly(std::initializer_list<long> c) {
  std::vector<ComplexQuadratic> v(c.begin(), c.end());
  return GoldenPolynomial(std::move(v));
}

// p(c·x)
GoldenPolynomial dilate(const GoldenPolynomial& p, const QuadraticNumber& c) {
  std::vector<ComplexQuadratic> v;
  QuadraticNumber cn = 1;
  for (long n = 0; n <= p.degree(); ++n) {
    v.push_back(p.coeff(n) * ComplexQuadratic(cn));
    cn = cn * c;
  }
  return GoldenPolynomial(std::move(v));
}

// The finite-difference definition applied to a polynomial, as an oracle for
// the coefficient map x^n ↦ F_n x^{n−1}: (p(φ^k x) − p(φ′^k x)) / ((φ^k − φ′^k) x).
GoldenPolynomial difference_quotient(long k, const GoldenPolynomial& p) {
  const QuadraticNumber a = oracle::slow_power(oracle::phi(), k);
  const QuadraticNumber b = oracle::slow_power(oracle::phi_conj(), k);
  const GoldenPolynomial num = dilate(p, a) - dilate(p, b);
  std::vector<ComplexQuadratic> v;
  for (long n = 1; n <= num.degree(); ++n) v.push_back(num.coeff(n) / ComplexQuadratic(a - b));
  return GoldenPolynomial(std::move(v));
}

GoldenPolynomial random_poly(std::mt19937& rng, long degree) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<ComplexQuadratic> v;
  for (long n = 0; n <= degree; ++n) {
    v.emplace_back(QuadraticNumber(Rational(d(rng), 1 + std::labs(d(rng))), Rational(d(rng), 3)),
                   QuadraticNumber(Rational(d(rng), 2)));
  }
  return GoldenPolynomial(std::move(v));
}

Complex to_c(double re, double im, Precision bits) { return {Real(re, bits), Real(im, bits)}; }

}  // namespace

TEST(GoldenPolynomial, TrimAndDegree) {
  EXPECT_EQ(GoldenPolynomial().degree(), 0);
  EXPECT_TRUE(poly({0, 0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
}

TEST(GoldenDerivative, PolyExamples) {
  EXPECT_EQ(golden_derivative_poly(2, GoldenPolynomial::monomial(3)), GoldenPolynomial::monomial(2, 8));
  EXPECT_TRUE(golden_derivative_poly(5, poly({7})).is_zero());
  EXPECT_EQ(golden_derivative_poly(-2, GoldenPolynomial::monomial(3)), GoldenPolynomial::monomial(2, 8));
  EXPECT_THROW(golden_derivative_poly(0, poly({1, 1})), DomainError);
}

TEST(GoldenDerivative, MatchesDifferenceQuotient) {
  std::mt19937 rng(7);
  for (long k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    const auto p = random_poly(rng, 9);
    EXPECT_EQ(golden_derivative_poly(k, p), difference_quotient(k, p)) << k;
  }
}

TEST(GoldenDerivative, NumericExponential) {
  const Precision bits = 160;
  const Real one(1L, bits);
  const Real s5h = sqrt(Real(5L, bits)) / 2L;
  const Real expected = exp(one / 2L) * sinh(s5h) / s5h;
  const Complex d = golden_derivative_fn(1, exponential_function(), Complex(one), bits);
  EXPECT_LE(abs(d - Complex(expected)), ldexp(one, -(bits - 8)));
}

TEST(GoldenDerivative, NumericIdentityAndZero) {
  const Precision bits = 128;
  const NumericFunction id{[](const Complex& x, Precision) { return x; }, "x"};
  for (long k : {-3L, 1L, 4L}) {
    const Complex d = golden_derivative_fn(k, id, to_c(2, 0, bits), bits);
    EXPECT_LE(abs(d - Complex(Real(1L, bits))), ldexp(Real(1L, bits), -120));
  }
  try {
    golden_derivative_fn(1, id, Complex(bits), bits);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvaluationAtZero);
  }
}

TEST(GoldenDerivative, LogPeriodicKernel) {
  const Precision bits = 128;
  const Real tol = ldexp(Real(1L, bits), -100);
  // sin(π ln|x| / ln φ) is annihilated by every order.
  for (long k = 1; k <= 6; ++k) {
    for (double x : {0.3, 1.7, 5.2}) {
      EXPECT_LE(abs(golden_derivative_fn(k, log_periodic_sine(1), to_c(x, 0, bits), bits)), tol) << k << " " << x;
    }
  }
  EXPECT_LE(abs(golden_derivative_fn(3, log_periodic_sine(1), to_c(1.7, 0, bits), bits)), tol);
  // sin(π ln|x| / ln φ²) is periodic for even orders only.
  for (double x : {0.3, 1.7, 5.2}) {
    EXPECT_GT(abs(golden_derivative_fn(1, log_periodic_sine(2), to_c(x, 0, bits), bits)), Real(1e-3, bits));
    EXPECT_LE(abs(golden_derivative_fn(2, log_periodic_sine(2), to_c(x, 0, bits), bits)), tol);
  }
}

TEST(GoldenDerivative, QuotientRule) {
  const Precision bits = 192;
  const long k = 2;
  const NumericFunction f = exponential_function();
  const NumericFunction g{[](const Complex& x, Precision) { return Complex(Real(1L, x.precision())) + x * x; },
                          "1+x^2"};
  const NumericFunction q{[&](const Complex& x, Precision p) { return f.evaluate(x, p) / g.evaluate(x, p); }, "f/g"};
  const Real a = to_real(oracle::slow_power(oracle::phi(), k), bits + 64);
  const Real b = to_real(oracle::slow_power(oracle::phi_conj(), k), bits + 64);
  for (double xv : {0.4, -1.3, 2.2}) {
    const Complex x = to_c(xv, 0.25, bits);
    const Complex lhs = golden_derivative_fn(k, q, x, bits);
    const Complex rhs = (golden_derivative_fn(k, f, x, bits) * g.evaluate(x * b, bits + 64) -
                         f.evaluate(x * b, bits + 64) * golden_derivative_fn(k, g, x, bits)) /
                        (g.evaluate(x * a, bits + 64) * g.evaluate(x * b, bits + 64));
    EXPECT_LE(abs(lhs - rhs), ldexp(Real(1L, bits), -(bits - 12))) << xv;
  }
}

TEST(GoldenBinomial, Examples) {
  const ComplexQuadratic a(QuadraticNumber(Rational(2, 3), Rational(1, 5)));
  // (x − φa)(x − φ′a) = x² − ax − a²
  EXPECT_EQ(golden_binomial(1, 2, a, BinomialSign::minus),
            GoldenPolynomial({-(a * a), -a, ComplexQuadratic(1)}));
  EXPECT_EQ(golden_binomial(4, 0, a, BinomialSign::plus), poly({1}));
  // Σ_m {2 m}_F (−1)^{m(m−1)/2} = (1+1)²_F at k = 1
  ComplexQuadratic sum;
  for (long m = 0; m <= 2; ++m) sum += ComplexQuadratic(QuadraticNumber(Integer(fibonomial(2, m, 1) * ((m * (m - 1) / 2) % 2 ? -1 : 1))));
  EXPECT_EQ(sum, golden_binomial(1, 2, 1, BinomialSign::plus).evaluate(ComplexQuadratic(1)));
}

TEST(GoldenBinomial, ProductEqualsExpansion) {
  const ComplexQuadratic a(QuadraticNumber(Rational(-1, 2), Rational(2)), QuadraticNumber(Rational(1, 3)));
  for (long k = -5; k <= 5; ++k) {
    if (k == 0) continue;
    for (long n = 0; n <= 12; ++n) {
      for (auto s : {BinomialSign::plus, BinomialSign::minus}) {
        EXPECT_EQ(golden_binomial(k, n, a, s), golden_binomial_expansion(k, n, a, s)) << k << " " << n;
      }
    }
  }
}

TEST(GoldenBinomial, RootsAreTwistedLadder) {
  const ComplexQuadratic a(QuadraticNumber(Rational(3, 7)));
  for (long k : {-3L, 2L}) {
    const long n = 5;
    const auto p = golden_binomial(k, n, a, BinomialSign::minus);
    for (long j = 0; j < n; ++j) {
      const ComplexQuadratic root =
          ComplexQuadratic(oracle::slow_power(oracle::phi(), k * (n - 1 - j)) *
                           oracle::slow_power(oracle::phi_conj(), k * j)) * a;
      EXPECT_TRUE(p.evaluate(root).is_zero()) << k << " " << j;
    }
  }
}

TEST(GoldenBinomial, DerivativeLemmas) {
  for (long k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    const auto alt = k % 2 == 0 ? BinomialSign::plus : BinomialSign::minus;
    const auto flip = k % 2 == 0 ? BinomialSign::minus : BinomialSign::plus;
    for (long n = 1; n <= 10; ++n) {
      const ComplexQuadratic F(fib_divisor(n, k));
      EXPECT_EQ(golden_derivative_x(k, golden_binomial_xy(k, n, BinomialSign::plus)),
                golden_binomial_xy(k, n - 1, BinomialSign::plus) * F);
      EXPECT_EQ(golden_derivative_y(k, golden_binomial_xy(k, n, BinomialSign::plus)),
                golden_binomial_xy(k, n - 1, alt) * F);
      EXPECT_EQ(golden_derivative_y(k, golden_binomial_xy(k, n, BinomialSign::minus)),
                golden_binomial_xy(k, n - 1, flip) * (-F));
    }
  }
}

TEST(GoldenBinomial, Factorization) {
  const ComplexQuadratic a(QuadraticNumber(Rational(5, 3), Rational(-1, 2)));
  for (long k : {-3L, -1L, 1L, 2L, 4L}) {
    for (long n = 0; n <= 10; ++n) {
      for (long m = 0; n + m <= 10; ++m) {
        const auto lhs = golden_binomial(k, n + m, a, BinomialSign::minus);
        const ComplexQuadratic pm(oracle::slow_power(oracle::phi(), k * m));
        const ComplexQuadratic cn(oracle::slow_power(oracle::phi_conj(), k * n));
        const ComplexQuadratic cm(oracle::slow_power(oracle::phi_conj(), k * m));
        const ComplexQuadratic pn(oracle::slow_power(oracle::phi(), k * n));
        EXPECT_EQ(lhs, golden_binomial(k, n, pm * a, BinomialSign::minus) *
                           golden_binomial(k, m, cn * a, BinomialSign::minus));
        EXPECT_EQ(lhs, golden_binomial(k, n, cm * a, BinomialSign::minus) *
                           golden_binomial(k, m, pn * a, BinomialSign::minus));
      }
    }
  }
}

TEST(GoldenBinomial, LeibnizRule) {
  std::mt19937 rng(11);
  for (long k = -5; k <= 5; ++k) {
    if (k == 0) continue;
    const QuadraticNumber a = oracle::slow_power(oracle::phi(), k);
    const QuadraticNumber b = oracle::slow_power(oracle::phi_conj(), k);
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = random_poly(rng, 8);
      const auto g = random_poly(rng, 8);
      EXPECT_EQ(golden_derivative_poly(k, f * g),
                golden_derivative_poly(k, f) * dilate(g, a) + dilate(f, b) * golden_derivative_poly(k, g));
    }
  }
}

TEST(GoldenTaylor, PaperExample) {
  const auto c = golden_taylor(2, poly({1, 3, 3, 1}));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], ComplexQuadratic(1));
  EXPECT_EQ(c[1], ComplexQuadratic(3));
  EXPECT_EQ(c[2], ComplexQuadratic(9));
  EXPECT_EQ(c[3], ComplexQuadratic(24));
}

TEST(GoldenTaylor, SmallCases) {
  const auto c = golden_taylor(3, poly({5}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], ComplexQuadratic(5));
  const auto sq = golden_taylor(1, GoldenPolynomial::monomial(2));
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq[2], ComplexQuadratic(1));
  EXPECT_TRUE(sq[0].is_zero());
  EXPECT_TRUE(sq[1].is_zero());
}

TEST(GoldenTaylor, RoundTrip) {
  std::mt19937 rng(3);
  for (long k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    for (long d = 0; d <= 12; d += 3) {
      const auto p = random_poly(rng, d);
      const auto c = golden_taylor(k, p);
      EXPECT_EQ(taylor_resum(k, c), p);
      // Independent re-summation: Σ c_n x^n / F_n!
      GoldenPolynomial manual;
      for (long n = 0; n < static_cast<long>(c.size()); ++n) {
        manual += GoldenPolynomial::monomial(
            n, c[static_cast<std::size_t>(n)] / ComplexQuadratic(QuadraticNumber(oracle::divisor_factorial(n, k))));
      }
      EXPECT_EQ(manual, p);
    }
  }
}

TEST(GoldenTranslate, MonomialsGoToBinomials) {
  const ComplexQuadratic y(QuadraticNumber(Rational(1, 4), Rational(1)));
  for (long k : {-2L, 1L, 3L}) {
    for (long n = 0; n <= 8; ++n) {
      EXPECT_EQ(golden_translate(k, GoldenPolynomial::monomial(n), y), golden_binomial(k, n, y, BinomialSign::plus));
    }
    const auto p = poly({2, -1, 0, 5});
    EXPECT_EQ(golden_translate(k, p, ComplexQuadratic()), p);
  }
  // (x + φ)(x + φ′) = x² + x − 1
  EXPECT_EQ(golden_translate(1, GoldenPolynomial::monomial(2), 1), poly({-1, 1, 1}));
}
