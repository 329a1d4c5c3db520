#pragma once

// Independent reference computations used by the tests. None of these call
// into the routines they check; they are deliberately naive.

#include <cstdlib>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"

namespace golden::oracle {

/// F_n by the plain loop, with F_{-n} = (-1)^{n+1} F_n.
inline Integer fib(long n) {
  const long m = std::labs(n);
  Integer a = 0, b = 1;
  for (long i = 0; i < m; ++i) {
    Integer t = a + b;
    a = b;
    b = t;
  }
  if (n < 0 && m % 2 == 0) a = -a;
  return a;
}

inline Integer lucas(long k) { return fib(k - 1) + fib(k + 1); }

/// F_{nk} / F_k, asserting exact division.
inline Integer divisor(long n, long k) {
  const Integer num = fib(n * k);
  const Integer den = fib(k);
  Integer q = num / den;
  if (q * den != num) std::abort();
  return q;
}

inline Integer divisor_factorial(long n, long k) {
  Integer out = 1;
  for (long i = 1; i <= n; ++i) out *= divisor(i, k);
  return out;
}

/// x^n by repeated multiplication (or division) in Q(√5).
inline QuadraticNumber slow_power(const QuadraticNumber& x, long n) {
  QuadraticNumber out = 1;
  for (long i = 0; i < std::labs(n); ++i) out = out * x;
  return n < 0 ? QuadraticNumber(1) / out : out;
}

inline QuadraticNumber phi() { return QuadraticNumber(Rational(1, 2), Rational(1, 2)); }
inline QuadraticNumber phi_conj() { return QuadraticNumber(Rational(1, 2), Rational(-1, 2)); }

/// (φ^{nk} − φ′^{nk}) / (φ^k − φ′^k) in Q(√5) for n = −n_max..n_max, the
/// powers built up by successive multiplication. Entry i holds n = i − n_max.
inline std::vector<QuadraticNumber> binet_divisor_row(long k, long n_max) {
  const QuadraticNumber a = slow_power(phi(), k);
  const QuadraticNumber b = slow_power(phi_conj(), k);
  const QuadraticNumber ai = QuadraticNumber(1) / a;
  const QuadraticNumber bi = QuadraticNumber(1) / b;
  const QuadraticNumber den = a - b;
  std::vector<QuadraticNumber> row(static_cast<std::size_t>(2 * n_max + 1));
  QuadraticNumber up_a = 1, up_b = 1, dn_a = 1, dn_b = 1;
  for (long n = 0; n <= n_max; ++n) {
    row[static_cast<std::size_t>(n_max + n)] = (up_a - up_b) / den;
    row[static_cast<std::size_t>(n_max - n)] = (dn_a - dn_b) / den;
    up_a = up_a * a;
    up_b = up_b * b;
    dn_a = dn_a * ai;
    dn_b = dn_b * bi;
  }
  return row;
}

/// Digits of agreement as a double, for messages.
inline double rel(const Real& a, const Real& b) { return abs(a - b).to_double(); }

}  // namespace golden::oracle
