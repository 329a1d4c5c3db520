#pragma once

/**
 * @file sequences.hpp
 * @brief Fibonacci and Lucas numbers, Fibonacci divisors F_n^(k) = F_{nk}/F_k,
 *        their factorials and the k-th Fibonomials, all as exact big integers.
 *
 * Conventions for signed indices:
 *   F_{-n}       = (-1)^{n+1} F_n
 *   L_{-n}       = (-1)^n L_n
 *   F_{-n}^(k)   = (-1)^{kn+1} F_n^(k)
 *   F_n^(-k)     = (-1)^{(n+1)k} F_n^(k)
 */

#include <utility>
#include <vector>

#include "golden/numeric.hpp"

namespace golden {

using BigSequenceValue = Integer;

/// Index pair (n, k) for a Fibonacci divisor; k = 0 is rejected.
class SequenceQuery {
 public:
  SequenceQuery(long n, long k);

  long n() const noexcept { return n_; }
  long k() const noexcept { return k_; }

 private:
  long n_;
  long k_;
};

/// (F_n, F_{n+1}) by fast doubling; n ≥ 0.
std::pair<Integer, Integer> fibonacci_pair(unsigned long n);

Integer fibonacci(long n);
Integer lucas(long k);

/// F_n^(k) from the three-term recurrence F_{n+1} = L_k F_n + (-1)^{k-1} F_{n-1}.
Integer fib_divisor(const SequenceQuery& q);
inline Integer fib_divisor(long n, long k) { return fib_divisor(SequenceQuery(n, k)); }

/// F_0^(k), …, F_{n_max}^(k); k ≠ 0, n_max ≥ 0.
std::vector<Integer> fib_divisor_sequence(long k, long n_max);

/// F_n^(k)! = F_1^(k) ⋯ F_n^(k), with F_0^(k)! = 1.
Integer fib_divisor_factorial(long n, long k);
/// n!_{mod k} = k · 2k ⋯ nk = n! k^n.
Integer mod_k_factorial(long n, long k);
/// F_n!_{mod k} = F_k F_{2k} ⋯ F_{nk}.
Integer mod_k_fibonacci_factorial(long n, long k);

/// k-th Fibonomial F_n^(k)! / (F_m^(k)! F_{n-m}^(k)!); integral for all valid inputs.
Integer fibonomial(long n, long m, long k);

/// Row n of the k-th Fibonomial triangle, m = 0..n.
std::vector<Integer> fibonomial_row(long n, long k);

}  // namespace golden
