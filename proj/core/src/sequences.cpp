#include "golden/sequences.hpp"

#include <string>

#include "golden/errors.hpp"

namespace golden {

namespace {

bool is_odd(long v) { return (v % 2) != 0; }

// (-1)^e for any signed e.
int sign_power(long e) { return is_odd(e) ? -1 : 1; }

void require_nonnegative(long n, const char* what) {
  if (n < 0) {
    throw DomainError(ErrorCode::NegativeIndex, std::string(what) + " must be nonnegative, got " + std::to_string(n));
  }
}

// F_n^(k) for k > 0, n ≥ 0.
Integer fib_divisor_positive(long n, long k) {
  if (n == 0) return 0;
  const Integer lk = lucas(k);
  const bool plus = is_odd(k);  // (-1)^{k-1}
  Integer prev = 0;
  Integer curr = 1;
  for (long i = 1; i < n; ++i) {
    Integer next = lk * curr;
    if (plus) {
      next += prev;
    } else {
      next -= prev;
    }
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

}  // namespace

SequenceQuery::SequenceQuery(long n, long k) : n_(n), k_(k) { require_nonzero_order(k); }

std::pair<Integer, Integer> fibonacci_pair(unsigned long n) {
  // F_{2m} = F_m (2F_{m+1} - F_m), F_{2m+1} = F_m² + F_{m+1}²
  Integer a = 0;
  Integer b = 1;
  for (int bit = 63; bit >= 0; --bit) {
    Integer c = a * (2 * b - a);
    Integer d = a * a + b * b;
    if ((n >> bit) & 1UL) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

Integer fibonacci(long n) {
  if (n >= 0) return fibonacci_pair(static_cast<unsigned long>(n)).first;
  Integer f = fibonacci_pair(static_cast<unsigned long>(-n)).first;
  return is_odd(n) ? f : Integer(-f);
}

Integer lucas(long k) {
  const unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  auto [f, f1] = fibonacci_pair(m);
  Integer l = 2 * f1 - f;  // F_{m-1} + F_{m+1}
  return (k < 0 && is_odd(k)) ? Integer(-l) : l;
}

Integer fib_divisor(const SequenceQuery& q) {
  const long n = q.n();
  const long k = q.k();
  if (k < 0) {
    // F_n^(-k) = (-1)^{(n+1)k} F_n^(k); holds for every signed n.
    Integer v = fib_divisor(SequenceQuery(n, -k));
    return sign_power((n + 1) * (-k)) < 0 ? Integer(-v) : v;
  }
  if (n < 0) {
    Integer v = fib_divisor_positive(-n, k);
    return sign_power(k * (-n) + 1) < 0 ? Integer(-v) : v;
  }
  return fib_divisor_positive(n, k);
}

std::vector<Integer> fib_divisor_sequence(long k, long n_max) {
  require_nonzero_order(k);
  require_nonnegative(n_max, "n_max");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.emplace_back(0);
  if (n_max == 0) return out;
  out.emplace_back(1);
  // Negative k obeys the same recurrence with L_{-k} and (-1)^{-k-1} = (-1)^{k-1}.
  const Integer lk = lucas(k);
  const bool plus = is_odd(k);
  for (long n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Integer next = lk * out[i - 1];
    if (plus) {
      next += out[i - 2];
    } else {
      next -= out[i - 2];
    }
    out.push_back(std::move(next));
  }
  return out;
}

Integer fib_divisor_factorial(long n, long k) {
  require_nonzero_order(k);
  require_nonnegative(n, "n");
  const auto seq = fib_divisor_sequence(k, n);
  Integer product = 1;
  for (long i = 1; i <= n; ++i) product *= seq[static_cast<std::size_t>(i)];
  return product;
}

Integer mod_k_factorial(long n, long k) {
  require_nonzero_order(k);
  require_nonnegative(n, "n");
  Integer product = 1;
  for (long s = 1; s <= n; ++s) product *= Integer(s * k);
  return product;
}

Integer mod_k_fibonacci_factorial(long n, long k) {
  require_nonzero_order(k);
  require_nonnegative(n, "n");
  Integer product = 1;
  for (long s = 1; s <= n; ++s) product *= fibonacci(s * k);
  return product;
}

Integer fibonomial(long n, long m, long k) {
  require_nonzero_order(k);
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  if (m > n) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "fibonomial needs m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  const auto seq = fib_divisor_sequence(k, n);
  // Product of the top m factors over F_m^(k)!; keeps intermediates small.
  const long lo = std::min(m, n - m);
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < lo; ++i) {
    num *= seq[static_cast<std::size_t>(n - i)];
    den *= seq[static_cast<std::size_t>(i + 1)];
  }
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    // Integrality is a theorem; reaching this means corrupted inputs.
    throw DomainError(ErrorCode::InvalidArgument, "non-integral fibonomial");
  }
  return q;
}

std::vector<Integer> fibonomial_row(long n, long k) {
  std::vector<Integer> row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) row.push_back(fibonomial(n, m, k));
  return row;
}

}  // namespace golden
