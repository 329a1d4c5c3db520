#include "golden/oscillator.hpp"

#include <string>

#include "golden/errors.hpp"
#include "golden/sequences.hpp"
#include "golden/series.hpp"

namespace golden {

namespace {

constexpr Precision kGuardBits = 32;

std::size_t as_index(long n) { return static_cast<std::size_t>(n); }

void require_dimension(long D) {
  if (D < 2) throw DomainError(ErrorCode::InvalidArgument, "Fock truncation needs D >= 2, got " + std::to_string(D));
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) {
    throw DomainError(ErrorCode::NegativeIndex, std::string(what) + " must be nonnegative, got " + std::to_string(n));
  }
}

// F_1^(k) … F_{D−1}^(k) must be positive for √F_n^(k) to be real.
std::vector<Integer> positive_divisors(long k, long D) {
  auto f = fib_divisor_sequence(k, D);
  for (long n = 1; n <= D; ++n) {
    if (sgn(f[as_index(n)]) <= 0) {
      throw DomainError(ErrorCode::NonPositiveNorm, "F_" + std::to_string(n) + "^(" + std::to_string(k) +
                                                        ") is not positive; the ladder operators are not real");
    }
  }
  return f;
}

Real log_phi(Precision bits) { return log(to_real(phi(), bits)); }

}  // namespace

// -- FockOperator -----------------------------------------------------------

FockOperator::FockOperator(long dim, Precision precision_bits)
    : dim_(dim), precision_(precision_bits), entries_(as_index(dim * dim), Real(precision_bits)) {
  if (dim < 1) throw DomainError(ErrorCode::InvalidArgument, "operator dimension must be positive");
}

FockOperator FockOperator::diagonal(std::vector<Integer> diag, Precision precision_bits) {
  FockOperator op(static_cast<long>(diag.size()), precision_bits);
  for (long i = 0; i < op.dim_; ++i) op.at(i, i) = Real(diag[as_index(i)], precision_bits);
  op.exact_diag_ = std::move(diag);
  return op;
}

const Real& FockOperator::at(long row, long col) const { return entries_.at(as_index(row * dim_ + col)); }

Real& FockOperator::at(long row, long col) {
  // Writing through this reference may break the diagonal; drop the exact copy.
  exact_diag_.reset();
  return entries_.at(as_index(row * dim_ + col));
}

FockOperator FockOperator::transpose() const {
  FockOperator out(dim_, precision_);
  for (long i = 0; i < dim_; ++i) {
    for (long j = 0; j < dim_; ++j) out.entries_[as_index(j * dim_ + i)] = entries_[as_index(i * dim_ + j)];
  }
  out.exact_diag_ = exact_diag_;
  return out;
}

std::vector<Complex> FockOperator::apply(const std::vector<Complex>& v) const {
  if (static_cast<long>(v.size()) != dim_) {
    throw DomainError(ErrorCode::WrongArity, "vector length does not match operator dimension");
  }
  std::vector<Complex> out(v.size(), Complex(precision_));
  for (long i = 0; i < dim_; ++i) {
    for (long j = 0; j < dim_; ++j) {
      const Real& a = entries_[as_index(i * dim_ + j)];
      if (!a.is_zero()) out[as_index(i)] += v[as_index(j)] * a;
    }
  }
  return out;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  if (a.dim_ != b.dim_) throw DomainError(ErrorCode::WrongArity, "operator dimensions differ");
  FockOperator out(a.dim_, std::max(a.precision_, b.precision_));
  const long D = a.dim_;
  for (long i = 0; i < D; ++i) {
    for (long l = 0; l < D; ++l) {
      const Real& x = a.entries_[as_index(i * D + l)];
      if (x.is_zero()) continue;
      for (long j = 0; j < D; ++j) {
        const Real& y = b.entries_[as_index(l * D + j)];
        if (!y.is_zero()) out.entries_[as_index(i * D + j)] += x * y;
      }
    }
  }
  return out;
}

// -- Operators and spectra --------------------------------------------------

std::pair<FockOperator, FockOperator> ladder_matrices(long k, long D, Precision precision_bits) {
  require_nonzero_order(k);
  require_dimension(D);
  const auto f = positive_divisors(k, D - 1);
  FockOperator b(D, precision_bits);
  for (long n = 0; n + 1 < D; ++n) b.at(n, n + 1) = sqrt(Real(f[as_index(n + 1)], precision_bits));
  FockOperator b_dagger = b.transpose();
  return {std::move(b), std::move(b_dagger)};
}

FockOperator number_function(long k, long D, long shift) {
  require_nonzero_order(k);
  require_dimension(D);
  std::vector<Integer> diag;
  diag.reserve(as_index(D));
  for (long n = 0; n < D; ++n) diag.push_back(fib_divisor(n + shift, k));
  return FockOperator::diagonal(std::move(diag), kDefaultPrecision);
}

FockOperator hamiltonian(long k, long D) {
  require_dimension(D);
  std::vector<Integer> diag;
  for (const auto& e : bosonic_spectrum(k, D - 1)) diag.push_back(e.energy_halfquanta);
  return FockOperator::diagonal(std::move(diag), kDefaultPrecision);
}

std::vector<SpectrumEntry> bosonic_spectrum(long k, long n_max) {
  require_nonzero_order(k);
  require_nonnegative(n_max, "n_max");
  const auto f = fib_divisor_sequence(k, n_max + 1);
  std::vector<SpectrumEntry> out;
  for (long n = 0; n <= n_max; ++n) out.push_back({n, f[as_index(n)] + f[as_index(n + 1)]});
  return out;
}

std::vector<SpectrumEntry> fermionic_spectrum(long k, long n_max) {
  require_nonzero_order(k);
  if (k % 2 == 0) {
    throw DomainError(ErrorCode::EvenOrderForFermionic,
                      "the fermionic hierarchy needs odd k, got " + std::to_string(k));
  }
  require_nonnegative(n_max, "n_max");
  const auto f = fib_divisor_sequence(k, n_max + 1);
  std::vector<SpectrumEntry> out;
  for (long n = 0; n <= n_max; ++n) out.push_back({n, f[as_index(n)] - f[as_index(n + 1)]});
  return out;
}

Integer level_gap(long k, long n) {
  const auto e = bosonic_spectrum(k, n + 1);
  return e[as_index(n + 1)].energy_halfquanta - e[as_index(n)].energy_halfquanta;
}

Integer level_gap_formula(long k, long n) {
  require_nonzero_order(k);
  require_nonnegative(n, "n");
  Integer gap = lucas(k) * fib_divisor(n + 1, k);
  if (k % 2 == 0) gap -= 2 * fib_divisor(n, k);
  return gap;
}

Real gap_ratio(long k, long n, Precision precision_bits) {
  const auto e = bosonic_spectrum(k, n + 1);
  const Integer& en = e[as_index(n)].energy_halfquanta;
  if (en == 0) throw DomainError(ErrorCode::DivisionByZero, "E_n vanishes; the gap ratio is undefined");
  const Integer gap = e[as_index(n + 1)].energy_halfquanta - en;
  Rational ratio(gap, en);
  ratio.canonicalize();
  return Real(ratio, precision_bits);
}

std::pair<QuadraticNumber, QuadraticNumber> commutation_residuals(long k, long n) {
  require_nonzero_order(k);
  const QuadraticNumber fn(fib_divisor(n, k));
  const QuadraticNumber fn1(fib_divisor(n + 1, k));
  return {fn1 - power(phi(), k) * fn - power(phi_conj(), k * n), fn1 - power(phi_conj(), k) * fn - power(phi(), k * n)};
}

// -- Semiclassical expansion and continuations -------------------------------

Rational bernoulli_polynomial(long m, const Rational& x) {
  require_nonnegative(m, "m");
  // Σ_{j=0}^{i} C(i+1, j) B_j = 0 for i ≥ 1, B_0 = 1.
  std::vector<Rational> b(as_index(m) + 1);
  b[0] = 1;
  for (long i = 1; i <= m; ++i) {
    Rational acc = 0;
    Integer binom = 1;  // C(i+1, j)
    for (long j = 0; j < i; ++j) {
      acc += binom * b[as_index(j)];
      binom = binom * (i + 1 - j) / (j + 1);
    }
    b[as_index(i)] = -acc / (i + 1);
  }
  // B_m(x) = Σ_j C(m, j) B_j x^{m−j}
  Rational value = 0;
  Integer binom = 1;
  for (long j = 0; j <= m; ++j) {
    Rational xp = 1;
    for (long p = 0; p < m - j; ++p) xp *= x;
    value += binom * b[as_index(j)] * xp;
    binom = binom * (m - j) / (j + 1);
  }
  value.canonicalize();
  return value;
}

Real semiclassical_energy(long k, long n, long S, Precision precision_bits) {
  require_nonzero_order(k);
  if (k % 2 != 0) {
    throw DomainError(ErrorCode::OddOrderForSemiclassical,
                      "the semiclassical expansion needs even k, got " + std::to_string(k));
  }
  return semiclassical_energy(Real(k, precision_bits + kGuardBits), n, S, precision_bits);
}

Real semiclassical_energy(const Real& k, long n, long S, Precision precision_bits) {
  require_nonnegative(n, "n");
  if (S < 1) throw DomainError(ErrorCode::InvalidArgument, "S must be at least 1");
  const Precision work = precision_bits + kGuardBits;
  const Real kappa = k.rounded(work) * log_phi(work);
  const Real kappa2 = kappa * kappa;
  Real sum(2 * n + 1, work);
  Real kappa_power(1L, work);
  Integer factorial = 1;  // (2s+1)!
  for (long s = 1; s <= S; ++s) {
    kappa_power *= kappa2;
    factorial *= (2 * s) * (2 * s + 1);
    const Rational b = bernoulli_polynomial(2 * s + 1, Rational(n + 1));
    sum += 2 * Real(b, work) * kappa_power / factorial;
  }
  return sum.rounded(precision_bits);
}

Real bosonic_continuation(const Real& k, long n, Precision precision_bits) {
  const Precision work = precision_bits + kGuardBits;
  if (k.is_zero()) return Real(n, precision_bits);
  const Real kappa = k.rounded(work) * log_phi(work);
  return (sinh(kappa * Real(n, work)) / sinh(kappa)).rounded(precision_bits);
}

Real fermionic_continuation(const Real& k, long n, Precision precision_bits) {
  const Precision work = precision_bits + kGuardBits;
  const Real kappa = k.rounded(work) * log_phi(work);
  const Real up = exp(kappa * Real(n, work));
  const Real down = exp(-(kappa * Real(n, work)));
  const Real num = n % 2 == 0 ? up - down : up + down;
  return (num / (exp(kappa) + exp(-kappa))).rounded(precision_bits);
}

// -- Coherent states and the Fock–Bargman realization -------------------------

CoherentState coherent_state(long k, const Complex& beta, long D, Precision precision_bits) {
  require_nonzero_order(k);
  require_dimension(D);
  const Precision work = precision_bits + kGuardBits;
  const auto f = positive_divisors(k, D - 1);
  const Complex b = beta.rounded(work);

  std::vector<Complex> c;
  c.reserve(as_index(D));
  c.emplace_back(Real(1L, work));
  for (long n = 1; n < D; ++n) c.push_back(c.back() * b / sqrt(Real(f[as_index(n)], work)));
  Real norm_sq(work);
  for (const auto& a : c) norm_sq += norm(a);
  const Real scale = sqrt(norm_sq);
  for (auto& a : c) a = a / scale;

  const auto [lower, raise] = ladder_matrices(k, D, work);
  auto bc = lower.apply(c);
  Real residual_sq(work);
  for (long n = 0; n < D; ++n) residual_sq += norm(bc[as_index(n)] - b * c[as_index(n)]);

  CoherentState state{k, beta.rounded(precision_bits), D, {}, sqrt(residual_sq).rounded(precision_bits)};
  state.amplitudes.reserve(c.size());
  for (const auto& a : c) state.amplitudes.push_back(a.rounded(precision_bits));
  return state;
}

Complex overlap(const CoherentState& a, const CoherentState& b) {
  if (a.k != b.k || a.dim != b.dim) {
    throw DomainError(ErrorCode::WrongArity, "overlap needs states of equal order and dimension");
  }
  Complex acc(std::max(a.beta.precision(), b.beta.precision()));
  for (std::size_t n = 0; n < a.amplitudes.size(); ++n) acc += conj(a.amplitudes[n]) * b.amplitudes[n];
  return acc;
}

std::pair<Complex, Real> coherent_overlap_closed_form(long k, const Complex& alpha, const Complex& beta, long N,
                                                      Precision precision_bits) {
  const Precision work = precision_bits + kGuardBits;
  const auto num = golden_exp_eval(k, ExpVariant::e, conj(alpha) * beta, N, work);
  const auto na = golden_exp_eval(k, ExpVariant::e, Complex(norm(alpha)), N, work);
  const auto nb = golden_exp_eval(k, ExpVariant::e, Complex(norm(beta)), N, work);
  const Complex value = num.value / sqrt(na.value.re * nb.value.re);
  return {value.rounded(precision_bits), num.tail_bound.rounded(precision_bits)};
}

GoldenPolynomial bargman_apply(long k, const GoldenPolynomial& p) {
  return golden_derivative_poly(k, p) * GoldenPolynomial::monomial(1);
}

}  // namespace golden
