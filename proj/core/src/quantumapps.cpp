#include "golden/quantumapps.hpp"

#include <algorithm>
#include <string>

#include "golden/errors.hpp"
#include "golden/sequences.hpp"

namespace golden {

namespace {

using Matrix = std::vector<std::vector<Real>>;

Matrix zeros(std::size_t n, Precision bits) { return Matrix(n, std::vector<Real>(n, Real(bits))); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zeros(n, a[0][0].precision());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

// Cyclic Jacobi rotations on a real symmetric matrix. Returns eigenvalues and
// leaves the eigenvectors as the columns of `vectors`.
std::vector<Real> jacobi_eigen(Matrix a, Matrix& vectors) {
  const std::size_t n = a.size();
  const Precision bits = a[0][0].precision();
  vectors = zeros(n, bits);
  for (std::size_t i = 0; i < n; ++i) vectors[i][i] = Real(1L, bits);
  const Real tol = epsilon(bits);
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off(bits);
    Real scale(bits);
    for (std::size_t i = 0; i < n; ++i) {
      scale += a[i][i] * a[i][i];
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off.is_zero() || off <= tol * tol * (scale + off)) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q].is_zero()) continue;
        // Rotation angle from cot 2θ = (a_qq − a_pp) / (2 a_pq).
        const Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const Real sign_theta(theta.sign() < 0 ? -1L : 1L, bits);
        const Real t = sign_theta / (abs(theta) + sqrt(theta * theta + 1L));
        const Real c = 1L / sqrt(t * t + 1L);
        const Real s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const Real arp = a[r][p];
          const Real arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const Real apr = a[p][r];
          const Real aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const Real vrp = vectors[r][p];
          const Real vrq = vectors[r][q];
          vectors[r][p] = c * vrp - s * vrq;
          vectors[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }
  std::vector<Real> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(a[i][i]);
  return values;
}

void require_two_qubits(const PureState& state) {
  if (state.num_qubits != 2 || state.amplitudes.size() != 4) {
    throw DomainError(ErrorCode::WrongArity,
                      "concurrence needs a two-qubit state, got " + std::to_string(state.num_qubits) + " qubits");
  }
}

}  // namespace

// -- PureState --------------------------------------------------------------

PureState PureState::from_amplitudes(long num_qubits, long k, std::vector<QuadraticNumber> amplitudes) {
  if (num_qubits < 1 || num_qubits > 30 || amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw DomainError(ErrorCode::WrongArity, "amplitude count must be 2^num_qubits");
  }
  PureState s{num_qubits, k, std::move(amplitudes), QuadraticNumber(0)};
  for (const auto& a : s.amplitudes) s.norm_sq += a * a;
  if (s.norm_sq.is_zero()) throw DomainError(ErrorCode::NonPositiveNorm, "the zero vector is not a state");
  return s;
}

std::vector<QuadraticNumber> PureState::probabilities() const {
  std::vector<QuadraticNumber> out;
  out.reserve(amplitudes.size());
  for (const auto& a : amplitudes) out.push_back(a * a / norm_sq);
  return out;
}

std::vector<Real> PureState::normalized(Precision precision_bits) const {
  const Precision work = precision_bits + 32;
  const Real n = sqrt(to_real(norm_sq, work));
  std::vector<Real> out;
  for (const auto& a : amplitudes) out.push_back((to_real(a, work) / n).rounded(precision_bits));
  return out;
}

// -- Constructions ----------------------------------------------------------

AntipodalPair antipodal_qubits(long k) {
  require_nonzero_order(k);
  const QuadraticNumber q = power(phi(), k);
  return {{QuadraticNumber(1), q}, {-q, QuadraticNumber(1)}, QuadraticNumber(1) + q * q};
}

PureState fibonacci_multiqubit(long k, long n) {
  require_nonzero_order(k);
  if (k % 2 == 0) {
    throw DomainError(ErrorCode::EvenOrderForState, "the Fibonacci n-qubit state is defined for odd k, got " +
                                                        std::to_string(k));
  }
  if (n < 1 || n > 24) throw DomainError(ErrorCode::InvalidArgument, "qubit count must be in 1..24");
  const auto f = fib_divisor_sequence(k, n);
  std::vector<QuadraticNumber> amps;
  amps.reserve(std::size_t{1} << n);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    amps.emplace_back(f[static_cast<std::size_t>(__builtin_popcountl(bits))]);
  }
  return PureState::from_amplitudes(n, k, std::move(amps));
}

Rational concurrence_closed(long k) {
  require_nonzero_order(k);
  const Integer l = lucas(k);
  Rational c(2, 2 + l * l);
  c.canonicalize();
  return c;
}

QuadraticNumber concurrence_pure(const PureState& state) {
  require_two_qubits(state);
  const auto& a = state.amplitudes;
  return QuadraticNumber(2) * abs(a[0] * a[3] - a[1] * a[2]) / state.norm_sq;
}

Real concurrence_wootters(const PureState& state, Precision precision_bits) {
  require_two_qubits(state);
  // √ of near-zero eigenvalues halves the accurate bits, so work at twice the target.
  const Precision work = 2 * precision_bits + 64;
  const auto psi = state.normalized(work);
  Matrix rho = zeros(4, work);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) rho[i][j] = psi[i] * psi[j];
  }
  // σy⊗σy is real: −1 at (00,11) and (11,00), +1 at (01,10) and (10,01). Amplitudes are real, so ρ* = ρ.
  Matrix flip = zeros(4, work);
  flip[0][3] = Real(-1L, work);
  flip[3][0] = Real(-1L, work);
  flip[1][2] = Real(1L, work);
  flip[2][1] = Real(1L, work);
  const Matrix rho_tilde = multiply(multiply(flip, rho), flip);

  Matrix v;
  const auto w = jacobi_eigen(rho, v);
  Matrix sqrt_rho = zeros(4, work);
  for (std::size_t m = 0; m < 4; ++m) {
    const Real root = w[m].sign() > 0 ? sqrt(w[m]) : Real(work);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) sqrt_rho[i][j] += v[i][m] * root * v[j][m];
    }
  }
  Matrix ignored;
  auto ev = jacobi_eigen(multiply(multiply(sqrt_rho, rho_tilde), sqrt_rho), ignored);
  std::vector<Real> lambda;
  for (const auto& e : ev) lambda.push_back(e.sign() > 0 ? sqrt(e) : Real(work));
  std::sort(lambda.begin(), lambda.end(), [](const Real& x, const Real& y) { return x > y; });
  Real c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  if (c.sign() < 0) c = Real(work);
  return c.rounded(precision_bits);
}

std::array<PureState, 4> bell_superpositions(long k) {
  const AntipodalPair p = antipodal_qubits(k);
  const auto tensor = [](const std::array<QuadraticNumber, 2>& a, const std::array<QuadraticNumber, 2>& b) {
    return std::array<QuadraticNumber, 4>{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
  };
  const auto combine = [k](const std::array<QuadraticNumber, 4>& x, const std::array<QuadraticNumber, 4>& y,
                           int sign) {
    std::vector<QuadraticNumber> amps;
    for (std::size_t i = 0; i < 4; ++i) amps.push_back(sign > 0 ? x[i] + y[i] : x[i] - y[i]);
    return PureState::from_amplitudes(2, k, std::move(amps));
  };
  const auto t11 = tensor(p.first, p.first);
  const auto t22 = tensor(p.second, p.second);
  const auto t12 = tensor(p.first, p.second);
  const auto t21 = tensor(p.second, p.first);
  return {combine(t11, t22, 1), combine(t11, t22, -1), combine(t12, t21, 1), combine(t12, t21, -1)};
}

std::pair<QuadraticNumber, QuadraticNumber> bell_mixing_coefficients(long k) {
  require_nonzero_order(k);
  const QuadraticNumber l(lucas(k));
  const QuadraticNumber s5f = QuadraticNumber::sqrt5() * QuadraticNumber(fibonacci(k));
  if (k % 2 == 0) return {abs(s5f / l), abs(QuadraticNumber(2) / l)};
  return {abs(l / s5f), abs(QuadraticNumber(2) / s5f)};
}

// -- Hecke R-matrices -------------------------------------------------------

TwoByTwoOperator TwoByTwoOperator::inverse() const {
  const QuadraticNumber det = determinant();
  if (det.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "singular 2x2 operator");
  return {e_[3] / det, -e_[1] / det, -e_[2] / det, e_[0] / det};
}

bool TwoByTwoOperator::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const QuadraticNumber& x) { return x.is_zero(); });
}

TwoByTwoOperator& TwoByTwoOperator::operator+=(const TwoByTwoOperator& rhs) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] += rhs.e_[i];
  return *this;
}

TwoByTwoOperator& TwoByTwoOperator::operator-=(const TwoByTwoOperator& rhs) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] -= rhs.e_[i];
  return *this;
}

TwoByTwoOperator operator*(const TwoByTwoOperator& a, const TwoByTwoOperator& b) {
  return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
          a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
}

TwoByTwoOperator operator*(const QuadraticNumber& s, const TwoByTwoOperator& a) {
  return {s * a.e_[0], s * a.e_[1], s * a.e_[2], s * a.e_[3]};
}

bool is_hecke(const TwoByTwoOperator& R, long k) {
  require_nonzero_order(k);
  const TwoByTwoOperator I = TwoByTwoOperator::identity();
  return ((R - power(phi(), k) * I) * (R + power(phi(), -k) * I)).is_zero();
}

TwoByTwoOperator hecke_diagonal_sample(long k) {
  require_nonzero_order(k);
  return TwoByTwoOperator::diagonal(power(phi(), k), -power(phi(), -k));
}

TwoByTwoOperator hecke_conjugated_sample(long k, const TwoByTwoOperator& P) {
  return P * hecke_diagonal_sample(k) * P.inverse();
}

TwoByTwoOperator hecke_power(const TwoByTwoOperator& R, long n, long k) {
  if (!is_hecke(R, k)) {
    throw DomainError(ErrorCode::NotHecke, "R does not satisfy (R - phi^k)(R + phi^-k) = 0 for k=" + std::to_string(k));
  }
  if (n < 0) throw DomainError(ErrorCode::NegativeIndex, "power must be nonnegative");
  if (n == 0) return TwoByTwoOperator::identity();
  return QuadraticNumber(fib_divisor(n, k)) * R +
         QuadraticNumber(fib_divisor(n - 1, k)) * TwoByTwoOperator::identity();
}

TwoByTwoOperator hecke_power_general(const TwoByTwoOperator& R, long n, long k) {
  if (!is_hecke(R, k)) {
    throw DomainError(ErrorCode::NotHecke, "R does not satisfy (R - phi^k)(R + phi^-k) = 0 for k=" + std::to_string(k));
  }
  if (n < 0) throw DomainError(ErrorCode::NegativeIndex, "power must be nonnegative");
  const QuadraticNumber b = power(phi(), k) - power(phi(), -k);
  QuadraticNumber prev(1);  // G_{-1}
  QuadraticNumber curr(0);  // G_0
  for (long i = 0; i < n; ++i) {
    QuadraticNumber next = b * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr * R + prev * TwoByTwoOperator::identity();
}

TwoByTwoOperator repeated_power(const TwoByTwoOperator& R, long n) {
  if (n < 0) throw DomainError(ErrorCode::NegativeIndex, "power must be nonnegative");
  TwoByTwoOperator out = TwoByTwoOperator::identity();
  for (long i = 0; i < n; ++i) out = out * R;
  return out;
}

}  // namespace golden
