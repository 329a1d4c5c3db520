#pragma once

/**
 * @file quantumapps.hpp
 * @brief Qubit states with golden-ratio and Fibonacci-divisor amplitudes,
 *        their concurrence, Bell superpositions of antipodal qubits, and
 *        power reduction of 2×2 Hecke R-matrices.
 *
 * States keep unnormalized amplitudes in Q(√5) together with the exact
 * squared norm; square roots appear only when converting to Real.
 */

#include <array>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"

namespace golden {

struct PureState {
  long num_qubits = 0;
  long k = 0;
  /// Computational-basis order |0…0⟩, |0…1⟩, …; length 2^num_qubits.
  std::vector<QuadraticNumber> amplitudes;
  /// Σ amplitude², exact.
  QuadraticNumber norm_sq;

  /// Builds a state and computes norm_sq; WrongArity unless the length is 2^num_qubits.
  static PureState from_amplitudes(long num_qubits, long k, std::vector<QuadraticNumber> amplitudes);

  /// amplitude² / norm_sq for each basis state; they sum to exactly 1.
  std::vector<QuadraticNumber> probabilities() const;
  /// Normalized amplitudes at the given precision.
  std::vector<Real> normalized(Precision precision_bits) const;
};

/// (1, φ^k) and (−φ^k, 1), each with squared norm 1 + φ^{2k}.
struct AntipodalPair {
  std::array<QuadraticNumber, 2> first;
  std::array<QuadraticNumber, 2> second;
  QuadraticNumber norm_sq;
};

AntipodalPair antipodal_qubits(long k);

/// n-qubit state whose basis strings of Hamming weight s carry amplitude F_s^(k); odd k only.
PureState fibonacci_multiqubit(long k, long n);

/// 2 / (2 + L_k²)
Rational concurrence_closed(long k);
/// 2|ad − bc| / norm² for a real two-qubit state (a, b, c, d), exact.
QuadraticNumber concurrence_pure(const PureState& state);
/// Spin-flip concurrence max(0, λ₁ − λ₂ − λ₃ − λ₄) from the density matrix, by Jacobi eigen-decomposition.
Real concurrence_wootters(const PureState& state, Precision precision_bits);

/// |P+⟩, |P−⟩, |G+⟩, |G−⟩ built from the antipodal pair, in that order.
std::array<PureState, 4> bell_superpositions(long k);

/// Magnitudes (x, y) with |P−⟩ = ∓x (|00⟩ − |11⟩)/√2 + y (|01⟩ + |10⟩)/√2:
/// (√5F_k/L_k, 2/L_k) for even k, (L_k/(√5F_k), 2/(√5F_k)) for odd k; x² + y² = 1.
std::pair<QuadraticNumber, QuadraticNumber> bell_mixing_coefficients(long k);

class TwoByTwoOperator {
 public:
  TwoByTwoOperator() = default;
  TwoByTwoOperator(QuadraticNumber a, QuadraticNumber b, QuadraticNumber c, QuadraticNumber d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static TwoByTwoOperator identity() { return {1, 0, 0, 1}; }
  static TwoByTwoOperator diagonal(QuadraticNumber a, QuadraticNumber d) { return {std::move(a), 0, 0, std::move(d)}; }

  const QuadraticNumber& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }
  QuadraticNumber determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  /// DivisionByZero when singular.
  TwoByTwoOperator inverse() const;
  bool is_zero() const;

  TwoByTwoOperator& operator+=(const TwoByTwoOperator& rhs);
  TwoByTwoOperator& operator-=(const TwoByTwoOperator& rhs);
  friend TwoByTwoOperator operator+(TwoByTwoOperator a, const TwoByTwoOperator& b) { return a += b; }
  friend TwoByTwoOperator operator-(TwoByTwoOperator a, const TwoByTwoOperator& b) { return a -= b; }
  friend TwoByTwoOperator operator*(const TwoByTwoOperator& a, const TwoByTwoOperator& b);
  friend TwoByTwoOperator operator*(const QuadraticNumber& s, const TwoByTwoOperator& a);
  friend bool operator==(const TwoByTwoOperator& a, const TwoByTwoOperator& b) = default;

 private:
  std::array<QuadraticNumber, 4> e_;
};

/// (R − φ^k I)(R + φ^{−k} I) = 0, exactly.
bool is_hecke(const TwoByTwoOperator& R, long k);

/// diag(φ^k, −φ^{−k})
TwoByTwoOperator hecke_diagonal_sample(long k);
/// P · diag(φ^k, −φ^{−k}) · P^{−1} for an invertible P.
TwoByTwoOperator hecke_conjugated_sample(long k, const TwoByTwoOperator& P);

/// F_n^(k) R + F_{n−1}^(k) I after checking the Hecke condition (NotHecke otherwise).
TwoByTwoOperator hecke_power(const TwoByTwoOperator& R, long n, long k);
/// G_n R + G_{n−1} I with G_0 = 0, G_1 = 1, G_{n+1} = (φ^k − φ^{−k}) G_n + G_{n−1}; R^n for every Hecke R.
TwoByTwoOperator hecke_power_general(const TwoByTwoOperator& R, long n, long k);

/// R^n by n − 1 multiplications.
TwoByTwoOperator repeated_power(const TwoByTwoOperator& R, long n);

}  // namespace golden
