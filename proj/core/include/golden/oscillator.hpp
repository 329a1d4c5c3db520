#pragma once

/**
 * @file oscillator.hpp
 * @brief Golden deformed bosonic and fermionic oscillators of order k.
 *
 * The annihilation operator b_k acts on the Fock basis as
 * b_k|n⟩ = √F_n^(k) |n−1⟩, so b_k†b_k = F_N^(k) and b_k b_k† = F_{N+I}^(k).
 * Energies are exact integers in units of ħω/2 ("half-quanta").
 */

#include <optional>
#include <utility>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"
#include "golden/qcalculus.hpp"

namespace golden {

/// Dense D×D truncation of an operator on Fock space, row-major.
/// Diagonal operators with integer spectra also carry their exact diagonal.
class FockOperator {
 public:
  FockOperator(long dim, Precision precision_bits);
  /// Diagonal operator with the given exact entries.
  static FockOperator diagonal(std::vector<Integer> diag, Precision precision_bits);

  long dim() const noexcept { return dim_; }
  Precision precision() const noexcept { return precision_; }
  const Real& at(long row, long col) const;
  Real& at(long row, long col);
  const std::optional<std::vector<Integer>>& exact_diag() const noexcept { return exact_diag_; }

  FockOperator transpose() const;
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);

 private:
  long dim_;
  Precision precision_;
  std::vector<Real> entries_;
  std::optional<std::vector<Integer>> exact_diag_;
};

/// (b_k, b_k†) truncated to dimension D ≥ 2.
/// Throws NonPositiveNorm when some F_n^(k) < 0 (odd negative k), since √F_n^(k) is then not real.
std::pair<FockOperator, FockOperator> ladder_matrices(long k, long D, Precision precision_bits);

/// F_{N + shift·I}^(k): diag(F_{n+shift}^(k)), n = 0..D−1, signed indices allowed.
FockOperator number_function(long k, long D, long shift = 0);

/// H_k = b_k†b_k + b_k b_k† in half-quanta; diag(F_n^(k) + F_{n+1}^(k)).
FockOperator hamiltonian(long k, long D);

struct SpectrumEntry {
  long n = 0;
  Integer energy_halfquanta;
};

/// E_n = F_n^(k) + F_{n+1}^(k), n = 0..n_max.
std::vector<SpectrumEntry> bosonic_spectrum(long k, long n_max);
/// E_n = F_n^(k) − F_{n+1}^(k), n = 0..n_max, sign kept; k must be odd.
std::vector<SpectrumEntry> fermionic_spectrum(long k, long n_max);

/// E_{n+1} − E_n of the bosonic spectrum, exact.
Integer level_gap(long k, long n);
/// L_k F_{n+1}^(k) for odd k, L_k F_{n+1}^(k) − 2F_n^(k) for even k.
Integer level_gap_formula(long k, long n);
/// ΔE_n / E_n, which tends to φ^k − 1.
Real gap_ratio(long k, long n, Precision precision_bits);

/// F_{n+1} − φ^k F_n − φ′^{kn} and F_{n+1} − φ′^k F_n − φ^{kn}; both vanish exactly.
std::pair<QuadraticNumber, QuadraticNumber> commutation_residuals(long k, long n);

/// B_m(x) from the Bernoulli numbers (B_1 = −1/2).
Rational bernoulli_polynomial(long m, const Rational& x);

/// (2n+1) + 2 Σ_{s=1..S} B_{2s+1}(n+1) κ^{2s}/(2s+1)!, κ = k ln φ, in half-quanta.
/// Requires even k; the exact value is sinh((n+½)κ)/sinh(κ/2).
Real semiclassical_energy(long k, long n, long S, Precision precision_bits);
/// Same expansion for a real order k (k = 0 gives the linear oscillator 2n+1).
Real semiclassical_energy(const Real& k, long n, long S, Precision precision_bits);

/// sinh(n κ)/sinh(κ) with κ = k ln φ; equals F_n^(k) at even k and tends to n as k → 0.
Real bosonic_continuation(const Real& k, long n, Precision precision_bits);
/// (φ^{kn} − (−1)^n φ^{−kn}) / (φ^k + φ^{−k}); equals F_n^(k) at odd k and tends to n mod 2 as k → 0.
Real fermionic_continuation(const Real& k, long n, Precision precision_bits);

struct CoherentState {
  long k = 0;
  Complex beta;
  long dim = 0;
  /// c_n = β^n / √F_n^(k)! · (Σ_{m<D} |β|^{2m}/F_m^(k)!)^{−1/2}
  std::vector<Complex> amplitudes;
  /// ‖(b_k − β)|β⟩‖ computed from the truncated matrices.
  Real residual;
};

CoherentState coherent_state(long k, const Complex& beta, long D, Precision precision_bits);

/// Σ_n conj(a_n) b_n over two states of the same order and dimension.
Complex overlap(const CoherentState& a, const CoherentState& b);
/// e_F^{ᾱβ} / (e_F^{|α|²} e_F^{|β|²})^{1/2} summed to order N, with the tail bound of the numerator.
std::pair<Complex, Real> coherent_overlap_closed_form(long k, const Complex& alpha, const Complex& beta, long N,
                                                      Precision precision_bits);

/// z · D_k acting on analytic functions; z^s ↦ F_s^(k) z^s.
GoldenPolynomial bargman_apply(long k, const GoldenPolynomial& p);

}  // namespace golden
