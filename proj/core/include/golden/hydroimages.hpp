#pragma once

/**
 * @file hydroimages.hpp
 * @brief Point vortex in the Golden annulus 1 < |z| < φ^{k/2} and in the
 *        double-circular wedge, by truncated sums over image ladders.
 *
 * Reflections in the two circles of the annulus place images at q^n z0 and
 * q^n / z̄0 with q = φ^k, n ∈ [−N, N]. The complex velocity V = dG/dz is a
 * rational function of z and carries every self-similarity statement; the
 * logarithmic potential G is multivalued and exposed for inspection.
 */

#include <utility>
#include <vector>

#include "golden/goldenfield.hpp"
#include "golden/numeric.hpp"

namespace golden {

enum class FlowKind { annulus, wedge };

class FlowConfig {
 public:
  /// OutOfDomain unless k ≥ 1, N ≥ 0 and 1 < |z0| < φ^{k/2}.
  static FlowConfig make(Complex z0, Real gamma, long truncation_N, long k, Precision precision_bits);

  const Complex& z0() const noexcept { return z0_; }
  const Real& gamma() const noexcept { return gamma_; }
  long truncation_N() const noexcept { return truncation_N_; }
  long k() const noexcept { return k_; }
  Precision precision_bits() const noexcept { return precision_bits_; }

  /// Same configuration with another truncation order.
  FlowConfig with_truncation(long N) const;

 private:
  FlowConfig(Complex z0, Real gamma, long N, long k, Precision bits)
      : z0_(std::move(z0)), gamma_(std::move(gamma)), truncation_N_(N), k_(k), precision_bits_(bits) {}

  Complex z0_;
  Real gamma_;
  long truncation_N_;
  long k_;
  Precision precision_bits_;
};

/// Γ/(2πi) Σ_n Log[(z − q^n z0)/(z − q^n/z̄0)], principal logarithm per term.
Complex annulus_potential(const FlowConfig& cfg, const Complex& z);
/// Γ/(2πi) Σ_n [1/(z − q^n z0) − 1/(z − q^n/z̄0)]
Complex annulus_velocity(const FlowConfig& cfg, const Complex& z);

/// Γ/(2πi) Σ_n Log[((z²−φ^{2n}z0²)(z²−φ^{2(n+1)}/z0²)) / ((z²−φ^{2n}z̄0²)(z²−φ^{2(n+1)}/z̄0²))]
Complex wedge_potential(const FlowConfig& cfg, const Complex& z);
/// d/dz of the wedge potential; odd in z.
Complex wedge_velocity(const FlowConfig& cfg, const Complex& z);

Complex flow_velocity(const FlowConfig& cfg, const Complex& z, FlowKind flow);

/// Im G = −Γ/(2π) Σ ln|(z − q^n z0)/(z − q^n/z̄0)|, single-valued.
Real annulus_stream_function(const FlowConfig& cfg, const Complex& z);
/// max_j |Im G(z_j) − Im G(z_0)| over `samples` points of the circle |z| = radius.
Real boundary_stream_variation(const FlowConfig& cfg, const Real& radius, long samples);

struct PeriodicityReport {
  /// |V(s z)·s − V(z)| with s = φ^k.
  Real residual;
  /// Size of the boundary terms the truncated window drops; residual should be of this order.
  Real predicted_scale;
};

PeriodicityReport periodicity_residual(const FlowConfig& cfg, const Complex& z, FlowKind flow);

/// (φ^{n+1} − φ^n) − φ^{n−1} and (φ^{−n} − φ^{−(n+1)}) − φ^{−(n+2)}; both vanish exactly.
std::pair<QuadraticNumber, QuadraticNumber> image_spacing_residuals(long n);

struct FieldSample {
  Real x;
  Real y;
  Complex velocity;
};

/// Velocity on an nx × ny grid over [x_min, x_max] × [y_min, y_max]; points on images are skipped.
std::vector<FieldSample> sample_field(const FlowConfig& cfg, FlowKind flow, const Real& x_min, const Real& x_max,
                                      const Real& y_min, const Real& y_max, long nx, long ny);

}  // namespace golden
