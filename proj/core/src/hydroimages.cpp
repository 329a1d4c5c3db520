#include "golden/hydroimages.hpp"

#include <string>

#include "golden/errors.hpp"

namespace golden {

namespace {

constexpr Precision kGuardBits = 32;

struct ImageLadder {
  std::vector<Complex> attracting;  // zeros of the log argument (vortex and even reflections)
  std::vector<Complex> repelling;   // poles of the log argument (odd reflections)
};

void require_off_pole(const Complex& z, const Complex& image, Precision bits) {
  if (abs(z - image) < ldexp(Real(1L, bits), -static_cast<long>(bits / 2))) {
    throw DomainError(ErrorCode::PoleHit, "evaluation point coincides with an image vortex");
  }
}

// q^n z0 and q^n / z̄0 for n = −N..N, q = φ^k.
ImageLadder annulus_images(const FlowConfig& cfg, Precision work) {
  const long N = cfg.truncation_N();
  const Real q = to_real(power(phi(), cfg.k()), work);
  const Complex z0 = cfg.z0().rounded(work);
  const Complex reflected = Complex(Real(1L, work)) / conj(z0);
  ImageLadder ladder;
  Real scale = pow(q, -N);
  for (long n = -N; n <= N; ++n) {
    ladder.attracting.push_back(z0 * scale);
    ladder.repelling.push_back(reflected * scale);
    scale *= q;
  }
  return ladder;
}

// Values c with terms ±ln(z² − c): φ^{2n}z0², φ^{2(n+1)}/z0² (+) and their conjugates (−).
ImageLadder wedge_images(const FlowConfig& cfg, Precision work) {
  const long N = cfg.truncation_N();
  const Real p2 = pow(to_real(phi(), work), 2);
  const Complex z0 = cfg.z0().rounded(work);
  const Complex a = z0 * z0;
  const Complex b = conj(a);
  const Complex one(Real(1L, work));
  ImageLadder ladder;
  Real scale = pow(p2, -N);
  for (long n = -N; n <= N; ++n) {
    ladder.attracting.push_back(a * scale);
    ladder.attracting.push_back(one / a * (scale * p2));
    ladder.repelling.push_back(b * scale);
    ladder.repelling.push_back(one / b * (scale * p2));
    scale *= p2;
  }
  return ladder;
}

// Γ/(2πi)
Complex prefactor(const FlowConfig& cfg, Precision work) {
  const Real g = cfg.gamma().rounded(work) / (2 * pi(work));
  return {Real(work), -g};
}

Real phi_power(long e, Precision bits) { return pow(to_real(phi(), bits), e); }

}  // namespace

FlowConfig FlowConfig::make(Complex z0, Real gamma, long truncation_N, long k, Precision precision_bits) {
  if (k < 1) throw DomainError(ErrorCode::OutOfDomain, "annulus order k must be positive, got " + std::to_string(k));
  if (truncation_N < 0) throw DomainError(ErrorCode::OutOfDomain, "truncation N must be nonnegative");
  const Precision work = precision_bits + kGuardBits;
  // 1 < |z0|² < φ^k
  const Real r2 = norm(z0.rounded(work));
  if (!(r2 > 1L) || !(r2 < to_real(power(phi(), k), work))) {
    throw DomainError(ErrorCode::OutOfDomain, "vortex must satisfy 1 < |z0| < phi^(k/2)");
  }
  return FlowConfig(std::move(z0), std::move(gamma), truncation_N, k, precision_bits);
}

FlowConfig FlowConfig::with_truncation(long N) const { return make(z0_, gamma_, N, k_, precision_bits_); }

Complex annulus_potential(const FlowConfig& cfg, const Complex& z) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Complex zw = z.rounded(work);
  const auto ladder = annulus_images(cfg, work);
  Complex sum(work);
  for (std::size_t i = 0; i < ladder.attracting.size(); ++i) {
    require_off_pole(zw, ladder.attracting[i], cfg.precision_bits());
    require_off_pole(zw, ladder.repelling[i], cfg.precision_bits());
    sum += log((zw - ladder.attracting[i]) / (zw - ladder.repelling[i]));
  }
  return (prefactor(cfg, work) * sum).rounded(cfg.precision_bits());
}

Complex annulus_velocity(const FlowConfig& cfg, const Complex& z) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Complex zw = z.rounded(work);
  const auto ladder = annulus_images(cfg, work);
  const Complex one(Real(1L, work));
  Complex sum(work);
  for (std::size_t i = 0; i < ladder.attracting.size(); ++i) {
    require_off_pole(zw, ladder.attracting[i], cfg.precision_bits());
    require_off_pole(zw, ladder.repelling[i], cfg.precision_bits());
    sum += one / (zw - ladder.attracting[i]) - one / (zw - ladder.repelling[i]);
  }
  return (prefactor(cfg, work) * sum).rounded(cfg.precision_bits());
}

Complex wedge_potential(const FlowConfig& cfg, const Complex& z) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Complex zw = z.rounded(work);
  const Complex z2 = zw * zw;
  const auto ladder = wedge_images(cfg, work);
  Complex sum(work);
  for (std::size_t i = 0; i < ladder.attracting.size(); i += 2) {
    require_off_pole(z2, ladder.attracting[i], cfg.precision_bits());
    require_off_pole(z2, ladder.attracting[i + 1], cfg.precision_bits());
    require_off_pole(z2, ladder.repelling[i], cfg.precision_bits());
    require_off_pole(z2, ladder.repelling[i + 1], cfg.precision_bits());
    const Complex num = (z2 - ladder.attracting[i]) * (z2 - ladder.attracting[i + 1]);
    const Complex den = (z2 - ladder.repelling[i]) * (z2 - ladder.repelling[i + 1]);
    sum += log(num / den);
  }
  return (prefactor(cfg, work) * sum).rounded(cfg.precision_bits());
}

Complex wedge_velocity(const FlowConfig& cfg, const Complex& z) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Complex zw = z.rounded(work);
  const Complex z2 = zw * zw;
  const auto ladder = wedge_images(cfg, work);
  const Complex one(Real(1L, work));
  Complex sum(work);
  for (std::size_t i = 0; i < ladder.attracting.size(); ++i) {
    require_off_pole(z2, ladder.attracting[i], cfg.precision_bits());
    require_off_pole(z2, ladder.repelling[i], cfg.precision_bits());
    sum += one / (z2 - ladder.attracting[i]) - one / (z2 - ladder.repelling[i]);
  }
  return (prefactor(cfg, work) * (zw + zw) * sum).rounded(cfg.precision_bits());
}

Complex flow_velocity(const FlowConfig& cfg, const Complex& z, FlowKind flow) {
  return flow == FlowKind::annulus ? annulus_velocity(cfg, z) : wedge_velocity(cfg, z);
}

Real annulus_stream_function(const FlowConfig& cfg, const Complex& z) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Complex zw = z.rounded(work);
  const auto ladder = annulus_images(cfg, work);
  Real sum(work);
  for (std::size_t i = 0; i < ladder.attracting.size(); ++i) {
    require_off_pole(zw, ladder.attracting[i], cfg.precision_bits());
    require_off_pole(zw, ladder.repelling[i], cfg.precision_bits());
    sum += log(abs(zw - ladder.attracting[i])) - log(abs(zw - ladder.repelling[i]));
  }
  return (-(cfg.gamma().rounded(work) / (2 * pi(work))) * sum).rounded(cfg.precision_bits());
}

Real boundary_stream_variation(const FlowConfig& cfg, const Real& radius, long samples) {
  if (samples < 2) throw DomainError(ErrorCode::InvalidArgument, "need at least two sample points");
  const Precision work = cfg.precision_bits() + kGuardBits;
  const Real two_pi = 2 * pi(work);
  const Real psi0 = annulus_stream_function(cfg, polar(radius.rounded(work), Real(work)));
  Real worst(cfg.precision_bits());
  for (long j = 1; j < samples; ++j) {
    // Irrational offset keeps the samples off the ray through the vortex.
    const Real theta = two_pi * (Real(j, work) + Real(0.5, work) / sqrt(Real(2L, work))) / samples;
    worst = max(worst, abs(annulus_stream_function(cfg, polar(radius.rounded(work), theta)) - psi0));
  }
  return worst;
}

PeriodicityReport periodicity_residual(const FlowConfig& cfg, const Complex& z, FlowKind flow) {
  const Precision work = cfg.precision_bits() + kGuardBits;
  const long k = cfg.k();
  const long N = cfg.truncation_N();
  const Real s = phi_power(k, work);
  const Complex zw = z.rounded(work);
  const Complex lhs = flow_velocity(cfg, zw * s, flow) * s;
  const Complex rhs = flow_velocity(cfg, zw, flow);

  // Dropped boundary terms: the outermost rungs on each side of the window.
  const Real g = abs(cfg.gamma().rounded(work)) / (2 * pi(work));
  const Real r0 = abs(cfg.z0().rounded(work));
  const Real spread = r0 + 1L / r0;
  const Real rz = abs(zw);
  const Real inner = 1L + 1L / (rz * rz);
  Real predicted(work);
  if (flow == FlowKind::annulus) {
    predicted = 2 * g * spread * inner * phi_power(-k * N, work);
  } else {
    predicted = 4 * Real(k, work) * g * spread * spread * inner * rz * phi_power(-2 * (N - k), work);
  }
  // Rounding floor of the two velocity evaluations.
  predicted += 16 * epsilon(cfg.precision_bits()) * (abs(lhs) + abs(rhs));
  return {abs(lhs - rhs).rounded(cfg.precision_bits()), predicted.rounded(cfg.precision_bits())};
}

std::pair<QuadraticNumber, QuadraticNumber> image_spacing_residuals(long n) {
  const QuadraticNumber up = (power(phi(), n + 1) - power(phi(), n)) - power(phi(), n - 1);
  const QuadraticNumber down = (power(phi(), -n) - power(phi(), -(n + 1))) - power(phi(), -(n + 2));
  return {up, down};
}

std::vector<FieldSample> sample_field(const FlowConfig& cfg, FlowKind flow, const Real& x_min, const Real& x_max,
                                      const Real& y_min, const Real& y_max, long nx, long ny) {
  if (nx < 1 || ny < 1) throw DomainError(ErrorCode::InvalidArgument, "grid needs at least one point per axis");
  const Precision bits = cfg.precision_bits();
  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (long j = 0; j < ny; ++j) {
    const Real y = ny == 1 ? y_min.rounded(bits) : (y_min + (y_max - y_min) * Real(j, bits) / (ny - 1)).rounded(bits);
    for (long i = 0; i < nx; ++i) {
      const Real x =
          nx == 1 ? x_min.rounded(bits) : (x_min + (x_max - x_min) * Real(i, bits) / (nx - 1)).rounded(bits);
      try {
        out.push_back({x, y, flow_velocity(cfg, Complex(x, y), flow)});
      } catch (const DomainError& e) {
        if (e.code() != ErrorCode::PoleHit) throw;
      }
    }
  }
  return out;
}

}  // namespace golden
