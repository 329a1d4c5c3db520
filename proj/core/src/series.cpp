#include "golden/series.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "golden/errors.hpp"
#include "golden/sequences.hpp"

namespace golden {

namespace {

constexpr Precision kSumGuardBits = 32;

std::size_t as_index(long n) { return static_cast<std::size_t>(n); }

Real infinity(Precision bits) {
  Real r(bits);
  mpfr_set_inf(r.get(), 1);
  return r;
}

// Bits lost to cancellation in Σ F_n^(k) x^n/n!: its largest term is about e^{φ^|k| |x|}.
Precision cancellation_guard(long k, double abs_x) {
  const double growth = std::pow((1.0 + std::sqrt(5.0)) / 2.0, static_cast<double>(std::labs(k))) * abs_x;
  return static_cast<Precision>(std::ceil(growth / std::log(2.0))) + kSumGuardBits;
}

// Index past which the terms (φ^|k| |x|)^n / n! have decayed below 2^-bits.
long adaptive_order(long k, double abs_x, Precision bits) {
  const double growth = std::pow((1.0 + std::sqrt(5.0)) / 2.0, static_cast<double>(std::labs(k))) * abs_x;
  long n = 1;
  double log2_term = 0.0;
  while (n < 16 || n < static_cast<long>(2.0 * growth) + 2 || log2_term > -static_cast<double>(bits) - 16.0) {
    log2_term += std::log2(growth) - std::log2(static_cast<double>(n));
    ++n;
  }
  return n;
}

// Yields F_1^(k), F_2^(k), … one at a time.
class DivisorStream {
 public:
  explicit DivisorStream(long k) : lk_(lucas(k)), plus_(k % 2 != 0) {}

  const Integer& next() {
    Integer following = lk_ * curr_;
    if (plus_) {
      following += prev_;
    } else {
      following -= prev_;
    }
    prev_ = std::move(curr_);
    curr_ = std::move(following);
    return prev_;
  }

 private:
  Integer lk_;
  bool plus_;
  Integer prev_ = 0;
  Integer curr_ = 1;
};

enum class Parity { all, odd, even };

// all:  Σ_{n=1..N} F_n x^n / n!
// odd:  Σ_l F_{2l+1} (−1)^l x^{2l} / (2l+1)!
// even: Σ_l F_{2l+2} (−1)^l x^{2l+1} / (2l+2)!
Real divisor_exponential_sum(long k, const Real& x, Parity parity, long N, Precision work) {
  DivisorStream f(k);
  Real sum(work);
  Real power_over_factorial(1L, work);  // x^n / n!
  const Real xw = x.rounded(work);
  for (long n = 1; n <= N; ++n) {
    power_over_factorial = power_over_factorial * xw / n;
    const Integer& fn = f.next();
    switch (parity) {
      case Parity::all:
        sum += power_over_factorial * fn;
        break;
      case Parity::odd:
        if (n % 2 == 1) {
          const Real t = power_over_factorial * fn;
          sum += ((n - 1) / 2) % 2 == 0 ? t : -t;
        }
        break;
      case Parity::even:
        if (n % 2 == 0) {
          const Real t = power_over_factorial * fn;
          sum += (n / 2 - 1) % 2 == 0 ? t : -t;
        }
        break;
    }
  }
  // The odd and even lists are divided by x once at the end.
  return parity == Parity::all ? sum : sum / xw;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// A point x of the trigonometric battery. When L_k x/2 or √5 F_k x/2 is a
// rational multiple of π, that multiple is kept so exact zeros are recognised.
struct BatteryPoint {
  std::string label;
  Real x;
  std::optional<Rational> lucas_angle;      // L_k x/2 as a multiple of π
  std::optional<Rational> fibonacci_angle;  // √5 F_k x/2 as a multiple of π
};

std::vector<BatteryPoint> battery_points(long k, bool even_list, Precision work) {
  const Rational lk(lucas(k));
  const Rational fk(fibonacci(k));
  const Real p = pi(work);
  const Real s5 = sqrt(Real(5L, work));
  const Real l_real(lucas(k), work);
  const Real f_real(fibonacci(k), work);
  std::vector<BatteryPoint> pts;
  pts.push_back({"1", p, lk / 2, std::nullopt});
  pts.push_back({"2", 2 * p / s5, std::nullopt, fk});
  pts.push_back({"3", p / s5, std::nullopt, fk / 2});
  pts.push_back({"4", 2 * p, lk, std::nullopt});
  pts.push_back({"5", Real(1L, work), std::nullopt, std::nullopt});
  pts.push_back({"6", p / l_real, Rational(1, 2), std::nullopt});
  if (even_list) {
    pts.push_back({"7", 2 * p / l_real, Rational(1), std::nullopt});
  } else {
    pts.push_back({"7", 2 * p / (s5 * f_real), std::nullopt, Rational(1)});
  }
  return pts;
}

Real battery_rhs(long k, const BatteryPoint& pt, bool even_list, Precision work) {
  // odd:  cos(L x/2) · sin(√5 F x/2) / (√5 F x/2)
  // even: sin(L x/2) · sin(√5 F x/2) / (√5 F x/2)
  const bool trig_zero = even_list ? (pt.lucas_angle && is_integer(*pt.lucas_angle))
                                   : (pt.lucas_angle && is_integer(*pt.lucas_angle - Rational(1, 2)));
  const bool sinc_zero = pt.fibonacci_angle && is_integer(*pt.fibonacci_angle) && sgn(*pt.fibonacci_angle) != 0;
  if (trig_zero || sinc_zero) return Real(work);
  const Real half_l = Real(lucas(k), work) * pt.x / 2;
  const Real half_f = sqrt(Real(5L, work)) * Real(fibonacci(k), work) * pt.x / 2;
  const Real trig = even_list ? sin(half_l) : cos(half_l);
  return trig * sin(half_f) / half_f;
}

IdentityReport make_report(std::string id, long k, const Real& x, const Real& lhs, const Real& rhs,
                           Precision bits) {
  IdentityReport r{std::move(id), k, x.rounded(bits), lhs.rounded(bits), rhs.rounded(bits), Real(bits)};
  r.recompute_residual();
  return r;
}

// e^{L x/2} sinh(√5 F x/2) / (√5 F/2)
Real entire_gf_closed_form(long k, const Real& x, Precision work) {
  const Real xw = x.rounded(work);
  const Real half_f = sqrt(Real(5L, work)) * Real(fibonacci(k), work) / 2;
  return exp(Real(lucas(k), work) * xw / 2) * sinh(half_f * xw) / half_f;
}

}  // namespace

std::vector<Integer> generating_coeffs(long k, long N) {
  require_nonzero_order(k);
  if (N < 1) throw DomainError(ErrorCode::InvalidArgument, "generating_coeffs needs N >= 1");
  // (1 − L_k x + (−1)^k x²) Σ c_n x^n = x  ⇒  c_n = L_k c_{n−1} − (−1)^k c_{n−2} + [n = 1].
  const Integer lk = lucas(k);
  const int sk = k % 2 == 0 ? 1 : -1;
  std::vector<Integer> c(as_index(N) + 1);
  for (long n = 0; n <= N; ++n) {
    Integer v = n == 1 ? 1 : 0;
    if (n >= 1) v += lk * c[as_index(n - 1)];
    if (n >= 2) v -= sk * c[as_index(n - 2)];
    c[as_index(n)] = v;
  }
  return c;
}

Complex TruncatedSeries::evaluate(const Complex& x) const {
  Complex acc(precision_bits);
  const Complex xw = x.rounded(precision_bits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * xw + *it;
  return acc;
}

TruncatedSeries golden_exp_series(long k, ExpVariant variant, long N, Precision precision_bits) {
  require_nonzero_order(k);
  if (N < 1) throw DomainError(ErrorCode::InvalidArgument, "truncation order must be >= 1");
  const auto f = fib_divisor_sequence(k, N);
  TruncatedSeries s;
  s.truncation_order = N;
  s.precision_bits = precision_bits;
  s.coeffs.reserve(as_index(N) + 1);
  Integer factorial = 1;
  for (long n = 0; n <= N; ++n) {
    if (n > 0) factorial *= f[as_index(n)];
    const int sign = variant == ExpVariant::E ? binomial_twist_sign(k, n) : 1;
    Rational c(Integer(sign), factorial);
    c.canonicalize();
    s.coeffs.emplace_back(Real(c, precision_bits));
  }
  return s;
}

SeriesValue golden_exp_eval(long k, ExpVariant variant, const Complex& x, long N, Precision precision_bits) {
  require_nonzero_order(k);
  if (N < 1) throw DomainError(ErrorCode::InvalidArgument, "truncation order must be >= 1");
  const Precision work = precision_bits + kSumGuardBits;
  const auto series = golden_exp_series(k, variant, N, work);
  SeriesValue out{series.evaluate(x).rounded(precision_bits), infinity(precision_bits)};

  // |term_{n+1} / term_n| = |x| / |F_{n+1}^(k)|, nonincreasing in n since |F_n^(k)| is nondecreasing.
  const Real ax = abs(x.rounded(work));
  const Real last = ax.is_zero() ? Real(work) : pow(ax, N) * abs(series.coeffs.back().re);
  const Real ratio = ax / Real(Integer(abs(fib_divisor(N + 1, k))), work);
  if (ratio < 1L) out.tail_bound = (last * ratio / (1L - ratio)).rounded(precision_bits);
  return out;
}

NumericFunction golden_exp_function(long k, ExpVariant variant, Complex lambda, long N) {
  require_nonzero_order(k);
  std::string label = std::string(variant == ExpVariant::e ? "e" : "E") + "_F^(lambda*x), k=" + std::to_string(k);
  return {[k, variant, lambda = std::move(lambda), N](const Complex& x, Precision bits) {
            return golden_exp_eval(k, variant, lambda * x, N, bits).value;
          },
          std::move(label)};
}

void IdentityReport::recompute_residual() { residual = abs(lhs - rhs); }

IdentityReport entire_gf_residual(long k, const Real& x, long N, Precision precision_bits) {
  require_nonzero_order(k);
  if (N < 1) throw DomainError(ErrorCode::InvalidArgument, "truncation order must be >= 1");
  const Precision work = precision_bits + cancellation_guard(k, std::fabs(x.to_double()));
  const Real lhs = divisor_exponential_sum(k, x, Parity::all, N, work);
  const Real rhs = entire_gf_closed_form(k, x, work);
  return make_report("entire_gf", k, x, lhs, rhs, precision_bits);
}

std::vector<IdentityReport> identity_suite(long k, Precision precision_bits) {
  require_nonzero_order(k);
  std::vector<IdentityReport> out;

  // Summation formulas: Σ_{n≥0} F_n^(k)/n! and Σ_{n≥0} F_{nk}/n! = F_k Σ F_n^(k)/n!.
  {
    const Precision work = precision_bits + cancellation_guard(k, 1.0);
    const long N = adaptive_order(k, 1.0, work);
    const Real one(1L, work);
    out.push_back(make_report("sum.divisor_over_factorial", k, one,
                              divisor_exponential_sum(k, one, Parity::all, N, work),
                              entire_gf_closed_form(k, one, work), precision_bits));
    Real lhs(work);
    Real inv_factorial(1L, work);
    for (long n = 1; n <= N; ++n) {
      inv_factorial = inv_factorial / n;
      lhs += inv_factorial * fibonacci(n * k);
    }
    const Real rhs = entire_gf_closed_form(k, one, work) * fibonacci(k);
    out.push_back(make_report("sum.fibonacci_multiple_over_factorial", k, one, lhs, rhs, precision_bits));
  }

  for (const bool even_list : {false, true}) {
    const Precision probe = precision_bits + 64;
    for (const auto& probe_pt : battery_points(k, even_list, probe)) {
      const double ax = std::fabs(probe_pt.x.to_double());
      const Precision work = precision_bits + cancellation_guard(k, ax);
      // Recompute the point at full working precision.
      BatteryPoint pt;
      for (auto& candidate : battery_points(k, even_list, work)) {
        if (candidate.label == probe_pt.label) pt = std::move(candidate);
      }
      const long N = adaptive_order(k, ax, work);
      const Real lhs = divisor_exponential_sum(k, pt.x, even_list ? Parity::even : Parity::odd, N, work);
      const Real rhs = battery_rhs(k, pt, even_list, work);
      out.push_back(make_report((even_list ? "even." : "odd.") + pt.label, k, pt.x, lhs, rhs, precision_bits));
    }
  }

  // x = π/(√5 F_k): the sinc factor is 2/π.
  {
    const Precision probe = precision_bits + 64;
    const double ax =
        std::fabs((pi(probe) / (sqrt(Real(5L, probe)) * Real(fibonacci(k), probe))).to_double());
    const Precision work = precision_bits + cancellation_guard(k, ax);
    const long N = adaptive_order(k, ax, work);
    const Real p = pi(work);
    const Real x = p / (sqrt(Real(5L, work)) * Real(fibonacci(k), work));
    const Real angle = Real(lucas(k), work) * x / 2;
    out.push_back(make_report("odd.pi_over_sqrt5_fk", k, x, divisor_exponential_sum(k, x, Parity::odd, N, work),
                              2 * cos(angle) / p, precision_bits));
    out.push_back(make_report("even.pi_over_sqrt5_fk", k, x, divisor_exponential_sum(k, x, Parity::even, N, work),
                              2 * sin(angle) / p, precision_bits));
  }
  return out;
}

BivariatePolynomial golden_analytic(long k, const std::vector<ComplexQuadratic>& coeffs) {
  require_nonzero_order(k);
  BivariatePolynomial f;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n].is_zero()) continue;
    // (x + iy)^n_F is the binomial in (x, y) with y scaled by i.
    f += golden_binomial_xy(k, static_cast<long>(n), BinomialSign::plus).scaled_y(ComplexQuadratic::i()) * coeffs[n];
  }
  return f;
}

AnalyticResiduals analytic_residuals(long k, const std::vector<ComplexQuadratic>& coeffs, const QuadraticNumber& x,
                                     const QuadraticNumber& y) {
  const BivariatePolynomial f = golden_analytic(k, coeffs);
  const BivariatePolynomial u = f.real_part();
  const BivariatePolynomial v = f.imag_part();
  const auto dx = [k](const BivariatePolynomial& p) { return golden_derivative_x(k, p); };
  const auto dy = [k](const BivariatePolynomial& p) { return golden_derivative_y(-k, p); };
  const auto at = [&](const BivariatePolynomial& p) { return p.evaluate(x, y).re; };
  return {at(dx(u) - dy(v)), at(dy(u) + dx(v)), at(dx(dx(u)) + dy(dy(u))), at(dx(dx(v)) + dy(dy(v)))};
}

}  // namespace golden
