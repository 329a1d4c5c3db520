#include <gtest/gtest.h>

#include "golden/errors.hpp"
#include "golden/quantumapps.hpp"
#include "golden/sequences.hpp"
#include "oracles.hpp"

using namespace golden;

namespace {

constexpr Precision kBits = 128;

Real tol20() { return Real::parse("1e-20", kBits); }

// 2|ad − bc| / ‖ψ‖² evaluated in floating point from the amplitudes.
Real pure_concurrence_oracle(const PureState& s) {
  std::vector<Real> a;
  for (const auto& x : s.amplitudes) a.push_back(to_real(x, 2 * kBits));
  const Real n = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  return 2L * abs(a[0] * a[3] - a[1] * a[2]) / n;
}

}  // namespace

TEST(Antipodal, OrthogonalWithSharedNorm) {
  for (long k = -30; k <= 30; ++k) {
    if (k == 0) continue;
    const auto p = antipodal_qubits(k);
    EXPECT_TRUE((p.first[0] * p.second[0] + p.first[1] * p.second[1]).is_zero()) << k;
    EXPECT_EQ(p.first[0] * p.first[0] + p.first[1] * p.first[1], p.norm_sq);
    EXPECT_EQ(p.second[0] * p.second[0] + p.second[1] * p.second[1], p.norm_sq);
  }
  EXPECT_EQ(antipodal_qubits(1).norm_sq, oracle::phi() + 2);
  EXPECT_THROW(antipodal_qubits(0), DomainError);
}

TEST(Antipodal, LargeOrderApproachesBasis) {
  const auto p = antipodal_qubits(40);
  const Real ratio = to_real(p.first[0] / p.first[1], kBits);
  EXPECT_LT(ratio, Real::parse("1e-8", kBits));
}

TEST(MultiQubit, Examples) {
  const auto s = fibonacci_multiqubit(1, 2);
  EXPECT_EQ(s.amplitudes, (std::vector<QuadraticNumber>{0, 1, 1, 1}));
  EXPECT_EQ(s.norm_sq, QuadraticNumber(3));
  for (long k : {-3L, 1L, 7L}) {
    const auto one = fibonacci_multiqubit(k, 1);
    EXPECT_EQ(one.amplitudes, (std::vector<QuadraticNumber>{0, 1}));
  }
  const auto t = fibonacci_multiqubit(3, 3);
  EXPECT_EQ(t.norm_sq, QuadraticNumber(340));
  EXPECT_EQ(t.amplitudes[7], QuadraticNumber(17));
  EXPECT_EQ(t.amplitudes[3], QuadraticNumber(4));
  try {
    fibonacci_multiqubit(2, 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenOrderForState);
  }
}

TEST(MultiQubit, NormAndProbabilities) {
  for (long k = 1; k <= 9; k += 2) {
    for (long n = 1; n <= 10; ++n) {
      const auto s = fibonacci_multiqubit(k, n);
      Integer expected = 0;
      Integer binom = 1;
      for (long w = 1; w <= n; ++w) {
        binom = binom * (n - w + 1) / w;
        expected += binom * oracle::divisor(w, k) * oracle::divisor(w, k);
      }
      EXPECT_EQ(s.norm_sq, QuadraticNumber(expected));
      QuadraticNumber total = 0;
      for (const auto& p : s.probabilities()) total += p;
      EXPECT_EQ(total, QuadraticNumber(1));
    }
  }
}

TEST(MultiQubit, FromAmplitudesValidates) {
  EXPECT_THROW(PureState::from_amplitudes(2, 1, {1, 0, 0}), DomainError);
  EXPECT_THROW(PureState::from_amplitudes(1, 1, {0, 0}), DomainError);
}

TEST(Concurrence, ClosedForm) {
  EXPECT_EQ(concurrence_closed(1), Rational(2, 3));
  EXPECT_EQ(concurrence_closed(3), Rational(1, 9));
  for (long k = 1; k <= 20; ++k) EXPECT_EQ(concurrence_closed(k), concurrence_closed(-k));
  for (long k = 1; k + 2 <= 21; k += 2) EXPECT_GT(concurrence_closed(k), concurrence_closed(k + 2));
}

TEST(Concurrence, WoottersAgreesWithClosedForm) {
  for (long k = -15; k <= 15; k += 2) {
    const auto s = fibonacci_multiqubit(k, 2);
    const Real w = concurrence_wootters(s, kBits);
    const Real c(concurrence_closed(k), kBits);
    EXPECT_LT(abs(w - c), tol20()) << k;
    EXPECT_EQ(concurrence_pure(s), QuadraticNumber(concurrence_closed(k)));
    EXPECT_LT(abs(pure_concurrence_oracle(s) - c), tol20());
  }
}

TEST(Concurrence, ExtremeStates) {
  const auto bell = PureState::from_amplitudes(2, 1, {1, 0, 0, 1});
  EXPECT_LT(abs(concurrence_wootters(bell, kBits) - 1L), tol20());
  const auto product = PureState::from_amplitudes(2, 1, {1, 0, 0, 0});
  EXPECT_LT(concurrence_wootters(product, kBits), tol20());
  const auto tilted = PureState::from_amplitudes(2, 1, {oracle::phi(), 1, 2, QuadraticNumber(Rational(1, 3))});
  EXPECT_LT(abs(concurrence_wootters(tilted, kBits) - pure_concurrence_oracle(tilted)), tol20());
  const auto three = fibonacci_multiqubit(1, 3);
  try {
    concurrence_wootters(three, kBits);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongArity);
  }
}

TEST(Bell, SuperpositionsAreMaximallyEntangled) {
  for (long k = -10; k <= 10; ++k) {
    if (k == 0) continue;
    const auto states = bell_superpositions(k);
    for (const auto& s : states) {
      EXPECT_LT(abs(concurrence_wootters(s, kBits) - 1L), tol20()) << k;
      EXPECT_LT(abs(pure_concurrence_oracle(s) - 1L), tol20()) << k;
    }
    // |P+⟩ ∝ |00⟩ + |11⟩ and |G−⟩ ∝ |01⟩ − |10⟩ for every k.
    const auto& P = states[0].amplitudes;
    EXPECT_TRUE(P[1].is_zero() && P[2].is_zero());
    EXPECT_EQ(P[0], P[3]);
    const auto& G = states[3].amplitudes;
    EXPECT_TRUE(G[0].is_zero() && G[3].is_zero());
    EXPECT_EQ(G[1], -G[2]);
  }
}

TEST(Bell, MixingCoefficients) {
  const auto [x2, y2] = bell_mixing_coefficients(2);
  EXPECT_EQ(x2, QuadraticNumber::sqrt5() / 3);
  EXPECT_EQ(y2, QuadraticNumber(Rational(2, 3)));
  for (long k = -9; k <= 9; ++k) {
    if (k == 0) continue;
    const auto [x, y] = bell_mixing_coefficients(k);
    EXPECT_EQ(x * x + y * y, QuadraticNumber(1)) << k;
  }
  // Mixing fades as k grows.
  EXPECT_LT(to_real(bell_mixing_coefficients(30).second, kBits), Real::parse("1e-5", kBits));
}

TEST(Hecke, SamplesSatisfyTheCondition) {
  const TwoByTwoOperator P(2, QuadraticNumber(Rational(1), Rational(1, 2)), 1, 3);
  for (long k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    EXPECT_TRUE(is_hecke(hecke_diagonal_sample(k), k));
    EXPECT_TRUE(is_hecke(hecke_conjugated_sample(k, P), k));
  }
  EXPECT_FALSE(is_hecke(TwoByTwoOperator::identity(), 1));
  try {
    hecke_power(TwoByTwoOperator::identity(), 3, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHecke);
  }
}

TEST(Hecke, SmallPowers) {
  const auto R = hecke_diagonal_sample(3);
  EXPECT_EQ(hecke_power(R, 0, 3), TwoByTwoOperator::identity());
  EXPECT_EQ(hecke_power(R, 1, 3), R);
  // R² = B_k R + I with B_k = φ^k − φ^{−k}, which is L_k for odd k.
  EXPECT_EQ(repeated_power(R, 2), QuadraticNumber(lucas(3)) * R + TwoByTwoOperator::identity());
}

TEST(Hecke, OddOrdersMatchRepeatedProduct) {
  const TwoByTwoOperator P(QuadraticNumber(Rational(3, 2)), QuadraticNumber::sqrt5(), -1, 2);
  for (long k = -5; k <= 5; k += 2) {
    for (const auto& R : {hecke_diagonal_sample(k), hecke_conjugated_sample(k, P)}) {
      for (long n = 0; n <= 50; ++n) EXPECT_EQ(hecke_power(R, n, k), repeated_power(R, n)) << k << " " << n;
    }
  }
}

TEST(Hecke, EvenOrdersNeedTheShiftedRecurrence) {
  // For even k the roots φ^k, −φ^{−k} have sum φ^k − φ^{−k} ≠ L_k, so the
  // divisor formula cannot reproduce R^n; the general recurrence does.
  for (long k = -6; k <= 6; k += 2) {
    if (k == 0) continue;
    const auto R = hecke_diagonal_sample(k);
    EXPECT_NE(hecke_power(R, 2, k), repeated_power(R, 2)) << k;
    for (long n = 0; n <= 50; ++n) EXPECT_EQ(hecke_power_general(R, n, k), repeated_power(R, n)) << k << " " << n;
  }
}

TEST(TwoByTwo, InverseAndDeterminant) {
  const TwoByTwoOperator A(2, oracle::phi(), 1, 3);
  EXPECT_EQ(A * A.inverse(), TwoByTwoOperator::identity());
  EXPECT_EQ(A.determinant(), 6 - oracle::phi());
  EXPECT_TRUE((A - A).is_zero());
}
