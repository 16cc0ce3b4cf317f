#include <gtest/gtest.h>

#include <complex>

#include "heunlie/heunlie.hpp"
#include "support/random.hpp"

namespace heunlie {
namespace {

using testing::Draw;
using cd = std::complex<double>;

CRat q(long n, long d = 1) { return CRat::fraction(n, d); }
CRat ff(long k, long m) { return CRat(Rational(falling_factorial(k, m))); }

// naive product, independent of the library's BigInt path
long naive_ff(long k, long m) {
  long r = 1;
  for (long i = 0; i < m; ++i) r *= k - i;
  return r;
}

RecurrenceSpec spec(int l, const CRat& a, const CRat& rho, const CRat& sigma, const CRat& tau, const CRat& ab,
                    const CRat& E) {
  RecurrenceSpec s;
  s.l = l;
  s.a = a;
  s.rho = rho;
  s.sigma = sigma;
  s.tau = tau;
  s.abProduct = ab;
  s.E = E;
  return s;
}

RecurrenceSpec random_spec(Draw& d) {
  return spec(static_cast<int>(d.integer(1, 4)), d.singular_point(), d.rational(), d.rational(), d.rational(),
              d.nonzero_rational(), d.nonzero_rational());
}

// Branch equations written out term by term from the falling factorials.
CRat real_lhs(const RecurrenceSpec& s, long k, const CRat& cm2, const CRat& cm1, const CRat& c) {
  const long l = s.l;
  return (ff(k + 2, l + 2) - s.a * ff(k + 2, l)) * cm2 - (s.rho * ff(k + 1, l + 1) - s.tau * ff(k + 1, l - 1)) * cm1 +
         s.abProduct * ff(k, l) * c;
}

CRat imag_lhs(const RecurrenceSpec& s, long k, const CRat& cm2, const CRat& cm1, const CRat& c) {
  const long l = s.l;
  return -((CRat(1) + s.a) * ff(k + 2, l + 1) - s.a * ff(k + 2, l)) * cm2 + ff(k + 1, l) * s.sigma * cm1 +
         s.E * ff(k, l - 1) * c;
}

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(5, 2), 20);
  for (long k = -5; k <= 5; ++k) EXPECT_EQ(falling_factorial(k, 0), 1);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_THROW(falling_factorial(3, -1), InvalidParams);
  for (long k = -6; k <= 10; ++k) {
    for (long m = 0; m <= 8; ++m) {
      EXPECT_EQ(falling_factorial(k, m), naive_ff(k, m)) << k << "," << m;
      if (k >= 0 && k < m) {
        EXPECT_EQ(falling_factorial(k, m), 0);
      }
    }
  }
  EXPECT_EQ(falling_factorial(40, 30), factorial(40) / factorial(10));
}

TEST(WeightExpansion, Examples) {
  const WeightExpansion w1 = weight_expansion(4, 1, 1, CRat(2));
  ASSERT_EQ(w1.h.size(), 1u);
  EXPECT_EQ(w1.h[0][0], CRat(1));
  EXPECT_EQ(w1.offset(), 3);
  EXPECT_EQ(w1.reassemble(), Polynomial::monomial(CRat(1), 3));

  const WeightExpansion w = weight_expansion(1, 2, 2, CRat(2));
  EXPECT_EQ(w.h[0][0], CRat(2));
  EXPECT_EQ(w.h[0][1], CRat(-1));
  EXPECT_EQ(w.h[1][0], CRat(-2));
  EXPECT_EQ(w.h[1][1], CRat(1));
  EXPECT_EQ(w.reassemble(), Polynomial::linear(CRat(1)) * Polynomial::linear(CRat(2)));
}

TEST(WeightExpansion, Errors) {
  EXPECT_THROW(weight_expansion(0, 1, 1, CRat(2)), NonIntegerExponents);
  EXPECT_THROW(weight_expansion(q(1, 2), CRat(1), CRat(1), CRat(2)), NonIntegerExponents);
  EXPECT_THROW(weight_expansion(CRat(1), CRat(Rational(1), Rational(1)), CRat(1), CRat(2)), NonIntegerExponents);
  EXPECT_THROW(weight_expansion(1, 1, 1, CRat(1)), InvalidParams);
  EXPECT_THROW(weight_expansion(1, 1, 1, CRat(0)), InvalidParams);
}

TEST(WeightExpansion, ReassemblesTheProduct) {
  Draw d(51);
  for (int rho = 1; rho <= 4; ++rho) {
    for (int sigma = 1; sigma <= 6; ++sigma) {
      for (int tau = 1; tau <= 6; ++tau) {
        const CRat a = d.singular_point();
        const Polynomial want = Polynomial::monomial(CRat(1), rho - 1) * pow(Polynomial::linear(CRat(1)), sigma - 1) *
                                pow(Polynomial::linear(a), tau - 1);
        const WeightExpansion w = weight_expansion(rho, sigma, tau, a);
        EXPECT_EQ(w.reassemble(), want);
        EXPECT_EQ(w.omega_at_zero(), want.coeff(0));
      }
    }
  }
}

TEST(RecurReal, Examples) {
  const RecurrenceSpec s = spec(1, CRat(2), CRat(1), CRat(1), CRat(1), CRat(1), CRat(1));
  EXPECT_EQ(recur_real(s, CRat(0), CRat(0), 5), CRat(0));
  EXPECT_THROW(recur_real(s, CRat(1), CRat(0), 0), DegenerateLeading);
  const CRat c2 = recur_real(s, CRat(1), CRat(0), 2);
  EXPECT_EQ(c2, CRat(-8));
  EXPECT_EQ(real_lhs(s, 2, CRat(1), CRat(0), c2), CRat(0));
  const cd c2f = recur_real(s, cd(1), cd(0), 2);
  EXPECT_NEAR(std::abs(c2f - cd(-8)), 0, 1e-12);
}

TEST(RecurReal, RaisesExactlyOnExcludedRange) {
  Draw d(52);
  for (int t = 0; t < 20; ++t) {
    const RecurrenceSpec s = random_spec(d);
    for (long k = 0; k <= s.l + 3; ++k) {
      if (k < s.l) {
        EXPECT_THROW(recur_real(s, d.crat(), d.crat(), k), DegenerateLeading) << "k=" << k << " l=" << s.l;
      } else {
        EXPECT_NO_THROW(recur_real(s, d.crat(), d.crat(), k));
      }
    }
  }
  RecurrenceSpec zero_ab = random_spec(d);
  zero_ab.abProduct = CRat(0);
  EXPECT_THROW(recur_real(zero_ab, CRat(1), CRat(1), 9), DegenerateLeading);
}

TEST(RecurImag, Examples) {
  const RecurrenceSpec s = spec(1, CRat(1), CRat(0), CRat(0), CRat(0), CRat(0), CRat(1));
  EXPECT_EQ(recur_imag(s, CRat(0), CRat(0), 4), CRat(0));
  EXPECT_EQ(recur_imag(s, CRat(1), CRat(0), 3), CRat(35));
  EXPECT_EQ(imag_lhs(s, 3, CRat(1), CRat(0), CRat(35)), CRat(0));

  const RecurrenceSpec s3 = spec(3, CRat(2), CRat(0), CRat(1), CRat(0), CRat(0), CRat(1));
  EXPECT_THROW(recur_imag(s3, CRat(1), CRat(1), 1), DegenerateLeading);
  EXPECT_NO_THROW(recur_imag(s3, CRat(1), CRat(1), 2));
  RecurrenceSpec zeroE = s3;
  zeroE.E = CRat(0);
  EXPECT_THROW(recur_imag(zeroE, CRat(1), CRat(1), 7), DegenerateLeading);
}

TEST(ForwardSolve, SatisfiesBothBranchesExactly) {
  Draw d(53);
  for (int t = 0; t < 40; ++t) {
    const RecurrenceSpec s = random_spec(d);
    const CRat c0 = d.crat(), c1 = d.crat();
    for (Branch b : {Branch::Real, Branch::Imag}) {
      const std::vector<CRat> c = forward_solve(s, b, c0, c1, 14);
      ASSERT_EQ(c.size(), 15u);
      const long k0 = std::max<long>(2, first_admissible_k(s, b));
      for (long k = k0; k <= 14; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        const CRat lhs = b == Branch::Real ? real_lhs(s, k, c[ks - 2], c[ks - 1], c[ks])
                                           : imag_lhs(s, k, c[ks - 2], c[ks - 1], c[ks]);
        EXPECT_EQ(lhs, CRat(0)) << branch_name(b) << " k=" << k;
      }
      for (const auto& r : residual_check(c, s, b)) EXPECT_EQ(r.value, CRat(0));
    }
  }
}

TEST(ForwardSolve, FirstAdmissibleIndex) {
  const RecurrenceSpec s = spec(3, CRat(2), CRat(1), CRat(1), CRat(1), CRat(1), CRat(1));
  EXPECT_EQ(first_admissible_k(s, Branch::Real), 3);
  EXPECT_EQ(first_admissible_k(s, Branch::Imag), 2);
  RecurrenceSpec bad = s;
  bad.abProduct = CRat(0);
  EXPECT_THROW(forward_solve(bad, Branch::Real, CRat(1), CRat(0), 8), DegenerateLeading);
}

TEST(ResidualCheck, ZeroSequence) {
  Draw d(54);
  const RecurrenceSpec s = random_spec(d);
  const std::vector<CRat> zeros(10);
  for (Branch b : {Branch::Real, Branch::Imag}) {
    for (const auto& r : residual_check(zeros, s, b)) EXPECT_EQ(r.value, CRat(0));
  }
}

TEST(ClosedFormReal, RootsSolveTheQuadratic) {
  Draw d(55);
  for (int t = 0; t < 60; ++t) {
    const RecurrenceSpec s = random_spec(d);
    const long k = d.integer(s.l, s.l + 6);
    const CRat A = s.abProduct * ff(k, s.l);
    const CRat B = -(s.rho * ff(k + 1, s.l + 1) - s.tau * ff(k + 1, s.l - 1));
    const CRat C = ff(k + 2, s.l + 2) - s.a * ff(k + 2, s.l);
    const auto [e1, e2] = closed_form_roots_real(s, k);
    EXPECT_TRUE(eval_quadratic(A, B, C, e1 + e2).is_zero());
    EXPECT_TRUE(eval_quadratic(A, B, C, e1 - e2).is_zero());
    // brute-force float roots
    const cd disc = std::sqrt((B * B - CRat(4) * A * C).to_complex());
    const cd r1 = (-B.to_complex() + disc) / (2.0 * A.to_complex());
    const cd r2 = (-B.to_complex() - disc) / (2.0 * A.to_complex());
    const cd s1 = (e1 + e2).to_complex(), s2 = (e1 - e2).to_complex();
    const double scale = 1 + std::abs(r1) + std::abs(r2);
    EXPECT_TRUE((std::abs(s1 - r1) < 1e-9 * scale && std::abs(s2 - r2) < 1e-9 * scale) ||
                (std::abs(s1 - r2) < 1e-9 * scale && std::abs(s2 - r1) < 1e-9 * scale));
  }
}

TEST(ClosedFormReal, DoubleRoot) {
  // A = 2, B = -4, C = 24 - 4a = 2 at k = 2: discriminant 0
  const RecurrenceSpec s = spec(1, q(11, 2), CRat(1), CRat(0), CRat(2), CRat(1), CRat(1));
  const auto [e1, e2] = closed_form_roots_real(s, 2);
  EXPECT_TRUE(e2.is_zero());
  EXPECT_EQ(e1, Surd(CRat(1)));
  EXPECT_THROW(closed_form_roots_real(s, 0), DegenerateLeading);
}

TEST(ClosedFormImag, PrintedPairAndItsResidual) {
  const RecurrenceSpec s = spec(1, CRat(2), CRat(0), CRat(2), CRat(0), CRat(0), CRat(2));
  EXPECT_EQ(closed_form_roots_imag(s, 2).first, Surd(CRat(-3)));
  RecurrenceSpec s0 = s;
  s0.sigma = CRat(0);
  EXPECT_TRUE(closed_form_roots_imag(s0, 2).first.is_zero());

  // t^2 coefficient E (k)_(l-1), t coefficient (k+1)_l sigma, constant -[...]
  const long k = 2;
  const CRat A = s.E * ff(k, s.l - 1);
  const CRat B = ff(k + 1, s.l) * s.sigma;
  const CRat C = -((CRat(1) + s.a) * ff(k + 2, s.l + 1) - s.a * ff(k + 2, s.l));
  const auto [h1, h2] = closed_form_roots_imag(s, k);
  const Surd printed = eval_quadratic(A, B, C, h1 + h2);
  EXPECT_FALSE(printed.is_zero());
  // the textbook formula does solve it
  const auto [r1, r2] = quadratic_roots(A, B, C);
  EXPECT_TRUE(eval_quadratic(A, B, C, r1).is_zero());
  EXPECT_TRUE(eval_quadratic(A, B, C, r2).is_zero());
}

TEST(ClosedFormCk, ClosedFormArithmetic) {
  Draw d(56);
  const RecurrenceSpec s = random_spec(d);
  const int K = 10;
  const auto one = paper_ck(cd(1), cd(0), Branch::Real, s, K);
  const auto two = paper_ck(cd(0), cd(1), Branch::Real, s, K);
  const auto half = paper_ck(cd(0.5), cd(0.5), Branch::Real, s, K);
  ASSERT_EQ(one.size(), static_cast<std::size_t>(K + 1));
  EXPECT_EQ(one[0], cd(1));
  for (int k = s.l; k <= K; ++k) {
    const auto [e1, e2] = closed_form_roots_real(s, k);
    const cd want = std::pow((e1 + e2).to_complex(), k);
    const auto ks = static_cast<std::size_t>(k);
    EXPECT_LT(std::abs(one[ks] - want), 1e-9 * (1 + std::abs(want)));
    const cd avg = 0.5 * (one[ks] + two[ks]);
    EXPECT_LT(std::abs(half[ks] - avg), 1e-9 * (1 + std::abs(avg)));
  }
}

TEST(ClosedFormCk, FailsTheRecurrenceWhenRootsVary) {
  const RecurrenceSpec s = spec(1, CRat(2), CRat(1), CRat(1), CRat(1), CRat(1), CRat(1));
  const auto c = paper_ck(cd(1), cd(0), Branch::Real, s, 12);
  double worst = 0;
  for (const auto& r : residual_check(c, s, Branch::Real)) worst = std::max(worst, std::abs(r.value));
  EXPECT_GT(worst, 1e-6);
}

TEST(AssembleDistribution, Examples) {
  EXPECT_EQ(assemble_distribution({CRat(1)}), Distribution::delta());
  EXPECT_EQ(assemble_distribution({CRat(0), CRat(1)}), Distribution::delta(1));
  Draw d(57);
  std::vector<CRat> c(8);
  for (auto& x : c) x = d.crat();
  const Distribution psi = assemble_distribution(c);
  for (int m = 0; m < 8; ++m) {
    const CRat sign = m % 2 == 0 ? CRat(1) : CRat(-1);
    EXPECT_EQ(pair(psi, Polynomial::monomial(CRat(1), m)), sign * CRat(Rational(factorial(m))) * c[static_cast<std::size_t>(m)]);
  }
}

}  // namespace
}  // namespace heunlie
