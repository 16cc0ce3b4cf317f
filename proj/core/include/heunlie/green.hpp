#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "heunlie/distribution.hpp"
#include "heunlie/heun.hpp"

namespace heunlie {

/// eps0 + eps1 x + eps2 x^2 in the dual variable s, for one summation
/// index m_kl.
struct SymbolCoeffs {
  Polynomial eps0, eps1, eps2;
  int m_kl = 1;
  int l = 0;
};

/// eps0 = (m-1)[(1+a)(m-2-2is) + rho] + i s sigma + tau (m+1)
/// eps1 = (2(1+a)(m-1) + rho + tau) i s - s^2 + (m+1)(sigma - (1+a) m) + n(n-1)/2
/// eps2 = -2 s^2
SymbolCoeffs symbol_coeffs(int m_kl, int l, const EsScalars& es);

/// Roots (-eps1 +- sqrt(eps1^2 - 4 eps0 eps2)) / (2 eps0) at s.
/// DegenerateQuadratic when eps0(s) = 0.
std::pair<std::complex<double>, std::complex<double>> eta_roots(const SymbolCoeffs& sc, std::complex<double> s);
std::pair<Surd, Surd> eta_roots(const SymbolCoeffs& sc, const CRat& s);

/// Default summation bound sigma - rho. Throws NonIntegerExponents when the
/// scalars are not positive integers and InvalidParams when the bound is < 1.
int p_bound(const EsScalars& es);

struct GreenKernel {
  Polynomial prefactor;      // sum_{m=1}^p (iw)^(m-1)/(m-1)!
  Distribution delta_part;   // scalar * delta(z)
  CRat scalar;
  int n = 0;
  int p = 1;
  CRat s_eval;
};

/// sum_k sum_l h_kl a^(-l) with h_kl = C(sigma-1,k) C(tau-1,l).
CRat weight_sum(const EsScalars& es);

/// K_p = weight_sum * sum_{m=1}^p (-1)^(m-1) eps0(m; s_eval).
CRat kp_constant(const EsScalars& es, std::optional<int> p = std::nullopt, const CRat& s_eval = CRat());

GreenKernel green_kernel(const EsScalars& es, std::optional<int> p = std::nullopt, const CRat& s_eval = CRat());
GreenKernel green_kernel(int n, const HeunParams& params, std::optional<int> p = std::nullopt,
                         const CRat& s_eval = CRat());

enum class Sign { Plus, Minus };

/// (K_p / E) delta(w). Sign only selects which of G+ / G- is meant; delta is
/// even, so both give the same distribution. ZeroEigenvalue when E = 0.
Distribution green_coincidence(const EsScalars& es, Sign sign, const CRat& E, std::optional<int> p = std::nullopt,
                               const CRat& s_eval = CRat());

/// omega(0) for the weight built from (rho, sigma, tau, a).
CRat omega_at_zero(const EsScalars& es);

/// |K_p|^2 |omega(0)|^2.
Rational hs_norm_sq(const EsScalars& es, std::optional<int> p = std::nullopt, const CRat& s_eval = CRat());

/// H(lambda) with H(0) = 1/2.
Rational heaviside(const Rational& lambda);

struct SSFValue {
  Distribution kernel;
  Rational lambda;
  Rational step;
};

/// G scaled by H(lambda).
SSFValue ssf(const Rational& lambda, const Distribution& G);

/// <phi(z) delta_part, 1>, the kernel paired with 1 at coincidence.
CRat trace_green(const GreenKernel& G);

}  // namespace heunlie
