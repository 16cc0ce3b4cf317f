#include "heunlie/green.hpp"

#include "heunlie/distsol.hpp"
#include "heunlie/errors.hpp"

namespace heunlie {

SymbolCoeffs symbol_coeffs(int m_kl, int l, const EsScalars& es) {
  const CRat i = CRat::imaginary_unit();
  const CRat m(m_kl);
  const CRat one(1);
  const CRat a1 = one + es.a;
  const CRat nn(es.n);

  SymbolCoeffs sc;
  sc.m_kl = m_kl;
  sc.l = l;
  sc.eps0 = Polynomial(std::vector<CRat>{(m - one) * (a1 * (m - CRat(2)) + es.rho) + es.tau * (m + one),
                                         CRat(-2) * i * a1 * (m - one) + i * es.sigma});
  sc.eps1 = Polynomial(std::vector<CRat>{(m + one) * (es.sigma - a1 * m) + nn * (nn - one) / CRat(2),
                                         (CRat(2) * a1 * (m - one) + es.rho + es.tau) * i, CRat(-1)});
  sc.eps2 = Polynomial::monomial(CRat(-2), 2);
  return sc;
}

std::pair<std::complex<double>, std::complex<double>> eta_roots(const SymbolCoeffs& sc, std::complex<double> s) {
  const std::complex<double> e0 = sc.eps0.eval(s);
  const std::complex<double> e1 = sc.eps1.eval(s);
  const std::complex<double> e2 = sc.eps2.eval(s);
  if (e0 == 0.0) throw DegenerateQuadratic("eps0(s) = 0");
  const std::complex<double> root = std::sqrt(e1 * e1 - 4.0 * e0 * e2);
  return {(-e1 + root) / (2.0 * e0), (-e1 - root) / (2.0 * e0)};
}

std::pair<Surd, Surd> eta_roots(const SymbolCoeffs& sc, const CRat& s) {
  const CRat e0 = sc.eps0.eval(s);
  if (e0.is_zero()) throw DegenerateQuadratic("eps0(s) = 0 at s = " + s.str());
  return quadratic_roots(e0, sc.eps1.eval(s), sc.eps2.eval(s));
}

namespace {

struct IntScalars {
  int rho, sigma, tau;
};

IntScalars integer_scalars(const EsScalars& es) {
  const WeightExpansion w = weight_expansion(es.rho, es.sigma, es.tau, es.a);
  return {w.rho, w.sigma, w.tau};
}

int resolve_p(const EsScalars& es, std::optional<int> p) {
  if (!p) return p_bound(es);
  if (*p < 1) throw InvalidParams("summation bound p must be >= 1, got " + std::to_string(*p));
  return *p;
}

// sum_{m=1}^p (-1)^(m-1) eps0(m; s) w_m, with w_m = (m-1)! or 1.
CRat alternating_eps0(const EsScalars& es, int p, const CRat& s, bool with_factorial) {
  CRat total;
  for (int m = 1; m <= p; ++m) {
    CRat term = symbol_coeffs(m, 0, es).eps0.eval(s);
    if (with_factorial) term *= CRat(Rational(factorial(m - 1)));
    if ((m - 1) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

int p_bound(const EsScalars& es) {
  const IntScalars s = integer_scalars(es);
  const int p = s.sigma - s.rho;
  if (p < 1) throw InvalidParams("summation bound sigma - rho = " + std::to_string(p) + " is < 1");
  return p;
}

CRat weight_sum(const EsScalars& es) {
  const IntScalars s = integer_scalars(es);
  CRat total;
  for (int k = 0; k < s.sigma; ++k) {
    for (int l = 0; l < s.tau; ++l) {
      total += CRat(Rational(binomial(s.sigma - 1, k) * binomial(s.tau - 1, l))) * pow(es.a, static_cast<long>(-l));
    }
  }
  return total;
}

CRat kp_constant(const EsScalars& es, std::optional<int> p, const CRat& s_eval) {
  return weight_sum(es) * alternating_eps0(es, resolve_p(es, p), s_eval, false);
}

GreenKernel green_kernel(const EsScalars& es, std::optional<int> p, const CRat& s_eval) {
  GreenKernel g;
  g.n = es.n;
  g.p = resolve_p(es, p);
  g.s_eval = s_eval;
  std::vector<CRat> pre;
  for (int m = 1; m <= g.p; ++m) {
    pre.push_back(pow(CRat::imaginary_unit(), static_cast<long>(m - 1)) / CRat(Rational(factorial(m - 1))));
  }
  g.prefactor = Polynomial(std::move(pre));
  g.scalar = weight_sum(es) * alternating_eps0(es, g.p, s_eval, true);
  g.delta_part = Distribution::delta(0, CRat(), g.scalar);
  return g;
}

GreenKernel green_kernel(int n, const HeunParams& params, std::optional<int> p, const CRat& s_eval) {
  return green_kernel(es_scalars(n, params), p, s_eval);
}

Distribution green_coincidence(const EsScalars& es, Sign /*sign*/, const CRat& E, std::optional<int> p,
                               const CRat& s_eval) {
  if (E.is_zero()) throw ZeroEigenvalue("green_coincidence: E = 0");
  return Distribution::delta(0, CRat(), kp_constant(es, p, s_eval) / E);
}

CRat omega_at_zero(const EsScalars& es) {
  return weight_expansion(es.rho, es.sigma, es.tau, es.a).omega_at_zero();
}

Rational hs_norm_sq(const EsScalars& es, std::optional<int> p, const CRat& s_eval) {
  return Rational(kp_constant(es, p, s_eval).norm() * omega_at_zero(es).norm());
}

Rational heaviside(const Rational& lambda) {
  const int s = sgn(lambda);
  if (s > 0) return Rational(1);
  if (s < 0) return Rational(0);
  return Rational(1, 2);
}

SSFValue ssf(const Rational& lambda, const Distribution& G) {
  const Rational step = heaviside(lambda);
  return {G * CRat(step), lambda, step};
}

CRat trace_green(const GreenKernel& G) { return pair(multiply(G.prefactor, G.delta_part), Polynomial(CRat(1))); }

}  // namespace heunlie
