#include "heunlie/heun.hpp"

#include "heunlie/errors.hpp"

namespace heunlie {

HeunParams::HeunParams(CRat a, CRat q, CRat alpha, CRat beta, CRat gamma, CRat delta, CRat epsilon)
    : a_(std::move(a)),
      q_(std::move(q)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)),
      epsilon_(std::move(epsilon)) {
  if (a_.is_zero() || a_ == CRat(1)) throw InvalidParams("a must avoid {0, 1}, got " + a_.str());
}

CRat HeunParams::constraint_residual() const { return alpha_ + beta_ + CRat(1) - gamma_ - delta_ - epsilon_; }

CRat check_constraint(const HeunParams& p) { return p.constraint_residual(); }

Polynomial heun_leading(const CRat& a) {
  return Polynomial::z() * Polynomial::linear(CRat(1)) * Polynomial::linear(a);
}

DiffOp build_expanded(const HeunParams& p) {
  const CRat& a = p.a();
  const CRat one(1);
  Polynomial d2(std::vector<CRat>{CRat(), a, -(one + a), one});
  Polynomial d1(std::vector<CRat>{p.gamma() * a, -((one + a) * p.gamma() + a * p.delta() + p.epsilon()),
                                  p.gamma() + p.delta() + p.epsilon()});
  Polynomial d0(std::vector<CRat>{-p.q(), p.alpha() * p.beta()});
  return DiffOp({d0, d1, d2});
}

DiffOp build_canonical_cleared(const HeunParams& p) {
  const Polynomial z = Polynomial::z();
  const Polynomial z_minus_1 = Polynomial::linear(CRat(1));
  const Polynomial z_minus_a = Polynomial::linear(p.a());
  // gamma/z + delta/(z-1) + epsilon/(z-a), each term multiplied by z(z-1)(z-a)
  const Polynomial first_order = p.gamma() * (z_minus_1 * z_minus_a) + p.delta() * (z * z_minus_a) +
                                 p.epsilon() * (z * z_minus_1);
  const Polynomial zeroth_order = p.alpha() * p.beta() * z - Polynomial(p.q());
  return DiffOp({zeroth_order, first_order, z * z_minus_1 * z_minus_a});
}

bool ExponentPair::matches(const CRat& x, const CRat& y) const {
  return (first == Surd(x) && second == Surd(y)) || (first == Surd(y) && second == Surd(x));
}

namespace {

ExponentPair finite_exponents(const DiffOp& op, const CRat& z0) {
  const Polynomial t2 = op.coeff(2).taylor_shift(z0);
  const Polynomial t1 = op.coeff(1).taylor_shift(z0);
  const Polynomial t0 = op.coeff(0).taylor_shift(z0);
  int m = 0;
  while (t2.coeff(m).is_zero()) ++m;
  if (m == 0) throw NotRegularSingular("z = " + z0.str() + " is an ordinary point");
  auto order_at_zero = [](const Polynomial& t) {
    if (t.is_zero()) return std::numeric_limits<int>::max();
    int k = 0;
    while (t.coeff(k).is_zero()) ++k;
    return k;
  };
  if (order_at_zero(t1) < m - 1 || order_at_zero(t0) < m - 2) {
    throw NotRegularSingular("z = " + z0.str() + " is an irregular singular point");
  }
  const CRat lead = t2.coeff(m);
  const CRat p0 = t1.coeff(m - 1) / lead;
  const CRat q0 = m >= 2 ? t0.coeff(m - 2) / lead : CRat();
  // r(r-1) + p0 r + q0
  auto [r1, r2] = quadratic_roots(CRat(1), p0 - CRat(1), q0);
  return {r1, r2};
}

ExponentPair infinite_exponents(const DiffOp& op) {
  const Polynomial& p2 = op.coeff(2);
  const int top = p2.degree() - 2;
  CRat quad = p2.leading();
  CRat lin = p2.leading();
  CRat constant;
  for (int k = 0; k < 2; ++k) {
    const Polynomial pk = op.coeff(k);
    if (pk.is_zero()) continue;
    const int excess = pk.degree() - k;
    if (excess > top) throw NotRegularSingular("infinity is an irregular singular point");
    if (excess < top) continue;
    // P_k acting on z^-r contributes lc(P_k) (-r)(-r-1)...(-r-k+1)
    if (k == 1) lin -= pk.leading();
    if (k == 0) constant += pk.leading();
  }
  auto [r1, r2] = quadratic_roots(quad, lin, constant);
  return {r1, r2};
}

}  // namespace

ExponentPair indicial_exponents(const DiffOp& op, const SingularPoint& point) {
  if (op.order() != 2) throw NotRegularSingular("indicial exponents need a second-order operator");
  if (std::holds_alternative<Infinity>(point)) return infinite_exponents(op);
  return finite_exponents(op, std::get<CRat>(point));
}

UEAExpr UEACoeffs::to_expr() const {
  UEAExpr e;
  e.add(cPlusZero, {Letter::Plus, Letter::Zero}).add(cPlusZero, {Letter::Zero, Letter::Plus});
  e.add(cPlusMinus, {Letter::Plus, Letter::Minus}).add(cPlusMinus, {Letter::Minus, Letter::Plus});
  e.add(cZeroMinus, {Letter::Zero, Letter::Minus}).add(cZeroMinus, {Letter::Minus, Letter::Zero});
  e.add(cPlus, {Letter::Plus}).add(cZero, {Letter::Zero}).add(cMinus, {Letter::Minus});
  e.add_constant(cConst);
  return e;
}

UEACoeffs uea_heun_coeffs(Spin j, const HeunParams& p) {
  const CRat jv = j.value();
  const CRat one(1);
  const CRat half = CRat::fraction(1, 2);
  const CRat& a = p.a();
  const CRat two_j_minus_1 = CRat(2) * jv - one;
  UEACoeffs c;
  c.cPlusZero = half;
  c.cPlusMinus = -(one + a) * half;
  c.cZeroMinus = a * half;
  c.cPlus = p.gamma() + p.delta() + p.epsilon() + CRat::fraction(3, 2) * two_j_minus_1;
  c.cZero = (two_j_minus_1 - p.gamma()) * (one + a) - p.delta() - p.epsilon();
  c.cMinus = a * (p.gamma() - two_j_minus_1 * half);
  c.cConst = jv * ((CRat(2) * (one - jv) + p.gamma()) * (one + a) + p.delta() + p.epsilon()) - p.q();
  return c;
}

UEAExpr uea_heun(Spin j, const HeunParams& p) { return uea_heun_coeffs(j, p).to_expr(); }

CRat theorem1_proviso(Spin j, const HeunParams& p) {
  const CRat jv = j.value();
  return CRat(8) * jv * jv + CRat(2) * jv * (p.alpha() + p.beta() - CRat(1)) + p.alpha() * p.beta();
}

ExpandedCoeffs extract_coeffs(const DiffOp& op, const CRat& q) {
  ExpandedCoeffs c;
  const Polynomial d1 = op.coeff(1);
  const Polynomial d0 = op.coeff(0);
  c.rho = d1.coeff(2);
  c.sigma = d1.coeff(1);
  c.tau = d1.coeff(0);
  c.abProduct = d0.coeff(1);
  c.constant = d0.coeff(0);
  c.qShift = c.constant + q;
  return c;
}

DiffOp assemble_from_coeffs(const ExpandedCoeffs& c, const CRat& a) {
  return DiffOp({Polynomial(std::vector<CRat>{c.constant, c.abProduct}),
                 Polynomial(std::vector<CRat>{c.tau, c.sigma, c.rho}), heun_leading(a)});
}

void DiscrepancyReport::add(std::string name, const CRat& paper, const CRat& oracle) {
  entries.push_back({std::move(name), paper, oracle, paper - oracle});
}

const DiscrepancyEntry* DiscrepancyReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

CRat es_condition(Spin j, const HeunParams& p) {
  return p.alpha() + p.beta() + CRat(3) * j.value() - CRat::fraction(1, 2);
}

UEAExpr uea_heun_es(int n, const HeunParams& p) {
  UEACoeffs c = uea_heun_coeffs(Spin(n), p);
  c.cPlus = CRat();
  return c.to_expr();
}

DiffOp es_operator(int n, const HeunParams& p) { return uea_expand(uea_heun_es(n, p), Spin(n)); }

EsScalars es_scalars(int n, const HeunParams& p) {
  const ExpandedCoeffs c = extract_coeffs(es_operator(n, p), p.q());
  return {n, c.rho, c.sigma, c.tau, c.abProduct, c.constant, p.a()};
}

CRat es_eigenvalue_statement(int n, const HeunParams& p) {
  const CRat nn(n);
  return nn * ((CRat(2) - nn + p.gamma()) * (p.a() + CRat(1)) + p.delta() + p.epsilon()) - p.q();
}

CRat es_eigenvalue_proof(int n, const HeunParams& p) {
  const CRat nn(n);
  return nn * ((nn - p.gamma()) * (p.a() + CRat(1)) - p.delta() - p.epsilon()) - p.q();
}

DiscrepancyReport verify_theorem1(Spin j, const HeunParams& p) {
  DiscrepancyReport report;
  const CRat jv = j.value();
  const CRat one(1);
  const CRat two(2);
  const CRat& a = p.a();
  const CRat gde = p.gamma() + p.delta() + p.epsilon();

  const UEACoeffs uc = uea_heun_coeffs(j, p);
  const DiffOp full = uea_expand(uc.to_expr(), j);
  const ExpandedCoeffs oc = extract_coeffs(full, p.q());

  const Polynomial lead = heun_leading(a);
  const Polynomial d2 = full.coeff(2);
  for (int k = 3; k >= 0; --k) {
    report.add("theorem1.D2[z^" + std::to_string(k) + "]", lead.coeff(k), d2.coeff(k));
  }
  report.add("theorem1.rho (gamma+delta+epsilon)", gde, oc.rho);
  report.add("theorem1.rho (alpha+beta+1)", p.alpha() + p.beta() + one, oc.rho);
  report.add("theorem1.sigma", (two * (two * jv - one) - p.gamma()) * (a + one) - p.delta() - p.epsilon(), oc.sigma);
  report.add("theorem1.tau", a * (p.gamma() - two * jv + one), oc.tau);
  report.add("theorem1.alpha_beta", -two * jv * (two * jv + p.alpha() + p.beta()), oc.abProduct);
  report.add("theorem1.q_j", jv * ((two * (one - jv) + p.gamma()) * (one + a) - p.delta() - p.epsilon()), oc.qShift);
  report.add("theorem1.J+ coefficient (alpha+beta+3j-1/2)", p.alpha() + p.beta() + CRat(3) * jv - CRat::fraction(1, 2),
             uc.cPlus);

  const int n = j.two_j();
  const CRat nn(n);
  const DiffOp es = es_operator(n, p);
  const ExpandedCoeffs ec = extract_coeffs(es, p.q());
  report.add("corollary.rho", CRat(3) * (one - nn) / two, ec.rho);
  report.add("corollary.sigma", (nn - one - p.gamma()) * (one + a) - p.delta() - p.epsilon(), ec.sigma);
  report.add("corollary.tau", a * (p.gamma() - (nn - one) / two), ec.tau);
  report.add("corollary.alpha_beta", nn * (nn - one) / two, ec.abProduct);
  report.add("corollary.q (statement)", -nn / two * ((two - nn + p.gamma()) * (one + a) - p.delta() - p.epsilon()),
             ec.qShift);
  report.add("corollary.q (proof)", -nn / two * ((nn - p.gamma()) * (one + a) - p.delta() - p.epsilon()), ec.qShift);
  report.add("corollary.E (statement) vs constant term", es_eigenvalue_statement(n, p), ec.constant);
  report.add("corollary.E (proof) vs constant term", es_eigenvalue_proof(n, p), ec.constant);
  return report;
}

DiscrepancyReport expanded_form_discrepancies(const HeunParams& p) {
  DiscrepancyReport report;
  const DiffOp op = build_expanded(p);
  const CRat one(1);
  report.add("expanded.D1[z^1]", -((one + p.a()) * p.gamma() + p.delta() + p.epsilon()), op.coeff(1).coeff(1));
  return report;
}

DiscrepancyReport exponent_discrepancies(const HeunParams& p) {
  DiscrepancyReport report;
  const DiffOp op = build_expanded(p);
  const CRat one(1);

  auto compare_pair = [&](const std::string& label, const SingularPoint& at, const CRat& listed_first,
                          const CRat& listed_second) {
    const ExponentPair ex = indicial_exponents(op, at);
    if (!ex.first.is_rational() || !ex.second.is_rational()) return;
    const CRat o1 = ex.first.rational();
    const CRat o2 = ex.second.rational();
    // pair the listed second exponent with an oracle root when possible
    const bool swap = (o2 == listed_second) && (o1 != listed_second);
    report.add("exponent@" + label + ".first", listed_first, swap ? o1 : (o1 == listed_second ? o2 : o1));
    report.add("exponent@" + label + ".second", listed_second, swap ? o2 : (o1 == listed_second ? o1 : o2));
  };
  compare_pair("0", CRat(), CRat(), one - p.gamma());
  compare_pair("1", one, one, one - p.delta());
  compare_pair("a", p.a(), p.a(), one - p.epsilon());

  // At infinity the printed pair is {inf, alpha*beta}; only the finite
  // member can be compared, against the oracle root other than alpha.
  const ExponentPair inf = indicial_exponents(op, Infinity{});
  if (inf.first.is_rational() && inf.second.is_rational()) {
    const CRat o1 = inf.first.rational();
    const CRat o2 = inf.second.rational();
    report.add("exponent@inf.second", p.alpha() * p.beta(), o1 == p.alpha() ? o2 : o1);
  }
  return report;
}

}  // namespace heunlie
