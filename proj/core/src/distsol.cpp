#include "heunlie/distsol.hpp"

#include <algorithm>

#include "heunlie/errors.hpp"

namespace heunlie {

BigInt falling_factorial(long k, long m) {
  if (m < 0) throw InvalidParams("falling_factorial: m must be >= 0");
  BigInt out = 1;
  for (long i = 0; i < m; ++i) {
    out *= k - i;
    if (out == 0) break;
  }
  return out;
}

namespace {

CRat ff(long k, long m) { return CRat(Rational(falling_factorial(k, m))); }

int positive_int(const CRat& x, const char* name) {
  const auto v = x.to_long();
  if (!v || *v < 1) throw NonIntegerExponents(std::string(name) + " = " + x.str() + " is not a positive integer");
  return static_cast<int>(*v);
}

}  // namespace

Polynomial WeightExpansion::reassemble() const {
  std::vector<CRat> coeffs(static_cast<std::size_t>(offset() + sigma + tau - 1));
  for (int m = 0; m < sigma; ++m) {
    for (int n = 0; n < tau; ++n) coeffs[static_cast<std::size_t>(m + n + offset())] += h[m][n];
  }
  return Polynomial(std::move(coeffs));
}

WeightExpansion weight_expansion(int rho, int sigma, int tau, const CRat& a) {
  if (rho < 1 || sigma < 1 || tau < 1) {
    throw NonIntegerExponents("weight exponents must be positive integers, got (" + std::to_string(rho) + ", " +
                              std::to_string(sigma) + ", " + std::to_string(tau) + ")");
  }
  if (a.is_zero() || a == CRat(1)) throw InvalidParams("a must avoid {0, 1}, got " + a.str());
  WeightExpansion w{rho, sigma, tau, a, {}};
  w.h.assign(static_cast<std::size_t>(sigma), std::vector<CRat>(static_cast<std::size_t>(tau)));
  for (int m = 0; m < sigma; ++m) {
    for (int n = 0; n < tau; ++n) {
      CRat v = CRat(Rational(binomial(sigma - 1, m) * binomial(tau - 1, n))) * pow(a, static_cast<long>(tau - n - 1));
      if ((sigma + tau + m + n) % 2 != 0) v = -v;
      w.h[m][n] = v;
    }
  }
  return w;
}

WeightExpansion weight_expansion(const CRat& rho, const CRat& sigma, const CRat& tau, const CRat& a) {
  const int r = positive_int(rho, "rho");
  const int s = positive_int(sigma, "sigma");
  const int t = positive_int(tau, "tau");
  return weight_expansion(r, s, t, a);
}

const char* branch_name(Branch b) { return b == Branch::Real ? "real" : "imag"; }

int first_admissible_k(const RecurrenceSpec& spec, Branch branch) {
  return branch == Branch::Real ? spec.l : spec.l - 1;
}

RecurrenceRow recurrence_row(const RecurrenceSpec& spec, Branch branch, long k) {
  if (spec.l < 1) throw InvalidParams("recurrence offset l must be >= 1");
  const long l = spec.l;
  if (branch == Branch::Real) {
    return {ff(k + 2, l + 2) - spec.a * ff(k + 2, l), -(spec.rho * ff(k + 1, l + 1) - spec.tau * ff(k + 1, l - 1)),
            spec.abProduct * ff(k, l)};
  }
  return {-((CRat(1) + spec.a) * ff(k + 2, l + 1) - spec.a * ff(k + 2, l)), ff(k + 1, l) * spec.sigma,
          spec.E * ff(k, l - 1)};
}

namespace {

const RecurrenceRow& require_lead(const RecurrenceRow& row, Branch branch, long k) {
  if (row.lead.is_zero()) {
    throw DegenerateLeading(std::string(branch_name(branch)) + " recurrence: coefficient of c_" + std::to_string(k) +
                            " vanishes");
  }
  return row;
}

CRat solve(const RecurrenceSpec& spec, Branch branch, const CRat& c_km2, const CRat& c_km1, long k) {
  const RecurrenceRow row = recurrence_row(spec, branch, k);
  require_lead(row, branch, k);
  return -(row.back2 * c_km2 + row.back1 * c_km1) / row.lead;
}

std::complex<double> solve(const RecurrenceSpec& spec, Branch branch, std::complex<double> c_km2,
                           std::complex<double> c_km1, long k) {
  const RecurrenceRow row = recurrence_row(spec, branch, k);
  require_lead(row, branch, k);
  return -(row.back2.to_complex() * c_km2 + row.back1.to_complex() * c_km1) / row.lead.to_complex();
}

}  // namespace

CRat recur_real(const RecurrenceSpec& spec, const CRat& c_km2, const CRat& c_km1, long k) {
  return solve(spec, Branch::Real, c_km2, c_km1, k);
}

std::complex<double> recur_real(const RecurrenceSpec& spec, std::complex<double> c_km2, std::complex<double> c_km1,
                                long k) {
  return solve(spec, Branch::Real, c_km2, c_km1, k);
}

CRat recur_imag(const RecurrenceSpec& spec, const CRat& c_km2, const CRat& c_km1, long k) {
  return solve(spec, Branch::Imag, c_km2, c_km1, k);
}

std::complex<double> recur_imag(const RecurrenceSpec& spec, std::complex<double> c_km2, std::complex<double> c_km1,
                                long k) {
  return solve(spec, Branch::Imag, c_km2, c_km1, k);
}

std::vector<CRat> forward_solve(const RecurrenceSpec& spec, Branch branch, const CRat& c0, const CRat& c1, int K) {
  if (K < 1) throw InvalidParams("forward_solve: K must be >= 1");
  const CRat& scalar = branch == Branch::Real ? spec.abProduct : spec.E;
  if (scalar.is_zero()) {
    throw DegenerateLeading(std::string(branch_name(branch)) + " recurrence: leading scalar is zero for every k");
  }
  std::vector<CRat> c{c0, c1};
  const int first = first_admissible_k(spec, branch);
  for (int k = 2; k <= K; ++k) {
    c.push_back(k < first ? CRat() : solve(spec, branch, c[k - 2], c[k - 1], k));
  }
  return c;
}

std::array<CRat, 3> root_quadratic(const RecurrenceSpec& spec, Branch branch, long k) {
  const RecurrenceRow row = recurrence_row(spec, branch, k);
  return {row.lead, row.back1, row.back2};
}

std::pair<Surd, Surd> closed_form_roots_real(const RecurrenceSpec& spec, long k) {
  const RecurrenceRow row = require_lead(recurrence_row(spec, Branch::Real, k), Branch::Real, k);
  const CRat two_lead = CRat(2) * row.lead;
  const CRat b = -row.back1;  // rho (k+1)_(l+1) - tau (k+1)_(l-1)
  const CRat disc = b * b - CRat(4) * row.lead * row.back2;
  return {Surd(b / two_lead), Surd::root(disc, CRat(1) / two_lead)};
}

std::pair<Surd, Surd> closed_form_roots_imag(const RecurrenceSpec& spec, long k) {
  const RecurrenceRow row = require_lead(recurrence_row(spec, Branch::Imag, k), Branch::Imag, k);
  const CRat b = row.back1;        // (k+1)_l sigma
  const CRat c_tail = -row.back2;  // (1+a)(k+2)_(l+1) - a (k+2)_l
  const CRat disc = b * b - CRat(4) * row.lead * c_tail;
  return {Surd(-b / row.lead), Surd::root(disc, CRat(1) / row.lead)};
}

std::vector<std::complex<double>> paper_ck(std::complex<double> A, std::complex<double> B, Branch branch,
                                           const RecurrenceSpec& spec, int K) {
  if (K < 0) throw InvalidParams("paper_ck: K must be >= 0");
  std::vector<std::complex<double>> c;
  c.push_back(A + B);
  const int first = first_admissible_k(spec, branch);
  for (int k = 1; k <= K; ++k) {
    if (k < first) {
      c.emplace_back(0.0, 0.0);
      continue;
    }
    const auto [r1, r2] = branch == Branch::Real ? closed_form_roots_real(spec, k) : closed_form_roots_imag(spec, k);
    const std::complex<double> plus = (r1 + r2).to_complex();
    const std::complex<double> minus = (r1 - r2).to_complex();
    c.push_back(A * std::pow(plus, k) + B * std::pow(minus, k));
  }
  return c;
}

std::vector<Residual<CRat>> residual_check(const std::vector<CRat>& c, const RecurrenceSpec& spec, Branch branch) {
  std::vector<Residual<CRat>> out;
  for (long k = std::max(2, first_admissible_k(spec, branch)); k < static_cast<long>(c.size()); ++k) {
    const RecurrenceRow row = recurrence_row(spec, branch, k);
    out.push_back({k, row.back2 * c[k - 2] + row.back1 * c[k - 1] + row.lead * c[k]});
  }
  return out;
}

std::vector<Residual<std::complex<double>>> residual_check(const std::vector<std::complex<double>>& c,
                                                           const RecurrenceSpec& spec, Branch branch) {
  std::vector<Residual<std::complex<double>>> out;
  for (long k = std::max(2, first_admissible_k(spec, branch)); k < static_cast<long>(c.size()); ++k) {
    const RecurrenceRow row = recurrence_row(spec, branch, k);
    out.push_back({k, row.back2.to_complex() * c[k - 2] + row.back1.to_complex() * c[k - 1] +
                          row.lead.to_complex() * c[k]});
  }
  return out;
}

Distribution assemble_distribution(const std::vector<CRat>& c) {
  std::vector<DeltaTerm> terms;
  for (std::size_t k = 0; k < c.size(); ++k) terms.push_back({static_cast<int>(k), CRat(), c[k]});
  return Distribution(std::move(terms));
}

}  // namespace heunlie
