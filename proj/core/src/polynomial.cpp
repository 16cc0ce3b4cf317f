#include "heunlie/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace heunlie {

Polynomial::Polynomial(std::vector<CRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const CRat& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const CRat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (c.is_zero()) return {};
  std::vector<CRat> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const CRat& root) { return Polynomial(std::vector<CRat>{-root, CRat(1)}); }

CRat Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

CRat Polynomial::eval(const CRat& x) const {
  CRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("derivative: negative order");
  if (k == 0) return *this;
  if (degree() < k) return {};
  std::vector<CRat> out(coeffs_.size() - static_cast<std::size_t>(k));
  for (std::size_t d = static_cast<std::size_t>(k); d < coeffs_.size(); ++d) {
    // d!/(d-k)! as a falling product
    BigInt fall(1);
    for (int i = 0; i < k; ++i) fall *= static_cast<long>(d) - i;
    out[d - static_cast<std::size_t>(k)] = coeffs_[d] * CRat(Rational(fall));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::taylor_shift(const CRat& shift) const {
  // Horner in the polynomial ring: p(t + c) = (...(a_n (t+c) + a_{n-1})(t+c) ...).
  Polynomial acc;
  const Polynomial t_plus_c(std::vector<CRat>{shift, CRat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t_plus_c;
    acc += Polynomial(*it);
  }
  return acc;
}

int Polynomial::vanishing_order(const CRat& x) const {
  if (is_zero()) return std::numeric_limits<int>::max();
  const Polynomial shifted = taylor_shift(x);
  int k = 0;
  while (shifted.coeff(k).is_zero()) ++k;
  return k;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const CRat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  std::vector<CRat> out(pc.size() + qc.size() - 1);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i].is_zero()) continue;
    for (std::size_t j = 0; j < qc.size(); ++j) out[i + j] += pc[i] * qc[j];
  }
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("polynomial power: negative exponent");
  Polynomial out(CRat(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace heunlie
