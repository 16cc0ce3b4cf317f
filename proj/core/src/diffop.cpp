#include "heunlie/diffop.hpp"

#include <stdexcept>

namespace heunlie {

DiffOp::DiffOp(std::vector<Polynomial> terms) : terms_(std::move(terms)) { trim(); }

DiffOp DiffOp::derivative() { return term(Polynomial(CRat(1)), 1); }

DiffOp DiffOp::multiplication(const Polynomial& p) { return term(p, 0); }

DiffOp DiffOp::term(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("DiffOp::term: negative order");
  std::vector<Polynomial> terms(static_cast<std::size_t>(k) + 1);
  terms.back() = p;
  return DiffOp(std::move(terms));
}

Polynomial DiffOp::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(terms_.size())) return {};
  return terms_[static_cast<std::size_t>(k)];
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t k = 0; k < o.terms_.size(); ++k) terms_[k] += o.terms_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t k = 0; k < o.terms_.size(); ++k) terms_[k] -= o.terms_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator*=(const CRat& c) {
  for (auto& p : terms_) p *= c;
  trim();
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& p : out.terms_) p = -p;
  return out;
}

void DiffOp::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

Polynomial op_apply(const DiffOp& op, const Polynomial& f) {
  Polynomial out;
  const auto& terms = op.terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].is_zero()) continue;
    out += poly_mul(terms[k], f.derivative(static_cast<int>(k)));
  }
  return out;
}

DiffOp op_compose(const DiffOp& lhs, const DiffOp& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Polynomial> out(static_cast<std::size_t>(lhs.order() + rhs.order()) + 1);
  const auto& lt = lhs.terms();
  const auto& rt = rhs.terms();
  for (std::size_t a = 0; a < lt.size(); ++a) {
    if (lt[a].is_zero()) continue;
    for (std::size_t b = 0; b < rt.size(); ++b) {
      if (rt[b].is_zero()) continue;
      // p D^a o q D^b = p * sum_i C(a,i) q^(i) D^(a-i+b)
      for (std::size_t i = 0; i <= a; ++i) {
        const Polynomial dq = rt[b].derivative(static_cast<int>(i));
        if (dq.is_zero()) break;
        const CRat c(Rational(binomial(static_cast<long>(a), static_cast<long>(i))));
        out[a - i + b] += poly_mul(lt[a], dq) * c;
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp commutator(const DiffOp& lhs, const DiffOp& rhs) { return op_compose(lhs, rhs) - op_compose(rhs, lhs); }

}  // namespace heunlie
