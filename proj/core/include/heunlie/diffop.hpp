#pragma once

#include <vector>

#include "heunlie/polynomial.hpp"

namespace heunlie {

/// Linear differential operator sum_k p_k(z) D^k with polynomial
/// coefficients. terms()[k] is the coefficient of D^k; trailing zero
/// coefficients are trimmed so order() is exact.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Polynomial> terms);

  /// D = d/dz.
  static DiffOp derivative();
  /// Multiplication by p (an order-zero operator).
  static DiffOp multiplication(const Polynomial& p);
  /// p * D^k.
  static DiffOp term(const Polynomial& p, int k);

  int order() const { return terms_.empty() ? kMinusInfinity : static_cast<int>(terms_.size()) - 1; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Polynomial>& terms() const { return terms_; }
  /// Coefficient of D^k; zero polynomial outside the stored range.
  Polynomial coeff(int k) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const CRat& c);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const CRat& c) { return a *= c; }
  friend DiffOp operator*(const CRat& c, DiffOp a) { return a *= c; }
  DiffOp operator-() const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

 private:
  void trim();

  std::vector<Polynomial> terms_;
};

/// sum_k p_k * f^(k).
Polynomial op_apply(const DiffOp& op, const Polynomial& f);

/// The operator L o M, expanded with the Leibniz rule
/// D^a q = sum_i C(a, i) q^(i) D^(a-i).
DiffOp op_compose(const DiffOp& lhs, const DiffOp& rhs);

/// L o M - M o L.
DiffOp commutator(const DiffOp& lhs, const DiffOp& rhs);

}  // namespace heunlie
