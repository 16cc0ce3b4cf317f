#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "heunlie/crat.hpp"

namespace heunlie {

/// Degree reported for the zero polynomial (and order of the zero operator).
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Dense univariate polynomial over CRat, coefficients indexed by degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is coefficientwise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<CRat> coeffs);
  Polynomial(const CRat& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const CRat& c, int degree);
  /// The polynomial z.
  static Polynomial z() { return monomial(CRat(1), 1); }
  /// The monic linear factor z - root.
  static Polynomial linear(const CRat& root);

  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const CRat> coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero outside the stored range.
  CRat coeff(int k) const;
  const CRat& leading() const { return coeffs_.back(); }

  CRat eval(const CRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  /// k-th derivative.
  Polynomial derivative(int k = 1) const;
  /// The polynomial t -> p(t + shift).
  Polynomial taylor_shift(const CRat& shift) const;
  /// Order of vanishing at x (kMinusInfinity-free: the zero polynomial reports
  /// std::numeric_limits<int>::max()).
  int vanishing_order(const CRat& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const CRat& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const CRat& c) { return a *= c; }
  friend Polynomial operator*(const CRat& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();

  std::vector<CRat> coeffs_;
};

/// Exact convolution product.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// p^e for e >= 0.
Polynomial pow(const Polynomial& p, int e);

}  // namespace heunlie
