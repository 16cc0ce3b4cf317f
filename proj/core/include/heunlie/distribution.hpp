#pragma once

#include <vector>

#include "heunlie/polynomial.hpp"

namespace heunlie {

/// coeff * delta^(order)(z - center)
struct DeltaTerm {
  int order = 0;
  CRat center;
  CRat coeff;

  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

/// Finite sum of point-supported terms. Normalized on construction: sorted by
/// (center, order), like terms merged, zero coefficients dropped.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<DeltaTerm> terms);

  static Distribution delta(int order = 0, const CRat& center = CRat(), const CRat& coeff = CRat(1));

  const std::vector<DeltaTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend Distribution operator+(const Distribution& x, const Distribution& y);
  friend Distribution operator-(const Distribution& x, const Distribution& y);
  friend Distribution operator*(const Distribution& d, const CRat& s);
  friend Distribution operator*(const CRat& s, const Distribution& d) { return d * s; }
  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<DeltaTerm> terms_;
};

/// <d, f> = sum coeff (-1)^order f^(order)(center).
CRat pair(const Distribution& d, const Polynomial& f);

/// phi * d by the product rule
///   phi delta^(m)(w-c) = sum_r C(m,r) (-1)^(m-r) phi^(m-r)(c) delta^(r)(w-c).
Distribution multiply(const Polynomial& phi, const Distribution& d);

/// w^n delta^(m)(w) = (-1)^n m!/(m-n)! delta^(m-n)(w) for m >= n, 0 otherwise.
Distribution monomial_times_delta(int n, int m);

}  // namespace heunlie
