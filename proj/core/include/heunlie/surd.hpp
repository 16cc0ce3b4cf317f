#pragma once

#include <complex>
#include <optional>
#include <string>

#include "heunlie/crat.hpp"

namespace heunlie {

/// Exact square root of z in Q(i) on the principal branch, if one exists.
std::optional<CRat> exact_sqrt(const CRat& z);

/// Principal-branch square root of z in double precision.
std::complex<double> principal_sqrt(const CRat& z);

/// Element rational + coeff * sqrt(radicand) of the quadratic extension
/// Q(i)(sqrt(radicand)), with sqrt on the principal branch. Constructed
/// values are normalized: perfect-square radicands are folded into the
/// rational part and coeff == 0 forces radicand == 0.
class Surd {
 public:
  Surd() = default;
  Surd(const CRat& rational) : rational_(rational) {}  // NOLINT(google-explicit-constructor)
  Surd(const CRat& rational, const CRat& coeff, const CRat& radicand);

  /// sqrt(radicand) times coeff.
  static Surd root(const CRat& radicand, const CRat& coeff = CRat(1)) { return Surd(CRat(), coeff, radicand); }

  const CRat& rational() const { return rational_; }
  const CRat& coeff() const { return coeff_; }
  const CRat& radicand() const { return radicand_; }

  bool is_rational() const { return coeff_.is_zero(); }
  bool is_zero() const { return rational_.is_zero() && coeff_.is_zero(); }

  std::complex<double> to_complex() const;

  // Arithmetic stays inside one extension field; mixing two different
  // irrational radicands throws std::domain_error.
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const CRat& b);
  Surd operator-() const { return Surd(-rational_, -coeff_, radicand_); }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.rational_ == b.rational_ && a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

  /// "p", or "p + q*sqrt(d)".
  std::string str() const;

 private:
  CRat rational_;
  CRat coeff_;
  CRat radicand_;
};

/// Roots (-b + sqrt(b^2-4ac)) / 2a and (-b - sqrt(b^2-4ac)) / 2a of a x^2 + b x + c,
/// exact. Requires a != 0 (std::domain_error otherwise).
std::pair<Surd, Surd> quadratic_roots(const CRat& a, const CRat& b, const CRat& c);

/// a x^2 + b x + c evaluated exactly at a surd.
Surd eval_quadratic(const CRat& a, const CRat& b, const CRat& c, const Surd& x);

}  // namespace heunlie
