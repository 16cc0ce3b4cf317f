#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace heunlie {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact complex rational re + im*i. Both parts are kept canonical by GMP,
/// so structural equality is mathematical equality.
class CRat {
 public:
  CRat() = default;
  CRat(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  CRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  CRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  CRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// num/den with den != 0.
  static CRat fraction(long num, long den);
  static CRat imaginary_unit() { return CRat(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True when the value is a (real) integer.
  bool is_integer() const;
  /// The integer value when is_integer() and it fits in a long.
  std::optional<long> to_long() const;

  CRat conj() const { return CRat(re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  CRat& operator+=(const CRat& o);
  CRat& operator-=(const CRat& o);
  CRat& operator*=(const CRat& o);
  /// Throws std::domain_error on division by zero.
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  CRat operator-() const { return CRat(Rational(-re_), Rational(-im_)); }

  friend bool operator==(const CRat& a, const CRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  /// Lexicographic order on (re, im); used only for canonical sorting.
  static bool lex_less(const CRat& a, const CRat& b);

  /// Canonical text: "3/2", "1/2i", "-2i", "3/2 + 1/2i", "3/2 - 1/2i".
  std::string str() const;
  /// Compact text without spaces ("3/2+1/2i"); the CLI literal form.
  std::string compact() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// z^e for integer e (negative exponents invert; 0^negative throws).
CRat pow(const CRat& z, long e);

std::ostream& operator<<(std::ostream& os, const CRat& z);

/// Parses "p", "p/q", "RE+IMi", "RE-IMi", "IMi", "i", "-i", with optional
/// surrounding parentheses and whitespace. Decimal points are rejected:
/// only exact rational literals survive the text boundary.
CRat parse_crat(std::string_view text);

/// Integer binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace heunlie
