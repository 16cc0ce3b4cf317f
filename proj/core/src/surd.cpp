#include "heunlie/surd.hpp"

#include <stdexcept>

namespace heunlie {

namespace {

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational out(sqrt(num), sqrt(den));
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<CRat> exact_sqrt(const CRat& z) {
  if (z.is_real()) {
    if (sgn(z.re()) >= 0) {
      auto r = rational_sqrt(z.re());
      if (!r) return std::nullopt;
      return CRat(*r);
    }
    auto r = rational_sqrt(Rational(-z.re()));
    if (!r) return std::nullopt;
    return CRat(Rational(0), *r);
  }
  // sqrt(x + iy) = u + iv with u = sqrt((x + |z|)/2) > 0 and v = y / (2u).
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto u = rational_sqrt(Rational((z.re() + *modulus) / 2));
  if (!u || sgn(*u) == 0) return std::nullopt;
  return CRat(*u, Rational(z.im() / (2 * *u)));
}

std::complex<double> principal_sqrt(const CRat& z) { return std::sqrt(z.to_complex()); }

Surd::Surd(const CRat& rational, const CRat& coeff, const CRat& radicand)
    : rational_(rational), coeff_(coeff), radicand_(radicand) {
  if (coeff_.is_zero() || radicand_.is_zero()) {
    coeff_ = CRat();
    radicand_ = CRat();
    return;
  }
  if (auto root = exact_sqrt(radicand_)) {
    rational_ += coeff_ * *root;
    coeff_ = CRat();
    radicand_ = CRat();
  }
}

std::complex<double> Surd::to_complex() const {
  if (is_rational()) return rational_.to_complex();
  return rational_.to_complex() + coeff_.to_complex() * principal_sqrt(radicand_);
}

namespace {

const CRat& common_radicand(const Surd& a, const Surd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
  throw std::domain_error("surd arithmetic across different radicands");
}

}  // namespace

Surd operator+(const Surd& a, const Surd& b) {
  const CRat& d = common_radicand(a, b);
  return Surd(a.rational_ + b.rational_, a.coeff_ + b.coeff_, d);
}

Surd operator-(const Surd& a, const Surd& b) {
  const CRat& d = common_radicand(a, b);
  return Surd(a.rational_ - b.rational_, a.coeff_ - b.coeff_, d);
}

Surd operator*(const Surd& a, const Surd& b) {
  const CRat& d = common_radicand(a, b);
  return Surd(a.rational_ * b.rational_ + a.coeff_ * b.coeff_ * d, a.rational_ * b.coeff_ + a.coeff_ * b.rational_, d);
}

Surd operator/(const Surd& a, const CRat& b) { return Surd(a.rational_ / b, a.coeff_ / b, a.radicand_); }

std::string Surd::str() const {
  if (is_rational()) return rational_.str();
  std::string out;
  if (!rational_.is_zero()) out = "(" + rational_.str() + ") + ";
  out += "(" + coeff_.str() + ")*sqrt(" + radicand_.str() + ")";
  return out;
}

std::pair<Surd, Surd> quadratic_roots(const CRat& a, const CRat& b, const CRat& c) {
  if (a.is_zero()) throw std::domain_error("quadratic_roots: leading coefficient is zero");
  const CRat disc = b * b - CRat(4) * a * c;
  const CRat two_a = CRat(2) * a;
  const Surd mid(-b / two_a);
  const Surd half_width = Surd::root(disc, CRat(1) / two_a);
  return {mid + half_width, mid - half_width};
}

Surd eval_quadratic(const CRat& a, const CRat& b, const CRat& c, const Surd& x) {
  return Surd(a) * x * x + Surd(b) * x + Surd(c);
}

}  // namespace heunlie
