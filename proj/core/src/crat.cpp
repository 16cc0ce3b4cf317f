#include "heunlie/crat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "heunlie/errors.hpp"

namespace heunlie {

CRat CRat::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return CRat(r);
}

bool CRat::is_integer() const { return is_real() && re_.get_den() == 1; }

std::optional<long> CRat::to_long() const {
  if (!is_integer() || !re_.get_num().fits_slong_p()) return std::nullopt;
  return re_.get_num().get_si();
}

CRat& CRat::operator+=(const CRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRat& CRat::operator-=(const CRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRat& CRat::operator*=(const CRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRat& CRat::operator/=(const CRat& o) {
  if (o.is_zero()) throw std::domain_error("complex-rational division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

bool CRat::lex_less(const CRat& a, const CRat& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

namespace {

std::string imag_text(const Rational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

}  // namespace

std::string CRat::str() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  const Rational mag = abs(im_);
  std::string out = re_.get_str() + (sgn(im_) < 0 ? " - " : " + ");
  out += mag == 1 ? std::string("i") : mag.get_str() + "i";
  return out;
}

std::string CRat::compact() const {
  std::string out;
  for (char c : str()) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

CRat pow(const CRat& z, long e) {
  if (e < 0) {
    if (z.is_zero()) throw std::domain_error("zero to a negative power");
    return CRat(1) / pow(z, -e);
  }
  CRat result(1);
  CRat base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const CRat& z) { return os << z.str(); }

namespace {

struct LiteralCursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s[pos++]);
    return out;
  }
};

}  // namespace

CRat parse_crat(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view body = compact;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw ParseError("empty complex-rational literal");

  LiteralCursor cur{body};
  Rational re(0), im(0);
  bool have_re = false, have_im = false;
  int terms = 0;
  while (!cur.done()) {
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1 : 1;
      ++cur.pos;
    } else if (terms > 0) {
      throw ParseError("expected '+' or '-' in literal '" + std::string(text) + "'");
    }
    Rational value(1);
    const std::string num = cur.digits();
    const bool has_number = !num.empty();
    if (has_number) {
      BigInt n(num);
      BigInt d(1);
      if (cur.peek() == '/') {
        ++cur.pos;
        const std::string den = cur.digits();
        if (den.empty()) throw ParseError("missing denominator in '" + std::string(text) + "'");
        d = BigInt(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      value = Rational(n, d);
      value.canonicalize();
    }
    if (cur.peek() == '.' || cur.peek() == 'e' || cur.peek() == 'E') {
      throw ParseError("decimal literal '" + std::string(text) + "' is not exact; use p/q");
    }
    bool imaginary = false;
    if (cur.peek() == 'i') {
      imaginary = true;
      ++cur.pos;
    }
    if (!has_number && !imaginary) {
      throw ParseError("malformed complex-rational literal '" + std::string(text) + "'");
    }
    value *= sign;
    if (imaginary) {
      if (have_im) throw ParseError("two imaginary parts in '" + std::string(text) + "'");
      im = value;
      have_im = true;
    } else {
      if (have_re) throw ParseError("two real parts in '" + std::string(text) + "'");
      re = value;
      have_re = true;
    }
    ++terms;
  }
  return CRat(re, im);
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace heunlie
