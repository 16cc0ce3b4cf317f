#include "heunlie/sl2.hpp"

#include <cctype>

#include "heunlie/errors.hpp"

namespace heunlie {

Spin Spin::from_value(const CRat& j) {
  const CRat twice = CRat(2) * j;
  const auto n = twice.to_long();
  if (!n) throw InvalidParams("spin " + j.str() + " is not a half-integer");
  return Spin(static_cast<int>(*n));
}

Generators make_generators(Spin j) {
  const CRat jv = j.value();
  const Polynomial z = Polynomial::z();
  Generators g;
  g.plus = DiffOp::term(Polynomial::monomial(CRat(1), 2), 1) + DiffOp::multiplication(z * (CRat(-2) * jv));
  g.zero = DiffOp::term(z, 1) + DiffOp::multiplication(Polynomial(-jv));
  g.minus = DiffOp::derivative();
  return g;
}

UEAExpr& UEAExpr::add(const CRat& coeff, std::vector<Letter> letters) {
  if (letters.empty()) {
    constant_ += coeff;
  } else {
    words_.push_back({coeff, std::move(letters)});
  }
  return *this;
}

UEAExpr& UEAExpr::add_constant(const CRat& c) {
  constant_ += c;
  return *this;
}

DiffOp uea_expand(const UEAExpr& expr, Spin j) {
  const Generators g = make_generators(j);
  auto letter_op = [&](Letter l) -> const DiffOp& {
    switch (l) {
      case Letter::Plus: return g.plus;
      case Letter::Zero: return g.zero;
      case Letter::Minus: return g.minus;
    }
    return g.minus;
  };
  DiffOp out = DiffOp::multiplication(Polynomial(expr.constant()));
  for (const auto& word : expr.words()) {
    if (word.coeff.is_zero()) continue;
    DiffOp product = letter_op(word.letters.front());
    for (std::size_t i = 1; i < word.letters.size(); ++i) product = op_compose(product, letter_op(word.letters[i]));
    out += product * word.coeff;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

char letter_char(Letter l) {
  switch (l) {
    case Letter::Plus: return '+';
    case Letter::Zero: return '0';
    case Letter::Minus: return '-';
  }
  return '?';
}

}  // namespace

UEAExpr parse_uea(std::string_view text) {
  UEAExpr out;
  std::size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view term = trim(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start));
    start = semi == std::string_view::npos ? text.size() + 1 : semi + 1;
    if (term.empty()) continue;
    any = true;
    const std::size_t star = term.rfind('*');
    const CRat coeff = parse_crat(trim(star == std::string_view::npos ? term : term.substr(0, star)));
    if (star == std::string_view::npos) {
      out.add_constant(coeff);
      continue;
    }
    const std::string_view word = trim(term.substr(star + 1));
    if (word.size() > 2) throw ParseError("UEA word longer than two letters: '" + std::string(word) + "'");
    std::vector<Letter> letters;
    for (char c : word) {
      switch (c) {
        case '+': letters.push_back(Letter::Plus); break;
        case '0': letters.push_back(Letter::Zero); break;
        case '-': letters.push_back(Letter::Minus); break;
        default: throw ParseError("unknown UEA letter '" + std::string(1, c) + "'");
      }
    }
    out.add(coeff, std::move(letters));
  }
  if (!any) throw ParseError("empty UEA expression");
  return out;
}

std::string format_uea(const UEAExpr& expr) {
  std::string out;
  for (const auto& w : expr.words()) {
    if (!out.empty()) out += "; ";
    out += "(" + w.coeff.str() + ") * ";
    for (Letter l : w.letters) out.push_back(letter_char(l));
  }
  if (!out.empty()) out += "; ";
  out += "(" + expr.constant().str() + ")";
  return out;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 make_group_element(const CRat& a, const CRat& b, const CRat& c, const CRat& d) {
  Mat2 g{a, b, c, d};
  if (g.det() != CRat(1)) throw InvalidParams("det(g) = " + g.det().str() + ", expected 1");
  return g;
}

Mat2 section(const CRat& z) { return {CRat(1), CRat(1), -z, CRat(1)}; }

CRat mobius_apply(const Mat2& g, const CRat& zeta) {
  const CRat den = g.c * zeta + g.d;
  if (den.is_zero()) throw PoleError("c*zeta + d = 0 at zeta = " + zeta.str());
  return (g.a * zeta + g.b) / den;
}

CRat group_action(const Mat2& g, const CRat& zeta) {
  const CRat den = -g.b * zeta + g.a;
  if (den.is_zero()) throw PoleError("-b*zeta + a = 0 at zeta = " + zeta.str());
  return (g.d * zeta - g.c) / den;
}

CRat measure_jacobian(const Mat2& g, const CRat& z) {
  const CRat w = g.c * z + g.d;
  if (w.is_zero()) throw PoleError("c*z + d = 0 at z = " + z.str());
  const Rational n = w.norm();
  return CRat(Rational(1 / (n * n)));
}

}  // namespace heunlie
