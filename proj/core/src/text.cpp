#include "heunlie/text.hpp"

#include <cctype>
#include <map>
#include <tuple>
#include <utility>

#include "heunlie/errors.hpp"

namespace heunlie {

namespace {

void append_term(std::string& out, const CRat& c, int z_power, int d_order) {
  if (!out.empty()) out += " + ";
  out += "(" + c.str() + ")";
  if (z_power > 0) out += " z^" + std::to_string(z_power);
  if (d_order > 0) out += " D^" + std::to_string(d_order);
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  // (d_order, z_power) -> coefficient
  std::map<std::pair<int, int>, CRat> parse(bool allow_d) {
    std::map<std::pair<int, int>, CRat> terms;
    skip_ws();
    if (done()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coeff, z_power, d_order] = parse_term();
      if (d_order > 0 && !allow_d) fail("derivative factor in a polynomial");
      terms[{d_order, z_power}] += coeff * CRat(sign);
      first = false;
      skip_ws();
      if (done()) break;
    }
    return terms;
  }

 private:
  std::tuple<CRat, int, int> parse_term() {
    CRat coeff(1);
    bool any = false;
    if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      coeff = parse_crat(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      any = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') {
      const std::size_t start = pos_;
      while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      if (peek() == 'i') ++pos_;
      coeff = parse_crat(text_.substr(start, pos_ - start));
      any = true;
    }
    skip_ws();
    int z_power = 0;
    if (peek() == 'z') {
      ++pos_;
      z_power = parse_exponent();
      any = true;
      skip_ws();
    }
    int d_order = 0;
    if (peek() == 'D') {
      ++pos_;
      d_order = parse_exponent();
      any = true;
    }
    if (!any) fail("expected a term");
    return {coeff, z_power, d_order};
  }

  int parse_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("missing exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    const CRat c = p.coeff(e);
    if (!c.is_zero()) append_term(out, c, e, 0);
  }
  return out;
}

std::string format_operator(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (int k = op.order(); k >= 0; --k) {
    const Polynomial p = op.coeff(k);
    for (int e = p.degree(); e >= 0; --e) {
      const CRat c = p.coeff(e);
      if (!c.is_zero()) append_term(out, c, e, k);
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return {};
  Polynomial out;
  for (const auto& [key, c] : TermParser(text).parse(false)) out += Polynomial::monomial(c, key.second);
  return out;
}

DiffOp parse_operator(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return {};
  DiffOp out;
  for (const auto& [key, c] : TermParser(text).parse(true)) {
    out += DiffOp::term(Polynomial::monomial(c, key.second), key.first);
  }
  return out;
}

}  // namespace heunlie
