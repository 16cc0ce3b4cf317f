#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heunlie/diffop.hpp"

namespace heunlie {

/// Spin j with 2j integral, stored as n = 2j. Negative and zero n are
/// accepted; the QES machinery downstream restricts itself to n >= 0.
class Spin {
 public:
  explicit Spin(int two_j) : two_j_(two_j) {}
  /// Throws InvalidParams unless 2j is an integer.
  static Spin from_value(const CRat& j);

  int two_j() const noexcept { return two_j_; }
  CRat value() const { return CRat::fraction(two_j_, 2); }

  friend bool operator==(Spin a, Spin b) { return a.two_j_ == b.two_j_; }

 private:
  int two_j_;
};

/// The first-order realization J+ = z^2 D - 2jz, J0 = zD - j, J- = D.
struct Generators {
  DiffOp plus;
  DiffOp zero;
  DiffOp minus;
};

Generators make_generators(Spin j);

enum class Letter { Plus, Zero, Minus };

struct UEAWord {
  CRat coeff;
  std::vector<Letter> letters;
};

/// Formal linear combination of words in {J+, J0, J-} plus a constant.
/// Words are kept as written (no normal ordering); two expressions are
/// compared by expanding them with uea_expand.
class UEAExpr {
 public:
  UEAExpr() = default;

  /// Appends coeff * word; an empty word is folded into the constant.
  UEAExpr& add(const CRat& coeff, std::vector<Letter> letters);
  UEAExpr& add_constant(const CRat& c);

  const std::vector<UEAWord>& words() const { return words_; }
  const CRat& constant() const { return constant_; }

 private:
  std::vector<UEAWord> words_;
  CRat constant_;
};

/// Substitutes the spin-j generators for the letters, composes each word
/// and sums with coefficients.
DiffOp uea_expand(const UEAExpr& expr, Spin j);

// UEA text grammar (docs/grammar.md): terms separated by ';', each term
// "coeff * W" with W in {+0, 0+, +-, -+, 0-, -0, +, 0, -, ""}; a bare
// coefficient (or "coeff *") is the constant.
UEAExpr parse_uea(std::string_view text);
std::string format_uea(const UEAExpr& expr);

/// 2x2 complex-rational matrix (a b; c d).
struct Mat2 {
  CRat a, b, c, d;

  CRat det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

/// An SL(2) element; throws InvalidParams unless ad - bc = 1.
Mat2 make_group_element(const CRat& a, const CRat& b, const CRat& c, const CRat& d);

/// The section (1 1; -z 1). Its determinant is 1 + z, so it is returned
/// unchecked.
Mat2 section(const CRat& z);

/// (a zeta + b) / (c zeta + d); PoleError when c zeta + d = 0.
CRat mobius_apply(const Mat2& g, const CRat& zeta);

/// g[zeta] = m((g^-1)^T)(zeta) = (d zeta - c) / (-b zeta + a); PoleError on the pole.
CRat group_action(const Mat2& g, const CRat& zeta);

/// |cz + d|^-4, the Jacobian of the planar measure under z -> g.z.
/// PoleError when cz + d = 0.
CRat measure_jacobian(const Mat2& g, const CRat& z);

}  // namespace heunlie
