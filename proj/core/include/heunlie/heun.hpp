#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "heunlie/diffop.hpp"
#include "heunlie/sl2.hpp"
#include "heunlie/surd.hpp"

namespace heunlie {

// Sign convention: every operator built here carries the positive leading
// coefficient z(z-1)(z-a) on D^2, i.e. the "+H" convention. The UEA form of
// the Heun operator expands to exactly this operator without a sign flip.

/// Scalar parameters of the Heun equation. a must avoid {0, 1}; the Fuchs
/// constraint alpha + beta + 1 = gamma + delta + epsilon is *not* enforced,
/// its residual is exposed instead.
class HeunParams {
 public:
  /// Throws InvalidParams when a is 0 or 1.
  HeunParams(CRat a, CRat q, CRat alpha, CRat beta, CRat gamma, CRat delta, CRat epsilon);

  const CRat& a() const { return a_; }
  const CRat& q() const { return q_; }
  const CRat& alpha() const { return alpha_; }
  const CRat& beta() const { return beta_; }
  const CRat& gamma() const { return gamma_; }
  const CRat& delta() const { return delta_; }
  const CRat& epsilon() const { return epsilon_; }

  /// alpha + beta + 1 - gamma - delta - epsilon.
  CRat constraint_residual() const;

 private:
  CRat a_, q_, alpha_, beta_, gamma_, delta_, epsilon_;
};

CRat check_constraint(const HeunParams& p);

/// (z^3-(1+a)z^2+az) D^2 + [(g+d+e)z^2 - ((1+a)g+ad+e)z + ga] D + (ab z - q),
/// the canonical form with denominators cleared, expanded by hand.
DiffOp build_expanded(const HeunParams& p);

/// z(z-1)(z-a) times the canonical form, assembled factor by factor from
/// gamma/z + delta/(z-1) + epsilon/(z-a) with the denominators cleared.
DiffOp build_canonical_cleared(const HeunParams& p);

/// z(z-1)(z-a).
Polynomial heun_leading(const CRat& a);

struct Infinity {};
using SingularPoint = std::variant<CRat, Infinity>;

/// The two Frobenius exponents at a point. At infinity the convention is
/// psi ~ z^(-r), so the Heun exponents there are {alpha, beta}.
struct ExponentPair {
  Surd first;
  Surd second;

  /// Unordered comparison.
  bool matches(const CRat& x, const CRat& y) const;
};

/// Indicial roots of a second-order operator at a regular singular point.
/// Throws NotRegularSingular when the point is ordinary or irregular.
ExponentPair indicial_exponents(const DiffOp& op, const SingularPoint& point);

/// Coefficients of the spin-j UEA form
///   cPlusZero (J+J0 + J0J+) + cPlusMinus (J+J- + J-J+) + cZeroMinus (J0J- + J-J0)
///   + cPlus J+ + cZero J0 + cMinus J- + cConst.
struct UEACoeffs {
  CRat cPlusZero, cPlusMinus, cZeroMinus;
  CRat cPlus, cZero, cMinus;
  CRat cConst;

  UEAExpr to_expr() const;
};

/// The seven UEA coefficients of the Heun operator at spin j.
UEACoeffs uea_heun_coeffs(Spin j, const HeunParams& p);
UEAExpr uea_heun(Spin j, const HeunParams& p);

/// 8j^2 + 2j(alpha+beta-1) + alpha*beta; reported, never enforced.
CRat theorem1_proviso(Spin j, const HeunParams& p);

/// Coefficients read off an operator of Heun shape
///   z(z-1)(z-a) D^2 + (rho z^2 + sigma z + tau) D + (abProduct z + constant).
/// qShift = constant + q, the q-independent part of the constant term.
struct ExpandedCoeffs {
  CRat rho, sigma, tau, abProduct, constant, qShift;
};

ExpandedCoeffs extract_coeffs(const DiffOp& op, const CRat& q);

/// The Heun-shape operator rebuilt from extracted coefficients.
DiffOp assemble_from_coeffs(const ExpandedCoeffs& c, const CRat& a);

struct DiscrepancyEntry {
  std::string name;
  CRat paper;
  CRat oracle;
  CRat residual;  // paper - oracle
};

struct DiscrepancyReport {
  std::string convention = "+H: D^2 coefficient z(z-1)(z-a)";
  std::vector<DiscrepancyEntry> entries;

  void add(std::string name, const CRat& paper, const CRat& oracle);
  const DiscrepancyEntry* find(std::string_view name) const;
};

/// Expands the UEA form of the Heun operator and the exactly solvable reduction
/// and compares their coefficients with the published closed-form
/// formulas. The expansion is the ground truth.
DiscrepancyReport verify_theorem1(Spin j, const HeunParams& p);

/// The printed z-coefficient -((1+a)g+d+e) of the D term against the cleared
/// canonical form, which has a*delta in place of delta.
DiscrepancyReport expanded_form_discrepancies(const HeunParams& p);

/// Printed exponent lists at 1, a and infinity compared with the Frobenius oracle.
DiscrepancyReport exponent_discrepancies(const HeunParams& p);

/// alpha + beta + 3j - 1/2: zero exactly when the grading is exactly solvable.
CRat es_condition(Spin j, const HeunParams& p);

/// The reduced UEA form without the J+ term (spin n/2).
UEAExpr uea_heun_es(int n, const HeunParams& p);
/// H_{n/2,e}, expanded from the generator algebra.
DiffOp es_operator(int n, const HeunParams& p);

/// Oracle-extracted scalars of the exactly solvable operator.
struct EsScalars {
  int n = 0;
  CRat rho, sigma, tau, abProduct, constant;
  CRat a;
};

EsScalars es_scalars(int n, const HeunParams& p);

/// Dense exact matrix with row-major storage.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CRat& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  CRat& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  /// M[r][c] == 0 for every c > r.
  bool is_lower_triangular() const;
  /// M[r][c] == 0 for every r > c.
  bool is_upper_triangular() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<CRat> data_;
};

/// M[r][c] = coefficient of z^r in op(z^c), 0 <= r, c <= N.
/// Throws OverflowColumn when some column leaves the degree <= N space.
ExactMatrix qes_matrix(const DiffOp& op, int N);

inline constexpr double kEigenResidualTolerance = 1e-10;

struct Spectrum {
  bool triangular = false;
  bool exact = false;
  std::vector<CRat> exact_values;             // filled when exact
  std::vector<std::complex<double>> values;   // always filled
  double max_residual = 0.0;                  // max ||Mv - lambda v|| / ||v|| (float path)
};

/// Exact diagonal for triangular matrices; otherwise a complex eigensolve
/// with per-pair residuals.
Spectrum matrix_spectrum(const ExactMatrix& m);

/// Spectrum of es_operator(n, p) on the degree <= N space.
Spectrum es_spectrum(int n, const HeunParams& p, int N);

/// E_{n/2,e} in its two published variants ("statement" and "proof").
CRat es_eigenvalue_statement(int n, const HeunParams& p);
CRat es_eigenvalue_proof(int n, const HeunParams& p);

}  // namespace heunlie
