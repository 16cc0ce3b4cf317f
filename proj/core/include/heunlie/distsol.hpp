#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "heunlie/distribution.hpp"
#include "heunlie/polynomial.hpp"
#include "heunlie/surd.hpp"

namespace heunlie {

/// (k)_m = k(k-1)...(k-m+1); (k)_0 = 1. Throws InvalidParams for m < 0.
BigInt falling_factorial(long k, long m);

/// Coefficients h[m][n] of z^(rho-1) (z-1)^(sigma-1) (z-a)^(tau-1) =
/// sum h[m][n] z^(m+n+rho-1).
struct WeightExpansion {
  int rho = 1;
  int sigma = 1;
  int tau = 1;
  CRat a;
  std::vector<std::vector<CRat>> h;  // h[m][n], m < sigma, n < tau

  int offset() const { return rho - 1; }
  Polynomial reassemble() const;
  /// Constant term of the reassembled weight.
  CRat omega_at_zero() const { return reassemble().coeff(0); }
};

/// Throws NonIntegerExponents unless rho, sigma, tau are positive integers,
/// InvalidParams when a is 0 or 1.
WeightExpansion weight_expansion(const CRat& rho, const CRat& sigma, const CRat& tau, const CRat& a);
WeightExpansion weight_expansion(int rho, int sigma, int tau, const CRat& a);

/// Scalars of the two three-term recurrences. l >= 1.
struct RecurrenceSpec {
  int l = 1;
  CRat rho, sigma, tau, abProduct, E, a;
};

enum class Branch { Real, Imag };

const char* branch_name(Branch b);

/// Smallest k at which the c_k coefficient can be nonzero:
/// l for the real branch, l-1 for the imaginary one.
int first_admissible_k(const RecurrenceSpec& spec, Branch branch);

/// The three coefficients (of c_{k-2}, c_{k-1}, c_k) in the branch equation at k.
struct RecurrenceRow {
  CRat back2, back1, lead;
};

RecurrenceRow recurrence_row(const RecurrenceSpec& spec, Branch branch, long k);

/// Solves the real-part recurrence for c_k.
/// DegenerateLeading when abProduct (k)_l = 0.
CRat recur_real(const RecurrenceSpec& spec, const CRat& c_km2, const CRat& c_km1, long k);
std::complex<double> recur_real(const RecurrenceSpec& spec, std::complex<double> c_km2, std::complex<double> c_km1,
                                long k);

/// Solves the imaginary-part recurrence for c_k.
/// DegenerateLeading when E (k)_(l-1) = 0.
CRat recur_imag(const RecurrenceSpec& spec, const CRat& c_km2, const CRat& c_km1, long k);
std::complex<double> recur_imag(const RecurrenceSpec& spec, std::complex<double> c_km2, std::complex<double> c_km1,
                                long k);

/// c_0..c_K from the seeds c_0, c_1. Entries 2 <= k < first_admissible_k are
/// not fixed by the recurrence and are set to 0. DegenerateLeading when the
/// branch scalar (abProduct or E) is zero.
std::vector<CRat> forward_solve(const RecurrenceSpec& spec, Branch branch, const CRat& c0, const CRat& c1, int K);

/// (eps1, eps2) as printed: s = eps1 +- eps2 are the roots of
/// abProduct (k)_l s^2 - [rho (k+1)_(l+1) - tau (k+1)_(l-1)] s + [(k+2)_(l+2) - a (k+2)_l].
std::pair<Surd, Surd> closed_form_roots_real(const RecurrenceSpec& spec, long k);

/// (eta1, eta2) as printed, for the quadratic
/// E (k)_(l-1) t^2 + (k+1)_l sigma t - [(1+a)(k+2)_(l+1) - a (k+2)_l].
/// The printed pair has no factor 1/2 and the opposite discriminant sign,
/// so eta1 +- eta2 are generally not roots.
std::pair<Surd, Surd> closed_form_roots_imag(const RecurrenceSpec& spec, long k);

/// The quadratic whose roots the closed forms claim to give: {x^2, x, 1} coefficients.
std::array<CRat, 3> root_quadratic(const RecurrenceSpec& spec, Branch branch, long k);

/// c_k = A (r1 + r2)^k + B (r1 - r2)^k with the per-k closed-form roots of
/// the branch, k = 0..K. c_0 = A + B; entries 0 < k < first_admissible_k,
/// where the roots are undefined, are set to 0.
std::vector<std::complex<double>> paper_ck(std::complex<double> A, std::complex<double> B, Branch branch,
                                           const RecurrenceSpec& spec, int K);

template <class T>
struct Residual {
  long k;
  T value;
};

/// Left-hand side of the branch equation on (c_{k-2}, c_{k-1}, c_k) for every
/// k >= max(2, first_admissible_k) inside the sequence.
std::vector<Residual<CRat>> residual_check(const std::vector<CRat>& c, const RecurrenceSpec& spec, Branch branch);
std::vector<Residual<std::complex<double>>> residual_check(const std::vector<std::complex<double>>& c,
                                                           const RecurrenceSpec& spec, Branch branch);

/// sum c_k delta^(k)(z).
Distribution assemble_distribution(const std::vector<CRat>& c);

}  // namespace heunlie
