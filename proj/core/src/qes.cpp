#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <utility>

#include "heunlie/errors.hpp"
#include "heunlie/heun.hpp"

namespace heunlie {

bool ExactMatrix::is_lower_triangular() const {
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if (!at(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_upper_triangular() const {
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < std::min(r, cols_); ++c) {
      if (!at(r, c).is_zero()) return false;
    }
  }
  return true;
}

ExactMatrix qes_matrix(const DiffOp& op, int N) {
  if (N < 0) throw InvalidParams("qes_matrix: N must be >= 0");
  ExactMatrix m(N + 1, N + 1);
  for (int c = 0; c <= N; ++c) {
    const Polynomial image = op_apply(op, Polynomial::monomial(CRat(1), c));
    if (!image.is_zero() && image.degree() > N) throw OverflowColumn(c, image.degree(), N);
    for (int r = 0; r <= N; ++r) m.at(r, c) = image.coeff(r);
  }
  return m;
}

Spectrum matrix_spectrum(const ExactMatrix& m) {
  Spectrum s;
  const int n = m.rows();
  if (m.is_lower_triangular() || m.is_upper_triangular()) {
    s.triangular = true;
    s.exact = true;
    for (int i = 0; i < n; ++i) {
      s.exact_values.push_back(m.at(i, i));
      s.values.push_back(m.at(i, i).to_complex());
    }
    return s;
  }

  Eigen::MatrixXcd dense(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) dense(r, c) = m.at(r, c).to_complex();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(dense, true);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  // order on values rounded to 1e-9 so that solver noise does not decide ties
  auto key = [&](int i) { return std::pair{std::round(vals(i).real() * 1e9), std::round(vals(i).imag() * 1e9)}; };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
  for (int i : order) {
    const Eigen::VectorXcd v = vecs.col(i);
    const double residual = (dense * v - vals(i) * v).norm() / v.norm();
    s.max_residual = std::max(s.max_residual, residual);
    s.values.push_back(vals(i));
  }
  return s;
}

Spectrum es_spectrum(int n, const HeunParams& p, int N) { return matrix_spectrum(qes_matrix(es_operator(n, p), N)); }

}  // namespace heunlie
