#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace braidlink {

/// Gauss-Legendre rule mapped to [0, 1].
template <typename Scalar>
struct GaussLegendreRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;

  Eigen::Index order() const { return nodes.size(); }
};

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the Legendre
// recurrence, weights 2 v_0^2 on [-1, 1].
template <typename Scalar = double>
GaussLegendreRule<Scalar> gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix jacobi = Matrix::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const Scalar beta = Scalar(k) / std::sqrt(Scalar(4 * k * k - 1));
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);

  GaussLegendreRule<Scalar> rule;
  rule.nodes = (solver.eigenvalues().array() + 1) / 2;
  rule.weights = solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace braidlink
