#pragma once

#include <Eigen/Dense>

namespace cogdof {

// Orthonormal basis of ker(m) as columns. The kernel dimension is cols minus
// the rank, where singular values at or below tolerance * sigma_max count as
// zero. Requires at least one column.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double tolerance = 1e-9);

// Number of singular values strictly above an absolute threshold.
int rank_above(const Eigen::MatrixXd& m, double threshold);

double spectral_norm(const Eigen::MatrixXd& m);

// Orthonormal basis of the column space, singular values above threshold.
Eigen::MatrixXd column_basis(const Eigen::MatrixXd& m, double threshold);

}  // namespace cogdof
