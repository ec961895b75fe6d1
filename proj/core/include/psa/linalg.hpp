#pragma once

#include <Eigen/Dense>

namespace psa {

/// Plane rotation R(a) = [[cos a, -sin a], [sin a, cos a]].
Eigen::Matrix2d rotation2(double angle);

/// Symplectic form J in the quadrature ordering (x_s, x_i, y_s, y_i).
Eigen::Matrix4d symplectic_form();

/// Symplectic eigenvalues (nu_1 <= nu_2) of a 4x4 covariance matrix,
/// computed as the moduli of the eigenvalues of J * cov.
Eigen::Vector2d symplectic_eigenvalues(const Eigen::Matrix4d& cov);

}  // namespace psa
