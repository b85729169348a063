// expm.hpp: unitary exponentials exp(-i*scale*H) of Hermitian matrices,
// via eigendecomposition and via the rank-reduced three-term closed form.

#pragma once

#include <su3ctl/matrix.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace su3ctl {

namespace detail {

// exp(-i*scale*h) through a self-adjoint eigendecomposition; the iterative
// solver path is used (not the direct 3x3 formulas) for accuracy.
template <typename Matrix>
Mat expm_eig(const Matrix& h, double scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.compute(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("expm_hermitian: eigen-solver did not converge");
    }
    const auto& v = solver.eigenvectors();
    const auto& lam = solver.eigenvalues();
    Eigen::VectorXcd phases(lam.size());
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
        phases(j) = std::exp(Complex(0.0, -scale * lam(j)));
    }
    return Mat(v * phases.asDiagonal() * v.adjoint());
}

}  // namespace detail

inline UnitaryMatrix expm_hermitian(const HermitianMatrix& h, double scale) {
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("expm_hermitian: scale must be finite");
    }
    if (h.dim() == 3) {
        Eigen::Matrix3cd h3 = h.get();
        return UnitaryMatrix(detail::expm_eig(h3, scale));
    }
    return UnitaryMatrix(detail::expm_eig(h.get(), scale));
}

// exp(-i*scale*a) for a Hermitian a satisfying a^3 = nu^2 * a (spectrum in
// {+nu, -nu, 0}), evaluated as I - i*(a/nu)*sin(nu*scale) + (a/nu)^2*(cos(nu*scale)-1).
inline UnitaryMatrix expm_rank_reduced(const HermitianMatrix& a, double nu, double scale) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw std::invalid_argument("expm_rank_reduced: nu must be positive and finite");
    }
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("expm_rank_reduced: scale must be finite");
    }
    const Mat& m = a.get();
    const Mat m2 = m * m;
    const double pre = (m2 * m - nu * nu * m).norm();
    if (pre > 1e-10) {
        throw std::invalid_argument(
            "expm_rank_reduced: precondition a^3 = nu^2*a violated, residual " +
            std::to_string(pre));
    }
    const double phi = nu * scale;
    const Mat r = Mat::Identity(m.rows(), m.cols()) +
                  Complex(0.0, -std::sin(phi) / nu) * m +
                  Complex((std::cos(phi) - 1.0) / (nu * nu), 0.0) * m2;
    return UnitaryMatrix(r);
}

}  // namespace su3ctl
