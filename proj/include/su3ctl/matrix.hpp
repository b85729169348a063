// matrix.hpp: complex matrix carrier, Frobenius metrics, commutator,
// and validated wrapper types for Hermitian and unitary matrices.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace su3ctl {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Validation tolerances for the wrapper types below.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

inline double frobenius_norm(const Mat& a) {
    return a.norm();
}

inline double frobenius_distance(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    }
    return (a - b).norm();
}

inline bool all_finite(const Mat& a) {
    return a.allFinite();
}

inline void require_finite(const Mat& a, const std::string& who) {
    if (!all_finite(a)) {
        throw std::invalid_argument(who + ": non-finite entries");
    }
}

inline void require_square(const Mat& a, const std::string& who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument(who + ": matrix must be square and non-empty");
    }
}

inline void require_dim(const Mat& a, Eigen::Index n, const std::string& who) {
    if (a.rows() != n || a.cols() != n) {
        throw std::invalid_argument(who + ": expected a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix");
    }
}

inline Mat commutator(const Mat& a, const Mat& b) {
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("commutator: dimension mismatch");
    }
    return a * b - b * a;
}

inline double hermiticity_residual(const Mat& a) {
    return (a - a.adjoint()).norm();
}

inline double unitarity_residual(const Mat& a) {
    return (a.adjoint() * a - Mat::Identity(a.rows(), a.cols())).norm();
}

// Hermitian matrix with validation at the boundary; relative tolerance so
// large well-scaled inputs are not rejected for roundoff.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Mat m) : m_(std::move(m)) {
        require_square(m_, "HermitianMatrix");
        require_finite(m_, "HermitianMatrix");
        const double res = hermiticity_residual(m_);
        const double scale = std::max(1.0, m_.norm());
        if (res > kHermitianTol * scale) {
            throw std::invalid_argument("HermitianMatrix: hermiticity residual " +
                                        std::to_string(res) + " exceeds tolerance");
        }
    }

    const Mat& get() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    Mat m_;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(Mat m) : m_(std::move(m)) {
        require_square(m_, "UnitaryMatrix");
        require_finite(m_, "UnitaryMatrix");
        const double res = unitarity_residual(m_);
        if (res > kUnitaryTol) {
            throw std::invalid_argument("UnitaryMatrix: unitarity residual " +
                                        std::to_string(res) + " exceeds tolerance");
        }
    }

    const Mat& get() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    Mat m_;
};

// u a u^dag
inline Mat conjugate_by(const UnitaryMatrix& u, const Mat& a) {
    if (u.dim() != a.rows() || a.rows() != a.cols()) {
        throw std::invalid_argument("conjugate_by: dimension mismatch");
    }
    return u.get() * a * u.get().adjoint();
}

// strips the diagonal; handy for measuring how far a matrix is from diagonal
inline Mat off_diagonal(const Mat& a) {
    require_square(a, "off_diagonal");
    Mat r = a;
    r.diagonal().setZero();
    return r;
}

}  // namespace su3ctl
