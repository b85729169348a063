// classify.hpp: characteristic-polynomial invariants of 3x3 Hermitian
// matrices and the equivalence classes they induce. For a traceless matrix
// with vanishing determinant the polynomial collapses to H^3 = dE^2 * H,
// which is the shape the solved orbit lives on.

#pragma once

#include <su3ctl/matrix.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace su3ctl {

struct RootClass {
    double trace = 0.0;
    double delta_e_sq = 0.0;              // (Tr[H^2] - Tr[H]^2) / 2
    double det = 0.0;
    std::array<double, 3> eigenvalues{};  // ascending
    bool traceless = false;
    int det_sign = 0;                     // -1, 0, +1 with |det| < 1e-9 -> 0
};

inline RootClass char_poly_invariants(const HermitianMatrix& h) {
    if (h.dim() != 3) {
        throw std::invalid_argument("char_poly_invariants: expected a 3x3 matrix");
    }
    const Mat& m = h.get();
    RootClass rc;
    rc.trace = m.trace().real();
    rc.delta_e_sq = ((m * m).trace().real() - rc.trace * rc.trace) / 2.0;
    rc.det = m.determinant().real();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver;
    solver.compute(Eigen::Matrix3cd(m));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("char_poly_invariants: eigen-solver did not converge");
    }
    for (int j = 0; j < 3; ++j) {
        rc.eigenvalues[static_cast<std::size_t>(j)] = solver.eigenvalues()(j);
    }
    rc.traceless = std::abs(rc.trace) < 1e-12;
    rc.det_sign = (std::abs(rc.det) < 1e-9) ? 0 : (rc.det > 0.0 ? 1 : -1);
    return rc;
}

// ‖H^3 - Tr[H] H^2 - dE^2 H - det[H] I‖_F; vanishes by the Cayley-Hamilton
// theorem up to roundoff
inline double cayley_hamilton_residual(const HermitianMatrix& h) {
    if (h.dim() != 3) {
        throw std::invalid_argument("cayley_hamilton_residual: expected a 3x3 matrix");
    }
    const Mat& m = h.get();
    const RootClass rc = char_poly_invariants(h);
    const Mat m2 = m * m;
    const Mat lhs = m2 * m - rc.trace * m2 - rc.delta_e_sq * m - rc.det * Mat::Identity(3, 3);
    return lhs.norm();
}

// equality of the invariant triple (trace, dE^2, det) within tol; blind to
// index permutations because the invariants are
inline bool same_class(const HermitianMatrix& a, const HermitianMatrix& b, double tol = 1e-9) {
    const RootClass ra = char_poly_invariants(a);
    const RootClass rb = char_poly_invariants(b);
    return std::abs(ra.trace - rb.trace) <= tol &&
           std::abs(ra.delta_e_sq - rb.delta_e_sq) <= tol && std::abs(ra.det - rb.det) <= tol;
}

}  // namespace su3ctl
