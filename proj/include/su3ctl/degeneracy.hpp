// degeneracy.hpp: catalogs tied to the degenerate (zero-eigenvalue)
// direction: integer angular-momentum matrices and their square, the three
// solution-matrix families with their rotation partners and column-shift
// property, the qutrit Fourier transform and its swap gate, the evolved
// constraint under general diagonal parameters, and the swapped problem's
// closed-form state.

#pragma once

#include <su3ctl/claim.hpp>
#include <su3ctl/expm.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/problem.hpp>
#include <su3ctl/propagators.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace su3ctl {

// ------------------------- angular momentum block ---------------------------

// integer-normalized spin-1 triple: Lx, Ly, Lz
inline std::tuple<HermitianMatrix, HermitianMatrix, HermitianMatrix> angular_momentum() {
    Mat lx = Mat::Zero(3, 3);
    lx(0, 1) = 1.0;
    lx(1, 0) = 1.0;
    lx(1, 2) = 1.0;
    lx(2, 1) = 1.0;
    Mat ly = Mat::Zero(3, 3);
    ly(0, 1) = Complex(0.0, -1.0);
    ly(1, 0) = Complex(0.0, 1.0);
    ly(1, 2) = Complex(0.0, -1.0);
    ly(2, 1) = Complex(0.0, 1.0);
    Mat lz = Mat::Zero(3, 3);
    lz(0, 0) = 1.0;
    lz(2, 2) = -1.0;
    return {HermitianMatrix(std::move(lx)), HermitianMatrix(std::move(ly)),
            HermitianMatrix(std::move(lz))};
}

// sum of squares computed from the triple itself; comes out diag(3,4,3)
inline HermitianMatrix l_squared() {
    const auto [lx, ly, lz] = angular_momentum();
    return HermitianMatrix(Mat(lx.get() * lx.get() + ly.get() * ly.get() + lz.get() * lz.get()));
}

// residual of (n.L)^2 = |n|^2 L^2 / 3 using the computed L^2; quantifies how
// far the spin-1/2-style contraction is from holding here
inline ClaimResult spinor_square(const Eigen::Vector3d& n) {
    const double n2 = n.squaredNorm();
    if (!(n2 > 0.0)) {
        throw std::invalid_argument("spinor_square: direction must be nonzero");
    }
    const auto [lx, ly, lz] = angular_momentum();
    const Mat ndotl = n(0) * lx.get() + n(1) * ly.get() + n(2) * lz.get();
    const double res = (ndotl * ndotl - n2 / 3.0 * l_squared().get()).norm();
    return make_report("spinor-square",
                       "residual of (n.L)^2 = |n|^2 L^2 / 3 with the computed L^2",
                       "eigenspace degeneracy", res);
}

// --------------------------- solution matrices ------------------------------

enum class SolutionMatrixKind { Q, J, D };

// the three displayed solution matrices; theta enters only the Q family
inline UnitaryMatrix solution_matrix(SolutionMatrixKind kind, double t, double theta) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double is2 = 1.0 / std::sqrt(2.0);
    Mat x(3, 3);
    switch (kind) {
        case SolutionMatrixKind::Q: {
            const Complex eim = std::exp(Complex(0.0, -theta));
            const Complex eip = std::exp(Complex(0.0, theta));
            x << c * is2, -c * is2, Complex(0.0, s) * eim,
                 is2, is2, 0.0,
                 Complex(0.0, s * is2) * eip, Complex(0.0, -s * is2) * eip, c;
            break;
        }
        case SolutionMatrixKind::J:
            x << c * is2, -c * is2, -s,
                 is2, is2, 0.0,
                 Complex(0.0, s * is2), Complex(0.0, -s * is2), Complex(0.0, c);
            break;
        case SolutionMatrixKind::D:
            x << Complex(0.0, -c * is2), Complex(0.0, c * is2), Complex(0.0, s),
                 is2, is2, 0.0,
                 Complex(0.0, s * is2), Complex(0.0, -s * is2), Complex(0.0, c);
            break;
    }
    return UnitaryMatrix(std::move(x));
}

// X diag(1,-1,0) X^dag, the degenerate-direction image of the family
inline HermitianMatrix isometric_image(SolutionMatrixKind kind, double t, double theta) {
    const Mat x = solution_matrix(kind, t, theta).get();
    Mat l = Mat::Zero(3, 3);
    l(0, 0) = 1.0;
    l(1, 1) = -1.0;
    return HermitianMatrix(Mat(x * l * x.adjoint()));
}

// the displayed target of that image, per family
inline HermitianMatrix isometric_target(SolutionMatrixKind kind, double t, double theta) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    Mat m = Mat::Zero(3, 3);
    switch (kind) {
        case SolutionMatrixKind::Q: {
            const Complex eim = std::exp(Complex(0.0, -theta));
            m(0, 1) = c;
            m(1, 0) = c;
            m(1, 2) = Complex(0.0, -s) * eim;
            m(2, 1) = std::conj(m(1, 2));
            break;
        }
        case SolutionMatrixKind::J:
            m(0, 1) = c;
            m(1, 0) = c;
            m(1, 2) = Complex(0.0, -s);
            m(2, 1) = Complex(0.0, s);
            break;
        case SolutionMatrixKind::D:
            m(0, 1) = Complex(0.0, -c);
            m(1, 0) = Complex(0.0, c);
            m(1, 2) = Complex(0.0, -s);
            m(2, 1) = Complex(0.0, s);
            break;
    }
    return HermitianMatrix(std::move(m));
}

// ---------------------------- rotation catalog -------------------------------

struct RotationFamily {
    SolutionMatrixKind kind = SolutionMatrixKind::Q;
    int index = 1;  // 1..3; (D,2) and (D,3) alias (D,1), (J,3) aliases (J,2)
};

// The displayed rotation matrices. Returned as plain matrices: within each
// family some members are not unitary as displayed (their (1,3) block is
// cos*I - i*sin*G with G anti-Hermitian), so unitarity is measured by tests
// and the ledger rather than enforced here.
inline Mat rotation(const RotationFamily& family, double sigma, double theta) {
    if (family.index < 1 || family.index > 3) {
        throw std::invalid_argument("rotation: index must be 1, 2, or 3");
    }
    const double c = std::cos(sigma);
    const double s = std::sin(sigma);
    const Complex eim = std::exp(Complex(0.0, -theta));
    const Complex eip = std::exp(Complex(0.0, theta));
    Mat r = Mat::Identity(3, 3);
    r(0, 0) = c;
    r(2, 2) = c;
    switch (family.kind) {
        case SolutionMatrixKind::Q:
            if (family.index == 1) {
                r(0, 2) = Complex(0.0, -s) * eim;
                r(2, 0) = Complex(0.0, s) * eip;
            } else if (family.index == 2) {
                r(0, 2) = Complex(0.0, -s) * eim;
                r(2, 0) = Complex(0.0, -s) * eip;
            } else {
                // index 3 is index 1 with the angle reversed
                r(0, 2) = Complex(0.0, s) * eim;
                r(2, 0) = Complex(0.0, -s) * eip;
            }
            break;
        case SolutionMatrixKind::J:
            if (family.index == 1) {
                r(0, 2) = Complex(0.0, s);
                r(2, 0) = Complex(0.0, s);
            } else {
                r(0, 2) = Complex(0.0, -s);
                r(2, 0) = Complex(0.0, s);
            }
            break;
        case SolutionMatrixKind::D:
            r(0, 2) = s;
            r(2, 0) = -s;
            break;
    }
    return r;
}

// ‖R(sigma) * col_i(X(t)) - col_i(X(t+sigma))‖: how well the rotation shifts
// the solution-matrix column forward in its parameter
inline double shift_residual(const RotationFamily& family, SolutionMatrixKind kind, int column,
                             double t, double sigma, double theta) {
    if (column < 1 || column > 3) {
        throw std::invalid_argument("shift_residual: column must be 1, 2, or 3");
    }
    const Mat r = rotation(family, sigma, theta);
    const Vec before = solution_matrix(kind, t, theta).get().col(column - 1);
    const Vec after = solution_matrix(kind, t + sigma, theta).get().col(column - 1);
    return (r * before - after).norm();
}

// ------------------------------- qutrit DFT ---------------------------------

// (1/sqrt3) [[1,1,1],[1,z,z^2],[1,z^2,z^4]] with z = -(1 - i sqrt3)/2
inline UnitaryMatrix qutrit_dft() {
    const Complex z(-0.5, std::sqrt(3.0) / 2.0);
    const Complex z2 = z * z;
    const Complex z4 = z2 * z2;
    const double is3 = 1.0 / std::sqrt(3.0);
    Mat pi(3, 3);
    pi << 1.0, 1.0, 1.0,
          1.0, z, z2,
          1.0, z2, z4;
    return UnitaryMatrix(Mat(is3 * pi));
}

// Pi^T Pi: swaps the second and third basis states; an involution
inline UnitaryMatrix dft_swap_gate() {
    const Mat pi = qutrit_dft().get();
    Mat swap = pi.transpose() * pi;
    Mat target = Mat::Zero(3, 3);
    target(0, 0) = 1.0;
    target(1, 2) = 1.0;
    target(2, 1) = 1.0;
    if ((swap - target).norm() > 1e-13) {
        throw std::runtime_error("dft_swap_gate: computed gate differs from the swap permutation");
    }
    return UnitaryMatrix(std::move(swap));
}

// --------------------------- evolved constraint ------------------------------

// F(t) = U(t) F(0) U(t)^dag with the (1,3)-plane rotation exp(i F0 t) as the
// transport; constant exactly when both diagonal parameters vanish
inline HermitianMatrix evolved_constraint(const BrachistochroneProblem& p, double omega1,
                                          double omega2, double t) {
    const Mat f0 = general_constraint(p, omega1, omega2).get();
    return HermitianMatrix(conjugate_by(u_plus(p, t), f0));
}

// the displayed closed form for the same object, reproduced verbatim. It is
// not a conjugation of F(0): the trace is not conserved, the (2,2) entry
// disagrees with F(0) at t=0, and the lower corner carries an extra minus
// sign that breaks Hermiticity. Returned as a plain matrix so the ledger can
// quantify the gap.
inline Mat evolved_constraint_closed_form(const BrachistochroneProblem& p,
                                          double omega1, double omega2, double t) {
    const double c2 = std::cos(p.k * t) * std::cos(p.k * t);
    const double lam1 = 2.0 * omega1 + omega2;
    const double lam2 = omega1 + omega2;
    const Complex xi =
        0.5 * Complex(p.k * std::cos(2.0 * p.k * t), omega2 * std::sin(2.0 * p.k * t));
    const Complex eip = std::exp(Complex(0.0, p.theta));
    Mat f = Mat::Zero(3, 3);
    f(0, 0) = lam1 * c2 - lam2;
    f(1, 1) = omega2;
    f(2, 2) = -(lam1 * c2 - lam2);
    f(0, 2) = eip * xi;
    f(2, 0) = -std::exp(Complex(0.0, -p.theta)) * std::conj(xi);
    return f;
}

// ----------------------------- swapped problem -------------------------------

// closed-form state of the problem with couplings and constraint exchanged:
// H = [[w1,0,kappa],[0,0,0],[conj,0,-w1]], nu^2 = w1^2 + |kappa|^2, applied
// to the first basis state through the rank-reduced exponential
inline Vec swapped_problem_state(double omega1, Complex kap, double t) {
    const double nu = std::sqrt(omega1 * omega1 + std::norm(kap));
    if (!(nu > 0.0)) {
        throw std::invalid_argument("swapped_problem_state: nu must be positive");
    }
    Mat h = Mat::Zero(3, 3);
    h(0, 0) = omega1;
    h(2, 2) = -omega1;
    h(0, 2) = kap;
    h(2, 0) = std::conj(kap);
    Vec e1 = Vec::Zero(3);
    e1(0) = 1.0;
    return expm_rank_reduced(HermitianMatrix(std::move(h)), nu, t).get() * e1;
}

}  // namespace su3ctl
