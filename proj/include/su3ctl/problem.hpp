// problem.hpp: the time-optimal control problem on SU(3) with two driven
// couplings and a corner constraint. Houses the solved control fields, the
// Hamiltonian/constraint builders, the 4x4 field propagator, and the
// residuals of the governing commutator equation.

#pragma once

#include <su3ctl/expm.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/oracle.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace su3ctl {

inline constexpr double kPi = std::numbers::pi;

// Which phase the constraint corner carries. SelfConsistent makes
// exp(i*F0*t) conjugate H(0) into H(t) exactly; AlternateCorner keeps the
// opposite corner phase as a checkable variant (its mismatch is a ledger
// claim, not an assertion).
enum class Convention {
    SelfConsistent,
    AlternateCorner,
};

struct BrachistochroneProblem {
    double k = 1.0;       // constraint strength, rad/time
    double theta = 0.0;   // coupling phase, normalized to [0, 2*pi)
    double R = 0.0;       // energy radius, Tr[H^2/2] = R^2
    Convention convention = Convention::SelfConsistent;
};

// R defaults to sqrt(3)*k, the smallest energy radius with a full revival.
inline BrachistochroneProblem make_problem(double k, double theta,
                                           std::optional<double> R = std::nullopt,
                                           Convention convention = Convention::SelfConsistent) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("make_problem: k must be positive and finite");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("make_problem: theta must be finite");
    }
    double r = R.value_or(std::sqrt(3.0) * k);
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("make_problem: R must be positive and finite");
    }
    double th = std::fmod(theta, 2.0 * kPi);
    if (th < 0.0) {
        th += 2.0 * kPi;
    }
    return {k, th, r, convention};
}

inline double delta(const BrachistochroneProblem& p) {
    return std::hypot(p.R, p.k);
}

// corner entry of the constraint, convention dependent
inline Complex kappa(const BrachistochroneProblem& p) {
    const double sign = (p.convention == Convention::SelfConsistent) ? -1.0 : 1.0;
    return p.k * std::exp(Complex(0.0, sign * p.theta));
}

struct ControlFields {
    Complex eps1;
    Complex eps2;
};

// e1(t) = R cos(kt), e2(t) = -i R e^{-i theta} sin(kt)
inline ControlFields control_fields(const BrachistochroneProblem& p, double t) {
    const double c = std::cos(p.k * t);
    const double s = std::sin(p.k * t);
    return {Complex(p.R * c, 0.0), Complex(0.0, -p.R * s) * std::exp(Complex(0.0, -p.theta))};
}

// tridiagonal coupling pattern [[0,e1,0],[conj(e1),0,e2],[0,conj(e2),0]]
inline HermitianMatrix coupling_hamiltonian(const ControlFields& f) {
    Mat h = Mat::Zero(3, 3);
    h(0, 1) = f.eps1;
    h(1, 0) = std::conj(f.eps1);
    h(1, 2) = f.eps2;
    h(2, 1) = std::conj(f.eps2);
    return HermitianMatrix(std::move(h));
}

inline HermitianMatrix hamiltonian_at(const BrachistochroneProblem& p, double t) {
    return coupling_hamiltonian(control_fields(p, t));
}

// constraint with general diagonal: [[w1,0,kappa],[0,-(w1+w2),0],[conj,0,w2]]
inline HermitianMatrix general_constraint(const BrachistochroneProblem& p, double omega1,
                                          double omega2) {
    if (!std::isfinite(omega1) || !std::isfinite(omega2)) {
        throw std::invalid_argument("general_constraint: omegas must be finite");
    }
    Mat f = Mat::Zero(3, 3);
    f(0, 0) = omega1;
    f(1, 1) = -(omega1 + omega2);
    f(2, 2) = omega2;
    f(0, 2) = kappa(p);
    f(2, 0) = std::conj(kappa(p));
    return HermitianMatrix(std::move(f));
}

// the solved constraint F0: corner-only, traceless, Tr[H(t) F0] = 0
inline HermitianMatrix constraint(const BrachistochroneProblem& p) {
    return general_constraint(p, 0.0, 0.0);
}

// 4x4 Hermitian generator of the field flow; squares to k^2 * I
inline Mat upsilon(const BrachistochroneProblem& p) {
    const Complex ka = kappa(p);
    Mat u = Mat::Zero(4, 4);
    u(0, 3) = -ka;
    u(3, 0) = -std::conj(ka);
    u(1, 2) = std::conj(ka);
    u(2, 1) = ka;
    return u;
}

// applies exp(-i*t*Upsilon) to (e1, conj e1, e2, conj e2); the flow preserves
// the conjugate pairing, which is re-checked on the way out
inline ControlFields propagate_fields(const BrachistochroneProblem& p, const ControlFields& eps0,
                                      double t) {
    Vec xi(4);
    xi << eps0.eps1, std::conj(eps0.eps1), eps0.eps2, std::conj(eps0.eps2);
    const UnitaryMatrix u = expm_hermitian(HermitianMatrix(upsilon(p)), t);
    const Vec out = u.get() * xi;
    const double pair_res = std::max(std::abs(out(1) - std::conj(out(0))),
                                     std::abs(out(3) - std::conj(out(2))));
    if (pair_res > 1e-10 * std::max(1.0, out.norm())) {
        throw std::runtime_error("propagate_fields: conjugate pairing violated, residual " +
                                 std::to_string(pair_res));
    }
    return {out(0), out(2)};
}

// the displayed closed form for exp(-i*t*Upsilon). Its off-diagonal entries
// are the true ones multiplied by i (the -i factors of cos - i*(U/k)*sin are
// dropped), so the displayed matrix is not unitary; it is kept evaluable for
// the ledger, which measures the gap 2*sqrt(2)*|sin kt|.
inline Mat field_flow_displayed(const BrachistochroneProblem& p, double t) {
    const double c = std::cos(p.k * t);
    const double s = std::sin(p.k * t);
    const Complex eim = std::exp(Complex(0.0, -p.theta));
    const Complex eip = std::exp(Complex(0.0, p.theta));
    Mat m = Mat::Identity(4, 4) * c;
    m(0, 3) = -eim * s;
    m(1, 2) = eip * s;
    m(2, 1) = eim * s;
    m(3, 0) = -eip * s;
    return m;
}

// G = (H+F) - Tr(P(H+F)) P with P = |e1><e1|; the (1,1) entry is zero by
// construction and the anticommutator fixed point {G,P} = G forces
// omega1 = omega2 = 0 together with eps2 = 0
inline HermitianMatrix boundary_operator(const BrachistochroneProblem& p,
                                         const ControlFields& eps0, double omega1,
                                         double omega2) {
    const Mat hf = coupling_hamiltonian(eps0).get() + general_constraint(p, omega1, omega2).get();
    Mat g = hf;
    g(0, 0) = 0.0;
    return HermitianMatrix(std::move(g));
}

// Frobenius norm of d/dt[H(t)+F0] + i[H(t),F0], with the derivative taken by
// central differences; O(h^2) for the solved fields
inline double brachistochrone_residual(const BrachistochroneProblem& p, double t, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("brachistochrone_residual: h must be positive");
    }
    const Mat f0 = constraint(p).get();
    const auto total = [&p, &f0](double s) { return Mat(hamiltonian_at(p, s).get() + f0); };
    const Mat lhs = central_difference(total, t, h);
    const Mat rhs = Complex(0.0, -1.0) * commutator(hamiltonian_at(p, t).get(), f0);
    return (lhs - rhs).norm();
}

// ‖[H(s),F0] - i*k*H(s + pi/(2k))‖: the constraint advances the Hamiltonian
// by a quarter period under the bracket
inline double back_action_residual(const BrachistochroneProblem& p, double s) {
    const Mat lhs = commutator(hamiltonian_at(p, s).get(), constraint(p).get());
    const Mat rhs = Complex(0.0, p.k) * hamiltonian_at(p, s + kPi / (2.0 * p.k)).get();
    return (lhs - rhs).norm();
}

// variant form with a retarded argument and no k factor; it does not hold,
// and the ledger records how far from holding it is
inline double back_action_retarded_residual(const BrachistochroneProblem& p, double s) {
    const Mat lhs = commutator(hamiltonian_at(p, s).get(), constraint(p).get());
    const Mat rhs = Complex(0.0, 1.0) * hamiltonian_at(p, s - kPi / (2.0 * p.k)).get();
    return (lhs - rhs).norm();
}

}  // namespace su3ctl
