// propagators.hpp: closed-form factorizations of the time evolution
// operator, the frame-transport operator built from the instantaneous
// diagonalizer, the conservation-law split, and the resonance arithmetic
// that decides whether the evolution is periodic at all.

#pragma once

#include <su3ctl/expm.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/problem.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace su3ctl {

// arrowhead generator A = H(0) + F0 with A^3 = Delta^2 A
inline HermitianMatrix arrowhead_generator(const BrachistochroneProblem& p) {
    return HermitianMatrix(hamiltonian_at(p, 0.0).get() + constraint(p).get());
}

// exp(i*F0*t): a rotation by k*t in the (1,3) plane carrying the corner phase
inline UnitaryMatrix u_plus(const BrachistochroneProblem& p, double t) {
    const double c = std::cos(p.k * t);
    const double s = std::sin(p.k * t);
    const Complex ka = kappa(p);
    Mat u = Mat::Identity(3, 3);
    u(0, 0) = c;
    u(2, 2) = c;
    u(0, 2) = Complex(0.0, s / p.k) * ka;
    u(2, 0) = Complex(0.0, s / p.k) * std::conj(ka);
    return UnitaryMatrix(std::move(u));
}

// exp(-i*(H(0)+F0)*t), through the rank-reduced closed form
inline UnitaryMatrix u_minus(const BrachistochroneProblem& p, double t) {
    return expm_rank_reduced(arrowhead_generator(p), delta(p), t);
}

// U(t,0) = exp(i*F0*t) * exp(-i*(H(0)+F0)*t); solves i dU/dt = H(t) U
inline UnitaryMatrix schrodinger_propagator(const BrachistochroneProblem& p, double t) {
    return UnitaryMatrix(u_plus(p, t).get() * u_minus(p, t).get());
}

struct DiagonalFactorization {
    Mat q;                         // unitary diagonalizer, columns = eigenvectors
    Eigen::Vector3d l{0., 0., 0.}; // spectrum (R, -R, 0)
};

// H(t) = Q(t) diag(R,-R,0) Q(t)^dag with explicit eigenvector columns; the
// null column uses conj(e1) so that |e1|^2+|e2|^2 = R^2 closes it
inline DiagonalFactorization diagonal_factorization(const BrachistochroneProblem& p, double t) {
    if (!(p.R > 0.0)) {
        throw std::invalid_argument("diagonal_factorization: degenerate normalization R=0");
    }
    const ControlFields f = control_fields(p, t);
    const double r = p.R;
    const double s2r = std::sqrt(2.0) * r;
    Mat q(3, 3);
    q(0, 0) = f.eps1 / s2r;
    q(1, 0) = r / s2r;
    q(2, 0) = std::conj(f.eps2) / s2r;
    q(0, 1) = -f.eps1 / s2r;
    q(1, 1) = r / s2r;
    q(2, 1) = -std::conj(f.eps2) / s2r;
    q(0, 2) = -f.eps2 / r;
    q(1, 2) = 0.0;
    q(2, 2) = std::conj(f.eps1) / r;
    DiagonalFactorization d;
    d.q = std::move(q);
    d.l = Eigen::Vector3d(r, -r, 0.0);
    return d;
}

// U(t,s) = Q(t) Q(s)^dag; conjugates H(s) into H(t) and depends on t-s only
inline UnitaryMatrix frame_transport(const BrachistochroneProblem& p, double t, double s) {
    const Mat qt = diagonal_factorization(p, t).q;
    const Mat qs = diagonal_factorization(p, s).q;
    return UnitaryMatrix(qt * qs.adjoint());
}

namespace detail {

// composite Simpson quadrature of the matrix-valued map on [0, t]
inline Mat simpson_matrix_integral(const std::function<Mat(double)>& m, double t, int panels) {
    if (panels < 2) {
        throw std::invalid_argument("simpson_matrix_integral: need at least 2 panels");
    }
    if (panels % 2 != 0) {
        ++panels;
    }
    const double h = t / static_cast<double>(panels);
    Mat acc = m(0.0) + m(t);
    for (int j = 1; j < panels; ++j) {
        const double w = (j % 2 == 1) ? 4.0 : 2.0;
        acc += w * m(static_cast<double>(j) * h);
    }
    return Mat(acc * (h / 3.0));
}

}  // namespace detail

// conservation-law split U1 = exp(-i*(F0*t + int_0^t H ds)), U2 = exp(i*F0*t);
// the exponent of U1 is assembled by Simpson quadrature on each entry
inline std::pair<UnitaryMatrix, UnitaryMatrix> conservation_split(const BrachistochroneProblem& p,
                                                                  double t,
                                                                  int quadrature_steps = 256) {
    if (quadrature_steps < 16) {
        throw std::invalid_argument("conservation_split: quadrature_steps must be >= 16");
    }
    const Mat f0 = constraint(p).get();
    Mat exponent = f0 * t;
    if (t != 0.0) {
        const auto h = [&p](double s) { return hamiltonian_at(p, s).get(); };
        exponent += detail::simpson_matrix_integral(h, t, quadrature_steps);
    }
    // quadrature can leave a tiny anti-Hermitian dust; symmetrize before use
    exponent = 0.5 * (exponent + exponent.adjoint()).eval();
    UnitaryMatrix u1 = expm_hermitian(HermitianMatrix(std::move(exponent)), 1.0);
    UnitaryMatrix u2 = u_plus(p, t);
    return {std::move(u1), std::move(u2)};
}

struct ResonanceRatio {
    long m = 0;
    long n = 0;
};

class NotResonant : public std::runtime_error {
public:
    explicit NotResonant(const std::string& what) : std::runtime_error(what) {}
};

// Delta/k must be rational for the evolution to revive. Accepted when the
// best rational approximation with denominator <= 1000 lands within 1e-9;
// the bound separates true ratios from irrationals like sqrt(2) (best
// q<=1000 approximation error ~5e-7).
inline std::optional<ResonanceRatio> try_resonance(const BrachistochroneProblem& p) {
    const double x = delta(p) / p.k;
    long best_m = 0;
    long best_n = 1;
    double best_err = std::numeric_limits<double>::infinity();
    for (long q = 1; q <= 1000; ++q) {
        const long m = std::lround(x * static_cast<double>(q));
        const double err = std::abs(x - static_cast<double>(m) / static_cast<double>(q));
        if (err < best_err) {
            best_err = err;
            best_m = m;
            best_n = q;
        }
    }
    if (best_err > 1e-9) {
        return std::nullopt;
    }
    const long g = std::gcd(best_m, best_n);
    return ResonanceRatio{best_m / g, best_n / g};
}

inline ResonanceRatio resonance(const BrachistochroneProblem& p) {
    const auto r = try_resonance(p);
    if (!r) {
        throw NotResonant("resonance: Delta/k = " + std::to_string(delta(p) / p.k) +
                          " has no rational approximation within 1e-9 (denominator <= 1000)");
    }
    return *r;
}

// smallest T > 0 with k*T and Delta*T both multiples of 2*pi; with
// Delta/k = m/n reduced, that is T = 2*pi*n/k
inline double fundamental_period(const BrachistochroneProblem& p) {
    const ResonanceRatio r = resonance(p);
    return 2.0 * kPi * static_cast<double>(r.n) / p.k;
}

inline Vec evolve_state(const BrachistochroneProblem& p, const Vec& psi0, double t) {
    if (psi0.size() != 3) {
        throw std::invalid_argument("evolve_state: state must have dimension 3");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("evolve_state: state must be normalized");
    }
    return schrodinger_propagator(p, t).get() * psi0;
}

struct PropagatorBundle {
    double t = 0.0;
    UnitaryMatrix u_schrodinger;
    UnitaryMatrix u_plus;
    UnitaryMatrix u_minus;
    UnitaryMatrix u_frame;
    UnitaryMatrix u1;
    UnitaryMatrix u2;
};

inline PropagatorBundle propagator_bundle(const BrachistochroneProblem& p, double t,
                                          int quadrature_steps = 256) {
    auto split = conservation_split(p, t, quadrature_steps);
    return {t,
            schrodinger_propagator(p, t),
            u_plus(p, t),
            u_minus(p, t),
            frame_transport(p, t, 0.0),
            std::move(split.first),
            std::move(split.second)};
}

}  // namespace su3ctl
