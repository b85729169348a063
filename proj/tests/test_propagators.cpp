// closed-form propagator factorizations: each factor against frozen values,
// the product against the numerical oracle, frame transport, the
// conservation-law split, and the resonance arithmetic

#include <su3ctl/oracle.hpp>
#include <su3ctl/propagators.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace su3ctl;
using Catch::Approx;

namespace {

SampledGenerator orbit_generator(const BrachistochroneProblem& p, double t1) {
    return {[p](double s) { return hamiltonian_at(p, s).get(); }, 0.0, t1};
}

Mat oracle_propagator(const BrachistochroneProblem& p, double t, long steps = 32768) {
    return numeric_propagator(orbit_generator(p, t), 0.0, t, steps).get();
}

}  // namespace

TEST_CASE("arrowhead generator satisfies its cubic relation") {
    for (const auto& p : {make_problem(1.0, 0.0), make_problem(1.3, 0.8, 2.0)}) {
        const Mat a = arrowhead_generator(p).get();
        const double nu = delta(p);
        REQUIRE((a * a * a - nu * nu * a).norm() < 1e-12);
    }
}

TEST_CASE("frozen beat-half value of the arrowhead exponential") {
    // k = 1, theta = 0, R = sqrt(3): Delta = 2, and at t = pi/2 the phase
    // Delta*t = pi gives [[-1,0,0],[0,-1/2,-sqrt(3)/2],[0,-sqrt(3)/2,1/2]]
    const BrachistochroneProblem p = make_problem(1.0, 0.0);
    const Mat u = u_minus(p, kPi / 2.0).get();
    Mat expected = Mat::Zero(3, 3);
    expected(0, 0) = -1.0;
    expected(1, 1) = -0.5;
    expected(1, 2) = -std::sqrt(3.0) / 2.0;
    expected(2, 1) = -std::sqrt(3.0) / 2.0;
    expected(2, 2) = 0.5;
    REQUIRE((u - expected).norm() < 1e-14);
}

TEST_CASE("frozen quarter-beat value of the constraint exponential") {
    // k = 1, theta = 0, t = pi/2: cos kt = 0 and the corner carries the i
    const BrachistochroneProblem p = make_problem(1.0, 0.0);
    const Mat u = u_plus(p, kPi / 2.0).get();
    Mat expected = Mat::Zero(3, 3);
    expected(0, 2) = Complex(0.0, 1.0);
    expected(1, 1) = 1.0;
    expected(2, 0) = Complex(0.0, 1.0);
    REQUIRE((u - expected).norm() < 1e-14);
}

TEST_CASE("frozen full-beat value of the propagator") {
    // k = 1, theta = 0: at t = pi both factors are diagonal signs
    const BrachistochroneProblem p = make_problem(1.0, 0.0);
    const Mat u = schrodinger_propagator(p, kPi).get();
    Mat expected = Mat::Zero(3, 3);
    expected(0, 0) = -1.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = -1.0;
    REQUIRE((u - expected).norm() < 1e-13);
}

TEST_CASE("propagator starts at the identity and stays unitary") {
    const BrachistochroneProblem p = make_problem(1.4, 1.9);
    REQUIRE((schrodinger_propagator(p, 0.0).get() - Mat::Identity(3, 3)).norm() < 1e-15);
    for (const double t : {0.3, 2.2, 9.5}) {
        const Mat u = schrodinger_propagator(p, t).get();
        REQUIRE((u * u.adjoint() - Mat::Identity(3, 3)).norm() < 1e-14);
    }
}

TEST_CASE("propagator solves the equation of motion") {
    const BrachistochroneProblem p = make_problem(1.1, 0.7);
    for (const double t : {0.4, 1.7, 3.9}) {
        const Mat du = central_difference(
            [&p](double s) { return schrodinger_propagator(p, s).get(); }, t, 1e-5);
        const Mat rhs = Complex(0.0, -1.0) * hamiltonian_at(p, t).get() *
                        schrodinger_propagator(p, t).get();
        REQUIRE((du - rhs).norm() < 1e-9);
    }
}

TEST_CASE("closed form matches the oracle") {
    for (const auto& p : {make_problem(1.0, 0.7), make_problem(0.8, 2.3, 1.7)}) {
        for (const double t : {0.5, 1.9, 4.4}) {
            REQUIRE((schrodinger_propagator(p, t).get() - oracle_propagator(p, t)).norm() < 1e-7);
        }
    }
}

TEST_CASE("propagator composes over an intermediate time") {
    const BrachistochroneProblem p = make_problem(1.0, 0.7);
    const double s = 1.3;
    const double t = 3.1;
    const Mat late = numeric_propagator(orbit_generator(p, t), s, t, 32768).get();
    const Mat whole = schrodinger_propagator(p, t).get();
    const Mat glued = late * schrodinger_propagator(p, s).get();
    REQUIRE((whole - glued).norm() < 1e-8);
}

TEST_CASE("instantaneous diagonalization is exact") {
    const BrachistochroneProblem p = make_problem(1.2, 1.5, 2.6);
    for (const double t : {0.0, 0.8, 2.7}) {
        const DiagonalFactorization d = diagonal_factorization(p, t);
        REQUIRE((d.q * d.q.adjoint() - Mat::Identity(3, 3)).norm() < 1e-14);
        REQUIRE(d.l(0) == Approx(p.R));
        REQUIRE(d.l(1) == Approx(-p.R));
        REQUIRE(d.l(2) == 0.0);
        const Mat rebuilt = d.q * d.l.cast<Complex>().asDiagonal() * d.q.adjoint();
        REQUIRE((rebuilt - hamiltonian_at(p, t).get()).norm() < 1e-14);
    }
    BrachistochroneProblem broken = p;
    broken.R = 0.0;
    REQUIRE_THROWS_AS(diagonal_factorization(broken, 0.0), std::invalid_argument);
}

TEST_CASE("frame transport conjugates the orbit and forms a groupoid") {
    const BrachistochroneProblem p = make_problem(1.0, 0.7);
    const double s = 0.6;
    const double t = 2.1;
    const Mat u = frame_transport(p, t, s).get();
    REQUIRE((u * hamiltonian_at(p, s).get() * u.adjoint() - hamiltonian_at(p, t).get()).norm() <
            1e-13);

    // depends on t - s only, and equals the constraint exponential there
    REQUIRE((u - frame_transport(p, t + 1.9, s + 1.9).get()).norm() < 1e-13);
    REQUIRE((u - u_plus(p, t - s).get()).norm() < 1e-13);

    const double r = 4.0;
    const Mat glued = frame_transport(p, r, t).get() * u;
    REQUIRE((glued - frame_transport(p, r, s).get()).norm() < 1e-13);
}

TEST_CASE("conservation split closes only at the revival time") {
    const BrachistochroneProblem p = make_problem(1.0, 0.7);
    const double period = fundamental_period(p);
    const auto [u1, u2] = conservation_split(p, period, 512);
    REQUIRE((u1.get() * u2.get() - Mat::Identity(3, 3)).norm() < 1e-9);

    const auto [v1, v2] = conservation_split(p, 0.4 * period, 512);
    REQUIRE((v1.get() * v2.get() - schrodinger_propagator(p, 0.4 * period).get()).norm() > 0.1);

    REQUIRE_THROWS_AS(conservation_split(p, 1.0, 8), std::invalid_argument);
}

TEST_CASE("resonance arithmetic") {
    REQUIRE(resonance(make_problem(1.0, 0.7)).m == 2);
    REQUIRE(resonance(make_problem(1.0, 0.7)).n == 1);
    REQUIRE(fundamental_period(make_problem(1.0, 0.7)) == Approx(2.0 * kPi));

    // R = 4k/3 gives Delta/k = 5/3 and a three-beat revival
    const BrachistochroneProblem ratio = make_problem(1.0, 0.2, 4.0 / 3.0);
    REQUIRE(resonance(ratio).m == 5);
    REQUIRE(resonance(ratio).n == 3);
    REQUIRE(fundamental_period(ratio) == Approx(6.0 * kPi));
    const Mat u = schrodinger_propagator(ratio, fundamental_period(ratio)).get();
    REQUIRE((u - Mat::Identity(3, 3)).norm() < 1e-12);

    // R = k gives Delta/k = sqrt(2): no revival
    const BrachistochroneProblem irr = make_problem(1.0, 0.2, 1.0);
    REQUIRE_FALSE(try_resonance(irr).has_value());
    REQUIRE_THROWS_AS(fundamental_period(irr), NotResonant);
}

TEST_CASE("state evolution preserves the norm and guards its input") {
    const BrachistochroneProblem p = make_problem(1.0, 0.7);
    Vec psi0 = Vec::Zero(3);
    psi0(1) = 1.0;
    const Vec psi = evolve_state(p, psi0, 1.7);
    REQUIRE(psi.norm() == Approx(1.0));

    // the middle level is fixed by frame transport but not by the dynamics
    REQUIRE((frame_transport(p, 1.7, 0.0).get() * psi0 - psi0).norm() < 1e-14);
    REQUIRE((psi - Vec(psi0.cast<Complex>())).norm() > 0.1);

    REQUIRE_THROWS_AS(evolve_state(p, Vec::Zero(3), 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(evolve_state(p, Vec::Ones(4), 1.0), std::invalid_argument);
}

TEST_CASE("bundle members agree with the standalone constructors") {
    const BrachistochroneProblem p = make_problem(1.0, 0.7);
    const double t = 2.3;
    const PropagatorBundle b = propagator_bundle(p, t);
    REQUIRE(b.t == t);
    REQUIRE((b.u_schrodinger.get() - b.u_plus.get() * b.u_minus.get()).norm() < 1e-14);
    REQUIRE((b.u_frame.get() - frame_transport(p, t, 0.0).get()).norm() < 1e-14);
    const auto [u1, u2] = conservation_split(p, t);
    REQUIRE((b.u1.get() - u1.get()).norm() < 1e-14);
    REQUIRE((b.u2.get() - u2.get()).norm() < 1e-14);
}
