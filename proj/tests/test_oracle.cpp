// numerical propagator: exactness on constant generators, composition,
// measured convergence order, input guards

#include <su3ctl/expm.hpp>
#include <su3ctl/oracle.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace su3ctl;
using Catch::Approx;

namespace {

// smooth, genuinely time-dependent Hermitian generator for order tests
SampledGenerator trig_generator(std::mt19937_64& rng) {
    const Mat a = testing::random_hermitian(rng, 3);
    const Mat b = testing::random_hermitian(rng, 3);
    return {[a, b](double t) { return Mat(a * std::cos(t) + b * std::sin(2.0 * t)); }, 0.0, 2.0};
}

}  // namespace

TEST_CASE("constant generator is integrated exactly") {
    std::mt19937_64 rng(21);
    const Mat h = testing::random_hermitian(rng, 3);
    const SampledGenerator gen{[h](double) { return h; }, 0.0, 1.0};
    const Mat u = numeric_propagator(gen, 0.0, 1.0, 64).get();
    const Mat exact = expm_hermitian(HermitianMatrix(Mat(h)), 1.0).get();
    REQUIRE((u - exact).norm() < 1e-12);
}

TEST_CASE("splitting at step boundaries composes exactly") {
    std::mt19937_64 rng(22);
    const SampledGenerator gen = trig_generator(rng);
    const Mat whole = numeric_propagator(gen, 0.0, 1.0, 64).get();
    const Mat late = numeric_propagator(gen, 0.5, 1.0, 32).get();
    const Mat early = numeric_propagator(gen, 0.0, 0.5, 32).get();
    REQUIRE((whole - late * early).norm() < 1e-13);
}

TEST_CASE("midpoint rule converges at second order") {
    std::mt19937_64 rng(23);
    const SampledGenerator gen = trig_generator(rng);
    const auto order = convergence_order(gen, 0.0, 1.5, 64);
    REQUIRE(order.has_value());
    REQUIRE(*order == Approx(2.0).margin(0.2));
}

TEST_CASE("order is unmeasurable when differences sit at roundoff") {
    std::mt19937_64 rng(24);
    const Mat h = testing::random_hermitian(rng, 3);
    const SampledGenerator gen{[h](double) { return h; }, 0.0, 1.0};
    REQUIRE_FALSE(convergence_order(gen, 0.0, 1.0, 64).has_value());
}

TEST_CASE("propagator is unitary regardless of step count") {
    std::mt19937_64 rng(25);
    const SampledGenerator gen = trig_generator(rng);
    for (const long steps : {2L, 17L, 128L}) {
        REQUIRE(unitarity_residual(numeric_propagator(gen, 0.0, 1.7, steps).get()) < 1e-13);
    }
}

TEST_CASE("input guards") {
    std::mt19937_64 rng(26);
    const SampledGenerator gen = trig_generator(rng);
    REQUIRE_THROWS_AS(numeric_propagator(gen, 0.0, 1.0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(numeric_propagator(gen, 1.0, 1.0, 8), std::invalid_argument);
    REQUIRE_THROWS_AS(convergence_order(gen, 0.0, 1.0, 32), std::invalid_argument);

    const Mat skew = testing::random_matrix(rng, 3);
    const SampledGenerator bad{[skew](double) { return skew; }, 0.0, 1.0};
    REQUIRE_THROWS_AS(numeric_propagator(bad, 0.0, 1.0, 8), std::invalid_argument);
}

TEST_CASE("central difference differentiates a matrix map") {
    std::mt19937_64 rng(27);
    const Mat m0 = testing::random_hermitian(rng, 3);
    const auto map = [&m0](double t) { return Mat(std::sin(t) * m0); };
    const double h = 1e-4;
    const Mat d = central_difference(map, 0.3, h);
    REQUIRE((d - std::cos(0.3) * m0).norm() < 1e-8);
    REQUIRE_THROWS_AS(central_difference(map, 0.3, 0.0), std::invalid_argument);
}
