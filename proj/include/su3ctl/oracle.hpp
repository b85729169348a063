// oracle.hpp: independent numerical propagator for i dU/dt = H(t) U and
// finite-difference utilities. Deliberately shares nothing with the closed
// forms except the exponential of a constant Hermitian matrix.

#pragma once

#include <su3ctl/expm.hpp>
#include <su3ctl/matrix.hpp>

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace su3ctl {

// A time-dependent generator sampled on [t0, t1]; every sample must be
// Hermitian (checked at use sites).
struct SampledGenerator {
    std::function<Mat(double)> h;
    double t0 = 0.0;
    double t1 = 0.0;
};

namespace detail {

inline Mat hermitian_sample(const SampledGenerator& g, double t) {
    Mat m = g.h(t);
    require_square(m, "numeric_propagator");
    require_finite(m, "numeric_propagator");
    const double res = hermiticity_residual(m);
    if (res > 1e-12 * std::max(1.0, m.norm())) {
        throw std::invalid_argument("numeric_propagator: generator sample at t=" +
                                    std::to_string(t) + " is not Hermitian");
    }
    return m;
}

}  // namespace detail

// Ordered product of midpoint exponentials exp(-i*h*H(t_mid)), latest factor
// leftmost. Unitary by construction, global error O(h^2).
inline UnitaryMatrix numeric_propagator(const SampledGenerator& g, double t0, double t1,
                                        long steps) {
    if (steps < 2) {
        throw std::invalid_argument("numeric_propagator: steps must be >= 2");
    }
    if (!(t1 > t0)) {
        throw std::invalid_argument("numeric_propagator: need t1 > t0");
    }
    const double h = (t1 - t0) / static_cast<double>(steps);
    Mat u;
    bool first = true;
    for (long j = 0; j < steps; ++j) {
        const double tm = t0 + (static_cast<double>(j) + 0.5) * h;
        const HermitianMatrix hm(detail::hermitian_sample(g, tm));
        const Mat step = expm_hermitian(hm, h).get();
        if (first) {
            u = step;
            first = false;
        } else {
            u = step * u;
        }
    }
    return UnitaryMatrix(std::move(u));
}

// Richardson order estimate from resolutions n, 2n, 4n. Returns nullopt when
// the successive differences sit at roundoff and no order is measurable.
inline std::optional<double> convergence_order(const SampledGenerator& g, double t0, double t1,
                                               long base_steps) {
    if (base_steps < 64) {
        throw std::invalid_argument("convergence_order: base_steps must be >= 64");
    }
    const Mat u1 = numeric_propagator(g, t0, t1, base_steps).get();
    const Mat u2 = numeric_propagator(g, t0, t1, 2 * base_steps).get();
    const Mat u4 = numeric_propagator(g, t0, t1, 4 * base_steps).get();
    const double d1 = (u1 - u2).norm();
    const double d2 = (u2 - u4).norm();
    if (d1 < 1e-13 || d2 < 1e-13) {
        return std::nullopt;
    }
    return std::log2(d1 / d2);
}

inline Mat central_difference(const std::function<Mat(double)>& m, double t, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("central_difference: h must be positive");
    }
    return (m(t + h) - m(t - h)) / (2.0 * h);
}

}  // namespace su3ctl
