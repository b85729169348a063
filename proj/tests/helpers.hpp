// shared test utilities: seeded random matrices

#pragma once

#include <su3ctl/matrix.hpp>

#include <random>

namespace su3ctl::testing {

inline Mat random_matrix(std::mt19937_64& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = Complex(u(rng), u(rng));
        }
    }
    return a;
}

inline Mat random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
    const Mat a = random_matrix(rng, n);
    return Mat(0.5 * (a + a.adjoint()));
}

}  // namespace su3ctl::testing
