// csv.hpp: trajectory CSV with a fixed header: the time column followed by
// the 18 re/im components of a 3x3 propagator in row-major order. Values are
// written with 17 significant digits so reading the file back reproduces the
// doubles bit-exactly.

#pragma once

#include <su3ctl/matrix.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace su3ctl {

inline std::string trajectory_csv_header() {
    std::string h = "t";
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const std::string cell = "u" + std::to_string(i) + std::to_string(j);
            h += "," + cell + "_re," + cell + "_im";
        }
    }
    return h;
}

namespace detail {

inline std::string shortest(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline void write_trajectory(std::ostream& os, const std::vector<double>& ts,
                             const std::vector<Mat>& us) {
    if (ts.size() != us.size()) {
        throw std::invalid_argument("write_trajectory: time/matrix count mismatch");
    }
    os << trajectory_csv_header() << "\n";
    for (std::size_t r = 0; r < ts.size(); ++r) {
        require_dim(us[r], 3, "write_trajectory");
        os << detail::shortest(ts[r]);
        for (Eigen::Index i = 0; i < 3; ++i) {
            for (Eigen::Index j = 0; j < 3; ++j) {
                os << "," << detail::shortest(us[r](i, j).real()) << ","
                   << detail::shortest(us[r](i, j).imag());
            }
        }
        os << "\n";
    }
}

inline std::pair<std::vector<double>, std::vector<Mat>> read_trajectory(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw std::invalid_argument("read_trajectory: empty input");
    }
    if (line != trajectory_csv_header()) {
        throw std::invalid_argument("read_trajectory: unexpected header: " + line);
    }
    std::vector<double> ts;
    std::vector<Mat> us;
    std::size_t row = 0;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(cell, &used));
                if (used != cell.size()) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("read_trajectory: row " + std::to_string(row) +
                                            ": bad number \"" + cell + "\"");
            }
        }
        if (vals.size() != 19) {
            throw std::invalid_argument("read_trajectory: row " + std::to_string(row) +
                                        ": expected 19 columns, got " +
                                        std::to_string(vals.size()));
        }
        ts.push_back(vals[0]);
        Mat u(3, 3);
        for (Eigen::Index i = 0; i < 3; ++i) {
            for (Eigen::Index j = 0; j < 3; ++j) {
                const std::size_t base = 1 + 2 * static_cast<std::size_t>(3 * i + j);
                u(i, j) = Complex(vals[base], vals[base + 1]);
            }
        }
        us.push_back(std::move(u));
    }
    return {std::move(ts), std::move(us)};
}

}  // namespace su3ctl
