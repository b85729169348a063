// json_io.hpp: JSON serialization for matrices, problems, root classes, and
// ledger reports. Numbers rely on the shortest round-trip representation of
// the JSON library, so write-then-read is bit-exact.

#pragma once

#include <su3ctl/claim.hpp>
#include <su3ctl/classify.hpp>
#include <su3ctl/ledger.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/problem.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace su3ctl {

using Json = nlohmann::json;

// ------------------------------- matrices -----------------------------------

// {"dim": n, "entries": [[re, im], ...]} with n*n row-major entries
inline Json mat_to_json(const Mat& m) {
    require_square(m, "mat_to_json");
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
    }
    return Json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

inline Mat mat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("mat_from_json: expected {\"dim\", \"entries\"}");
    }
    if (!j["dim"].is_number_integer()) {
        throw std::invalid_argument("mat_from_json: dim must be an integer");
    }
    const long n = j["dim"].get<long>();
    if (n != 3 && n != 4) {
        throw std::invalid_argument("mat_from_json: dim must be 3 or 4, got " +
                                    std::to_string(n));
    }
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n * n)) {
        throw std::invalid_argument("mat_from_json: entries must hold " + std::to_string(n * n) +
                                    " [re, im] pairs");
    }
    Mat m(n, n);
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const Json& e = entries[idx];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument("mat_from_json: entries[" + std::to_string(idx) +
                                        "]: expected [re, im]");
        }
        const auto i = static_cast<Eigen::Index>(idx) / n;
        const auto c = static_cast<Eigen::Index>(idx) % n;
        m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    return m;
}

// ------------------------------- problems -----------------------------------

inline std::string convention_name(Convention c) {
    return c == Convention::SelfConsistent ? "self-consistent" : "alternate-corner";
}

inline Convention convention_from_name(const std::string& name) {
    if (name == "self-consistent") {
        return Convention::SelfConsistent;
    }
    if (name == "alternate-corner") {
        return Convention::AlternateCorner;
    }
    throw std::invalid_argument(
        "convention_from_name: expected \"self-consistent\" or \"alternate-corner\", got \"" +
        name + "\"");
}

// {"k", "theta", "R": number | "auto", "convention"}
inline Json problem_to_json(const BrachistochroneProblem& p) {
    return Json{{"k", p.k},
                {"theta", p.theta},
                {"R", p.R},
                {"convention", convention_name(p.convention)}};
}

inline BrachistochroneProblem problem_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k")) {
        throw std::invalid_argument("problem_from_json: expected an object with at least \"k\"");
    }
    if (!j["k"].is_number()) {
        throw std::invalid_argument("problem_from_json: k must be a number");
    }
    const double k = j["k"].get<double>();
    double theta = 0.0;
    if (j.contains("theta")) {
        if (!j["theta"].is_number()) {
            throw std::invalid_argument("problem_from_json: theta must be a number");
        }
        theta = j["theta"].get<double>();
    }
    std::optional<double> r;
    if (j.contains("R") && !(j["R"].is_string() && j["R"].get<std::string>() == "auto")) {
        if (!j["R"].is_number()) {
            throw std::invalid_argument("problem_from_json: R must be a number or \"auto\"");
        }
        r = j["R"].get<double>();
    }
    Convention conv = Convention::SelfConsistent;
    if (j.contains("convention")) {
        if (!j["convention"].is_string()) {
            throw std::invalid_argument("problem_from_json: convention must be a string");
        }
        conv = convention_from_name(j["convention"].get<std::string>());
    }
    return make_problem(k, theta, r, conv);
}

// ------------------------------ root classes --------------------------------

inline Json root_class_to_json(const RootClass& rc) {
    const char* sign = rc.det_sign < 0 ? "-" : (rc.det_sign > 0 ? "+" : "0");
    return Json{{"trace", rc.trace},
                {"delta_e_sq", rc.delta_e_sq},
                {"det", rc.det},
                {"eigenvalues", Json::array({rc.eigenvalues[0], rc.eigenvalues[1],
                                             rc.eigenvalues[2]})},
                {"traceless", rc.traceless},
                {"det_sign", sign}};
}

// -------------------------------- claims ------------------------------------

inline Json claim_to_json(const ClaimResult& c) {
    return Json{{"id", c.id},          {"description", c.description},
                {"anchor", c.anchor},  {"residual", c.residual},
                {"tolerance", c.tolerance}, {"status", c.status}};
}

// Deliberately carries no timestamp or host information: two runs with the
// same problem, seed, and build produce byte-identical reports.
inline Json report_to_json(const LedgerReport& report) {
    Json claims = Json::array();
    for (const ClaimResult& c : report.claims) {
        claims.push_back(claim_to_json(c));
    }
    return Json{{"problem", problem_to_json(report.problem)},
                {"seed", report.seed},
                {"claims", claims},
                {"summary", Json{{"pass", report.passed},
                                 {"fail", report.failed},
                                 {"report_only", report.reported}}}};
}

}  // namespace su3ctl
