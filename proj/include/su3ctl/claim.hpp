// claim.hpp: one verified identity = one claim. A claim carries a measured
// residual, its tolerance, and a status; report-only claims are first-class
// results that never fail a run, because some identities are worth
// quantifying precisely because they do not hold as displayed.

#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace su3ctl {

struct ClaimResult {
    std::string id;           // stable, e.g. "C03-periodicity"
    std::string description;  // what is being measured
    std::string anchor;       // topical label of the identity family
    double residual = 0.0;
    double tolerance = 0.0;   // 0 for report-only (informational)
    std::string status;       // "pass" | "fail" | "report-only"
};

inline ClaimResult make_claim(std::string id, std::string description, std::string anchor,
                              double residual, double tolerance) {
    ClaimResult r{std::move(id), std::move(description), std::move(anchor), residual, tolerance,
                  residual <= tolerance ? "pass" : "fail"};
    return r;
}

inline ClaimResult make_report(std::string id, std::string description, std::string anchor,
                               double residual) {
    return {std::move(id), std::move(description), std::move(anchor), residual, 0.0,
            "report-only"};
}

// A claim before evaluation. eval() returns the residual; any exception it
// throws is captured as a failed (or, for report-only, still non-failing)
// result with a finite sentinel residual and the diagnostic appended.
struct ClaimSpec {
    std::string id;
    std::string description;
    std::string anchor;
    bool report_only = false;
    double tolerance = 0.0;
    std::function<double()> eval;
};

inline ClaimResult run_claim(const ClaimSpec& spec, double tol_scale = 1.0) {
    double residual = 0.0;
    std::string note;
    try {
        residual = spec.eval();
    } catch (const std::exception& e) {
        residual = std::numeric_limits<double>::max();
        note = std::string(" [evaluation error: ") + e.what() + "]";
    }
    if (spec.report_only) {
        return make_report(spec.id, spec.description + note, spec.anchor, residual);
    }
    ClaimResult r =
        make_claim(spec.id, spec.description + note, spec.anchor, residual,
                   spec.tolerance * tol_scale);
    if (!note.empty()) {
        r.status = "fail";
    }
    return r;
}

}  // namespace su3ctl
