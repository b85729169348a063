// ledger.hpp: the claim catalog. Every closed-form statement the library
// implements is evaluated here against the numerical oracle or against an
// independently computed counterpart, and the residuals are collected into a
// machine-readable report. Claims are either asserted (pass/fail against a
// pinned tolerance) or report-only (the residual is recorded but never fails;
// used for displayed forms that are measurably inconsistent and for
// diagnostics that have no sharp threshold).
//
// Randomness is deterministic: each claim derives its own generator from the
// ledger seed and the claim id, so adding or filtering claims never shifts
// the samples of the others.

#pragma once

#include <su3ctl/claim.hpp>
#include <su3ctl/classify.hpp>
#include <su3ctl/degeneracy.hpp>
#include <su3ctl/floquet.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/oracle.hpp>
#include <su3ctl/problem.hpp>
#include <su3ctl/propagators.hpp>
#include <su3ctl/su4.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace su3ctl {

struct LedgerConfig {
    std::uint64_t seed = 0x5ced5eedULL;
    double tol_scale = 1.0;                  // multiplies every asserted tolerance
    std::vector<std::string> claim_filter;   // keep ids starting with any entry; empty = all
    long oracle_steps = 1L << 16;            // total midpoint steps across the comparison window
    int quadrature_panels = 256;             // Simpson panels for averaged generators
};

struct LedgerReport {
    BrachistochroneProblem problem;
    std::uint64_t seed = 0;
    std::vector<ClaimResult> claims;
    int passed = 0;
    int failed = 0;
    int reported = 0;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::mt19937_64 claim_rng(const LedgerConfig& cfg, const std::string& id) {
    return std::mt19937_64(cfg.seed ^ fnv1a64(id));
}

// residual of the claim at the given position in the factorization checklist
inline double floquet_claim_residual(const BrachistochroneProblem& p, double T, int panels,
                                     std::size_t index) {
    return floquet_claims(p, T, panels).at(index).residual;
}

inline Su4Problem seeded_su4_problem(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Su4Problem q;
    q.eps1 = Complex(u(rng), u(rng));
    q.eps2 = Complex(u(rng), u(rng));
    for (double& w : q.omegas) {
        w = u(rng);
    }
    for (Complex& e : q.etas) {
        e = Complex(u(rng), u(rng));
    }
    q.kappa = Complex(u(rng), u(rng));
    return q;
}

inline double su4_ledger_residual(const LedgerConfig& cfg, const std::string& id,
                                  std::size_t index) {
    auto rng = claim_rng(cfg, id);
    const Su4Problem q = seeded_su4_problem(rng);
    return su4_ode_check(q).at(index).residual;
}

}  // namespace detail

// Builds the full catalog for one problem. The comparison window is the
// fundamental period when the drive is periodic and one beat 2*pi/k of the
// fields otherwise; claims that only hold at the fundamental period degrade
// to report-only on non-periodic problems instead of failing.
inline std::vector<ClaimSpec> ledger_catalog(const BrachistochroneProblem& p,
                                             const LedgerConfig& cfg = {}) {
    const bool periodic = try_resonance(p).has_value();
    const double window = periodic ? fundamental_period(p) : 2.0 * kPi / p.k;
    std::vector<ClaimSpec> specs;

    specs.push_back(
        {"C01-matrix-ode",
         "finite-difference residual of i d/dt (H + F0) = [H, F0] along the orbit, 32 sample "
         "times, step 2.5e-3",
         "time-optimal control equation", false, 1e-5, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C01-matrix-ode");
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             for (int i = 0; i < 32; ++i) {
                 worst = std::max(worst, brachistochrone_residual(p, ts(rng), 2.5e-3));
             }
             return worst;
         }});

    specs.push_back(
        {"C02-closed-vs-oracle",
         "closed-form propagator against the midpoint-exponential oracle at 64 times across the "
         "comparison window, oracle composed incrementally",
         "propagator factorization", false, 1e-8, [p, cfg, window]() {
             const int samples = 64;
             const long per_segment = std::max<long>(16, cfg.oracle_steps / samples);
             const SampledGenerator gen{
                 [p](double s) { return hamiltonian_at(p, s).get(); }, 0.0, window};
             Mat u = Mat::Identity(3, 3);
             double worst = 0.0;
             for (int i = 1; i <= samples; ++i) {
                 const double a = window * (i - 1) / samples;
                 const double b = window * i / samples;
                 u = numeric_propagator(gen, a, b, per_segment).get() * u;
                 worst = std::max(worst, (u - schrodinger_propagator(p, b).get()).norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C03-periodicity",
         periodic ? std::string("propagator returns to the identity at the fundamental period")
                  : std::string("propagator distance from the identity after one field beat "
                                "2*pi/k; no fundamental period exists for this problem, so a "
                                "large residual is the expected outcome"),
         "propagator periodicity", false, 1e-8, [p, window]() {
             return (schrodinger_propagator(p, window).get() - Mat::Identity(3, 3)).norm();
         }});

    specs.push_back(
        {"C04-back-action",
         "[H(s), F0] equals i*k*H shifted a quarter beat forward; 100 sample times",
         "constraint back-action", false, 1e-12, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C04-back-action");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * window);
             double worst = 0.0;
             for (int i = 0; i < 100; ++i) {
                 worst = std::max(worst, back_action_residual(p, ts(rng)));
             }
             return worst;
         }});

    specs.push_back(
        {"C05-frame-transport",
         "two-time transport conjugates H(s) to H(t) and composes as a groupoid; 50 sample "
         "triples",
         "rotating-frame transport", false, 1e-12, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C05-frame-transport");
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             for (int i = 0; i < 50; ++i) {
                 const double t = ts(rng);
                 const double s = ts(rng);
                 const double r = ts(rng);
                 const Mat uts = frame_transport(p, t, s).get();
                 const Mat usr = frame_transport(p, s, r).get();
                 const Mat utr = frame_transport(p, t, r).get();
                 const double conj_res =
                     (uts * hamiltonian_at(p, s).get() * uts.adjoint() - hamiltonian_at(p, t).get())
                         .norm();
                 const double comp_res = (uts * usr - utr).norm();
                 worst = std::max({worst, conj_res, comp_res});
             }
             return worst;
         }});

    specs.push_back(
        {"C06-conservation-split-period",
         periodic
             ? std::string("the two conserved-exponent factors multiply to the identity at the "
                           "fundamental period")
             : std::string("conserved-exponent factor product distance from the identity after "
                           "one field beat; the identity is only expected at a fundamental "
                           "period, which this problem lacks"),
         "conservation splitting", !periodic, periodic ? 1e-9 : 0.0, [p, cfg, window]() {
             const auto split = conservation_split(p, window, cfg.quadrature_panels);
             return (split.first.get() * split.second.get() - Mat::Identity(3, 3)).norm();
         }});

    specs.push_back(
        {"C07a-floquet-y-offdiagonal",
         "off-diagonal norm of the frame-conjugated arrowhead generator; the constant frame "
         "does not diagonalize it even though the factored phases match",
         "periodic-frame factorization", true, 0.0, [p, cfg, window]() {
             return detail::floquet_claim_residual(p, window, cfg.quadrature_panels, 0);
         }});

    specs.push_back(
        {periodic ? "C07b-floquet-product-period" : "C07b-floquet-product-generic",
         periodic ? std::string("frame-factored propagator reproduces U(T) at the fundamental "
                                "period")
                  : std::string("frame-factored propagator distance from U(T) after one field "
                                "beat; equality is only expected at a fundamental period"),
         "periodic-frame factorization", !periodic, periodic ? 1e-8 : 0.0, [p, cfg, window]() {
             return detail::floquet_claim_residual(p, window, cfg.quadrature_panels, 1);
         }});

    specs.push_back(
        {periodic ? "C07c-floquet-diagonal-frame-period" : "C07c-floquet-diagonal-frame-generic",
         periodic
             ? std::string("frame-conjugated diagonal factor equals the exponential of the "
                           "averaged generator at the fundamental period")
             : std::string("frame-conjugated diagonal factor distance from the exponential of "
                           "the averaged generator after one field beat"),
         "periodic-frame factorization", !periodic, periodic ? 1e-8 : 0.0, [p, cfg, window]() {
             return detail::floquet_claim_residual(p, window, cfg.quadrature_panels, 2);
         }});

    specs.push_back(
        {"C08-frame-vs-schrodinger",
         "distance between the frame transport from time zero and the full propagator; the "
         "transport moves the Hamiltonian but not the state, so the gap is structural",
         "rotating-frame transport", true, 0.0, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C08-frame-vs-schrodinger");
             std::uniform_real_distribution<double> ts(0.1 * window, window);
             double worst = 0.0;
             for (int i = 0; i < 8; ++i) {
                 const double t = ts(rng);
                 worst = std::max(
                     worst,
                     (frame_transport(p, t, 0.0).get() - schrodinger_propagator(p, t).get())
                         .norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C09-l-squared",
         "distance of the squared angular-momentum sum from 3*diag(1,0,1); computed value is "
         "diag(3,4,3), so a residual of 4 is the measured discrepancy of the displayed total",
         "degenerate-pair generators", true, 0.0, []() {
             Mat target = Mat::Zero(3, 3);
             target(0, 0) = 3.0;
             target(2, 2) = 3.0;
             return (l_squared().get() - target).norm();
         }});

    specs.push_back(
        {"C10-dft-gates",
         "qutrit Fourier gate is unitary, its transpose-square is the (2,3) swap, and the "
         "generating phase is a cube root of unity",
         "qutrit Fourier gate", false, 1e-13, []() {
             const Mat pi = qutrit_dft().get();
             Mat swap_target = Mat::Zero(3, 3);
             swap_target(0, 0) = 1.0;
             swap_target(1, 2) = 1.0;
             swap_target(2, 1) = 1.0;
             const Complex z = pi(1, 1) * std::sqrt(3.0);
             const double unit_res = unitarity_residual(pi);
             const double swap_res = (pi.transpose() * pi - swap_target).norm();
             const double root_res = std::abs(z * z * z - 1.0);
             return std::max({unit_res, swap_res, root_res});
         }});

    specs.push_back(
        {"C11a-shift-j",
         "the first rotation of the real-coupling family shifts every solution-matrix column "
         "forward by its angle; 12 sample (time, angle, column) draws",
         "degeneracy rotations", false, 1e-12, [p, cfg]() {
             auto rng = detail::claim_rng(cfg, "C11a-shift-j");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * kPi);
             std::uniform_real_distribution<double> ss(-2.0, 2.0);
             std::uniform_int_distribution<int> cs(1, 3);
             double worst = 0.0;
             for (int i = 0; i < 12; ++i) {
                 worst = std::max(worst,
                                  shift_residual({SolutionMatrixKind::J, 1}, SolutionMatrixKind::J,
                                                 cs(rng), ts(rng), ss(rng), p.theta));
             }
             return worst;
         }});

    specs.push_back(
        {"C11b-shift-d",
         "the real-rotation family shifts every diagonal-coupling solution column forward by "
         "its angle; 12 sample draws",
         "degeneracy rotations", false, 1e-12, [p, cfg]() {
             auto rng = detail::claim_rng(cfg, "C11b-shift-d");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * kPi);
             std::uniform_real_distribution<double> ss(-2.0, 2.0);
             std::uniform_int_distribution<int> cs(1, 3);
             double worst = 0.0;
             for (int i = 0; i < 12; ++i) {
                 worst = std::max(worst,
                                  shift_residual({SolutionMatrixKind::D, 1}, SolutionMatrixKind::D,
                                                 cs(rng), ts(rng), ss(rng), p.theta));
             }
             return worst;
         }});

    specs.push_back(
        {"C11c-shift-q-reversed",
         "the second rotation of the phase-coupling family shifts solution columns backward by "
         "its angle (it equals the closed transport at the opposite angle); 12 sample draws",
         "degeneracy rotations", false, 1e-12, [p, cfg]() {
             auto rng = detail::claim_rng(cfg, "C11c-shift-q-reversed");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * kPi);
             std::uniform_real_distribution<double> ss(-2.0, 2.0);
             std::uniform_int_distribution<int> cs(1, 3);
             double worst = 0.0;
             for (int i = 0; i < 12; ++i) {
                 const double t = ts(rng);
                 const double s = ss(rng);
                 const int c = cs(rng) - 1;
                 const Mat now = solution_matrix(SolutionMatrixKind::Q, t, p.theta).get();
                 const Mat back = solution_matrix(SolutionMatrixKind::Q, t - s, p.theta).get();
                 const Vec moved =
                     rotation({SolutionMatrixKind::Q, 2}, s, p.theta) * now.col(c);
                 worst = std::max(worst, (moved - Vec(back.col(c))).norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C11d-shift-q-forward",
         "forward column shift under the first phase-family rotation; nonzero residual records "
         "that this member does not implement the shift its display suggests",
         "degeneracy rotations", true, 0.0, [p, cfg]() {
             auto rng = detail::claim_rng(cfg, "C11d-shift-q-forward");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * kPi);
             std::uniform_real_distribution<double> ss(0.3, 1.5);
             double worst = 0.0;
             for (int i = 0; i < 6; ++i) {
                 worst = std::max(worst,
                                  shift_residual({SolutionMatrixKind::Q, 1}, SolutionMatrixKind::Q,
                                                 1, ts(rng), ss(rng), p.theta));
             }
             return worst;
         }});

    specs.push_back(
        {"C12-cayley-hamilton-orbit",
         "H(t)^3 = R^2 H(t) along the orbit via the characteristic polynomial; 32 sample times",
         "spectral classification", false, 1e-10, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C12-cayley-hamilton-orbit");
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             for (int i = 0; i < 32; ++i) {
                 worst = std::max(worst, cayley_hamilton_residual(hamiltonian_at(p, ts(rng))));
             }
             return worst;
         }});

    specs.push_back({"C13a-su4-epsilon-system",
                     "four-level embedding: commutator entries reproduce the displayed coupling "
                     "system with its frequency differences and corner couplings",
                     "four-level embedding", false, 1e-10, [cfg]() {
                         return detail::su4_ledger_residual(cfg, "C13a-su4-epsilon-system", 0);
                     }});

    specs.push_back({"C13b-su4-eta-system-sign-corrected",
                     "four-level embedding: first-row commutator entries equal minus the "
                     "displayed coefficient system; the sign-corrected system holds exactly",
                     "four-level embedding", false, 1e-10, [cfg]() {
                         return detail::su4_ledger_residual(
                             cfg, "C13b-su4-eta-system-sign-corrected", 1);
                     }});

    specs.push_back({"C13c-su4-conservation",
                     "four-level embedding: diagonal parameters, the outer corner, and the "
                     "trace pairing are constants of the motion",
                     "four-level embedding", false, 1e-12, [cfg]() {
                         return detail::su4_ledger_residual(cfg, "C13c-su4-conservation", 2);
                     }});

    specs.push_back({"C13d-su4-eta-system-as-displayed",
                     "four-level embedding: first-row system with the displayed sign; the "
                     "residual records the uncorrected orientation mismatch",
                     "four-level embedding", true, 0.0, [cfg]() {
                         return detail::su4_ledger_residual(cfg, "C13d-su4-eta-system-as-displayed",
                                                            3);
                     }});

    specs.push_back({"C13e-su4-trajectory",
                     "four-level embedding: finite-difference residual of the matrix equation "
                     "along the coupling-system trajectory (pure truncation expected)",
                     "four-level embedding", true, 0.0, [cfg]() {
                         return detail::su4_ledger_residual(cfg, "C13e-su4-trajectory", 4);
                     }});

    specs.push_back(
        {"C14a-field-flow-display",
         "displayed closed form of the field-flow exponential against the computed exponential; "
         "the display drops the -i on the off-diagonal block, giving 2*sqrt(2)*|sin kt|",
         "closed-form display discrepancies", true, 0.0, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C14a-field-flow-display");
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             const HermitianMatrix flow(upsilon(p));
             for (int i = 0; i < 6; ++i) {
                 const double t = ts(rng);
                 worst = std::max(worst, (expm_hermitian(flow, t).get() -
                                          field_flow_displayed(p, t))
                                             .norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C14b-alternate-corner-transport",
         "Hamiltonian transport under the alternate-corner constraint convention; the residual "
         "records how far that convention is from self-consistent at this phase angle",
         "closed-form display discrepancies", true, 0.0, [p, cfg, window]() {
             BrachistochroneProblem alt = p;
             alt.convention = Convention::AlternateCorner;
             auto rng = detail::claim_rng(cfg, "C14b-alternate-corner-transport");
             std::uniform_real_distribution<double> ts(0.0, window);
             const Mat h0 = hamiltonian_at(p, 0.0).get();
             double worst = 0.0;
             for (int i = 0; i < 6; ++i) {
                 const double t = ts(rng);
                 worst = std::max(worst, (conjugate_by(u_plus(alt, t), h0) -
                                          hamiltonian_at(p, t).get())
                                             .norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C14c-u2f-theta-sign",
         "second frame factor against the constraint exponential; the displayed factor carries "
         "the opposite corner phase, so the gap vanishes only at zero phase angle",
         "closed-form display discrepancies", true, 0.0, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C14c-u2f-theta-sign");
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             for (int i = 0; i < 6; ++i) {
                 const double t = ts(rng);
                 worst = std::max(worst,
                                  (u2f_closed(p, t).get() - u_plus(p, t).get()).norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C14d-back-action-retarded",
         "back-action commutator against i*H shifted a quarter beat backward (the displayed, "
         "unscaled variant); the residual records the sign and scale gap",
         "closed-form display discrepancies", true, 0.0, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C14d-back-action-retarded");
             std::uniform_real_distribution<double> ts(0.0, 2.0 * window);
             double worst = 0.0;
             for (int i = 0; i < 6; ++i) {
                 worst = std::max(worst, back_action_retarded_residual(p, ts(rng)));
             }
             return worst;
         }});

    specs.push_back(
        {"C14e-evolved-constraint-display",
         "transported constraint against its displayed closed form; the display breaks "
         "Hermiticity in one corner and disagrees on a diagonal entry at time zero",
         "closed-form display discrepancies", true, 0.0, [p, cfg, window]() {
             auto rng = detail::claim_rng(cfg, "C14e-evolved-constraint-display");
             std::uniform_real_distribution<double> us(-1.0, 1.0);
             std::uniform_real_distribution<double> ts(0.0, window);
             double worst = 0.0;
             for (int i = 0; i < 6; ++i) {
                 const double w1 = us(rng);
                 const double w2 = us(rng);
                 const double t = ts(rng);
                 worst = std::max(worst, (evolved_constraint(p, w1, w2, t).get() -
                                          evolved_constraint_closed_form(p, w1, w2, t))
                                             .norm());
             }
             return worst;
         }});

    specs.push_back(
        {"C15-conservation-split-generic",
         "conserved-exponent factor product against the propagator at a generic interior time; "
         "the factors only multiply to the propagator at a fundamental period",
         "conservation splitting", true, 0.0, [p, cfg, window]() {
             const double t = 0.7 * window;
             const auto split = conservation_split(p, t, cfg.quadrature_panels);
             return (split.first.get() * split.second.get() -
                     schrodinger_propagator(p, t).get())
                 .norm();
         }});

    const struct {
        const char* id;
        SolutionMatrixKind kind;
        const char* what;
    } image_claims[] = {
        {"C16a-isometric-image-q", SolutionMatrixKind::Q,
         "phase-coupled solution matrix conjugates diag(1,-1,0) to the displayed image"},
        {"C16b-isometric-image-j", SolutionMatrixKind::J,
         "real-coupled solution matrix conjugates diag(1,-1,0) to the displayed image"},
        {"C16c-isometric-image-d", SolutionMatrixKind::D,
         "diagonal-coupled solution matrix conjugates diag(1,-1,0) to the displayed image"},
    };
    for (const auto& ic : image_claims) {
        const std::string id = ic.id;
        const SolutionMatrixKind kind = ic.kind;
        specs.push_back({id, ic.what, "degenerate solution families", false, 1e-12,
                         [p, cfg, id, kind]() {
                             auto rng = detail::claim_rng(cfg, id);
                             std::uniform_real_distribution<double> ts(0.0, 2.0 * kPi);
                             double worst = 0.0;
                             for (int i = 0; i < 12; ++i) {
                                 const double t = ts(rng);
                                 worst = std::max(
                                     worst, (isometric_image(kind, t, p.theta).get() -
                                             isometric_target(kind, t, p.theta).get())
                                                .norm());
                             }
                             return worst;
                         }});
    }

    return specs;
}

inline bool claim_selected(const std::string& id, const std::vector<std::string>& filter) {
    if (filter.empty()) {
        return true;
    }
    return std::any_of(filter.begin(), filter.end(), [&id](const std::string& prefix) {
        return id.rfind(prefix, 0) == 0;
    });
}

inline LedgerReport run_all(const BrachistochroneProblem& p, const LedgerConfig& cfg = {}) {
    LedgerReport report;
    report.problem = p;
    report.seed = cfg.seed;
    for (const ClaimSpec& spec : ledger_catalog(p, cfg)) {
        if (!claim_selected(spec.id, cfg.claim_filter)) {
            continue;
        }
        ClaimResult result = run_claim(spec, cfg.tol_scale);
        if (result.status == "pass") {
            ++report.passed;
        } else if (result.status == "fail") {
            ++report.failed;
        } else {
            ++report.reported;
        }
        report.claims.push_back(std::move(result));
    }
    return report;
}

}  // namespace su3ctl
