// su3ctl: command-line front end for the three-level time-optimal control
// library. Subcommands:
//
//   solve      derive the problem's amplitude, gap, resonance ratio, period
//   propagate  tabulate a propagator trajectory as CSV
//   verify     run the claim ledger and report residuals
//   classify   characteristic-polynomial invariants of a Hermitian matrix
//   gates      print one of the named constant gates or family matrices
//   su4        four-level embedding demonstration
//
// Exit codes: 0 success, 1 usage or runtime error, 2 the problem is not
// periodic and --require-periodic was given, 3 at least one asserted claim
// failed verification.

#include <su3ctl/su3ctl.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using su3ctl::BrachistochroneProblem;
using su3ctl::Json;
using su3ctl::Mat;

constexpr std::uint64_t kDefaultSeed = 0x5ced5eedULL;

struct ProblemFlags {
    double k = 1.0;
    double theta = 0.0;
    std::optional<double> amplitude;
    std::string convention = "self-consistent";
    bool degrees = false;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f) {
    cmd->add_option("--k", f.k, "constraint strength (rad/time, > 0)")->capture_default_str();
    cmd->add_option("--theta", f.theta, "relative phase of the two couplings")
        ->capture_default_str();
    cmd->add_flag("--degrees", f.degrees, "interpret --theta in degrees");
    cmd->add_option("--R", f.amplitude,
                    "energy radius; omit for sqrt(3)*k, the fastest periodic choice");
    cmd->add_option("--convention", f.convention, "constraint corner phase convention")
        ->check(CLI::IsMember({"self-consistent", "alternate-corner"}))
        ->capture_default_str();
}

BrachistochroneProblem problem_from_flags(const ProblemFlags& f) {
    const double theta = f.degrees ? f.theta * su3ctl::kPi / 180.0 : f.theta;
    return su3ctl::make_problem(f.k, theta, f.amplitude,
                                su3ctl::convention_from_name(f.convention));
}

// precedence: --seed flag, then SU3_SEED in the environment, then the default
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SU3_SEED")) {
        std::size_t used = 0;
        const std::string text(env);
        const std::uint64_t value = std::stoull(text, &used, 0);
        if (used != text.size()) {
            throw std::invalid_argument("SU3_SEED is not an unsigned integer: " + text);
        }
        return value;
    }
    return kDefaultSeed;
}

Json solve_json(const BrachistochroneProblem& p) {
    Json out = su3ctl::problem_to_json(p);
    out["delta"] = su3ctl::delta(p);
    const auto ratio = su3ctl::try_resonance(p);
    out["resonant"] = ratio.has_value();
    if (ratio) {
        out["m"] = ratio->m;
        out["n"] = ratio->n;
        out["fundamental_period"] = su3ctl::fundamental_period(p);
    }
    return out;
}

double default_window(const BrachistochroneProblem& p) {
    const auto ratio = su3ctl::try_resonance(p);
    return ratio ? su3ctl::fundamental_period(p) : 2.0 * su3ctl::kPi / p.k;
}

Mat propagator_by_method(const BrachistochroneProblem& p, const std::string& method, double t,
                         long oracle_steps) {
    if (method == "closed") {
        return su3ctl::schrodinger_propagator(p, t).get();
    }
    if (method == "oracle") {
        if (t <= 0.0) {
            return Mat::Identity(3, 3);
        }
        const su3ctl::SampledGenerator gen{
            [p](double s) { return su3ctl::hamiltonian_at(p, s).get(); }, 0.0, t};
        return su3ctl::numeric_propagator(gen, 0.0, t, oracle_steps).get();
    }
    if (method == "frame") {
        return su3ctl::frame_transport(p, t, 0.0).get();
    }
    // floquet: the factored form; away from a fundamental period this is a
    // measurement of the factorization, not a unitary propagator
    const Mat y = su3ctl::y_isometry(p.theta).get();
    return y.adjoint() * su3ctl::u1f_closed(p, t) * su3ctl::u2f_closed(p, t).get() * y;
}

// companion gnuplot script for a trajectory written to csv_path
void write_plot_script(const std::string& csv_path, const std::string& script_path) {
    std::ofstream out(script_path);
    if (!out) {
        throw std::runtime_error("propagate: cannot open plot script " + script_path);
    }
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel 't'\n"
        << "set ylabel 'Re U_{jj}'\n"
        << "plot '" << csv_path << "' using 1:2 with lines, \\\n"
        << "     '' using 1:10 with lines, \\\n"
        << "     '' using 1:18 with lines\n";
}

std::string plot_script_path(const std::string& csv_path) {
    const std::string suffix = ".csv";
    if (csv_path.size() > suffix.size() &&
        csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return csv_path.substr(0, csv_path.size() - suffix.size()) + ".gp";
    }
    return csv_path + ".gp";
}

int run_solve(const ProblemFlags& flags, bool require_periodic) {
    const BrachistochroneProblem p = problem_from_flags(flags);
    const Json out = solve_json(p);
    if (require_periodic && !out["resonant"].get<bool>()) {
        std::cerr << "su3ctl: gap/constraint ratio " << su3ctl::delta(p) / p.k
                  << " is not rational; no fundamental period exists\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_propagate(const ProblemFlags& flags, const std::string& method,
                  std::optional<double> horizon, int samples, long oracle_steps,
                  const std::string& out_path, bool emit_plot, bool require_periodic) {
    const BrachistochroneProblem p = problem_from_flags(flags);
    if (require_periodic && !su3ctl::try_resonance(p)) {
        std::cerr << "su3ctl: no fundamental period exists for this problem\n";
        return 2;
    }
    const double t_end = horizon ? *horizon : default_window(p);
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("propagate: --t must be positive");
    }
    std::vector<double> ts;
    std::vector<Mat> us;
    ts.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = t_end * i / samples;
        ts.push_back(t);
        us.push_back(propagator_by_method(p, method, t, oracle_steps));
    }
    if (out_path.empty()) {
        su3ctl::write_trajectory(std::cout, ts, us);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw std::runtime_error("propagate: cannot open " + out_path);
        }
        su3ctl::write_trajectory(out, ts, us);
        if (emit_plot) {
            write_plot_script(out_path, plot_script_path(out_path));
        }
    }
    return 0;
}

int run_verify(const ProblemFlags& flags, const su3ctl::LedgerConfig& cfg, bool as_json) {
    const BrachistochroneProblem p = problem_from_flags(flags);
    const su3ctl::LedgerReport report = su3ctl::run_all(p, cfg);
    if (as_json) {
        std::cout << su3ctl::report_to_json(report).dump(2) << "\n";
    } else {
        std::printf("%-36s  %-11s  %12s  %12s\n", "claim", "status", "residual", "tolerance");
        for (const su3ctl::ClaimResult& c : report.claims) {
            if (c.tolerance > 0.0) {
                std::printf("%-36s  %-11s  %12.3e  %12.3e\n", c.id.c_str(), c.status.c_str(),
                            c.residual, c.tolerance);
            } else {
                std::printf("%-36s  %-11s  %12.3e  %12s\n", c.id.c_str(), c.status.c_str(),
                            c.residual, "-");
            }
        }
        std::printf("summary: %d pass, %d fail, %d report-only (seed %llu)\n", report.passed,
                    report.failed, report.reported,
                    static_cast<unsigned long long>(report.seed));
    }
    return report.failed > 0 ? 3 : 0;
}

int run_classify(const ProblemFlags& flags, const std::string& file, double t) {
    su3ctl::HermitianMatrix h = [&]() {
        if (file.empty()) {
            return su3ctl::hamiltonian_at(problem_from_flags(flags), t);
        }
        Json j;
        if (file == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(file);
            if (!in) {
                throw std::runtime_error("classify: cannot open " + file);
            }
            in >> j;
        }
        return su3ctl::HermitianMatrix(su3ctl::mat_from_json(j));
    }();
    const su3ctl::RootClass rc = su3ctl::char_poly_invariants(h);
    std::cout << su3ctl::root_class_to_json(rc).dump(2) << "\n";
    return 0;
}

int run_gates(const ProblemFlags& flags, const std::string& which, double t, double sigma) {
    const double theta =
        flags.degrees ? flags.theta * su3ctl::kPi / 180.0 : flags.theta;
    using su3ctl::SolutionMatrixKind;
    Mat m;
    if (which == "dft") {
        m = su3ctl::qutrit_dft().get();
    } else if (which == "swap") {
        m = su3ctl::dft_swap_gate().get();
    } else if (which == "y") {
        m = su3ctl::y_isometry(theta).get();
    } else if (which == "solution-q") {
        m = su3ctl::solution_matrix(SolutionMatrixKind::Q, t, theta).get();
    } else if (which == "solution-j") {
        m = su3ctl::solution_matrix(SolutionMatrixKind::J, t, theta).get();
    } else if (which == "solution-d") {
        m = su3ctl::solution_matrix(SolutionMatrixKind::D, t, theta).get();
    } else {
        // rotation-<family><index>
        const SolutionMatrixKind kind = which[9] == 'q'   ? SolutionMatrixKind::Q
                                        : which[9] == 'j' ? SolutionMatrixKind::J
                                                          : SolutionMatrixKind::D;
        const int index = which[10] - '0';
        m = su3ctl::rotation({kind, index}, sigma, theta);
    }
    const Json out{{"which", which},
                   {"matrix", su3ctl::mat_to_json(m)},
                   {"unitarity_residual", su3ctl::unitarity_residual(m)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_su4(std::uint64_t seed, bool as_json) {
    std::mt19937_64 rng(seed);
    const su3ctl::Su4Problem q = su3ctl::detail::seeded_su4_problem(rng);
    const std::vector<su3ctl::ClaimResult> claims = su3ctl::su4_ode_check(q);
    if (as_json) {
        Json arr = Json::array();
        for (const su3ctl::ClaimResult& c : claims) {
            arr.push_back(su3ctl::claim_to_json(c));
        }
        std::cout << Json{{"seed", seed}, {"claims", arr}}.dump(2) << "\n";
    } else {
        std::printf("four-level embedding check (seed %llu)\n",
                    static_cast<unsigned long long>(seed));
        for (const su3ctl::ClaimResult& c : claims) {
            std::printf("%-36s  %-11s  %12.3e\n", c.id.c_str(), c.status.c_str(), c.residual);
        }
    }
    for (const su3ctl::ClaimResult& c : claims) {
        if (c.status == "fail") {
            return 3;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-optimal three-level control: closed forms and their verification"};
    app.require_subcommand(1);

    ProblemFlags flags;
    bool require_periodic = false;
    std::optional<std::uint64_t> seed_flag;

    CLI::App* solve = app.add_subcommand("solve", "derive gap, resonance ratio, and period");
    add_problem_flags(solve, flags);
    solve->add_flag("--require-periodic", require_periodic,
                    "fail (exit 2) when no fundamental period exists");

    CLI::App* propagate = app.add_subcommand("propagate", "tabulate a propagator trajectory");
    add_problem_flags(propagate, flags);
    std::string method = "closed";
    std::optional<double> horizon;
    int samples = 128;
    long oracle_steps = 1L << 14;
    std::string out_path;
    bool emit_plot = false;
    propagate->add_option("--method", method, "propagator construction")
        ->check(CLI::IsMember({"closed", "oracle", "frame", "floquet"}))
        ->capture_default_str();
    propagate->add_option("--t", horizon, "end time; omit for one period or field beat");
    propagate->add_option("--samples", samples, "number of output intervals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    propagate->add_option("--steps", oracle_steps, "oracle integration steps per row")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* out_opt = propagate->add_option("--out", out_path, "CSV output path");
    propagate->add_flag("--emit-plot", emit_plot, "also write a gnuplot script next to the CSV")
        ->needs(out_opt);
    propagate->add_flag("--require-periodic", require_periodic,
                        "fail (exit 2) when no fundamental period exists");

    CLI::App* verify = app.add_subcommand("verify", "run the claim ledger");
    add_problem_flags(verify, flags);
    std::vector<std::string> claim_filter;
    double tol_scale = 1.0;
    bool as_json = false;
    verify->add_option("--claims", claim_filter,
                       "only claims whose id starts with one of these prefixes")
        ->delimiter(',');
    verify->add_option("--tol-scale", tol_scale, "multiply every asserted tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", seed_flag, "ledger seed (overrides SU3_SEED)");
    verify->add_flag("--json", as_json, "emit the full report as JSON");

    CLI::App* classify = app.add_subcommand(
        "classify", "characteristic-polynomial invariants of a Hermitian matrix");
    add_problem_flags(classify, flags);
    std::string classify_file;
    double classify_t = 0.0;
    classify->add_option("--file", classify_file,
                         "matrix as JSON ('-' for stdin); omit to use the problem Hamiltonian");
    classify->add_option("--t", classify_t, "orbit time when classifying the problem Hamiltonian")
        ->capture_default_str();

    CLI::App* gates = app.add_subcommand("gates", "print a named gate or family matrix");
    add_problem_flags(gates, flags);
    std::string which;
    double gate_t = 0.0;
    double gate_sigma = 0.5;
    gates->add_option("--which", which, "gate name")
        ->required()
        ->check(CLI::IsMember({"dft", "swap", "y", "solution-q", "solution-j", "solution-d",
                               "rotation-q1", "rotation-q2", "rotation-q3", "rotation-j1",
                               "rotation-j2", "rotation-d1"}));
    gates->add_option("--t", gate_t, "solution-matrix parameter")->capture_default_str();
    gates->add_option("--sigma", gate_sigma, "rotation angle")->capture_default_str();

    CLI::App* su4 = app.add_subcommand("su4", "four-level embedding demonstration");
    bool su4_demo = false;
    bool su4_json = false;
    su4->add_flag("--demo", su4_demo, "run the seeded coefficient-system check");
    su4->add_flag("--json", su4_json, "emit the results as JSON");
    su4->add_option("--seed", seed_flag, "problem seed (overrides SU3_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "su3ctl: " << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            return run_solve(flags, require_periodic);
        }
        if (propagate->parsed()) {
            return run_propagate(flags, method, horizon, samples, oracle_steps, out_path,
                                 emit_plot, require_periodic);
        }
        if (verify->parsed()) {
            su3ctl::LedgerConfig cfg;
            cfg.seed = resolve_seed(seed_flag);
            cfg.tol_scale = tol_scale;
            cfg.claim_filter = claim_filter;
            return run_verify(flags, cfg, as_json);
        }
        if (classify->parsed()) {
            return run_classify(flags, classify_file, classify_t);
        }
        if (gates->parsed()) {
            return run_gates(flags, which, gate_t, gate_sigma);
        }
        if (su4->parsed()) {
            if (!su4_demo) {
                std::cerr << "su3ctl: su4 requires --demo\n";
                return 1;
            }
            return run_su4(resolve_seed(seed_flag), su4_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "su3ctl: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
