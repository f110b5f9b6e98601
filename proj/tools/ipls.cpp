// ipls: enclosures, parameterized solutions, inner estimates and hull checks
// for interval parametric linear systems.

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ipls/builtins.hpp"
#include "ipls/enclosure.hpp"
#include "ipls/hull.hpp"
#include "ipls/json_io.hpp"
#include "ipls/metrics.hpp"
#include "ipls/oracle.hpp"
#include "ipls/parameterized.hpp"

using namespace ipls;

namespace {

enum Exit { kOk = 0, kInput = 1, kRegularity = 2, kUncertified = 3 };

struct RunConfig {
    std::string builtin;
    std::string input;
    double delta = 0.01;
    double radius_scale = 1.0;
    std::string method = "iGRank1";
    std::string form = "k";
    bool inner = false;
    std::string signs = "from-param";
    bool no_oracle = false;
    std::string rounding = "fast";
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::string strategy = "uniform";
    double tolerance = 1e-14;
    int max_iterations = 1000;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string fmt(const Interval& a) { return "[" + fmt(a.lo()) + ", " + fmt(a.hi()) + "]"; }

void print_vector(std::ostream& os, const std::string& label, const IntervalVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        os << label << (i + 1) << " = " << fmt(v[i]) << '\n';
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

ParametricLinearSystem load(const RunConfig& c) {
    if (c.builtin.empty() == c.input.empty())
        throw InvalidArgument("give exactly one of --builtin or --input");
    ParametricLinearSystem sys = c.input.empty() ? builtin_system(c.builtin, c.delta)
                                                 : load_system_file(c.input);
    if (c.radius_scale != 1.0) sys = sys.with_scaled_radii(c.radius_scale);
    const auto degenerate = sys.degenerate_parameters();
    if (!degenerate.empty() && degenerate.size() != sys.parameter_count())
        std::cerr << "warning: " << degenerate.size() << " degenerate parameter interval(s)\n";
    return sys;
}

ReducedSolveOptions solve_options(const RunConfig& c) {
    ReducedSolveOptions o;
    o.tolerance = c.tolerance;
    o.max_iterations = c.max_iterations;
    return o;
}

int cmd_check(const RunConfig& c) {
    const auto sys = load(c);
    const auto rep = build_representation(sys);
    const auto cd = central_data(sys, rep);
    const bool strong = check_strong_regularity(cd);
    const bool weak = check_weak_regularity(cd);
    if (c.format == "json") {
        Json j;
        j["n"] = sys.dimension();
        j["K"] = sys.parameter_count();
        j["gamma"] = rep.gamma();
        j["transposed"] = rep.transposed;
        j["rho_strong"] = cd.rho_strong;
        j["rho_weak"] = cd.rho_weak;
        j["strongly_regular"] = strong;
        j["weakly_regular"] = weak;
        j["representation"] = representation_json(sys, rep);
        emit(j);
    } else {
        std::cout << "n = " << sys.dimension() << ", K = " << sys.parameter_count()
                  << ", gamma = " << rep.gamma()
                  << (rep.transposed ? " (transposed factors)" : "") << '\n'
                  << "rho_strong = " << fmt(cd.rho_strong) << "  "
                  << (strong ? "strongly regular" : "NOT strongly regular") << '\n'
                  << "rho_weak   = " << fmt(cd.rho_weak) << "  "
                  << (weak ? "weakly regular" : "NOT weakly regular") << '\n';
    }
    return strong ? kOk : kRegularity;
}

int cmd_solve(const RunConfig& c) {
    const auto sys = load(c);
    const auto run = run_enclosure(sys, enclosure_method_from_string(c.method), solve_options(c));
    if (c.format == "json") {
        emit(enclosure_json(run));
    } else {
        std::cout << "method " << to_string(run.enclosure.method) << ", rho_strong = "
                  << fmt(run.central.rho_strong) << ", iterations = " << run.enclosure.iterations
                  << '\n';
        print_vector(std::cout, "x", run.enclosure.x);
    }
    return kOk;
}

int cmd_param(const RunConfig& c) {
    const auto sys = load(c);
    const auto run = run_enclosure(sys, EnclosureMethod::IGRank1, solve_options(c));
    if (c.form == "p") {
        const auto s = build_pprank1(run.central, run.rep, run.reduced);
        const auto x = evaluate_param(s, sys.box());
        if (c.format == "json") {
            Json j = parameterized_json(sys, s);
            j["x"] = to_json(x);
            emit(j);
        } else {
            std::cout << "pPRank1 over the parameter box:\n";
            print_vector(std::cout, "x", x);
        }
        return kOk;
    }
    if (c.form != "k") throw InvalidArgument("--form must be p or k");
    const auto s = build_pkrank1(run.central, run.rep, run.reduced);
    const auto outer = evaluate_param(s, sys.box());
    std::optional<InnerEstimate> in;
    if (c.inner) in = inner_estimate(s);
    if (c.format == "json") {
        Json j = parameterized_json(sys, s);
        j["x"] = to_json(outer);
        if (in) j["inner"] = inner_json(*in);
        emit(j);
        return kOk;
    }
    std::cout << "x_mid =";
    for (double v : s.x_mid) std::cout << ' ' << fmt(v);
    std::cout << "\nU (columns";
    for (std::size_t k : s.rep.q_parameters()) std::cout << ' ' << sys.name(k);
    std::cout << "):\n";
    for (std::size_t i = 0; i < s.U.rows(); ++i) {
        for (std::size_t j = 0; j < s.U.cols(); ++j) std::cout << std::setw(13) << fmt(s.U(i, j));
        std::cout << '\n';
    }
    std::cout << "r_hat =";
    for (double v : s.r_hat) std::cout << ' ' << fmt(v);
    std::cout << "\nouter:\n";
    print_vector(std::cout, "x", outer);
    if (in) {
        std::cout << "inner:\n";
        for (std::size_t i = 0; i < in->x_in.size(); ++i)
            std::cout << "x" << (i + 1) << " = " << (in->x_in[i] ? fmt(*in->x_in[i]) : "empty") << '\n';
    }
    return kOk;
}

int cmd_hull(const RunConfig& c) {
    const auto sys = load(c);
    SignSource source;
    if (c.signs == "from-param") source = SignSource::FromParam;
    else if (c.signs == "oracle") source = SignSource::Oracle;
    else throw InvalidArgument("--signs must be from-param or oracle");
    if (source == SignSource::Oracle && c.no_oracle)
        throw InvalidArgument("--signs oracle cannot be combined with --no-oracle");

    const auto report = hull_report(sys, source, !c.no_oracle, default_max_vertex_k());
    if (c.format == "json") {
        emit(hull_report_json(report));
    } else {
        std::cout << "signs (" << report.signs_source << "):\n" << render_claimed_table(report);
        if (report.oracle_mode) {
            std::cout << "vertex oracle (" << to_string(*report.oracle_mode) << "):\n"
                      << render_oracle_table(report);
        }
        for (std::size_t i = 0; i < report.components.size(); ++i) {
            const auto& comp = report.components[i];
            std::cout << "x" << (i + 1) << " = "
                      << (comp.endpoint.hull ? fmt(*comp.endpoint.hull) : "singular");
            if (comp.oracle_hull) std::cout << "  oracle " << fmt(*comp.oracle_hull);
            std::cout << "  " << to_string(comp.verdict) << '\n';
        }
    }
    if (source == SignSource::FromParam && report.any_unsound()) {
        std::cerr << "warning: the parameter signs of the parameterized solution do not match "
                     "the true monotonicity"
                  << (c.no_oracle ? " (unchecked: oracle disabled)" : "")
                  << "; the endpoint box may lie strictly inside the hull\n";
        return kUncertified;
    }
    return kOk;
}

int cmd_metrics(const RunConfig& c) {
    const auto sys = load(c);
    const auto run = run_enclosure(sys, EnclosureMethod::IGRank1, solve_options(c));
    const auto s = build_pkrank1(run.central, run.rep, run.reduced);
    const auto outer = evaluate_param(s, sys.box());
    const auto in = inner_estimate(s);

    // frozen comparison bounds exist only for the built-in at delta = 0.01
    const bool have_pdm = c.builtin == "okumura" && c.delta == 0.01 && c.radius_scale == 1.0;
    std::optional<IntervalVector> pdm_outer;
    if (have_pdm) pdm_outer = reference::okumura_pdm_outer_001();
    const auto rows = quality_table(in.x_in, outer, pdm_outer);

    std::optional<std::vector<QualityRow>> pdm_rows;
    if (have_pdm) {
        std::vector<std::optional<Interval>> pdm_in;
        for (const auto& v : reference::okumura_pdm_inner_001()) pdm_in.emplace_back(v);
        pdm_rows = quality_table(pdm_in, *pdm_outer);
    }

    if (c.format == "json") {
        Json j;
        j["outer"] = to_json(outer);
        j["inner"] = inner_json(in)["x_in"];
        j["pkrank1"] = quality_json(rows);
        if (pdm_rows) j["pdm"] = quality_json(*pdm_rows);
        emit(j);
    } else {
        std::cout << render_quality_table(rows, "pKRank1");
        if (pdm_rows) std::cout << render_quality_table(*pdm_rows, "PDM");
    }
    return kOk;
}

int cmd_oracle(const RunConfig& c) {
    const auto sys = load(c);
    const auto res = sample_hull(sys, c.samples, c.seed, sample_strategy_from_string(c.strategy));
    if (c.format == "json") {
        Json j = sample_hull_json(res);
        j["strategy"] = c.strategy;
        emit(j);
    } else {
        std::cout << res.sample_count << " samples (" << c.strategy << ", seed " << res.seed
                  << "), " << res.singular_count << " singular\n";
        print_vector(std::cout, "x", res.hull_lower_bound);
    }
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--builtin", c.builtin, "built-in system")->check(CLI::IsMember({"okumura", "example2"}));
    sub->add_option("--input", c.input, "system JSON document");
    sub->add_option("--delta", c.delta, "okumura parameter half-width")->check(CLI::NonNegativeNumber);
    sub->add_option("--radius-scale", c.radius_scale, "multiply every parameter radius (0 gives a point system)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--rounding", c.rounding, "fast or rigorous")->check(CLI::IsMember({"fast", "rigorous"}));
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--tolerance", c.tolerance, "reduced-system stopping tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iterations", c.max_iterations, "reduced-system iteration cap")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ipls: interval parametric linear systems with rank-one uncertainty"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* check = app.add_subcommand("check", "regularity conditions and representation summary");
    auto* solve_cmd = app.add_subcommand("solve", "outer enclosure");
    auto* param = app.add_subcommand("param", "parameterized solution");
    auto* hull = app.add_subcommand("hull", "monotonicity-based hull and danger check");
    auto* metrics = app.add_subcommand("metrics", "sharpness and overestimation table");
    auto* oracle = app.add_subcommand("oracle", "Monte-Carlo hull lower bound");
    for (auto* sub : {check, solve_cmd, param, hull, metrics, oracle}) add_common(sub, cfg);

    solve_cmd->add_option("--method", cfg.method, "iGRank1 or ignp");
    param->add_option("--form", cfg.form, "p or k")->check(CLI::IsMember({"p", "k"}));
    param->add_flag("--inner", cfg.inner, "add the inner estimate (k form)");
    hull->add_option("--signs", cfg.signs, "from-param or oracle")
        ->check(CLI::IsMember({"from-param", "oracle"}));
    hull->add_flag("--no-oracle", cfg.no_oracle, "skip vertex enumeration");
    oracle->add_option("--samples", cfg.samples, "number of sample points")->check(CLI::PositiveNumber);
    oracle->add_option("--strategy", cfg.strategy, "uniform or vertices-plus-uniform")
        ->check(CLI::IsMember({"uniform", "vertices-plus-uniform"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    RoundingScope scope(cfg.rounding == "fast" ? Rounding::Fast : Rounding::Rigorous);
    try {
        if (check->parsed()) return cmd_check(cfg);
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (param->parsed()) return cmd_param(cfg);
        if (hull->parsed()) return cmd_hull(cfg);
        if (metrics->parsed()) return cmd_metrics(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
    } catch (const NotStronglyRegular& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRegularity;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRegularity;
    } catch (const Singular& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRegularity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
