// gwscal: scalarized vector-optimization problems on the command line.
//
// Subcommands: eval, solve, check, sweep, eff, examples.
// Exit codes: 0 success/optimal, 2 usage or parse error, 3 infeasible,
// 4 unbounded or unattained infimum, 5 no existence certificate.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gwscal/efficiency.hpp"
#include "gwscal/examples.hpp"
#include "gwscal/existence.hpp"
#include "gwscal/instance_io.hpp"
#include "gwscal/parameters.hpp"
#include "gwscal/solver.hpp"

namespace {

using namespace gwscal;

struct CommonOpts {
    std::optional<double> tol;
    std::optional<double> t_max;
    std::optional<int> resolution;
    std::string out;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.tol, "bisection tolerance override");
    cmd->add_option("--t-max", o.t_max, "search bound override");
    cmd->add_option("--resolution", o.resolution, "grid/curve sampling override");
    cmd->add_option("--out", o.out, "write the CSV to this file instead of stdout");
    cmd->add_flag("--quiet", o.quiet, "suppress the human-readable summary");
}

// Instances are loaded from a JSON file, or by builtin corpus id (e.g. ex613).
ProblemInstance load(const std::string& path_or_id, const CommonOpts& o) {
    std::optional<ProblemInstance> P;
    if (const BuiltinExample* e = find_example(path_or_id)) P = e->instance;
    else P = load_instance(path_or_id);

    PhiOptions opt = P->g.options();
    if (o.tol) opt.tol = *o.tol;
    if (o.t_max) opt.t_max = *o.t_max;
    FeasibleSet F = P->F;
    if (o.resolution) {
        if (F.kind() == FeasibleSet::Kind::grid_region)
            F = FeasibleSet::grid(F.box_lo(), F.box_hi(), *o.resolution, F.membership());
        else if (F.kind() == FeasibleSet::Kind::builtin_curve)
            F = FeasibleSet::curve(F.curve_id(), F.ranges(), *o.resolution);
    }
    ProblemInstance out(std::move(F), GerstewitzFunctional(P->g.a(), P->g.set(), P->g.k(), opt));
    out.separation = P->separation;
    return out;
}

std::ostream& open_sink(const CommonOpts& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file) throw ParseError(o.out, "cannot open output file");
    return file;
}

int solve_exit_code(const SolveResult& r) {
    switch (r.status) {
    case SolveResult::Status::optimal:
    case SolveResult::Status::approximate_optimal:
        return 0;
    case SolveResult::Status::infeasible:
        return 3;
    default:
        return 4;
    }
}

int cmd_eval(const std::string& instance, const std::string& points_path, const CommonOpts& o) {
    ProblemInstance P = load(instance, o);
    const std::vector<Point> pts = load_points(points_path);
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    os << "point,phi,certainty\n";
    for (const Point& y : pts) {
        const PhiStatus s = phi(P.g, y);
        std::string cert;
        switch (s.certainty) {
        case Certainty::exact: cert = "exact"; break;
        case Certainty::bracketed: cert = "bracketed(" + format_number(s.bound) + ")"; break;
        case Certainty::heuristic_infinity: cert = "heuristic(" + format_number(s.bound) + ")"; break;
        }
        os << '"' << format_point(y) << "\"," << to_string(s.value) << ',' << cert << '\n';
    }
    return 0;
}

int cmd_solve(const std::string& instance, const CommonOpts& o) {
    ProblemInstance P = load(instance, o);
    const SolveResult r = solve(P);
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    if (!o.quiet) {
        os << "status: " << to_cstr(r.status) << '\n';
        if (r.has_optimum()) {
            os << "t_star: " << format_number(r.t_star) << '\n';
            os << "minimizer_count: " << r.minimizers.size() << '\n';
            if (r.status == SolveResult::Status::approximate_optimal)
                os << "cell_size: " << format_number(r.cell_size) << '\n';
        }
        if (r.status == SolveResult::Status::infimum_not_attained)
            os << "inf_estimate: " << format_number(r.inf_estimate) << '\n';
        if (r.status == SolveResult::Status::unbounded_below)
            os << "witness_t: " << format_number(r.witness_t) << '\n';
        if (r.sample_relative) os << "note: verdict is relative to the sample\n";
    }
    os << "minimizers\n";
    for (const Point& m : r.minimizers) os << format_point(m) << '\n';
    return solve_exit_code(r);
}

int cmd_check(const std::string& instance, const CommonOpts& o) {
    ProblemInstance P = load(instance, o);
    const ExistenceReport rep = existence_report(P);
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    os << "verdict: " << to_cstr(rep.verdict);
    if (!rep.rule.empty()) os << " (" << rep.rule << ")";
    os << '\n';
    if (!rep.failed_condition.empty()) os << "failed: " << rep.failed_condition << '\n';
    os << "necessary (5) feasible range nonempty: " << to_cstr(rep.necessary.feasible_nonempty) << '\n';
    os << "necessary (6) some level set empty:    " << to_cstr(rep.necessary.some_level_empty) << '\n';
    if (!o.quiet) {
        for (const RuleCheck& rc : rep.checks) {
            os << rc.rule << ": " << to_cstr(rc.holds) << '\n';
            for (const HypothesisCheck& h : rc.hypotheses) {
                os << "  - " << h.name << ": " << to_cstr(h.value);
                if (!h.note.empty()) os << "  [" << h.note << "]";
                os << '\n';
            }
        }
    }
    return rep.verdict == ExistenceReport::Verdict::guaranteed_nonempty_compact ? 0 : 5;
}

int cmd_sweep(const std::string& instance, const std::string& sweep_path, const CommonOpts& o) {
    ProblemInstance P = load(instance, o);
    const SweepSpec spec = load_sweep(sweep_path, P.g.set(), P.g.dim());
    if (spec.k_grid.empty()) {
        std::cerr << "sweep: the k grid is empty (no valid directions)\n";
        return 2;
    }
    if (spec.a_grid.empty()) {
        std::cerr << "sweep: the a grid is empty\n";
        return 2;
    }
    const auto table = sweep(P.F, P.g.set(), spec, P.g.options());
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    os << "a,k,status,t_star,minimizer\n";
    for (const SweepCell& cell : table) {
        const std::string prefix = '"' + format_point(cell.params.a) + "\",\"" +
                                   format_point(cell.params.k) + "\"," + to_cstr(cell.result.status);
        if (cell.result.has_optimum() && !cell.result.minimizers.empty()) {
            for (const Point& m : cell.result.minimizers)
                os << prefix << ',' << format_number(cell.result.t_star) << ",\"" << format_point(m) << "\"\n";
        } else {
            os << prefix << ",,\n";
        }
    }
    return 0;
}

int cmd_eff(const std::string& points_path, const std::string& d_spec, bool exclude_zero, const CommonOpts& o) {
    const std::vector<Point> pts = load_points(points_path);
    SetRep D = [&] {
        if (const auto id = builtin_from_name(d_spec)) return SetRep::builtin(*id);
        if (d_spec == "orthant" && !pts.empty()) return SetRep::orthant(pts.front().size());
        std::ifstream in(d_spec);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            return parse_set_text(ss.str());
        }
        return parse_set_text(d_spec);
    }();
    const auto eff = eff_finite(pts, DominationSet::make(std::move(D), exclude_zero));
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    os << "efficient_point\n";
    for (const Point& p : eff) os << format_point(p) << '\n';
    return 0;
}

int cmd_examples(const std::string& action, const CommonOpts& o) {
    std::ofstream file;
    std::ostream& os = open_sink(o, file);
    if (action == "list") {
        for (const BuiltinExample& e : builtin_examples()) os << e.id << ": " << e.description << '\n';
        return 0;
    }
    if (action == "run-all") {
        std::optional<PhiOptions> override_opt;
        if (o.tol || o.t_max) {
            override_opt.emplace();
            if (o.tol) override_opt->tol = *o.tol;
            if (o.t_max) override_opt->t_max = *o.t_max;
        }
        bool all = true;
        for (const CorpusOutcome& oc : run_examples(override_opt)) {
            os << (oc.pass ? "[pass] " : "[FAIL] ") << oc.id;
            if (!oc.detail.empty()) os << " -- " << oc.detail;
            os << '\n';
            all = all && oc.pass;
        }
        os << (all ? "corpus: all examples match\n" : "corpus: mismatches found\n");
        return all ? 0 : 1;
    }
    std::cerr << "examples: expected 'list' or 'run-all'\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gerstewitz-functional scalarization toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string instance, points, sweep_spec, d_spec = "orthant", action;
    bool exclude_zero = false;

    auto* eval = app.add_subcommand("eval", "evaluate phi at a list of points");
    eval->add_option("instance", instance)->required();
    eval->add_option("points", points)->required();
    add_common(eval, o);

    auto* solve_cmd = app.add_subcommand("solve", "solve the scalarized problem");
    solve_cmd->add_option("instance", instance)->required();
    add_common(solve_cmd, o);

    auto* check = app.add_subcommand("check", "existence / compactness report");
    check->add_option("instance", instance)->required();
    add_common(check, o);

    auto* sweep_cmd = app.add_subcommand("sweep", "solve across a parameter grid");
    sweep_cmd->add_option("instance", instance)->required();
    sweep_cmd->add_option("spec", sweep_spec)->required();
    add_common(sweep_cmd, o);

    auto* eff = app.add_subcommand("eff", "efficient points of a finite set");
    eff->add_option("points", points)->required();
    eff->add_option("--d-spec", d_spec, "domination set: 'orthant', builtin name, file or inline JSON");
    eff->add_flag("--exclude-zero", exclude_zero, "treat the domination set as D minus {0}");
    add_common(eff, o);

    auto* examples = app.add_subcommand("examples", "list or run the builtin corpus");
    examples->add_option("action", action, "'list' or 'run-all'")->required();
    add_common(examples, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(instance, points, o);
        if (solve_cmd->parsed()) return cmd_solve(instance, o);
        if (check->parsed()) return cmd_check(instance, o);
        if (sweep_cmd->parsed()) return cmd_sweep(instance, sweep_spec, o);
        if (eff->parsed()) return cmd_eff(points, d_spec, exclude_zero, o);
        if (examples->parsed()) return cmd_examples(action, o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
