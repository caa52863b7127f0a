#include "ampamp/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ampamp/angles.hpp"
#include "ampamp/core.hpp"
#include "ampamp/error.hpp"
#include "ampamp/exact.hpp"
#include "ampamp/rotation.hpp"
#include "ampamp/simulator.hpp"

namespace ampamp::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_real(std::string_view text, const char* flag) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw Error(ErrorCode::out_of_range, std::string("invalid value for ") + flag + ": '" + std::string(text) + "'");
    }
    return value;
}

struct Options {
    std::string phi = "pi";
    std::string varphi;
    std::string a;
    std::string x;
    unsigned n = 0;
    std::string marked;
    unsigned steps = 1;
    std::string epsilon = "0.1";
    std::string grid = "default";
    std::string check = "lemma1";
    std::string format;
    std::string out_path;
};

// Writes to --out when given, otherwise to the stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorCode::out_of_range, "cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (format == f) return;
    }
    throw Error(ErrorCode::out_of_range, "unsupported --format '" + format + "'");
}

AlgorithmModel model_from_flag(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::out_of_range, "--a is required");
    const double a = parse_real(text, "--a");
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::degenerate_subspace, "--a must lie strictly between 0 and 1");
    return AlgorithmModel::from_success_probability(a);
}

sim::SimConfig config_from_flags(const Options& o) {
    if (o.n == 0) throw Error(ErrorCode::out_of_range, "--n is required");
    if (o.marked.empty()) throw Error(ErrorCode::invalid_marked_set, "--marked is required");
    return sim::SimConfig::walsh_hadamard(o.n, parse_index_list(o.marked));
}

int cmd_solve(const Options& o, std::ostream& out) {
    require_format(o.format.empty() ? "json" : o.format, {"json"});
    const double phi = parse_angle(o.phi);
    const AlgorithmModel model = model_from_flag(o.a);
    const double phi_good = solve_phi_good(phi, model);
    const Unitary2 q = build_q_matrix(model, PhasePair(phi, phi_good));
    const HDecomposition h = decompose_equal_diagonal(q);

    ordered_json rec;
    rec["phi_zero"] = normalize_angle(phi);
    rec["a"] = model.a();
    rec["phi_good"] = phi_good;
    rec["vartheta"] = h.vartheta;
    rec["u"] = h.u;
    rec["v"] = h.v;
    rec["diagonal_gap"] = diagonal_gap(q);
    Sink sink(o.out_path, out);
    sink.stream() << rec.dump() << '\n';
    return kOk;
}

int cmd_rotate(const Options& o, std::ostream& out) {
    require_format(o.format.empty() ? "json" : o.format, {"json"});
    if (o.x.empty()) throw Error(ErrorCode::out_of_range, "--x is required");
    const double x = parse_angle(o.x);
    const AlgorithmModel model = model_from_flag(o.a);
    const RotationPlan plan = plan_rotation(x, model);
    const double deviation = plan_deviation(plan, model);

    ordered_json rec;
    rec["x"] = plan.target_x;
    rec["a"] = plan.a;
    rec["m"] = plan.m;
    rec["vartheta"] = plan.vartheta;
    rec["phi_zero"] = plan.phases.phi_zero();
    rec["phi_good"] = plan.phases.phi_good();
    rec["u"] = plan.u;
    rec["v"] = plan.v;
    rec["half_turns"] = plan.half_turns;
    rec["grover_shortcut"] = plan.grover_shortcut;
    rec["deviation"] = deviation;
    Sink sink(o.out_path, out);
    sink.stream() << rec.dump() << '\n';
    if (deviation > 1e-9) throw Error(ErrorCode::contract_violation, "rotation plan deviates from R(x)");
    return kOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
    require_format(o.format.empty() ? "json" : o.format, {"json"});
    const double phi = parse_angle(o.phi);
    std::optional<sim::SimConfig> config;
    if (o.n != 0 || !o.marked.empty()) {
        if (!o.a.empty()) throw Error(ErrorCode::out_of_range, "give either --a or --n/--marked, not both");
        config = config_from_flags(o);
        if (config->qubits() > kMaxRegisterQubits) {
            throw Error(ErrorCode::dimension_limit, "register simulation supports at most 10 qubits");
        }
    }
    const AlgorithmModel model = config ? config->model() : model_from_flag(o.a);
    const ExactSchedule schedule = schedule_exact(phi, model);
    const double p_subspace = run_exact_subspace(schedule, model);

    ordered_json rec;
    rec["phi_zero"] = schedule.phases.phi_zero();
    rec["phi_good"] = schedule.phases.phi_good();
    rec["a"] = schedule.a;
    rec["m"] = schedule.m;
    rec["vartheta"] = schedule.vartheta;
    rec["theta_init"] = schedule.theta_init;
    rec["u"] = schedule.u;
    rec["v"] = schedule.v;
    rec["p_success_subspace"] = p_subspace;
    rec["p_success_uncorrected"] = run_uncorrected_subspace(schedule, model);
    bool ok = std::abs(p_subspace - 1.0) <= 1e-9;
    if (config) {
        const RegisterReport report = simulate_exact_registers(*config, schedule);
        rec["p_success_registers"] = report.p_good;
        rec["register1_purity"] = report.purity;
        ok = ok && std::abs(report.p_good - 1.0) <= 1e-9;
    } else {
        rec["p_success_registers"] = nullptr;
    }
    Sink sink(o.out_path, out);
    sink.stream() << rec.dump() << '\n';
    if (!ok) throw Error(ErrorCode::contract_violation, "exact schedule did not reach probability 1");
    return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "json" : o.format;
    require_format(format, {"json", "csv"});
    const sim::SimConfig config = config_from_flags(o);
    const double phi = parse_angle(o.phi);
    const double varphi = o.varphi.empty() ? phi : parse_angle(o.varphi);
    const auto rows = sim::run_iterates(config, PhasePair(phi, varphi), o.steps);

    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "# ampamp " << kVersion << '\n' << "step,p_good,angle_estimate\n";
        for (const auto& r : rows) {
            os << r.step << ',' << format_double(r.p_good) << ',' << format_double(r.angle_estimate) << '\n';
        }
    } else {
        for (const auto& r : rows) {
            ordered_json rec;
            rec["step"] = r.step;
            rec["p_good"] = r.p_good;
            rec["angle_estimate"] = r.angle_estimate;
            os << rec.dump() << '\n';
        }
    }
    return kOk;
}

ordered_json summary_json(const bounds::SweepSpec& spec, const bounds::SweepTable& table) {
    ordered_json s;
    s["check"] = bounds::to_string(spec.check);
    s["rows"] = table.summary.rows;
    s["satisfied"] = table.summary.satisfied;
    s["violated"] = table.summary.violated;
    s["vacuous"] = table.summary.vacuous;
    s["not_applicable"] = table.summary.not_applicable;
    return s;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"json", "csv"});
    const auto check = bounds::parse_check(o.check);
    if (!check) throw Error(ErrorCode::out_of_range, "unknown --check '" + o.check + "'");

    bounds::SweepSpec spec = parse_grid(o.grid, *check);
    spec.epsilon = parse_real(o.epsilon, "--epsilon");
    if (!(spec.epsilon > 0.0)) throw Error(ErrorCode::out_of_range, "--epsilon must be positive");
    if (o.varphi.empty() || o.varphi == "equal") {
        spec.mode = bounds::GoodPhaseMode::equal;
    } else if (o.varphi == "matched") {
        spec.mode = bounds::GoodPhaseMode::matched;
    } else {
        spec.mode = bounds::GoodPhaseMode::fixed;
        spec.fixed_phi_good = parse_angle(o.varphi);
    }
    const bounds::SweepTable table = bounds::sweep(spec);

    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "# ampamp " << kVersion << '\n' << "check,a,phi_zero,phi_good_used,m,measured,bound,status\n";
        for (const auto& r : table.rows) {
            os << bounds::to_string(r.check) << ',' << format_double(r.a) << ',' << format_double(r.phi_zero) << ','
               << format_double(r.phi_good_used) << ',' << r.m << ',' << format_double(r.measured) << ','
               << format_double(r.bound) << ',' << bounds::to_string(r.status) << '\n';
        }
        (sink.to_file() ? out : err) << summary_json(spec, table).dump() << '\n';
    } else {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const auto& r : table.rows) {
            ordered_json row;
            row["check"] = bounds::to_string(r.check);
            row["a"] = r.a;
            row["phi_zero"] = r.phi_zero;
            row["phi_good_used"] = r.phi_good_used;
            row["phi_good_matched"] = r.phi_good_matched;
            row["m"] = r.m;
            row["measured"] = r.measured;
            row["bound"] = r.bound;
            row["delta"] = r.delta;
            row["delta_max"] = r.delta_max;
            row["status"] = bounds::to_string(r.status);
            doc["rows"].push_back(row);
        }
        doc["summary"] = summary_json(spec, table);
        os << doc.dump() << '\n';
    }
    return table.summary.violated == 0 ? kOk : kInternalError;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (auto part : split(text, ',')) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw Error(ErrorCode::invalid_marked_set, "invalid marked index '" + std::string(part) + "'");
        }
        out.push_back(value);
    }
    return out;
}

bounds::SweepSpec parse_grid(std::string_view text, bounds::Check check) {
    bounds::SweepSpec spec = bounds::SweepSpec::default_grid(check);
    if (text == "default") return spec;
    spec.a_values.clear();
    spec.phi_values.clear();
    bool seen_a = false;
    bool seen_phi = false;
    for (auto clause : split(text, ';')) {
        const auto eq = clause.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorCode::out_of_range, "grid clause needs key=values");
        const auto key = clause.substr(0, eq);
        const auto values = clause.substr(eq + 1);
        for (auto item : split(values, ',')) {
            if (item.empty()) continue;
            if (key == "a") {
                spec.a_values.push_back(parse_real(item, "--grid a"));
            } else if (key == "phi") {
                spec.phi_values.push_back(parse_angle(item));
            } else {
                throw Error(ErrorCode::out_of_range, "unknown grid key '" + std::string(key) + "'");
            }
        }
        seen_a = seen_a || key == "a";
        seen_phi = seen_phi || key == "phi";
    }
    // An omitted axis keeps its default values.
    if (!seen_a) spec.a_values = bounds::SweepSpec::default_grid(check).a_values;
    if (!seen_phi) spec.phi_values = bounds::SweepSpec::default_grid(check).phi_values;
    for (double a : spec.a_values) {
        if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::out_of_range, "grid a values must lie in (0, 1)");
    }
    if (spec.a_values.empty() || spec.phi_values.empty()) throw Error(ErrorCode::empty_grid, "grid has no points");
    return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Amplitude amplification with arbitrary phases"};
    app.name("ampamp");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Solve the phase condition for the good-state phase");
    solve->add_option("--phi", o.phi, "Zero-state phase (radians; pi forms accepted)")->required();
    solve->add_option("--a", o.a, "Success probability of A")->required();

    auto* rotate = app.add_subcommand("rotate", "Plan a rotation by x from amplification iterates");
    rotate->add_option("--x", o.x, "Rotation angle in [0, 2pi)")->required();
    rotate->add_option("--a", o.a, "Success probability of A")->required();

    auto* exact = app.add_subcommand("exact", "Schedule and verify certain success");
    exact->add_option("--phi", o.phi, "Zero-state phase");
    exact->add_option("--a", o.a, "Success probability (plane model only)");
    exact->add_option("--n", o.n, "Qubits per register (register simulation)");
    exact->add_option("--marked", o.marked, "Comma-separated marked indices");

    auto* simulate = app.add_subcommand("simulate", "Iterate Q on the full statevector");
    simulate->add_option("--n", o.n, "Qubit count")->required();
    simulate->add_option("--marked", o.marked, "Comma-separated marked indices")->required();
    simulate->add_option("--phi", o.phi, "Zero-state phase");
    simulate->add_option("--varphi", o.varphi, "Good-state phase (defaults to --phi)");
    simulate->add_option("--steps", o.steps, "Number of iterates");

    auto* bounds_cmd = app.add_subcommand("bounds", "Sweep the equal-angle and any-angle bounds");
    bounds_cmd->add_option("--check", o.check, "lemma1 | norm | theorem2 | theorem3");
    bounds_cmd->add_option("--grid", o.grid, "default | a=<list>;phi=<list>");
    bounds_cmd->add_option("--varphi", o.varphi, "equal (default) | matched | <angle>");
    bounds_cmd->add_option("--epsilon", o.epsilon, "Error budget for --check theorem3");

    for (auto* sub : {solve, rotate, exact, simulate, bounds_cmd}) {
        sub->add_option("--format", o.format, "json | csv");
        sub->add_option("--out", o.out_path, "Write output to this file");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }

    try {
        if (solve->parsed()) return cmd_solve(o, out);
        if (rotate->parsed()) return cmd_rotate(o, out);
        if (exact->parsed()) return cmd_exact(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (bounds_cmd->parsed()) return cmd_bounds(o, out, err);
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return e.code() == ErrorCode::contract_violation ? kInternalError : kValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kValidationError;
}

}  // namespace ampamp::cli
