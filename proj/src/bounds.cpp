#include "ampamp/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ampamp/error.hpp"

namespace ampamp::bounds {

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi3 = kPi * kPi * kPi;
constexpr double kSlack = 1e-12;

void require_plane(const AlgorithmModel& model) {
    if (!model.spans_plane()) throw Error(ErrorCode::degenerate_subspace, "bound checks need 0 < a < 1");
}

void require_phase(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::out_of_range, what);
}

double matched_phase(double phi_zero, const AlgorithmModel& model) {
    return phi_zero >= kPi - 1e-14 ? kPi : solve_phi_good(phi_zero, model);
}

Vec2 start_state(const AlgorithmModel& model) {
    return {Complex(std::cos(model.theta())), Complex(std::sin(model.theta()))};
}

Vec2 iterate(const AlgorithmModel& model, const PhasePair& phases, unsigned m) {
    return build_q_matrix(model, phases).power(m) * start_state(model);
}

}  // namespace

const char* to_string(Check check) noexcept {
    switch (check) {
        case Check::lemma1: return "lemma1";
        case Check::norm_chain: return "norm_chain";
        case Check::theorem2: return "theorem2";
        case Check::theorem3: return "theorem3";
    }
    return "unknown";
}

const char* to_string(Status status) noexcept {
    switch (status) {
        case Status::satisfied: return "satisfied";
        case Status::violated: return "violated";
        case Status::vacuous: return "vacuous";
        case Status::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::optional<Check> parse_check(const std::string& name) {
    if (name == "lemma1") return Check::lemma1;
    if (name == "norm" || name == "norm_chain") return Check::norm_chain;
    if (name == "theorem2") return Check::theorem2;
    if (name == "theorem3") return Check::theorem3;
    return std::nullopt;
}

double equal_angle_step(double phi_zero, const AlgorithmModel& model) {
    return rotation_angle_from_phase(phi_zero, model);
}

unsigned equal_angle_iterations(double vartheta) {
    return static_cast<unsigned>(std::max(0.0, std::ceil((kPi / 2.0) / vartheta - 0.5)));
}

BoundReport check_lemma1(const AlgorithmModel& model, double phi_zero) {
    require_plane(model);
    require_phase(phi_zero > 0.0 && phi_zero <= kPi, "lemma1 needs 0 < phi <= pi");

    BoundReport r;
    r.check = Check::lemma1;
    r.a = model.a();
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_zero;
    r.phi_good_matched = matched_phase(phi_zero, model);
    r.delta = std::abs(r.phi_good_used - r.phi_good_matched);
    r.m = equal_angle_iterations(equal_angle_step(phi_zero, model));
    r.measured = std::abs(iterate(model, PhasePair(phi_zero, phi_zero), r.m)[kGood]);
    r.bound = 1.0 - model.a() * (2.0 + 4.0 * kPi2 * r.m);
    if (r.bound < 0.0) {
        r.status = Status::vacuous;
    } else {
        r.status = r.measured >= r.bound - kSlack ? Status::satisfied : Status::violated;
    }
    return r;
}

BoundReport NormChainReport::as_row() const {
    BoundReport r;
    r.check = Check::norm_chain;
    r.a = a;
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_good_used;
    r.phi_good_matched = phi_good_matched;
    r.m = m;
    r.measured = op_norm;
    r.bound = op_norm_bound;
    r.delta = phase_gap;
    r.status = all_ok() ? Status::satisfied : Status::violated;
    return r;
}

NormChainReport norm_chain(const AlgorithmModel& model, double phi_zero, std::optional<double> phi_good_used) {
    require_plane(model);
    require_phase(phi_zero > 0.0 && phi_zero <= kPi, "norm chain needs 0 < phi <= pi");

    NormChainReport r;
    r.a = model.a();
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_good_used.value_or(phi_zero);
    r.phi_good_matched = matched_phase(phi_zero, model);
    r.m = equal_angle_iterations(equal_angle_step(phi_zero, model));

    const double gap = r.phi_good_used - r.phi_good_matched;
    r.phase_gap = std::abs(gap);
    r.phase_gap_bound = 2.0 * kPi * r.a;
    r.op_norm_identity = 2.0 * std::abs(std::sin(0.5 * gap));
    r.op_norm_bound = 4.0 * kPi2 * r.a;
    r.power_gap_bound = r.op_norm_bound * r.m;

    const Unitary2 approx = build_q_matrix(model, PhasePair(phi_zero, r.phi_good_used));
    const Unitary2 exact = build_q_matrix(model, PhasePair(phi_zero, r.phi_good_matched));
    r.op_norm = operator_norm(approx.matrix() - exact.matrix());
    r.power_gap = operator_norm(approx.power(r.m).matrix() - exact.power(r.m).matrix());
    return r;
}

BoundReport run_theorem2(const AlgorithmModel& model, double phi_zero) {
    require_plane(model);
    require_phase(phi_zero >= model.theta() && phi_zero < kPi, "theorem2 needs theta <= phi < pi");

    BoundReport r;
    r.check = Check::theorem2;
    r.a = model.a();
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_zero;
    r.phi_good_matched = matched_phase(phi_zero, model);
    r.delta = std::abs(r.phi_good_used - r.phi_good_matched);
    const double vartheta = equal_angle_step(phi_zero, model);
    r.m = equal_angle_iterations(vartheta);
    r.measured = std::norm(iterate(model, PhasePair(phi_zero, phi_zero), r.m)[kBad]);
    r.bound = 4.0 * kPi3 * r.a / vartheta + 44.0 * r.a;
    if (r.bound > 1.0) {
        r.status = Status::vacuous;
    } else {
        r.status = r.measured <= r.bound + kSlack ? Status::satisfied : Status::violated;
    }
    return r;
}

double theorem3_delta_max(const AlgorithmModel& model, double phi_zero, double epsilon) {
    const double sqrt3 = std::sqrt(3.0);
    return epsilon * sqrt3 / (2.0 * kPi2 * (sqrt3 + kPi)) * phi_zero * std::sqrt(model.a());
}

BoundReport run_theorem3(const AlgorithmModel& model, double phi_zero, double phi_good_used, double epsilon) {
    require_plane(model);
    require_phase(phi_zero > 0.0 && phi_zero < kPi, "theorem3 needs 0 < phi < pi");
    require_phase(phi_good_used > -kPi && phi_good_used < kPi, "theorem3 needs -pi < phi' < pi");
    require_phase(epsilon > 0.0, "theorem3 needs epsilon > 0");

    BoundReport r;
    r.check = Check::theorem3;
    r.a = model.a();
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_good_used;
    r.phi_good_matched = solve_phi_good(phi_zero, model);
    r.delta = std::abs(phi_good_used - r.phi_good_matched);
    r.delta_max = theorem3_delta_max(model, phi_zero, epsilon);
    r.m = equal_angle_iterations(equal_angle_step(phi_zero, model));
    r.measured = std::norm(iterate(model, PhasePair(phi_zero, phi_good_used), r.m)[kBad]);
    r.bound = 4.0 * r.a + epsilon;
    if (r.delta > r.delta_max) {
        r.status = Status::not_applicable;
    } else if (r.bound > 1.0) {
        r.status = Status::vacuous;
    } else {
        r.status = r.measured <= r.bound + kSlack ? Status::satisfied : Status::violated;
    }
    return r;
}

SweepSpec SweepSpec::default_grid(Check check) {
    SweepSpec spec;
    spec.check = check;
    for (int k = 1; k <= 10; ++k) spec.a_values.push_back(std::ldexp(1.0, -k));
    spec.phi_values = {kPi / 6.0, kPi / 4.0, kPi / 2.0, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0};
    return spec;
}

namespace {

double good_phase_for(const SweepSpec& spec, double phi_zero, const AlgorithmModel& model) {
    switch (spec.mode) {
        case GoodPhaseMode::equal: return phi_zero;
        case GoodPhaseMode::matched: return matched_phase(phi_zero, model);
        case GoodPhaseMode::fixed: return spec.fixed_phi_good;
    }
    return phi_zero;
}

BoundReport evaluate(const SweepSpec& spec, double a, double phi_zero) {
    const AlgorithmModel model = AlgorithmModel::from_success_probability(a);
    try {
        switch (spec.check) {
            case Check::lemma1: return check_lemma1(model, phi_zero);
            case Check::norm_chain: return norm_chain(model, phi_zero, good_phase_for(spec, phi_zero, model)).as_row();
            case Check::theorem2: return run_theorem2(model, phi_zero);
            case Check::theorem3:
                return run_theorem3(model, phi_zero, good_phase_for(spec, phi_zero, model), spec.epsilon);
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::out_of_range && e.code() != ErrorCode::degenerate_subspace) throw;
    }
    BoundReport r;
    r.check = spec.check;
    r.a = a;
    r.phi_zero = phi_zero;
    r.phi_good_used = phi_zero;
    r.status = Status::not_applicable;
    return r;
}

}  // namespace

SweepTable sweep(const SweepSpec& spec) {
    if (spec.a_values.empty() || spec.phi_values.empty()) {
        throw Error(ErrorCode::empty_grid, "sweep grid has no points");
    }
    SweepTable table;
    for (double phi : spec.phi_values) {
        for (double a : spec.a_values) {
            table.rows.push_back(evaluate(spec, a, phi));
            auto& s = table.summary;
            ++s.rows;
            switch (table.rows.back().status) {
                case Status::satisfied: ++s.satisfied; break;
                case Status::violated: ++s.violated; break;
                case Status::vacuous: ++s.vacuous; break;
                case Status::not_applicable: ++s.not_applicable; break;
            }
        }
    }
    return table;
}

double remeasure_with_simulator(const BoundReport& row, const sim::SimConfig& config) {
    if (std::abs(config.success_probability() - row.a) > 1e-12) {
        throw Error(ErrorCode::model_mismatch, "configuration success probability differs from the report");
    }
    if (row.check == Check::norm_chain) {
        const auto approx = sim::restricted_matrix(config, PhasePair(row.phi_zero, row.phi_good_used));
        const auto exact = sim::restricted_matrix(config, PhasePair(row.phi_zero, row.phi_good_matched));
        return operator_norm(approx.matrix - exact.matrix);
    }
    const PhasePair phases(row.phi_zero, row.phi_good_used);
    sim::StateVector state = sim::initial_state(config);
    for (unsigned step = 0; step < row.m; ++step) sim::apply_q(state, config, phases);
    const double p_good = sim::good_probability(state, config);
    if (row.check == Check::lemma1) return std::sqrt(p_good);
    double p_bad = 0.0;
    for (std::size_t x = 0; x < state.size(); ++x) {
        if (!config.is_good(x)) p_bad += std::norm(state[x]);
    }
    return p_bad;
}

}  // namespace ampamp::bounds
