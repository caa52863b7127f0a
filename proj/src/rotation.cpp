#include "ampamp/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampamp/error.hpp"

namespace ampamp {

namespace {

constexpr double kMultipleTol = 1e-12;

// Good-state phase that equalizes the diagonal for this zero-state phase.
double matched_phase(double phi_zero, const AlgorithmModel& model) {
    if (std::abs(normalize_angle(phi_zero)) >= kPi - 1e-14) return kPi;
    return solve_phi_good(phi_zero, model);
}

// Fills phases/u/v for a signed per-iterate step.
void attach_phases(RotationPlan& plan, double step, const AlgorithmModel& model) {
    const double phi_zero = phase_from_rotation_angle(std::abs(step), model);
    plan.phases = PhasePair(phi_zero, matched_phase(phi_zero, model));
    const HDecomposition h = decompose_equal_diagonal(build_q_matrix(model, plan.phases));
    // R(-t) = diag(1, -1) R(t) diag(1, -1)
    plan.u = step < 0.0 ? normalize_angle(h.u - kPi) : h.u;
    plan.v = h.v;
    plan.vartheta = step;
}

}  // namespace

RotationPlan plan_rotation(double x, const AlgorithmModel& model) {
    if (!(x >= 0.0 && x < 2.0 * kPi)) {
        throw Error(ErrorCode::out_of_range, "rotation angle must lie in [0, 2pi)");
    }
    if (!model.spans_plane()) {
        throw Error(ErrorCode::degenerate_subspace, "rotation synthesis needs 0 < a < 1");
    }

    RotationPlan plan;
    plan.target_x = x;
    plan.a = model.a();
    if (x == 0.0) return plan;

    const double two_theta = 2.0 * model.theta();
    const double turns = x / two_theta;
    const double nearest = std::round(turns);
    if (nearest >= 1.0 && std::abs(turns - nearest) <= kMultipleTol * std::max(1.0, turns)) {
        plan.grover_shortcut = true;
        plan.m = static_cast<unsigned>(nearest);
        plan.vartheta = two_theta;
        return plan;
    }

    // Largest step one matched iterate reaches: asin(sin 2 theta).
    const double reach = std::asin(std::min(1.0, 2.0 * std::sqrt(model.a()) * std::sqrt(model.b())));

    const unsigned m = static_cast<unsigned>(std::floor(turns)) + 1;
    const double step = x / static_cast<double>(m);
    if (step <= reach * (1.0 + kMultipleTol)) {
        plan.m = m;
        attach_phases(plan, std::min(step, reach), model);
        plan.vartheta = step;
        return plan;
    }

    // a > 1/2: rotate by the residue of x modulo pi instead.
    const double half_turns = std::round(x / kPi);
    const double residue = x - half_turns * kPi;
    unsigned fallback_m = std::max(1u, static_cast<unsigned>(std::ceil(std::abs(residue) / reach)));
    while (std::abs(residue) / fallback_m > reach) ++fallback_m;
    plan.m = fallback_m;
    plan.half_turns = static_cast<int>(half_turns);
    attach_phases(plan, residue / fallback_m, model);
    return plan;
}

Matrix2 effective_operator(const RotationPlan& plan, const AlgorithmModel& model) {
    if (plan.m == 0) return Matrix2::identity();
    const Unitary2 q = build_q_matrix(model, plan.phases);
    const double sign = (plan.half_turns % 2 == 0) ? 1.0 : -1.0;
    const Complex global = sign * std::polar(1.0, -static_cast<double>(plan.m) * plan.v);
    return global * (phase_matrix(-plan.u) * q.power(plan.m).matrix() * phase_matrix(plan.u));
}

Vec2 apply_rotation_plan(const RotationPlan& plan, const AlgorithmModel& model, const Vec2& state) {
    if (std::abs(plan.a - model.a()) > 1e-15) {
        throw Error(ErrorCode::model_mismatch, "plan was built for a = " + std::to_string(plan.a));
    }
    if (plan.m > 0 && !plan.grover_shortcut) {
        HDecomposition h;
        h.vartheta = std::abs(plan.vartheta);
        h.u = plan.vartheta < 0.0 ? plan.u + kPi : plan.u;
        h.v = plan.v;
        const double mismatch = max_abs_diff(h.recompose().matrix(), build_q_matrix(model, plan.phases).matrix());
        if (mismatch > 1e-9) {
            throw Error(ErrorCode::model_mismatch, "plan phases do not produce the planned iterate");
        }
    } else if (plan.grover_shortcut && !is_matched_pair(plan.phases, model)) {
        throw Error(ErrorCode::model_mismatch, "shortcut plan must use the Grover pair");
    }
    return effective_operator(plan, model) * state;
}

double plan_deviation(const RotationPlan& plan, const AlgorithmModel& model) {
    return max_abs_diff(effective_operator(plan, model), rotation_matrix(plan.target_x));
}

}  // namespace ampamp
