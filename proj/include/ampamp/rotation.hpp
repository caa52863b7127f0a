#pragma once

#include "ampamp/core.hpp"

namespace ampamp {

/// Recipe for a rotation by target_x built from m iterates:
///
///   R(x) = (-1)^half_turns e^{-imv} diag(1, e^{-iu}) M^m diag(1, e^{iu})
///
/// where M = build_q_matrix(model, phases).
struct RotationPlan {
    double target_x = 0.0;
    double a = 0.0;           // success probability the plan was built for
    unsigned m = 0;           // iterate count; 0 is the identity plan
    double vartheta = 0.0;    // signed rotation per iterate; m * vartheta = x - half_turns * pi
    PhasePair phases = PhasePair::grover();
    double u = 0.0;
    double v = 0.0;
    int half_turns = 0;       // nonzero only on the a > 1/2 fallback path
    bool grover_shortcut = false;
};

/// Builds the plan for rotating by x in [0, 2pi).
///
/// Exact multiples of 2 theta use the plain Grover iterate. Otherwise m is
/// the smallest integer exceeding x / (2 theta) and each iterate rotates by
/// x / m. When a > 1/2 that step can exceed what one iterate reaches
/// (|sin(step)| > sin(2 theta)); the plan then uses the fewest iterates whose
/// step reaches x modulo pi, with the sign folded into half_turns.
///
/// Throws Error(out_of_range) for x outside [0, 2pi) and
/// Error(degenerate_subspace) for a in {0, 1}.
RotationPlan plan_rotation(double x, const AlgorithmModel& model);

/// The 2x2 operator the plan implements. Should equal R(plan.target_x).
Matrix2 effective_operator(const RotationPlan& plan, const AlgorithmModel& model);

/// Applies the plan to a plane state. Throws Error(model_mismatch) when the
/// model or phases disagree with what the plan was built from.
Vec2 apply_rotation_plan(const RotationPlan& plan, const AlgorithmModel& model, const Vec2& state);

/// max-norm distance between effective_operator and R(target_x).
double plan_deviation(const RotationPlan& plan, const AlgorithmModel& model);

}  // namespace ampamp
