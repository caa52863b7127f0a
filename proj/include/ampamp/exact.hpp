#pragma once

#include <vector>

#include "ampamp/core.hpp"
#include "ampamp/simulator.hpp"

namespace ampamp {

inline constexpr unsigned kMaxRegisterQubits = 10;

/// Schedule that lands on the good axis after m matched iterates: each
/// iterate rotates by vartheta, and the start angle is shifted to
/// theta_init = pi/2 - m vartheta, which lies in (-theta, theta].
struct ExactSchedule {
    PhasePair phases = PhasePair::grover();
    double a = 0.0;
    double vartheta = 0.0;
    unsigned m = 0;
    double theta_init = 0.0;
    double u = 0.0;
    double v = 0.0;
};

/// Throws Error(trivial_angles) for phi_zero = 0 and
/// Error(degenerate_subspace) for a in {0, 1}.
ExactSchedule schedule_exact(double phi_zero, const AlgorithmModel& model);

/// Start state in plane coordinates: bad = cos(theta_init),
/// good = e^{iu} sin(theta_init). The phase cancels the inner conjugation of
/// M^m = e^{imv} diag(1, e^{iu}) R(m vartheta) diag(1, e^{-iu}).
Vec2 prepare_init_subspace(const ExactSchedule& schedule);

/// The same start state without the e^{iu} correction.
Vec2 prepare_uncorrected_subspace(const ExactSchedule& schedule);

/// |good component of M^m prepare_init_subspace(schedule)|^2; equals 1.
double run_exact_subspace(const ExactSchedule& schedule, const AlgorithmModel& model);

/// Same, starting from prepare_uncorrected_subspace. Reported for comparison.
double run_uncorrected_subspace(const ExactSchedule& schedule, const AlgorithmModel& model);

struct RegisterReport {
    double p_good = 0.0;           // register 1 measured good, after the swap
    double purity = 0.0;           // Tr(rho_1^2) of register 1, after the swap
    double max_norm_drift = 0.0;   // over every step
    double alpha = 0.0;
    double beta = 0.0;
    // Good probability of register 1 inside the register-3 = 0 branch, and
    // the plane-model prediction, for steps 0..m.
    std::vector<double> branch_p_good;
    std::vector<double> predicted_p_good;
};

/// Three-register construction on registers of size N, N and 2:
///   1. A on register 1 of |0>|0>|0>
///   2. map to alpha |Psi_init>|0>|0> + beta |0>|Psi_1>|1>
///   3. Q^m on register 1
///   4. swap registers 1 and 2 when register 3 holds 1
/// Throws Error(dimension_limit) above kMaxRegisterQubits qubits and
/// Error(model_mismatch) if the schedule was built for another a.
RegisterReport simulate_exact_registers(const sim::SimConfig& config, const ExactSchedule& schedule);

/// simulate_exact_registers(...).p_good
double run_exact_registers(const sim::SimConfig& config, const ExactSchedule& schedule);

}  // namespace ampamp
