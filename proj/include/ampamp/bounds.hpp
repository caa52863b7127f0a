#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ampamp/core.hpp"
#include "ampamp/simulator.hpp"

namespace ampamp::bounds {

enum class Check { lemma1, norm_chain, theorem2, theorem3 };
enum class Status { satisfied, violated, vacuous, not_applicable };

const char* to_string(Check check) noexcept;
const char* to_string(Status status) noexcept;
/// Accepts "lemma1", "norm" / "norm_chain", "theorem2", "theorem3".
std::optional<Check> parse_check(const std::string& name);

/// One measured inequality. `measured` is the overlap for lemma1, the
/// operator norm ||Q' - Q|| for norm_chain and the bad-outcome probability
/// for theorem2/theorem3.
struct BoundReport {
    Check check = Check::lemma1;
    double a = 0.0;
    double phi_zero = 0.0;
    double phi_good_used = 0.0;
    double phi_good_matched = 0.0;
    unsigned m = 0;
    double measured = 0.0;
    double bound = 0.0;
    double delta = 0.0;      // |phi_good_used - phi_good_matched|
    double delta_max = 0.0;  // theorem3 proviso; 0 elsewhere
    Status status = Status::not_applicable;

    bool satisfied() const { return status == Status::satisfied; }
};

/// vartheta in (0, pi/2] with sin(vartheta) = sin(phi/2) sin(2 theta).
double equal_angle_step(double phi_zero, const AlgorithmModel& model);

/// ceil((pi/2) / vartheta - 1/2), the iterate count of the equal-angle
/// results. Not the same as the exact schedule's count.
unsigned equal_angle_iterations(double vartheta);

/// Overlap |<good| Q(phi, phi)^m A|0>| against 1 - a (2 + 4 pi^2 m).
/// Accepts 0 < phi_zero <= pi (pi is the Grover limit).
BoundReport check_lemma1(const AlgorithmModel& model, double phi_zero);

/// The chain bounding ||Q(phi, phi') - Q(phi, phi_matched)||.
struct NormChainReport {
    double a = 0.0;
    double phi_zero = 0.0;
    double phi_good_used = 0.0;
    double phi_good_matched = 0.0;
    unsigned m = 0;
    double phase_gap = 0.0;          // |phi' - phi_matched|
    double phase_gap_bound = 0.0;    // 2 pi a
    double op_norm = 0.0;            // largest singular value of Q' - Q
    double op_norm_identity = 0.0;   // |1 - e^{i (phi' - phi_matched)}|
    double op_norm_bound = 0.0;      // 4 pi^2 a
    double power_gap = 0.0;          // ||Q'^m - Q^m||
    double power_gap_bound = 0.0;    // 4 pi^2 a m

    bool phase_gap_ok() const { return phase_gap <= phase_gap_bound; }
    bool identity_ok() const { return std::abs(op_norm - op_norm_identity) <= 1e-12; }
    bool op_norm_ok() const { return op_norm <= op_norm_bound; }
    bool power_gap_ok() const { return power_gap <= power_gap_bound; }
    bool all_ok() const { return phase_gap_ok() && identity_ok() && op_norm_ok() && power_gap_ok(); }

    BoundReport as_row() const;
};

/// phi_good_used defaults to phi_zero (equal angles). Requires 0 < phi_zero <= pi.
NormChainReport norm_chain(const AlgorithmModel& model, double phi_zero,
                           std::optional<double> phi_good_used = std::nullopt);

/// Bad-outcome probability after Q(phi, phi)^m A|0> against
/// 4 pi^3 a / vartheta + 44 a. Requires theta <= phi_zero < pi.
BoundReport run_theorem2(const AlgorithmModel& model, double phi_zero);

/// epsilon sqrt(3) / (2 pi^2 (sqrt(3) + pi)) phi sqrt(a)
double theorem3_delta_max(const AlgorithmModel& model, double phi_zero, double epsilon);

/// Bad-outcome probability after Q(phi, phi')^m A|0> against 4a + epsilon,
/// applicable when |phi' - phi_matched| <= theorem3_delta_max.
/// Requires 0 < phi_zero < pi, -pi < phi' < pi, epsilon > 0.
BoundReport run_theorem3(const AlgorithmModel& model, double phi_zero, double phi_good_used, double epsilon);

enum class GoodPhaseMode { equal, matched, fixed };

struct SweepSpec {
    Check check = Check::lemma1;
    std::vector<double> a_values;
    std::vector<double> phi_values;
    GoodPhaseMode mode = GoodPhaseMode::equal;  // theorem3 and norm_chain
    double fixed_phi_good = 0.0;
    double epsilon = 0.1;

    /// a in {2^-1, ..., 2^-10}, phi in {pi/6, pi/4, pi/2, 2pi/3, 5pi/6}.
    static SweepSpec default_grid(Check check);
};

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t satisfied = 0;
    std::size_t violated = 0;
    std::size_t vacuous = 0;
    std::size_t not_applicable = 0;
};

struct SweepTable {
    std::vector<BoundReport> rows;  // phi-major, a in the order given
    SweepSummary summary;
};

/// Runs the selected check at every grid point. Points outside a check's
/// domain become not_applicable rows. Throws Error(empty_grid).
SweepTable sweep(const SweepSpec& spec);

/// Recomputes row.measured on the full statevector of `config`, whose
/// success probability must equal row.a. Throws Error(model_mismatch).
double remeasure_with_simulator(const BoundReport& row, const sim::SimConfig& config);

}  // namespace ampamp::bounds
