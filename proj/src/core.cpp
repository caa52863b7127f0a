#include "ampamp/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampamp/error.hpp"

namespace ampamp {

namespace {

constexpr double kExclusionTol = 1e-14;

void require_plane(const AlgorithmModel& model) {
    if (!model.spans_plane()) {
        throw Error(ErrorCode::degenerate_subspace,
                    "success probability " + std::to_string(model.a()) +
                        " leaves a one-dimensional subspace; need 0 < a < 1");
    }
}

bool is_half_turn(double normalized) { return std::abs(std::abs(normalized) - kPi) < kExclusionTol; }

// sin(2 theta) = 2 sqrt(a) sqrt(1 - a)
double sin_two_theta(const AlgorithmModel& model) { return 2.0 * std::sqrt(model.a()) * std::sqrt(model.b()); }

}  // namespace

AlgorithmModel AlgorithmModel::from_success_probability(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw Error(ErrorCode::out_of_range, "success probability must lie in [0, 1]");
    }
    return AlgorithmModel(a, std::asin(std::sqrt(a)));
}

AlgorithmModel AlgorithmModel::from_angle(double theta) {
    if (!(theta >= 0.0 && theta <= kPi / 2.0)) {
        throw Error(ErrorCode::out_of_range, "theta must lie in [0, pi/2]");
    }
    const double s = std::sin(theta);
    return AlgorithmModel(std::min(1.0, s * s), theta);
}

PhasePair::PhasePair(double phi_zero, double phi_good)
    : phi_zero_(normalize_angle(phi_zero)), phi_good_(normalize_angle(phi_good)) {}

Unitary2 HDecomposition::recompose() const {
    return global_phase_unitary(v) * phase_unitary(u) * rotation_unitary(vartheta) * phase_unitary(-u);
}

Unitary2 build_q_matrix(const AlgorithmModel& model, const PhasePair& phases) {
    require_plane(model);
    const double a = model.a();
    const Complex zero_phase = std::polar(1.0, phases.phi_zero());
    const Complex good_phase = std::polar(1.0, phases.phi_good());
    const Complex k = 1.0 - zero_phase;
    const double off = std::sqrt(a) * std::sqrt(model.b());

    Matrix2 m;
    m(0, 0) = -(k * a + zero_phase);
    m(0, 1) = k * off * good_phase;
    m(1, 0) = k * off;
    m(1, 1) = (k * a - 1.0) * good_phase;
    return Unitary2::from_matrix(m);
}

double diagonal_gap(const Matrix2& mat) { return std::abs(mat(0, 0) - mat(1, 1)); }

double solve_phi_good(double phi_zero, const AlgorithmModel& model) {
    const double phi = normalize_angle(phi_zero);
    if (is_half_turn(phi)) {
        throw Error(ErrorCode::excluded_phase,
                    "phi_zero = pi is excluded from the phase condition; use the Grover pair (pi, pi)");
    }
    // 2 atan(tan(phi/2) (1 - 2a)), written with atan2 since cos(phi/2) > 0.
    const double half = 0.5 * phi;
    return 2.0 * std::atan2(std::sin(half) * (1.0 - 2.0 * model.a()), std::cos(half));
}

double solve_success_prob(const PhasePair& phases) {
    const double phi = phases.phi_zero();
    if (std::abs(phi) < kExclusionTol || is_half_turn(phi)) {
        throw Error(ErrorCode::excluded_phase, "phi_zero must not be 0 or pi");
    }
    if (is_half_turn(phases.phi_good())) {
        throw Error(ErrorCode::excluded_phase, "phi_good must not be pi");
    }
    return 0.5 * (1.0 - std::tan(0.5 * phases.phi_good()) / std::tan(0.5 * phi));
}

bool is_matched_pair(const PhasePair& phases, const AlgorithmModel& model, double tol) {
    if (is_half_turn(phases.phi_zero())) {
        if (is_half_turn(phases.phi_good())) return true;
        return model.spans_plane() && diagonal_gap(build_q_matrix(model, phases)) < tol;
    }
    const double target = solve_phi_good(phases.phi_zero(), model);
    return std::abs(normalize_angle(phases.phi_good() - target)) < tol;
}

double rotation_angle_from_phase(double phi_zero, const AlgorithmModel& model) {
    require_plane(model);
    const double s = std::abs(std::sin(0.5 * phi_zero) * sin_two_theta(model));
    return std::asin(std::min(1.0, s));
}

double phase_from_rotation_angle(double vartheta, const AlgorithmModel& model) {
    require_plane(model);
    const double ratio = std::abs(std::sin(vartheta)) / sin_two_theta(model);
    if (ratio > 1.0 + 1e-12) {
        throw Error(ErrorCode::unreachable_rotation,
                    "rotation by " + std::to_string(vartheta) + " exceeds what one iterate can reach");
    }
    return 2.0 * std::asin(std::min(1.0, ratio));
}

HDecomposition decompose_equal_diagonal(const Unitary2& mat) {
    const double gap = diagonal_gap(mat);
    if (!(gap < 1e-9)) {
        throw Error(ErrorCode::not_equal_diagonal,
                    "diagonal entries differ by " + std::to_string(gap));
    }
    const Complex diag = 0.5 * (mat(0, 0) + mat(1, 1));
    // det = e^{2iv} for every matrix of this form; take the branch that
    // keeps cos(vartheta) = Re(diag e^{-iv}) non-negative.
    double v = 0.5 * std::arg(determinant(mat.matrix()));
    if ((diag * std::polar(1.0, -v)).real() < 0.0) v += kPi;

    const double s = 0.5 * (std::abs(mat(1, 0)) + std::abs(mat(0, 1)));
    HDecomposition out;
    out.vartheta = std::atan2(s, std::abs(diag));
    out.v = normalize_angle(v);
    out.u = s < 1e-12 ? 0.0 : normalize_angle(std::arg(mat(1, 0)) - v);
    return out;
}

}  // namespace ampamp
