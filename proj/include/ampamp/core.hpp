#pragma once

#include "ampamp/angles.hpp"
#include "ampamp/matrix2.hpp"

namespace ampamp {

/// Success probability a of the base algorithm together with the angle
/// theta in [0, pi/2] satisfying sin^2(theta) = a.
class AlgorithmModel {
public:
    /// Throws Error(out_of_range) unless 0 <= a <= 1.
    static AlgorithmModel from_success_probability(double a);
    /// Throws Error(out_of_range) unless 0 <= theta <= pi/2.
    static AlgorithmModel from_angle(double theta);

    double a() const { return a_; }
    double b() const { return 1.0 - a_; }
    double theta() const { return theta_; }

    /// True when 0 < a < 1, i.e. the good and bad states span a plane.
    bool spans_plane() const { return a_ > 0.0 && a_ < 1.0; }

private:
    AlgorithmModel(double a, double theta) : a_(a), theta_(theta) {}

    double a_;
    double theta_;
};

/// Iterate phases: phi_zero multiplies the zero state, phi_good the good
/// states. Both held as principal values in (-pi, pi].
class PhasePair {
public:
    PhasePair(double phi_zero, double phi_good);

    static PhasePair grover() { return {kPi, kPi}; }

    double phi_zero() const { return phi_zero_; }
    double phi_good() const { return phi_good_; }

private:
    double phi_zero_;
    double phi_good_;
};

/// e^{iv} diag(1, e^{iu}) R(vartheta) diag(1, e^{-iu})
struct HDecomposition {
    double vartheta = 0.0;
    double u = 0.0;
    double v = 0.0;

    Unitary2 recompose() const;
};

/// Closed-form 2x2 matrix of the amplification iterate
///   Q = -A S_0(phi_zero) A^{-1} S_chi(phi_good)
/// in the (bad, good) coordinates of matrix2.hpp. With phi_zero =
/// phi_good = pi it reduces to the real rotation R(2 theta).
/// Throws Error(degenerate_subspace) when a is 0 or 1.
Unitary2 build_q_matrix(const AlgorithmModel& model, const PhasePair& phases);

/// |m00 - m11|
double diagonal_gap(const Matrix2& mat);
inline double diagonal_gap(const Unitary2& mat) { return diagonal_gap(mat.matrix()); }

/// Good-state phase making the iterate's diagonal entries equal:
///   tan(phi_good / 2) = tan(phi_zero / 2) (1 - 2a).
/// Result lies in (-pi, pi). Throws Error(excluded_phase) for phi_zero = pi.
double solve_phi_good(double phi_zero, const AlgorithmModel& model);

/// Inverse of solve_phi_good in a: a = (1 - tan(phi_good/2) / tan(phi_zero/2)) / 2.
/// The answer may fall outside [0, 1]. Throws Error(excluded_phase) when
/// phi_zero is 0 or pi, or phi_good is pi.
double solve_success_prob(const PhasePair& phases);

/// True when the pair makes the iterate's diagonal equal for this model:
/// either the tangent relation holds within tol, or the pair is the Grover
/// pair (pi, pi).
bool is_matched_pair(const PhasePair& phases, const AlgorithmModel& model, double tol = 1e-9);

/// vartheta in [0, pi/2] with sin(vartheta) = |sin(phi_zero/2) sin(2 theta)|.
/// Throws Error(degenerate_subspace) when a is 0 or 1.
double rotation_angle_from_phase(double phi_zero, const AlgorithmModel& model);

/// phi_zero = 2 asin(|sin(vartheta)| / sin(2 theta)) in [0, pi].
/// Throws Error(unreachable_rotation) when |sin(vartheta)| > sin(2 theta).
double phase_from_rotation_angle(double vartheta, const AlgorithmModel& model);

/// Splits an equal-diagonal unitary into (vartheta, u, v). vartheta lies in
/// [0, pi/2]; u is 0 whenever the matrix is diagonal.
/// Throws Error(not_equal_diagonal) when diagonal_gap exceeds 1e-9.
HDecomposition decompose_equal_diagonal(const Unitary2& mat);

}  // namespace ampamp
