#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ampamp/core.hpp"

namespace ampamp::sim {

inline constexpr unsigned kMaxQubits = 20;

/// Row-major square complex matrix used for caller-supplied algorithms.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

/// Dimension, marked set and the base algorithm A. A defaults to the
/// Walsh-Hadamard transform on n qubits.
class SimConfig {
public:
    /// Throws Error(out_of_range) for n outside [1, kMaxQubits] and
    /// Error(invalid_marked_set) unless marked is a nonempty proper subset of
    /// {0, ..., 2^n - 1}. Duplicates are dropped.
    static SimConfig walsh_hadamard(unsigned n, std::vector<std::size_t> marked);

    /// Same checks, plus Error(out_of_range) if algorithm is not a 2^n x 2^n
    /// unitary within 1e-10.
    static SimConfig with_algorithm(unsigned n, std::vector<std::size_t> marked, DenseMatrix algorithm);

    unsigned qubits() const { return qubits_; }
    std::size_t dimension() const { return std::size_t{1} << qubits_; }
    const std::vector<std::size_t>& marked() const { return marked_; }
    bool is_good(std::size_t x) const { return good_[x] != 0; }
    bool uses_walsh_hadamard() const { return !algorithm_.has_value(); }

    void apply_algorithm(std::span<Complex> amps) const;
    void apply_algorithm_inverse(std::span<Complex> amps) const;

    /// a = |P_good A|0>|^2
    double success_probability() const;
    AlgorithmModel model() const { return AlgorithmModel::from_success_probability(success_probability()); }

private:
    SimConfig(unsigned n, std::vector<std::size_t> marked, std::optional<DenseMatrix> algorithm);

    unsigned qubits_;
    std::vector<std::size_t> marked_;
    std::vector<unsigned char> good_;
    std::optional<DenseMatrix> algorithm_;
};

class StateVector {
public:
    explicit StateVector(std::size_t dim) : amps_(dim) {}
    explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

    /// |x> for basis label x.
    static StateVector basis(std::size_t dim, std::size_t x);

    std::size_t size() const { return amps_.size(); }
    Complex& operator[](std::size_t i) { return amps_[i]; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;

private:
    std::vector<Complex> amps_;
};

/// In-place Walsh-Hadamard transform as log2(N) butterfly passes.
void walsh_hadamard(std::span<Complex> amps);

// The operators below act in place. The span forms let callers apply them to
// one register slice of a larger state.

/// S_chi(phi_good): marked amplitudes times e^{i phi_good}.
void apply_oracle_phase(std::span<Complex> amps, const SimConfig& config, double phi_good);
inline void apply_oracle_phase(StateVector& s, const SimConfig& c, double phi) { apply_oracle_phase(s.amplitudes(), c, phi); }

/// S_0(phi_zero): amplitude of |0> times e^{i phi_zero}.
void apply_zero_phase(std::span<Complex> amps, double phi_zero);
inline void apply_zero_phase(StateVector& s, double phi) { apply_zero_phase(s.amplitudes(), phi); }

/// Q = -A S_0(phi_zero) A^{-1} S_chi(phi_good), applied right to left.
void apply_q(std::span<Complex> amps, const SimConfig& config, const PhasePair& phases);
inline void apply_q(StateVector& s, const SimConfig& c, const PhasePair& p) { apply_q(s.amplitudes(), c, p); }

/// A|0>
StateVector initial_state(const SimConfig& config);

/// Sum of |amp|^2 over marked indices.
double good_probability(std::span<const Complex> amps, const SimConfig& config);
inline double good_probability(const StateVector& s, const SimConfig& c) { return good_probability(s.amplitudes(), c); }

/// Normalized bad and good components of A|0>. Throws
/// Error(degenerate_subspace) when either component vanishes.
struct PlaneBasis {
    StateVector bad;
    StateVector good;
};
PlaneBasis plane_basis(const SimConfig& config);

/// Coordinates of a state in the plane basis plus the norm of what is left
/// outside the plane.
struct PlaneCoordinates {
    Vec2 coords{};
    double leakage = 0.0;
};
PlaneCoordinates plane_coordinates(const StateVector& state, const PlaneBasis& basis);

/// 2x2 matrix of Q on span{bad, good}, obtained by applying Q to each basis
/// vector and projecting back.
struct RestrictedIterate {
    Matrix2 matrix;
    double leakage = 0.0;
    double a = 0.0;
};
RestrictedIterate restricted_matrix(const SimConfig& config, const PhasePair& phases);

/// One row of a simulate run.
struct StepRecord {
    unsigned step = 0;
    double p_good = 0.0;
    double angle_estimate = 0.0;  // atan2(sqrt(p_good), sqrt(p_bad)), in [0, pi/2]
};

/// Starts from A|0> and applies Q `steps` times; row 0 is the initial state.
std::vector<StepRecord> run_iterates(const SimConfig& config, const PhasePair& phases, unsigned steps);

}  // namespace ampamp::sim
