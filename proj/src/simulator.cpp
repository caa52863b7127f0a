#include "ampamp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ampamp/error.hpp"

namespace ampamp::sim {

namespace {

void check_marked(const std::vector<std::size_t>& marked, std::size_t dim) {
    if (marked.empty()) throw Error(ErrorCode::invalid_marked_set, "marked set is empty");
    if (marked.size() >= dim) throw Error(ErrorCode::invalid_marked_set, "marked set must be a proper subset");
    if (marked.back() >= dim) {
        throw Error(ErrorCode::invalid_marked_set,
                    "marked index " + std::to_string(marked.back()) + " outside dimension " + std::to_string(dim));
    }
}

void dense_apply(const DenseMatrix& mat, std::span<Complex> amps, bool adjoint) {
    const std::size_t n = mat.dim;
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            acc += (adjoint ? std::conj(mat(c, r)) : mat(r, c)) * amps[c];
        }
        out[r] = acc;
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

Complex inner(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) acc += std::conj(lhs[i]) * rhs[i];
    return acc;
}

}  // namespace

SimConfig::SimConfig(unsigned n, std::vector<std::size_t> marked, std::optional<DenseMatrix> algorithm)
    : qubits_(n), marked_(std::move(marked)), algorithm_(std::move(algorithm)) {
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorCode::out_of_range, "qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
    check_marked(marked_, dimension());
    good_.assign(dimension(), 0);
    for (auto x : marked_) good_[x] = 1;
}

SimConfig SimConfig::walsh_hadamard(unsigned n, std::vector<std::size_t> marked) {
    return SimConfig(n, std::move(marked), std::nullopt);
}

SimConfig SimConfig::with_algorithm(unsigned n, std::vector<std::size_t> marked, DenseMatrix algorithm) {
    const std::size_t dim = std::size_t{1} << std::min(n, kMaxQubits);
    if (algorithm.dim != dim || algorithm.data.size() != dim * dim) {
        throw Error(ErrorCode::out_of_range, "algorithm matrix must be 2^n x 2^n");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) acc += std::conj(algorithm(k, i)) * algorithm(k, j);
            if (std::abs(acc - (i == j ? 1.0 : 0.0)) > 1e-10) {
                throw Error(ErrorCode::out_of_range, "algorithm matrix is not unitary");
            }
        }
    }
    return SimConfig(n, std::move(marked), std::move(algorithm));
}

void SimConfig::apply_algorithm(std::span<Complex> amps) const {
    if (algorithm_) {
        dense_apply(*algorithm_, amps, false);
    } else {
        sim::walsh_hadamard(amps);
    }
}

void SimConfig::apply_algorithm_inverse(std::span<Complex> amps) const {
    if (algorithm_) {
        dense_apply(*algorithm_, amps, true);
    } else {
        sim::walsh_hadamard(amps);  // self-inverse
    }
}

double SimConfig::success_probability() const { return good_probability(initial_state(*this), *this); }

StateVector StateVector::basis(std::size_t dim, std::size_t x) {
    StateVector s(dim);
    s[x] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& z : amps_) acc += std::norm(z);
    return std::sqrt(acc);
}

void walsh_hadamard(std::span<Complex> amps) {
    const double scale = 1.0 / std::sqrt(2.0);
    const std::size_t dim = amps.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
        for (std::size_t block = 0; block < dim; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const Complex x = amps[i];
                const Complex y = amps[i + half];
                amps[i] = (x + y) * scale;
                amps[i + half] = (x - y) * scale;
            }
        }
    }
}

void apply_oracle_phase(std::span<Complex> amps, const SimConfig& config, double phi_good) {
    const Complex phase = std::polar(1.0, phi_good);
    for (auto x : config.marked()) amps[x] *= phase;
}

void apply_zero_phase(std::span<Complex> amps, double phi_zero) { amps[0] *= std::polar(1.0, phi_zero); }

void apply_q(std::span<Complex> amps, const SimConfig& config, const PhasePair& phases) {
    apply_oracle_phase(amps, config, phases.phi_good());
    config.apply_algorithm_inverse(amps);
    apply_zero_phase(amps, phases.phi_zero());
    config.apply_algorithm(amps);
    for (auto& z : amps) z = -z;
}

StateVector initial_state(const SimConfig& config) {
    StateVector s = StateVector::basis(config.dimension(), 0);
    config.apply_algorithm(s.amplitudes());
    return s;
}

double good_probability(std::span<const Complex> amps, const SimConfig& config) {
    double p = 0.0;
    for (auto x : config.marked()) p += std::norm(amps[x]);
    return p;
}

PlaneBasis plane_basis(const SimConfig& config) {
    const StateVector psi = initial_state(config);
    StateVector good(psi.size());
    StateVector bad(psi.size());
    for (std::size_t x = 0; x < psi.size(); ++x) {
        (config.is_good(x) ? good : bad)[x] = psi[x];
    }
    const double good_norm = good.norm();
    const double bad_norm = bad.norm();
    if (good_norm < 1e-14 || bad_norm < 1e-14) {
        throw Error(ErrorCode::degenerate_subspace, "A|0> lies entirely in the good or the bad subspace");
    }
    for (auto& z : good.amplitudes()) z /= good_norm;
    for (auto& z : bad.amplitudes()) z /= bad_norm;
    return {std::move(bad), std::move(good)};
}

PlaneCoordinates plane_coordinates(const StateVector& state, const PlaneBasis& basis) {
    PlaneCoordinates out;
    out.coords[kBad] = inner(basis.bad.amplitudes(), state.amplitudes());
    out.coords[kGood] = inner(basis.good.amplitudes(), state.amplitudes());
    double residual = 0.0;
    for (std::size_t x = 0; x < state.size(); ++x) {
        const Complex r = state[x] - out.coords[kBad] * basis.bad[x] - out.coords[kGood] * basis.good[x];
        residual += std::norm(r);
    }
    out.leakage = std::sqrt(residual);
    return out;
}

RestrictedIterate restricted_matrix(const SimConfig& config, const PhasePair& phases) {
    const PlaneBasis basis = plane_basis(config);
    RestrictedIterate out;
    out.a = config.success_probability();
    const StateVector* columns[2] = {&basis.bad, &basis.good};
    for (std::size_t col = 0; col < 2; ++col) {
        StateVector image = *columns[col];
        apply_q(image, config, phases);
        const PlaneCoordinates pc = plane_coordinates(image, basis);
        out.matrix(kBad, col) = pc.coords[kBad];
        out.matrix(kGood, col) = pc.coords[kGood];
        out.leakage = std::max(out.leakage, pc.leakage);
    }
    return out;
}

std::vector<StepRecord> run_iterates(const SimConfig& config, const PhasePair& phases, unsigned steps) {
    std::vector<StepRecord> rows;
    rows.reserve(steps + 1);
    StateVector state = initial_state(config);
    for (unsigned step = 0;; ++step) {
        const double p_good = good_probability(state, config);
        double p_bad = 0.0;
        for (std::size_t x = 0; x < state.size(); ++x) {
            if (!config.is_good(x)) p_bad += std::norm(state[x]);
        }
        rows.push_back({step, std::clamp(p_good, 0.0, 1.0), std::atan2(std::sqrt(p_good), std::sqrt(p_bad))});
        if (step == steps) break;
        apply_q(state, config, phases);
    }
    return rows;
}

}  // namespace ampamp::sim
