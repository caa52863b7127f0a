#include "ampamp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampamp/error.hpp"

namespace ampamp {

namespace {

// Snaps (pi/2 - theta) / vartheta to an integer when it is one up to
// rounding, so exact cases such as one Grover step at a = 1/4 stay exact.
constexpr double kCeilSlack = 1e-10;

class RegisterState {
public:
    explicit RegisterState(std::size_t dim) : dim_(dim), amps_(dim * dim * 2) {}

    std::size_t index(std::size_t x1, std::size_t x2, std::size_t x3) const { return (x1 * dim_ + x2) * 2 + x3; }
    Complex& at(std::size_t x1, std::size_t x2, std::size_t x3) { return amps_[index(x1, x2, x3)]; }
    const Complex& at(std::size_t x1, std::size_t x2, std::size_t x3) const { return amps_[index(x1, x2, x3)]; }

    double norm() const {
        double acc = 0.0;
        for (const auto& z : amps_) acc += std::norm(z);
        return std::sqrt(acc);
    }

    // Runs op on register 1 for every fixed (x2, x3).
    template <typename Op>
    void on_first_register(Op&& op) {
        std::vector<Complex> slice(dim_);
        for (std::size_t x2 = 0; x2 < dim_; ++x2) {
            for (std::size_t x3 = 0; x3 < 2; ++x3) {
                bool touched = false;
                for (std::size_t x1 = 0; x1 < dim_; ++x1) {
                    slice[x1] = at(x1, x2, x3);
                    touched = touched || slice[x1] != Complex(0.0);
                }
                if (!touched) continue;
                op(std::span<Complex>(slice));
                for (std::size_t x1 = 0; x1 < dim_; ++x1) at(x1, x2, x3) = slice[x1];
            }
        }
    }

    void swap_first_two_if_flag() {
        for (std::size_t x1 = 0; x1 < dim_; ++x1) {
            for (std::size_t x2 = x1 + 1; x2 < dim_; ++x2) std::swap(at(x1, x2, 1), at(x2, x1, 1));
        }
    }

    double branch_weight(std::size_t x3) const {
        double acc = 0.0;
        for (std::size_t x1 = 0; x1 < dim_; ++x1) {
            for (std::size_t x2 = 0; x2 < dim_; ++x2) acc += std::norm(at(x1, x2, x3));
        }
        return acc;
    }

    double good_weight(const sim::SimConfig& config, int only_x3) const {
        double acc = 0.0;
        for (auto x1 : config.marked()) {
            for (std::size_t x2 = 0; x2 < dim_; ++x2) {
                for (std::size_t x3 = 0; x3 < 2; ++x3) {
                    if (only_x3 < 0 || static_cast<std::size_t>(only_x3) == x3) acc += std::norm(at(x1, x2, x3));
                }
            }
        }
        return acc;
    }

    // Tr(rho^2) for rho = Tr_{2,3} |state><state|.
    double first_register_purity() const {
        const std::size_t cols = dim_ * 2;
        double acc = 0.0;
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < dim_; ++i) {
            const auto first = amps_.begin() + static_cast<std::ptrdiff_t>(i * cols);
            if (std::any_of(first, first + static_cast<std::ptrdiff_t>(cols), [](Complex z) { return z != Complex(0.0); })) {
                rows.push_back(i);
            }
        }
        for (auto i : rows) {
            for (auto j : rows) {
                Complex rho = 0.0;
                const Complex* ri = &amps_[i * cols];
                const Complex* rj = &amps_[j * cols];
                for (std::size_t k = 0; k < cols; ++k) rho += ri[k] * std::conj(rj[k]);
                acc += std::norm(rho);
            }
        }
        return acc;
    }

private:
    std::size_t dim_;
    std::vector<Complex> amps_;
};

}  // namespace

ExactSchedule schedule_exact(double phi_zero, const AlgorithmModel& model) {
    if (!model.spans_plane()) {
        throw Error(ErrorCode::degenerate_subspace, "exact search needs 0 < a < 1");
    }
    const double phi = normalize_angle(phi_zero);
    if (std::abs(phi) < 1e-14) {
        throw Error(ErrorCode::trivial_angles, "phi_zero = 0 gives the pair (0, 0); iterates do not rotate");
    }

    ExactSchedule out;
    out.a = model.a();
    const bool grover = std::abs(phi) >= kPi - 1e-14;
    out.phases = grover ? PhasePair::grover() : PhasePair(phi, solve_phi_good(phi, model));
    out.vartheta = rotation_angle_from_phase(phi, model);

    const double span = kPi / 2.0 - model.theta();
    out.m = static_cast<unsigned>(std::max(0.0, std::ceil(span / out.vartheta - kCeilSlack)));
    out.theta_init = kPi / 2.0 - out.m * out.vartheta;

    const HDecomposition h = decompose_equal_diagonal(build_q_matrix(model, out.phases));
    if (std::abs(h.vartheta - out.vartheta) > 1e-9) {
        throw Error(ErrorCode::contract_violation, "decomposed rotation angle disagrees with the phase relation");
    }
    out.u = h.u;
    out.v = h.v;
    return out;
}

Vec2 prepare_init_subspace(const ExactSchedule& schedule) {
    Vec2 s;
    s[kBad] = std::cos(schedule.theta_init);
    s[kGood] = std::polar(std::sin(schedule.theta_init), schedule.u);
    return s;
}

Vec2 prepare_uncorrected_subspace(const ExactSchedule& schedule) {
    return {Complex(std::cos(schedule.theta_init)), Complex(std::sin(schedule.theta_init))};
}

namespace {

double land_probability(const ExactSchedule& schedule, const AlgorithmModel& model, const Vec2& start) {
    if (std::abs(schedule.a - model.a()) > 1e-12) {
        throw Error(ErrorCode::model_mismatch, "schedule was built for a = " + std::to_string(schedule.a));
    }
    const Vec2 out = build_q_matrix(model, schedule.phases).power(schedule.m) * start;
    return std::norm(out[kGood]);
}

}  // namespace

double run_exact_subspace(const ExactSchedule& schedule, const AlgorithmModel& model) {
    return land_probability(schedule, model, prepare_init_subspace(schedule));
}

double run_uncorrected_subspace(const ExactSchedule& schedule, const AlgorithmModel& model) {
    return land_probability(schedule, model, prepare_uncorrected_subspace(schedule));
}

RegisterReport simulate_exact_registers(const sim::SimConfig& config, const ExactSchedule& schedule) {
    if (config.qubits() > kMaxRegisterQubits) {
        throw Error(ErrorCode::dimension_limit,
                    "register simulation supports at most " + std::to_string(kMaxRegisterQubits) + " qubits");
    }
    const AlgorithmModel model = config.model();
    if (std::abs(schedule.a - model.a()) > 1e-12) {
        throw Error(ErrorCode::model_mismatch, "schedule was built for a = " + std::to_string(schedule.a) +
                                                   ", configuration has a = " + std::to_string(model.a()));
    }
    const std::size_t dim = config.dimension();
    const sim::PlaneBasis basis = sim::plane_basis(config);
    const Unitary2 q = build_q_matrix(model, schedule.phases);

    RegisterReport report;
    RegisterState state(dim);
    auto track_norm = [&] { report.max_norm_drift = std::max(report.max_norm_drift, std::abs(state.norm() - 1.0)); };

    state.at(0, 0, 0) = 1.0;
    state.on_first_register([&](std::span<Complex> amps) { config.apply_algorithm(amps); });
    track_norm();

    // |Psi>|0>|0>  ->  alpha |Psi_init>|0>|0> + beta |0>|Psi_1>|1>
    const double t = schedule.theta_init;
    report.alpha = std::cos(model.theta()) / std::cos(t);
    report.beta = std::sqrt(std::max(0.0, 1.0 - report.alpha * report.alpha));
    const Complex good_coef = std::polar(std::sin(t), schedule.u);
    for (std::size_t x = 0; x < dim; ++x) {
        state.at(x, 0, 0) = report.alpha * (good_coef * basis.good[x] + std::cos(t) * basis.bad[x]);
        state.at(0, x, 1) = report.beta * basis.good[x];
    }
    track_norm();

    const double branch0 = state.branch_weight(0);
    Vec2 predicted = prepare_init_subspace(schedule);
    auto record = [&] {
        report.branch_p_good.push_back(state.good_weight(config, 0) / branch0);
        report.predicted_p_good.push_back(std::norm(predicted[kGood]));
    };
    record();
    for (unsigned step = 0; step < schedule.m; ++step) {
        state.on_first_register([&](std::span<Complex> amps) { sim::apply_q(amps, config, schedule.phases); });
        predicted = q * predicted;
        track_norm();
        record();
    }

    state.swap_first_two_if_flag();
    track_norm();
    report.p_good = state.good_weight(config, -1);
    report.purity = state.first_register_purity();
    return report;
}

double run_exact_registers(const sim::SimConfig& config, const ExactSchedule& schedule) {
    return simulate_exact_registers(config, schedule).p_good;
}

}  // namespace ampamp
