#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "ampamp/bounds.hpp"
#include "ampamp/error.hpp"

using namespace ampamp;
using namespace ampamp::bounds;

namespace {

AlgorithmModel model(double a) { return AlgorithmModel::from_success_probability(a); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected ampamp::Error");
    return ErrorCode::contract_violation;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("names round-trip") {
    for (auto c : {Check::lemma1, Check::norm_chain, Check::theorem2, Check::theorem3}) {
        CHECK(parse_check(to_string(c)) == c);
    }
    CHECK(parse_check("norm") == Check::norm_chain);
    CHECK_FALSE(parse_check("lemma2").has_value());
    CHECK(std::string(to_string(Status::not_applicable)) == "not_applicable");
}

TEST_CASE("equal_angle_iterations") {
    CHECK(equal_angle_iterations(kPi / 2) == 1);
    CHECK(equal_angle_iterations(kPi / 3) == 1);
    CHECK(equal_angle_iterations(kPi / 4) == 2);
    CHECK(equal_angle_iterations(0.1) == 16);
}

TEST_CASE("lemma1 in the Grover limit") {
    const double a = std::ldexp(1.0, -10);
    const auto m = model(a);
    const auto r = check_lemma1(m, kPi);
    CHECK(r.m == equal_angle_iterations(2.0 * m.theta()));
    // Grover iterates put the good amplitude at sin((2k + 1) theta).
    CHECK(r.measured == doctest::Approx(std::abs(std::sin((2.0 * r.m + 1.0) * m.theta()))).epsilon(1e-12));
    CHECK(r.status == Status::satisfied);
}

TEST_CASE("lemma1 is vacuous once the bound drops below zero") {
    const auto r = check_lemma1(model(0.5), kPi / 2);
    CHECK(r.bound < 0.0);
    CHECK(r.status == Status::vacuous);
}

TEST_CASE("norm chain: operator norm identity against power iteration") {
    for (double a : {0.5, 0.1, 0.01, 1e-3}) {
        for (double phi : {kPi / 6, kPi / 2, 5 * kPi / 6}) {
            const auto m = model(a);
            const auto r = norm_chain(m, phi);
            const Matrix2 d = build_q_matrix(m, PhasePair(phi, phi)).matrix() -
                              build_q_matrix(m, PhasePair(phi, solve_phi_good(phi, m))).matrix();
            const oracle::cplx raw[2][2] = {{d.m[0][0], d.m[0][1]}, {d.m[1][0], d.m[1][1]}};
            CAPTURE(a);
            CAPTURE(phi);
            CHECK(std::abs(r.op_norm - oracle::spectral_norm_2x2(raw)) < 1e-12);
            CHECK(r.identity_ok());
            CHECK(r.all_ok());
        }
    }
}

TEST_CASE("norm chain with the matched phase is zero") {
    const auto m = model(0.01);
    const auto r = norm_chain(m, 1.0, solve_phi_good(1.0, m));
    CHECK(r.phase_gap == 0.0);
    CHECK(r.op_norm < 1e-15);
    CHECK(r.power_gap < 1e-15);
}

TEST_CASE("default grids") {
    for (auto c : {Check::lemma1, Check::norm_chain, Check::theorem2, Check::theorem3}) {
        const auto t = sweep(SweepSpec::default_grid(c));
        CAPTURE(to_string(c));
        CHECK(t.rows.size() == 50);
        CHECK(t.summary.rows == 50);
        CHECK(t.summary.violated == 0);
        CHECK(t.summary.satisfied + t.summary.vacuous + t.summary.not_applicable + t.summary.violated == 50);
    }
    // phi-major order
    const auto t = sweep(SweepSpec::default_grid(Check::lemma1));
    CHECK(t.rows[0].phi_zero == t.rows[9].phi_zero);
    CHECK(t.rows[0].a == 0.5);
    CHECK(t.rows[10].a == 0.5);
    CHECK(t.rows[10].phi_zero > t.rows[0].phi_zero);
    CHECK(sweep(SweepSpec::default_grid(Check::norm_chain)).summary.satisfied == 50);
}

TEST_CASE("theorem2 outside its domain is not applicable in a sweep") {
    SweepSpec spec = SweepSpec::default_grid(Check::theorem2);
    spec.a_values = {0.5};
    spec.phi_values = {kPi / 6};
    const auto t = sweep(spec);
    CHECK(t.rows[0].status == Status::not_applicable);
    CHECK(code_of([] { run_theorem2(model(0.5), kPi / 6); }) == ErrorCode::out_of_range);
}

TEST_CASE("theorem3 applicability") {
    const auto m = model(1e-3);
    const double phi = kPi / 2;
    const double matched = solve_phi_good(phi, m);
    const double dmax = theorem3_delta_max(m, phi, 0.1);
    CHECK(dmax == doctest::Approx(0.1 * std::sqrt(3.0) / (2 * kPi * kPi * (std::sqrt(3.0) + kPi)) * phi * std::sqrt(1e-3)));

    const auto inside = run_theorem3(m, phi, matched + 0.5 * dmax, 0.1);
    CHECK(inside.status == Status::satisfied);
    CHECK(inside.measured <= inside.bound);

    const auto outside = run_theorem3(m, phi, matched + 2.0 * dmax, 0.1);
    CHECK(outside.status == Status::not_applicable);
    CHECK(outside.delta > outside.delta_max);

    const auto equal = run_theorem3(m, phi, phi, 0.1);
    CHECK(equal.status == Status::not_applicable);

    SweepSpec spec = SweepSpec::default_grid(Check::theorem3);
    spec.mode = GoodPhaseMode::matched;
    const auto t = sweep(spec);
    CHECK(t.summary.violated == 0);
    CHECK(t.summary.not_applicable == 0);
}

TEST_CASE("remeasuring on the statevector agrees") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto config = sim::SimConfig::walsh_hadamard(n, {n % 2});
        const auto m = config.model();
        CAPTURE(n);
        for (double phi : {kPi / 4, 2 * kPi / 3}) {
            const auto l = check_lemma1(m, phi);
            CHECK(std::abs(remeasure_with_simulator(l, config) - l.measured) < 1e-10);
            const auto nc = norm_chain(m, phi).as_row();
            CHECK(std::abs(remeasure_with_simulator(nc, config) - nc.measured) < 1e-10);
            const auto t3 = run_theorem3(m, phi, phi, 0.1);
            CHECK(std::abs(remeasure_with_simulator(t3, config) - t3.measured) < 1e-10);
            if (phi >= m.theta()) {
                const auto t2 = run_theorem2(m, phi);
                CHECK(std::abs(remeasure_with_simulator(t2, config) - t2.measured) < 1e-10);
            }
        }
    }
    const auto config = sim::SimConfig::walsh_hadamard(3, {1});
    CHECK(code_of([&] { remeasure_with_simulator(check_lemma1(model(0.3), 1.0), config); }) == ErrorCode::model_mismatch);
}

TEST_CASE("errors") {
    SweepSpec empty;
    CHECK(code_of([&] { sweep(empty); }) == ErrorCode::empty_grid);
    CHECK(code_of([] { check_lemma1(model(0.3), 0.0); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { check_lemma1(model(0.0), 1.0); }) == ErrorCode::degenerate_subspace);
    CHECK(code_of([] { run_theorem3(model(0.3), 1.0, 1.0, 0.0); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { run_theorem3(model(0.3), kPi, 1.0, 0.1); }) == ErrorCode::out_of_range);
}

}

TEST_SUITE("bounds") {

TEST_CASE("small a gives non-vacuous evidence") {
    const std::vector<double> small = {std::ldexp(1.0, -16), std::ldexp(1.0, -20), 1e-8};
    for (auto c : {Check::lemma1, Check::theorem2}) {
        SweepSpec spec = SweepSpec::default_grid(c);
        spec.a_values = small;
        const auto t = sweep(spec);
        CAPTURE(to_string(c));
        CHECK(t.summary.violated == 0);
        CHECK(t.summary.satisfied == 15);
    }
    // Equal angles meet the theorem3 proviso only for very small a.
    SweepSpec spec = SweepSpec::default_grid(Check::theorem3);
    spec.a_values = {1e-7, 1e-8};
    const auto t = sweep(spec);
    CHECK(t.summary.violated == 0);
    CHECK(t.summary.satisfied == 10);
}

}
