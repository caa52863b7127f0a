#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "ampamp/core.hpp"
#include "ampamp/error.hpp"

using namespace ampamp;

namespace {

// Frozen from oracle::matched_phase_by_search(0.25, pi/2) and confirmed by
// 2 atan(tan(pi/4) / 2) evaluated independently.
constexpr double kMatchedQuarter = 0.9272952180016122;
// asin(sin(pi/4) sin(pi/3)), the rotation per iterate at (pi/2, a = 1/4).
constexpr double kStepQuarter = 0.6590580358264089;

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

TEST_SUITE("core") {

TEST_CASE("oracle agrees with the frozen matched phase") {
    CHECK(oracle::matched_phase_by_search(0.25, oracle::pi / 2) == doctest::Approx(kMatchedQuarter).epsilon(1e-10));
}

TEST_CASE("AlgorithmModel keeps sin^2(theta) = a") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = u(rng);
        const auto m = model(a);
        CHECK(std::abs(std::pow(std::sin(m.theta()), 2) - a) < 1e-12);
        const auto back = AlgorithmModel::from_angle(m.theta());
        CHECK(std::abs(back.a() - a) < 1e-12);
    }
    CHECK(model(0.0).theta() == 0.0);
    CHECK(model(1.0).theta() == doctest::Approx(kPi / 2));
    CHECK(code_of([] { model(-0.1); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { model(1.5); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { AlgorithmModel::from_angle(2.0); }) == ErrorCode::out_of_range);
}

TEST_CASE("PhasePair stores principal values") {
    const PhasePair p(3.0 * kPi / 2.0, -kPi);
    CHECK(p.phi_zero() == doctest::Approx(-kPi / 2.0));
    CHECK(p.phi_good() == kPi);
}

TEST_CASE("build_q_matrix: Grover pair is the rotation by 2 theta") {
    for (double a : {0.01, 0.1, 0.25, 0.5, 0.7, 0.99}) {
        CAPTURE(a);
        const auto m = model(a);
        const Unitary2 q = build_q_matrix(m, PhasePair::grover());
        CHECK(max_abs_diff(q.matrix(), rotation_matrix(2.0 * m.theta())) < 1e-12);
        for (const auto& row : q.matrix().m) {
            for (const auto& z : row) CHECK(std::abs(z.imag()) < 1e-14);
        }
    }
}

TEST_CASE("build_q_matrix: zero phases give -I") {
    const Unitary2 q = build_q_matrix(model(0.5), PhasePair(0.0, 0.0));
    CHECK(max_abs_diff(q.matrix(), Complex(-1.0) * Matrix2::identity()) < 1e-15);
}

TEST_CASE("build_q_matrix matches the entry formulas and rejects a flat subspace") {
    const double a = 0.25;
    const double phi = kPi / 2;
    const Unitary2 q = build_q_matrix(model(a), PhasePair(phi, kMatchedQuarter));
    CHECK(std::abs(q(kBad, kBad) - oracle::diag_bad(a, phi)) < 1e-15);
    CHECK(std::abs(q(kGood, kGood) - oracle::diag_good(a, phi, kMatchedQuarter)) < 1e-15);
    CHECK(std::abs(q(kGood, kBad) - oracle::lower_left(a, phi)) < 1e-15);
    CHECK(diagonal_gap(q) < 1e-10);

    CHECK(code_of([] { build_q_matrix(model(0.0), PhasePair::grover()); }) == ErrorCode::degenerate_subspace);
    CHECK(code_of([] { build_q_matrix(model(1.0), PhasePair::grover()); }) == ErrorCode::degenerate_subspace);
}

TEST_CASE("diagonal_gap examples") {
    CHECK(diagonal_gap(build_q_matrix(model(0.3), PhasePair::grover())) < 1e-15);
    const double unmatched = diagonal_gap(build_q_matrix(model(0.25), PhasePair(kPi / 2, kPi / 2)));
    CHECK(unmatched > 1e-3);
    CHECK(unmatched == doctest::Approx(std::abs(oracle::diag_bad(0.25, kPi / 2) - oracle::diag_good(0.25, kPi / 2, kPi / 2))));
    CHECK(diagonal_gap(build_q_matrix(model(0.25), PhasePair(kPi / 2, kMatchedQuarter))) < 1e-10);
}

TEST_CASE("solve_phi_good examples") {
    for (double phi : {-2.0, -0.3, 0.4, 1.0, 2.9}) {
        CAPTURE(phi);
        CHECK(std::abs(solve_phi_good(phi, model(0.5))) < 1e-15);
        CHECK(solve_phi_good(phi, model(0.0)) == doctest::Approx(phi).epsilon(1e-15));
    }
    CHECK(solve_phi_good(kPi / 2, model(0.25)) == doctest::Approx(kMatchedQuarter).epsilon(1e-12));
    CHECK(code_of([] { solve_phi_good(kPi, model(0.25)); }) == ErrorCode::excluded_phase);
    CHECK(code_of([] { solve_phi_good(-kPi, model(0.25)); }) == ErrorCode::excluded_phase);
    CHECK(code_of([] { solve_phi_good(3.0 * kPi, model(0.25)); }) == ErrorCode::excluded_phase);
}

TEST_CASE("solve_phi_good agrees with the search oracle") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(0.001, 0.999);
    std::uniform_real_distribution<double> up(-kPi + 0.05, kPi - 0.05);
    for (int i = 0; i < 25; ++i) {
        const double a = ua(rng);
        const double phi = up(rng);
        CAPTURE(a);
        CAPTURE(phi);
        CHECK(std::abs(normalize_angle(solve_phi_good(phi, model(a)) - oracle::matched_phase_by_search(a, phi))) < 1e-9);
    }
}

TEST_CASE("solve_success_prob examples") {
    CHECK(std::abs(solve_success_prob(PhasePair(1.1, 1.1))) < 1e-15);
    CHECK(solve_success_prob(PhasePair(1.1, 0.0)) == 0.5);
    CHECK(solve_success_prob(PhasePair(kPi / 2, kMatchedQuarter)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(code_of([] { solve_success_prob(PhasePair(0.0, 0.3)); }) == ErrorCode::excluded_phase);
    CHECK(code_of([] { solve_success_prob(PhasePair(kPi, 0.3)); }) == ErrorCode::excluded_phase);
    CHECK(code_of([] { solve_success_prob(PhasePair(0.5, kPi)); }) == ErrorCode::excluded_phase);
}

TEST_CASE("is_matched_pair accepts the Grover pair") {
    CHECK(is_matched_pair(PhasePair::grover(), model(0.3)));
    CHECK(is_matched_pair(PhasePair(kPi / 2, kMatchedQuarter), model(0.25)));
    CHECK_FALSE(is_matched_pair(PhasePair(kPi / 2, kPi / 2), model(0.25)));
    CHECK_FALSE(is_matched_pair(PhasePair(kPi, 1.0), model(0.25)));
    // At a = 1/2 with phi = pi both diagonal entries vanish for every phi_good.
    CHECK(is_matched_pair(PhasePair(kPi, 1.0), model(0.5)));
}

TEST_CASE("rotation_angle_from_phase examples") {
    for (double a : {0.01, 0.1, 0.25, 0.5}) {
        const auto m = model(a);
        CHECK(rotation_angle_from_phase(kPi, m) == doctest::Approx(2.0 * m.theta()).epsilon(1e-12));
        CHECK(rotation_angle_from_phase(0.0, m) == 0.0);
    }
    CHECK(rotation_angle_from_phase(kPi / 2, model(0.25)) == doctest::Approx(kStepQuarter).epsilon(1e-12));
    // Oracle: asin |lower-left entry| of the matched iterate.
    CHECK(std::asin(std::abs(oracle::lower_left(0.25, kPi / 2))) == doctest::Approx(kStepQuarter).epsilon(1e-12));
    CHECK(code_of([] { rotation_angle_from_phase(1.0, model(1.0)); }) == ErrorCode::degenerate_subspace);
}

TEST_CASE("phase_from_rotation_angle examples") {
    const auto m = model(0.1);
    CHECK(phase_from_rotation_angle(2.0 * m.theta(), m) == doctest::Approx(kPi).epsilon(1e-7));
    CHECK(phase_from_rotation_angle(0.0, m) == 0.0);
    CHECK(std::abs(phase_from_rotation_angle(kStepQuarter, model(0.25)) - kPi / 2) < 1e-9);
    CHECK(code_of([&] { phase_from_rotation_angle(2.0 * m.theta() + 0.01, m); }) == ErrorCode::unreachable_rotation);
}

TEST_CASE("decompose_equal_diagonal examples") {
    const auto m = model(0.2);
    const HDecomposition grover = decompose_equal_diagonal(build_q_matrix(m, PhasePair::grover()));
    CHECK(grover.vartheta == doctest::Approx(2.0 * m.theta()).epsilon(1e-12));
    CHECK(std::abs(grover.u) < 1e-12);
    CHECK(std::abs(grover.v) < 1e-12);

    const HDecomposition minus = decompose_equal_diagonal(build_q_matrix(model(0.5), PhasePair(0.0, 0.0)));
    CHECK(minus.vartheta == 0.0);
    CHECK(minus.u == 0.0);
    CHECK(minus.v == doctest::Approx(kPi).epsilon(1e-15));

    const Unitary2 matched = build_q_matrix(model(0.25), PhasePair(kPi / 2, kMatchedQuarter));
    const HDecomposition h = decompose_equal_diagonal(matched);
    CHECK(max_abs_diff(h.recompose().matrix(), matched.matrix()) < 1e-10);
    CHECK(h.vartheta == doctest::Approx(kStepQuarter).epsilon(1e-12));

    // vartheta = pi/2 exactly: a = 1/2 with the Grover pair.
    const Unitary2 quarter_turn = build_q_matrix(model(0.5), PhasePair::grover());
    CHECK(max_abs_diff(decompose_equal_diagonal(quarter_turn).recompose().matrix(), quarter_turn.matrix()) < 1e-12);

    CHECK(code_of([] { decompose_equal_diagonal(build_q_matrix(model(0.25), PhasePair(kPi / 2, kPi / 2))); }) ==
          ErrorCode::not_equal_diagonal);
}

TEST_CASE("property: unitarity over random models and phases") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ua(1e-6, 1.0 - 1e-6);
    std::uniform_real_distribution<double> up(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const Unitary2 q = build_q_matrix(model(ua(rng)), PhasePair(up(rng), up(rng)));
        REQUIRE(unitarity_error(q.matrix()) < 1e-12);
    }
}

TEST_CASE("property: equal diagonal iff the tangent relation holds") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ua(0.001, 0.999);
    std::uniform_real_distribution<double> up(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> uq(-kPi + 1e-3, kPi - 1e-3);
    std::bernoulli_distribution matched(0.5);
    int agreements = 0;
    for (int i = 0; i < 2000; ++i) {
        const double a = ua(rng);
        const double phi = (matched(rng) ? 1.0 : -1.0) * up(rng);
        const double varphi = matched(rng) ? solve_phi_good(phi, model(a)) : uq(rng);
        const bool equal_diag = diagonal_gap(build_q_matrix(model(a), PhasePair(phi, varphi))) < 1e-10;
        const bool relation = std::abs(std::tan(varphi / 2) - std::tan(phi / 2) * (1 - 2 * a)) < 1e-9;
        CHECK(equal_diag == relation);
        agreements += equal_diag == relation;
    }
    CHECK(agreements == 2000);
}

TEST_CASE("property: round trips") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.001, 0.999);
    std::uniform_real_distribution<double> up(-kPi + 0.01, kPi - 0.01);
    std::uniform_real_distribution<double> upos(0.01, kPi - 0.01);
    for (int i = 0; i < 1000; ++i) {
        const auto m = model(ua(rng));
        const double phi = up(rng);
        if (std::abs(phi) > 1e-3) {
            const double back = solve_success_prob(PhasePair(phi, solve_phi_good(phi, m)));
            CHECK(std::abs(back - m.a()) < 1e-12);
        }
        const double p = upos(rng);
        CHECK(std::abs(phase_from_rotation_angle(rotation_angle_from_phase(p, m), m) - p) < 1e-9);
    }
}

TEST_CASE("property: decomposition recomposes matched iterates") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ua(0.001, 0.999);
    std::uniform_real_distribution<double> up(-kPi + 1e-3, kPi - 1e-3);
    for (int i = 0; i < 1000; ++i) {
        const auto m = model(ua(rng));
        const double phi = up(rng);
        const Unitary2 q = build_q_matrix(m, PhasePair(phi, solve_phi_good(phi, m)));
        const HDecomposition h = decompose_equal_diagonal(q);
        CHECK(max_abs_diff(h.recompose().matrix(), q.matrix()) < 1e-10);
        CHECK(std::abs(h.vartheta - rotation_angle_from_phase(phi, m)) < 1e-9);
        CHECK(h.u > -kPi);
        CHECK(h.u <= kPi);
        CHECK(h.v > -kPi);
        CHECK(h.v <= kPi);
    }
}

}
