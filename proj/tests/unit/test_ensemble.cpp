#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "helpers.hpp"
#include "qsb/ensemble.hpp"

using namespace qsb;
using qsb_test::abs_diff;
using qsb_test::max_component_diff;

TEST_CASE("a fresh ensemble has zero spread and an unqueried reference") {
    Ensemble e = init_ensemble(4);
    CHECK(e.dim() == 4);
    CHECK(e.queries_applied() == 0);
    CHECK(spread(e) == 0.0);
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(e.trajectory(a) == e.reference());
        CHECK(deviation(e, a) == 0.0);
    }
    CHECK_THROWS_AS(e.trajectory(4), std::invalid_argument);
    CHECK_THROWS_AS(init_ensemble(0), std::invalid_argument);
}

TEST_CASE("one query from the uniform state deviates every trajectory by 4/N") {
    for (std::size_t n : {2u, 4u, 16u}) {
        Ensemble e = step(init_ensemble(n), Stage{Identity{}, true});
        CHECK(e.queries_applied() == 1);
        CHECK(e.reference() == uniform_state(n));  // reference is never queried
        for (std::size_t a = 0; a < n; ++a)
            CHECK(abs_diff(deviation(e, a), 4.0 / static_cast<double>(n)) <= 1e-12);
        CHECK(abs_diff(spread(e), 4.0) <= 1e-12);
    }

    SUBCASE("a partial phase deviates by (2 - 2 cos phase)/N instead") {
        Stage s{Identity{}, true, std::numbers::pi / 2.0};
        Ensemble e = step(init_ensemble(4), s);
        for (std::size_t a = 0; a < 4; ++a) CHECK(abs_diff(deviation(e, a), 0.5) <= 1e-12);
        CHECK(abs_diff(spread(e), 2.0) <= 1e-12);
    }
}

TEST_CASE("a common unitary changes no deviation and no spread") {
    Ensemble e = step(init_ensemble(8), Stage{Identity{}, true});
    double before_spread = spread(e);
    std::vector<double> before_dev;
    for (std::size_t a = 0; a < 8; ++a) before_dev.push_back(deviation(e, a));

    for (std::uint64_t seed : {21, 22, 23}) {
        Ensemble rotated = step(e, Stage{haar_unitary(8, seed), false});
        CHECK(abs_diff(spread(rotated), before_spread) <= 1e-12);
        for (std::size_t a = 0; a < 8; ++a)
            CHECK(abs_diff(deviation(rotated, a), before_dev[a]) <= 1e-12);
    }
}

TEST_CASE("diffusion inverts about the mean") {
    // The uniform state is a fixed point.
    StateVector u = uniform_state(8);
    CHECK(max_component_diff(apply_stage_unitary(Diffusion{}, u), u) <= 1e-15);

    // Hand value on a basis state: mean 1/4, so 2*mean - v.
    StateVector d = apply_stage_unitary(Diffusion{}, basis_state(4, 0));
    CHECK(abs_diff(d[0].real(), -0.5) <= 1e-15);
    for (std::size_t i = 1; i < 4; ++i) CHECK(abs_diff(d[i].real(), 0.5) <= 1e-15);

    SUBCASE("agrees with the dense reflection matrix") {
        std::size_t n = 6;
        std::vector<Amplitude> m(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m[r * n + c] = Amplitude(2.0 / static_cast<double>(n) - (r == c ? 1.0 : 0.0), 0.0);
        DenseUnitary dense(n, std::move(m));
        StateVector v = haar_state(n, 99);
        CHECK(max_component_diff(apply_stage_unitary(Diffusion{}, v), apply_unitary(dense, v)) <=
              1e-12);
    }
}

TEST_CASE("phased diffusion interpolates between identity and diffusion") {
    StateVector v = haar_state(5, 17);

    // Phase 0 leaves every state alone.
    CHECK(max_component_diff(apply_stage_unitary(PhasedDiffusion{0.0}, v), v) <= 1e-12);

    // Phase pi is diffusion up to a global sign.
    StateVector p = apply_stage_unitary(PhasedDiffusion{std::numbers::pi}, v);
    StateVector d = apply_stage_unitary(Diffusion{}, v);
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::abs(p[i] + d[i]));
    CHECK(worst <= 1e-12);

    SUBCASE("the uniform state is an eigenvector with eigenvalue e^{i*phase}") {
        double phase = 1.1;
        StateVector out = apply_stage_unitary(PhasedDiffusion{phase}, uniform_state(9));
        Amplitude expected = std::polar(1.0, phase) / 3.0;
        for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(out[i] - expected) <= 1e-12);
    }

    SUBCASE("agrees with the dense rank-one update matrix") {
        double phase = 2.3;
        std::size_t n = 5;
        Amplitude f = 1.0 - std::polar(1.0, phase);
        std::vector<Amplitude> m(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m[r * n + c] = (r == c ? Amplitude(1.0, 0.0) : Amplitude(0.0, 0.0)) -
                               f / static_cast<double>(n);
        DenseUnitary dense(n, std::move(m));
        CHECK(max_component_diff(apply_stage_unitary(PhasedDiffusion{phase}, v),
                                 apply_unitary(dense, v)) <= 1e-12);
    }
}

TEST_CASE("spread maps to an angle through arccos(1 - spread/(2N))") {
    CHECK(theta_of_spread(0.0, 4) == 0.0);
    CHECK(abs_diff(theta_of_spread(8.0, 4), std::numbers::pi / 2.0) <= 1e-15);
    CHECK(abs_diff(theta_of_spread(16.0, 4), std::numbers::pi) <= 1e-15);

    // Round-off slack just outside the mathematical range is clamped.
    CHECK(theta_of_spread(-1e-10, 4) == 0.0);
    CHECK(abs_diff(theta_of_spread(16.0 + 1e-10, 4), std::numbers::pi) <= 1e-15);

    CHECK_THROWS_AS(theta_of_spread(-1e-3, 4), std::domain_error);
    CHECK_THROWS_AS(theta_of_spread(16.1, 4), std::domain_error);
    CHECK_THROWS_AS(theta_of_spread(1.0, 0), std::invalid_argument);
}

TEST_CASE("schedules report query counts and traces record every stage boundary") {
    Schedule sch;
    sch.dim = 4;
    sch.stages = {Stage{Identity{}, true}, Stage{Diffusion{}, false}, Stage{Identity{}, true}};
    CHECK(sch.query_count() == 2);

    SpreadTrace trace = run_schedule(sch);
    REQUIRE(trace.rows.size() == 4);
    CHECK(trace.dim == 4);
    CHECK(trace.rows[0].queries == 0);
    CHECK(trace.rows[1].queries == 1);
    CHECK(trace.rows[2].queries == 1);
    CHECK(trace.rows[3].queries == 2);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(trace.rows[k].stage == k);
        CHECK(trace.rows[k].per_alpha.size() == 4);
    }
    CHECK(trace.rows[0].spread == 0.0);

    // The common diffusion between rows 1 and 2 cannot move the spread.
    CHECK(abs_diff(trace.rows[1].spread, trace.rows[2].spread) <= 1e-12);

    // spread_after_queries picks the last row at that query count.
    CHECK(trace.spread_after_queries(1) == trace.rows[2].spread);
    CHECK(trace.spread_after_queries(0) == 0.0);
    CHECK_THROWS_AS(trace.spread_after_queries(5), std::invalid_argument);

    SUBCASE("dimension limits are enforced") {
        Schedule bad = sch;
        bad.dim = 0;
        CHECK_THROWS_AS(run_schedule(bad), std::invalid_argument);
        bad.dim = 10;
        CHECK_THROWS_AS(run_schedule(bad, 8), std::invalid_argument);
    }

    SUBCASE("a dense stage of the wrong dimension is rejected") {
        Stage wrong{haar_unitary(2, 1), false};
        CHECK_THROWS_AS(step(init_ensemble(4), wrong), std::invalid_argument);
    }
}
