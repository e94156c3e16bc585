#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "qsb/adversary.hpp"
#include "qsb/bounds.hpp"
#include "qsb/grover.hpp"

using namespace qsb;
using qsb_test::abs_diff;

TEST_CASE("random schedules are deterministic in their seed") {
    Schedule a = random_schedule(4, 3, 7);
    Schedule b = random_schedule(4, 3, 7);
    Schedule c = random_schedule(4, 3, 8);
    REQUIRE(a.stages.size() == 3);
    CHECK(a.query_count() == 3);

    double same = 0.0, diff = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& ua = std::get<DenseUnitary>(a.stages[k].unitary);
        const auto& ub = std::get<DenseUnitary>(b.stages[k].unitary);
        const auto& uc = std::get<DenseUnitary>(c.stages[k].unitary);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t col = 0; col < 4; ++col) {
                same = std::max(same, std::abs(ua.at(r, col) - ub.at(r, col)));
                diff = std::max(diff, std::abs(ua.at(r, col) - uc.at(r, col)));
            }
    }
    CHECK(same == 0.0);
    CHECK(diff > 1e-3);

    SUBCASE("stages within one schedule use distinct unitaries") {
        const auto& u0 = std::get<DenseUnitary>(a.stages[0].unitary);
        const auto& u1 = std::get<DenseUnitary>(a.stages[1].unitary);
        double d = 0.0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t col = 0; col < 4; ++col)
                d = std::max(d, std::abs(u0.at(r, col) - u1.at(r, col)));
        CHECK(d > 1e-3);
    }

    SUBCASE("every traced run satisfies both per-step growth checks") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::size_t n = 2 + (seed % 3) * 3;  // 2, 5, 8
            std::size_t t = 1 + seed % 5;
            SpreadTrace trace = run_schedule(random_schedule(n, t, seed));
            for (std::size_t k = 1; k < trace.rows.size(); ++k) {
                CHECK(check_step_thm2(trace.rows[k - 1].spread, trace.rows[k].spread));
                CHECK(check_step_thm3(trace.rows[k - 1].spread, trace.rows[k].spread, n));
            }
        }
    }
}

TEST_CASE("phased schedules map parameters onto stages in declared order") {
    std::vector<double> params = {0.3, 0.4, 1.1, 1.2};  // queries then diffusions, t = 2
    Schedule sch = phased_schedule(8, params);
    REQUIRE(sch.stages.size() == 2);
    CHECK(sch.dim == 8);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(sch.stages[k].query_after);
        CHECK(sch.stages[k].query_phase == params[k]);
        CHECK(std::get<PhasedDiffusion>(sch.stages[k].unitary).phase == params[2 + k]);
    }
    CHECK_THROWS_AS(phased_schedule(8, {0.1, 0.2, 0.3}), std::invalid_argument);
    // Zero parameters is the degenerate but valid empty schedule.
    CHECK(phased_schedule(8, {}).stages.empty());
}

TEST_CASE("the invariant-plane spread equals the full ensemble simulation") {
    Rng rng(314);
    for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
        for (std::size_t t : {1u, 2u, 3u}) {
            std::vector<double> params(2 * t);
            for (auto& p : params) p = rng.angle();
            double fast = phased_spread(n, params);
            double full = run_schedule(phased_schedule(n, params)).rows.back().spread;
            CHECK(abs_diff(fast, full) <= 1e-9 * (1.0 + full));
        }
    }

    SUBCASE("all-pi parameters reproduce the standard search spread") {
        for (std::size_t n : {4u, 16u}) {
            for (std::size_t t : {1u, 2u, 3u}) {
                std::vector<double> pi_params(2 * t, std::numbers::pi);
                CHECK(abs_diff(phased_spread(n, pi_params), grover_spread_exact(n, t)) <=
                      1e-9 * (1.0 + grover_spread_exact(n, t)));
            }
        }
    }
}

TEST_CASE("hill climbing finds the exact one-query optimum") {
    for (std::size_t n : {2u, 4u, 16u}) {
        AdversaryResult r = maximize_spread(n, 1, 4, 0);
        CHECK(abs_diff(r.best_spread, 4.0) <= 1e-6);
        CHECK(r.N == n);
        CHECK(r.t == 1);
        CHECK(r.best_parameters.size() == 2);
        CHECK(abs_diff(r.envelope, spread_envelope(n, 1)) <= 1e-12);
        CHECK(abs_diff(r.tightness, r.best_spread / r.envelope) <= 1e-12);
    }
}

TEST_CASE("optimized spreads dominate the standard point and respect the envelope") {
    for (std::size_t n : {8u, 16u}) {
        std::size_t t = 2;
        AdversaryResult r = maximize_spread(n, t, 8, 0);
        CHECK(r.best_spread >= grover_spread_exact(n, t) - 1e-9);
        CHECK(r.best_spread <= spread_envelope(n, t) + 1e-9);
        CHECK(r.restarts == 8);

        // The winning parameters replay to the winning spread.
        CHECK(abs_diff(phased_spread(n, r.best_parameters), r.best_spread) <=
              1e-9 * (1.0 + r.best_spread));
    }
}

TEST_CASE("the optimizer is deterministic and validates its limits") {
    AdversaryResult a = maximize_spread(8, 2, 6, 42);
    AdversaryResult b = maximize_spread(8, 2, 6, 42);
    CHECK(a.best_spread == b.best_spread);
    CHECK(a.best_parameters == b.best_parameters);
    CHECK(a.seed == 42);

    CHECK_THROWS_AS(maximize_spread(0, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(maximize_spread(kAdversaryDimCap + 1, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(maximize_spread(4, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(maximize_spread(4, kAdversaryStepCap + 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(maximize_spread(4, 1, 0, 0), std::invalid_argument);
}
