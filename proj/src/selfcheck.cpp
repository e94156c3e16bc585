#include "qsb/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsb/adversary.hpp"
#include "qsb/bounds.hpp"
#include "qsb/grover.hpp"
#include "qsb/serialize.hpp"

namespace qsb {

namespace {

struct Checker {
    double slack = -std::numeric_limits<double>::infinity();

    // lhs <= allowed; positive contribution = violation
    void le(double lhs, double allowed) { slack = std::max(slack, lhs - allowed); }
    void close(double a, double b, double tol) { le(std::abs(a - b), tol); }

    SuiteResult done(std::string name, std::string note = "") const {
        return SuiteResult{std::move(name), slack <= 0.0, slack, std::move(note)};
    }
};

SuiteResult suite_state_norms() {
    Checker c;
    for (std::size_t n : {2, 7, 16}) {
        c.close(uniform_state(n).norm(), 1.0, kDriftTolerance);
        c.close(basis_state(n, n / 2).norm(), 1.0, kDriftTolerance);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            StateVector v = haar_state(n, seed);
            c.close(v.norm(), 1.0, kDriftTolerance);
            DenseUnitary u = haar_unitary(n, seed + 100);
            c.close(apply_unitary(u, v).norm(), 1.0, kDriftTolerance);
            c.close(apply_query(v, QueryOp{seed % n, 1.234}).norm(), 1.0, kDriftTolerance);
        }
    }
    return c.done("state-norms");
}

SuiteResult suite_unitarity() {
    Checker c;
    for (std::size_t n : {2, 5, 8, 16}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            DenseUnitary u = haar_unitary(n, seed);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Amplitude s(0.0, 0.0);
                    for (std::size_t k = 0; k < n; ++k)
                        s += std::conj(u.at(k, i)) * u.at(k, j);
                    double expected = (i == j) ? 1.0 : 0.0;
                    c.le(std::abs(s - expected), kDriftTolerance);
                }
            StateVector x = haar_state(n, seed + 10);
            StateVector y = haar_state(n, seed + 20);
            c.close(std::abs(inner(apply_unitary(u, x), apply_unitary(u, y))),
                    std::abs(inner(x, y)), kDriftTolerance);
        }
    }
    return c.done("unitarity");
}

SuiteResult suite_query_locality() {
    Checker c;
    for (std::size_t n : {2, 9, 16}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            StateVector v = haar_state(n, seed);
            std::size_t target = seed % n;
            StateVector w = apply_query(v, QueryOp{target, 0.777 + 0.1 * seed});
            for (std::size_t i = 0; i < n; ++i) {
                if (i == target) {
                    c.close(std::abs(w[i]), std::abs(v[i]), 1e-15);
                } else {
                    c.le(std::abs(w[i] - v[i]), 0.0);  // untouched components, exactly
                }
            }
        }
    }
    return c.done("query-locality");
}

SuiteResult suite_no_query_invariance(const std::string& inject_fault) {
    bool fault = inject_fault == "reference-query";
    Checker c;
    for (std::size_t n : {2, 4, 8}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Schedule sched;
            sched.dim = n;
            for (std::size_t k = 0; k < 4; ++k)
                sched.stages.push_back(
                    Stage{haar_unitary(n, derive_seed(seed, k)), false, std::numbers::pi});

            if (!fault) {
                SpreadTrace trace = run_schedule(sched);
                for (const auto& row : trace.rows) c.le(row.spread, kDriftTolerance);
            } else {
                // Parallel hand-rolled walk with the injected defect: the
                // reference receives the query phase it must never see.
                StateVector ref = uniform_state(n);
                std::vector<StateVector> traj(n, ref);
                for (const auto& stage : sched.stages) {
                    ref = apply_stage_unitary(stage.unitary, ref);
                    for (auto& tv : traj) tv = apply_stage_unitary(stage.unitary, tv);
                    ref = apply_query(ref, QueryOp{0, std::numbers::pi});
                    double d = 0.0;
                    for (const auto& tv : traj) d += distance_sq(tv, ref);
                    c.le(d, kDriftTolerance);
                }
            }
        }
    }
    return c.done("no-query-invariance");
}

SuiteResult suite_spread_identities() {
    Checker c;
    for (std::size_t n : {2, 4, 16}) {
        double nd = static_cast<double>(n);
        c.close(theta_of_spread(0.0, n), 0.0, kDriftTolerance);
        c.close(theta_of_spread(4.0 * nd, n), std::numbers::pi, kDriftTolerance);
        c.close(theta_of_spread(2.0 * nd, n), std::numbers::pi / 2.0, kDriftTolerance);
        for (int j = 0; j <= 20; ++j) {
            double theta = std::numbers::pi * j / 20.0;
            double d = 2.0 * nd * (1.0 - std::cos(theta));
            c.close(theta_of_spread(d, n), theta, 1e-7);  // arccos conditioning near the ends
        }
    }
    // Every trajectory of the standard schedule deviates equally.
    SpreadTrace trace = run_schedule(grover_schedule(8, 2));
    for (const auto& row : trace.rows)
        for (double d : row.per_alpha) c.close(d, row.per_alpha[0], kDriftTolerance);
    return c.done("spread-identities");
}

SuiteResult suite_resolvability_equality() {
    Checker c;
    for (std::size_t n : {2, 4, 16}) {
        std::vector<StateVector> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_state(n, i));
        StateVector ref = optimal_reference(basis);
        double min_spread = theorem1_min_spread(n);
        c.close(spread_about(basis, ref), min_spread, kNormTolerance);
        for (std::uint64_t s = 0; s < 100; ++s)
            c.le(min_spread - kNormTolerance, spread_about(basis, haar_state(n, s)));
    }
    // Same equality for a non-basis orthonormal set (columns of a Haar unitary).
    DenseUnitary u = haar_unitary(4, 42);
    std::vector<StateVector> set;
    for (std::size_t col = 0; col < 4; ++col) {
        std::vector<Amplitude> amps(4);
        for (std::size_t row = 0; row < 4; ++row) amps[row] = u.at(row, col);
        set.push_back(StateVector(std::move(amps)));
    }
    c.close(spread_about(set, optimal_reference(set)), theorem1_min_spread(4), kNormTolerance);
    return c.done("resolvability-equality");
}

// Shared corpus for the two recursion suites.
std::vector<SpreadTrace> recursion_corpus() {
    std::vector<SpreadTrace> traces;
    for (std::size_t n : {2, 4, 8}) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            std::size_t t = 1 + seed % 6;
            traces.push_back(run_schedule(random_schedule(n, t, derive_seed(777, seed))));
        }
    }
    return traces;
}

SuiteResult suite_step_recursion_quadratic() {
    Checker c;
    for (const auto& trace : recursion_corpus()) {
        for (std::size_t i = 1; i < trace.rows.size(); ++i) {
            c.le(std::sqrt(trace.rows[i].spread),
                 std::sqrt(trace.rows[i - 1].spread) + 2.0 + kNormTolerance);
            c.le(trace.rows[i].spread, theorem2_bound(trace.rows[i].queries) + 1e-6);
        }
    }
    return c.done("step-recursion-quadratic");
}

SuiteResult suite_step_recursion_trig() {
    Checker c;
    for (const auto& trace : recursion_corpus()) {
        std::size_t n = trace.dim;
        double nd = static_cast<double>(n);
        for (std::size_t i = 1; i < trace.rows.size(); ++i) {
            double d_prev = trace.rows[i - 1].spread;
            double d = trace.rows[i].spread;
            double theta = theta_of_spread(std::clamp(d_prev, 0.0, 4.0 * nd), n);
            c.le(d, d_prev + 4.0 * std::sqrt(nd) * std::sin(theta) + 4.0 + kNormTolerance);
            c.le(d, spread_envelope(n, trace.rows[i].queries) + kNormTolerance);
            double tq = static_cast<double>(trace.rows[i].queries);
            double closed = 4.0 * nd * std::pow(std::sin(tq / std::sqrt(nd)), 2);
            c.le(d, closed + 4.0 * tq + 1e-6);
        }
    }
    return c.done("step-recursion-trig");
}

SuiteResult suite_closed_form_consistency() {
    Checker c;
    for (std::size_t n : {1UL, 4UL, 16UL, 100UL, 1000000UL}) {
        double root_n = std::sqrt(static_cast<double>(n));
        for (int j = 0; j <= 200; ++j) {
            double t = (std::numbers::pi / 2.0) * root_n * j / 200.0;
            c.le(theorem3_bound(n, t), 4.0 * t * t + kNormTolerance);
        }
    }
    for (std::size_t n : {2UL, 4UL, 16UL, 64UL, 256UL, 1024UL, 10000UL, 1000000UL}) {
        BoundReport r = make_bound_report(n);
        c.le(static_cast<double>(r.t_envelope),
             static_cast<double>(r.t_asym_thm3) + 1.0);
        if (n >= 10000) {
            double a = static_cast<double>(r.t_envelope);
            double b = static_cast<double>(r.t_asym_thm3);
            c.le(std::abs(a - b) / b, 0.02);
        }
    }
    return c.done("closed-form-consistency");
}

SuiteResult suite_search_tightness() {
    Checker c;
    for (std::size_t n : {16, 64}) {
        double nd = static_cast<double>(n);
        std::size_t t_star = optimal_iterations(n);
        c.le(1.0 - 1.0 / nd, success_probability(n, t_star));
        c.le(0.9 * theorem1_min_spread(n), grover_spread_exact(n, t_star));
        c.le(static_cast<double>(t_star),
             static_cast<double>(min_queries_envelope(n)) + 1.0);
    }
    return c.done("search-tightness", "spread threshold fraction 0.9");
}

SuiteResult suite_exact_spread_agreement() {
    Checker c;
    for (std::size_t n = 2; n <= 16; ++n) {
        SpreadTrace trace = run_schedule(grover_schedule(n, 8));
        for (std::size_t t = 0; t <= 8; ++t)
            c.close(trace.spread_after_queries(t), grover_spread_exact(n, t),
                    kNormTolerance);
    }
    for (std::size_t n : {4, 64, 256}) {
        StateVector full = uniform_state(n);
        TwoDimState td = TwoDimState::uniform(n);
        for (std::size_t t = 1; t <= 25; ++t) {
            full = apply_stage_unitary(Diffusion{}, apply_query(full, QueryOp{0}));
            td = td.iterate();
            c.close(full[0].real(), td.target_amp, kNormTolerance);
            for (std::size_t i = 1; i < n; ++i)
                c.close(full[i].real(), td.rest_amp, kNormTolerance);
        }
    }
    return c.done("exact-spread-agreement");
}

SuiteResult suite_component_gap() {
    Checker c;
    for (int j = 0; j < 25; ++j) {
        double theta = (std::numbers::pi / 2.0) * (j / 24.0);
        auto [p1, p2] = lemma_worst_pair(theta);
        double d = distance_sq(p1, p2);
        c.close(d, 2.0 - 2.0 * std::cos(theta), kDriftTolerance);
        double big_theta = std::acos(std::clamp(1.0 - d / 2.0, -1.0, 1.0));
        double gap = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            gap = std::max(gap, std::abs(p1[i].real() - p2[i].real()));
        c.close(gap, std::sin(big_theta), kDriftTolerance);
        c.le(lemma_check(p1, p2) ? 0.0 : 1.0, 0.0);
    }
    Rng rng(31337);
    for (int i = 0; i < 2000; ++i) {
        std::size_t dim = 2 + rng.next_u64() % 15;
        std::vector<StateVector> pair;
        for (int k = 0; k < 2; ++k) {
            std::vector<Amplitude> amps(dim);
            double nn = 0.0;
            for (auto& a : amps) {
                a = Amplitude(std::abs(rng.gaussian()), 0.0);
                nn += std::norm(a);
            }
            nn = std::sqrt(nn);
            for (auto& a : amps) a /= nn;
            pair.push_back(StateVector(std::move(amps)));
        }
        c.le(lemma_check(pair[0], pair[1]) ? 0.0 : 1.0, 0.0);
    }
    return c.done("component-gap");
}

SuiteResult suite_adversary_dominance() {
    Checker c;
    AdversaryResult r1 = maximize_spread(4, 1, 4, 0);
    c.close(r1.best_spread, 4.0, 1e-6);
    c.le(r1.best_spread, r1.envelope + kNormTolerance);
    c.le(grover_spread_exact(4, 1) - kNormTolerance, r1.best_spread);

    AdversaryResult r2 = maximize_spread(8, 2, 4, 0);
    c.le(r2.best_spread, r2.envelope + kNormTolerance);
    c.le(grover_spread_exact(8, 2) - kNormTolerance, r2.best_spread);
    c.le(r2.tightness, 1.0 + kNormTolerance);
    return c.done("adversary-dominance");
}

SuiteResult suite_bound_report() {
    Checker c;
    BoundReport r4 = make_bound_report(4);
    c.close(r4.min_spread, 4.0, 0.0);
    c.le(std::abs(static_cast<double>(r4.t_envelope) - 1.0), 0.0);
    c.le(std::abs(static_cast<double>(r4.t_asym_thm2) - 1.0), 0.0);
    c.le(r4.tight ? 0.0 : 1.0, 0.0);

    BoundReport r6 = make_bound_report(1000000);
    c.close(r6.ratio_thm2, 0.707, 0.001 * 0.707);
    c.close(r6.ratio_thm3, 0.785, 0.001 * 0.785);
    c.close(r6.min_spread, 1998000.0, 1e-3);
    return c.done("bound-report");
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const std::string& inject_fault) {
    return {
        suite_state_norms(),
        suite_unitarity(),
        suite_query_locality(),
        suite_no_query_invariance(inject_fault),
        suite_spread_identities(),
        suite_resolvability_equality(),
        suite_step_recursion_quadratic(),
        suite_step_recursion_trig(),
        suite_closed_form_consistency(),
        suite_search_tightness(),
        suite_exact_spread_agreement(),
        suite_component_gap(),
        suite_adversary_dominance(),
        suite_bound_report(),
    };
}

}  // namespace qsb
