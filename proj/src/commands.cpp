#include "qsb/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>

#include "qsb/adversary.hpp"
#include "qsb/bounds.hpp"
#include "qsb/grover.hpp"
#include "qsb/selfcheck.hpp"
#include "qsb/serialize.hpp"

namespace qsb {

namespace {

constexpr std::size_t kBoundsDimCap = 1000000000;  // envelope iterations stay ~sqrt(N)
constexpr std::size_t kRandomScheduleDimCap = 64;  // Haar stages cost O(N^3) each
constexpr std::size_t kRestartCap = 4096;
constexpr std::size_t kSampleCap = 10000000;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int invariant_failure(const std::string& msg) {
    std::cerr << "invariant violation: " << msg << "\n";
    return 1;
}

// Arg-dependent library errors are usage errors; anything else is a failed run.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        return invariant_failure(e.what());
    }
}

// Per-row recursion and envelope checks shared by the trace-emitting commands.
bool trace_within_bounds(const SpreadTrace& trace, std::string& why) {
    std::size_t t_max = 0;
    for (const auto& row : trace.rows) t_max = std::max(t_max, row.queries);
    std::vector<double> env(t_max + 1, 0.0);
    for (std::size_t k = 0; k < t_max; ++k)
        env[k + 1] = std::min(
            4.0 * static_cast<double>(trace.dim),
            env[k] + 4.0 * std::sqrt(static_cast<double>(trace.dim)) *
                         std::sin(theta_of_spread(env[k], trace.dim)) +
                4.0);
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        if (row.spread > env[row.queries] + kNormTolerance) {
            why = "spread exceeds envelope at stage " + std::to_string(row.stage);
            return false;
        }
        if (i == 0) continue;
        const auto& prev = trace.rows[i - 1];
        if (!check_step_thm2(prev.spread, row.spread)) {
            why = "quadratic step recursion fails at stage " + std::to_string(row.stage);
            return false;
        }
        if (!check_step_thm3(prev.spread, row.spread, trace.dim)) {
            why = "trig step recursion fails at stage " + std::to_string(row.stage);
            return false;
        }
    }
    return true;
}

}  // namespace

int cmd_grover(const RunConfig& cfg) {
    return guarded([&] {
        Schedule sched = grover_schedule(cfg.n, cfg.steps);
        SpreadTrace trace = run_schedule(sched, cfg.max_dim);

        std::vector<GroverRow> rows;
        rows.reserve(cfg.steps + 1);
        TwoDimState td = TwoDimState::uniform(cfg.n);
        for (std::size_t t = 0; t <= cfg.steps; ++t) {
            GroverRow row;
            row.t = t;
            row.success_prob = success_probability(cfg.n, t);
            row.spread = trace.spread_after_queries(t);
            if (std::abs(td.success_probability() - row.success_prob) > kNormTolerance)
                return invariant_failure(
                    "success probability disagrees with the iterated state at t = " +
                    std::to_string(t));
            double exact = grover_spread_exact(cfg.n, t);
            if (std::abs(row.spread - exact) > kNormTolerance * (1.0 + row.spread))
                return invariant_failure(
                    "simulated spread disagrees with the closed form at t = " +
                    std::to_string(t));
            rows.push_back(row);
            td = td.iterate();
        }

        std::string why;
        if (!trace_within_bounds(trace, why)) return invariant_failure(why);

        write_output(cfg.out, grover_csv(rows, cfg.n));
        return 0;
    });
}

int cmd_ensemble(const RunConfig& cfg) {
    return guarded([&] {
        Schedule sched;
        if (cfg.schedule == "grover") {
            sched = grover_schedule(cfg.n, cfg.steps);
        } else if (cfg.schedule == "random") {
            if (cfg.n > kRandomScheduleDimCap)
                return usage_error("random schedules are capped at N = " +
                                   std::to_string(kRandomScheduleDimCap));
            sched = random_schedule(cfg.n, cfg.steps, cfg.seed);
        } else {
            return usage_error("unknown schedule kind: " + cfg.schedule);
        }

        SpreadTrace trace = run_schedule(sched, cfg.max_dim);
        std::string why;
        if (!trace_within_bounds(trace, why)) return invariant_failure(why);

        write_output(cfg.out, trace_csv(trace, cfg.per_alpha));
        return 0;
    });
}

int cmd_bounds(const RunConfig& cfg) {
    return guarded([&] {
        if (cfg.n > kBoundsDimCap)
            return usage_error("bounds reports are capped at N = " +
                               std::to_string(kBoundsDimCap));
        BoundReport report = make_bound_report(cfg.n);
        if (cfg.n >= 2 && report.t_envelope > report.t_asym_thm3 + 1)
            return invariant_failure("envelope query count exceeds the closed-form count + 1");
        write_output(cfg.out, bound_report_json(report));
        return 0;
    });
}

int cmd_adversary(const RunConfig& cfg) {
    return guarded([&] {
        if (cfg.restarts == 0) return usage_error("adversary needs at least one restart");
        if (cfg.restarts > kRestartCap)
            return usage_error("restarts are capped at " + std::to_string(kRestartCap));

        AdversaryResult result = maximize_spread(cfg.n, cfg.steps, cfg.restarts, cfg.seed);
        if (result.best_spread > result.envelope + kNormTolerance)
            return invariant_failure("best spread exceeds the envelope");
        if (result.tightness > 1.0 + kNormTolerance)
            return invariant_failure("tightness exceeds 1");
        if (result.best_spread < grover_spread_exact(cfg.n, cfg.steps) - kNormTolerance)
            return invariant_failure("search lost to its own starting point");

        write_output(cfg.out, adversary_result_json(result));

        if (!cfg.trace_out.empty()) {
            SpreadTrace trace =
                run_schedule(phased_schedule(cfg.n, result.best_parameters), cfg.max_dim);
            double final_spread = trace.rows.back().spread;
            if (std::abs(final_spread - result.best_spread) >
                kNormTolerance * (1.0 + result.best_spread))
                return invariant_failure(
                    "winning trace disagrees with the reduced-space objective");
            std::string why;
            if (!trace_within_bounds(trace, why)) return invariant_failure(why);
            write_output(cfg.trace_out, trace_csv(trace, false));
        }
        return 0;
    });
}

int cmd_lemma(const RunConfig& cfg) {
    return guarded([&] {
        if (cfg.samples == 0) return usage_error("samples must be >= 1");
        if (cfg.samples > kSampleCap)
            return usage_error("samples are capped at " + std::to_string(kSampleCap));

        LemmaReport report;
        report.samples = cfg.samples;
        report.seed = cfg.seed;
        report.max_gap_minus_sin_theta = -2.0;

        Rng rng(cfg.seed);
        auto random_nonneg_state = [&](std::size_t dim) {
            std::vector<Amplitude> amps(dim);
            double nn = 0.0;
            for (auto& a : amps) {
                a = Amplitude(std::abs(rng.gaussian()), 0.0);
                nn += std::norm(a);
            }
            nn = std::sqrt(nn);
            for (auto& a : amps) a /= nn;
            return StateVector(std::move(amps));
        };

        for (std::size_t i = 0; i < cfg.samples; ++i) {
            std::size_t dim =
                report.dim_min + rng.next_u64() % (report.dim_max - report.dim_min + 1);
            StateVector u = random_nonneg_state(dim);
            StateVector v = random_nonneg_state(dim);
            if (!lemma_check(u, v)) ++report.violations;
            double d = distance_sq(u, v);
            double theta = std::acos(std::clamp(1.0 - d / 2.0, -1.0, 1.0));
            double gap = 0.0;
            for (std::size_t k = 0; k < dim; ++k)
                gap = std::max(gap, std::abs(u[k].real() - v[k].real()));
            report.max_gap_minus_sin_theta =
                std::max(report.max_gap_minus_sin_theta, gap - std::sin(theta));
        }

        report.grid_points = 100;
        for (std::size_t j = 0; j < report.grid_points; ++j) {
            double theta = (std::numbers::pi / 2.0) * (static_cast<double>(j) /
                           static_cast<double>(report.grid_points - 1));
            auto [p1, p2] = lemma_worst_pair(theta);
            double d = distance_sq(p1, p2);
            double big = std::acos(std::clamp(1.0 - d / 2.0, -1.0, 1.0));
            double gap = std::max(std::abs(p1[0].real() - p2[0].real()),
                                  std::abs(p1[1].real() - p2[1].real()));
            report.grid_max_equality_error =
                std::max(report.grid_max_equality_error, std::abs(gap - std::sin(big)));
        }

        report.complex_samples = std::max<std::size_t>(1, cfg.samples / 10);
        for (std::size_t i = 0; i < report.complex_samples; ++i) {
            std::size_t dim =
                report.dim_min + rng.next_u64() % (report.dim_max - report.dim_min + 1);
            auto random_complex_state = [&] {
                std::vector<Amplitude> amps(dim);
                double nn = 0.0;
                for (auto& a : amps) {
                    a = Amplitude(rng.gaussian(), rng.gaussian());
                    nn += std::norm(a);
                }
                nn = std::sqrt(nn);
                for (auto& a : amps) a /= nn;
                return StateVector(std::move(amps));
            };
            StateVector u = random_complex_state();
            StateVector v = random_complex_state();
            double d = distance_sq(u, v);
            double theta = std::acos(std::clamp(1.0 - d / 2.0, -1.0, 1.0));
            double gap = 0.0;
            for (std::size_t k = 0; k < dim; ++k) gap = std::max(gap, std::abs(u[k] - v[k]));
            if (std::sin(theta) > kNormTolerance)
                report.complex_max_ratio =
                    std::max(report.complex_max_ratio, gap / std::sin(theta));
            if (!lemma_check(phase_aligned(u), phase_aligned(v))) ++report.aligned_violations;
        }

        write_output(cfg.out, lemma_report_json(report));
        if (report.violations > 0 || report.aligned_violations > 0)
            return invariant_failure("component-gap bound violated");
        if (report.grid_max_equality_error > kDriftTolerance)
            return invariant_failure("extremal pair misses equality");
        return 0;
    });
}

int cmd_selfcheck(const RunConfig& cfg) {
    if (!cfg.inject_fault.empty() && cfg.inject_fault != "reference-query")
        return usage_error("unknown fault: " + cfg.inject_fault +
                           " (available: reference-query)");
    return guarded([&] {
        std::vector<SuiteResult> results = run_selfcheck(cfg.inject_fault);
        bool all_pass = true;
        for (const auto& r : results) {
            char slack[32];
            std::snprintf(slack, sizeof slack, "%.3g", r.slack);
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (max slack "
                      << slack << ")";
            if (!r.note.empty()) std::cout << " [" << r.note << "]";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "selfcheck: all suites passed\n"
                               : "selfcheck: FAILURES above\n");
        return all_pass ? 0 : 1;
    });
}

}  // namespace qsb
