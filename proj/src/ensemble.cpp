#include "qsb/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsb {

std::size_t Schedule::query_count() const {
    std::size_t c = 0;
    for (const auto& s : stages)
        if (s.query_after) ++c;
    return c;
}

Ensemble::Ensemble(StateVector reference, std::vector<StateVector> trajectories,
                   std::size_t queries_applied)
    : reference_(std::move(reference)),
      trajectories_(std::move(trajectories)),
      queries_applied_(queries_applied) {}

const StateVector& Ensemble::trajectory(std::size_t alpha) const {
    if (alpha >= trajectories_.size())
        throw std::invalid_argument("Ensemble::trajectory: alpha out of range");
    return trajectories_[alpha];
}

Ensemble init_ensemble(std::size_t n) {
    StateVector s = uniform_state(n);
    std::vector<StateVector> trajectories(n, s);
    return Ensemble(std::move(s), std::move(trajectories), 0);
}

namespace {

StateVector apply_diffusion(const StateVector& v) {
    std::size_t n = v.dim();
    Amplitude mean_sum(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) mean_sum += v[i];
    Amplitude shift = 2.0 * mean_sum / static_cast<double>(n);
    std::vector<Amplitude> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = shift - v[i];
    return StateVector(std::move(out));
}

StateVector apply_phased_diffusion(const StateVector& v, double phase) {
    if (!std::isfinite(phase))
        throw std::invalid_argument("PhasedDiffusion: non-finite phase");
    std::size_t n = v.dim();
    Amplitude mean_sum(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) mean_sum += v[i];
    Amplitude factor = (phase == std::numbers::pi) ? Amplitude(2.0, 0.0)
                                                   : 1.0 - std::polar(1.0, phase);
    Amplitude shift = factor * mean_sum / static_cast<double>(n);
    std::vector<Amplitude> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i] - shift;
    return StateVector(std::move(out));
}

}  // namespace

StateVector apply_stage_unitary(const StageUnitary& u, const StateVector& v) {
    return std::visit(
        [&](const auto& op) -> StateVector {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, Identity>) {
                return v;
            } else if constexpr (std::is_same_v<T, Diffusion>) {
                return apply_diffusion(v);
            } else if constexpr (std::is_same_v<T, PhasedDiffusion>) {
                return apply_phased_diffusion(v, op.phase);
            } else {
                return apply_unitary(op, v);
            }
        },
        u);
}

Ensemble step(Ensemble e, const Stage& stage) {
    if (const auto* dense = std::get_if<DenseUnitary>(&stage.unitary);
        dense && dense->dim() != e.dim())
        throw std::invalid_argument("step: stage unitary dimension mismatch");

    e.reference_ = apply_stage_unitary(stage.unitary, e.reference_);
    for (auto& t : e.trajectories_) t = apply_stage_unitary(stage.unitary, t);

    if (stage.query_after) {
        for (std::size_t alpha = 0; alpha < e.trajectories_.size(); ++alpha)
            e.trajectories_[alpha] =
                apply_query(e.trajectories_[alpha], QueryOp{alpha, stage.query_phase});
        ++e.queries_applied_;
    }
    return e;
}

double deviation(const Ensemble& e, std::size_t alpha) {
    return distance_sq(e.trajectory(alpha), e.reference());
}

double spread(const Ensemble& e) {
    double s = 0.0;
    for (std::size_t alpha = 0; alpha < e.dim(); ++alpha) s += deviation(e, alpha);
    return s;
}

double theta_of_spread(double spread, std::size_t n) {
    if (n == 0) throw std::invalid_argument("theta_of_spread: n must be >= 1");
    double cap = 4.0 * static_cast<double>(n);
    if (spread < -kNormTolerance || spread > cap + kNormTolerance)
        throw std::domain_error("theta_of_spread: spread " + std::to_string(spread) +
                                " outside [0, 4N]");
    double arg = 1.0 - spread / (2.0 * static_cast<double>(n));
    arg = std::clamp(arg, -1.0, 1.0);
    return std::acos(arg);
}

double SpreadTrace::spread_after_queries(std::size_t t) const {
    double found = -1.0;
    bool seen = false;
    for (const auto& row : rows) {
        if (row.queries == t) {
            found = row.spread;
            seen = true;
        }
    }
    if (!seen)
        throw std::invalid_argument("SpreadTrace: no row with " + std::to_string(t) +
                                    " queries");
    return found;
}

SpreadTrace run_schedule(const Schedule& schedule, std::size_t max_dim) {
    if (schedule.dim == 0) throw std::invalid_argument("run_schedule: dim must be >= 1");
    if (schedule.dim > max_dim)
        throw std::invalid_argument("run_schedule: dim " + std::to_string(schedule.dim) +
                                    " exceeds cap " + std::to_string(max_dim));

    Ensemble e = init_ensemble(schedule.dim);
    SpreadTrace trace;
    trace.dim = schedule.dim;

    auto record = [&](std::size_t stages_done) {
        TraceRow row;
        row.stage = stages_done;
        row.queries = e.queries_applied();
        row.per_alpha.reserve(e.dim());
        double s = 0.0;
        for (std::size_t alpha = 0; alpha < e.dim(); ++alpha) {
            double d = deviation(e, alpha);
            row.per_alpha.push_back(d);
            s += d;
        }
        row.spread = s;
        row.theta = theta_of_spread(s, e.dim());
        trace.rows.push_back(std::move(row));
    };

    record(0);
    for (std::size_t k = 0; k < schedule.stages.size(); ++k) {
        e = step(std::move(e), schedule.stages[k]);
        record(k + 1);
    }
    return trace;
}

}  // namespace qsb
