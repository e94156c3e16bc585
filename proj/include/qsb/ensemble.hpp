#pragma once

#include <variant>
#include <vector>

#include "qsb/core.hpp"

namespace qsb {

inline constexpr std::size_t kDefaultDimCap = 4096;

struct Identity {};
struct Diffusion {};

/// Inversion about the mean with an adjustable phase:
/// I - (1 - e^{i*phase}) |s><s|, where |s> is the uniform state.
/// phase = pi reproduces the standard diffusion up to a global sign.
struct PhasedDiffusion {
    double phase = std::numbers::pi;
};

using StageUnitary = std::variant<Identity, Diffusion, PhasedDiffusion, DenseUnitary>;

/// One stage of a query algorithm: a unitary common to every trajectory,
/// optionally followed by one oracle query.
struct Stage {
    StageUnitary unitary = Identity{};
    bool query_after = false;
    double query_phase = std::numbers::pi;
};

struct Schedule {
    std::size_t dim = 0;
    std::vector<Stage> stages;

    std::size_t query_count() const;
};

/// N + 1 states evolving under a common schedule: a reference that is never
/// queried, and one trajectory per basis state alpha whose queries all
/// target alpha.
class Ensemble {
  public:
    std::size_t dim() const { return trajectories_.size(); }
    const StateVector& reference() const { return reference_; }
    const StateVector& trajectory(std::size_t alpha) const;
    std::size_t queries_applied() const { return queries_applied_; }

  private:
    Ensemble(StateVector reference, std::vector<StateVector> trajectories,
             std::size_t queries_applied);

    StateVector reference_;
    std::vector<StateVector> trajectories_;
    std::size_t queries_applied_;

    friend Ensemble init_ensemble(std::size_t n);
    friend Ensemble step(Ensemble e, const Stage& stage);
};

/// All N + 1 states start in the uniform superposition.
Ensemble init_ensemble(std::size_t n);

/// Applies the stage unitary to the reference and every trajectory, then
/// (if the stage queries) one selective phase rotation per trajectory.
Ensemble step(Ensemble e, const Stage& stage);

double deviation(const Ensemble& e, std::size_t alpha);
double spread(const Ensemble& e);

/// Angle between a trajectory and the reference implied by an average
/// deviation of spread/N: arccos(1 - spread / (2N)).
double theta_of_spread(double spread, std::size_t n);

StateVector apply_stage_unitary(const StageUnitary& u, const StateVector& v);

struct TraceRow {
    std::size_t stage = 0;    // stages applied so far
    std::size_t queries = 0;  // queries applied so far
    double spread = 0.0;
    double theta = 0.0;
    std::vector<double> per_alpha;
};

struct SpreadTrace {
    std::size_t dim = 0;
    std::vector<TraceRow> rows;

    /// Spread once exactly t queries have been applied (the last recorded
    /// row at that query count; later unitaries cannot change it).
    double spread_after_queries(std::size_t t) const;
};

SpreadTrace run_schedule(const Schedule& schedule, std::size_t max_dim = kDefaultDimCap);

}  // namespace qsb
