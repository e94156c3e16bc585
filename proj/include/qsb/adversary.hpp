#pragma once

#include <cstdint>
#include <vector>

#include "qsb/ensemble.hpp"

namespace qsb {

inline constexpr std::size_t kAdversaryDimCap = 64;
inline constexpr std::size_t kAdversaryStepCap = 32;

/// t stages of Haar-random unitaries, each followed by a default query.
/// Deterministic in (n, t, seed).
Schedule random_schedule(std::size_t n, std::size_t t, std::uint64_t seed);

/// Schedule from the phased-rotation family: stage k applies a phased
/// diffusion with angle params[t + k] and then queries with phase params[k].
/// params holds [query phases 1..t, diffusion angles 1..t].
Schedule phased_schedule(std::size_t n, const std::vector<double>& params);

/// Final spread of a phased-rotation schedule, evaluated in the invariant
/// two-dimensional subspace (every trajectory deviates equally from the
/// uniform start, so D = N * delta). Each intermediate spread is checked
/// against the per-step recursions and the envelope.
double phased_spread(std::size_t n, const std::vector<double>& params);

struct AdversaryResult {
    std::size_t N = 0;
    std::size_t t = 0;
    double best_spread = 0.0;
    double envelope = 0.0;
    double tightness = 0.0;  // best_spread / envelope
    std::vector<double> best_parameters;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
};

/// Coordinate-wise hill climbing over the 2t phase parameters from
/// `restarts` starting points. Restart 0 is always the standard iteration
/// (all phases pi); the rest are seeded uniformly at random. Steps start at
/// pi/8, halve after a sweep with no improvement, and stop below 1e-6 or at
/// 10^4 evaluations per restart. Ties keep the lowest restart index.
AdversaryResult maximize_spread(std::size_t n, std::size_t t, std::size_t restarts,
                                std::uint64_t seed);

}  // namespace qsb
