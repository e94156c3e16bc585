#pragma once

#include "qsb/ensemble.hpp"

namespace qsb {

/// Rotation angle per iteration: asin(1/sqrt(n)).
double grover_angle(std::size_t n);

/// Probability of measuring the target after t iterations: sin^2((2t+1)*theta).
double success_probability(std::size_t n, std::size_t t);

/// Iteration count maximizing the success probability: pi/(4*theta) - 1/2,
/// rounded to the nearest integer with exact halves rounded down.
std::size_t optimal_iterations(std::size_t n);

/// Ensemble spread induced by t iterations: 4n*sin^2(t*theta). Agrees with
/// the direct N+1-trajectory simulation to floating-point accuracy.
double grover_spread_exact(std::size_t n, std::size_t t);

/// The search algorithm as a stage list: a first stage that only queries,
/// diffusion+query stages, and a trailing diffusion. Equivalent to `steps`
/// standard iterations applied to the uniform state.
Schedule grover_schedule(std::size_t n, std::size_t steps);

/// The iteration restricted to its invariant plane: the target amplitude and
/// the common amplitude of every other basis state.
struct TwoDimState {
    std::size_t dim = 0;
    double target_amp = 0.0;
    double rest_amp = 0.0;

    static TwoDimState uniform(std::size_t n);

    /// One oracle sign flip followed by inversion about the average.
    TwoDimState iterate() const;

    double success_probability() const { return target_amp * target_amp; }
};

}  // namespace qsb
