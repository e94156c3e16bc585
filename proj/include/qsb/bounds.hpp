#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qsb/ensemble.hpp"

namespace qsb {

/// Minimum total squared deviation of N mutually orthonormal states about
/// any single reference: 2N - 2*sqrt(N). Below this spread the N outcomes
/// cannot all be distinguished exactly.
double theorem1_min_spread(std::size_t n);

double spread_about(const std::vector<StateVector>& vectors, const StateVector& ref);

/// The reference achieving the minimum: the normalized sum of the inputs.
/// Inputs must be pairwise orthogonal within 1e-9.
StateVector optimal_reference(const std::vector<StateVector>& vectors);

/// Worst-case spread after t queries: 4t^2.
double theorem2_bound(std::size_t t);

/// Asymptotic closed-form spread bound 4N*sin^2(t/sqrt(N)), valid for
/// 0 <= t <= (pi/2)*sqrt(N).
double theorem3_bound(std::size_t n, double t);

/// Per-step recursion sqrt(D_next) <= sqrt(D_prev) + 2, with 1e-9 slack.
bool check_step_thm2(double d_prev, double d_next);

/// Per-step recursion D_next <= D_prev + 4*sqrt(N)*sin(Theta) + 4 with
/// Theta = theta_of_spread(D_prev, N), with 1e-9 slack.
bool check_step_thm3(double d_prev, double d_next, std::size_t n);

/// Rigorous upper envelope of any reachable spread: iterate E(0) = 0,
/// E(k+1) = min(4N, E(k) + 4*sqrt(N)*sin(theta_of_spread(E(k), N)) + 4).
double spread_envelope(std::size_t n, std::size_t t);

/// Smallest t whose envelope reaches the resolvability threshold
/// theorem1_min_spread(N), i.e. the rigorous minimum query count.
std::size_t min_queries_envelope(std::size_t n);

struct AsymptoticQueries {
    std::size_t t2 = 0;  // from 4t^2 >= 2N - 2*sqrt(N)
    std::size_t t3 = 0;  // from 4N*sin^2(t/sqrt(N)) >= 2N - 2*sqrt(N)
};

AsymptoticQueries min_queries_asymptotic(std::size_t n);

/// Extremal pair for the component-gap bound: (1, 0) and (cos theta, sin theta).
/// The second-component gap equals sin theta exactly.
std::pair<StateVector, StateVector> lemma_worst_pair(double theta);

/// Component-gap bound for unit vectors with real non-negative components:
/// with Theta = arccos(1 - distance_sq/2), every per-component gap is at
/// most sin Theta (with 1e-9 slack). Inputs violating the sign hypothesis
/// are a precondition error, not a lemma failure.
bool lemma_check(const StateVector& phi1, const StateVector& phi2);

/// Maps a complex vector into the lemma hypothesis: per-component magnitudes.
/// Norm-preserving, so unit vectors stay unit.
StateVector phase_aligned(const StateVector& v);

struct BoundReport {
    std::size_t N = 0;
    double min_spread = 0.0;
    std::size_t t_envelope = 0;
    std::size_t t_asym_thm2 = 0;
    std::size_t t_asym_thm3 = 0;
    double ratio_thm2 = 0.0;  // t_asym_thm2 / sqrt(N)
    double ratio_thm3 = 0.0;  // t_asym_thm3 / sqrt(N)
    std::size_t grover_t_star = 0;
    bool tight = false;  // grover_t_star <= t_asym_thm3 + 1
};

BoundReport make_bound_report(std::size_t n);

}  // namespace qsb
