#include "qsb/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsb/bounds.hpp"

namespace qsb {

Schedule random_schedule(std::size_t n, std::size_t t, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_schedule: n must be >= 1");
    Schedule sched;
    sched.dim = n;
    sched.stages.reserve(t);
    for (std::size_t k = 0; k < t; ++k)
        sched.stages.push_back(
            Stage{haar_unitary(n, derive_seed(seed, k)), true, std::numbers::pi});
    return sched;
}

Schedule phased_schedule(std::size_t n, const std::vector<double>& params) {
    if (params.size() % 2 != 0)
        throw std::invalid_argument("phased_schedule: parameter count must be even");
    std::size_t t = params.size() / 2;
    Schedule sched;
    sched.dim = n;
    sched.stages.reserve(t);
    for (std::size_t k = 0; k < t; ++k)
        sched.stages.push_back(Stage{PhasedDiffusion{params[t + k]}, true, params[k]});
    return sched;
}

double phased_spread(std::size_t n, const std::vector<double>& params) {
    if (n == 0) throw std::invalid_argument("phased_spread: n must be >= 1");
    if (params.size() % 2 != 0)
        throw std::invalid_argument("phased_spread: parameter count must be even");
    std::size_t t = params.size() / 2;
    double nd = static_cast<double>(n);
    double sa = 1.0 / std::sqrt(nd);
    double sb = std::sqrt((nd - 1.0) / nd);

    // Trajectory state a|target> + b|rest>, rest = uniform over the other
    // n - 1 axes. The never-queried reference stays on the uniform state up
    // to the accumulated diffusion phase.
    Amplitude a(sa, 0.0);
    Amplitude b(sb, 0.0);
    Amplitude ref_phase(1.0, 0.0);

    double d_prev = 0.0;
    double env = 0.0;
    double cap = 4.0 * nd;
    for (std::size_t k = 0; k < t; ++k) {
        Amplitude rot = std::polar(1.0, params[t + k]);
        Amplitude overlap = sa * a + sb * b;
        Amplitude shift = (1.0 - rot) * overlap;
        a -= shift * sa;
        b -= shift * sb;
        ref_phase *= rot;
        a *= (params[k] == std::numbers::pi) ? Amplitude(-1.0, 0.0)
                                             : std::polar(1.0, params[k]);

        double overlap_ref = (std::conj(ref_phase) * (sa * a + sb * b)).real();
        double d = nd * (2.0 - 2.0 * overlap_ref);
        if (d < 0.0) d = 0.0;  // round-off guard at zero deviation
        env = std::min(cap, env + 4.0 * std::sqrt(nd) * std::sin(theta_of_spread(env, n)) + 4.0);
        if (!check_step_thm2(d_prev, d) || !check_step_thm3(d_prev, d, n) ||
            d > env + kNormTolerance)
            throw std::logic_error("phased_spread: candidate trace violates a bound");
        d_prev = d;
    }
    return d_prev;
}

namespace {

double wrap_angle(double x) {
    double two_pi = 2.0 * std::numbers::pi;
    x = std::fmod(x, two_pi);
    if (x < 0.0) x += two_pi;
    return x;
}

}  // namespace

AdversaryResult maximize_spread(std::size_t n, std::size_t t, std::size_t restarts,
                                std::uint64_t seed) {
    if (n == 0 || n > kAdversaryDimCap)
        throw std::invalid_argument("maximize_spread: n outside [1, " +
                                    std::to_string(kAdversaryDimCap) + "]");
    if (t == 0 || t > kAdversaryStepCap)
        throw std::invalid_argument("maximize_spread: t outside [1, " +
                                    std::to_string(kAdversaryStepCap) + "]");
    if (restarts == 0) throw std::invalid_argument("maximize_spread: restarts must be >= 1");

    constexpr std::size_t kMaxEvals = 10000;
    constexpr double kInitialStep = std::numbers::pi / 8.0;
    constexpr double kMinStep = 1e-6;

    AdversaryResult result;
    result.N = n;
    result.t = t;
    result.envelope = spread_envelope(n, t);
    result.restarts = restarts;
    result.seed = seed;

    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> params(2 * t, std::numbers::pi);
        if (r > 0) {
            Rng rng(seed, r);
            for (auto& p : params) p = rng.angle();
        }
        double best = phased_spread(n, params);
        std::size_t evals = 1;
        double step = kInitialStep;
        while (step >= kMinStep && evals < kMaxEvals) {
            bool improved = false;
            for (std::size_t i = 0; i < params.size() && evals < kMaxEvals; ++i) {
                for (double delta : {step, -step}) {
                    if (evals >= kMaxEvals) break;
                    std::vector<double> cand = params;
                    cand[i] = wrap_angle(params[i] + delta);
                    double v = phased_spread(n, cand);
                    ++evals;
                    if (v > best) {
                        best = v;
                        params = std::move(cand);
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step /= 2.0;
        }
        if (best > result.best_spread || r == 0) {
            result.best_spread = best;
            result.best_parameters = params;
        }
    }
    result.tightness = result.best_spread / result.envelope;
    return result;
}

}  // namespace qsb
