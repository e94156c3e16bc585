#include "qsb/grover.hpp"

#include <cmath>
#include <stdexcept>

namespace qsb {

double grover_angle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("grover_angle: n must be >= 1");
    return std::asin(1.0 / std::sqrt(static_cast<double>(n)));
}

double success_probability(std::size_t n, std::size_t t) {
    double theta = grover_angle(n);
    double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
    return s * s;
}

std::size_t optimal_iterations(std::size_t n) {
    double theta = grover_angle(n);
    double x = std::numbers::pi / (4.0 * theta) - 0.5;
    // Nearest integer with exact halves rounded down. Taking the argmax over
    // the rounding candidates keeps half-boundaries (where x itself carries
    // round-off) exact: ties and sub-1e-12 improvements go to the cheaper
    // count.
    std::size_t lo = (x <= 0.5) ? 0 : static_cast<std::size_t>(std::floor(x - 0.5));
    std::size_t best = lo;
    double best_p = success_probability(n, lo);
    for (std::size_t t = lo + 1; t <= lo + 2; ++t) {
        double p = success_probability(n, t);
        if (p > best_p + 1e-12) {
            best = t;
            best_p = p;
        }
    }
    return best;
}

double grover_spread_exact(std::size_t n, std::size_t t) {
    double theta = grover_angle(n);
    double s = std::sin(static_cast<double>(t) * theta);
    return 4.0 * static_cast<double>(n) * s * s;
}

Schedule grover_schedule(std::size_t n, std::size_t steps) {
    if (n == 0) throw std::invalid_argument("grover_schedule: n must be >= 1");
    Schedule sched;
    sched.dim = n;
    if (steps >= 1) {
        sched.stages.push_back(Stage{Identity{}, true, std::numbers::pi});
        for (std::size_t k = 1; k < steps; ++k)
            sched.stages.push_back(Stage{Diffusion{}, true, std::numbers::pi});
    }
    sched.stages.push_back(Stage{Diffusion{}, false, std::numbers::pi});
    return sched;
}

TwoDimState TwoDimState::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("TwoDimState::uniform: n must be >= 1");
    double a = 1.0 / std::sqrt(static_cast<double>(n));
    return TwoDimState{n, a, n > 1 ? a : 0.0};
}

TwoDimState TwoDimState::iterate() const {
    if (dim == 0) throw std::invalid_argument("TwoDimState: uninitialized");
    double a = -target_amp;
    double m = a + static_cast<double>(dim - 1) * rest_amp;
    double shift = 2.0 * m / static_cast<double>(dim);
    TwoDimState next;
    next.dim = dim;
    next.target_amp = shift - a;
    next.rest_amp = dim > 1 ? shift - rest_amp : 0.0;
    return next;
}

}  // namespace qsb
