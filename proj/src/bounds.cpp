#include "qsb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsb/grover.hpp"

namespace qsb {

namespace {

// Backs off 1e-12 so closed forms landing exactly on an integer are not
// bumped up by round-off.
std::size_t ceil_count(double x) {
    double c = std::ceil(x - 1e-12);
    if (c < 0.0) c = 0.0;
    return static_cast<std::size_t>(c);
}

}  // namespace

double theorem1_min_spread(std::size_t n) {
    if (n == 0) throw std::invalid_argument("theorem1_min_spread: n must be >= 1");
    double nd = static_cast<double>(n);
    return 2.0 * nd - 2.0 * std::sqrt(nd);
}

double spread_about(const std::vector<StateVector>& vectors, const StateVector& ref) {
    double s = 0.0;
    for (const auto& v : vectors) s += distance_sq(v, ref);
    return s;
}

StateVector optimal_reference(const std::vector<StateVector>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("optimal_reference: empty input");
    std::size_t dim = vectors[0].dim();
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        if (vectors[a].dim() != dim)
            throw std::invalid_argument("optimal_reference: dimension mismatch");
        for (std::size_t b = a + 1; b < vectors.size(); ++b) {
            if (std::abs(inner(vectors[a], vectors[b])) > kNormTolerance)
                throw std::invalid_argument("optimal_reference: inputs are not orthogonal");
        }
    }
    std::vector<Amplitude> sum(dim, Amplitude(0.0, 0.0));
    for (const auto& v : vectors)
        for (std::size_t i = 0; i < dim; ++i) sum[i] += v[i];
    double nn = 0.0;
    for (const auto& a : sum) nn += std::norm(a);
    nn = std::sqrt(nn);
    if (nn == 0.0) throw std::invalid_argument("optimal_reference: inputs sum to zero");
    for (auto& a : sum) a /= nn;
    return StateVector(std::move(sum));
}

double theorem2_bound(std::size_t t) {
    double td = static_cast<double>(t);
    return 4.0 * td * td;
}

double theorem3_bound(std::size_t n, double t) {
    if (n == 0) throw std::invalid_argument("theorem3_bound: n must be >= 1");
    if (!std::isfinite(t)) throw std::domain_error("theorem3_bound: non-finite t");
    double root_n = std::sqrt(static_cast<double>(n));
    if (t < -kNormTolerance || t > std::numbers::pi / 2.0 * root_n + kNormTolerance)
        throw std::domain_error("theorem3_bound: t " + std::to_string(t) +
                                " outside [0, (pi/2)*sqrt(N)]");
    double s = std::sin(t / root_n);
    return 4.0 * static_cast<double>(n) * s * s;
}

bool check_step_thm2(double d_prev, double d_next) {
    if (d_prev < 0.0 || d_next < 0.0)
        throw std::invalid_argument("check_step_thm2: negative spread");
    return std::sqrt(d_next) <= std::sqrt(d_prev) + 2.0 + kNormTolerance;
}

bool check_step_thm3(double d_prev, double d_next, std::size_t n) {
    if (n == 0) throw std::invalid_argument("check_step_thm3: n must be >= 1");
    double cap = 4.0 * static_cast<double>(n);
    if (d_prev < -kNormTolerance || d_prev > cap + kNormTolerance)
        throw std::invalid_argument("check_step_thm3: D_prev outside [0, 4N]");
    double theta = theta_of_spread(d_prev, n);
    double allowed =
        d_prev + 4.0 * std::sqrt(static_cast<double>(n)) * std::sin(theta) + 4.0;
    return d_next <= allowed + kNormTolerance;
}

double spread_envelope(std::size_t n, std::size_t t) {
    if (n == 0) throw std::invalid_argument("spread_envelope: n must be >= 1");
    double cap = 4.0 * static_cast<double>(n);
    double root_n = std::sqrt(static_cast<double>(n));
    double e = 0.0;
    for (std::size_t k = 0; k < t; ++k) {
        if (e >= cap) break;  // saturated; the diameter bound is absorbing
        e = std::min(cap, e + 4.0 * root_n * std::sin(theta_of_spread(e, n)) + 4.0);
    }
    return e;
}

std::size_t min_queries_envelope(std::size_t n) {
    double target = theorem1_min_spread(n) - kNormTolerance;
    double cap = 4.0 * static_cast<double>(n);
    double root_n = std::sqrt(static_cast<double>(n));
    double e = 0.0;
    std::size_t t = 0;
    while (e < target) {
        if (e >= cap)
            throw std::logic_error("min_queries_envelope: envelope saturated below target");
        e = std::min(cap, e + 4.0 * root_n * std::sin(theta_of_spread(e, n)) + 4.0);
        ++t;
    }
    return t;
}

AsymptoticQueries min_queries_asymptotic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("min_queries_asymptotic: n must be >= 1");
    double nd = static_cast<double>(n);
    double threshold_half = (nd - std::sqrt(nd)) / 2.0;  // (2N - 2*sqrt(N)) / 4
    AsymptoticQueries q;
    q.t2 = ceil_count(std::sqrt(threshold_half));
    q.t3 = ceil_count(std::sqrt(nd) * std::asin(std::sqrt(threshold_half / nd)));
    return q;
}

std::pair<StateVector, StateVector> lemma_worst_pair(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0))
        throw std::invalid_argument("lemma_worst_pair: theta outside [0, pi/2]");
    StateVector phi1(std::vector<Amplitude>{Amplitude(1.0, 0.0), Amplitude(0.0, 0.0)});
    StateVector phi2(std::vector<Amplitude>{Amplitude(std::cos(theta), 0.0),
                                            Amplitude(std::sin(theta), 0.0)});
    return {phi1, phi2};
}

bool lemma_check(const StateVector& phi1, const StateVector& phi2) {
    if (phi1.dim() != phi2.dim())
        throw std::invalid_argument("lemma_check: dimension mismatch");
    for (const StateVector* v : {&phi1, &phi2}) {
        for (std::size_t i = 0; i < v->dim(); ++i) {
            const Amplitude& a = (*v)[i];
            if (std::abs(a.imag()) > kDriftTolerance || a.real() < -kDriftTolerance)
                throw std::invalid_argument(
                    "lemma_check: components must be real and non-negative");
        }
    }
    double d = distance_sq(phi1, phi2);
    double arg = std::clamp(1.0 - d / 2.0, -1.0, 1.0);
    double sin_theta = std::sin(std::acos(arg));
    double max_gap = 0.0;
    for (std::size_t i = 0; i < phi1.dim(); ++i)
        max_gap = std::max(max_gap, std::abs(phi1[i].real() - phi2[i].real()));
    return max_gap <= sin_theta + kNormTolerance;
}

StateVector phase_aligned(const StateVector& v) {
    std::vector<Amplitude> amps(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) amps[i] = Amplitude(std::abs(v[i]), 0.0);
    return StateVector(std::move(amps));
}

BoundReport make_bound_report(std::size_t n) {
    if (n == 0) throw std::invalid_argument("make_bound_report: n must be >= 1");
    BoundReport r;
    r.N = n;
    r.min_spread = theorem1_min_spread(n);
    r.t_envelope = min_queries_envelope(n);
    AsymptoticQueries q = min_queries_asymptotic(n);
    r.t_asym_thm2 = q.t2;
    r.t_asym_thm3 = q.t3;
    double root_n = std::sqrt(static_cast<double>(n));
    r.ratio_thm2 = static_cast<double>(q.t2) / root_n;
    r.ratio_thm3 = static_cast<double>(q.t3) / root_n;
    r.grover_t_star = optimal_iterations(n);
    r.tight = r.grover_t_star <= r.t_asym_thm3 + 1;
    return r;
}

}  // namespace qsb
