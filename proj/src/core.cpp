#include "qsb/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsb {

namespace {

double norm_of(const std::vector<Amplitude>& amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw std::invalid_argument("StateVector: dimension must be >= 1");
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("StateVector: non-finite amplitude");
    }
    double n = norm_of(amps_);
    if (std::abs(n - 1.0) > kNormTolerance)
        throw std::invalid_argument("StateVector: norm " + std::to_string(n) + " is not 1");
}

double StateVector::norm() const { return norm_of(amps_); }

StateVector uniform_state(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_state: n must be >= 1");
    double a = 1.0 / std::sqrt(static_cast<double>(n));
    return StateVector(std::vector<Amplitude>(n, Amplitude(a, 0.0)));
}

StateVector basis_state(std::size_t n, std::size_t index) {
    if (n == 0) throw std::invalid_argument("basis_state: n must be >= 1");
    if (index >= n) throw std::invalid_argument("basis_state: index out of range");
    std::vector<Amplitude> amps(n, Amplitude(0.0, 0.0));
    amps[index] = Amplitude(1.0, 0.0);
    return StateVector(std::move(amps));
}

Amplitude inner(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Amplitude s(0.0, 0.0);
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double distance_sq(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("distance_sq: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::norm(u[i] - v[i]);
    return s;
}

StateVector apply_query(const StateVector& v, const QueryOp& q) {
    if (q.target >= v.dim()) throw std::invalid_argument("apply_query: target out of range");
    if (!std::isfinite(q.phase)) throw std::invalid_argument("apply_query: non-finite phase");
    // The default phase is an exact sign flip; std::polar would leave a
    // ~1e-16 imaginary residue there.
    Amplitude factor = (q.phase == std::numbers::pi) ? Amplitude(-1.0, 0.0)
                                                     : std::polar(1.0, q.phase);
    std::vector<Amplitude> amps = v.amps();
    amps[q.target] *= factor;
    return StateVector(std::move(amps));
}

DenseUnitary::DenseUnitary(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw std::invalid_argument("DenseUnitary: dimension must be >= 1");
    if (entries_.size() != dim_ * dim_)
        throw std::invalid_argument("DenseUnitary: entry count does not match dimension");
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw std::invalid_argument("DenseUnitary: non-finite entry");
    }
    // U†U = I, checked once here so applications stay O(N^2).
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            Amplitude s(0.0, 0.0);
            for (std::size_t k = 0; k < dim_; ++k) s += std::conj(at(k, i)) * at(k, j);
            double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expected) > kNormTolerance)
                throw std::invalid_argument("DenseUnitary: matrix is not unitary");
        }
    }
}

DenseUnitary DenseUnitary::identity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("DenseUnitary::identity: n must be >= 1");
    std::vector<Amplitude> e(n * n, Amplitude(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Amplitude(1.0, 0.0);
    return DenseUnitary(n, std::move(e));
}

StateVector apply_unitary(const DenseUnitary& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("apply_unitary: dimension mismatch");
    std::size_t n = v.dim();
    std::vector<Amplitude> out(n, Amplitude(0.0, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        Amplitude s(0.0, 0.0);
        for (std::size_t c = 0; c < n; ++c) s += u.at(r, c) * v[c];
        out[r] = s;
    }
    return StateVector(std::move(out));
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(state);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
    // 53 random bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::angle() { return uniform() * 2.0 * std::numbers::pi; }

double Rng::gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(a);
    has_cached_gaussian_ = true;
    return r * std::cos(a);
}

DenseUnitary haar_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("haar_unitary: n must be >= 1");
    Rng rng(seed);
    // Columns of independent standard complex Gaussians.
    std::vector<std::vector<Amplitude>> cols(n, std::vector<Amplitude>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            double re = rng.gaussian();
            double im = rng.gaussian();
            cols[c][r] = Amplitude(re, im);
        }
    // Modified Gram-Schmidt, two passes per column for numerical hygiene.
    for (std::size_t c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < c; ++k) {
                Amplitude proj(0.0, 0.0);
                for (std::size_t r = 0; r < n; ++r) proj += std::conj(cols[k][r]) * cols[c][r];
                for (std::size_t r = 0; r < n; ++r) cols[c][r] -= proj * cols[k][r];
            }
        }
        double nn = 0.0;
        for (std::size_t r = 0; r < n; ++r) nn += std::norm(cols[c][r]);
        nn = std::sqrt(nn);
        if (nn == 0.0) throw std::runtime_error("haar_unitary: degenerate sample");
        for (std::size_t r = 0; r < n; ++r) cols[c][r] /= nn;
    }
    std::vector<Amplitude> entries(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = cols[c][r];
    return DenseUnitary(n, std::move(entries));
}

StateVector haar_state(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("haar_state: n must be >= 1");
    Rng rng(seed);
    std::vector<Amplitude> amps(n);
    double nn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        amps[i] = Amplitude(rng.gaussian(), rng.gaussian());
        nn += std::norm(amps[i]);
    }
    nn = std::sqrt(nn);
    if (nn == 0.0) throw std::runtime_error("haar_state: degenerate sample");
    for (auto& a : amps) a /= nn;
    return StateVector(std::move(amps));
}

}  // namespace qsb
