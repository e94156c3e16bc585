#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace qsb {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;      // acceptance into typed states
inline constexpr double kDriftTolerance = 1e-12;    // per-operation drift checks

/// Unit-norm vector of complex amplitudes in an N-dimensional state space.
/// Construction rejects non-finite entries and vectors off the unit sphere
/// by more than kNormTolerance.
class StateVector {
  public:
    explicit StateVector(std::vector<Amplitude> amps);

    std::size_t dim() const { return amps_.size(); }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Amplitude>& amps() const { return amps_; }

    double norm() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

  private:
    std::vector<Amplitude> amps_;
};

/// Selective phase rotation: multiplies one amplitude by e^{i*phase}.
struct QueryOp {
    std::size_t target = 0;
    double phase = std::numbers::pi;
};

StateVector uniform_state(std::size_t n);
StateVector basis_state(std::size_t n, std::size_t index);

Amplitude inner(const StateVector& u, const StateVector& v);
double distance_sq(const StateVector& u, const StateVector& v);

StateVector apply_query(const StateVector& v, const QueryOp& q);

/// Dense N x N unitary, row-major. Unitarity (U†U = I within 1e-9) is
/// checked once at construction, not at every application.
class DenseUnitary {
  public:
    DenseUnitary(std::size_t dim, std::vector<Amplitude> entries);

    std::size_t dim() const { return dim_; }
    const Amplitude& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    static DenseUnitary identity(std::size_t n);

  private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

StateVector apply_unitary(const DenseUnitary& u, const StateVector& v);

/// Deterministic random stream. Consumers never share a stream: each derives
/// its own from (seed, stream id).
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double angle();     // [0, 2*pi)
    double gaussian();  // standard normal

  private:
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed random unitary: orthonormalize a square matrix of
/// independent standard complex Gaussians. Gram-Schmidt keeps the diagonal
/// of the implicit R factor real and positive, which is the phase
/// normalization that makes the distribution exactly Haar.
DenseUnitary haar_unitary(std::size_t n, std::uint64_t seed);

/// Haar-random unit vector (normalized vector of standard complex Gaussians).
StateVector haar_state(std::size_t n, std::uint64_t seed);

}  // namespace qsb
