#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsb/adversary.hpp"
#include "qsb/bounds.hpp"

namespace qsb {

/// 12 significant digits, shortest form (printf %.12g). Pinning the format
/// keeps CSV and JSON artifacts byte-stable across runs.
std::string format_real(double x);

/// Rows `t,spread,theta,bound_thm2,bound_thm3,envelope`, one per recorded
/// trace row; with per_alpha, the deviations follow as delta_0..delta_{N-1}.
/// bound_thm3 is the literal closed form 4N sin^2(t/sqrt(N)) at every row,
/// even past its validity window; the envelope column is the rigorous bound.
std::string trace_csv(const SpreadTrace& trace, bool per_alpha);

struct GroverRow {
    std::size_t t = 0;
    double success_prob = 0.0;
    double spread = 0.0;
};

/// Rows `t,success_prob,spread,bound_thm2,bound_thm3,envelope`.
std::string grover_csv(const std::vector<GroverRow>& rows, std::size_t n);

std::string bound_report_json(const BoundReport& r);
std::string adversary_result_json(const AdversaryResult& r);

struct LemmaReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t dim_min = 2;
    std::size_t dim_max = 16;
    std::size_t violations = 0;
    double max_gap_minus_sin_theta = 0.0;
    std::size_t grid_points = 0;
    double grid_max_equality_error = 0.0;
    std::size_t complex_samples = 0;
    double complex_max_ratio = 0.0;
    std::size_t aligned_violations = 0;
};

std::string lemma_report_json(const LemmaReport& r);

/// Empty path writes to stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace qsb
