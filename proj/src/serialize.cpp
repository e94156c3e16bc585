#include "qsb/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace qsb {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string format_int(std::size_t x) { return std::to_string(x); }

double closed_form_bound(std::size_t n, std::size_t t) {
    double s = std::sin(static_cast<double>(t) / std::sqrt(static_cast<double>(n)));
    return 4.0 * static_cast<double>(n) * s * s;
}

// Envelope values for t = 0..t_max in one pass of the recursion.
std::vector<double> envelope_sequence(std::size_t n, std::size_t t_max) {
    std::vector<double> env(t_max + 1, 0.0);
    for (std::size_t k = 0; k < t_max; ++k)
        env[k + 1] = std::min(
            4.0 * static_cast<double>(n),
            env[k] + 4.0 * std::sqrt(static_cast<double>(n)) *
                         std::sin(theta_of_spread(env[k], n)) +
                4.0);
    return env;
}

class JsonWriter {
  public:
    void field(const std::string& key, const std::string& raw_value) {
        body_ += body_.empty() ? "" : ",";
        body_ += "\"" + key + "\":" + raw_value;
    }
    void field(const std::string& key, std::size_t v) { field(key, format_int(v)); }
    void field(const std::string& key, double v) { field(key, format_real(v)); }
    void field(const std::string& key, bool v) { field(key, std::string(v ? "true" : "false")); }

    std::string str() const { return "{" + body_ + "}\n"; }

  private:
    std::string body_;
};

}  // namespace

std::string trace_csv(const SpreadTrace& trace, bool per_alpha) {
    std::size_t t_max = 0;
    for (const auto& row : trace.rows) t_max = std::max(t_max, row.queries);
    std::vector<double> env = envelope_sequence(trace.dim, t_max);

    std::string out = "t,spread,theta,bound_thm2,bound_thm3,envelope";
    if (per_alpha)
        for (std::size_t i = 0; i < trace.dim; ++i) out += ",delta_" + format_int(i);
    out += "\n";

    for (const auto& row : trace.rows) {
        out += format_int(row.queries);
        out += "," + format_real(row.spread);
        out += "," + format_real(row.theta);
        out += "," + format_real(theorem2_bound(row.queries));
        out += "," + format_real(closed_form_bound(trace.dim, row.queries));
        out += "," + format_real(env[row.queries]);
        if (per_alpha)
            for (double d : row.per_alpha) out += "," + format_real(d);
        out += "\n";
    }
    return out;
}

std::string grover_csv(const std::vector<GroverRow>& rows, std::size_t n) {
    std::size_t t_max = 0;
    for (const auto& row : rows) t_max = std::max(t_max, row.t);
    std::vector<double> env = envelope_sequence(n, t_max);

    std::string out = "t,success_prob,spread,bound_thm2,bound_thm3,envelope\n";
    for (const auto& row : rows) {
        out += format_int(row.t);
        out += "," + format_real(row.success_prob);
        out += "," + format_real(row.spread);
        out += "," + format_real(theorem2_bound(row.t));
        out += "," + format_real(closed_form_bound(n, row.t));
        out += "," + format_real(env[row.t]);
        out += "\n";
    }
    return out;
}

std::string bound_report_json(const BoundReport& r) {
    JsonWriter w;
    w.field("N", r.N);
    w.field("min_spread", r.min_spread);
    w.field("t_envelope", r.t_envelope);
    w.field("t_asym_thm2", r.t_asym_thm2);
    w.field("t_asym_thm3", r.t_asym_thm3);
    w.field("ratio_thm2", r.ratio_thm2);
    w.field("ratio_thm3", r.ratio_thm3);
    w.field("grover_t_star", r.grover_t_star);
    w.field("tight", r.tight);
    return w.str();
}

std::string adversary_result_json(const AdversaryResult& r) {
    std::string params = "[";
    for (std::size_t i = 0; i < r.best_parameters.size(); ++i) {
        if (i > 0) params += ",";
        params += format_real(r.best_parameters[i]);
    }
    params += "]";

    JsonWriter w;
    w.field("N", r.N);
    w.field("t", r.t);
    w.field("best_spread", r.best_spread);
    w.field("envelope", r.envelope);
    w.field("tightness", r.tightness);
    w.field("best_parameters", params);
    w.field("restarts", r.restarts);
    w.field("seed", static_cast<std::size_t>(r.seed));
    return w.str();
}

std::string lemma_report_json(const LemmaReport& r) {
    JsonWriter w;
    w.field("samples", r.samples);
    w.field("seed", static_cast<std::size_t>(r.seed));
    w.field("dim_min", r.dim_min);
    w.field("dim_max", r.dim_max);
    w.field("violations", r.violations);
    w.field("max_gap_minus_sin_theta", r.max_gap_minus_sin_theta);
    w.field("grid_points", r.grid_points);
    w.field("grid_max_equality_error", r.grid_max_equality_error);
    w.field("complex_samples", r.complex_samples);
    w.field("complex_max_ratio", r.complex_max_ratio);
    w.field("aligned_violations", r.aligned_violations);
    w.field("complex_normalization",
            std::string("\"per-component magnitudes before the gap check\""));
    return w.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace qsb
