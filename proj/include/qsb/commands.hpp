#pragma once

#include <cstdint>
#include <string>

#include "qsb/ensemble.hpp"

namespace qsb {

struct RunConfig {
    std::string command;
    std::size_t n = 0;
    std::size_t steps = 0;
    std::uint64_t seed = 0;  // fixed default so every run reproduces by default
    std::size_t restarts = 0;
    std::string out;        // empty writes to stdout
    std::string trace_out;  // adversary: optional winning-trace CSV
    std::string format;     // fixed per command: csv or json
    bool per_alpha = false;
    std::size_t max_dim = kDefaultDimCap;
    std::string schedule;  // grover | random
    std::size_t samples = 100000;
    std::string inject_fault;
};

// Exit codes: 0 success, 1 invariant violation, 2 usage error.
int cmd_grover(const RunConfig& cfg);
int cmd_ensemble(const RunConfig& cfg);
int cmd_bounds(const RunConfig& cfg);
int cmd_adversary(const RunConfig& cfg);
int cmd_lemma(const RunConfig& cfg);
int cmd_selfcheck(const RunConfig& cfg);

}  // namespace qsb
