#pragma once

#include <string>
#include <vector>

#include "rbp/montecarlo.hpp"

namespace rbp {

// stable shortest-ish decimal rendering; '.' separator regardless of locale
std::string format_g17(double v);

// Key/value metadata echoed into every output so a run can be reproduced.
// Excludes anything schedule-dependent (threads, wall time).
struct OutputMeta {
    std::string command;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config;  // in emission order
};

// '#'-prefixed preamble lines: version, command, seed, config entries
std::string meta_preamble(const OutputMeta& meta);

// RFC-4180-style table, LF endings, preceded by the meta preamble
std::string sweep_csv(const std::vector<SweepRow>& rows, const OutputMeta& meta);
std::string sweep_json(const std::vector<SweepRow>& rows, const OutputMeta& meta);

std::string estimate_csv(const Estimate& est, const OutputMeta& meta);
std::string estimate_json(const Estimate& est, const OutputMeta& meta);

struct ThresholdRow {
    int n = 0;
    CriticalSearch search;
};

// header: n,p_hat,lo,hi,scaled,predicted
std::string thresholds_csv(const std::vector<ThresholdRow>& rows, const OutputMeta& meta);
std::string thresholds_json(const std::vector<ThresholdRow>& rows, const OutputMeta& meta);

}  // namespace rbp
