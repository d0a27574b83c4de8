#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbp/dynamics.hpp"
#include "rbp/grid.hpp"

namespace rbp {

enum class Model { Sites, Tiles };

const char* model_name(Model m);
const char* rule_name(RuleKind r);

struct Estimate {
    double point = 0;
    double ci_low = 0;   // Wilson 95%
    double ci_high = 0;
    uint64_t trials = 0;
    uint64_t successes = 0;
    uint64_t budget_exceeded = 0;  // trials stopped by the step budget, reported separately
    uint64_t seed = 0;
    double wall_time = 0;  // seconds; informational, never part of tables
};

Estimate wilson_interval(uint64_t successes, uint64_t trials);

// i.i.d. trials of "X0 percolates", X0 ~ Bin([n]^2, p) for Sites or a tile
// configuration with tile probability p^2 for Tiles. Trial t of cell c draws
// from the stream (seed, c, t); results do not depend on thread count.
Estimate estimate_percolation(int n, double p, Model model, RuleKind rule, uint64_t trials,
                              uint64_t seed, int threads = 0,
                              std::optional<uint64_t> step_budget = {}, uint64_t cell = 0);

// frequency of "the (m,h) rectangle is traversable left to right". For Tiles
// the trial samples anchors in the rectangle and the traversal event
// coincides with the absence of a double gap (verified every trial).
Estimate estimate_crossing(int m, int h, double p, Model model, uint64_t trials,
                           uint64_t seed, int threads = 0, uint64_t cell = 0);

struct Probe {
    double p = 0;
    Estimate est;
};

struct CriticalSearch {
    double p_hat = 0;
    double lo = 0, hi = 0;
    bool warning = false;  // probe sequence contradicted monotonicity beyond CI noise
    std::vector<Probe> probes;
};

// bisection on p against target 1/2, probe i uses cell index i
CriticalSearch search_critical_p(int n, uint64_t trials_per_probe, uint64_t seed, double tol,
                                 Model model = Model::Sites,
                                 RuleKind rule = RuleKind::Recovery, int threads = 0,
                                 std::optional<uint64_t> step_budget = {});

struct SweepCell {
    int n = 0;
    double p = 0;
    Model model = Model::Sites;
    RuleKind rule = RuleKind::Recovery;
    uint64_t trials = 0;
};

struct SweepRow {
    SweepCell cell;
    Estimate est;
    std::string error;  // nonempty when the cell failed
};

// one row per cell, in input order; cell i derives its streams from (seed, i)
std::vector<SweepRow> run_sweep(std::span<const SweepCell> cells, uint64_t seed,
                                int threads = 0, std::optional<uint64_t> step_budget = {});

}  // namespace rbp
