#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rbp/grid.hpp"

namespace rbp {

enum class RuleKind { Recovery, Bootstrap };

struct Outcome {
    enum class Kind { Percolated, Cycle, Extinct, BudgetExceeded };

    Kind kind = Kind::BudgetExceeded;
    uint64_t t_stop = 0;
    uint64_t period = 0;              // Cycle only
    std::vector<uint64_t> digests;    // per-step state digests when requested

    bool operator==(const Outcome&) const = default;
};

struct RunOptions {
    std::optional<uint64_t> max_steps;
    // Stop with Percolated as soon as the bootstrap closure of the permanent
    // (domino) set covers the grid. Equivalent to eventual percolation, but
    // t_stop is then the decision step, not the fill step.
    bool early_span_exit = false;
    bool record_digests = false;
    std::function<void(uint64_t t, int64_t population)> on_step;
};

// one simultaneous update, input unmodified
Grid step_recovery(const Grid& g);
Grid step_bootstrap(const Grid& g);
Grid step(const Grid& g, RuleKind rule);

// sites of g having an l1-adjacent infected partner; such sites stay infected
// forever under the recovery rule
Grid domino_set(const Grid& g);

// least fixpoint of the 2-neighbour bootstrap map containing g
Grid bootstrap_closure(const Grid& g);

// Reusable trajectory runner. Holds all working buffers so Monte Carlo
// workers can run many trials without reallocating.
//
// Steps are computed with a double-step delta scheme: a row of X_{t+1} can be
// copied from X_{t-1} whenever X_t agrees with X_{t-2} on the row and its two
// neighbours, which makes period-2 background (corner tiles) free. Cycle
// detection keeps a digest -> state table that is reset whenever the
// permanent set grows; a digest hit is confirmed by bit-exact comparison.
class DynamicsEngine {
public:
    Outcome run(const Grid& x0, RuleKind rule, const RunOptions& opt = {});

    // Exact percolation decision with certificate short-cuts:
    //  - bootstrap closure of X0 not full      -> never percolates
    //  - bootstrap closure of domino set full  -> percolates
    //  - otherwise simulate (early_span_exit) until cycle/extinction/budget.
    // Returns {percolated, budget_exceeded}.
    std::pair<bool, bool> decide_percolation(const Grid& x0, RuleKind rule,
                                             std::optional<uint64_t> step_budget = {});

private:
    struct StateBuf {
        Grid g;
        std::vector<uint64_t> rowhash;  // 1-based, rowhash[y]
        std::vector<uint8_t> delta;     // rows changed by the last write
        uint64_t digest = 0;
        int64_t pop = 0;
    };

    struct Snapshot {
        uint64_t t = 0;
        std::vector<uint64_t> bits;
    };

    void reset(const Grid& x0);
    void init_buf_meta(StateBuf& b);
    // write successor of src into dst; rows outside the active set already
    // hold the correct value. Returns true if anything changed.
    void write_step(RuleKind rule, const StateBuf& src, StateBuf& dst, bool all_rows);
    void update_domino(const StateBuf& state);
    bool closure_of_domino_is_full();

    int h_ = 0;
    int wpr_ = 0;
    uint64_t lastmask_ = 0;
    int64_t area_ = 0;
    StateBuf buf_[2];
    Grid dgrid_;                  // permanent set D_t
    int64_t dpop_ = 0;
    std::vector<uint64_t> scratch_;
    std::vector<uint64_t> rowtmp_;
    std::unordered_map<uint64_t, Snapshot> table_;
    bool pending_valid_ = false;
    uint64_t pending_digest_ = 0;
    uint64_t pending_t_ = 0;
};

Outcome run_dynamics(const Grid& x0, RuleKind rule, const RunOptions& opt = {});

uint64_t grid_digest(const Grid& g);

}  // namespace rbp
