#include "rbp/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rbp/tiles.hpp"

namespace rbp {

const char* model_name(Model m) { return m == Model::Sites ? "sites" : "tiles"; }
const char* rule_name(RuleKind r) { return r == RuleKind::Recovery ? "recovery" : "bootstrap"; }

Estimate wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double z = 1.959963984540054;
    const double t = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (phat + z2 / (2.0 * t)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
    Estimate e;
    e.point = phat;
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    e.trials = trials;
    e.successes = successes;
    return e;
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// runs trials [0, trials) with fn(trial) -> {success, budget_hit} and sums
template <typename Fn>
Estimate run_trials(uint64_t trials, uint64_t seed, int threads, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> successes{0};
    std::atomic<uint64_t> budget_hits{0};

    auto worker = [&]() {
        DynamicsEngine engine;
        uint64_t local_succ = 0, local_budget = 0;
        for (;;) {
            uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= trials) break;
            auto [succ, budget] = fn(engine, t);
            local_succ += succ ? 1 : 0;
            local_budget += budget ? 1 : 0;
        }
        successes.fetch_add(local_succ, std::memory_order_relaxed);
        budget_hits.fetch_add(local_budget, std::memory_order_relaxed);
    };

    int nths = resolve_threads(threads);
    if (nths <= 1 || trials <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nths; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Estimate e = wilson_interval(successes.load(), trials);
    e.budget_exceeded = budget_hits.load();
    e.seed = seed;
    e.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

}  // namespace

Estimate estimate_percolation(int n, double p, Model model, RuleKind rule, uint64_t trials,
                              uint64_t seed, int threads, std::optional<uint64_t> step_budget,
                              uint64_t cell) {
    if (n < 1) throw std::invalid_argument("estimate_percolation: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("estimate_percolation: p outside [0,1]");
    if (trials < 1) throw std::invalid_argument("estimate_percolation: trials must be >= 1");

    return run_trials(trials, seed, threads, [&](DynamicsEngine& engine, uint64_t trial) {
        StreamKey key = make_stream(seed, cell, trial);
        Grid x0 = model == Model::Sites
                      ? sample_sites(n, p, key)
                      : Grid::from_sites(n, project_sites(sample_tile_config(n, p, key)));
        auto [perc, budget] = engine.decide_percolation(x0, rule, step_budget);
        return std::pair<bool, bool>(perc, budget);
    });
}

Estimate estimate_crossing(int m, int h, double p, Model model, uint64_t trials,
                           uint64_t seed, int threads, uint64_t cell) {
    if (m < 1 || h < 1) throw std::invalid_argument("estimate_crossing: m,h must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("estimate_crossing: p outside [0,1]");
    if (trials < 1) throw std::invalid_argument("estimate_crossing: trials must be >= 1");

    if (model == Model::Tiles) {
        // embed the rectangle with margin 1 so no tile is clipped by the grid
        const int nuniv = std::max(m + 1, h + 1) + 1;
        const Rect r{2, m + 1, 2, h + 1};
        return run_trials(trials, seed, threads, [&](DynamicsEngine&, uint64_t trial) {
            StreamKey key = make_stream(seed, cell, trial);
            TileConfig cfg = sample_tile_config_rect(nuniv, r, p, key);
            bool trav = tile_traversable(cfg, r, Direction::LeftRight);
            bool nogap = !has_double_gap(cfg, r);
            if (trav != nogap)
                throw std::logic_error("tile crossing and double-gap criterion disagree");
            return std::pair<bool, bool>(trav, false);
        });
    }

    // Sites: recovery-rule traversal of the rectangle, phantom column on the
    // left, far column dropped.
    return run_trials(trials, seed, threads, [&](DynamicsEngine& engine, uint64_t trial) {
        StreamKey key = make_stream(seed, cell, trial);
        Grid sampled = sample_sites(m, h, p, key);
        Grid universe(m, h);  // column 1 phantom, columns 2..m are x=1..m-1
        for (int y = 1; y <= h; ++y) {
            universe.set(1, y, true);
            for (int x = 1; x <= m - 1; ++x)
                if (sampled.get(x, y)) universe.set(x + 1, y, true);
        }
        bool trav = engine.decide_percolation(universe, RuleKind::Recovery).first;
        return std::pair<bool, bool>(trav, false);
    });
}

CriticalSearch search_critical_p(int n, uint64_t trials_per_probe, uint64_t seed, double tol,
                                 Model model, RuleKind rule, int threads,
                                 std::optional<uint64_t> step_budget) {
    if (n < 2) throw std::invalid_argument("search_critical_p: n must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("search_critical_p: tol must be > 0");

    CriticalSearch out;
    double lo = 0.0, hi = 1.0;
    uint64_t probe_idx = 0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        Estimate est = estimate_percolation(n, mid, model, rule, trials_per_probe, seed,
                                            threads, step_budget, probe_idx);
        out.probes.push_back({mid, est});
        if (est.point >= 0.5)
            hi = mid;
        else
            lo = mid;
        ++probe_idx;
    }
    out.lo = lo;
    out.hi = hi;

    // monotonicity audit: a probe at smaller p must not beat a probe at
    // larger p beyond the combined confidence intervals
    for (size_t i = 0; i < out.probes.size(); ++i)
        for (size_t j = 0; j < out.probes.size(); ++j) {
            if (out.probes[i].p >= out.probes[j].p) continue;
            if (out.probes[i].est.ci_low > out.probes[j].est.ci_high) {
                out.warning = true;
                out.lo = std::min(out.lo, out.probes[i].p);
                out.hi = std::max(out.hi, out.probes[j].p);
            }
        }
    out.p_hat = 0.5 * (out.lo + out.hi);
    return out;
}

std::vector<SweepRow> run_sweep(std::span<const SweepCell> cells, uint64_t seed, int threads,
                                std::optional<uint64_t> step_budget) {
    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        SweepRow row;
        row.cell = cells[i];
        try {
            row.est = estimate_percolation(cells[i].n, cells[i].p, cells[i].model,
                                           cells[i].rule, cells[i].trials, seed, threads,
                                           step_budget, i);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rbp
