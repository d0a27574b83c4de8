#include "rbp/dynamics.hpp"

#include <cassert>
#include <cstring>

namespace rbp {
namespace {

constexpr uint64_t kRowSalt = 0x5851f42d4c957f2dULL;

inline uint64_t hash_row(int y, const uint64_t* row, int wpr) {
    uint64_t h = mix64(kRowSalt + static_cast<uint64_t>(y));
    for (int w = 0; w < wpr; ++w) h = mix64(h ^ row[w]);
    return h;
}

// One output row of the update. up/down may be null at the boundary; counts
// use only in-range sites.
inline void step_row(RuleKind rule, const uint64_t* cur, const uint64_t* up,
                     const uint64_t* down, int wpr, uint64_t lastmask, uint64_t* out) {
    for (int w = 0; w < wpr; ++w) {
        uint64_t C = cur[w];
        uint64_t L = (C << 1) | (w > 0 ? cur[w - 1] >> 63 : 0);
        uint64_t R = (C >> 1) | (w + 1 < wpr ? cur[w + 1] << 63 : 0);
        uint64_t U = up ? up[w] : 0;
        uint64_t D = down ? down[w] : 0;
        uint64_t c0 = L & R, s0 = L ^ R;
        uint64_t c1 = U & D, s1 = U ^ D;
        uint64_t ge2 = c0 | c1 | (s0 & s1);
        if (rule == RuleKind::Recovery) {
            uint64_t ge1 = L | R | U | D;
            out[w] = ge2 | (C & ge1);
        } else {
            out[w] = C | ge2;
        }
    }
    out[wpr - 1] &= lastmask;
}

inline void domino_row(const uint64_t* cur, const uint64_t* up, const uint64_t* down,
                       int wpr, uint64_t lastmask, uint64_t* out) {
    for (int w = 0; w < wpr; ++w) {
        uint64_t C = cur[w];
        uint64_t L = (C << 1) | (w > 0 ? cur[w - 1] >> 63 : 0);
        uint64_t R = (C >> 1) | (w + 1 < wpr ? cur[w + 1] << 63 : 0);
        uint64_t U = up ? up[w] : 0;
        uint64_t D = down ? down[w] : 0;
        out[w] = C & (L | R | U | D);
    }
    out[wpr - 1] &= lastmask;
}

int64_t row_pop(const uint64_t* row, int wpr) {
    int64_t c = 0;
    for (int w = 0; w < wpr; ++w) c += std::popcount(row[w]);
    return c;
}

// Gauss-Seidel sweeps to the bootstrap closure; alternating row order, with
// an in-row loop so horizontal cascades settle within a pass.
void closure_sweeps(uint64_t* bits, int nrows, int wpr, uint64_t lastmask) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int dir = 0; dir < 2; ++dir) {
            for (int i = 0; i < nrows; ++i) {
                int y = dir == 0 ? i + 1 : nrows - i;
                uint64_t* r = bits + static_cast<size_t>(y - 1) * wpr;
                const uint64_t* up = y > 1 ? r - wpr : nullptr;
                const uint64_t* dn = y < nrows ? r + wpr : nullptr;
                for (;;) {
                    bool row_changed = false;
                    for (int w = 0; w < wpr; ++w) {
                        uint64_t C = r[w];
                        uint64_t L = (C << 1) | (w > 0 ? r[w - 1] >> 63 : 0);
                        uint64_t R = (C >> 1) | (w + 1 < wpr ? r[w + 1] << 63 : 0);
                        uint64_t U = up ? up[w] : 0;
                        uint64_t D = dn ? dn[w] : 0;
                        uint64_t c0 = L & R, s0 = L ^ R;
                        uint64_t c1 = U & D, s1 = U ^ D;
                        uint64_t nw = C | c0 | c1 | (s0 & s1);
                        if (w == wpr - 1) nw &= lastmask;
                        if (nw != C) {
                            r[w] = nw;
                            row_changed = true;
                        }
                    }
                    if (!row_changed) break;
                    changed = true;
                }
            }
        }
    }
}

bool words_full(const std::vector<uint64_t>& bits, int nrows, int wpr, uint64_t lastmask) {
    for (int y = 0; y < nrows; ++y) {
        const uint64_t* r = bits.data() + static_cast<size_t>(y) * wpr;
        for (int w = 0; w < wpr - 1; ++w)
            if (r[w] != ~0ULL) return false;
        if (r[wpr - 1] != lastmask) return false;
    }
    return true;
}

}  // namespace

Grid step(const Grid& g, RuleKind rule) {
    Grid out(g.width(), g.height());
    const int h = g.height(), wpr = g.words_per_row();
    const uint64_t mask = g.last_word_mask();
    for (int y = 1; y <= h; ++y) {
        step_row(rule, g.row(y), y < h ? g.row(y + 1) : nullptr,
                 y > 1 ? g.row(y - 1) : nullptr, wpr, mask, out.row(y));
    }
    return out;
}

Grid step_recovery(const Grid& g) { return step(g, RuleKind::Recovery); }
Grid step_bootstrap(const Grid& g) { return step(g, RuleKind::Bootstrap); }

Grid domino_set(const Grid& g) {
    Grid out(g.width(), g.height());
    const int h = g.height(), wpr = g.words_per_row();
    const uint64_t mask = g.last_word_mask();
    for (int y = 1; y <= h; ++y) {
        domino_row(g.row(y), y < h ? g.row(y + 1) : nullptr,
                   y > 1 ? g.row(y - 1) : nullptr, wpr, mask, out.row(y));
    }
    return out;
}

Grid bootstrap_closure(const Grid& g) {
    Grid out = g;
    closure_sweeps(out.words().data(), g.height(), g.words_per_row(), g.last_word_mask());
    return out;
}

uint64_t grid_digest(const Grid& g) {
    uint64_t d = 0;
    for (int y = 1; y <= g.height(); ++y) d ^= hash_row(y, g.row(y), g.words_per_row());
    return d;
}

void DynamicsEngine::init_buf_meta(StateBuf& b) {
    b.rowhash.assign(h_ + 1, 0);
    b.delta.assign(h_ + 2, 0);
    b.digest = 0;
    b.pop = 0;
    for (int y = 1; y <= h_; ++y) {
        b.rowhash[y] = hash_row(y, b.g.row(y), wpr_);
        b.digest ^= b.rowhash[y];
        b.pop += row_pop(b.g.row(y), wpr_);
    }
}

void DynamicsEngine::reset(const Grid& x0) {
    h_ = x0.height();
    wpr_ = x0.words_per_row();
    lastmask_ = x0.last_word_mask();
    area_ = x0.area();
    buf_[0].g = x0;
    buf_[1].g = x0;
    init_buf_meta(buf_[0]);
    init_buf_meta(buf_[1]);
    dgrid_ = domino_set(x0);
    dpop_ = dgrid_.popcount();
    rowtmp_.assign(wpr_, 0);
    table_.clear();
    pending_valid_ = true;
    pending_digest_ = buf_[0].digest;
    pending_t_ = 0;
}

void DynamicsEngine::write_step(RuleKind rule, const StateBuf& src, StateBuf& dst,
                                bool all_rows) {
    std::fill(dst.delta.begin(), dst.delta.end(), 0);
    for (int y = 1; y <= h_; ++y) {
        if (!all_rows && !(src.delta[y - 1] | src.delta[y] | src.delta[y + 1])) continue;
        step_row(rule, src.g.row(y), y < h_ ? src.g.row(y + 1) : nullptr,
                 y > 1 ? src.g.row(y - 1) : nullptr, wpr_, lastmask_, rowtmp_.data());
        uint64_t* drow = dst.g.row(y);
        if (std::memcmp(drow, rowtmp_.data(), sizeof(uint64_t) * wpr_) != 0) {
            dst.pop -= row_pop(drow, wpr_);
            dst.digest ^= dst.rowhash[y];
            std::memcpy(drow, rowtmp_.data(), sizeof(uint64_t) * wpr_);
            dst.rowhash[y] = hash_row(y, drow, wpr_);
            dst.digest ^= dst.rowhash[y];
            dst.pop += row_pop(drow, wpr_);
            dst.delta[y] = 1;
        }
    }
}

void DynamicsEngine::update_domino(const StateBuf& state) {
    for (int y = 1; y <= h_; ++y) {
        if (!(state.delta[y - 1] | state.delta[y] | state.delta[y + 1])) continue;
        domino_row(state.g.row(y), y < h_ ? state.g.row(y + 1) : nullptr,
                   y > 1 ? state.g.row(y - 1) : nullptr, wpr_, lastmask_, rowtmp_.data());
        uint64_t* drow = dgrid_.row(y);
        if (std::memcmp(drow, rowtmp_.data(), sizeof(uint64_t) * wpr_) != 0) {
            dpop_ -= row_pop(drow, wpr_);
            std::memcpy(drow, rowtmp_.data(), sizeof(uint64_t) * wpr_);
            dpop_ += row_pop(drow, wpr_);
        }
    }
}

bool DynamicsEngine::closure_of_domino_is_full() {
    if (dpop_ == 0) return false;
    scratch_.assign(dgrid_.words().begin(), dgrid_.words().end());
    closure_sweeps(scratch_.data(), h_, wpr_, lastmask_);
    return words_full(scratch_, h_, wpr_, lastmask_);
}

Outcome DynamicsEngine::run(const Grid& x0, RuleKind rule, const RunOptions& opt) {
    reset(x0);

    Outcome out;
    if (opt.record_digests) out.digests.push_back(buf_[0].digest);
    if (opt.on_step) opt.on_step(0, buf_[0].pop);

    auto span_test_due = [](uint64_t t) {
        if (t <= 4) return true;
        if (t < 64) return (t & (t - 1)) == 0 || t == 6 || t == 12 || t == 24 || t == 48;
        return t % 64 == 0;
    };

    if (buf_[0].pop == area_) {
        out.kind = Outcome::Kind::Percolated;
        return out;
    }
    if (buf_[0].pop == 0) {
        out.kind = Outcome::Kind::Extinct;
        return out;
    }
    if (opt.early_span_exit && closure_of_domino_is_full()) {
        out.kind = Outcome::Kind::Percolated;
        return out;
    }
    if (opt.max_steps && *opt.max_steps == 0) {
        out.kind = Outcome::Kind::BudgetExceeded;
        return out;
    }

    int cur = 0;
    uint64_t t = 0;
    for (;;) {
        StateBuf& src = buf_[cur];
        StateBuf& dst = buf_[cur ^ 1];
        const uint64_t tn = t + 1;

        write_step(rule, src, dst, tn <= 2);

        if (opt.record_digests) out.digests.push_back(dst.digest);
        if (opt.on_step) opt.on_step(tn, dst.pop);

        if (dst.pop == area_) {
            out.kind = Outcome::Kind::Percolated;
            out.t_stop = tn;
            return out;
        }
        if (dst.pop == 0) {
            out.kind = Outcome::Kind::Extinct;
            out.t_stop = tn;
            return out;
        }

        const int64_t dpop_before = dpop_;
        update_domino(dst);
        const bool d_grew = dpop_ > dpop_before;
        assert(dpop_ >= dpop_before);

        if (d_grew) {
            table_.clear();
            pending_valid_ = true;
            pending_digest_ = dst.digest;
            pending_t_ = tn;
        } else {
            const uint64_t d = dst.digest;
            if (pending_valid_ && d == pending_digest_) {
                if (dst.g == src.g) {
                    out.kind = Outcome::Kind::Cycle;
                    out.t_stop = tn;
                    out.period = tn - pending_t_;
                    return out;
                }
                // true collision between consecutive states: keep the newer
                pending_t_ = tn;
            } else if (auto it = table_.find(d); it != table_.end()) {
                if (std::equal(it->second.bits.begin(), it->second.bits.end(),
                               dst.g.words().begin())) {
                    out.kind = Outcome::Kind::Cycle;
                    out.t_stop = tn;
                    out.period = tn - it->second.t;
                    return out;
                }
                it->second.t = tn;
                it->second.bits.assign(dst.g.words().begin(), dst.g.words().end());
                pending_valid_ = false;
            } else {
                if (pending_valid_) {
                    // pending state is tn-1, held by src; snapshot it before
                    // the next write overwrites that buffer
                    Snapshot& s = table_[pending_digest_];
                    s.t = pending_t_;
                    s.bits.assign(src.g.words().begin(), src.g.words().end());
                }
                pending_valid_ = true;
                pending_digest_ = d;
                pending_t_ = tn;
            }
        }

        if (opt.early_span_exit && span_test_due(tn) && closure_of_domino_is_full()) {
            out.kind = Outcome::Kind::Percolated;
            out.t_stop = tn;
            return out;
        }

        if (opt.max_steps && tn >= *opt.max_steps) {
            out.kind = Outcome::Kind::BudgetExceeded;
            out.t_stop = tn;
            return out;
        }

        cur ^= 1;
        t = tn;
    }
}

std::pair<bool, bool> DynamicsEngine::decide_percolation(const Grid& x0, RuleKind rule,
                                                         std::optional<uint64_t> step_budget) {
    const int h = x0.height(), wpr = x0.words_per_row();
    const uint64_t mask = x0.last_word_mask();

    scratch_.assign(x0.words().begin(), x0.words().end());
    closure_sweeps(scratch_.data(), h, wpr, mask);
    const bool b_closure_full = words_full(scratch_, h, wpr, mask);

    if (rule == RuleKind::Bootstrap) return {b_closure_full, false};

    if (!b_closure_full) return {false, false};

    RunOptions opt;
    opt.early_span_exit = true;
    opt.max_steps = step_budget;
    Outcome o = run(x0, RuleKind::Recovery, opt);
    switch (o.kind) {
        case Outcome::Kind::Percolated:
            return {true, false};
        case Outcome::Kind::BudgetExceeded:
            return {false, true};
        default:
            return {false, false};
    }
}

Outcome run_dynamics(const Grid& x0, RuleKind rule, const RunOptions& opt) {
    DynamicsEngine engine;
    return engine.run(x0, rule, opt);
}

}  // namespace rbp
