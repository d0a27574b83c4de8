#include "rbp/spanning.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbp {
namespace {

Grid rect_universe(const Rect& r, std::span<const Site> sites) {
    Grid g(r.width(), r.height());
    for (auto [x, y] : sites) {
        if (!r.contains(x, y)) throw std::invalid_argument("site outside rectangle");
        g.set(x - r.a1 + 1, y - r.b1 + 1, true);
    }
    return g;
}

bool percolates(const Grid& universe) {
    DynamicsEngine engine;
    return engine.decide_percolation(universe, RuleKind::Recovery).first;
}

}  // namespace

bool internally_spanned(const Rect& r, std::span<const Site> x0) {
    if (!r.valid()) throw std::invalid_argument("internally_spanned: invalid rectangle");
    return percolates(rect_universe(r, x0));
}

bool traversable(const Rect& r, std::span<const Site> x0, Direction dir) {
    if (!r.valid()) throw std::invalid_argument("traversable: invalid rectangle");
    for (auto s : x0)
        if (!r.contains(s)) throw std::invalid_argument("traversable: site outside rectangle");

    // Map to the canonical left-to-right frame: u = 1..ulen along the travel
    // direction (far column dropped), v = 1..vlen across. The phantom column
    // becomes u = 0.
    const int ulen = (dir == Direction::LeftRight || dir == Direction::RightLeft)
                         ? r.width()
                         : r.height();
    const int vlen = (dir == Direction::LeftRight || dir == Direction::RightLeft)
                         ? r.height()
                         : r.width();
    auto to_uv = [&](int x, int y) -> std::pair<int, int> {
        switch (dir) {
            case Direction::LeftRight: return {x - r.a1 + 1, y - r.b1 + 1};
            case Direction::RightLeft: return {r.a2 - x + 1, y - r.b1 + 1};
            case Direction::BottomTop: return {y - r.b1 + 1, x - r.a1 + 1};
            case Direction::TopBottom: return {r.b2 - y + 1, x - r.a1 + 1};
        }
        return {0, 0};
    };

    // region: phantom column (u=0) plus all but the far column (u < ulen)
    Grid universe(ulen, vlen);
    for (int v = 1; v <= vlen; ++v) universe.set(1, v, true);  // phantom
    for (auto [x, y] : x0) {
        auto [u, v] = to_uv(x, y);
        if (u < ulen) universe.set(u + 1, v, true);
    }
    return percolates(universe);
}

bool spans_from(const Rect& inner, const Rect& outer, std::span<const Site> x) {
    if (!inner.valid() || !outer.valid() || !outer.contains(inner))
        throw std::invalid_argument("spans_from: inner must be contained in outer");
    Grid g(outer.width(), outer.height());
    for (auto [sx, sy] : x) {
        if (!outer.contains(sx, sy)) throw std::invalid_argument("spans_from: site outside outer");
        g.set(sx - outer.a1 + 1, sy - outer.b1 + 1, true);
    }
    for (int y = inner.b1; y <= inner.b2; ++y)
        for (int x2 = inner.a1; x2 <= inner.a2; ++x2)
            g.set(x2 - outer.a1 + 1, y - outer.b1 + 1, true);
    return percolates(g);
}

std::optional<Rect> find_spanned_subrect(const Rect& r, std::span<const Site> x0, int k) {
    if (k < 1 || r.long_side() < 2 * k)
        throw std::invalid_argument("find_spanned_subrect: k out of range");

    std::vector<Rect> candidates;
    for (int a1 = r.a1; a1 <= r.a2; ++a1)
        for (int a2 = a1; a2 <= r.a2; ++a2)
            for (int b1 = r.b1; b1 <= r.b2; ++b1)
                for (int b2 = b1; b2 <= r.b2; ++b2) {
                    Rect t{a1, a2, b1, b2};
                    if (t.long_side() >= k && t.long_side() <= 2 * k) candidates.push_back(t);
                }
    std::sort(candidates.begin(), candidates.end(), [](const Rect& a, const Rect& b) {
        return std::tuple(a.area(), a.a1, a.b1, a.a2, a.b2) <
               std::tuple(b.area(), b.a1, b.b1, b.a2, b.b2);
    });

    std::vector<Site> inside;
    for (const Rect& t : candidates) {
        inside.clear();
        for (auto s : x0)
            if (t.contains(s)) inside.push_back(s);
        if (internally_spanned(t, inside)) return t;
    }
    return std::nullopt;
}

}  // namespace rbp
