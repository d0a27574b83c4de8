#include "rbp/transforms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace rbp {
namespace {

inline uint64_t site_key(int x, int y) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
           static_cast<uint32_t>(y);
}

struct SiteSet {
    std::unordered_set<uint64_t> s;
    explicit SiteSet(std::span<const Site> sites) {
        s.reserve(sites.size() * 2);
        for (auto [x, y] : sites) s.insert(site_key(x, y));
    }
    bool contains(int x, int y) const { return s.count(site_key(x, y)) != 0; }
};

void check_domain(std::span<const Site> x, const Rect& domain) {
    for (auto s : x)
        if (!domain.contains(s)) throw std::invalid_argument("site outside domain");
}

bool isolated(const SiteSet& set, int x, int y) {
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if ((dx || dy) && set.contains(x + dx, y + dy)) return false;
    return true;
}

constexpr Site kDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// does the l1-radius-2 ball around {x, x+e, x+2e} meet X outside {x, x+2e}?
bool triple_ball_hit(const SiteSet& set, Site a, Site e) {
    for (int step = 0; step <= 2; ++step) {
        int cx = a.first + step * e.first, cy = a.second + step * e.second;
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2 + std::abs(dx); dy <= 2 - std::abs(dx); ++dy) {
                int px = cx + dx, py = cy + dy;
                if (px == a.first && py == a.second) continue;
                if (px == a.first + 2 * e.first && py == a.second + 2 * e.second) continue;
                if (set.contains(px, py)) return true;
            }
    }
    return false;
}

bool ball2_alone(const SiteSet& set, int x, int y) {
    for (int dx = -2; dx <= 2; ++dx)
        for (int dy = -2 + std::abs(dx); dy <= 2 - std::abs(dx); ++dy)
            if ((dx || dy) && set.contains(x + dx, y + dy)) return false;
    return true;
}

std::vector<Site> sorted_unique(std::vector<Site> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<Site> isolated_sites(std::span<const Site> x, const Rect& domain) {
    check_domain(x, domain);
    SiteSet set(x);
    std::vector<Site> out;
    for (auto [sx, sy] : x)
        if (isolated(set, sx, sy)) out.emplace_back(sx, sy);
    return sorted_unique(std::move(out));
}

std::vector<Site> minus_transform(std::span<const Site> x, const Rect& domain) {
    check_domain(x, domain);
    SiteSet set(x);
    std::vector<Site> out;
    for (auto [sx, sy] : x)
        if (!isolated(set, sx, sy)) out.emplace_back(sx, sy);
    return sorted_unique(std::move(out));
}

std::vector<Site> plus_transform(std::span<const Site> x, const Rect& domain) {
    check_domain(x, domain);
    SiteSet set(x);
    std::vector<Site> out;
    for (auto s : x) {
        auto [sx, sy] = s;
        if (!isolated(set, sx, sy)) {
            out.push_back(s);
            continue;
        }
        bool has_dir = false;
        for (Site e : kDirs) {
            if (!set.contains(sx + 2 * e.first, sy + 2 * e.second)) continue;
            has_dir = true;
            if (triple_ball_hit(set, s, e)) {
                out.push_back(s);
                out.emplace_back(sx + e.first, sy + e.second);
            }
        }
        // an isolated site with nothing at distance 2 on an axis has an empty
        // punctured l1-2 ball: diagonal neighbours would contradict isolation
        if (!has_dir) assert(ball2_alone(set, sx, sy));
    }
    return sorted_unique(std::move(out));
}

namespace {

struct RawPattern {
    int type;
    std::array<Site, 3> cells;
    std::vector<Site> fillers;
};

using Xform = Site (*)(Site);

constexpr Site xf_id(Site p) { return p; }
constexpr Site xf_r90(Site p) { return {-p.second, p.first}; }
constexpr Site xf_r180(Site p) { return {-p.first, -p.second}; }
constexpr Site xf_r270(Site p) { return {p.second, -p.first}; }
constexpr Site xf_mx(Site p) { return {-p.first, p.second}; }
constexpr Site xf_my(Site p) { return {p.first, -p.second}; }
constexpr Site xf_d1(Site p) { return {p.second, p.first}; }
constexpr Site xf_d2(Site p) { return {-p.second, -p.first}; }

std::vector<TripletPattern> build_catalog() {
    // base shapes read off the figure; fillers are the circled sites
    const std::vector<RawPattern> bases = {
        {1, {{{0, 0}, {0, 2}, {0, 4}}}, {{0, 1}, {0, 3}}},
        {2, {{{0, 0}, {0, 1}, {0, 3}}}, {{0, 2}}},
        {3, {{{0, 0}, {1, 1}, {1, 3}}}, {{1, 2}}},
        {4, {{{0, 0}, {1, 0}, {1, 2}}}, {{1, 1}}},
        {5, {{{0, 0}, {0, 2}, {2, 0}}}, {{0, 1}, {1, 0}}},
        {6, {{{0, 0}, {2, 0}, {1, 2}}}, {{1, 0}}},
    };
    const Xform ops[8] = {xf_id, xf_r90, xf_r180, xf_r270, xf_mx, xf_my, xf_d1, xf_d2};

    std::vector<TripletPattern> catalog;
    for (const RawPattern& base : bases) {
        std::vector<TripletPattern> variants;
        for (Xform op : ops) {
            std::array<Site, 3> cells;
            for (int i = 0; i < 3; ++i) cells[i] = op(base.cells[i]);
            std::vector<Site> fillers;
            for (Site f : base.fillers) fillers.push_back(op(f));
            // anchor: translate the left-most, bottom-most cell to (0,0)
            Site anchor = *std::min_element(cells.begin(), cells.end());
            for (Site& c : cells) c = {c.first - anchor.first, c.second - anchor.second};
            for (Site& f : fillers) f = {f.first - anchor.first, f.second - anchor.second};
            std::sort(cells.begin(), cells.end());
            std::sort(fillers.begin(), fillers.end());
            bool dup = std::any_of(variants.begin(), variants.end(),
                                   [&](const TripletPattern& p) { return p.cells == cells; });
            if (!dup) variants.push_back({0, base.type, cells, fillers});
        }
        std::sort(variants.begin(), variants.end(),
                  [](const TripletPattern& a, const TripletPattern& b) {
                      return a.cells < b.cells;
                  });
        for (auto& v : variants) catalog.push_back(std::move(v));
    }
    for (size_t i = 0; i < catalog.size(); ++i) catalog[i].id = static_cast<int>(i + 1);
    return catalog;
}

}  // namespace

const std::vector<TripletPattern>& triplet_catalog() {
    static const std::vector<TripletPattern> catalog = build_catalog();
    return catalog;
}

std::vector<std::pair<int, Site>> find_triplets(std::span<const Site> x, const Rect& domain) {
    check_domain(x, domain);
    SiteSet set(x);
    std::vector<std::pair<int, Site>> out;
    for (auto [sx, sy] : x) {
        for (const TripletPattern& p : triplet_catalog()) {
            // anchor cell of every pattern is (0,0)
            bool all = true;
            for (const Site& c : p.cells)
                if (!set.contains(sx + c.first, sy + c.second)) {
                    all = false;
                    break;
                }
            if (all) out.emplace_back(p.id, Site{sx, sy});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rbp
