#include "rbp/tiles.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace rbp {

const char* tile_kind_code(TileKind k) {
    switch (k) {
        case TileKind::UpRight: return "ur";
        case TileKind::DownRight: return "dr";
        case TileKind::Right: return "r";
        case TileKind::Up: return "u";
    }
    return "?";
}

std::optional<TileKind> tile_kind_from_code(std::string_view s) {
    if (s == "ur") return TileKind::UpRight;
    if (s == "dr") return TileKind::DownRight;
    if (s == "r") return TileKind::Right;
    if (s == "u") return TileKind::Up;
    return std::nullopt;
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("tile probability outside [0,1]");
}

}  // namespace

TileConfig sample_tile_config(int n, double p, StreamKey stream) {
    check_probability(p);
    TileConfig cfg;
    cfg.n = n;
    const double p2 = p * p;
    if (p2 <= 0.0) return cfg;
    CounterRng rng(stream);
    if (p >= 1.0) {
        for (int y = 1; y <= n; ++y)
            for (int x = 1; x <= n; ++x)
                for (TileKind k : kTileKinds) cfg.placed.push_back({x, y, k});
        return cfg;
    }
    const uint64_t thr = bernoulli_threshold(p2);
    uint64_t idx = 0;
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            for (TileKind k : kTileKinds) {
                if (rng.at(idx++) < thr) cfg.placed.push_back({x, y, k});
            }
    return cfg;
}

TileConfig sample_tile_config_rect(int n, const Rect& r, double p, StreamKey stream) {
    check_probability(p);
    if (r.a1 < 1 || r.a2 > n || r.b1 < 1 || r.b2 > n)
        throw std::invalid_argument("sample_tile_config_rect: rectangle outside grid");
    TileConfig cfg;
    cfg.n = n;
    const double p2 = p * p;
    if (p2 <= 0.0) return cfg;
    CounterRng rng(stream);
    const uint64_t thr = p >= 1.0 ? ~0ULL : bernoulli_threshold(p2);
    uint64_t idx = 0;
    for (int y = r.b1; y <= r.b2; ++y)
        for (int x = r.a1; x <= r.a2; ++x)
            for (TileKind k : kTileKinds) {
                bool hit = p >= 1.0 || rng.at(idx) < thr;
                ++idx;
                if (hit) cfg.placed.push_back({x, y, k});
            }
    return cfg;
}

std::vector<Site> project_sites(const TileConfig& cfg) {
    std::vector<Site> out;
    out.reserve(cfg.placed.size() * 2);
    for (const Tile& t : cfg.placed) {
        out.push_back(t.anchor());
        auto [px, py] = t.partner();
        if (px >= 1 && px <= cfg.n && py >= 1 && py <= cfg.n) out.emplace_back(px, py);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ColumnClass> classify_columns(const TileConfig& cfg, const Rect& r) {
    const int w = r.width();
    std::vector<uint8_t> has2(w, 0), has1(w, 0), has_site(w, 0);
    const int ylo = std::max(1, r.b1 - 1);
    const int yhi = std::min(cfg.n, r.b2 + 1);

    for (const Tile& t : cfg.placed) {
        if (r.contains(t.ax, t.ay)) {
            int c = t.ax - r.a1;
            (tile_width(t.kind) == 2 ? has2 : has1)[c] = 1;
        }
        for (Site s : {t.anchor(), t.partner()}) {
            auto [x, y] = s;
            if (x < 1 || x > cfg.n || y < 1 || y > cfg.n) continue;  // clipped
            if (x >= r.a1 && x <= r.a2 && y >= ylo && y <= yhi) has_site[x - r.a1] = 1;
        }
    }

    std::vector<ColumnClass> out(w);
    for (int c = 0; c < w; ++c) {
        if (has2[c])
            out[c] = ColumnClass::TwoOccupied;
        else if (has1[c])
            out[c] = ColumnClass::OneOccupiedOnly;
        else
            out[c] = has_site[c] ? ColumnClass::Unoccupied : ColumnClass::Empty;
    }
    return out;
}

bool has_double_gap(const TileConfig& cfg, const Rect& r) {
    auto cls = classify_columns(cfg, r);
    for (size_t c = 0; c + 1 < cls.size(); ++c)
        if (cls[c] == ColumnClass::Empty && cls[c + 1] == ColumnClass::Empty) return true;
    return false;
}

std::vector<std::pair<Tile, Tile>> find_triples(const TileConfig& cfg) {
    auto in_grid = [&](Site s) {
        return s.first >= 1 && s.first <= cfg.n && s.second >= 1 && s.second <= cfg.n;
    };
    auto sites_of = [&](const Tile& t) {
        std::vector<Site> s{t.anchor()};
        if (in_grid(t.partner())) s.push_back(t.partner());
        return s;
    };
    auto touch = [](const std::vector<Site>& a, const std::vector<Site>& b) {
        for (auto [x1, y1] : a)
            for (auto [x2, y2] : b)
                if (std::abs(x1 - x2) <= 1 && std::abs(y1 - y2) <= 1) return true;
        return false;
    };

    std::vector<std::pair<Tile, Tile>> out;
    const auto& ts = cfg.placed;
    std::vector<std::vector<Site>> sites(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) sites[i] = sites_of(ts[i]);
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (touch(sites[i], sites[j])) out.emplace_back(ts[i], ts[j]);
    return out;
}

bool tile_traversable(const TileConfig& cfg, const Rect& r, Direction dir) {
    if (r.a1 < 1 || r.a2 > cfg.n || r.b1 < 1 || r.b2 > cfg.n)
        throw std::invalid_argument("tile_traversable: rectangle outside grid");

    const bool horiz = dir == Direction::LeftRight || dir == Direction::RightLeft;
    // dilate across the travel direction so partner spill-over participates
    const int vlo = horiz ? std::max(1, r.b1 - 1) : std::max(1, r.a1 - 1);
    const int vhi = horiz ? std::min(cfg.n, r.b2 + 1) : std::min(cfg.n, r.a2 + 1);
    const int ulen = horiz ? r.width() : r.height();
    const int vlen = vhi - vlo + 1;

    auto to_uv = [&](int x, int y) -> std::pair<int, int> {
        switch (dir) {
            case Direction::LeftRight: return {x - r.a1 + 1, y - vlo + 1};
            case Direction::RightLeft: return {r.a2 - x + 1, y - vlo + 1};
            case Direction::BottomTop: return {y - r.b1 + 1, x - vlo + 1};
            case Direction::TopBottom: return {r.b2 - y + 1, x - vlo + 1};
        }
        return {0, 0};
    };

    // domain: phantom line (u=0) + all of r's lines (u=1..ulen) over the
    // dilated cross range
    Grid universe(ulen + 1, vlen);
    for (int v = 1; v <= vlen; ++v) universe.set(1, v, true);
    for (auto [x, y] : project_sites(cfg)) {
        auto [u, v] = to_uv(x, y);
        if (u >= 1 && u <= ulen && v >= 1 && v <= vlen) universe.set(u + 1, v, true);
    }

    Grid closure = bootstrap_closure(universe);
    // success: everything except possibly the far line (local column ulen+1)
    for (int v = 1; v <= vlen; ++v)
        for (int lx = 1; lx <= ulen; ++lx)
            if (!closure.get(lx, v)) return false;
    return true;
}

std::string tiles_to_json(const TileConfig& cfg) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Tile& t : cfg.placed)
        arr.push_back({{"ax", t.ax}, {"ay", t.ay}, {"kind", tile_kind_code(t.kind)}});
    return arr.dump();
}

TileConfig tiles_from_json(const std::string& text, int n) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("tiles_from_json: expected a JSON array");
    TileConfig cfg;
    cfg.n = n;
    for (const auto& e : arr) {
        auto k = tile_kind_from_code(e.at("kind").get<std::string>());
        if (!k) throw std::runtime_error("tiles_from_json: unknown tile kind");
        cfg.placed.push_back({e.at("ax").get<int>(), e.at("ay").get<int>(), *k});
    }
    std::sort(cfg.placed.begin(), cfg.placed.end());
    cfg.placed.erase(std::unique(cfg.placed.begin(), cfg.placed.end()), cfg.placed.end());
    return cfg;
}

}  // namespace rbp
