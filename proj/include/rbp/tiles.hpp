#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbp/grid.hpp"
#include "rbp/spanning.hpp"

namespace rbp {

// The four 2-tile kinds, identified by the offset of the partner site from
// the anchor (the left-most, bottom-most site of the pair).
enum class TileKind : uint8_t { UpRight = 0, DownRight = 1, Right = 2, Up = 3 };

inline constexpr TileKind kTileKinds[4] = {TileKind::UpRight, TileKind::DownRight,
                                           TileKind::Right, TileKind::Up};

constexpr std::pair<int, int> tile_offset(TileKind k) {
    switch (k) {
        case TileKind::UpRight: return {1, 1};
        case TileKind::DownRight: return {1, -1};
        case TileKind::Right: return {1, 0};
        case TileKind::Up: return {0, 1};
    }
    return {0, 0};
}

constexpr int tile_width(TileKind k) { return k == TileKind::Up ? 1 : 2; }

const char* tile_kind_code(TileKind k);                       // "ur","dr","r","u"
std::optional<TileKind> tile_kind_from_code(std::string_view);

struct Tile {
    int ax = 0, ay = 0;  // anchor
    TileKind kind = TileKind::UpRight;

    Site anchor() const { return {ax, ay}; }
    Site partner() const {
        auto [dx, dy] = tile_offset(kind);
        return {ax + dx, ay + dy};
    }

    auto operator<=>(const Tile&) const = default;
};

// A set of placed 2-tiles with anchors in [n]^2. Partner sites outside the
// grid are dropped on projection; the tile itself is kept.
struct TileConfig {
    int n = 0;
    std::vector<Tile> placed;  // sorted, no duplicates

    bool operator==(const TileConfig&) const = default;
};

// Each of the 4n^2 (anchor, kind) pairs is placed independently with
// probability p^2; anchors row-major, kinds in the order ur, dr, r, u, one
// draw per pair.
TileConfig sample_tile_config(int n, double p, StreamKey stream);

// Same draw scheme with anchors restricted to r (row-major within r); used by
// crossing experiments where the tile universe is the rectangle itself.
TileConfig sample_tile_config_rect(int n, const Rect& r, double p, StreamKey stream);

// union of anchors and in-grid partners, sorted, each site once
std::vector<Site> project_sites(const TileConfig& cfg);

enum class ColumnClass { TwoOccupied, OneOccupiedOnly, Unoccupied, Empty };

// Per-column classification over r's columns. Occupancy counts anchors inside
// r; emptiness consults projected sites of any tile whose x lies in the
// column and whose y falls within r's rows dilated by one (clipped to the
// grid), so partner spill-over above/below the rectangle counts.
std::vector<ColumnClass> classify_columns(const TileConfig& cfg, const Rect& r);

// two adjacent Empty columns inside r
bool has_double_gap(const TileConfig& cfg, const Rect& r);

// unordered pairs of placed tiles whose projected site sets touch or overlap
// in the l-infinity radius-1 sense
std::vector<std::pair<Tile, Tile>> find_triples(const TileConfig& cfg);

// The crossing event for tile configurations. Tiles have no isolated sites,
// so crossing under the recovery rule coincides with crossing under plain
// 2-neighbour bootstrap; the latter is evaluated, on the rectangle dilated by
// one row (column) on each side, so that partner spill-over participates.
// Equivalent to the absence of a double gap.
bool tile_traversable(const TileConfig& cfg, const Rect& r, Direction dir);

// JSON array of {ax, ay, kind}; kind in {"ur","dr","r","u"}
std::string tiles_to_json(const TileConfig& cfg);
TileConfig tiles_from_json(const std::string& text, int n);

}  // namespace rbp
