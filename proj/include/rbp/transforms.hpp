#pragma once

#include <array>
#include <span>
#include <vector>

#include "rbp/grid.hpp"

namespace rbp {

// sites of x with no other member of x in their l-infinity radius-1 ball
std::vector<Site> isolated_sites(std::span<const Site> x, const Rect& domain);

// X^- : x minus its isolated sites (single pass, no fixpoint iteration)
std::vector<Site> minus_transform(std::span<const Site> x, const Rect& domain);

// X^+ : keep non-isolated sites; drop isolated sites whose l1-radius-2 ball
// holds nothing else; for isolated x with x+2e_i in X, fill x and x+e_i when
// the ball around the aligned triple holds a further site, else drop x.
// Clauses for several directions are evaluated independently; inclusion wins.
std::vector<Site> plus_transform(std::span<const Site> x, const Rect& domain);

// One of the three-site patterns through which an isolated site can seed
// growth. cells are offsets with the left-most, bottom-most cell at (0,0);
// fillers are the healthy sites the X^+ clause infects.
struct TripletPattern {
    int id = 0;    // 1-based position in the catalog
    int type = 0;  // 1..6, base shape before dihedral symmetry
    std::array<Site, 3> cells{};
    std::vector<Site> fillers;
};

// All distinct triplet patterns: the six base shapes of the figure closed
// under the dihedral group, deduplicated, ordered by (type, cells).
const std::vector<TripletPattern>& triplet_catalog();

// all placements (pattern id, absolute position of the pattern's (0,0) cell)
// with every cell in x
std::vector<std::pair<int, Site>> find_triplets(std::span<const Site> x, const Rect& domain);

}  // namespace rbp
