#pragma once

#include <optional>
#include <span>

#include "rbp/dynamics.hpp"
#include "rbp/grid.hpp"

namespace rbp {

enum class Direction { LeftRight, RightLeft, BottomTop, TopBottom };

// true iff the recovery dynamics restricted to r (its own universe, no
// neighbours outside) eventually infects all of r from x0. Throws if a site
// of x0 lies outside r.
bool internally_spanned(const Rect& r, std::span<const Site> x0);

// The crossing event of the recovery process: r minus its far column (row),
// with a fully infected phantom column (row) prepended on the near side, is
// internally spanned by x0 restricted to that region plus the phantom.
bool traversable(const Rect& r, std::span<const Site> x0, Direction dir);

// internally_spanned(outer, inner-as-fully-infected union x)
bool spans_from(const Rect& inner, const Rect& outer, std::span<const Site> x);

// If r is internally spanned by x0, some internally spanned T subseteq r with
// long(T) in [k, 2k] exists; returns the first such T in (area, a1, b1, a2, b2)
// order, or nullopt. Requires 1 <= k and long(r) >= 2k.
std::optional<Rect> find_spanned_subrect(const Rect& r, std::span<const Site> x0, int k);

}  // namespace rbp
