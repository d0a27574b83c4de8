#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbp/rng.hpp"

namespace rbp {

using Site = std::pair<int, int>;  // (x, y), 1-based, x = column, y = row

// Integer rectangle [a1,a2] x [b1,b2], inclusive, 1-based like the grid.
struct Rect {
    int a1 = 1, a2 = 1, b1 = 1, b2 = 1;

    static Rect square(int n) { return {1, n, 1, n}; }

    bool valid() const { return a1 <= a2 && b1 <= b2; }
    int width() const { return a2 - a1 + 1; }
    int height() const { return b2 - b1 + 1; }
    std::pair<int, int> dim() const { return {width(), height()}; }
    int short_side() const { return std::min(width(), height()); }
    int long_side() const { return std::max(width(), height()); }
    int phi() const { return width() + height(); }  // semi-perimeter
    long long area() const { return static_cast<long long>(width()) * height(); }

    bool contains(int x, int y) const { return a1 <= x && x <= a2 && b1 <= y && y <= b2; }
    bool contains(Site s) const { return contains(s.first, s.second); }
    bool contains(const Rect& r) const {
        return a1 <= r.a1 && r.a2 <= a2 && b1 <= r.b1 && r.b2 <= b2;
    }

    bool operator==(const Rect&) const = default;
};

// Bit-packed width x height boolean field (square n x n is the common case).
// Row y occupies words_per_row() words; bit (x-1)%64 of word (x-1)/64 is site
// (x,y). Bits at column indices >= width are always zero.
class Grid {
public:
    Grid() = default;
    Grid(int width, int height)
        : w_(width), h_(height), wpr_((width + 63) / 64),
          rows_(static_cast<size_t>(height) * ((width + 63) / 64), 0) {
        if (width < 1 || height < 1) throw std::invalid_argument("Grid: sides must be >= 1");
    }
    explicit Grid(int n) : Grid(n, n) {}

    static Grid from_sites(int n, std::span<const Site> sites) {
        Grid g(n);
        for (auto [x, y] : sites) {
            if (x < 1 || x > n || y < 1 || y > n)
                throw std::invalid_argument("Grid::from_sites: site outside grid");
            g.set(x, y, true);
        }
        return g;
    }

    int n() const { return w_; }  // side of a square grid (width == height)
    int width() const { return w_; }
    int height() const { return h_; }
    bool square() const { return w_ == h_; }
    int words_per_row() const { return wpr_; }

    uint64_t* row(int y) { return rows_.data() + static_cast<size_t>(y - 1) * wpr_; }
    const uint64_t* row(int y) const { return rows_.data() + static_cast<size_t>(y - 1) * wpr_; }

    bool get(int x, int y) const { return (row(y)[(x - 1) >> 6] >> ((x - 1) & 63)) & 1u; }
    void set(int x, int y, bool v) {
        uint64_t m = 1ULL << ((x - 1) & 63);
        if (v)
            row(y)[(x - 1) >> 6] |= m;
        else
            row(y)[(x - 1) >> 6] &= ~m;
    }

    // mask of valid bits in the last word of a row
    uint64_t last_word_mask() const {
        int r = w_ & 63;
        return r == 0 ? ~0ULL : (~0ULL >> (64 - r));
    }

    long long popcount() const {
        long long c = 0;
        for (uint64_t w : rows_) c += std::popcount(w);
        return c;
    }
    long long area() const { return static_cast<long long>(w_) * h_; }
    bool empty_set() const {
        return std::all_of(rows_.begin(), rows_.end(), [](uint64_t w) { return w == 0; });
    }
    bool full() const { return popcount() == area(); }

    void clear() { std::fill(rows_.begin(), rows_.end(), 0); }
    void fill_all() {
        for (int y = 1; y <= h_; ++y) {
            uint64_t* r = row(y);
            for (int w = 0; w < wpr_; ++w) r[w] = ~0ULL;
            r[wpr_ - 1] &= last_word_mask();
        }
    }

    std::vector<Site> sites() const {
        std::vector<Site> out;
        for (int y = 1; y <= h_; ++y)
            for (int x = 1; x <= w_; ++x)
                if (get(x, y)) out.emplace_back(x, y);
        return out;
    }

    bool is_subset_of(const Grid& other) const {
        for (size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] & ~other.rows_[i]) return false;
        return true;
    }

    bool operator==(const Grid&) const = default;

    std::span<const uint64_t> words() const { return rows_; }
    std::span<uint64_t> words() { return rows_; }

private:
    int w_ = 0;
    int h_ = 0;
    int wpr_ = 0;
    std::vector<uint64_t> rows_;
};

// X ~ Bin(R, p): each site infected independently; the per-site draw is a pure
// function of (stream, row-major site index), so sharing the stream across
// different p values yields the standard monotone coupling.
Grid sample_sites(int width, int height, double p, StreamKey stream);
inline Grid sample_sites(int n, double p, StreamKey stream) {
    return sample_sites(n, n, p, stream);
}

// checkerboard containing (1,1): sites with x+y even
Grid checkerboard(int n);

// ASCII fixture format: one line per row, '.' healthy / '#' infected,
// last text line is row 1 (bottom). Throws std::runtime_error with a line
// number on malformed input.
Grid parse_ascii_grid(const std::string& text);
std::string to_ascii(const Grid& g);

}  // namespace rbp
