#include "rbp/grid.hpp"

#include <sstream>

namespace rbp {

Grid sample_sites(int width, int height, double p, StreamKey stream) {
    Grid g(width, height);
    if (p <= 0.0) return g;
    if (p >= 1.0) {
        g.fill_all();
        return g;
    }
    const uint64_t thr = bernoulli_threshold(p);
    CounterRng rng(stream);
    uint64_t idx = 0;
    for (int y = 1; y <= height; ++y) {
        uint64_t* r = g.row(y);
        for (int x = 1; x <= width; ++x, ++idx) {
            if (rng.at(idx) < thr) r[(x - 1) >> 6] |= 1ULL << ((x - 1) & 63);
        }
    }
    return g;
}

Grid checkerboard(int n) {
    Grid g(n);
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            if (((x + y) & 1) == 0) g.set(x, y, true);
    return g;
}

Grid parse_ascii_grid(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::runtime_error("grid fixture: empty input");

    const size_t width = lines[0].size();
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != width)
            throw std::runtime_error("grid fixture: line " + std::to_string(i + 1) +
                                     " has length " + std::to_string(lines[i].size()) +
                                     ", expected " + std::to_string(width));
        for (char c : lines[i])
            if (c != '.' && c != '#')
                throw std::runtime_error("grid fixture: line " + std::to_string(i + 1) +
                                         ": invalid character '" + std::string(1, c) + "'");
    }
    if (lines.size() != width)
        throw std::runtime_error("grid fixture: expected a square grid, got " +
                                 std::to_string(width) + "x" + std::to_string(lines.size()));
    Grid g(static_cast<int>(width));
    // last text line is row 1
    for (size_t i = 0; i < lines.size(); ++i) {
        int y = static_cast<int>(lines.size() - i);
        for (size_t j = 0; j < width; ++j)
            if (lines[i][j] == '#') g.set(static_cast<int>(j + 1), y, true);
    }
    return g;
}

std::string to_ascii(const Grid& g) {
    std::string out;
    out.reserve(static_cast<size_t>(g.height()) * (g.width() + 1));
    for (int y = g.height(); y >= 1; --y) {
        for (int x = 1; x <= g.width(); ++x) out.push_back(g.get(x, y) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

}  // namespace rbp
