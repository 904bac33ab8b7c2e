// Reference implementations for cross-checking the solver. Deliberately
// naive and independent of the engine's code path: plain sorted-vector set
// arithmetic, placements re-derived at every node, no bitmasks, no area
// pruning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ribbon/tiles.hpp"

namespace oracle {

using ribbon::Cell;
using ribbon::TileSet;
using ribbon::TileShape;

inline bool subset_of(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<Cell> minus(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    std::vector<Cell> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Counts exact covers of `free_cells` (sorted) by translated tile shapes.
// Branches on the first free cell; a tile may be anchored there by any of
// its cells (placements overlapping used cells fail the subset test).
inline void naive_covers(const std::vector<Cell>& free_cells, const TileSet& ts,
                         uint64_t& count) {
    if (free_cells.empty()) {
        ++count;
        return;
    }
    Cell target = free_cells.front();
    for (const TileShape& tile : ts.tiles) {
        for (const Cell& anchor : tile.cells) {
            Cell offset = target - anchor;
            std::vector<Cell> covered;
            covered.reserve(tile.cells.size());
            for (const Cell& c : tile.cells) covered.push_back(c + offset);
            std::sort(covered.begin(), covered.end());
            if (subset_of(covered, free_cells)) naive_covers(minus(free_cells, covered), ts, count);
        }
    }
}

inline uint64_t naive_count(const ribbon::Region& r, const TileSet& ts) {
    uint64_t count = 0;
    naive_covers(r.cells, ts, count);
    return count;
}

// Bar-tiling counter on an a x b grid (a = height), bars of length k laid
// horizontally or vertically. Occupancy-grid recursion, nothing shared
// with the engine.
inline void bar_rec(std::vector<std::vector<char>>& used, int a, int b, int k, uint64_t& count) {
    int fx = -1, fy = -1;
    for (int y = 0; y < a && fx < 0; ++y)
        for (int x = 0; x < b; ++x)
            if (!used[y][x]) {
                fx = x;
                fy = y;
                break;
            }
    if (fx < 0) {
        ++count;
        return;
    }
    bool fits_h = fx + k <= b;
    for (int i = 0; i < k && fits_h; ++i) fits_h = !used[fy][fx + i];
    if (fits_h) {
        for (int i = 0; i < k; ++i) used[fy][fx + i] = 1;
        bar_rec(used, a, b, k, count);
        for (int i = 0; i < k; ++i) used[fy][fx + i] = 0;
    }
    bool fits_v = fy + k <= a;
    for (int i = 0; i < k && fits_v; ++i) fits_v = !used[fy + i][fx];
    if (fits_v) {
        for (int i = 0; i < k; ++i) used[fy + i][fx] = 1;
        bar_rec(used, a, b, k, count);
        for (int i = 0; i < k; ++i) used[fy + i][fx] = 0;
    }
}

inline uint64_t naive_bar_count(int a, int b, int k) {
    std::vector<std::vector<char>> used(static_cast<size_t>(a),
                                        std::vector<char>(static_cast<size_t>(b), 0));
    uint64_t count = 0;
    bar_rec(used, a, b, k, count);
    return count;
}

// Bar flip graph on an a x b grid: vertices are bar tilings (encoded as
// the grid of bar start cells), edges rotate a k x k window covered by k
// parallel bars. Used for the flip-graph isomorphism check.
struct BarGraph {
    std::vector<std::string> vertices;            // sorted encodings
    std::vector<std::pair<int, int>> edges;       // index pairs, a < b, sorted
};

inline void bar_tilings(std::vector<std::vector<char>>& used, int a, int b, int k,
                        std::vector<std::pair<Cell, bool>>& bars,  // (start, horizontal)
                        const std::function<void(const std::vector<std::pair<Cell, bool>>&)>& sink) {
    int fx = -1, fy = -1;
    for (int y = 0; y < a && fx < 0; ++y)
        for (int x = 0; x < b; ++x)
            if (!used[y][x]) {
                fx = x;
                fy = y;
                break;
            }
    if (fx < 0) {
        sink(bars);
        return;
    }
    bool fits_h = fx + k <= b;
    for (int i = 0; i < k && fits_h; ++i) fits_h = !used[fy][fx + i];
    if (fits_h) {
        for (int i = 0; i < k; ++i) used[fy][fx + i] = 1;
        bars.push_back({{fx, fy}, true});
        bar_tilings(used, a, b, k, bars, sink);
        bars.pop_back();
        for (int i = 0; i < k; ++i) used[fy][fx + i] = 0;
    }
    bool fits_v = fy + k <= a;
    for (int i = 0; i < k && fits_v; ++i) fits_v = !used[fy + i][fx];
    if (fits_v) {
        for (int i = 0; i < k; ++i) used[fy + i][fx] = 1;
        bars.push_back({{fx, fy}, false});
        bar_tilings(used, a, b, k, bars, sink);
        bars.pop_back();
        for (int i = 0; i < k; ++i) used[fy + i][fx] = 0;
    }
}

inline std::string encode_bars(std::vector<std::pair<Cell, bool>> bars) {
    std::sort(bars.begin(), bars.end());
    std::string s;
    for (const auto& [c, horiz] : bars)
        s += (horiz ? "H" : "V") + std::to_string(c.x) + "," + std::to_string(c.y) + ";";
    return s;
}

inline BarGraph bar_flip_graph(int a, int b, int k) {
    BarGraph g;
    std::vector<std::vector<std::pair<Cell, bool>>> tilings;
    std::vector<std::vector<char>> used(static_cast<size_t>(a),
                                        std::vector<char>(static_cast<size_t>(b), 0));
    std::vector<std::pair<Cell, bool>> bars;
    bar_tilings(used, a, b, k, bars,
                [&](const std::vector<std::pair<Cell, bool>>& t) { tilings.push_back(t); });
    for (const auto& t : tilings) g.vertices.push_back(encode_bars(t));
    std::vector<std::string> sorted = g.vertices;
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](const std::string& s) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
    };
    g.vertices = sorted;
    std::vector<std::pair<int, int>> edges;
    for (const auto& t : tilings) {
        // k x k windows covered by k parallel bars -> rotate
        for (int wy = 0; wy + k <= a; ++wy) {
            for (int wx = 0; wx + k <= b; ++wx) {
                bool all_h = true, all_v = true;
                for (int i = 0; i < k; ++i) {
                    if (!std::count(t.begin(), t.end(),
                                    std::pair<Cell, bool>{{wx, wy + i}, true}))
                        all_h = false;
                    if (!std::count(t.begin(), t.end(),
                                    std::pair<Cell, bool>{{wx + i, wy}, false}))
                        all_v = false;
                }
                if (!all_h && !all_v) continue;
                std::vector<std::pair<Cell, bool>> moved;
                for (const auto& bar : t) {
                    bool inside = all_h ? (bar.second && bar.first.x == wx &&
                                           bar.first.y >= wy && bar.first.y < wy + k)
                                        : (!bar.second && bar.first.y == wy &&
                                           bar.first.x >= wx && bar.first.x < wx + k);
                    if (!inside) moved.push_back(bar);
                }
                for (int i = 0; i < k; ++i)
                    moved.push_back(all_h ? std::pair<Cell, bool>{{wx + i, wy}, false}
                                          : std::pair<Cell, bool>{{wx, wy + i}, true});
                int u = index_of(encode_bars(t));
                int v = index_of(encode_bars(moved));
                if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = edges;
    return g;
}

}  // namespace oracle
