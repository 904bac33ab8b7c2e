// Local moves (swap an n x n square between n/2 vertical and n/2 horizontal
// blocks), the flip graph over all tilings of a region, and the two-tiling
// family that defeats the move on non-rectangular regions.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/pattern.hpp"
#include "ribbon/solver.hpp"

namespace ribbon {

struct MoveSite {
    Cell corner{};                       // lower-left of the n x n square
    BlockKind before = BlockKind::V;     // orientation currently in place (V or H)
    int n = 0;

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string to_string(const MoveSite& s);

// All n x n squares of `t` currently covered by n/2 parallel two-L blocks.
// Works on any valid tiling whose L tiles share a single n (blocks are the
// forced L-pairs present in the tiling); tilings with bars/extras or mixed
// n are rejected with std::invalid_argument.
std::vector<MoveSite> local_move_sites(const Tiling& t);

// Replaces the n/2 blocks in the square by n/2 blocks of the other
// orientation, refilled with their forced L pairs. Throws
// std::invalid_argument if the site is stale.
Tiling apply_move(const Tiling& t, const MoveSite& s);

struct FlipGraph {
    struct Edge {
        int a = 0, b = 0;  // vertex indices, a < b
        MoveSite site;     // the move as seen from vertex a
    };
    std::vector<std::string> vertices;  // canonical tiling serializations
    std::vector<Tiling> tilings;        // parallel to vertices
    std::vector<Edge> edges;
};

struct FlipResult {
    bool connected = false;
    FlipGraph graph;
    std::vector<int> component_sizes;  // descending
};

// Builds the full flip graph via enumeration + BFS. If the tiling count
// exceeds `limit`, connectivity is undecidable at this limit and a
// std::runtime_error is thrown.
FlipResult flip_connected(const Region& r, const TileSet& ts, uint64_t limit);

// The row-convex region family admitting exactly two tilings by Tn
// (n even >= 4; `extra` >= 0 inserts more staircase steps). Returns the
// region together with tiling #1; tiling #2 is left to the solver.
std::pair<Region, Tiling> two_tiling_region(int n, int extra);

}  // namespace ribbon
