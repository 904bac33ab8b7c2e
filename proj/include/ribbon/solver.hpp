// Exact-cover engine over (Region, TileSet): decide tileability, count,
// enumerate, validate. Deterministic: branches on the lowest-then-leftmost
// uncovered cell, trying tiles in canonical set order.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/tiles.hpp"

namespace ribbon {

// An exact cover of `region` by `placements`, kept in canonical order:
// sorted by (offset.y, offset.x, tile identity).
struct Tiling {
    Region region;
    std::vector<Placement> placements;
};

std::string to_string(const Tiling& t);  // placements joined by ' '

struct SolveStats {
    uint64_t nodes = 0;      // placements tried during the search
    uint64_t solutions = 0;  // solutions visited
    bool truncated = false;  // an enumeration/count limit was hit
};

// Visits every tiling in deterministic search order until the visitor
// returns false. Returns the stats; stats.truncated is set when the
// visitor stopped the search early.
SolveStats for_each_tiling(const Region& r, const TileSet& ts,
                           const std::function<bool(const Tiling&)>& visit);

// First tiling in the deterministic branching order, if any.
std::optional<Tiling> find_tiling(const Region& r, const TileSet& ts);

// Exact count if <= cap, otherwise cap with stats.truncated = true.
// cap must be >= 1.
std::pair<uint64_t, SolveStats> count_tilings(const Region& r, const TileSet& ts, uint64_t cap);

struct EnumerateResult {
    std::vector<Tiling> tilings;
    bool truncated = false;
    SolveStats stats;
};

// Up to `limit` distinct tilings in deterministic order. limit >= 1.
EnumerateResult enumerate_tilings(const Region& r, const TileSet& ts, uint64_t limit);

struct ValidationResult {
    enum class Issue { None, Overlap, Uncovered, OutsideRegion };
    bool ok = false;
    Issue issue = Issue::None;
    Cell cell{};               // first offending cell, row-major
    int placement_index = -1;  // placement involved, if any
    std::string message;
};

// Exact-cover referee: placements pairwise disjoint, union = region cells.
ValidationResult validate_tiling(const Tiling& t);

// Sorts placements into canonical order and returns the tiling.
Tiling make_tiling(Region region, std::vector<Placement> placements);

}  // namespace ribbon
