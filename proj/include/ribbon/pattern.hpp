// Rectangular-pattern checker: decides whether a tiling reduces to 2x2,
// 2xn and nx2 blocks with even corners, each 2xn/nx2 block covered by a
// forced pair of ribbon L tiles; plus the bijection onto half-scale bar
// tilings.
#pragma once

#include <optional>
#include <vector>

#include "ribbon/solver.hpp"

namespace ribbon {

enum class BlockKind { V, H, S };  // n x 2 vertical, 2 x n horizontal, 2 x 2 square

struct Block {
    BlockKind kind = BlockKind::S;
    Cell corner{};  // lower-left
    int n = 2;

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block& a, const Block& b) {
        if (auto c = a.corner <=> b.corner; c != 0) return c;
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.n <=> b.n;
    }
};

std::vector<Cell> block_cells(const Block& b);  // sorted row-major

struct PatternDecomposition {
    std::vector<Block> blocks;     // sorted by (corner, kind, n)
    std::vector<int> partner;      // per placement: index of its pair partner
                                   // (T5 placements map to themselves)
};

// The unique block a placement would belong to in a pattern decomposition:
//   T1@(x,y) -> V@(x,y)    T2@(x,y) -> V@(x,y-1)
//   T3@(x,y) -> H@(x,y)    T4@(x,y) -> H@(x-1,y)
//   T5@(x,y) -> S@(x,y)
// Bars and extra rectangles cannot belong to a block: invalid-argument.
Block partner_block(const Placement& p);

struct PatternCheck {
    bool follows = false;
    std::optional<PatternDecomposition> decomposition;  // set when follows
    int witness_index = -1;                             // first offending placement
    std::string reason;                                 // empty when follows
    Cell anchor{};                                      // parity reference point
    bool anchored_at_origin = true;
};

// Parity of block corners is measured relative to the region's declared
// anchor (bounding-box lower-left); for origin-anchored regions this is
// absolute-coordinate parity. The anchor used is recorded in the result.
PatternCheck follows_rectangular_pattern(const Tiling& t);

// Collapses a pattern decomposition to the half-scale grid: V/H blocks
// become (n/2)-bars, S blocks become 1x1 tiles. All block corners must be
// even in absolute coordinates and all V/H blocks must share one n;
// otherwise std::invalid_argument.
Tiling to_bar_tiling(const PatternDecomposition& d);

}  // namespace ribbon
