// Tile shapes: the four ribbon L-shaped n-ominoes T1-T4, the 2x2 square T5,
// k-bars, and extra rectangle tiles. Translations only; a placement is a
// shape plus an integer offset.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/geometry.hpp"

namespace ribbon {

enum class TileId : uint8_t { T1, T2, T3, T4, T5, BarH, BarV, RectExtra };

// A normalized tile: min x = min y = 0, cells sorted row-major.
// Identity is (id, n) for the named tiles and (id, height, base) for extras.
struct TileShape {
    TileId id = TileId::T1;
    int n = 0;           // arm parameter for T1-T4, bar length for bars, 2 for T5
    int rect_h = 0;      // extras only
    int rect_w = 0;
    std::vector<Cell> cells;

    int area() const { return static_cast<int>(cells.size()); }
    std::string label() const;  // "T1:4", "T5", "BH:3", "BV:3", "R:2x3"

    friend bool operator==(const TileShape& a, const TileShape& b) {
        return a.id == b.id && a.n == b.n && a.rect_h == b.rect_h && a.rect_w == b.rect_w;
    }
    friend auto operator<=>(const TileShape& a, const TileShape& b) {
        if (auto c = a.id <=> b.id; c != 0) return c;
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.rect_h <=> b.rect_h; c != 0) return c;
        return a.rect_w <=> b.rect_w;
    }
};

// The four ribbon L n-ominoes, n >= 3:
//   T1: vertical arm in column 0, foot at (1,0)
//   T2: vertical arm in column 1, foot at (0,n-2)
//   T3: horizontal arm in row 0, head at (0,1)
//   T4: horizontal arm in row 1, foot at (n-2,0)
// T1@(x,y) + T2@(x,y+1) exactly cover the n x 2 vertical rectangle at (x,y);
// T3@(x,y) + T4@(x+1,y) the 2 x n horizontal one. reflect_diag swaps T1<->T3
// and T2<->T4.
std::array<TileShape, 4> ribbon_L_tiles(int n);

TileShape square_tile();                       // T5, the 2x2 square
TileShape bar_tile(bool horizontal, int k);    // 1 x k (horizontal) or k x 1
TileShape rect_extra_tile(int height, int base);

// True iff no two cells lie on a common line parallel to y = x, i.e. all
// values y - x are distinct. Connectivity is not part of this predicate
// (see is_connected).
bool is_ribbon(const TileShape& shape);

enum class TileSetKind { Tn, TnPlus, Bars, Custom };

// Ordered tile list; the order is canonical and fixes solver determinism.
struct TileSet {
    std::vector<TileShape> tiles;
    std::string name;
};

TileSet make_tileset(TileSetKind kind, int n,
                     const std::vector<std::pair<int, int>>& extras = {});

// Tile set spec strings: "Tn:4", "Tn+:6", "bars:3", "Tn:4,rect:2x3",
// "Tn:4+Tn:6". ',' and '+' both join components, except that "Tn+:" is a
// single token. Throws std::invalid_argument on malformed specs.
TileSet parse_tileset(std::string_view spec);

struct Placement {
    TileShape tile;  // by value so tilings are self-contained
    Cell offset;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.tile == b.tile && a.offset == b.offset;
    }
    // Canonical tiling order: (offset.y, offset.x, tile identity).
    friend auto operator<=>(const Placement& a, const Placement& b) {
        if (auto c = a.offset <=> b.offset; c != 0) return c;
        return a.tile <=> b.tile;
    }
};

std::vector<Cell> covered_cells(const Placement& p);  // sorted row-major
std::string to_string(const Placement& p);            // "T1:4@0,0"

// All placements of tiles from `ts` that fit inside `r`, in canonical
// order: tile order within the set, then offset row-major.
std::vector<Placement> placements(const TileSet& ts, const Region& r);

// k-copy of a tile shape: each cell becomes a k x k block.
Region k_copy_region(const TileShape& shape, int k);

}  // namespace ribbon
