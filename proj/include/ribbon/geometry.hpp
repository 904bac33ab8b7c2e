// Lattice primitives: cells, finite regions, translations, diagonal reflection.
#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ribbon {

// A cell names the unit square [x,x+1] x [y,y+1] by its lower-left corner.
// Negative coordinates are allowed for intermediate constructions.
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Cell, Cell) = default;
    // Row-major order (y first, then x); used everywhere a canonical cell
    // order is needed.
    friend constexpr auto operator<=>(Cell a, Cell b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
};

std::string to_string(Cell c);

// Sorts row-major and removes duplicates.
void normalize_cells(std::vector<Cell>& cells);

// A finite set of cells. `cells` is always sorted row-major and
// duplicate-free; equality is set equality (the name does not count).
struct Region {
    std::vector<Cell> cells;
    std::string name;

    int area() const { return static_cast<int>(cells.size()); }
    bool empty() const { return cells.empty(); }
    bool contains(Cell c) const;
    // Bounding-box lower-left corner; the region's declared anchor for
    // parity-sensitive checks. (0,0) for the empty region.
    Cell anchor() const;
    Cell bound_max() const;  // bounding-box upper-right cell; (-1,-1) if empty

    friend bool operator==(const Region& a, const Region& b) { return a.cells == b.cells; }
};

// a x b rectangle: a is the height, b is the base.
Region rect_region(int height, int base, Cell anchor = {0, 0});

// Replaces each cell (x,y) by the k x k block anchored at (k*x, k*y).
std::vector<Cell> scale_cells(std::span<const Cell> cells, int k);

// Maps (x,y) -> (y,x). Involution.
std::vector<Cell> reflect_diag(std::span<const Cell> cells);

// Deduplicates; duplicates, if any, are appended to *duplicates.
Region region_from_cells(std::vector<Cell> cells, std::string name = "",
                         std::vector<Cell>* duplicates = nullptr);

// 4-neighbour connectivity. The empty region counts as connected.
bool is_connected(const Region& r);

// Text formats:
//   grid <rows> <cols> <x0> <y0>   followed by `rows` lines top-to-bottom,
//                                  '#' = cell present, '.' = absent;
//                                  (x0,y0) is the lower-left anchor.
//   cells                          followed by one "x y" pair per line.
// read accepts both; write emits the grid form (cells form for the empty
// region). Malformed input throws std::runtime_error.
Region read_region(std::istream& in, std::string name = "");
void write_region(std::ostream& out, const Region& r);
Region read_region_file(const std::string& path);

}  // namespace ribbon
