#include "ribbon/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ribbon {

std::string render_text(const Tiling& t) {
    if (t.region.empty()) return "";
    Cell lo = t.region.anchor();
    Cell hi = t.region.bound_max();
    int rows = hi.y - lo.y + 1;
    int cols = hi.x - lo.x + 1;
    std::vector<std::string> grid(static_cast<size_t>(rows),
                                  std::string(static_cast<size_t>(cols), '.'));
    static const char* letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    for (size_t i = 0; i < t.placements.size(); ++i) {
        char letter = letters[i % 52];
        for (const Cell& c : covered_cells(t.placements[i]))
            grid[static_cast<size_t>(hi.y - c.y)][static_cast<size_t>(c.x - lo.x)] = letter;
    }
    std::string out;
    for (const std::string& row : grid) {
        out += row;
        out += '\n';
    }
    return out;
}

namespace {

const char* tile_fill(TileId id) {
    switch (id) {
        case TileId::T1: return "#e41a1c";
        case TileId::T2: return "#377eb8";
        case TileId::T3: return "#4daf4a";
        case TileId::T4: return "#984ea3";
        case TileId::T5: return "#ff7f00";
        case TileId::BarH: return "#a65628";
        case TileId::BarV: return "#f781bf";
        case TileId::RectExtra: return "#999999";
    }
    return "#000000";
}

// Boundary polygon of a simply connected cell set, counterclockwise in
// lattice coordinates, starting at the smallest vertex.
std::vector<Cell> outline(const std::vector<Cell>& cells) {
    std::set<Cell> in(cells.begin(), cells.end());
    std::map<Cell, Cell> next;  // directed boundary edges, interior on the left
    for (const Cell& c : cells) {
        if (!in.count({c.x, c.y - 1})) next[{c.x, c.y}] = {c.x + 1, c.y};
        if (!in.count({c.x + 1, c.y})) next[{c.x + 1, c.y}] = {c.x + 1, c.y + 1};
        if (!in.count({c.x, c.y + 1})) next[{c.x + 1, c.y + 1}] = {c.x, c.y + 1};
        if (!in.count({c.x - 1, c.y})) next[{c.x, c.y + 1}] = {c.x, c.y};
    }
    Cell start = next.begin()->first;
    std::vector<Cell> loop{start};
    Cell cur = next.at(start);
    while (!(cur == start)) {
        loop.push_back(cur);
        cur = next.at(cur);
    }
    // drop collinear intermediate vertices
    std::vector<Cell> simplified;
    size_t m = loop.size();
    for (size_t i = 0; i < m; ++i) {
        Cell prev = loop[(i + m - 1) % m], here = loop[i], nxt = loop[(i + 1) % m];
        Cell d1 = here - prev, d2 = nxt - here;
        if (d1.x * d2.y - d1.y * d2.x != 0) simplified.push_back(here);
    }
    return simplified;
}

}  // namespace

std::string render_svg(const Tiling& t) {
    constexpr int scale = 32;
    Cell lo = t.region.anchor();
    Cell hi = t.region.bound_max();
    int width = t.region.empty() ? 0 : (hi.x - lo.x + 1) * scale;
    int height = t.region.empty() ? 0 : (hi.y - lo.y + 1) * scale;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (const Placement& p : t.placements) {
        out << "<polygon points=\"";
        std::vector<Cell> poly = outline(covered_cells(p));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (i) out << ' ';
            // lattice (x,y) -> SVG (x, flipped y)
            out << (poly[i].x - lo.x) * scale << ',' << (hi.y + 1 - poly[i].y) * scale;
        }
        out << "\" fill=\"" << tile_fill(p.tile.id)
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ribbon
