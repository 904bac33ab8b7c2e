#include "ribbon/tiles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ribbon {

std::string TileShape::label() const {
    switch (id) {
        case TileId::T1: return "T1:" + std::to_string(n);
        case TileId::T2: return "T2:" + std::to_string(n);
        case TileId::T3: return "T3:" + std::to_string(n);
        case TileId::T4: return "T4:" + std::to_string(n);
        case TileId::T5: return "T5";
        case TileId::BarH: return "BH:" + std::to_string(n);
        case TileId::BarV: return "BV:" + std::to_string(n);
        case TileId::RectExtra:
            return "R:" + std::to_string(rect_h) + "x" + std::to_string(rect_w);
    }
    return "?";
}

static TileShape make_shape(TileId id, int n, std::vector<Cell> cells) {
    TileShape s;
    s.id = id;
    s.n = n;
    s.cells = std::move(cells);
    normalize_cells(s.cells);
    return s;
}

std::array<TileShape, 4> ribbon_L_tiles(int n) {
    if (n < 3) throw std::invalid_argument("ribbon_L_tiles: n must be >= 3");
    std::vector<Cell> t1, t2, t3, t4;
    for (int j = 0; j <= n - 2; ++j) {
        t1.push_back({0, j});
        t2.push_back({1, j});
    }
    t1.push_back({1, 0});
    t2.push_back({0, n - 2});
    for (int i = 0; i <= n - 2; ++i) {
        t3.push_back({i, 0});
        t4.push_back({i, 1});
    }
    t3.push_back({0, 1});
    t4.push_back({n - 2, 0});
    return {make_shape(TileId::T1, n, std::move(t1)), make_shape(TileId::T2, n, std::move(t2)),
            make_shape(TileId::T3, n, std::move(t3)), make_shape(TileId::T4, n, std::move(t4))};
}

TileShape square_tile() {
    return make_shape(TileId::T5, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

TileShape bar_tile(bool horizontal, int k) {
    if (k < 1) throw std::invalid_argument("bar_tile: k must be >= 1");
    std::vector<Cell> cells;
    for (int i = 0; i < k; ++i) cells.push_back(horizontal ? Cell{i, 0} : Cell{0, i});
    return make_shape(horizontal ? TileId::BarH : TileId::BarV, k, std::move(cells));
}

TileShape rect_extra_tile(int height, int base) {
    if (height < 1 || base < 1)
        throw std::invalid_argument("rect_extra_tile: dimensions must be >= 1");
    std::vector<Cell> cells;
    for (int j = 0; j < height; ++j)
        for (int i = 0; i < base; ++i) cells.push_back({i, j});
    TileShape s = make_shape(TileId::RectExtra, 0, std::move(cells));
    s.rect_h = height;
    s.rect_w = base;
    return s;
}

bool is_ribbon(const TileShape& shape) {
    std::set<int> diags;
    for (const Cell& c : shape.cells)
        if (!diags.insert(c.y - c.x).second) return false;
    return true;
}

static void append_unique(TileSet& ts, TileShape t) {
    for (const TileShape& existing : ts.tiles)
        if (existing == t) return;
    ts.tiles.push_back(std::move(t));
}

TileSet make_tileset(TileSetKind kind, int n, const std::vector<std::pair<int, int>>& extras) {
    TileSet ts;
    switch (kind) {
        case TileSetKind::Tn:
        case TileSetKind::TnPlus: {
            if (n < 3) throw std::invalid_argument("make_tileset: n must be >= 3");
            for (TileShape& t : ribbon_L_tiles(n)) ts.tiles.push_back(std::move(t));
            if (kind == TileSetKind::TnPlus) ts.tiles.push_back(square_tile());
            ts.name = (kind == TileSetKind::Tn ? "Tn(" : "Tn+(") + std::to_string(n) + ")";
            break;
        }
        case TileSetKind::Bars:
            if (n < 2) throw std::invalid_argument("make_tileset: bars need n >= 2");
            ts.tiles.push_back(bar_tile(true, n));
            ts.tiles.push_back(bar_tile(false, n));
            ts.name = "bars(" + std::to_string(n) + ")";
            break;
        case TileSetKind::Custom:
            ts.name = "custom";
            break;
    }
    for (auto [h, b] : extras) {
        append_unique(ts, rect_extra_tile(h, b));
        ts.name += "+rect(" + std::to_string(h) + "," + std::to_string(b) + ")";
    }
    return ts;
}

// Splits on ',' always and on '+' unless the '+' is followed by ':'
// (so "Tn+:6" stays one token while "Tn:4+Tn:6" splits).
static std::vector<std::string> split_spec(std::string_view spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < spec.size(); ++i) {
        char ch = spec[i];
        bool splits = (ch == ',') || (ch == '+' && (i + 1 >= spec.size() || spec[i + 1] != ':'));
        if (splits) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

static int parse_int(std::string_view s, const std::string& what) {
    if (s.empty()) throw std::invalid_argument("tileset: missing number in " + what);
    int value = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("tileset: bad number '" + std::string(s) + "' in " + what);
        value = value * 10 + (ch - '0');
        if (value > 1000000) throw std::invalid_argument("tileset: number too large in " + what);
    }
    return value;
}

TileSet parse_tileset(std::string_view spec) {
    TileSet ts;
    std::string name;
    for (const std::string& part : split_spec(spec)) {
        if (part.empty()) throw std::invalid_argument("tileset: empty component in spec");
        size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("tileset: expected kind:param, got '" + part + "'");
        std::string kind = part.substr(0, colon);
        std::string arg = part.substr(colon + 1);
        if (!name.empty()) name += "+";
        if (kind == "Tn" || kind == "Tn+") {
            int n = parse_int(arg, part);
            if (n < 3) throw std::invalid_argument("tileset: n must be >= 3 in '" + part + "'");
            for (TileShape& t : ribbon_L_tiles(n)) append_unique(ts, std::move(t));
            if (kind == "Tn+") append_unique(ts, square_tile());
            name += (kind == "Tn" ? "Tn(" : "Tn+(") + std::to_string(n) + ")";
        } else if (kind == "bars") {
            int k = parse_int(arg, part);
            if (k < 2) throw std::invalid_argument("tileset: bars need k >= 2 in '" + part + "'");
            append_unique(ts, bar_tile(true, k));
            append_unique(ts, bar_tile(false, k));
            name += "bars(" + std::to_string(k) + ")";
        } else if (kind == "rect") {
            size_t x = arg.find('x');
            if (x == std::string::npos)
                throw std::invalid_argument("tileset: rect expects AxB, got '" + part + "'");
            int h = parse_int(arg.substr(0, x), part);
            int b = parse_int(arg.substr(x + 1), part);
            if (h < 1 || b < 1)
                throw std::invalid_argument("tileset: rect dims must be >= 1 in '" + part + "'");
            append_unique(ts, rect_extra_tile(h, b));
            name += "rect(" + std::to_string(h) + "," + std::to_string(b) + ")";
        } else {
            throw std::invalid_argument("tileset: unknown kind '" + kind + "'");
        }
    }
    if (ts.tiles.empty()) throw std::invalid_argument("tileset: no tiles in spec");
    ts.name = name;
    return ts;
}

std::vector<Cell> covered_cells(const Placement& p) {
    std::vector<Cell> cells;
    cells.reserve(p.tile.cells.size());
    for (const Cell& c : p.tile.cells) cells.push_back(c + p.offset);
    return cells;  // translation preserves row-major order
}

std::string to_string(const Placement& p) {
    return p.tile.label() + "@" + std::to_string(p.offset.x) + "," + std::to_string(p.offset.y);
}

std::vector<Placement> placements(const TileSet& ts, const Region& r) {
    std::vector<Placement> out;
    if (r.empty()) return out;
    Cell lo = r.anchor();
    Cell hi = r.bound_max();
    for (const TileShape& tile : ts.tiles) {
        int tw = 0, th = 0;
        for (const Cell& c : tile.cells) {
            tw = std::max(tw, c.x);
            th = std::max(th, c.y);
        }
        for (int y = lo.y; y + th <= hi.y; ++y) {
            for (int x = lo.x; x + tw <= hi.x; ++x) {
                Placement p{tile, {x, y}};
                bool fits = true;
                for (const Cell& c : tile.cells) {
                    if (!r.contains(c + p.offset)) {
                        fits = false;
                        break;
                    }
                }
                if (fits) out.push_back(std::move(p));
            }
        }
    }
    return out;
}

Region k_copy_region(const TileShape& shape, int k) {
    if (k < 1) throw std::invalid_argument("k_copy_region: k must be >= 1");
    Region r;
    r.cells = scale_cells(shape.cells, k);
    r.name = "kcopy(" + shape.label() + "," + std::to_string(k) + ")";
    return r;
}

}  // namespace ribbon
