#include "ribbon/pattern.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ribbon {

std::vector<Cell> block_cells(const Block& b) {
    int w = 0, h = 0;
    switch (b.kind) {
        case BlockKind::V: w = 2; h = b.n; break;
        case BlockKind::H: w = b.n; h = 2; break;
        case BlockKind::S: w = 2; h = 2; break;
    }
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(w) * h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) cells.push_back({b.corner.x + i, b.corner.y + j});
    return cells;
}

Block partner_block(const Placement& p) {
    Cell o = p.offset;
    switch (p.tile.id) {
        case TileId::T1: return {BlockKind::V, o, p.tile.n};
        case TileId::T2: return {BlockKind::V, {o.x, o.y - 1}, p.tile.n};
        case TileId::T3: return {BlockKind::H, o, p.tile.n};
        case TileId::T4: return {BlockKind::H, {o.x - 1, o.y}, p.tile.n};
        case TileId::T5: return {BlockKind::S, o, 2};
        default:
            throw std::invalid_argument("partner_block: " + p.tile.label() +
                                        " does not belong to a pattern block");
    }
}

// The forced partner of an L placement: the other half of its block.
static Placement partner_placement(const Placement& p) {
    auto tiles = ribbon_L_tiles(p.tile.n);
    Cell o = p.offset;
    switch (p.tile.id) {
        case TileId::T1: return {tiles[1], {o.x, o.y + 1}};
        case TileId::T2: return {tiles[0], {o.x, o.y - 1}};
        case TileId::T3: return {tiles[3], {o.x + 1, o.y}};
        case TileId::T4: return {tiles[2], {o.x - 1, o.y}};
        default: throw std::invalid_argument("partner_placement: not an L tile");
    }
}

static bool is_L(TileId id) {
    return id == TileId::T1 || id == TileId::T2 || id == TileId::T3 || id == TileId::T4;
}

PatternCheck follows_rectangular_pattern(const Tiling& t) {
    PatternCheck res;
    res.anchor = t.region.anchor();
    res.anchored_at_origin = (res.anchor == Cell{0, 0});
    auto even_corner = [&](Cell c) {
        return (c.x - res.anchor.x) % 2 == 0 && (c.y - res.anchor.y) % 2 == 0;
    };

    std::map<std::pair<Cell, std::pair<int, int>>, int> index;  // (offset,(id,n)) -> placement
    for (size_t i = 0; i < t.placements.size(); ++i) {
        const Placement& p = t.placements[i];
        index[{p.offset, {static_cast<int>(p.tile.id), p.tile.n}}] = static_cast<int>(i);
    }
    auto find_placement = [&](const Placement& want) -> int {
        auto it = index.find({want.offset, {static_cast<int>(want.tile.id), want.tile.n}});
        return it == index.end() ? -1 : it->second;
    };

    PatternDecomposition d;
    d.partner.assign(t.placements.size(), -1);
    for (size_t i = 0; i < t.placements.size(); ++i) {
        const Placement& p = t.placements[i];
        if (p.tile.id == TileId::T5) {
            if (!even_corner(p.offset)) {
                res.witness_index = static_cast<int>(i);
                res.reason = to_string(p) + ": 2x2 square at odd corner";
                return res;
            }
            d.partner[i] = static_cast<int>(i);
            d.blocks.push_back({BlockKind::S, p.offset, 2});
            continue;
        }
        if (!is_L(p.tile.id)) {
            res.witness_index = static_cast<int>(i);
            res.reason = to_string(p) + ": tile type cannot be part of the rectangular pattern";
            return res;
        }
        int j = find_placement(partner_placement(p));
        if (j < 0) {
            res.witness_index = static_cast<int>(i);
            res.reason = to_string(p) + ": pair partner missing";
            return res;
        }
        Block b = partner_block(p);
        if (!even_corner(b.corner)) {
            res.witness_index = static_cast<int>(i);
            res.reason = to_string(p) + ": block corner " + to_string(b.corner) + " is odd";
            return res;
        }
        d.partner[i] = j;
        if (static_cast<int>(i) < j) d.blocks.push_back(b);  // record each block once
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    res.follows = true;
    res.decomposition = std::move(d);
    return res;
}

Tiling to_bar_tiling(const PatternDecomposition& d) {
    int n = 0;
    for (const Block& b : d.blocks) {
        if (b.corner.x % 2 != 0 || b.corner.y % 2 != 0)
            throw std::invalid_argument("to_bar_tiling: block corner " + to_string(b.corner) +
                                        " is not even");
        if (b.kind != BlockKind::S) {
            if (n == 0) n = b.n;
            else if (n != b.n)
                throw std::invalid_argument("to_bar_tiling: mixed block parameters");
        }
    }
    if (n % 2 != 0)
        throw std::invalid_argument("to_bar_tiling: block parameter must be even");
    std::vector<Placement> bars;
    std::vector<Cell> cells;
    for (const Block& b : d.blocks) {
        Cell at{b.corner.x / 2, b.corner.y / 2};
        Placement p;
        switch (b.kind) {
            case BlockKind::V: p = {bar_tile(false, b.n / 2), at}; break;
            case BlockKind::H: p = {bar_tile(true, b.n / 2), at}; break;
            case BlockKind::S: p = {rect_extra_tile(1, 1), at}; break;
        }
        for (const Cell& c : covered_cells(p)) cells.push_back(c);
        bars.push_back(std::move(p));
    }
    return make_tiling(region_from_cells(std::move(cells), "half-grid"), std::move(bars));
}

}  // namespace ribbon
