#include "ribbon/flipgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "ribbon/constructions.hpp"

namespace ribbon {

std::string to_string(const MoveSite& s) {
    return std::string(s.before == BlockKind::V ? "V" : "H") + "->" +
           (s.before == BlockKind::V ? "H" : "V") + "@" + std::to_string(s.corner.x) + "," +
           std::to_string(s.corner.y) + " n=" + std::to_string(s.n);
}

namespace {

struct PairBlocks {
    int n = 0;
    std::set<Cell> v_corners;
    std::set<Cell> h_corners;
    // block corner -> the two placement indices covering it
    std::map<Cell, std::pair<int, int>> v_members;
    std::map<Cell, std::pair<int, int>> h_members;
};

// Recovers the forced two-L blocks present in the tiling.
PairBlocks collect_pair_blocks(const Tiling& t) {
    PairBlocks pb;
    std::map<std::pair<Cell, int>, int> by_key;  // (offset, tile id) -> index
    for (size_t i = 0; i < t.placements.size(); ++i) {
        const Placement& p = t.placements[i];
        if (p.tile.id == TileId::T5) continue;
        if (p.tile.id == TileId::BarH || p.tile.id == TileId::BarV ||
            p.tile.id == TileId::RectExtra)
            throw std::invalid_argument("local moves: tiling contains non-L tile " +
                                        p.tile.label());
        if (pb.n == 0) pb.n = p.tile.n;
        else if (pb.n != p.tile.n)
            throw std::invalid_argument("local moves: mixed arm parameters");
        by_key[{p.offset, static_cast<int>(p.tile.id)}] = static_cast<int>(i);
    }
    auto lookup = [&](Cell offset, TileId id) -> int {
        auto it = by_key.find({offset, static_cast<int>(id)});
        return it == by_key.end() ? -1 : it->second;
    };
    for (const auto& [key, idx] : by_key) {
        const auto& [offset, id] = key;
        if (id == static_cast<int>(TileId::T1)) {
            int mate = lookup({offset.x, offset.y + 1}, TileId::T2);
            if (mate >= 0) {
                pb.v_corners.insert(offset);
                pb.v_members[offset] = {idx, mate};
            }
        } else if (id == static_cast<int>(TileId::T3)) {
            int mate = lookup({offset.x + 1, offset.y}, TileId::T4);
            if (mate >= 0) {
                pb.h_corners.insert(offset);
                pb.h_members[offset] = {idx, mate};
            }
        }
    }
    return pb;
}

}  // namespace

std::vector<MoveSite> local_move_sites(const Tiling& t) {
    std::vector<MoveSite> sites;
    PairBlocks pb = collect_pair_blocks(t);
    if (pb.n == 0 || pb.n % 2 != 0) return sites;  // no L tiles or odd n: no square move
    int half = pb.n / 2;
    for (const Cell& c : pb.v_corners) {
        bool all = true;
        for (int i = 0; i < half && all; ++i) all = pb.v_corners.count({c.x + 2 * i, c.y}) > 0;
        if (all) sites.push_back({c, BlockKind::V, pb.n});
    }
    for (const Cell& c : pb.h_corners) {
        bool all = true;
        for (int j = 0; j < half && all; ++j) all = pb.h_corners.count({c.x, c.y + 2 * j}) > 0;
        if (all) sites.push_back({c, BlockKind::H, pb.n});
    }
    std::sort(sites.begin(), sites.end(), [](const MoveSite& a, const MoveSite& b) {
        if (a.corner != b.corner) return a.corner < b.corner;
        return a.before < b.before;
    });
    return sites;
}

Tiling apply_move(const Tiling& t, const MoveSite& s) {
    if (s.before != BlockKind::V && s.before != BlockKind::H)
        throw std::invalid_argument("apply_move: site orientation must be V or H");
    PairBlocks pb = collect_pair_blocks(t);
    if (pb.n != s.n)
        throw std::invalid_argument("apply_move: site parameter does not match tiling");
    int half = s.n / 2;
    std::set<int> removed;
    for (int i = 0; i < half; ++i) {
        Cell corner = s.before == BlockKind::V ? Cell{s.corner.x + 2 * i, s.corner.y}
                                               : Cell{s.corner.x, s.corner.y + 2 * i};
        const auto& members = s.before == BlockKind::V ? pb.v_members : pb.h_members;
        auto it = members.find(corner);
        if (it == members.end())
            throw std::invalid_argument("apply_move: stale site, block at " + to_string(corner) +
                                        " not present");
        removed.insert(it->second.first);
        removed.insert(it->second.second);
    }
    std::vector<Placement> next;
    next.reserve(t.placements.size());
    for (size_t i = 0; i < t.placements.size(); ++i)
        if (!removed.count(static_cast<int>(i))) next.push_back(t.placements[i]);
    BlockKind after = s.before == BlockKind::V ? BlockKind::H : BlockKind::V;
    for (int i = 0; i < half; ++i) {
        Cell corner = after == BlockKind::V ? Cell{s.corner.x + 2 * i, s.corner.y}
                                            : Cell{s.corner.x, s.corner.y + 2 * i};
        for (Placement& p : fill_block({after, corner, s.n})) next.push_back(std::move(p));
    }
    return make_tiling(t.region, std::move(next));
}

FlipResult flip_connected(const Region& r, const TileSet& ts, uint64_t limit) {
    EnumerateResult en = enumerate_tilings(r, ts, limit);
    if (en.truncated)
        throw std::runtime_error("flip_connected: more than " + std::to_string(limit) +
                                 " tilings; connectivity undecidable at this limit");
    FlipResult res;
    std::map<std::string, int> index;
    for (const Tiling& t : en.tilings) {
        res.graph.vertices.push_back(to_string(t));
        res.graph.tilings.push_back(t);
        index[res.graph.vertices.back()] = static_cast<int>(res.graph.vertices.size()) - 1;
    }
    std::set<std::pair<int, int>> seen;
    for (size_t vi = 0; vi < res.graph.tilings.size(); ++vi) {
        for (const MoveSite& site : local_move_sites(res.graph.tilings[vi])) {
            Tiling moved = apply_move(res.graph.tilings[vi], site);
            auto it = index.find(to_string(moved));
            if (it == index.end())
                throw std::runtime_error("flip_connected: move produced an unknown tiling");
            int a = static_cast<int>(vi), b = it->second;
            if (a == b) continue;
            auto key = std::minmax(a, b);
            if (seen.insert({key.first, key.second}).second)
                res.graph.edges.push_back({key.first, key.second,
                                           a < b ? site : MoveSite{site.corner,
                                                                   site.before == BlockKind::V
                                                                       ? BlockKind::H
                                                                       : BlockKind::V,
                                                                   site.n}});
        }
    }
    std::sort(res.graph.edges.begin(), res.graph.edges.end(),
              [](const FlipGraph::Edge& a, const FlipGraph::Edge& b) {
                  return std::pair(a.a, a.b) < std::pair(b.a, b.b);
              });
    // component sizes via BFS in vertex order
    int nv = static_cast<int>(res.graph.vertices.size());
    std::vector<std::vector<int>> adj(nv);
    for (const auto& e : res.graph.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> comp(nv, -1);
    for (int start = 0; start < nv; ++start) {
        if (comp[start] != -1) continue;
        int size = 0;
        std::deque<int> queue{start};
        comp[start] = start;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++size;
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = start;
                    queue.push_back(w);
                }
        }
        res.component_sizes.push_back(size);
    }
    std::sort(res.component_sizes.rbegin(), res.component_sizes.rend());
    res.connected = nv <= 1 || res.component_sizes.size() == 1;
    return res;
}

std::pair<Region, Tiling> two_tiling_region(int n, int extra) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("two_tiling_region: n must be even and >= 4");
    if (extra < 0) throw std::invalid_argument("two_tiling_region: extra must be >= 0");
    int steps = n / 2 + extra;
    Cell lift{0, n - 2};  // translate up so the region sits at nonnegative coordinates
    auto tiles = ribbon_L_tiles(n);
    std::vector<Placement> ps;
    for (int m = 0; m < n / 2 - 1; ++m)
        for (Placement& p : fill_block({BlockKind::H, Cell{0, -(n - 2) + 2 * m} + lift, n}))
            ps.push_back(std::move(p));
    for (int k = 0; k < steps; ++k) {
        ps.push_back({tiles[2], Cell{k, k} + lift});                        // T3 staircase
        ps.push_back({tiles[1], Cell{n - 1 + k, -(n - 2) + k} + lift});     // T2 staircase
    }
    for (Placement& p : fill_block({BlockKind::H, Cell{steps, steps} + lift, n}))
        ps.push_back(std::move(p));
    std::vector<Cell> cells;
    for (const Placement& p : ps)
        for (const Cell& c : covered_cells(p)) cells.push_back(c);
    Region region = region_from_cells(std::move(cells),
                                      "twotiling(" + std::to_string(n) + "," +
                                          std::to_string(extra) + ")");
    return {region, make_tiling(region, std::move(ps))};
}

}  // namespace ribbon
