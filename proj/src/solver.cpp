#include "ribbon/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ribbon {

std::string to_string(const Tiling& t) {
    std::string s;
    for (size_t i = 0; i < t.placements.size(); ++i) {
        if (i) s += ' ';
        s += to_string(t.placements[i]);
    }
    return s;
}

Tiling make_tiling(Region region, std::vector<Placement> placements) {
    std::sort(placements.begin(), placements.end());
    return Tiling{std::move(region), std::move(placements)};
}

namespace {

// Occupancy mask over the region's cell indices (row-major rank).
struct Mask {
    std::vector<uint64_t> words;

    explicit Mask(size_t bits) : words((bits + 63) / 64, 0) {}
    void set(size_t i) { words[i >> 6] |= uint64_t{1} << (i & 63); }
    bool intersects(const Mask& other) const {
        for (size_t w = 0; w < words.size(); ++w)
            if (words[w] & other.words[w]) return true;
        return false;
    }
    void add(const Mask& other) {
        for (size_t w = 0; w < words.size(); ++w) words[w] |= other.words[w];
    }
    void remove(const Mask& other) {
        for (size_t w = 0; w < words.size(); ++w) words[w] &= ~other.words[w];
    }
    // Index of the first zero bit among the first `bits` bits, or `bits`.
    size_t first_free(size_t from, size_t bits) const {
        for (size_t i = from; i < bits; ++i) {
            uint64_t word = words[i >> 6] >> (i & 63);
            if ((word & 1) == 0) return i;
            // skip the run of ones inside this word
            unsigned run = static_cast<unsigned>(std::countr_one(word));
            i += run - 1;
        }
        return bits;
    }
};

struct Candidate {
    Mask mask;
    int placement = 0;  // index into the placement list
};

struct Search {
    const Region& region;
    std::vector<Placement> all;            // canonical placement list
    std::vector<std::vector<Candidate>> by_cell;  // keyed by min covered cell rank
    size_t ncells = 0;
    SolveStats stats;
    const std::function<bool(const Tiling&)>& visit;
    std::vector<int> chosen;
    Mask occupied;
    bool stopped = false;

    Search(const Region& r, const TileSet& ts, const std::function<bool(const Tiling&)>& v)
        : region(r), visit(v), occupied(r.cells.size()) {
        ncells = r.cells.size();
        all = placements(ts, r);
        by_cell.resize(ncells);
        for (size_t pi = 0; pi < all.size(); ++pi) {
            Candidate cand{Mask(ncells), static_cast<int>(pi)};
            size_t min_rank = ncells;
            for (const Cell& c : covered_cells(all[pi])) {
                auto it = std::lower_bound(r.cells.begin(), r.cells.end(), c);
                size_t rank = static_cast<size_t>(it - r.cells.begin());
                cand.mask.set(rank);
                min_rank = std::min(min_rank, rank);
            }
            // generation order is canonical, so each bucket stays in
            // (tile order, offset row-major) order
            by_cell[min_rank].push_back(std::move(cand));
        }
    }

    void emit() {
        ++stats.solutions;
        std::vector<Placement> sol;
        sol.reserve(chosen.size());
        for (int pi : chosen) sol.push_back(all[static_cast<size_t>(pi)]);
        std::sort(sol.begin(), sol.end());
        if (!visit(Tiling{region, std::move(sol)})) stopped = true;
    }

    void dfs(size_t cursor) {
        size_t cell = occupied.first_free(cursor, ncells);
        if (cell == ncells) {
            emit();
            return;
        }
        for (const Candidate& cand : by_cell[cell]) {
            if (cand.mask.intersects(occupied)) continue;
            ++stats.nodes;
            occupied.add(cand.mask);
            chosen.push_back(cand.placement);
            dfs(cell + 1);
            chosen.pop_back();
            occupied.remove(cand.mask);
            if (stopped) return;
        }
    }
};

}  // namespace

SolveStats for_each_tiling(const Region& r, const TileSet& ts,
                           const std::function<bool(const Tiling&)>& visit) {
    if (r.empty()) {
        SolveStats stats;
        stats.solutions = 1;
        if (!visit(Tiling{r, {}})) stats.truncated = false;  // nothing left anyway
        return stats;
    }
    if (ts.tiles.empty()) return {};
    // area pruning: every tile area is a multiple of g, so the region
    // area must be too
    int g = 0;
    for (const TileShape& t : ts.tiles) g = std::gcd(g, t.area());
    if (g == 0 || r.area() % g != 0) return {};
    Search search(r, ts, visit);
    search.dfs(0);
    SolveStats stats = search.stats;
    stats.truncated = search.stopped;
    return stats;
}

std::optional<Tiling> find_tiling(const Region& r, const TileSet& ts) {
    std::optional<Tiling> result;
    for_each_tiling(r, ts, [&](const Tiling& t) {
        result = t;
        return false;
    });
    return result;
}

std::pair<uint64_t, SolveStats> count_tilings(const Region& r, const TileSet& ts, uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("count_tilings: cap must be >= 1");
    // count to cap+1 so "exactly cap" and "more than cap" are distinguishable
    uint64_t count = 0;
    SolveStats stats = for_each_tiling(r, ts, [&](const Tiling&) {
        ++count;
        return count <= cap;
    });
    if (count > cap) {
        stats.truncated = true;
        stats.solutions = cap;
        return {cap, stats};
    }
    stats.truncated = false;
    return {count, stats};
}

EnumerateResult enumerate_tilings(const Region& r, const TileSet& ts, uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_tilings: limit must be >= 1");
    EnumerateResult res;
    uint64_t seen = 0;
    res.stats = for_each_tiling(r, ts, [&](const Tiling& t) {
        ++seen;
        if (seen <= limit) res.tilings.push_back(t);
        return seen <= limit;
    });
    if (seen > limit) {
        res.truncated = true;
        res.stats.truncated = true;
        res.stats.solutions = limit;
    }
    return res;
}

ValidationResult validate_tiling(const Tiling& t) {
    ValidationResult res;
    // first overlap or outside-region cell, scanning placements in order
    std::vector<Cell> covered;
    for (size_t pi = 0; pi < t.placements.size(); ++pi) {
        for (const Cell& c : covered_cells(t.placements[pi])) {
            if (!t.region.contains(c)) {
                res.issue = ValidationResult::Issue::OutsideRegion;
                res.cell = c;
                res.placement_index = static_cast<int>(pi);
                res.message = "placement " + to_string(t.placements[pi]) +
                              " covers cell " + to_string(c) + " outside the region";
                return res;
            }
            covered.push_back(c);
        }
    }
    std::sort(covered.begin(), covered.end());
    for (size_t i = 1; i < covered.size(); ++i) {
        if (covered[i] == covered[i - 1]) {
            res.issue = ValidationResult::Issue::Overlap;
            res.cell = covered[i];
            for (size_t pi = 0; pi < t.placements.size(); ++pi) {
                std::vector<Cell> cells = covered_cells(t.placements[pi]);
                if (std::binary_search(cells.begin(), cells.end(), covered[i])) {
                    res.placement_index = static_cast<int>(pi);
                    break;
                }
            }
            res.message = "cell " + to_string(covered[i]) + " covered twice";
            return res;
        }
    }
    // covered is now duplicate-free and sorted; compare against the region
    if (covered != t.region.cells) {
        for (const Cell& c : t.region.cells) {
            if (!std::binary_search(covered.begin(), covered.end(), c)) {
                res.issue = ValidationResult::Issue::Uncovered;
                res.cell = c;
                res.message = "cell " + to_string(c) + " not covered";
                return res;
            }
        }
    }
    res.ok = true;
    res.message = "exact cover";
    return res;
}

}  // namespace ribbon
