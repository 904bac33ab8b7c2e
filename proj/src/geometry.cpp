#include "ribbon/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ribbon {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

void normalize_cells(std::vector<Cell>& cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

bool Region::contains(Cell c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

Cell Region::anchor() const {
    if (cells.empty()) return {0, 0};
    int minx = cells.front().x;
    int miny = cells.front().y;  // sorted row-major, so front has min y
    for (const Cell& c : cells) minx = std::min(minx, c.x);
    return {minx, miny};
}

Cell Region::bound_max() const {
    if (cells.empty()) return {-1, -1};
    int maxx = cells.front().x;
    int maxy = cells.back().y;
    for (const Cell& c : cells) maxx = std::max(maxx, c.x);
    return {maxx, maxy};
}

Region rect_region(int height, int base, Cell anchor) {
    if (height < 1 || base < 1)
        throw std::invalid_argument("rect_region: dimensions must be >= 1");
    Region r;
    r.cells.reserve(static_cast<size_t>(height) * base);
    for (int j = 0; j < height; ++j)
        for (int i = 0; i < base; ++i)
            r.cells.push_back({anchor.x + i, anchor.y + j});
    r.name = "rect:" + std::to_string(height) + "x" + std::to_string(base);
    return r;
}

std::vector<Cell> scale_cells(std::span<const Cell> cells, int k) {
    if (k < 1) throw std::invalid_argument("scale_cells: k must be >= 1");
    std::vector<Cell> out;
    out.reserve(cells.size() * static_cast<size_t>(k) * k);
    for (const Cell& c : cells)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i)
                out.push_back({k * c.x + i, k * c.y + j});
    normalize_cells(out);
    return out;
}

std::vector<Cell> reflect_diag(std::span<const Cell> cells) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) out.push_back({c.y, c.x});
    normalize_cells(out);
    return out;
}

Region region_from_cells(std::vector<Cell> cells, std::string name,
                         std::vector<Cell>* duplicates) {
    std::sort(cells.begin(), cells.end());
    Region r;
    r.name = std::move(name);
    r.cells.reserve(cells.size());
    for (const Cell& c : cells) {
        if (!r.cells.empty() && r.cells.back() == c) {
            if (duplicates) duplicates->push_back(c);
            continue;
        }
        r.cells.push_back(c);
    }
    return r;
}

bool is_connected(const Region& r) {
    if (r.cells.size() <= 1) return true;
    std::vector<char> seen(r.cells.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
        Cell c = r.cells[stack.back()];
        stack.pop_back();
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell nb : nbrs) {
            auto it = std::lower_bound(r.cells.begin(), r.cells.end(), nb);
            if (it == r.cells.end() || !(*it == nb)) continue;
            size_t idx = static_cast<size_t>(it - r.cells.begin());
            if (!seen[idx]) {
                seen[idx] = 1;
                ++visited;
                stack.push_back(idx);
            }
        }
    }
    return visited == r.cells.size();
}

Region read_region(std::istream& in, std::string name) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("region: empty input");
    std::istringstream hs(header);
    std::string kind;
    hs >> kind;
    if (kind == "grid") {
        int rows = -1, cols = -1, x0 = 0, y0 = 0;
        if (!(hs >> rows >> cols >> x0 >> y0))
            throw std::runtime_error("region: malformed grid header: " + header);
        if (rows < 0 || cols < 0) throw std::runtime_error("region: negative grid size");
        std::vector<Cell> cells;
        for (int r = 0; r < rows; ++r) {
            std::string line;
            if (!std::getline(in, line))
                throw std::runtime_error("region: grid expects " + std::to_string(rows) + " rows");
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (static_cast<int>(line.size()) != cols)
                throw std::runtime_error("region: grid row " + std::to_string(r) + " has " +
                                         std::to_string(line.size()) + " columns, expected " +
                                         std::to_string(cols));
            for (int c = 0; c < cols; ++c) {
                if (line[c] == '#')
                    cells.push_back({x0 + c, y0 + (rows - 1 - r)});
                else if (line[c] != '.')
                    throw std::runtime_error(std::string("region: bad grid character '") +
                                             line[c] + "'");
            }
        }
        return region_from_cells(std::move(cells), std::move(name));
    }
    if (kind == "cells") {
        std::vector<Cell> cells;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            Cell c;
            if (!(ls >> c.x >> c.y)) {
                std::string rest;
                ls.clear();
                ls >> rest;
                if (rest.empty()) continue;  // blank line
                throw std::runtime_error("region: malformed cell line: " + line);
            }
            cells.push_back(c);
        }
        return region_from_cells(std::move(cells), std::move(name));
    }
    throw std::runtime_error("region: unknown format '" + kind + "'");
}

void write_region(std::ostream& out, const Region& r) {
    if (r.empty()) {
        out << "cells\n";
        return;
    }
    Cell lo = r.anchor();
    Cell hi = r.bound_max();
    int rows = hi.y - lo.y + 1;
    int cols = hi.x - lo.x + 1;
    out << "grid " << rows << ' ' << cols << ' ' << lo.x << ' ' << lo.y << '\n';
    for (int y = hi.y; y >= lo.y; --y) {
        std::string line(static_cast<size_t>(cols), '.');
        for (int x = lo.x; x <= hi.x; ++x)
            if (r.contains({x, y})) line[static_cast<size_t>(x - lo.x)] = '#';
        out << line << '\n';
    }
}

Region read_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open region file: " + path);
    return read_region(in, path);
}

}  // namespace ribbon
