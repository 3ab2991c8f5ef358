#include "onetris/tiling.hpp"

#include <algorithm>
#include <set>

namespace onetris {

Region Region::of(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Region{std::move(cells)};
}

Region Region::empty_cells_of(const Board& b) { return Region{b.empty_cells()}; }

bool Region::contains(const Cell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

std::vector<std::vector<Cell>> footprint_shapes(PieceType t) {
    std::set<std::vector<Cell>> shapes;
    for (int r = 0; r < 4; ++r) {
        Rot rot = static_cast<Rot>(r);
        if (!orientation_valid(t, rot)) continue;
        std::vector<Cell> cells = box_cells(t, rot);
        std::sort(cells.begin(), cells.end());
        const Cell base = cells.front();
        for (Cell& c : cells) c = {c.row - base.row, c.col - base.col};
        shapes.insert(cells);
    }
    return {shapes.begin(), shapes.end()};
}

namespace {

struct Enumerator {
    int minr = 0, minc = 0, rows = 0, cols = 0;
    std::vector<int> index;  // (r,c) -> region index or -1
    std::vector<uint8_t> covered;
    std::vector<Cell> region_cells;
    std::vector<std::vector<Cell>> shapes;
    int piece_size = 0;
    PieceType type;
    size_t cap = 0;
    bool truncated = false;

    std::vector<Placement> current;
    std::vector<Tiling> out;

    int idx_at(int r, int c) const {
        if (r < minr || r >= minr + rows || c < minc || c >= minc + cols) return -1;
        return index[static_cast<size_t>(r - minr) * cols + static_cast<size_t>(c - minc)];
    }

    // Components of uncovered cells must each have size divisible by the
    // piece size, otherwise the branch is dead.
    bool components_ok() const {
        std::vector<uint8_t> seen(region_cells.size(), 0);
        std::vector<int> stack;
        for (size_t i = 0; i < region_cells.size(); ++i) {
            if (covered[i] || seen[i]) continue;
            int size = 0;
            stack.push_back(static_cast<int>(i));
            seen[i] = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                ++size;
                const Cell c = region_cells[static_cast<size_t>(cur)];
                for (const Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col},
                                     Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
                    int j = idx_at(n.row, n.col);
                    if (j >= 0 && !covered[static_cast<size_t>(j)] &&
                        !seen[static_cast<size_t>(j)]) {
                        seen[static_cast<size_t>(j)] = 1;
                        stack.push_back(j);
                    }
                }
            }
            if (size % piece_size != 0) return false;
        }
        return true;
    }

    void search(size_t from) {
        if (truncated) return;
        while (from < region_cells.size() && covered[from]) ++from;
        if (from == region_cells.size()) {
            Tiling t = current;
            std::sort(t.begin(), t.end(),
                      [](const Placement& a, const Placement& b) { return a.cells < b.cells; });
            out.push_back(std::move(t));
            if (out.size() >= cap) truncated = true;
            return;
        }
        const Cell target = region_cells[from];
        for (const auto& shape : shapes) {
            // The placement covering the first uncovered cell must start there.
            std::vector<int> ids;
            ids.reserve(shape.size());
            bool ok = true;
            for (const Cell& sc : shape) {
                int j = idx_at(target.row + sc.row, target.col + sc.col);
                if (j < 0 || covered[static_cast<size_t>(j)]) {
                    ok = false;
                    break;
                }
                ids.push_back(j);
            }
            if (!ok) continue;
            for (int j : ids) covered[static_cast<size_t>(j)] = 1;
            Placement p{type, {}};
            p.cells.reserve(shape.size());
            for (const Cell& sc : shape)
                p.cells.push_back({target.row + sc.row, target.col + sc.col});
            current.push_back(std::move(p));

            if (components_ok()) search(from + 1);

            current.pop_back();
            for (int j : ids) covered[static_cast<size_t>(j)] = 0;
        }
    }
};

}  // namespace

TilingEnumeration enumerate_tilings(const Region& region, PieceType t, size_t max_tilings) {
    TilingEnumeration result;
    if (region.cells.empty()) {
        result.tilings.push_back({});
        return result;
    }
    if (region.size() % static_cast<size_t>(t.cell_count()) != 0) {
        result.diagnostic = "region size " + std::to_string(region.size()) +
                            " is not a multiple of the piece size " +
                            std::to_string(t.cell_count());
        return result;
    }

    Enumerator e;
    e.type = t;
    e.piece_size = t.cell_count();
    e.shapes = footprint_shapes(t);
    e.region_cells = region.cells;
    e.cap = max_tilings;

    int maxr = region.cells[0].row, maxc = region.cells[0].col;
    e.minr = maxr;
    e.minc = maxc;
    for (const Cell& c : region.cells) {
        e.minr = std::min(e.minr, c.row);
        e.minc = std::min(e.minc, c.col);
        maxr = std::max(maxr, c.row);
        maxc = std::max(maxc, c.col);
    }
    e.rows = maxr - e.minr + 1;
    e.cols = maxc - e.minc + 1;
    e.index.assign(static_cast<size_t>(e.rows) * e.cols, -1);
    for (size_t i = 0; i < region.cells.size(); ++i) {
        const Cell& c = region.cells[i];
        e.index[static_cast<size_t>(c.row - e.minr) * e.cols +
                static_cast<size_t>(c.col - e.minc)] = static_cast<int>(i);
    }
    e.covered.assign(region.cells.size(), 0);

    e.search(0);
    std::sort(e.out.begin(), e.out.end(), [](const Tiling& a, const Tiling& b) {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(),
            [](const Placement& x, const Placement& y) { return x.cells < y.cells; });
    });
    result.tilings = std::move(e.out);
    result.truncated = e.truncated;
    return result;
}

}  // namespace onetris
