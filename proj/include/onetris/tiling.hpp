#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onetris/board.hpp"
#include "onetris/piece.hpp"

namespace onetris {

// A set of empty cells embedded in a context board. Everything outside the
// cell set, board boundary included, acts as filled for tiling purposes.
struct Region {
    std::vector<Cell> cells;  // sorted row-major, deduplicated

    static Region of(std::vector<Cell> cells);
    static Region empty_cells_of(const Board& b);

    bool contains(const Cell& c) const;
    size_t size() const { return cells.size(); }
};

using Tiling = std::vector<Placement>;  // placements sorted by smallest cell

struct TilingEnumeration {
    std::vector<Tiling> tilings;      // canonical order: lexicographic
    std::string diagnostic;           // nonempty when enumeration is vacuous
    bool truncated = false;           // hit the tiling-count cap
};

// All exact covers of the region by footprints of the given piece type, in
// any orientation, ignoring reachability. Distinct orientations with equal
// footprints (I at 0 vs 2, say) are counted once.
TilingEnumeration enumerate_tilings(const Region& region, PieceType t,
                                    size_t max_tilings = 1 << 20);

// The distinct footprint shapes of a piece type, each normalized so its
// row-major-first cell is (0,0).
std::vector<std::vector<Cell>> footprint_shapes(PieceType t);

}  // namespace onetris
