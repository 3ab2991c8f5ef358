#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "onetris/exact.hpp"
#include "onetris/motion.hpp"

namespace onetris {

// --- 1 x k pieces -------------------------------------------------------------

struct Hole {
    Cell cell;
};

// Empty cells lying below a filled cell in their column, top to bottom.
std::vector<Hole> find_holes(const Board& b);

struct BarScriptResult {
    bool ok = false;
    std::string error;
    Board board;        // resulting board
    MoveScript script;  // every piece is the same 1 x k kind
    std::vector<PieceType> kinds;
};

// Precondition for the 1 x k algorithms: board height >= 2k-1 and the top
// k-1 rows empty. piece defaults to Bar(k); pass Domino to emit scripts for
// the falling rotation model (k must then be 2).
std::optional<std::string> bar_preconditions(const Board& b, int k);

// Clears every hole by repeatedly completing the row directly above the
// highest hole with vertical pieces. Never creates new holes.
BarScriptResult eliminate_holes(const Board& b, int k,
                                std::optional<PieceType> piece = std::nullopt);

struct BarSurvival {
    bool ok = false;
    std::string error;
    // Hole elimination followed by `demo_pieces` sustaining placements.
    MoveScript script;
    std::vector<PieceType> kinds;
    Board final_board;
    int max_stack_height = 0;  // highest stack seen after hole elimination
};

// Thm-style survival: always yes under the preconditions. The strategy drops
// a vertical piece into the lowest open column forever.
BarSurvival bar_survival(const Board& b, int k, int demo_pieces = 64,
                         std::optional<PieceType> piece = std::nullopt);

struct BarClearing {
    Decision decision = Decision::Unknown;
    std::string error;  // set when preconditions fail
    MoveScript script;
    std::vector<PieceType> kinds;
    int first_column_guess = -1;  // the successful guess, 0..k-1
};

// Decides whether the board can eventually be fully cleared with 1 x k
// pieces, by the guess-and-propagate column count argument.
BarClearing bar_eventually_clearable(const Board& b, int k,
                                     std::optional<PieceType> piece = std::nullopt);

// --- Dominoes (falling rotation model) -----------------------------------------

struct DominoReach {
    std::set<Cell> cells;                          // reachable cells
    std::set<std::pair<Cell, Cell>> locations;     // reachable domino locations
};

// Reachability from the spawn, pass-through positions included.
DominoReach compute_reachable_cells(const Board& b);

struct PathOrder {
    int width = 0;
    std::vector<Cell> by_rank;            // rank i+1 lives at by_rank[i]
    std::unordered_map<long, int> ranks;  // key row*width+col -> rank (1-based)

    int rank_of(const Cell& c) const {
        auto it = ranks.find(static_cast<long>(c.row) * width + c.col);
        return it == ranks.end() ? 0 : it->second;
    }
};

// Total order on reachable empty cells: higher rows first; within a row the
// seeds (cells under a reachable cell of the row above; every reachable cell
// in the top row) go left to right, each followed by its outward expansion,
// rightward run first, stopping at unranked seeds.
PathOrder compute_path_order(const Board& b);

// Move list taking a domino from spawn to cover the target location along a
// path whose path-order ranks strictly increase, ending with the locking
// Down. The target must be reachable and supported on the given board.
std::optional<std::vector<Move>> monotone_path_script(const Board& b, const PathOrder& order,
                                                      const std::pair<Cell, Cell>& target);

struct SupportedConfig {
    std::vector<Placement> dominoes;
};

// Orders a supported configuration by the path-order label rule (largest
// label first) and emits one monotone script per domino. `last` optionally
// forces one placement (by index into cfg.dominoes) to the end, used when a
// single vertical must complete two rows at once.
std::optional<MoveScript> sequence_supported_config(const Board& b, const SupportedConfig& cfg,
                                                    std::optional<size_t> last = std::nullopt);

enum class ColumnTag { Good, Bad, Filled };

struct ColumnClass {
    std::vector<ColumnTag> tags;  // one per column
};

// Good columns can complete (r,c) with vertical dominoes alone; Filled marks
// columns where (r,c) is already occupied.
ColumnClass classify_columns(const Board& b, int r);

using FixingSet = std::vector<Placement>;  // non-overlapping horizontal dominoes

// Left-to-right sweep over column pairs; returns a non-overlapping set of
// horizontal dominoes fixing every bad column if one exists.
std::optional<FixingSet> find_fixing_set(const Board& b, int r);

// All distinct fixing sets the sweep can produce, up to a cap. The witness
// builder tries these in turn: a set can be valid yet force some other row
// to fill up first, which would clear early.
std::vector<FixingSet> fixing_set_variants(const Board& b, int r, size_t cap = 256);

struct RowClearResult {
    Decision decision = Decision::No;
    MoveScript script;            // replay clears row r (no earlier clear)
    std::vector<PieceType> kinds;
    FixingSet fixing_set;
};

RowClearResult domino_row_clearable(const Board& b, int r);

struct DominoOutlook {
    bool survivable = false;
    bool eventually_clearable = false;
    int clearable_row = -1;       // first clearable row when survivable
    MoveScript clear_row_script;  // witness for the row clear
    MoveScript full_clear_script; // complete clear witness when clearable
};

DominoOutlook domino_survival_and_clearing(const Board& b);

struct SurviveKResult {
    Decision decision = Decision::No;
    int max_packing = 0;     // matching bound (meaningful when no row clears)
    bool row_clearable = false;
    MoveScript witness;      // n replayable placements on a Yes
};

// Survivable with exactly n dominoes: always yes when some row is clearable,
// otherwise n is checked against a maximum matching of reachable locations.
SurviveKResult domino_survive_k(const Board& b, int n);

// Maximum matching over reachable domino locations (checkerboard-bipartite).
int max_domino_packing(const DominoReach& reach);

}  // namespace onetris
