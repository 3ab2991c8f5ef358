#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onetris/motion.hpp"

namespace onetris {

enum class Decision { Yes, No, Unknown };
const char* decision_name(Decision d);

struct SolveStats {
    uint64_t nodes = 0;
    uint64_t memo_hits = 0;
};

struct SolveResult {
    Decision decision = Decision::Unknown;
    std::optional<MoveScript> witness;  // replayable on a Yes
    SolveStats stats;
};

struct SolveOptions {
    uint64_t node_budget = 50'000'000;
    bool memoize = true;
};

// Ground-truth search: can the whole board be cleared by placing exactly the
// given pieces (each drawn from the engine's reachable placements)?
SolveResult solve_clearing(const Board& board, const std::vector<PieceType>& kinds,
                           RotationModel model, const SolveOptions& opts = {});

// Can all the given pieces lock without a loss?
SolveResult solve_survival(const Board& board, const std::vector<PieceType>& kinds,
                           RotationModel model, const SolveOptions& opts = {});

// The largest number of pieces of one type that can lock without a loss,
// capped. Decision-style helper for survive-k oracles.
struct MaxSurvivable {
    int count = 0;       // max pieces placed without loss, capped at `cap`
    bool capped = false;  // true when the cap was reached (count == cap)
    SolveStats stats;
};
MaxSurvivable max_survivable(const Board& board, PieceType t, RotationModel model, int cap,
                             const SolveOptions& opts = {});

// Breadth-first search over board states with an unlimited supply of one
// piece type. Terminates because boards live in a finite space.
struct UnboundedClearing {
    Decision decision = Decision::Unknown;
    std::optional<MoveScript> witness;
    uint64_t states = 0;
};
UnboundedClearing solve_clearing_unbounded(const Board& board, PieceType t, RotationModel model,
                                           uint64_t state_budget = 5'000'000);

// Which rows can be completed by some placement sequence before any other
// row clears? Rows are reported with their original indices, together with a
// replayable witness whose last placement completes the row.
struct FirstClearable {
    std::set<int> rows;
    std::vector<std::pair<int, MoveScript>> witnesses;  // one per row
    bool exhausted = true;                              // false when budget hit
    uint64_t states = 0;
};
FirstClearable first_clearable_rows(const Board& board, PieceType t, RotationModel model,
                                    uint64_t state_budget = 5'000'000);

// --- 1-in-3SAT ---------------------------------------------------------------

// Literals are nonzero ints: +v or -v for 1-indexed variable v.
struct OneInThreeSat {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

OneInThreeSat parse_sat(const std::string& text);  // three ints per line
std::string render_sat(const OneInThreeSat& f);

struct SatResult {
    Decision decision = Decision::Unknown;
    std::vector<bool> assignment;  // index 0 unused; valid on Yes
};

// Exhaustive over all 2^n assignments; requires exactly one true literal per
// clause (occurrences count: (x or x or x) needs exactly one of three true).
SatResult solve_1in3sat(const OneInThreeSat& f, int max_vars = 24);

// --- Graph orientation --------------------------------------------------------

enum class NodeClass {
    Literal03,   // in-degree 0 or 3 (3-regular instances)
    ClauseIn1,   // in-degree exactly 1
    NegClauseIn2,  // in-degree exactly 2
    ZeroOrFour,  // in-degree 0 or 4 (4-regular instances)
    OneInFour,   // in-degree exactly 1
    ThreeInFour,  // in-degree exactly 3
};

struct OrientationInstance {
    std::vector<NodeClass> node_class;
    std::vector<std::pair<int, int>> edges;  // undirected; may repeat (parallel)
};

struct OrientationResult {
    Decision decision = Decision::Unknown;
    // orientation[e] true means edges[e] points first -> second.
    std::vector<bool> orientation;
    std::string error;  // nonempty when the instance violates its regularity
};

// Exhaustive over 2^|E| orientations. Checks the degree preconditions first:
// class Literal03/ClauseIn1/NegClauseIn2 nodes must have degree 3, the
// {0,4}/1-in-4/3-in-4 classes degree 4.
OrientationResult solve_graph_orientation(const OrientationInstance& g, int max_edges = 26);

}  // namespace onetris
