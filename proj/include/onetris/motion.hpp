#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "onetris/board.hpp"
#include "onetris/piece.hpp"

namespace onetris {

enum class Move : uint8_t { Left, Right, Down, RotateCW, RotateCCW };

const char* move_name(Move m);  // "L", "R", "D", "CW", "CCW"
std::optional<Move> move_from_name(const std::string& tok);

// One kick test: translation of the rotation center, x right / y up as in the
// kick tables. apply_kick is the single place that bridges to row/col space
// (board rows grow downward, so y is negated).
struct Kick {
    int dx = 0;
    int dy = 0;
};

inline Cell apply_kick(Cell anchor, Kick k) {
    return {anchor.row - k.dy, anchor.col + k.dx};
}

// 8 ordered transitions: 0->R, R->0, R->2, 2->R, 2->L, L->2, L->0, 0->L.
using KickRow = std::array<Kick, 5>;
const KickRow& kick_row_jlstz(Rot from, Rot to);
const KickRow& kick_row_i(Rot from, Rot to);
const KickRow& kick_row(PieceType t, Rot from, Rot to);

bool state_fits(const Board& b, const PieceState& s);

// SRS rotation with wall kicks. Returns the rotated state, or nullopt when
// all five tests collide (the piece stays put). O never rotates.
std::optional<PieceState> try_rotate_srs(const Board& b, const PieceState& s, bool cw);

// Falling rotation for dominoes: one of the lowest pixels stays, the other
// moves to a not-higher neighboring cell (CW keeps/emits right, CCW left).
std::optional<PieceState> try_rotate_falling(const Board& b, const PieceState& s, bool cw);

// Anchor-pivot rotation for Bar(k): horizontal<->vertical about the anchor,
// no kicks. Bars are placed in a chosen orientation at spawn; they do not
// use the falling restriction.
std::optional<PieceState> try_rotate_bar(const Board& b, const PieceState& s);

std::optional<PieceState> try_translate(const Board& b, const PieceState& s, Move dir);

enum class RotationModel { Srs, Falling };

inline RotationModel default_model(PieceType t) {
    return t.tag == PieceType::Tag::Domino ? RotationModel::Falling : RotationModel::Srs;
}

// Default orientation, horizontally centered (ties to the left), hovering
// with its lowest cells one row above the top of the board, so a partially
// filled top row does not end the game before the piece can move. nullopt
// when the piece is wider than the board.
std::optional<PieceState> spawn(const Board& b, PieceType t);

struct Moved {
    PieceState state;
};
struct Locked {
    Placement placement;  // cells may extend above row 0 (a loss when settled)
};
struct Rejected {};

using StepOutcome = std::variant<Moved, Locked, Rejected>;

StepOutcome step(const Board& b, const PieceState& s, Move m, RotationModel model);

struct SettleResult {
    Board board;
    std::vector<int> cleared_rows;
    bool loss = false;  // a cell of the placement locked above the top row
};

SettleResult lock_and_settle(const Board& b, const Placement& p);

// --- Reachability -----------------------------------------------------------

struct ReachablePlacement {
    Placement placement;
    std::vector<Move> witness;  // shortest move list from spawn, ends with the blocked Down
};

struct ReachResult {
    bool spawn_loss = false;  // piece does not fit the board at all
    std::vector<ReachablePlacement> placements;
};

// BFS over piece states from spawn under {L, R, D, CW, CCW}. A placement is
// emitted for every reached state whose Down is blocked and whose cells all
// lie inside the board (locking above the top row is a loss, never a move a
// witness wants). Placements are deduplicated on cells, keeping the first
// (shortest) witness, and sorted for determinism.
ReachResult reachable_placements(const Board& b, PieceType t, RotationModel model);

// Reusable BFS workspace; reachable_placements is a convenience wrapper.
class ReachSearch {
public:
    explicit ReachSearch(RotationModel model) : model_(model) {}

    ReachResult run(const Board& b, PieceType t);

    // Early-exit search for one goal placement (cells sorted row-major).
    std::optional<std::vector<Move>> find_path(const Board& b, PieceType t,
                                               const Placement& goal);

    // Every piece state reachable from spawn, flight states included.
    std::vector<PieceState> reachable_states(const Board& b, PieceType t);

private:
    RotationModel model_;
    std::vector<int32_t> parent_;
    std::vector<uint8_t> parent_move_;
    std::vector<uint32_t> queue_;
};

// --- Scripts ----------------------------------------------------------------

// One move list per piece; replay spawns each piece in turn and feeds it the
// list. Each list must end with the Down that locks the piece.
using MoveScript = std::vector<std::vector<Move>>;

std::string render_script(const MoveScript& script);
MoveScript parse_script(const std::string& text);  // '#' starts a comment

struct ReplayError {
    size_t piece_index = 0;
    size_t move_index = 0;  // meaningful for rejected / early-lock errors
    std::string message;
};

struct ReplayResult {
    Board board;                        // final board (valid when ok)
    std::vector<Placement> placements;  // one per piece, pre-clear cells
    std::optional<ReplayError> error;

    bool ok() const { return !error.has_value(); }
};

ReplayResult replay(const Board& start, const MoveScript& script,
                    const std::vector<PieceType>& kinds);

}  // namespace onetris
