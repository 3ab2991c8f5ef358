#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onetris/board.hpp"

namespace onetris {

// Bar(k) is the 1xk piece family; Bar(2) shares the domino's geometry but
// rotates freely about its anchor instead of using the falling model.
struct PieceType {
    enum class Tag { I, J, L, O, S, T, Z, Domino, Bar };

    Tag tag = Tag::I;
    int bar_k = 0;  // only meaningful for Tag::Bar

    static PieceType make(Tag t) { return {t, 0}; }
    static PieceType bar(int k) { return {Tag::Bar, k}; }

    bool is_tetromino() const {
        return tag != Tag::Domino && tag != Tag::Bar;
    }
    int cell_count() const {
        switch (tag) {
            case Tag::Domino: return 2;
            case Tag::Bar: return bar_k;
            default: return 4;
        }
    }

    friend bool operator==(const PieceType&, const PieceType&) = default;
};

PieceType piece_from_name(const std::string& name);  // "I", "J", ..., "D", "B3"
std::string piece_name(PieceType t);

enum class Rot : uint8_t { R0 = 0, RR = 1, R2 = 2, RL = 3 };

inline Rot rotate_cw(Rot r) { return static_cast<Rot>((static_cast<int>(r) + 1) & 3); }
inline Rot rotate_ccw(Rot r) { return static_cast<Rot>((static_cast<int>(r) + 3) & 3); }
const char* rot_name(Rot r);  // "0", "R", "2", "L"

bool orientation_valid(PieceType t, Rot r);

// Anchor is the top-left corner of the piece's bounding box: the 4x4 box for
// I and O, the 3x3 box for J/L/S/T/Z, and the tight box for Domino/Bar.
struct PieceState {
    PieceType type;
    Rot rot = Rot::R0;
    Cell anchor;  // may be above the board (negative row) while in flight

    friend bool operator==(const PieceState&, const PieceState&) = default;
};

// Footprint cells relative to the anchor box, sorted row-major.
// Throws on an orientation the piece does not admit (e.g. O at R).
std::vector<Cell> box_cells(PieceType t, Rot r);
std::vector<Cell> cells_of(const PieceState& s);

int box_width(PieceType t, Rot r);
int box_height(PieceType t, Rot r);

struct Placement {
    PieceType type;
    std::vector<Cell> cells;  // sorted row-major

    friend bool operator==(const Placement&, const Placement&) = default;
};

Placement placement_of(const PieceState& s);

// Fails with the first offending cell on overlap or out-of-bounds.
struct PlacementError {
    Cell cell;
    bool overlap = false;  // false means out of bounds
};

std::optional<PlacementError> placement_problem(const Board& b, const Placement& p);
Board apply_placement(const Board& b, const Placement& p);  // throws on conflict
Board remove_placement(const Board& b, const Placement& p);

}  // namespace onetris
