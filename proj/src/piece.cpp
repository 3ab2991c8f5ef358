#include "onetris/piece.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace onetris {

namespace {

using CellList = std::array<Cell, 4>;

// SRS footprints inside the anchor box, one entry per orientation 0,R,2,L.
// Rotating a footprint 90 degrees clockwise about the box center yields the
// next orientation.
constexpr std::array<CellList, 4> kI = {{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{0, 2}, {1, 2}, {2, 2}, {3, 2}}},
    {{{2, 0}, {2, 1}, {2, 2}, {2, 3}}},
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
}};
constexpr std::array<CellList, 4> kO = {{
    {{{0, 1}, {0, 2}, {1, 1}, {1, 2}}},
    {{{0, 1}, {0, 2}, {1, 1}, {1, 2}}},
    {{{0, 1}, {0, 2}, {1, 1}, {1, 2}}},
    {{{0, 1}, {0, 2}, {1, 1}, {1, 2}}},
}};
constexpr std::array<CellList, 4> kJ = {{
    {{{0, 0}, {1, 0}, {1, 1}, {1, 2}}},
    {{{0, 1}, {0, 2}, {1, 1}, {2, 1}}},
    {{{1, 0}, {1, 1}, {1, 2}, {2, 2}}},
    {{{0, 1}, {1, 1}, {2, 0}, {2, 1}}},
}};
constexpr std::array<CellList, 4> kL = {{
    {{{0, 2}, {1, 0}, {1, 1}, {1, 2}}},
    {{{0, 1}, {1, 1}, {2, 1}, {2, 2}}},
    {{{1, 0}, {1, 1}, {1, 2}, {2, 0}}},
    {{{0, 0}, {0, 1}, {1, 1}, {2, 1}}},
}};
constexpr std::array<CellList, 4> kS = {{
    {{{0, 1}, {0, 2}, {1, 0}, {1, 1}}},
    {{{0, 1}, {1, 1}, {1, 2}, {2, 2}}},
    {{{1, 1}, {1, 2}, {2, 0}, {2, 1}}},
    {{{0, 0}, {1, 0}, {1, 1}, {2, 1}}},
}};
constexpr std::array<CellList, 4> kT = {{
    {{{0, 1}, {1, 0}, {1, 1}, {1, 2}}},
    {{{0, 1}, {1, 1}, {1, 2}, {2, 1}}},
    {{{1, 0}, {1, 1}, {1, 2}, {2, 1}}},
    {{{0, 1}, {1, 0}, {1, 1}, {2, 1}}},
}};
constexpr std::array<CellList, 4> kZ = {{
    {{{0, 0}, {0, 1}, {1, 1}, {1, 2}}},
    {{{0, 2}, {1, 1}, {1, 2}, {2, 1}}},
    {{{1, 0}, {1, 1}, {2, 1}, {2, 2}}},
    {{{0, 1}, {1, 0}, {1, 1}, {2, 0}}},
}};

const std::array<CellList, 4>& tetromino_table(PieceType::Tag tag) {
    switch (tag) {
        case PieceType::Tag::I: return kI;
        case PieceType::Tag::J: return kJ;
        case PieceType::Tag::L: return kL;
        case PieceType::Tag::O: return kO;
        case PieceType::Tag::S: return kS;
        case PieceType::Tag::T: return kT;
        case PieceType::Tag::Z: return kZ;
        default: throw std::logic_error("not a tetromino");
    }
}

}  // namespace

PieceType piece_from_name(const std::string& name) {
    if (name == "I") return PieceType::make(PieceType::Tag::I);
    if (name == "J") return PieceType::make(PieceType::Tag::J);
    if (name == "L") return PieceType::make(PieceType::Tag::L);
    if (name == "O") return PieceType::make(PieceType::Tag::O);
    if (name == "S") return PieceType::make(PieceType::Tag::S);
    if (name == "T") return PieceType::make(PieceType::Tag::T);
    if (name == "Z") return PieceType::make(PieceType::Tag::Z);
    if (name == "D" || name == "Domino") return PieceType::make(PieceType::Tag::Domino);
    if (name.size() >= 2 && name[0] == 'B') {
        int k = std::stoi(name.substr(1));
        if (k < 1) throw std::invalid_argument("Bar width must be >= 1");
        return PieceType::bar(k);
    }
    throw std::invalid_argument("unknown piece name: " + name);
}

std::string piece_name(PieceType t) {
    switch (t.tag) {
        case PieceType::Tag::I: return "I";
        case PieceType::Tag::J: return "J";
        case PieceType::Tag::L: return "L";
        case PieceType::Tag::O: return "O";
        case PieceType::Tag::S: return "S";
        case PieceType::Tag::T: return "T";
        case PieceType::Tag::Z: return "Z";
        case PieceType::Tag::Domino: return "D";
        case PieceType::Tag::Bar: return "B" + std::to_string(t.bar_k);
    }
    return "?";
}

const char* rot_name(Rot r) {
    switch (r) {
        case Rot::R0: return "0";
        case Rot::RR: return "R";
        case Rot::R2: return "2";
        case Rot::RL: return "L";
    }
    return "?";
}

bool orientation_valid(PieceType t, Rot r) {
    switch (t.tag) {
        case PieceType::Tag::O: return r == Rot::R0;
        case PieceType::Tag::Domino:
        case PieceType::Tag::Bar: return r == Rot::R0 || r == Rot::RR;
        default: return true;
    }
}

std::vector<Cell> box_cells(PieceType t, Rot r) {
    if (!orientation_valid(t, r))
        throw std::invalid_argument(piece_name(t) + " does not admit orientation " + rot_name(r));
    switch (t.tag) {
        case PieceType::Tag::Domino:
        case PieceType::Tag::Bar: {
            int k = t.cell_count();
            std::vector<Cell> out;
            out.reserve(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                out.push_back(r == Rot::R0 ? Cell{0, i} : Cell{i, 0});
            return out;
        }
        default: {
            const CellList& cl = tetromino_table(t.tag)[static_cast<size_t>(r)];
            return {cl.begin(), cl.end()};
        }
    }
}

std::vector<Cell> cells_of(const PieceState& s) {
    std::vector<Cell> out = box_cells(s.type, s.rot);
    for (Cell& c : out) {
        c.row += s.anchor.row;
        c.col += s.anchor.col;
    }
    return out;
}

int box_width(PieceType t, Rot r) {
    switch (t.tag) {
        case PieceType::Tag::I:
        case PieceType::Tag::O: return 4;
        case PieceType::Tag::Domino: return r == Rot::R0 ? 2 : 1;
        case PieceType::Tag::Bar: return r == Rot::R0 ? t.bar_k : 1;
        default: return 3;
    }
}

int box_height(PieceType t, Rot r) {
    switch (t.tag) {
        case PieceType::Tag::I:
        case PieceType::Tag::O: return 4;
        case PieceType::Tag::Domino: return r == Rot::R0 ? 1 : 2;
        case PieceType::Tag::Bar: return r == Rot::R0 ? 1 : t.bar_k;
        default: return 3;
    }
}

Placement placement_of(const PieceState& s) {
    Placement p{s.type, cells_of(s)};
    std::sort(p.cells.begin(), p.cells.end());
    return p;
}

std::optional<PlacementError> placement_problem(const Board& b, const Placement& p) {
    for (const Cell& c : p.cells) {
        if (!b.in_bounds(c)) return PlacementError{c, false};
        if (b.filled(c)) return PlacementError{c, true};
    }
    return std::nullopt;
}

Board apply_placement(const Board& b, const Placement& p) {
    if (auto err = placement_problem(b, p)) {
        throw std::invalid_argument(
            "placement conflict at (" + std::to_string(err->cell.row) + "," +
            std::to_string(err->cell.col) + (err->overlap ? "): overlap" : "): out of bounds"));
    }
    return set_cells(b, p.cells);
}

Board remove_placement(const Board& b, const Placement& p) {
    return clear_cells(b, p.cells);
}

}  // namespace onetris
