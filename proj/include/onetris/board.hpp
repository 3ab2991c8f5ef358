#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>
#include <functional>

namespace onetris {

struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Rectangular playfield. Row 0 is the top row, column 0 the left edge.
// Boards are immutable values: every mutation returns a new board.
class Board {
public:
    Board() = default;
    Board(int width, int height);

    int width() const { return w_; }
    int height() const { return h_; }

    bool in_bounds(const Cell& c) const {
        return c.row >= 0 && c.row < h_ && c.col >= 0 && c.col < w_;
    }
    bool filled(const Cell& c) const {
        return (bits_[static_cast<size_t>(c.row) * wpr_ + static_cast<size_t>(c.col >> 6)] >>
                (c.col & 63)) & 1u;
    }
    // Collision test used by piece motion: walls and the floor count as
    // filled, the space above the board (row < 0) counts as empty.
    bool blocked(const Cell& c) const {
        if (c.col < 0 || c.col >= w_ || c.row >= h_) return true;
        if (c.row < 0) return false;
        return filled(c);
    }

    bool row_full(int r) const;
    bool row_empty(int r) const;
    int count_filled() const;
    int count_empty() const { return w_ * h_ - count_filled(); }

    Board with(const Cell& c) const;     // set one cell
    Board without(const Cell& c) const;  // clear one cell

    std::vector<Cell> filled_cells() const;
    std::vector<Cell> empty_cells() const;

    friend bool operator==(const Board& a, const Board& b) {
        return a.w_ == b.w_ && a.h_ == b.h_ && a.bits_ == b.bits_;
    }

    size_t hash() const;

    // Mutating primitives are private to the value-returning API below.
    friend Board set_cells(Board b, const std::vector<Cell>& cells);
    friend Board clear_cells(Board b, const std::vector<Cell>& cells);
    friend std::pair<Board, std::vector<int>> clear_full_rows(const Board& b);
    friend Board parse_board(const std::string& text);

private:
    void set_(const Cell& c) {
        bits_[static_cast<size_t>(c.row) * wpr_ + static_cast<size_t>(c.col >> 6)] |=
            uint64_t(1) << (c.col & 63);
    }
    void unset_(const Cell& c) {
        bits_[static_cast<size_t>(c.row) * wpr_ + static_cast<size_t>(c.col >> 6)] &=
            ~(uint64_t(1) << (c.col & 63));
    }

    int w_ = 0, h_ = 0;
    size_t wpr_ = 0;  // 64-bit words per row
    std::vector<uint64_t> bits_;
};

Board set_cells(Board b, const std::vector<Cell>& cells);
Board clear_cells(Board b, const std::vector<Cell>& cells);

// Removes every full row; everything above a cleared row drops one unit.
// Cleared row indices are reported top to bottom (pre-clear numbering).
std::pair<Board, std::vector<int>> clear_full_rows(const Board& b);

// Text format: one line per row, '#' filled, '.' empty. Rows must be equal
// length. parse rejects ragged rows and foreign characters.
Board parse_board(const std::string& text);
std::string render_board(const Board& b);

struct BoardHash {
    size_t operator()(const Board& b) const { return b.hash(); }
};

}  // namespace onetris
