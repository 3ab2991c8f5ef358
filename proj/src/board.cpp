#include "onetris/board.hpp"

#include <algorithm>
#include <sstream>

namespace onetris {

Board::Board(int width, int height) : w_(width), h_(height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("board dimensions must be positive");
    wpr_ = static_cast<size_t>((width + 63) / 64);
    bits_.assign(wpr_ * static_cast<size_t>(height), 0);
}

bool Board::row_full(int r) const {
    for (int c = 0; c < w_; ++c)
        if (!filled({r, c})) return false;
    return true;
}

bool Board::row_empty(int r) const {
    const uint64_t* row = bits_.data() + static_cast<size_t>(r) * wpr_;
    for (size_t i = 0; i < wpr_; ++i)
        if (row[i]) return false;
    return true;
}

int Board::count_filled() const {
    int n = 0;
    for (uint64_t word : bits_) n += __builtin_popcountll(word);
    return n;
}

Board Board::with(const Cell& c) const {
    Board b = *this;
    b.set_(c);
    return b;
}

Board Board::without(const Cell& c) const {
    Board b = *this;
    b.unset_(c);
    return b;
}

std::vector<Cell> Board::filled_cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < h_; ++r)
        for (int c = 0; c < w_; ++c)
            if (filled({r, c})) out.push_back({r, c});
    return out;
}

std::vector<Cell> Board::empty_cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < h_; ++r)
        for (int c = 0; c < w_; ++c)
            if (!filled({r, c})) out.push_back({r, c});
    return out;
}

size_t Board::hash() const {
    size_t h = std::hash<int>()(w_ * 8191 + h_);
    for (uint64_t word : bits_) h = h * 1099511628211ull ^ word;
    return h;
}

Board set_cells(Board b, const std::vector<Cell>& cells) {
    for (const Cell& c : cells) {
        if (!b.in_bounds(c)) throw std::out_of_range("cell out of bounds");
        b.set_(c);
    }
    return b;
}

Board clear_cells(Board b, const std::vector<Cell>& cells) {
    for (const Cell& c : cells) {
        if (!b.in_bounds(c)) throw std::out_of_range("cell out of bounds");
        b.unset_(c);
    }
    return b;
}

std::pair<Board, std::vector<int>> clear_full_rows(const Board& b) {
    std::vector<int> cleared;
    for (int r = 0; r < b.height(); ++r)
        if (b.row_full(r)) cleared.push_back(r);
    if (cleared.empty()) return {b, {}};

    Board out(b.width(), b.height());
    int dst = b.height() - 1;
    for (int src = b.height() - 1; src >= 0; --src) {
        if (std::find(cleared.begin(), cleared.end(), src) != cleared.end()) continue;
        for (int c = 0; c < b.width(); ++c)
            if (b.filled({src, c})) out.set_({dst, c});
        --dst;
    }
    return {out, cleared};
}

Board parse_board(const std::string& text) {
    std::vector<std::string> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("empty board text");
    const size_t width = rows[0].size();
    for (const std::string& r : rows)
        if (r.size() != width) throw std::invalid_argument("ragged board row: \"" + r + "\"");

    Board b(static_cast<int>(width), static_cast<int>(rows.size()));
    for (int r = 0; r < b.height(); ++r) {
        for (int c = 0; c < b.width(); ++c) {
            char ch = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (ch == '#')
                b.set_({r, c});
            else if (ch != '.')
                throw std::invalid_argument(std::string("illegal board character '") + ch + "'");
        }
    }
    return b;
}

std::string render_board(const Board& b) {
    std::string out;
    out.reserve(static_cast<size_t>((b.width() + 1) * b.height()));
    for (int r = 0; r < b.height(); ++r) {
        for (int c = 0; c < b.width(); ++c) out.push_back(b.filled({r, c}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

}  // namespace onetris
