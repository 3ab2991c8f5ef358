#include "onetris/poly.hpp"

#include <algorithm>

namespace onetris {

namespace {

// First filled row in the column, scanning down; the floor index when empty.
int surface_row(const Board& b, int col) {
    for (int r = 0; r < b.height(); ++r)
        if (b.filled({r, col})) return r;
    return b.height();
}

int column_count(const Board& b, int col) {
    int n = 0;
    for (int r = 0; r < b.height(); ++r)
        if (b.filled({r, col})) ++n;
    return n;
}

struct BarSim {
    Board board;
    PieceType piece;
    MoveScript script;
    std::vector<PieceType> kinds;
    ReachSearch reach;
    std::string error;

    BarSim(const Board& b, PieceType p)
        : board(b), piece(p), reach(default_model(p)) {}

    bool place(const Placement& goal) {
        auto path = reach.find_path(board, piece, goal);
        if (!path) {
            error = "no path to placement at (" + std::to_string(goal.cells[0].row) + "," +
                    std::to_string(goal.cells[0].col) + ")";
            return false;
        }
        SettleResult settled = lock_and_settle(board, goal);
        if (settled.loss) {
            error = "placement locks above the top row";
            return false;
        }
        board = settled.board;
        script.push_back(*path);
        kinds.push_back(piece);
        return true;
    }

    bool drop_vertical(int col) {
        int s = surface_row(board, col);
        int k = piece.cell_count();
        if (s - k < 0) {
            error = "column " + std::to_string(col) + " has no room for a vertical piece";
            return false;
        }
        Placement p{piece, {}};
        for (int r = s - k; r < s; ++r) p.cells.push_back({r, col});
        return place(p);
    }

    // Plays the survival rule until every stack is at most k-1 tall: drop a
    // vertical piece into the leftmost empty-bottom column, repeatedly.
    bool reduce_height() {
        const int k = piece.cell_count();
        int safety = board.width() * board.height() * 4 + 16;
        while (true) {
            int maxh = 0;
            for (int c = 0; c < board.width(); ++c)
                maxh = std::max(maxh, board.height() - surface_row(board, c));
            if (maxh <= k - 1) return true;
            if (--safety < 0) {
                error = "height reduction did not converge";
                return false;
            }
            int col = -1;
            for (int c = 0; c < board.width(); ++c)
                if (!board.filled({board.height() - 1, c})) {
                    col = c;
                    break;
                }
            if (col < 0) {
                error = "no empty cell on the bottom row";
                return false;
            }
            if (!drop_vertical(col)) return false;
        }
    }

    bool drop_horizontal(int col) {
        int k = piece.cell_count();
        int row = board.height();
        for (int c = col; c < col + k; ++c) row = std::min(row, surface_row(board, c));
        --row;
        if (row < 0) {
            error = "no room for a horizontal piece at column " + std::to_string(col);
            return false;
        }
        Placement p{piece, {}};
        for (int c = col; c < col + k; ++c) p.cells.push_back({row, c});
        return place(p);
    }
};

}  // namespace

std::vector<Hole> find_holes(const Board& b) {
    std::vector<Hole> out;
    for (int c = 0; c < b.width(); ++c) {
        bool seen_filled = false;
        for (int r = 0; r < b.height(); ++r) {
            if (b.filled({r, c}))
                seen_filled = true;
            else if (seen_filled)
                out.push_back({{r, c}});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Hole& a, const Hole& b2) { return a.cell < b2.cell; });
    return out;
}

std::optional<std::string> bar_preconditions(const Board& b, int k) {
    if (k < 1) return "piece width must be at least 1";
    if (b.height() < 2 * k - 1)
        return "board height " + std::to_string(b.height()) + " is below 2k-1 = " +
               std::to_string(2 * k - 1);
    for (int r = 0; r < k - 1; ++r)
        if (!b.row_empty(r)) return "top " + std::to_string(k - 1) + " rows must be empty";
    if (b.width() < k)
        return "board width " + std::to_string(b.width()) + " is below the piece length";
    return std::nullopt;
}

static PieceType bar_piece(int k, std::optional<PieceType> piece) {
    if (!piece) return PieceType::bar(k);
    if (piece->cell_count() != k)
        throw std::invalid_argument("piece length does not match k");
    return *piece;
}

BarScriptResult eliminate_holes(const Board& b, int k, std::optional<PieceType> piece) {
    BarScriptResult out;
    out.board = b;
    if (auto err = bar_preconditions(b, k)) {
        out.error = *err;
        return out;
    }
    BarSim sim(b, bar_piece(k, piece));

    // Each round attacks the row directly above the highest hole. Clears may
    // reshuffle everything, so recompute from scratch every iteration.
    const int safety = b.width() * b.height() * (k + 2) * 4 + 64;
    int spent = 0;
    while (true) {
        std::vector<Hole> holes = find_holes(sim.board);
        if (holes.empty()) break;
        if (++spent > safety) {
            out.error = "hole elimination did not converge";
            return out;
        }
        const Cell h = holes.front().cell;
        const int target_row = h.row - 1;  // filled, because h is the highest hole
        int col = -1;
        for (int c = 0; c < sim.board.width(); ++c)
            if (!sim.board.filled({target_row, c})) {
                col = c;
                break;
            }
        if (col < 0) {
            out.error = "row above the highest hole is already full";
            return out;
        }
        // Fill this column up to the target row; stop early if a clear
        // rearranged the board.
        while (!sim.board.filled({target_row, col})) {
            int before = sim.board.count_filled();
            if (!sim.drop_vertical(col)) {
                out.error = sim.error;
                return out;
            }
            if (sim.board.count_filled() != before + k) break;  // a row cleared
        }
    }
    out.ok = true;
    out.board = sim.board;
    out.script = std::move(sim.script);
    out.kinds = std::move(sim.kinds);
    return out;
}

BarSurvival bar_survival(const Board& b, int k, int demo_pieces, std::optional<PieceType> piece) {
    BarSurvival out;
    BarScriptResult base = eliminate_holes(b, k, piece);
    if (!base.ok) {
        out.error = base.error;
        return out;
    }
    BarSim sim(base.board, bar_piece(k, piece));
    sim.script = base.script;
    sim.kinds = base.kinds;

    for (int i = 0; i < demo_pieces; ++i) {
        // Lowest available location: the column with the deepest surface.
        int best = 0, best_surface = -1;
        for (int c = 0; c < sim.board.width(); ++c) {
            int s = surface_row(sim.board, c);
            if (s > best_surface) {
                best_surface = s;
                best = c;
            }
        }
        if (!sim.drop_vertical(best)) {
            out.error = sim.error;
            return out;
        }
        int stack = 0;
        for (int c = 0; c < sim.board.width(); ++c)
            stack = std::max(stack, sim.board.height() - surface_row(sim.board, c));
        out.max_stack_height = std::max(out.max_stack_height, stack);
    }
    out.ok = true;
    out.script = std::move(sim.script);
    out.kinds = std::move(sim.kinds);
    out.final_board = sim.board;
    return out;
}

BarClearing bar_eventually_clearable(const Board& b, int k, std::optional<PieceType> piece) {
    BarClearing out;
    BarScriptResult base = eliminate_holes(b, k, piece);
    if (!base.ok) {
        out.error = base.error;
        return out;
    }

    auto run_guess = [&](int guess, BarClearing& result) -> bool {
        BarSim sim(base.board, bar_piece(k, piece));
        sim.script = base.script;
        sim.kinds = base.kinds;

        auto eliminate_now = [&]() -> bool {
            BarScriptResult fix = eliminate_holes(sim.board, k, piece);
            if (!fix.ok) return false;
            sim.board = fix.board;
            for (size_t i = 0; i < fix.script.size(); ++i) {
                sim.script.push_back(fix.script[i]);
                sim.kinds.push_back(fix.kinds[i]);
            }
            return true;
        };

        if (!sim.reduce_height()) return false;
        for (int i = 0; i < guess; ++i) {
            if (!sim.drop_horizontal(0) || !eliminate_now() || !sim.reduce_height())
                return false;
        }
        for (int c = 1; c < sim.board.width(); ++c) {
            int want = column_count(sim.board, c - 1) - column_count(sim.board, c);
            want = ((want % k) + k) % k;
            if (c + k - 1 >= sim.board.width()) {
                if (want != 0) return false;  // no anchor room; counts must already agree
                continue;
            }
            for (int i = 0; i < want; ++i) {
                if (!sim.drop_horizontal(c) || !eliminate_now() || !sim.reduce_height())
                    return false;
            }
        }
        for (int c = 1; c < sim.board.width(); ++c) {
            int diff = column_count(sim.board, c) - column_count(sim.board, c - 1);
            if (((diff % k) + k) % k != 0) return false;
        }

        // All columns agree mod k and there are no holes: level everything
        // with vertical pieces until the board is empty.
        int safety = sim.board.width() * sim.board.height() * 2 + 16;
        while (sim.board.count_filled() != 0) {
            if (--safety < 0) return false;
            int best = 0, best_count = INT32_MAX;
            for (int c = 0; c < sim.board.width(); ++c) {
                int n = column_count(sim.board, c);
                if (n < best_count) {
                    best_count = n;
                    best = c;
                }
            }
            if (!sim.drop_vertical(best)) return false;
        }
        result.decision = Decision::Yes;
        result.script = std::move(sim.script);
        result.kinds = std::move(sim.kinds);
        return true;
    };

    for (int guess = 0; guess < k; ++guess) {
        BarClearing attempt;
        if (run_guess(guess, attempt)) {
            attempt.first_column_guess = guess;
            return attempt;
        }
    }
    out.decision = Decision::No;
    return out;
}

}  // namespace onetris
