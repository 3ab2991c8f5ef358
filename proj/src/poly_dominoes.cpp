#include "onetris/poly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace onetris {

namespace {

const PieceType kDomino = PieceType::make(PieceType::Tag::Domino);

std::pair<Cell, Cell> canon(Cell a, Cell b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

int nearest_filled_below(const Board& b, int r, int c) {
    for (int y = r + 1; y < b.height(); ++y)
        if (b.filled({y, c})) return y;
    return b.height();  // the floor counts as filled
}

}  // namespace

DominoReach compute_reachable_cells(const Board& b) {
    DominoReach out;
    ReachSearch search(RotationModel::Falling);
    for (const PieceState& s : search.reachable_states(b, kDomino)) {
        std::vector<Cell> cells = cells_of(s);
        bool all_in = true;
        for (const Cell& c : cells) {
            if (b.in_bounds(c))
                out.cells.insert(c);
            else
                all_in = false;
        }
        if (all_in) out.locations.insert(canon(cells[0], cells[1]));
    }
    return out;
}

PathOrder compute_path_order(const Board& b) {
    PathOrder order;
    order.width = b.width();
    DominoReach reach = compute_reachable_cells(b);

    auto reachable = [&](int r, int c) { return reach.cells.count({r, c}) > 0; };
    auto ranked = [&](int r, int c) {
        return order.ranks.count(static_cast<long>(r) * b.width() + c) > 0;
    };
    auto assign = [&](int r, int c) {
        order.ranks[static_cast<long>(r) * b.width() + c] =
            static_cast<int>(order.by_rank.size()) + 1;
        order.by_rank.push_back({r, c});
    };

    for (int r = 0; r < b.height(); ++r) {
        std::vector<bool> is_seed(static_cast<size_t>(b.width()), false);
        for (int c = 0; c < b.width(); ++c) {
            if (!reachable(r, c)) continue;
            is_seed[static_cast<size_t>(c)] = r == 0 || reachable(r - 1, c);
        }
        for (int c = 0; c < b.width(); ++c) {
            if (!is_seed[static_cast<size_t>(c)] || ranked(r, c)) continue;
            assign(r, c);
            // Outward expansion, rightward run first. Runs stop at filled or
            // unreachable cells, at already-ranked cells, and at seeds, which
            // keep their own turn.
            for (int cc = c + 1; cc < b.width(); ++cc) {
                if (!reachable(r, cc) || ranked(r, cc) || is_seed[static_cast<size_t>(cc)]) break;
                assign(r, cc);
            }
            for (int cc = c - 1; cc >= 0; --cc) {
                if (!reachable(r, cc) || ranked(r, cc) || is_seed[static_cast<size_t>(cc)]) break;
                assign(r, cc);
            }
        }
    }
    return order;
}

std::optional<std::vector<Move>> monotone_path_script(const Board& b, const PathOrder& order,
                                                      const std::pair<Cell, Cell>& target) {
    auto [ta, tb] = canon(target.first, target.second);
    int ra = order.rank_of(ta), rb = order.rank_of(tb);
    if (ra == 0 || rb == 0) return std::nullopt;

    // Build the cell path backwards: from the earlier target cell, keep
    // prepending the smallest-ranked earlier neighbor until none exists.
    std::vector<Cell> path;
    if (ra > rb) {
        std::swap(ta, tb);
        std::swap(ra, rb);
    }
    path = {ta, tb};
    Cell front = ta;
    int front_rank = ra;
    while (true) {
        // Prepend the smallest-ranked earlier neighbor that is still empty
        // on the current board (later-labelled pieces may already occupy
        // small-rank cells when a placement was deliberately reordered).
        Cell best{};
        int best_rank = front_rank;
        for (const Cell n : {Cell{front.row - 1, front.col}, Cell{front.row + 1, front.col},
                             Cell{front.row, front.col - 1}, Cell{front.row, front.col + 1}}) {
            int rk = order.rank_of(n);
            if (rk > 0 && rk < best_rank && !b.filled(n)) {
                best_rank = rk;
                best = n;
            }
        }
        if (best_rank == front_rank) break;
        path.insert(path.begin(), best);
        front = best;
        front_rank = best_rank;
    }
    if (front.row != 0) return std::nullopt;  // could not reach the top

    // Convert the cell path into engine moves, validating every step.
    auto start = spawn(b, kDomino);
    if (!start) return std::nullopt;
    std::vector<Move> moves;
    PieceState cur = *start;
    auto push = [&](Move m) -> bool {
        StepOutcome o = step(b, cur, m, RotationModel::Falling);
        if (auto* moved = std::get_if<Moved>(&o)) {
            cur = moved->state;
            moves.push_back(m);
            return true;
        }
        return false;
    };
    auto covered = [&](const Cell& a2, const Cell& b2) {
        auto cells = cells_of(cur);
        return canon(cells[0], cells[1]) == canon(a2, b2);
    };

    // Enter the board over the first path cell.
    const Cell p0 = path[0];
    const Cell p1 = path[1];
    if (p1.row == p0.row) {
        // Horizontal entry across the two leftmost path cells.
        int left = std::min(p0.col, p1.col);
        while (cur.anchor.col > left)
            if (!push(Move::Left)) return std::nullopt;
        while (cur.anchor.col < left)
            if (!push(Move::Right)) return std::nullopt;
        if (!push(Move::Down)) return std::nullopt;
    } else {
        // Rotate to vertical above p0's column, then drop in.
        int c = p0.col;
        bool use_cw = c >= 1;  // CW pivots about the right pixel
        int anchor_col = use_cw ? c - 1 : c;
        while (cur.anchor.col > anchor_col)
            if (!push(Move::Left)) return std::nullopt;
        while (cur.anchor.col < anchor_col)
            if (!push(Move::Right)) return std::nullopt;
        if (!push(use_cw ? Move::RotateCW : Move::RotateCCW)) return std::nullopt;
        if (!push(Move::Down)) return std::nullopt;
    }
    if (!covered(p0, p1)) return std::nullopt;

    Cell prev = p0, curc = p1;
    for (size_t i = 2; i < path.size(); ++i) {
        const Cell next = path[i];
        Move m;
        if (prev.row == curc.row) {
            // Horizontal domino.
            if (next.row == curc.row) {
                m = next.col > curc.col ? Move::Right : Move::Left;
            } else {
                // Falling rotation pivoting on curc: CW keeps the right pixel.
                m = curc.col > prev.col ? Move::RotateCW : Move::RotateCCW;
            }
        } else {
            // Vertical domino; curc is the lower pixel.
            if (next.col == curc.col) {
                m = Move::Down;
            } else {
                m = next.col > curc.col ? Move::RotateCW : Move::RotateCCW;
            }
        }
        if (!push(m)) return std::nullopt;
        prev = curc;
        curc = next;
        if (!covered(prev, curc)) return std::nullopt;
    }

    // Lock: the final Down must be blocked here.
    if (!std::holds_alternative<Locked>(step(b, cur, Move::Down, RotationModel::Falling)))
        return std::nullopt;
    moves.push_back(Move::Down);
    return moves;
}

std::optional<MoveScript> sequence_supported_config(const Board& b, const SupportedConfig& cfg,
                                                    std::optional<size_t> last) {
    PathOrder order = compute_path_order(b);

    struct Item {
        Placement p;
        int label;
        bool forced_last;
    };
    std::vector<Item> items;
    for (size_t i = 0; i < cfg.dominoes.size(); ++i) {
        const Placement& p = cfg.dominoes[i];
        int r1 = order.rank_of(p.cells[0]), r2 = order.rank_of(p.cells[1]);
        if (r1 == 0 || r2 == 0) return std::nullopt;  // unreachable location
        items.push_back({p, std::min(r1, r2), last && *last == i});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b2) {
        if (a.forced_last != b2.forced_last) return b2.forced_last;
        if (a.label != b2.label) return a.label > b2.label;  // largest label first
        return a.p.cells < b2.p.cells;
    });

    MoveScript script;
    Board cur = b;
    for (const Item& item : items) {
        auto moves = monotone_path_script(cur, order, {item.p.cells[0], item.p.cells[1]});
        if (!moves) return std::nullopt;
        SettleResult settled = lock_and_settle(cur, item.p);
        if (settled.loss) return std::nullopt;
        cur = settled.board;
        script.push_back(std::move(*moves));
    }
    return script;
}

ColumnClass classify_columns(const Board& b, int r) {
    ColumnClass out;
    DominoReach reach = compute_reachable_cells(b);
    for (int c = 0; c < b.width(); ++c) {
        if (b.filled({r, c})) {
            out.tags.push_back(ColumnTag::Filled);
            continue;
        }
        if (!reach.cells.count({r, c})) {
            out.tags.push_back(ColumnTag::Bad);
            continue;
        }
        const int s = nearest_filled_below(b, r, c);
        if ((s - r) % 2 == 0) {
            out.tags.push_back(ColumnTag::Good);
            continue;
        }
        // Odd gap: a stack can top out at r+1, and one more vertical domino
        // hanging over (r-1,c),(r,c) finishes the column.
        bool ok = r > 0 && !b.filled({r - 1, c}) &&
                  reach.locations.count(canon({r - 1, c}, {r, c})) > 0;
        out.tags.push_back(ok ? ColumnTag::Good : ColumnTag::Bad);
    }
    return out;
}

namespace {

// Whether vertical dominoes can finish (r,c) when the first support at or
// below r sits at row `top`: an even gap takes a plain stack, an odd gap a
// stack topping at r+1 plus one domino hanging over (r-1,c),(r,c).
bool column_plan_from(const Board& b, const DominoReach& reach, int r, int c, int top) {
    for (int y = r; y < top; ++y)
        if (b.filled({y, c})) return false;
    const int gap = top - r;
    if (gap % 2 == 0) {
        for (int y = r; y + 1 < top; y += 2)
            if (!reach.locations.count(canon({y, c}, {y + 1, c}))) return false;
        return true;
    }
    if (r == 0 || b.filled({r - 1, c})) return false;
    if (!reach.locations.count(canon({r - 1, c}, {r, c}))) return false;
    for (int y = r + 1; y + 1 < top; y += 2)
        if (!reach.locations.count(canon({y, c}, {y + 1, c}))) return false;
    return true;
}

struct FixerCandidate {
    int row = -1;
    bool fixes_left = false;
    bool fixes_right = false;
};

}  // namespace

namespace {

// DP over column pairs shared by find_fixing_set and fixing_set_variants.
// States encode the previous pair's choice as row*2+fixes_right, kNone for
// no fixer.
struct FixerDp {
    static constexpr int kNone = -1;
    int width = 0;
    std::vector<std::vector<FixerCandidate>> cands;
    std::vector<bool> bad;
    // dp[p] : state -> set of predecessor states (for enumeration).
    std::vector<std::unordered_map<int, std::vector<int>>> dp;
    bool feasible = false;

    static int encode(const FixerCandidate& fc) {
        return fc.row * 2 + (fc.fixes_right ? 1 : 0);
    }

    void run() {
        dp.assign(static_cast<size_t>(width) + 1, {});
        dp[0][kNone] = {};
        for (int p = 0; p + 1 < width; ++p) {
            for (auto& [prev, _] : dp[static_cast<size_t>(p)]) {
                bool fixed_by_prev = prev != kNone && (prev & 1);
                bool need = bad[static_cast<size_t>(p)];
                if (!need || fixed_by_prev) dp[static_cast<size_t>(p) + 1][kNone].push_back(prev);
                for (const FixerCandidate& fc : cands[static_cast<size_t>(p)]) {
                    if (prev != kNone && fc.row == prev / 2) continue;  // share a cell
                    if (need && !fixed_by_prev && !fc.fixes_left) continue;
                    dp[static_cast<size_t>(p) + 1][encode(fc)].push_back(prev);
                }
            }
            if (dp[static_cast<size_t>(p) + 1].empty()) return;
        }
        for (auto& [key, _] : dp[static_cast<size_t>(width) - 1 + 1 - 1]) {
            (void)key;
        }
        feasible = true;
    }

    // Enumerate complete choices (one row-or-none per pair), newest first.
    void enumerate(size_t cap, std::vector<std::vector<int>>& out) const {
        if (!feasible) return;
        std::vector<int> suffix;
        std::function<void(int, int)> walk = [&](int p, int state) {
            if (out.size() >= cap) return;
            if (p == 0) {
                std::vector<int> rows(suffix.rbegin(), suffix.rend());
                out.push_back(std::move(rows));
                return;
            }
            for (int prev : dp[static_cast<size_t>(p)].at(state)) {
                suffix.push_back(state == kNone ? -1 : state / 2);
                walk(p - 1, prev);
                suffix.pop_back();
                if (out.size() >= cap) return;
            }
        };
        const auto& final_states = dp[static_cast<size_t>(width) - 1];
        for (auto& [key, _] : final_states) {
            if (bad[static_cast<size_t>(width) - 1] && !(key != kNone && (key & 1))) continue;
            walk(width - 1, key);
            if (out.size() >= cap) return;
        }
    }
};

FixerDp build_fixer_dp(const Board& b, int r, const DominoReach& reach,
                       const ColumnClass& cls) {
    const int w = b.width();
    FixerDp dpo;
    dpo.width = w;
    dpo.bad.resize(static_cast<size_t>(w));
    for (int c = 0; c < w; ++c)
        dpo.bad[static_cast<size_t>(c)] = cls.tags[static_cast<size_t>(c)] == ColumnTag::Bad;

    auto col_open = [&](int c) { return cls.tags[static_cast<size_t>(c)] != ColumnTag::Filled; };
    dpo.cands.resize(static_cast<size_t>(std::max(0, w - 1)));
    for (int c = 0; c + 1 < w; ++c) {
        const int nat_l = nearest_filled_below(b, r, c);
        const int nat_r = nearest_filled_below(b, r, c + 1);
        for (int y = r; y < b.height(); ++y) {
            if (b.filled({y, c}) || b.filled({y, c + 1})) continue;
            if (!reach.locations.count(canon({y, c}, {y, c + 1}))) continue;
            FixerCandidate fc;
            fc.row = y;
            bool ok = true;
            auto side = [&](int col, int nat, bool& fixes) {
                fixes = false;
                if (!col_open(col) || y >= nat) return;  // hidden or moot
                if (column_plan_from(b, reach, r, col, y))
                    fixes = true;
                else
                    ok = false;  // hijacks the support but cannot complete
            };
            side(c, nat_l, fc.fixes_left);
            side(c + 1, nat_r, fc.fixes_right);
            if (ok) dpo.cands[static_cast<size_t>(c)].push_back(fc);
        }
    }
    dpo.run();
    return dpo;
}

std::vector<FixingSet> rows_to_sets(const std::vector<std::vector<int>>& rows_list, int w) {
    std::vector<FixingSet> out;
    for (const auto& rows : rows_list) {
        FixingSet set;
        for (int p = 0; p + 1 < w; ++p)
            if (rows[static_cast<size_t>(p)] >= 0)
                set.push_back(Placement{
                    kDomino, {{rows[static_cast<size_t>(p)], p}, {rows[static_cast<size_t>(p)], p + 1}}});
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace

std::vector<FixingSet> fixing_set_variants(const Board& b, int r, size_t cap) {
    const int w = b.width();
    DominoReach reach = compute_reachable_cells(b);
    ColumnClass cls = classify_columns(b, r);

    bool any_bad = false;
    for (ColumnTag t : cls.tags) any_bad |= t == ColumnTag::Bad;
    if (w == 1) return any_bad ? std::vector<FixingSet>{} : std::vector<FixingSet>{FixingSet{}};

    FixerDp dpo = build_fixer_dp(b, r, reach, cls);
    std::vector<std::vector<int>> rows_list;
    dpo.enumerate(cap, rows_list);
    std::vector<FixingSet> sets = rows_to_sets(rows_list, w);
    std::sort(sets.begin(), sets.end(), [](const FixingSet& a, const FixingSet& b2) {
        if (a.size() != b2.size()) return a.size() < b2.size();
        return std::lexicographical_compare(
            a.begin(), a.end(), b2.begin(), b2.end(),
            [](const Placement& x, const Placement& y) { return x.cells < y.cells; });
    });
    return sets;
}

std::optional<FixingSet> find_fixing_set(const Board& b, int r) {
    std::vector<FixingSet> sets = fixing_set_variants(b, r);
    if (sets.empty()) return std::nullopt;
    return sets.front();  // variants are sorted smallest first
}

namespace {

// A fully assembled candidate configuration for clearing row r.
struct ConfigAttempt {
    std::vector<Placement> config;
    bool ok = false;
};

// Support chain options below one fixer. Each option is a list of filler
// placements; validity is checked against board + already chosen cells.
struct ChainContext {
    const Board& b;
    const DominoReach& reach;
    std::vector<std::vector<bool>>& occupied;

    bool busy(int y, int c) const {
        if (y >= b.height()) return true;  // floor
        return b.filled({y, c}) || occupied[static_cast<size_t>(y)][static_cast<size_t>(c)];
    }
};

std::vector<std::vector<Placement>> chain_options(const ChainContext& ctx, const Placement& fixer) {
    const int y = fixer.cells[0].row, c = fixer.cells[0].col;
    std::vector<std::vector<Placement>> options;

    if (ctx.busy(y + 1, c) || ctx.busy(y + 1, c + 1)) {
        options.push_back({});  // already supported
        return options;
    }

    // Horizontal pair chain down to the first support under either column.
    {
        std::vector<Placement> chain;
        int q = y + 1;
        while (!ctx.busy(q + 1, c) && !ctx.busy(q + 1, c + 1)) {
            chain.push_back(Placement{kDomino, {{q, c}, {q, c + 1}}});
            ++q;
        }
        chain.push_back(Placement{kDomino, {{q, c}, {q, c + 1}}});
        bool valid = true;
        for (const Placement& p : chain)
            for (const Cell& cc : p.cells)
                if (ctx.busy(cc.row, cc.col)) valid = false;
        for (const Placement& p : chain)
            if (!ctx.reach.locations.count(canon(p.cells[0], p.cells[1]))) valid = false;
        if (valid) options.push_back(std::move(chain));
    }

    // Vertical chain in one column, from y+1 down to its support; the gap
    // must be even to land exactly.
    for (int col : {c, c + 1}) {
        int s = y + 1;
        while (!ctx.busy(s, col)) ++s;
        int len = s - (y + 1);
        if (len <= 0 || len % 2 != 0) continue;
        std::vector<Placement> chain;
        bool valid = true;
        for (int q = y + 1; q + 1 < s; q += 2) {
            Placement p{kDomino, {{q, col}, {q + 1, col}}};
            if (!ctx.reach.locations.count(canon(p.cells[0], p.cells[1]))) valid = false;
            chain.push_back(std::move(p));
        }
        if (valid) options.push_back(std::move(chain));
    }
    return options;
}

}  // namespace

RowClearResult domino_row_clearable(const Board& b, int r) {
    RowClearResult out;
    DominoReach reach = compute_reachable_cells(b);
    ColumnClass cls = classify_columns(b, r);

    std::vector<FixingSet> variants = fixing_set_variants(b, r);
    if (variants.empty()) return out;  // No

    for (const FixingSet& fixing : variants) {
        // Fixers sorted bottom-up so upper chains can rest on lower ones.
        FixingSet fixers = fixing;
        std::sort(fixers.begin(), fixers.end(), [](const Placement& a, const Placement& b2) {
            return a.cells[0].row > b2.cells[0].row;
        });

        // Choose one support chain per fixer, depth-first over options.
        std::vector<std::vector<bool>> occupied(
            static_cast<size_t>(b.height()), std::vector<bool>(static_cast<size_t>(b.width())));
        ChainContext ctx{b, reach, occupied};
        auto occupy = [&](const Placement& p, bool on) {
            for (const Cell& c : p.cells)
                occupied[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = on;
        };
        for (const Placement& f : fixers) occupy(f, true);

        std::vector<Placement> chains_flat;
        std::function<bool(size_t)> choose = [&](size_t fi) -> bool {
            if (fi == fixers.size()) {
                // Vertical stacks per open column, then the full-row audit.
                std::vector<Placement> stacks;
                bool feasible = true;
                for (int c = 0; c < b.width() && feasible; ++c) {
                    if (cls.tags[static_cast<size_t>(c)] == ColumnTag::Filled) continue;
                    int top = r;
                    while (top < b.height() && !ctx.busy(top, c)) ++top;
                    if (top == r) continue;  // a fixer covers (r,c)
                    if (!column_plan_from(b, reach, r, c, top)) {
                        feasible = false;
                        break;
                    }
                    int lo = (top - r) % 2 == 0 ? r : r + 1;
                    for (int y = top - 2; y >= lo; y -= 2)
                        stacks.push_back(Placement{kDomino, {{y, c}, {y + 1, c}}});
                    if ((top - r) % 2 != 0)
                        stacks.push_back(Placement{kDomino, {{r - 1, c}, {r, c}}});
                }
                if (!feasible) return false;
                for (const Placement& p : stacks) occupy(p, true);

                // Other rows may end up full only if a single vertical can
                // complete them together with row r as the very last piece.
                std::vector<int> full_rows;
                for (int row = 0; row < b.height(); ++row) {
                    if (row == r) continue;
                    bool full = true;
                    for (int c = 0; c < b.width(); ++c)
                        if (!ctx.busy(row, c)) {
                            full = false;
                            break;
                        }
                    if (full) full_rows.push_back(row);
                }

                std::vector<Placement> config = fixers;
                config.insert(config.end(), chains_flat.begin(), chains_flat.end());
                config.insert(config.end(), stacks.begin(), stacks.end());

                std::vector<std::optional<size_t>> last_options;
                if (full_rows.empty()) {
                    last_options.push_back(std::nullopt);
                } else if (full_rows.size() == 1 && std::abs(full_rows[0] - r) == 1) {
                    int other = full_rows[0];
                    for (size_t i = 0; i < config.size(); ++i) {
                        const auto& cells = config[i].cells;
                        if (cells[0].col != cells[1].col) continue;  // vertical only
                        int lo = cells[0].row, hi = cells[1].row;
                        if (lo == std::min(r, other) && hi == std::max(r, other))
                            last_options.push_back(i);
                    }
                }

                for (std::optional<size_t> last : last_options) {
                    auto script = sequence_supported_config(b, SupportedConfig{config}, last);
                    if (!script) continue;
                    // Replay audit: exactly one clear event, at the last
                    // piece, including row r.
                    Board cur = b;
                    bool good = true;
                    for (size_t i = 0; i < script->size() && good; ++i) {
                        ReplayResult rr = replay(cur, {(*script)[i]}, {kDomino});
                        if (!rr.ok()) {
                            good = false;
                            break;
                        }
                        auto [after, rows] =
                            clear_full_rows(apply_placement(cur, rr.placements[0]));
                        if (!rows.empty() && i + 1 < script->size()) good = false;
                        if (i + 1 == script->size() &&
                            std::find(rows.begin(), rows.end(), r) == rows.end())
                            good = false;
                        cur = after;
                    }
                    if (good) {
                        out.decision = Decision::Yes;
                        out.script = std::move(*script);
                        out.kinds.assign(out.script.size(), kDomino);
                        out.fixing_set = fixing;
                        for (const Placement& p : stacks) occupy(p, false);
                        return true;
                    }
                }
                for (const Placement& p : stacks) occupy(p, false);
                return false;
            }
            for (const auto& option : chain_options(ctx, fixers[fi])) {
                bool overlap = false;
                for (const Placement& p : option)
                    for (const Cell& c : p.cells)
                        if (ctx.busy(c.row, c.col)) overlap = true;
                if (overlap) continue;
                for (const Placement& p : option) occupy(p, true);
                chains_flat.insert(chains_flat.end(), option.begin(), option.end());
                if (choose(fi + 1)) return true;
                chains_flat.resize(chains_flat.size() - option.size());
                for (const Placement& p : option) occupy(p, false);
            }
            return false;
        };
        if (choose(0)) return out;
    }
    return out;  // No: every variant either conflicts or fails its audit
}

DominoOutlook domino_survival_and_clearing(const Board& b) {
    DominoOutlook out;
    for (int r = 0; r < b.height(); ++r) {
        RowClearResult rc = domino_row_clearable(b, r);
        if (rc.decision == Decision::Yes) {
            out.survivable = true;
            out.clearable_row = r;
            out.clear_row_script = rc.script;
            break;
        }
    }
    if (!out.survivable) return out;

    ReplayResult rr = replay(b, out.clear_row_script,
                             std::vector<PieceType>(out.clear_row_script.size(), kDomino));
    if (!rr.ok()) return out;
    BarClearing bar = bar_eventually_clearable(rr.board, 2, kDomino);
    if (bar.decision == Decision::Yes) {
        out.eventually_clearable = true;
        out.full_clear_script = out.clear_row_script;
        out.full_clear_script.insert(out.full_clear_script.end(), bar.script.begin(),
                                     bar.script.end());
    }
    return out;
}

int max_domino_packing(const DominoReach& reach) {
    // Kuhn's matching over the checkerboard bipartition of reachable cells.
    std::vector<Cell> left;  // (row+col) even
    std::map<Cell, int> right_id;
    for (const Cell& c : reach.cells)
        if ((c.row + c.col) % 2 != 0) right_id.emplace(c, static_cast<int>(right_id.size()));

    std::vector<std::vector<int>> adj;
    for (const Cell& c : reach.cells) {
        if ((c.row + c.col) % 2 != 0) continue;
        std::vector<int> nbrs;
        for (const Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col},
                             Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
            if (!reach.locations.count(canon(c, n))) continue;
            auto it = right_id.find(n);
            if (it != right_id.end()) nbrs.push_back(it->second);
        }
        left.push_back(c);
        adj.push_back(std::move(nbrs));
    }

    std::vector<int> match(right_id.size(), -1);
    std::vector<bool> used;
    auto aug = [&](auto&& self, int u) -> bool {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            if (match[static_cast<size_t>(v)] < 0 || self(self, match[static_cast<size_t>(v)])) {
                match[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (size_t u = 0; u < left.size(); ++u) {
        used.assign(right_id.size(), false);
        if (aug(aug, static_cast<int>(u))) ++size;
    }
    return size;
}

SurviveKResult domino_survive_k(const Board& b, int n) {
    SurviveKResult out;
    if (n == 0) {
        out.decision = Decision::Yes;
        return out;
    }

    DominoOutlook outlook = domino_survival_and_clearing(b);
    out.row_clearable = outlook.survivable;
    if (outlook.survivable) {
        out.decision = Decision::Yes;
        // Witness: the row-clear script, truncated or extended as needed.
        MoveScript script = outlook.clear_row_script;
        if (static_cast<int>(script.size()) >= n) {
            script.resize(static_cast<size_t>(n));
        } else {
            ReplayResult rr =
                replay(b, script, std::vector<PieceType>(script.size(), kDomino));
            if (rr.ok()) {
                // Top up with hole elimination and then sustained play, both
                // of which survive indefinitely after a clear.
                BarScriptResult elim = eliminate_holes(rr.board, 2, kDomino);
                if (elim.ok) {
                    int needed = n - static_cast<int>(script.size());
                    if (static_cast<int>(elim.script.size()) >= needed) {
                        script.insert(script.end(), elim.script.begin(),
                                      elim.script.begin() + needed);
                    } else {
                        script.insert(script.end(), elim.script.begin(), elim.script.end());
                        needed -= static_cast<int>(elim.script.size());
                        BarSurvival more = bar_survival(elim.board, 2, needed, kDomino);
                        if (more.ok)
                            script.insert(script.end(), more.script.begin(),
                                          more.script.end());
                    }
                }
            }
        }
        if (static_cast<int>(script.size()) == n) out.witness = std::move(script);
        return out;
    }

    DominoReach reach = compute_reachable_cells(b);
    out.max_packing = max_domino_packing(reach);
    if (n > out.max_packing) return out;  // No

    out.decision = Decision::Yes;
    // Witness: greedily keep placing dominoes while the remaining packing
    // bound stays high enough.
    Board cur = b;
    MoveScript script;
    ReachSearch search(RotationModel::Falling);
    for (int placed = 0; placed < n; ++placed) {
        ReachResult rr = search.run(cur, kDomino);
        bool ok = false;
        for (const auto& rp : rr.placements) {
            SettleResult settled = lock_and_settle(cur, rp.placement);
            if (settled.loss) continue;
            int future = max_domino_packing(compute_reachable_cells(settled.board));
            if (placed + 1 + future >= n || !settled.cleared_rows.empty()) {
                script.push_back(rp.witness);
                cur = settled.board;
                ok = true;
                break;
            }
        }
        if (!ok) return out;  // decision stands; witness construction failed
    }
    out.witness = std::move(script);
    return out;
}

}  // namespace onetris
