#include "onetris/motion.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace onetris {

const char* move_name(Move m) {
    switch (m) {
        case Move::Left: return "L";
        case Move::Right: return "R";
        case Move::Down: return "D";
        case Move::RotateCW: return "CW";
        case Move::RotateCCW: return "CCW";
    }
    return "?";
}

std::optional<Move> move_from_name(const std::string& tok) {
    if (tok == "L") return Move::Left;
    if (tok == "R") return Move::Right;
    if (tok == "D") return Move::Down;
    if (tok == "CW") return Move::RotateCW;
    if (tok == "CCW") return Move::RotateCCW;
    return std::nullopt;
}

namespace {

// Transition order: 0->R, R->0, R->2, 2->R, 2->L, L->2, L->0, 0->L.
int transition_index(Rot from, Rot to) {
    const int f = static_cast<int>(from), t = static_cast<int>(to);
    static constexpr int idx[4][4] = {
        //        to 0   R   2   L          from
        /* 0 */ {-1, 0, -1, 7},
        /* R */ {1, -1, 2, -1},
        /* 2 */ {-1, 3, -1, 4},
        /* L */ {6, -1, 5, -1},
    };
    int i = idx[f][t];
    if (i < 0) throw std::logic_error("not a 90-degree transition");
    return i;
}

// Table 1: J, L, S, T, Z.
constexpr std::array<KickRow, 8> kKicksJlstz = {{
    {{{0, 0}, {-1, 0}, {-1, +1}, {0, -2}, {-1, -2}}},  // 0->R
    {{{0, 0}, {+1, 0}, {+1, -1}, {0, +2}, {+1, +2}}},  // R->0
    {{{0, 0}, {+1, 0}, {+1, -1}, {0, +2}, {+1, +2}}},  // R->2
    {{{0, 0}, {-1, 0}, {-1, +1}, {0, -2}, {-1, -2}}},  // 2->R
    {{{0, 0}, {+1, 0}, {+1, +1}, {0, -2}, {+1, -2}}},  // 2->L
    {{{0, 0}, {-1, 0}, {-1, -1}, {0, +2}, {-1, +2}}},  // L->2
    {{{0, 0}, {-1, 0}, {-1, -1}, {0, +2}, {-1, +2}}},  // L->0
    {{{0, 0}, {+1, 0}, {+1, +1}, {0, -2}, {+1, -2}}},  // 0->L
}};

// Table 2: I.
constexpr std::array<KickRow, 8> kKicksI = {{
    {{{0, 0}, {-2, 0}, {+1, 0}, {-2, -1}, {+1, +2}}},  // 0->R
    {{{0, 0}, {+2, 0}, {-1, 0}, {+2, +1}, {-1, -2}}},  // R->0
    {{{0, 0}, {-1, 0}, {+2, 0}, {-1, +2}, {+2, -1}}},  // R->2
    {{{0, 0}, {+1, 0}, {-2, 0}, {+1, -2}, {-2, +1}}},  // 2->R
    {{{0, 0}, {+2, 0}, {-1, 0}, {+2, +1}, {-1, -2}}},  // 2->L
    {{{0, 0}, {-2, 0}, {+1, 0}, {-2, -1}, {+1, +2}}},  // L->2
    {{{0, 0}, {+1, 0}, {-2, 0}, {+1, -2}, {-2, +1}}},  // L->0
    {{{0, 0}, {-1, 0}, {+2, 0}, {-1, +2}, {+2, -1}}},  // 0->L
}};

}  // namespace

const KickRow& kick_row_jlstz(Rot from, Rot to) {
    return kKicksJlstz[static_cast<size_t>(transition_index(from, to))];
}

const KickRow& kick_row_i(Rot from, Rot to) {
    return kKicksI[static_cast<size_t>(transition_index(from, to))];
}

const KickRow& kick_row(PieceType t, Rot from, Rot to) {
    return t.tag == PieceType::Tag::I ? kick_row_i(from, to) : kick_row_jlstz(from, to);
}

bool state_fits(const Board& b, const PieceState& s) {
    for (const Cell& c : cells_of(s))
        if (b.blocked(c)) return false;
    return true;
}

std::optional<PieceState> try_rotate_srs(const Board& b, const PieceState& s, bool cw) {
    if (!s.type.is_tetromino())
        throw std::invalid_argument("SRS rotation applies to tetrominoes only");
    if (s.type.tag == PieceType::Tag::O) return std::nullopt;

    Rot to = cw ? rotate_cw(s.rot) : rotate_ccw(s.rot);
    const KickRow& kicks = kick_row(s.type, s.rot, to);
    for (const Kick& k : kicks) {
        PieceState cand{s.type, to, apply_kick(s.anchor, k)};
        if (state_fits(b, cand)) return cand;
    }
    return std::nullopt;
}

std::optional<PieceState> try_rotate_falling(const Board& b, const PieceState& s, bool cw) {
    if (s.type.tag != PieceType::Tag::Domino)
        throw std::invalid_argument("falling rotation applies to dominoes only");

    const Cell a = s.anchor;
    PieceState cand;
    Cell dest;
    if (s.rot == Rot::R0) {
        // Horizontal, cells (r,c) (r,c+1). CW keeps the right pixel, CCW the
        // left; the other pixel drops below the keeper.
        if (cw) {
            dest = {a.row + 1, a.col + 1};
            cand = {s.type, Rot::RR, {a.row, a.col + 1}};
        } else {
            dest = {a.row + 1, a.col};
            cand = {s.type, Rot::RR, a};
        }
    } else {
        // Vertical, cells (r,c) (r+1,c). The bottom pixel stays; the top one
        // swings to its side, right for CW and left for CCW.
        if (cw) {
            dest = {a.row + 1, a.col + 1};
            cand = {s.type, Rot::R0, {a.row + 1, a.col}};
        } else {
            dest = {a.row + 1, a.col - 1};
            cand = {s.type, Rot::R0, {a.row + 1, a.col - 1}};
        }
    }
    if (b.blocked(dest)) return std::nullopt;
    assert(state_fits(b, cand));
    return cand;
}

std::optional<PieceState> try_rotate_bar(const Board& b, const PieceState& s) {
    if (s.type.tag != PieceType::Tag::Bar)
        throw std::invalid_argument("anchor rotation applies to bars only");
    const Rot to = s.rot == Rot::R0 ? Rot::RR : Rot::R0;
    const int k = s.type.bar_k;
    // Pivot about the near end first, then the far end, so vertical bars can
    // stand in every column and horizontal ones reach every row.
    const Cell far = s.rot == Rot::R0 ? Cell{s.anchor.row, s.anchor.col + k - 1}
                                      : Cell{s.anchor.row + k - 1, s.anchor.col};
    for (const Cell& a : {s.anchor, far}) {
        PieceState cand{s.type, to, a};
        if (state_fits(b, cand)) return cand;
    }
    return std::nullopt;
}

std::optional<PieceState> try_translate(const Board& b, const PieceState& s, Move dir) {
    Cell a = s.anchor;
    switch (dir) {
        case Move::Left: a.col -= 1; break;
        case Move::Right: a.col += 1; break;
        case Move::Down: a.row += 1; break;
        default: throw std::invalid_argument("not a translation");
    }
    PieceState cand{s.type, s.rot, a};
    if (!state_fits(b, cand)) return std::nullopt;
    return cand;
}

std::optional<PieceState> spawn(const Board& b, PieceType t) {
    const int bw = box_width(t, Rot::R0);
    if (bw > b.width()) return std::nullopt;
    int lowest = 0;
    for (const Cell& c : box_cells(t, Rot::R0)) lowest = std::max(lowest, c.row);
    PieceState s{t, Rot::R0, {-1 - lowest, (b.width() - bw) / 2}};
    assert(state_fits(b, s));
    return s;
}

StepOutcome step(const Board& b, const PieceState& s, Move m, RotationModel model) {
    switch (m) {
        case Move::Left:
        case Move::Right: {
            if (auto next = try_translate(b, s, m)) return Moved{*next};
            return Rejected{};
        }
        case Move::Down: {
            if (auto next = try_translate(b, s, m)) return Moved{*next};
            return Locked{placement_of(s)};
        }
        case Move::RotateCW:
        case Move::RotateCCW: {
            const bool cw = m == Move::RotateCW;
            std::optional<PieceState> next;
            switch (s.type.tag) {
                case PieceType::Tag::Domino:
                    next = try_rotate_falling(b, s, cw);
                    break;
                case PieceType::Tag::Bar:
                    next = try_rotate_bar(b, s);
                    break;
                default:
                    next = try_rotate_srs(b, s, cw);
                    break;
            }
            (void)model;
            if (next) return Moved{*next};
            return Rejected{};
        }
    }
    return Rejected{};
}

SettleResult lock_and_settle(const Board& b, const Placement& p) {
    for (const Cell& c : p.cells)
        if (c.row < 0) return {b, {}, true};
    Board placed = apply_placement(b, p);
    auto [cleared, rows] = clear_full_rows(placed);
    return {cleared, rows, false};
}

// --- Reachability ------------------------------------------------------------

namespace {

constexpr int kRowPad = 6;
constexpr int kColPad = 4;

struct StateSpace {
    int w, h, rows, cols;

    explicit StateSpace(const Board& b)
        : w(b.width()), h(b.height()), rows(b.height() + kRowPad), cols(b.width() + kColPad) {}

    size_t size() const { return static_cast<size_t>(rows) * cols * 4; }

    int encode(const PieceState& s) const {
        int r = s.anchor.row + kRowPad, c = s.anchor.col + kColPad;
        if (r < 0 || r >= rows + 0 || c < 0 || c >= cols) return -1;
        if (r >= rows) return -1;
        return (r * cols + c) * 4 + static_cast<int>(s.rot);
    }
    PieceState decode(int id, PieceType t) const {
        Rot rot = static_cast<Rot>(id & 3);
        int rc = id >> 2;
        return {t, rot, {rc / cols - kRowPad, rc % cols - kColPad}};
    }
};

constexpr std::array<Move, 5> kAllMoves = {Move::Left, Move::Right, Move::Down, Move::RotateCW,
                                           Move::RotateCCW};

}  // namespace

ReachResult ReachSearch::run(const Board& b, PieceType t) {
    ReachResult out;
    auto start = spawn(b, t);
    if (!start) {
        out.spawn_loss = true;
        return out;
    }

    StateSpace space(b);
    parent_.assign(space.size(), -2);  // -2 unvisited, -1 root
    parent_move_.assign(space.size(), 0);
    queue_.clear();

    const int root = space.encode(*start);
    parent_[static_cast<size_t>(root)] = -1;
    queue_.push_back(static_cast<uint32_t>(root));

    std::unordered_set<size_t> seen_placements;
    std::vector<std::pair<Placement, int>> found;  // placement + locking state id

    for (size_t qi = 0; qi < queue_.size(); ++qi) {
        const int id = static_cast<int>(queue_[qi]);
        const PieceState s = space.decode(id, t);

        for (Move m : kAllMoves) {
            StepOutcome o = step(b, s, m, model_);
            if (auto* moved = std::get_if<Moved>(&o)) {
                int nid = space.encode(moved->state);
                if (nid < 0) continue;
                if (parent_[static_cast<size_t>(nid)] != -2) continue;
                parent_[static_cast<size_t>(nid)] = id;
                parent_move_[static_cast<size_t>(nid)] = static_cast<uint8_t>(m);
                queue_.push_back(static_cast<uint32_t>(nid));
            } else if (std::holds_alternative<Locked>(o)) {
                // Only the Down move locks; record once per distinct footprint.
                Placement p = std::get<Locked>(o).placement;
                if (p.cells.front().row < 0) continue;
                size_t h = 14695981039346656037ull;
                for (const Cell& c : p.cells)
                    h = (h ^ (static_cast<size_t>(c.row) * 131071 + static_cast<size_t>(c.col))) *
                        1099511628211ull;
                if (seen_placements.insert(h).second) found.emplace_back(std::move(p), id);
            }
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b2) { return a.first.cells < b2.first.cells; });
    for (auto& [p, id] : found) {
        std::vector<Move> path;
        for (int cur = id; parent_[static_cast<size_t>(cur)] != -1;
             cur = parent_[static_cast<size_t>(cur)])
            path.push_back(static_cast<Move>(parent_move_[static_cast<size_t>(cur)]));
        std::reverse(path.begin(), path.end());
        path.push_back(Move::Down);
        out.placements.push_back({std::move(p), std::move(path)});
    }
    return out;
}

std::optional<std::vector<Move>> ReachSearch::find_path(const Board& b, PieceType t,
                                                        const Placement& goal) {
    auto start = spawn(b, t);
    if (!start) return std::nullopt;

    StateSpace space(b);

    // Identify the states whose footprint equals the goal.
    std::vector<int> goal_ids;
    for (int r = 0; r < 4; ++r) {
        Rot rot = static_cast<Rot>(r);
        if (!orientation_valid(t, rot)) continue;
        std::vector<Cell> bc = box_cells(t, rot);
        std::sort(bc.begin(), bc.end());
        if (bc.size() != goal.cells.size()) continue;
        PieceState cand{t, rot,
                        {goal.cells[0].row - bc[0].row, goal.cells[0].col - bc[0].col}};
        if (placement_of(cand).cells == goal.cells) {
            int id = space.encode(cand);
            if (id >= 0) goal_ids.push_back(id);
        }
    }
    if (goal_ids.empty()) return std::nullopt;

    parent_.assign(space.size(), -2);
    parent_move_.assign(space.size(), 0);
    queue_.clear();

    const int root = space.encode(*start);
    parent_[static_cast<size_t>(root)] = -1;
    queue_.push_back(static_cast<uint32_t>(root));

    auto is_goal = [&](int id) {
        return std::find(goal_ids.begin(), goal_ids.end(), id) != goal_ids.end();
    };
    auto emit = [&](int id) {
        std::vector<Move> path;
        for (int cur = id; parent_[static_cast<size_t>(cur)] != -1;
             cur = parent_[static_cast<size_t>(cur)])
            path.push_back(static_cast<Move>(parent_move_[static_cast<size_t>(cur)]));
        std::reverse(path.begin(), path.end());
        path.push_back(Move::Down);
        return path;
    };

    if (is_goal(root)) {
        // Goal must still be lock-capable; the Down check happens below when
        // popped, so handle the root uniformly by falling through.
    }

    for (size_t qi = 0; qi < queue_.size(); ++qi) {
        const int id = static_cast<int>(queue_[qi]);
        const PieceState s = space.decode(id, t);

        if (is_goal(id)) {
            if (std::holds_alternative<Locked>(step(b, s, Move::Down, model_))) return emit(id);
        }
        for (Move m : kAllMoves) {
            StepOutcome o = step(b, s, m, model_);
            if (auto* moved = std::get_if<Moved>(&o)) {
                int nid = space.encode(moved->state);
                if (nid < 0) continue;
                if (parent_[static_cast<size_t>(nid)] != -2) continue;
                parent_[static_cast<size_t>(nid)] = id;
                parent_move_[static_cast<size_t>(nid)] = static_cast<uint8_t>(m);
                queue_.push_back(static_cast<uint32_t>(nid));
            }
        }
    }
    return std::nullopt;
}

std::vector<PieceState> ReachSearch::reachable_states(const Board& b, PieceType t) {
    std::vector<PieceState> out;
    auto start = spawn(b, t);
    if (!start) return out;

    StateSpace space(b);
    parent_.assign(space.size(), -2);
    parent_move_.assign(space.size(), 0);
    queue_.clear();

    const int root = space.encode(*start);
    parent_[static_cast<size_t>(root)] = -1;
    queue_.push_back(static_cast<uint32_t>(root));

    for (size_t qi = 0; qi < queue_.size(); ++qi) {
        const int id = static_cast<int>(queue_[qi]);
        const PieceState s = space.decode(id, t);
        out.push_back(s);
        for (Move m : kAllMoves) {
            StepOutcome o = step(b, s, m, model_);
            if (auto* moved = std::get_if<Moved>(&o)) {
                int nid = space.encode(moved->state);
                if (nid < 0) continue;
                if (parent_[static_cast<size_t>(nid)] != -2) continue;
                parent_[static_cast<size_t>(nid)] = id;
                parent_move_[static_cast<size_t>(nid)] = static_cast<uint8_t>(m);
                queue_.push_back(static_cast<uint32_t>(nid));
            }
        }
    }
    return out;
}

ReachResult reachable_placements(const Board& b, PieceType t, RotationModel model) {
    ReachSearch search(model);
    return search.run(b, t);
}

// --- Scripts ------------------------------------------------------------------

std::string render_script(const MoveScript& script) {
    std::string out;
    for (const auto& moves : script) {
        for (size_t i = 0; i < moves.size(); ++i) {
            if (i) out.push_back(' ');
            out += move_name(moves[i]);
        }
        out.push_back('\n');
    }
    return out;
}

MoveScript parse_script(const std::string& text) {
    MoveScript script;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<Move> moves;
        std::string tok;
        while (ls >> tok) {
            auto m = move_from_name(tok);
            if (!m) throw std::invalid_argument("unknown move token: " + tok);
            moves.push_back(*m);
        }
        if (!moves.empty()) script.push_back(std::move(moves));
    }
    return script;
}

ReplayResult replay(const Board& start, const MoveScript& script,
                    const std::vector<PieceType>& kinds) {
    ReplayResult res{start, {}, std::nullopt};
    if (script.size() != kinds.size()) {
        res.error = ReplayError{0, 0, "script has " + std::to_string(script.size()) +
                                          " pieces but " + std::to_string(kinds.size()) +
                                          " kinds were given"};
        return res;
    }

    Board board = start;
    for (size_t pi = 0; pi < script.size(); ++pi) {
        auto state = spawn(board, kinds[pi]);
        if (!state) {
            res.error = ReplayError{pi, 0, "piece does not fit the board at spawn"};
            return res;
        }
        const RotationModel model = default_model(kinds[pi]);
        bool locked = false;
        for (size_t mi = 0; mi < script[pi].size(); ++mi) {
            StepOutcome o = step(board, *state, script[pi][mi], model);
            if (auto* moved = std::get_if<Moved>(&o)) {
                state = moved->state;
                continue;
            }
            if (std::holds_alternative<Rejected>(o)) {
                res.error = ReplayError{pi, mi, std::string("move ") +
                                                    move_name(script[pi][mi]) + " rejected"};
                return res;
            }
            // Locked.
            if (mi + 1 != script[pi].size()) {
                res.error = ReplayError{pi, mi, "piece locked before the end of its move list"};
                return res;
            }
            Placement p = std::get<Locked>(o).placement;
            SettleResult settled = lock_and_settle(board, p);
            if (settled.loss) {
                res.error = ReplayError{pi, mi, "loss: piece locked above the top row"};
                return res;
            }
            board = settled.board;
            res.placements.push_back(std::move(p));
            locked = true;
        }
        if (!locked) {
            res.error = ReplayError{pi, script[pi].size(),
                                    "move list ended without a locking Down"};
            return res;
        }
    }
    res.board = board;
    return res;
}

}  // namespace onetris
