#include "onetris/exact.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace onetris {

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    return "?";
}

namespace {

struct MemoKey {
    size_t board_hash;
    size_t index;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        return k.board_hash * 1099511628211ull + k.index;
    }
};

struct Searcher {
    const std::vector<PieceType>& kinds;
    RotationModel model;
    SolveOptions opts;
    bool clearing;  // otherwise survival
    SolveStats stats;
    bool budget_hit = false;
    std::unordered_map<MemoKey, bool, MemoKeyHash> memo;
    ReachSearch reach;

    Searcher(const std::vector<PieceType>& kinds, RotationModel model, SolveOptions opts,
             bool clearing)
        : kinds(kinds), model(model), opts(opts), clearing(clearing), reach(model) {}

    bool feasible_counts(const Board& b, size_t index) const {
        if (!clearing) return true;
        // Filled cells change by +size per piece and -width per cleared row,
        // so a full clear needs filled + size*remaining == 0 (mod width).
        long long filled = b.count_filled();
        for (size_t i = index; i < kinds.size(); ++i) filled += kinds[i].cell_count();
        return filled % b.width() == 0;
    }

    bool solve(const Board& b, size_t index) {
        if (index == kinds.size()) return clearing ? b.count_filled() == 0 : true;
        if (++stats.nodes > opts.node_budget) {
            budget_hit = true;
            return false;
        }
        if (!feasible_counts(b, index)) return false;

        MemoKey key{b.hash(), index};
        if (opts.memoize) {
            if (auto it = memo.find(key); it != memo.end()) {
                ++stats.memo_hits;
                return it->second;
            }
        }

        bool result = false;
        ReachResult rr = reach.run(b, kinds[index]);
        if (!rr.spawn_loss) {
            for (const auto& rp : rr.placements) {
                SettleResult settled = lock_and_settle(b, rp.placement);
                if (settled.loss) continue;
                if (solve(settled.board, index + 1)) {
                    result = true;
                    break;
                }
                if (budget_hit) break;
            }
        }
        if (opts.memoize && !budget_hit) memo[key] = result;
        return result;
    }

    // Re-walk a decided-yes position to extract the witness script.
    bool extract(const Board& b, size_t index, MoveScript& script) {
        if (index == kinds.size()) return clearing ? b.count_filled() == 0 : true;
        ReachResult rr = reach.run(b, kinds[index]);
        if (rr.spawn_loss) return false;
        for (const auto& rp : rr.placements) {
            SettleResult settled = lock_and_settle(b, rp.placement);
            if (settled.loss) continue;
            script.push_back(rp.witness);
            if (extract(settled.board, index + 1, script)) return true;
            script.pop_back();
        }
        return false;
    }
};

SolveResult run_solver(const Board& board, const std::vector<PieceType>& kinds,
                       RotationModel model, const SolveOptions& opts, bool clearing) {
    Searcher s(kinds, model, opts, clearing);
    bool yes = s.solve(board, 0);
    SolveResult out;
    out.stats = s.stats;
    if (s.budget_hit && !yes) {
        out.decision = Decision::Unknown;
        return out;
    }
    out.decision = yes ? Decision::Yes : Decision::No;
    if (yes) {
        MoveScript script;
        if (s.extract(board, 0, script)) out.witness = std::move(script);
    }
    return out;
}

}  // namespace

SolveResult solve_clearing(const Board& board, const std::vector<PieceType>& kinds,
                           RotationModel model, const SolveOptions& opts) {
    return run_solver(board, kinds, model, opts, true);
}

SolveResult solve_survival(const Board& board, const std::vector<PieceType>& kinds,
                           RotationModel model, const SolveOptions& opts) {
    return run_solver(board, kinds, model, opts, false);
}

MaxSurvivable max_survivable(const Board& board, PieceType t, RotationModel model, int cap,
                             const SolveOptions& opts) {
    MaxSurvivable out;
    std::unordered_map<size_t, int> memo;  // board hash -> max count (capped)
    ReachSearch reach(model);
    SolveStats stats;

    // DFS with memo: f(b) = 0 if no legal lock, else 1 + max f(child), capped.
    auto rec = [&](auto&& self, const Board& b, int depth) -> int {
        if (depth >= cap) return 0;  // contributes cap - depth = 0 more
        size_t h = b.hash();
        if (auto it = memo.find(h); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        ++stats.nodes;
        int best = 0;
        ReachResult rr = reach.run(b, t);
        if (!rr.spawn_loss) {
            for (const auto& rp : rr.placements) {
                SettleResult settled = lock_and_settle(b, rp.placement);
                if (settled.loss) continue;
                best = std::max(best, 1 + self(self, settled.board, depth + 1));
                if (best >= cap - depth) break;  // can't do better from here
            }
        }
        // Only cache values that were not depth-limited.
        if (best < cap - depth) memo[h] = best;
        return best;
    };

    out.count = rec(rec, board, 0);
    out.capped = out.count >= cap;
    out.stats = stats;
    return out;
}

UnboundedClearing solve_clearing_unbounded(const Board& board, PieceType t, RotationModel model,
                                           uint64_t state_budget) {
    UnboundedClearing out;
    ReachSearch reach(model);

    std::unordered_map<size_t, std::pair<size_t, std::vector<Move>>> parent;
    std::vector<Board> queue;
    std::unordered_map<size_t, size_t> seen;  // hash -> index in queue

    auto push = [&](const Board& b, size_t from, std::vector<Move> via) -> bool {
        size_t h = b.hash();
        if (seen.count(h)) return false;
        seen[h] = queue.size();
        parent[h] = {from, std::move(via)};
        queue.push_back(b);
        return true;
    };

    push(board, SIZE_MAX, {});
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Board b = queue[qi];
        if (b.count_filled() == 0) {
            // Reconstruct the placement chain.
            MoveScript script;
            size_t h = b.hash();
            while (parent[h].first != SIZE_MAX) {
                script.push_back(parent[h].second);
                h = parent[h].first;
            }
            std::reverse(script.begin(), script.end());
            out.decision = Decision::Yes;
            out.witness = std::move(script);
            out.states = queue.size();
            return out;
        }
        if (queue.size() > state_budget) {
            out.decision = Decision::Unknown;
            out.states = queue.size();
            return out;
        }
        ReachResult rr = reach.run(b, t);
        if (rr.spawn_loss) continue;
        for (const auto& rp : rr.placements) {
            SettleResult settled = lock_and_settle(b, rp.placement);
            if (settled.loss) continue;
            push(settled.board, b.hash(), rp.witness);
        }
    }
    out.decision = Decision::No;
    out.states = queue.size();
    return out;
}

FirstClearable first_clearable_rows(const Board& board, PieceType t, RotationModel model,
                                    uint64_t state_budget) {
    FirstClearable out;
    ReachSearch reach(model);

    std::unordered_map<size_t, std::pair<size_t, std::vector<Move>>> parent;
    std::vector<Board> queue;
    std::unordered_map<size_t, size_t> seen;

    auto trail = [&](const Board& b) {
        MoveScript script;
        size_t h = b.hash();
        while (parent[h].first != SIZE_MAX) {
            script.push_back(parent[h].second);
            h = parent[h].first;
        }
        std::reverse(script.begin(), script.end());
        return script;
    };

    seen[board.hash()] = 0;
    parent[board.hash()] = {SIZE_MAX, {}};
    queue.push_back(board);

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        if (queue.size() > state_budget) {
            out.exhausted = false;
            break;
        }
        Board b = queue[qi];
        ReachResult rr = reach.run(b, t);
        if (rr.spawn_loss) continue;
        for (const auto& rp : rr.placements) {
            SettleResult settled = lock_and_settle(b, rp.placement);
            if (settled.loss) continue;
            if (!settled.cleared_rows.empty()) {
                // First clear event: these rows complete simultaneously.
                for (int r : settled.cleared_rows) {
                    if (out.rows.insert(r).second) {
                        MoveScript w = trail(b);
                        w.push_back(rp.witness);
                        out.witnesses.emplace_back(r, std::move(w));
                    }
                }
                continue;  // do not explore past a clear
            }
            size_t h = settled.board.hash();
            if (seen.count(h)) continue;
            seen[h] = queue.size();
            parent[h] = {b.hash(), rp.witness};
            queue.push_back(settled.board);
        }
    }
    out.states = queue.size();
    return out;
}

// --- SAT -----------------------------------------------------------------------

OneInThreeSat parse_sat(const std::string& text) {
    OneInThreeSat f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::array<int, 3> lits{};
        if (!(ls >> lits[0])) continue;
        if (!(ls >> lits[1] >> lits[2]))
            throw std::invalid_argument("clause line needs three literals: " + line);
        int extra;
        if (ls >> extra) throw std::invalid_argument("clause line has extra tokens: " + line);
        for (int lit : lits) {
            if (lit == 0) throw std::invalid_argument("literal 0 is not allowed");
            f.num_vars = std::max(f.num_vars, std::abs(lit));
        }
        f.clauses.push_back(lits);
    }
    return f;
}

std::string render_sat(const OneInThreeSat& f) {
    std::string out;
    for (const auto& cl : f.clauses)
        out += std::to_string(cl[0]) + " " + std::to_string(cl[1]) + " " +
               std::to_string(cl[2]) + "\n";
    return out;
}

SatResult solve_1in3sat(const OneInThreeSat& f, int max_vars) {
    SatResult res;
    if (f.num_vars > max_vars) return res;  // Unknown
    const uint32_t limit = uint32_t(1) << f.num_vars;
    for (uint32_t bits = 0; bits < limit; ++bits) {
        bool ok = true;
        for (const auto& cl : f.clauses) {
            int trues = 0;
            for (int lit : cl) {
                bool v = (bits >> (std::abs(lit) - 1)) & 1;
                if (lit < 0) v = !v;
                trues += v;
            }
            if (trues != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.decision = Decision::Yes;
            res.assignment.assign(static_cast<size_t>(f.num_vars) + 1, false);
            for (int v = 1; v <= f.num_vars; ++v)
                res.assignment[static_cast<size_t>(v)] = (bits >> (v - 1)) & 1;
            return res;
        }
        if (f.num_vars == 0) break;
    }
    if (f.num_vars == 0 && f.clauses.empty()) {
        res.decision = Decision::Yes;
        return res;
    }
    res.decision = Decision::No;
    return res;
}

// --- Graph orientation ------------------------------------------------------------

OrientationResult solve_graph_orientation(const OrientationInstance& g, int max_edges) {
    OrientationResult res;

    std::vector<int> degree(g.node_class.size(), 0);
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(g.node_class.size()) ||
            b >= static_cast<int>(g.node_class.size())) {
            res.error = "edge endpoint out of range";
            return res;
        }
        ++degree[static_cast<size_t>(a)];
        ++degree[static_cast<size_t>(b)];
    }
    for (size_t v = 0; v < g.node_class.size(); ++v) {
        int want = 0;
        switch (g.node_class[v]) {
            case NodeClass::Literal03:
            case NodeClass::ClauseIn1:
            case NodeClass::NegClauseIn2: want = 3; break;
            default: want = 4; break;
        }
        if (degree[v] != want) {
            res.error = "node " + std::to_string(v) + " has degree " +
                        std::to_string(degree[v]) + ", class requires " + std::to_string(want);
            return res;
        }
    }

    if (static_cast<int>(g.edges.size()) > max_edges) return res;  // Unknown

    auto indegree_ok = [&](NodeClass cls, int in) {
        switch (cls) {
            case NodeClass::Literal03: return in == 0 || in == 3;
            case NodeClass::ClauseIn1: return in == 1;
            case NodeClass::NegClauseIn2: return in == 2;
            case NodeClass::ZeroOrFour: return in == 0 || in == 4;
            case NodeClass::OneInFour: return in == 1;
            case NodeClass::ThreeInFour: return in == 3;
        }
        return false;
    };

    const uint64_t limit = uint64_t(1) << g.edges.size();
    std::vector<int> indeg(g.node_class.size());
    for (uint64_t bits = 0; bits < limit; ++bits) {
        std::fill(indeg.begin(), indeg.end(), 0);
        for (size_t e = 0; e < g.edges.size(); ++e) {
            auto [a, b] = g.edges[e];
            // bit set: a -> b.
            ++indeg[static_cast<size_t>((bits >> e) & 1 ? b : a)];
        }
        bool ok = true;
        for (size_t v = 0; v < g.node_class.size() && ok; ++v)
            ok = indegree_ok(g.node_class[v], indeg[v]);
        if (ok) {
            res.decision = Decision::Yes;
            res.orientation.resize(g.edges.size());
            for (size_t e = 0; e < g.edges.size(); ++e)
                res.orientation[e] = (bits >> e) & 1;
            return res;
        }
    }
    res.decision = Decision::No;
    return res;
}

}  // namespace onetris
