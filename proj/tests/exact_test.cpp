#include <doctest.h>

#include <random>

#include "onetris/exact.hpp"
#include "onetris/tiling.hpp"

using namespace onetris;

namespace {
PieceType P(PieceType::Tag t) { return PieceType::make(t); }

Region rect(int rows, int cols) {
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cells.push_back({r, c});
    return Region::of(cells);
}
}  // namespace

TEST_CASE("tiling enumeration on small rectangles") {
    CHECK(enumerate_tilings(rect(2, 2), P(PieceType::Tag::O)).tilings.size() == 1);
    CHECK(enumerate_tilings(rect(2, 4), P(PieceType::Tag::O)).tilings.size() == 1);
    CHECK(enumerate_tilings(rect(2, 4), P(PieceType::Tag::J)).tilings.size() == 1);
    CHECK(enumerate_tilings(rect(2, 4), P(PieceType::Tag::L)).tilings.size() == 1);
    CHECK(enumerate_tilings(rect(4, 4), P(PieceType::Tag::I)).tilings.size() == 2);
    CHECK(enumerate_tilings(rect(1, 8), P(PieceType::Tag::I)).tilings.size() == 1);
    CHECK(enumerate_tilings(rect(2, 4), P(PieceType::Tag::S)).tilings.empty());
    CHECK(enumerate_tilings(rect(2, 3), P(PieceType::Tag::Domino)).tilings.size() == 3);

    // Size mismatch: empty list plus a diagnostic.
    TilingEnumeration bad = enumerate_tilings(rect(1, 3), P(PieceType::Tag::O));
    CHECK(bad.tilings.empty());
    CHECK(!bad.diagnostic.empty());
}

TEST_CASE("tiling enumeration is mirror symmetric") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Cell> cells;
        std::bernoulli_distribution keep(0.7);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 5; ++c)
                if (keep(rng)) cells.push_back({r, c});
        Region reg = Region::of(cells);
        std::vector<Cell> mirrored;
        for (const Cell& c : reg.cells) mirrored.push_back({c.row, 4 - c.col});
        Region mreg = Region::of(mirrored);

        for (auto [a, b] : {std::pair{PieceType::Tag::J, PieceType::Tag::L},
                            std::pair{PieceType::Tag::S, PieceType::Tag::Z},
                            std::pair{PieceType::Tag::T, PieceType::Tag::T}}) {
            CHECK(enumerate_tilings(reg, P(a)).tilings.size() ==
                  enumerate_tilings(mreg, P(b)).tilings.size());
        }
    }
}

TEST_CASE("tilings exactly cover their region") {
    Region reg = rect(4, 4);
    for (const Tiling& t : enumerate_tilings(reg, P(PieceType::Tag::T)).tilings) {
        std::vector<Cell> covered;
        for (const Placement& p : t) covered.insert(covered.end(), p.cells.begin(), p.cells.end());
        std::sort(covered.begin(), covered.end());
        CHECK(covered == reg.cells);
    }
}

TEST_CASE("solve_clearing basics") {
    // 4-wide board, one empty bottom row, one I piece.
    Board b = parse_board("....\n....\n....\n....\n");
    (void)b;
    // One I piece clears an empty 4x2 board (drop flat, the row clears, and
    // the rest shifts into nothing).
    SolveResult r0 = solve_clearing(Board(4, 2), {P(PieceType::Tag::I)}, RotationModel::Srs);
    CHECK(r0.decision == Decision::Yes);

    // Width 5: four filled cells can never make up whole rows.
    SolveResult r1 = solve_clearing(Board(5, 2), {P(PieceType::Tag::I)}, RotationModel::Srs);
    CHECK(r1.decision == Decision::No);

    Board one_row(4, 1);
    SolveResult r2 = solve_clearing(one_row, {P(PieceType::Tag::I)}, RotationModel::Srs);
    CHECK(r2.decision == Decision::Yes);
    REQUIRE(r2.witness.has_value());
    ReplayResult rr = replay(one_row, *r2.witness, {P(PieceType::Tag::I)});
    REQUIRE(rr.ok());
    CHECK(rr.board.count_filled() == 0);

    // Four O pieces fill a 4x4 board (two full row pairs clear along the way).
    std::vector<PieceType> os(4, P(PieceType::Tag::O));
    SolveResult r3 = solve_clearing(Board(4, 4), os, RotationModel::Srs);
    CHECK(r3.decision == Decision::Yes);
    REQUIRE(r3.witness.has_value());
    ReplayResult rr3 = replay(Board(4, 4), *r3.witness, os);
    REQUIRE(rr3.ok());
    CHECK(rr3.board.count_filled() == 0);

    // Count argument: |filled| + 4*pieces not divisible by width.
    Board odd = set_cells(Board(4, 4), {{3, 0}});
    CHECK(solve_clearing(odd, {P(PieceType::Tag::O)}, RotationModel::Srs).decision ==
          Decision::No);
}

TEST_CASE("solve_survival basics") {
    // Empty tall board, short sequence.
    std::vector<PieceType> seq(3, P(PieceType::Tag::T));
    CHECK(solve_survival(Board(6, 10), seq, RotationModel::Srs).decision == Decision::Yes);

    // Only 3 empty cells and one tetromino: counting says no.
    Board tight(2, 2);
    Board almost = set_cells(tight, {{0, 0}});
    CHECK(solve_survival(almost, {P(PieceType::Tag::O)}, RotationModel::Srs).decision ==
          Decision::No);
}

TEST_CASE("clearing implies survival and memoization is sound") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        Board b(4, 4);
        std::vector<Cell> cells;
        std::bernoulli_distribution fill(0.3);
        for (int r = 2; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (fill(rng)) cells.push_back({r, c});
        b = set_cells(b, cells);
        std::vector<PieceType> seq(2, P(PieceType::Tag::Domino));

        SolveResult clear = solve_clearing(b, seq, RotationModel::Falling);
        SolveResult surv = solve_survival(b, seq, RotationModel::Falling);
        if (clear.decision == Decision::Yes) CHECK(surv.decision == Decision::Yes);

        SolveOptions nomemo;
        nomemo.memoize = false;
        CHECK(solve_clearing(b, seq, RotationModel::Falling, nomemo).decision == clear.decision);
        CHECK(solve_survival(b, seq, RotationModel::Falling, nomemo).decision == surv.decision);
    }
}

TEST_CASE("unbounded clearing search") {
    // A single hole pair under the bottom row cannot be fixed; dominoes can
    // clear a 2x2 board trivially.
    UnboundedClearing easy =
        solve_clearing_unbounded(Board(2, 2), P(PieceType::Tag::Domino), RotationModel::Falling);
    CHECK(easy.decision == Decision::Yes);
    REQUIRE(easy.witness.has_value());

    // Width 4: pieces add 2 cells and clears remove 4, so an odd number of
    // filled cells is a parity invariant and the board can never empty.
    Board odd_parity = set_cells(Board(4, 3), {{2, 0}});
    UnboundedClearing hard = solve_clearing_unbounded(odd_parity, P(PieceType::Tag::Domino),
                                                      RotationModel::Falling);
    CHECK(hard.decision == Decision::No);
}

TEST_CASE("first clearable rows") {
    // Bottom row needs one domino; filling it is the only possible first clear.
    Board b = parse_board("....\n"
                          "....\n"
                          "##..\n");
    FirstClearable fc = first_clearable_rows(b, P(PieceType::Tag::Domino),
                                             RotationModel::Falling);
    CHECK(fc.rows.count(2) == 1);
    for (auto& [row, script] : fc.witnesses) {
        Board cur = b;
        std::vector<PieceType> kinds(script.size(), P(PieceType::Tag::Domino));
        ReplayResult rr = replay(cur, script, kinds);
        REQUIRE(rr.ok());
    }
}

TEST_CASE("max_survivable counts dominoes") {
    // 2x3 board: three vertical dominoes fill it; the full board clears, so
    // play continues forever. The cap bounds the answer.
    MaxSurvivable ms = max_survivable(Board(2, 3), P(PieceType::Tag::Domino),
                                      RotationModel::Falling, 8);
    CHECK(ms.count == 8);
    CHECK(ms.capped);

    // A checkerboard with no adjacent empty pair: no domino ever locks.
    Board cramped = parse_board("#.\n.#\n");
    MaxSurvivable none = max_survivable(cramped, P(PieceType::Tag::Domino),
                                        RotationModel::Falling, 5);
    CHECK(none.count == 0);
}

TEST_CASE("1-in-3SAT oracle") {
    // phi = (x or y or not z) and (x or z or not w)
    OneInThreeSat f;
    f.num_vars = 4;
    f.clauses = {{1, 2, -3}, {1, 3, -4}};
    SatResult res = solve_1in3sat(f);
    REQUIRE(res.decision == Decision::Yes);
    for (const auto& cl : f.clauses) {
        int trues = 0;
        for (int lit : cl) {
            bool v = res.assignment[static_cast<size_t>(std::abs(lit))];
            trues += (lit > 0) == v;
        }
        CHECK(trues == 1);
    }

    // (x or x or x): no assignment makes exactly one of the three true.
    OneInThreeSat same;
    same.num_vars = 1;
    same.clauses = {{1, 1, 1}};
    CHECK(solve_1in3sat(same).decision == Decision::No);

    OneInThreeSat empty;
    CHECK(solve_1in3sat(empty).decision == Decision::Yes);

    // Text form round trip.
    OneInThreeSat parsed = parse_sat(render_sat(f));
    CHECK(parsed.clauses == f.clauses);
    CHECK(parsed.num_vars == 4);
}

TEST_CASE("graph orientation oracle") {
    // Two {0,4} nodes joined by four parallel edges: orient all four one way.
    OrientationInstance g;
    g.node_class = {NodeClass::ZeroOrFour, NodeClass::ZeroOrFour};
    g.edges = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    OrientationResult res = solve_graph_orientation(g);
    REQUIRE(res.decision == Decision::Yes);
    bool all_same = true;
    for (bool o : res.orientation) all_same &= o == res.orientation[0];
    CHECK(all_same);

    // Degree precondition: a 1-in-4 node of degree 3 is an invalid instance.
    OrientationInstance bad;
    bad.node_class = {NodeClass::OneInFour, NodeClass::ZeroOrFour};
    bad.edges = {{0, 1}, {0, 1}, {0, 1}};
    OrientationResult r2 = solve_graph_orientation(bad);
    CHECK(!r2.error.empty());

    // Two ClauseIn1 nodes with a triple edge: each would need exactly one
    // incoming, but three edges split 3 = 1 + 2. Unsatisfiable.
    OrientationInstance odd;
    odd.node_class = {NodeClass::ClauseIn1, NodeClass::ClauseIn1};
    odd.edges = {{0, 1}, {0, 1}, {0, 1}};
    CHECK(solve_graph_orientation(odd).decision == Decision::No);
}
