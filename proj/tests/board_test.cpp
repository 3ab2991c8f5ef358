#include <doctest.h>

#include "onetris/board.hpp"
#include "onetris/piece.hpp"

using namespace onetris;

TEST_CASE("parse and render round-trip") {
    const std::string text = "##\n..\n";
    Board b = parse_board(text);
    CHECK(b.width() == 2);
    CHECK(b.height() == 2);
    CHECK(b.filled({0, 0}));
    CHECK(b.filled({0, 1}));
    CHECK(!b.filled({1, 0}));
    CHECK(render_board(b) == text);
    CHECK(parse_board(render_board(b)) == b);
}

TEST_CASE("parse rejects ragged rows and foreign characters") {
    CHECK_THROWS(parse_board("#.\n#.#\n"));
    CHECK_THROWS(parse_board("#x\n..\n"));
    CHECK_THROWS(parse_board(""));
}

TEST_CASE("apply_placement and its inverse") {
    Board b(4, 4);
    Placement p{PieceType::make(PieceType::Tag::I), {{3, 0}, {3, 1}, {3, 2}, {3, 3}}};
    Board after = apply_placement(b, p);
    for (int c = 0; c < 4; ++c) CHECK(after.filled({3, c}));
    CHECK(!b.filled({3, 0}));  // input board untouched
    CHECK(remove_placement(after, p) == b);

    // Overlap names the offending cell.
    CHECK_THROWS_WITH_AS(apply_placement(after, p), "placement conflict at (3,0): overlap",
                         std::invalid_argument);
}

TEST_CASE("clear_full_rows basics") {
    // Bottom row full, one block above it.
    Board b = parse_board(".....\n"
                          "#....\n"
                          "#####\n");
    auto [after, rows] = clear_full_rows(b);
    CHECK(rows == std::vector<int>{2});
    CHECK(after.filled({2, 0}));
    CHECK(after.count_filled() == 1);

    // No full rows: identity.
    auto [same, none] = clear_full_rows(after);
    CHECK(none.empty());
    CHECK(same == after);
}

TEST_CASE("two adjacent full rows drop a block by two") {
    Board b = parse_board("...\n"
                          "#..\n"
                          "###\n"
                          "###\n");
    auto [after, rows] = clear_full_rows(b);
    CHECK(rows == std::vector<int>{2, 3});
    CHECK(after.count_filled() == 1);
    CHECK(after.filled({3, 0}));
}

TEST_CASE("clear_full_rows is idempotent and conserves cells") {
    Board b = parse_board("..#.\n"
                          "####\n"
                          "#.##\n"
                          "####\n");
    int before = b.count_filled();
    auto [once, rows] = clear_full_rows(b);
    CHECK(once.count_filled() == before - b.width() * static_cast<int>(rows.size()));
    auto [twice, rows2] = clear_full_rows(once);
    CHECK(rows2.empty());
    CHECK(twice == once);
}

TEST_CASE("piece footprints") {
    // I at orientation 0 occupies the second row of its 4x4 box.
    PieceState i{PieceType::make(PieceType::Tag::I), Rot::R0, {0, 0}};
    CHECK(cells_of(i) == std::vector<Cell>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});

    // O admits only the default orientation and never rotates.
    PieceType o = PieceType::make(PieceType::Tag::O);
    CHECK(box_cells(o, Rot::R0) == std::vector<Cell>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});
    CHECK_THROWS(box_cells(o, Rot::RR));

    // Cell counts by family.
    for (auto tag : {PieceType::Tag::I, PieceType::Tag::J, PieceType::Tag::L, PieceType::Tag::O,
                     PieceType::Tag::S, PieceType::Tag::T, PieceType::Tag::Z})
        CHECK(box_cells(PieceType::make(tag), Rot::R0).size() == 4);
    CHECK(box_cells(PieceType::make(PieceType::Tag::Domino), Rot::R0).size() == 2);
    CHECK(box_cells(PieceType::bar(7), Rot::RR).size() == 7);
}

TEST_CASE("orientation 2 is the 180-degree rotation of orientation 0") {
    for (auto tag : {PieceType::Tag::I, PieceType::Tag::J, PieceType::Tag::L, PieceType::Tag::S,
                     PieceType::Tag::T, PieceType::Tag::Z}) {
        PieceType t = PieceType::make(tag);
        const int n = tag == PieceType::Tag::I ? 4 : 3;
        std::vector<Cell> flipped;
        for (Cell c : box_cells(t, Rot::R0)) flipped.push_back({n - 1 - c.row, n - 1 - c.col});
        std::sort(flipped.begin(), flipped.end());
        CHECK(flipped == box_cells(t, Rot::R2));
    }
}

TEST_CASE("rotating a footprint clockwise in its box yields the next orientation") {
    for (auto tag : {PieceType::Tag::I, PieceType::Tag::J, PieceType::Tag::L, PieceType::Tag::S,
                     PieceType::Tag::T, PieceType::Tag::Z}) {
        PieceType t = PieceType::make(tag);
        const int n = tag == PieceType::Tag::I ? 4 : 3;
        for (int r = 0; r < 4; ++r) {
            std::vector<Cell> rotated;
            for (Cell c : box_cells(t, static_cast<Rot>(r)))
                rotated.push_back({c.col, n - 1 - c.row});
            std::sort(rotated.begin(), rotated.end());
            CHECK(rotated == box_cells(t, rotate_cw(static_cast<Rot>(r))));
        }
    }
}

TEST_CASE("piece names round-trip") {
    for (const char* name : {"I", "J", "L", "O", "S", "T", "Z", "D", "B3", "B11"})
        CHECK(piece_name(piece_from_name(name)) == name);
}
