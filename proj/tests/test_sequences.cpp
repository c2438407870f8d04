#include <doctest.h>

#include "minpoly/polygon.hpp"
#include "minpoly/sequences.hpp"

using namespace minpoly;

namespace {
const char* kFig1 = "LLRRLLRLLRLRLLRLRLLR";
}

TEST_CASE("parse_sequence basics") {
    CHECK(parse_sequence("LLLL").str() == "LLLL");
    auto fig1 = parse_sequence(kFig1);
    CHECK(fig1.size() == 20);
    CHECK(fig1.count(Turn::L) == 12);
    CHECK(fig1.count(Turn::R) == 8);
    CHECK(parse_sequence("L L\nRR # comment LXX\nLL").str() == "LLRRLL");
    CHECK_THROWS_AS(parse_sequence("# only\n  \t"), ParseError);
    try {
        parse_sequence("LLXR");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::IllegalCharacter);
        CHECK(e.position == 2);
    }
}

TEST_CASE("validate") {
    CHECK(validate(make_sequence("LLLL")).ok());
    auto bad = validate(make_sequence("LLRR"));
    CHECK(bad.kind == ValidationReport::Kind::BalanceViolation);
    CHECK(bad.lefts == 2);
    CHECK(bad.rights == 2);
    CHECK(validate(make_sequence("LL")).kind == ValidationReport::Kind::TooShort);
    auto fig1 = parse_sequence(kFig1);
    CHECK(validate(fig1).ok());
    CHECK(fig1.size() == 2 * fig1.reflex_count() + 4);
}

TEST_CASE("directions: unit square and closure") {
    auto d = directions(make_sequence("LLLL"), Direction::East);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == Direction::East);
    CHECK(d[1] == Direction::North);
    CHECK(d[2] == Direction::West);
    CHECK(d[3] == Direction::South);
}

TEST_CASE("classify") {
    auto square = classify(make_sequence("LLLL"));
    CHECK(square.tag == SequenceClassTag::XYMonotone);
    CHECK(square.rotation_offset == 0);

    auto fig1 = classify(parse_sequence(kFig1));
    CHECK(fig1.tag == SequenceClassTag::XMonotone);

    // A sequence whose east-going edges are non-contiguous under every
    // heading: a plus-shape-like word.
    // Spiral word: east and north edges are both non-contiguous.
    auto plus = classify(make_sequence("LLLLLLLRRRRL"));
    CHECK(plus.tag == SequenceClassTag::General);
}

TEST_CASE("classify is rotation invariant") {
    auto fig1 = parse_sequence(kFig1);
    auto base = classify(fig1).tag;
    for (int k = 0; k < fig1.size(); ++k)
        CHECK(classify(rotate_sequence(fig1, k)).tag == base);
}

TEST_CASE("decompose_xy") {
    auto sq = decompose_xy(make_sequence("LLLL"));
    CHECK(sq.r1 == 0);
    CHECK(sq.r2 == 0);
    CHECK(sq.r3 == 0);
    CHECK(sq.r4 == 0);

    // Stars (TL, BL, BR, TR) = (1, 0, 1, 0): two opposite nonempty stairs.
    auto two = decompose_xy(make_sequence("LLRLLLRL"));
    CHECK(two.r2 == 1);  // TL
    CHECK(two.r4 == 1);  // BR
    CHECK(two.r1 == 0);
    CHECK(two.r3 == 0);

    auto fig1 = parse_sequence(kFig1);
    CHECK_THROWS_AS(decompose_xy(fig1), NotXYMonotone);
}

TEST_CASE("decompose_xy round-trips via expand_stairs") {
    for (const char* w : {"LLLL", "LLRLLLRL", "LLRLRLLRLLLR", "LLRLRLRLLLRL"}) {
        auto s = make_sequence(w);
        auto d = decompose_xy(s);
        auto e = expand_stairs(d);
        // Same cyclic word.
        bool any = false;
        for (int k = 0; k < s.size() && !any; ++k) any = rotate_sequence(s, k) == e;
        CHECK(any);
        CHECK(d.total() == (s.size() - 4) / 2);
    }
}

TEST_CASE("decompose_x on Fig. 1 sequence") {
    auto fig1 = parse_sequence(kFig1);
    auto h = decompose_x(fig1);
    CHECK(h.rT + h.rB == 8);
    CHECK(h.rT >= h.rB);
    CHECK(static_cast<int>(h.upper_edges.size()) == h.rT + 1);
    CHECK(static_cast<int>(h.lower_edges.size()) == h.rB + 1);
    int inners = h.inner_count();
    CHECK(inners > 0);
}

TEST_CASE("decompose_x on xy-monotone input has no inner extreme edges") {
    auto h = decompose_x(make_sequence("LLRLLLRL"));
    CHECK(h.inner_count() == 0);
    auto sq = decompose_x(make_sequence("LLLL"));
    CHECK(sq.upper_edges.size() == 1);
    CHECK(sq.lower_edges.size() == 1);
}
