#include <doctest.h>

#include "minpoly/oracle.hpp"
#include "minpoly/polygon.hpp"
#include "minpoly/sequences.hpp"

using namespace minpoly;

namespace {

GridPolygon unit_square() {
    return GridPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

const char* kFig1 = "LLRRLLRLLRLRLLRLRLLR";

}  // namespace

TEST_CASE("measures of the unit square") {
    auto p = unit_square();
    CHECK(area(p) == 1);
    CHECK(perimeter(p) == 4);
    CHECK(bbox(p) == std::pair<int64_t, int64_t>{1, 1});
}

TEST_CASE("polygon validation rejects bad input") {
    CHECK_THROWS_AS(GridPolygon({{0, 0}, {1, 0}, {1, 1}}), InvalidPolygon);
    // Clockwise square.
    CHECK_THROWS_AS(GridPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InvalidPolygon);
    // Collinear split edge (no alternation).
    CHECK_THROWS_AS(GridPolygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}),
                    InvalidPolygon);
}

TEST_CASE("is_simple") {
    CHECK(is_simple(unit_square().vertices()));
    // Figure-eight: crossing by construction.
    std::vector<Point> eight{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, -1}, {0, -1}};
    CHECK(!is_simple(eight));
}

TEST_CASE("sequence_of") {
    CHECK(sequence_of(unit_square()).str() == "LLLL");
    GridPolygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(sequence_of(l).str() == "LLLRLL");
    CHECK(area(l) == 3);
    CHECK(perimeter(l) == 8);
}

TEST_CASE("area agrees with cell count at small scale") {
    auto s = parse_sequence(kFig1);
    oracle::OracleConfig cfg;
    cfg.size_guard = 20;
    cfg.max_edge_len = 2;
    int checked = 0;
    oracle::enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        CHECK(area(p) == static_cast<int64_t>(cells_of(p).size()));
        return ++checked < 50;
    });
    CHECK(checked > 0);
}

TEST_CASE("perimeter is even for every realization") {
    auto s = make_sequence("LLRLLRLLRLLR");
    oracle::OracleConfig cfg;
    cfg.max_edge_len = 3;
    oracle::enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        CHECK(perimeter(p) % 2 == 0);
        return true;
    });
}

TEST_CASE("mirror and alignment helpers") {
    GridPolygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    auto m = mirror_y(l);
    CHECK(area(m) == area(l));
    auto back = mirror_y(m);
    CHECK(back == l);

    auto s = sequence_of(l);
    auto rotated = rotate_start(l, 2);
    auto aligned = align_to_sequence(rotated, s);
    CHECK(sequence_of(aligned) == s);
}

TEST_CASE("polygon_from_cells traces simple unions") {
    std::set<Point> cells{{0, 0}, {1, 0}, {1, 1}};
    auto p = polygon_from_cells(cells);
    CHECK(area(p) == 3);
    CHECK(sequence_of(p).size() == 6);
    CHECK(p.vertex(0) == Point{2, 2});
    std::set<Point> pinch{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(polygon_from_cells(pinch), InvalidPolygon);
    std::set<Point> ring;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != 1 || y != 1) ring.insert({x, y});
    CHECK_THROWS_AS(polygon_from_cells(ring), InvalidPolygon);
}

TEST_CASE("canonicalize_x_bbox establishes D1-D3 without growing the box") {
    auto s = parse_sequence(kFig1);
    oracle::OracleConfig cfg;
    cfg.size_guard = 20;
    cfg.max_edge_len = 3;
    int seen = 0;
    oracle::enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        auto c = canonicalize_x_bbox(p);
        auto [w0, h0] = bbox(p);
        auto [w1, h1] = bbox(c);
        CHECK(w1 * h1 <= w0 * h0);
        CHECK(satisfies_bbox_canonical(c));
        CHECK(sequence_of(c) == sequence_of(p));
        return ++seen < 200;
    });
    CHECK(seen > 0);
}

TEST_CASE("canonicalize_x_perimeter establishes P1-P2 without growing perimeter") {
    auto s = parse_sequence(kFig1);
    oracle::OracleConfig cfg;
    cfg.size_guard = 20;
    cfg.max_edge_len = 3;
    int seen = 0;
    oracle::enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        auto c = canonicalize_x_perimeter(p);
        CHECK(perimeter(c) <= perimeter(p));
        CHECK(satisfies_perimeter_canonical(c));
        CHECK(sequence_of(c) == sequence_of(p));
        return ++seen < 200;
    });
    CHECK(seen > 0);
}

TEST_CASE("canonicalizers are fixed points on canonical input") {
    auto s = parse_sequence(kFig1);
    oracle::OracleConfig cfg;
    cfg.size_guard = 20;
    cfg.max_edge_len = 3;
    int seen = 0;
    oracle::enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        auto c = canonicalize_x_bbox(p);
        CHECK(canonicalize_x_bbox(c) == c);
        auto q = canonicalize_x_perimeter(p);
        CHECK(perimeter(canonicalize_x_perimeter(q)) == perimeter(q));
        return ++seen < 60;
    });
    CHECK(seen > 0);
}
