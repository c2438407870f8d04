#include <doctest.h>

#include <array>

#include "minpoly/oracle.hpp"
#include "minpoly/x_solver.hpp"
#include "minpoly/xy_solver.hpp"

using namespace minpoly;

namespace {

const char* kFig1 = "LLRRLLRLLRLRLLRLRLLR";

bool is_x_class(const TurnSequence& s) {
    return classify(s).tag != SequenceClassTag::General;
}

}  // namespace

TEST_CASE("Fig. 1 sequence: area 10, perimeter 20, bbox area 20") {
    auto s = parse_sequence(kFig1);
    auto a = x_min_area(s);
    CHECK(a.value == 10);
    CHECK(area(a.witness) == 10);
    CHECK(sequence_of(a.witness) == s);
    CHECK(is_simple(a.witness.vertices()));

    auto p = x_min_perimeter(s);
    CHECK(p.value == 20);
    CHECK(perimeter(p.witness) == 20);
    CHECK(sequence_of(p.witness) == s);

    auto b = x_min_bbox(s);
    CHECK(b.w * b.h == 20);
    auto [bw, bh] = bbox(b.witness);
    CHECK(bw == b.w);
    CHECK(bh == b.h);
    CHECK(sequence_of(b.witness) == s);
}

TEST_CASE("square through the x pipeline") {
    auto s = make_sequence("LLLL");
    CHECK(x_min_area(s).value == 1);
    CHECK(x_min_perimeter(s).value == 4);
    auto b = x_min_bbox(s);
    CHECK(b.w * b.h == 1);
}

TEST_CASE("x solvers equal the oracle on every x-monotone sequence, n <= 10") {
    for (int n = 4; n <= 10; n += 2) {
        for (const auto& s : oracle::all_sequences(n, true)) {
            if (!is_x_class(s)) continue;
            INFO("sequence ", s.str());
            oracle::OracleConfig cfg;
            cfg.objective = oracle::Objective::Area;
            auto oa = oracle::oracle_min(s, cfg);
            auto xa = x_min_area(s);
            CHECK(xa.value == oa.value);
            CHECK(area(xa.witness) == xa.value);
            CHECK(sequence_of(xa.witness) == s);

            cfg.objective = oracle::Objective::Perimeter;
            auto op = oracle::oracle_min(s, cfg);
            auto xp = x_min_perimeter(s);
            CHECK(xp.value == op.value);
            CHECK(perimeter(xp.witness) == xp.value);
            CHECK(sequence_of(xp.witness) == s);

            cfg.objective = oracle::Objective::BBox;
            auto ob = oracle::oracle_min(s, cfg);
            auto xb = x_min_bbox(s);
            CHECK(xb.w * xb.h == ob.value);
            auto [bw, bh] = bbox(xb.witness);
            CHECK(bw * bh == xb.w * xb.h);
            CHECK(sequence_of(xb.witness) == s);
        }
    }
}

TEST_CASE("witnesses are canonical") {
    auto s = parse_sequence(kFig1);
    auto b = x_min_bbox(s);
    CHECK(satisfies_bbox_canonical(b.witness));
    auto p = x_min_perimeter(s);
    CHECK(satisfies_perimeter_canonical(p.witness));
}

TEST_CASE("xy closed forms agree with the x DPs on xy-monotone inputs") {
    for (int r1 = 0; r1 <= 2; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2)
            for (int r3 = 0; r3 <= 2; ++r3)
                for (int r4 = 0; r4 <= 2; ++r4) {
                    StairDecomposition d;
                    d.r1 = r1;
                    d.r2 = r2;
                    d.r3 = r3;
                    d.r4 = r4;
                    auto s = expand_stairs(d);
                    INFO("quad (", r1, ",", r2, ",", r3, ",", r4, ")");
                    CHECK(x_min_area(s).value == xy_min_area(d).value);
                    CHECK(x_min_perimeter(s).value == xy_min_perimeter(d).value);
                    auto xb = x_min_bbox(s);
                    auto yb = xy_min_bbox(d);
                    CHECK(xb.w * xb.h == yb.w * yb.h);
                }
}

TEST_CASE("perimeter identity 3r(T)+r(B)+2+|eL|+|eR| on witnesses") {
    for (int n = 8; n <= 12; n += 2) {
        int count = 0;
        for (const auto& s : oracle::all_sequences(n, true)) {
            if (!is_x_class(s)) continue;
            if (++count > 40) break;
            auto hd = decompose_x(s);
            auto xp = x_min_perimeter(s);
            const auto& w = xp.witness;
            int64_t xmin = INT64_MAX, xmax = INT64_MIN;
            for (const auto& v : w.vertices()) {
                xmin = std::min(xmin, v.x);
                xmax = std::max(xmax, v.x);
            }
            int64_t el = 0, er = 0;
            for (int i = 0; i < w.size(); ++i) {
                Point a = w.vertex(i), b = w.vertex(i + 1);
                if (a.x == b.x && a.x == xmin) el = std::llabs(a.y - b.y);
                if (a.x == b.x && a.x == xmax) er = std::llabs(a.y - b.y);
            }
            INFO("sequence ", s.str());
            CHECK(xp.value == 3 * hd.rT + hd.rB + 2 + el + er);
        }
    }
}

TEST_CASE("monotone consistency between objectives") {
    auto s = parse_sequence(kFig1);
    auto a = x_min_area(s);
    auto b = x_min_bbox(s);
    auto [aw, ah] = bbox(a.witness);
    CHECK(aw * ah >= b.w * b.h);
    CHECK(area(b.witness) >= a.value);
}

TEST_CASE("split path agrees with the area DP past the canonical threshold") {
    std::vector<StairDecomposition> quads;
    for (auto arr : std::initializer_list<std::array<int, 4>>{
             {5, 4, 5, 4}, {8, 3, 4, 2}, {1, 1, 14, 1}, {2, 13, 2, 1},
             {4, 4, 4, 5}, {17, 1, 1, 1}, {0, 9, 4, 4}, {5, 0, 7, 5},
             {6, 6, 0, 5}, {9, 5, 3, 0}, {3, 3, 3, 20}}) {
        StairDecomposition q;
        q.r1 = arr[0];
        q.r2 = arr[1];
        q.r3 = arr[2];
        q.r4 = arr[3];
        quads.push_back(q);
    }
    for (const auto& d : quads) {
        REQUIRE(d.total() * 2 + 4 > detail::kExhaustiveLimit);
        auto split = detail::xy_min_area_split(d);
        auto dp = x_min_area(expand_stairs(d));
        INFO("quad (", d.r1, ",", d.r2, ",", d.r3, ",", d.r4, ")");
        CHECK(split.value == dp.value);
        CHECK(area(split.witness) == split.value);
    }
}

TEST_CASE("xy dispatch equals the area DP on mid-size inputs") {
    std::vector<StairDecomposition> quads;
    for (auto arr : std::initializer_list<std::array<int, 4>>{
             {3, 2, 3, 2}, {5, 1, 1, 1}, {2, 2, 2, 2}, {0, 4, 0, 3},
             {4, 0, 0, 3}, {1, 6, 2, 1}}) {
        StairDecomposition q;
        q.r1 = arr[0];
        q.r2 = arr[1];
        q.r3 = arr[2];
        q.r4 = arr[3];
        quads.push_back(q);
    }
    for (const auto& d : quads) {
        auto xy = xy_min_area(d);
        auto dp = x_min_area(expand_stairs(d));
        INFO("quad (", d.r1, ",", d.r2, ",", d.r3, ",", d.r4, ")");
        CHECK(xy.value == dp.value);
    }
}
