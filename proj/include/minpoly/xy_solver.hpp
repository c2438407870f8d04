#pragma once

#include <cstdint>
#include <tuple>

#include "minpoly/polygon.hpp"
#include "minpoly/sequences.hpp"

namespace minpoly {

// Minimum-area data for two opposite stairs with reflex counts a <= b.
struct TwoStairSolution {
    int a = 0;  // r(TR) after rotation
    int b = 0;  // r(BL) after rotation, b >= a
    int64_t q = 0;    // floor(b / (a+1))
    int64_t rem = 0;  // b mod (a+1)
    int64_t min_area = 0;
};

TwoStairSolution two_stair_min_area(int a, int b);

enum class TwoStairPrefer { MinLeftEdge, MinTopEdge };

// Canonical band drawing: the longer stair takes unit steps, the shorter one
// steps of size q and q+1. The preference picks which variant of the step
// order to emit (they differ in the top extreme edge's length).
GridPolygon two_stair_construct(const TwoStairSolution& sol, TwoStairPrefer prefer);

struct XYBBoxResult {
    int64_t w = 0;
    int64_t h = 0;
    GridPolygon witness;
};

XYBBoxResult xy_min_bbox(const StairDecomposition& d);

struct XYResult {
    int64_t value = 0;
    GridPolygon witness;
};

XYResult xy_min_area(const StairDecomposition& d);
XYResult xy_min_perimeter(const StairDecomposition& d);

namespace detail {
// Four-stair minimum area via the canonical-split enumeration, regardless of
// size; exposed for cross-validation against the exhaustive path.
XYResult xy_min_area_split(const StairDecomposition& d);
// Threshold below which xy_min_area uses exhaustive search for 4 stairs.
inline constexpr int kExhaustiveLimit = 36;
}  // namespace detail

}  // namespace minpoly
