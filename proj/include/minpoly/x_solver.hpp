#pragma once

#include <cstdint>

#include "minpoly/polygon.hpp"
#include "minpoly/sequences.hpp"

namespace minpoly {

struct XResult {
    int64_t value = 0;
    GridPolygon witness;
};

struct XBBoxResult {
    int64_t w = 0;
    int64_t h = 0;
    GridPolygon witness;
};

// Minimum bounding-box area over all realizations of an x-monotone sequence;
// the witness is a canonical drawing (outer extreme edges on the border, all
// other horizontals and non-flanking verticals unit).
XBBoxResult x_min_bbox(const TurnSequence& s);

// Minimum area, O(n^4) dynamic program over column-sharing edge pairs.
XResult x_min_area(const TurnSequence& s);

// Minimum perimeter, O(n^2) dynamic program over canonical unit-edge chains.
XResult x_min_perimeter(const TurnSequence& s);

}  // namespace minpoly
