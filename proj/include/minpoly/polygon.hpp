#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minpoly/sequences.hpp"

namespace minpoly {

struct Point {
    int64_t x = 0;
    int64_t y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const {
        return x < o.x || (x == o.x && y < o.y);
    }
};

struct InvalidPolygon : std::runtime_error {
    explicit InvalidPolygon(const std::string& msg) : std::runtime_error(msg) {}
};

// Counterclockwise vertex cycle on the integer grid. Edges are axis-parallel,
// strictly alternate horizontal/vertical (so there are no collinear vertices),
// and the boundary is simple. Vertex i carries turn i of the angle sequence.
class GridPolygon {
  public:
    GridPolygon() = default;
    explicit GridPolygon(std::vector<Point> vertices);

    // Walk a turn sequence with the given edge lengths: vertex 0 at origin,
    // edge i heads dirs[i] with length lens[i].
    static GridPolygon from_edge_lengths(const TurnSequence& s, Direction start,
                                         const std::vector<int64_t>& lens);

    const std::vector<Point>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const Point& vertex(int i) const {
        int n = size();
        return verts_[static_cast<size_t>(((i % n) + n) % n)];
    }
    Point edge_vector(int i) const;
    int64_t edge_length(int i) const;
    Direction edge_direction(int i) const;

    bool operator==(const GridPolygon& o) const { return verts_ == o.verts_; }

  private:
    std::vector<Point> verts_;
};

struct Measures {
    int64_t area = 0;
    int64_t perimeter = 0;
    int64_t bbox_w = 0;
    int64_t bbox_h = 0;
};

// Interior grid-cell count (equals the shoelace value for ccw input).
int64_t area(const GridPolygon& p);
int64_t perimeter(const GridPolygon& p);
std::pair<int64_t, int64_t> bbox(const GridPolygon& p);
Measures measures(const GridPolygon& p);

// True iff no two non-adjacent edges of the closed chain intersect and
// adjacent edges meet only at their shared endpoint. Works on raw vertex
// chains, including ones that GridPolygon construction would reject.
bool is_simple(const std::vector<Point>& vertices);

// Turns read off a polygon: sequence_of(p)[i] is the turn at vertex i.
TurnSequence sequence_of(const GridPolygon& p);

GridPolygon translate(const GridPolygon& p, int64_t dx, int64_t dy);
// Vertical mirror (y -> -y), reindexed to preserve ccw orientation and the
// vertex/turn pairing structure of the walk.
GridPolygon mirror_y(const GridPolygon& p);
// Relabel vertices so that old vertex k becomes new vertex 0.
GridPolygon rotate_start(const GridPolygon& p, int k);
// Rotate-relabel p so that sequence_of(result) equals s exactly; throws if
// p does not realize s.
GridPolygon align_to_sequence(const GridPolygon& p, const TurnSequence& s);

// Canonical-form predicates for x-monotone drawings.
// D1: all outer extreme edges lie on the bounding-box border.
// D2: vertical non-extreme edges not incident to an inner extreme edge have length 1.
// D3: horizontal edges that are not outer extreme edges have length 1.
bool satisfies_bbox_canonical(const GridPolygon& p);
// P1: every vertical edge except e_L and e_R has unit length.
// P2: every horizontal edge of the hull with more reflex vertices has unit length.
bool satisfies_perimeter_canonical(const GridPolygon& p);

// Lemma-style transforms. Both preserve the turn at every vertex index and
// never increase the respective objective.
GridPolygon canonicalize_x_bbox(const GridPolygon& p);
GridPolygon canonicalize_x_perimeter(const GridPolygon& p);

// Boundary of a set of unit cells (cell (x,y) = [x,x+1]x[y,y+1]). The set
// must be connected and hole-free with a simple boundary; vertex 0 of the
// result is the lexicographically largest corner (top-right-most).
GridPolygon polygon_from_cells(const std::set<Point>& cells);

// Cells strictly inside the polygon; usable at small scale (test oracle).
std::set<Point> cells_of(const GridPolygon& p);

}  // namespace minpoly
