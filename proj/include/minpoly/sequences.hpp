#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minpoly {

enum class Turn : uint8_t { L, R };

// Grid heading while walking the boundary counterclockwise.
enum class Direction : uint8_t { East, North, West, South };

inline Direction rotate(Direction d, Turn t) {
    int v = static_cast<int>(d);
    return static_cast<Direction>(t == Turn::L ? (v + 1) & 3 : (v + 3) & 3);
}

inline bool is_horizontal(Direction d) {
    return d == Direction::East || d == Direction::West;
}

inline Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) & 3);
}

// Cyclic word over {L, R}; the problem input. Vertex i of a realization
// carries turn i, and edge i runs from vertex i to vertex i+1.
struct TurnSequence {
    std::vector<Turn> turns;

    int size() const { return static_cast<int>(turns.size()); }
    Turn operator[](int i) const { return turns[static_cast<size_t>(i)]; }
    Turn at_cyclic(int i) const {
        int n = size();
        return turns[static_cast<size_t>(((i % n) + n) % n)];
    }
    int count(Turn t) const {
        int c = 0;
        for (Turn x : turns) c += (x == t);
        return c;
    }
    int reflex_count() const { return count(Turn::R); }

    bool operator==(const TurnSequence& o) const { return turns == o.turns; }

    std::string str() const {
        std::string s;
        s.reserve(turns.size());
        for (Turn t : turns) s.push_back(t == Turn::L ? 'L' : 'R');
        return s;
    }
};

TurnSequence make_sequence(std::string_view word);

// s rotated so that position k comes first.
TurnSequence rotate_sequence(const TurnSequence& s, int k);

// Mirror image (vertical flip of any realization): reversed word with L and R
// swapped. flip_index maps vertex indices of the original onto the mirror.
TurnSequence mirror_sequence(const TurnSequence& s);

struct ParseError : std::runtime_error {
    enum class Kind { IllegalCharacter, EmptySequence };
    Kind kind;
    int position;  // byte offset for IllegalCharacter, -1 otherwise
    ParseError(Kind k, int pos, const std::string& msg)
        : std::runtime_error(msg), kind(k), position(pos) {}
};

// Text format: 'L'/'R', whitespace ignored, '#' starts a comment to end of line.
TurnSequence parse_sequence(const std::string& text);

struct ValidationReport {
    enum class Kind { Ok, BalanceViolation, TooShort };
    Kind kind = Kind::Ok;
    int lefts = 0;
    int rights = 0;
    bool ok() const { return kind == Kind::Ok; }
    std::string message() const;
};

// Valid iff n >= 4 and #L - #R == 4. Every valid sequence is realizable.
ValidationReport validate(const TurnSequence& s);

// Heading of each edge: heading[0] = start, heading[i] = rotate(heading[i-1], s[i]).
std::vector<Direction> directions(const TurnSequence& s, Direction start);

enum class SequenceClassTag { XYMonotone, XMonotone, General };

struct SequenceClass {
    SequenceClassTag tag = SequenceClassTag::General;
    // Normalized start: first LL pair for xy-monotone input, first RR pair of
    // the lower hull for (strictly) x-monotone input, 0 otherwise.
    int rotation_offset = 0;
};

SequenceClass classify(const TurnSequence& s);

// Reflex counts of the four stairs of an xy-monotone polygon, following the
// (r1,r2,r3,r4) = (TR, TL, BL, BR) convention. The rotation offset points at
// the L before the top extreme edge.
struct StairDecomposition {
    int r1 = 0;  // TR
    int r2 = 0;  // TL
    int r3 = 0;  // BL
    int r4 = 0;  // BR
    int rotation_offset = 0;

    int total() const { return r1 + r2 + r3 + r4; }
    int rT() const { return r1 + r2; }
    int rB() const { return r3 + r4; }
    int rL() const { return r2 + r3; }
    int rR() const { return r4 + r1; }
};

struct NotXYMonotone : std::runtime_error {
    NotXYMonotone() : std::runtime_error("sequence is not xy-monotone") {}
};
struct NotXMonotone : std::runtime_error {
    NotXMonotone() : std::runtime_error("sequence is not x-monotone") {}
};

StairDecomposition decompose_xy(const TurnSequence& s);

// Re-expand a stair decomposition into its normalized sequence [L(LR)^k]^4
// with stars (TL, BL, BR, TR) = (r2, r3, r4, r1).
TurnSequence expand_stairs(const StairDecomposition& d);

enum class EdgeTag : uint8_t { Plain, Outer, Inner };

// One horizontal edge of a hull. `seq_index` is the edge index in the input
// sequence (edge i joins vertices i and i+1). `step_left` tells how the hull
// continues one edge further left: +1 if that next horizontal edge lies one
// unit-step higher, -1 if lower, 0 for the leftmost edge of the hull.
struct HullEdge {
    int seq_index = 0;
    EdgeTag tag = EdgeTag::Plain;
    int step_left = 0;
};

// Horizontal-edge structure of an x-monotone sequence. Edges are listed
// right-to-left per hull (t_1..t_{r(T)+1}, b_1..b_{r(B)+1} ordering). The
// `flipped` flag records that the two hulls were swapped (a vertical mirror
// of the drawing) to establish r(T) >= r(B).
struct HullDecomposition {
    std::vector<HullEdge> upper_edges;  // right-to-left
    std::vector<HullEdge> lower_edges;  // right-to-left
    int rT = 0;
    int rB = 0;
    int rotation_offset = 0;
    bool flipped = false;
    // Heading that realizes this orientation for the *original* sequence
    // walked from index 0 (before any flip).
    Direction start_heading = Direction::East;

    int inner_count() const {
        int c = 0;
        for (const auto& e : upper_edges) c += (e.tag == EdgeTag::Inner);
        for (const auto& e : lower_edges) c += (e.tag == EdgeTag::Inner);
        return c;
    }
};

HullDecomposition decompose_x(const TurnSequence& s);

}  // namespace minpoly
