#include "minpoly/sequences.hpp"

#include <algorithm>

namespace minpoly {

TurnSequence make_sequence(std::string_view word) {
    TurnSequence s;
    s.turns.reserve(word.size());
    for (char c : word) {
        if (c == 'L')
            s.turns.push_back(Turn::L);
        else if (c == 'R')
            s.turns.push_back(Turn::R);
        else
            throw ParseError(ParseError::Kind::IllegalCharacter, 0,
                             "make_sequence: only L/R allowed");
    }
    return s;
}

TurnSequence rotate_sequence(const TurnSequence& s, int k) {
    int n = s.size();
    TurnSequence out;
    out.turns.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.turns[static_cast<size_t>(i)] = s.at_cyclic(i + k);
    return out;
}

TurnSequence mirror_sequence(const TurnSequence& s) {
    // Reflection preserves interior angles; the ccw walk of the mirror visits
    // vertex 0 first and then the others in reverse order.
    int n = s.size();
    TurnSequence out;
    out.turns.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.turns.push_back(s.at_cyclic(-i));
    return out;
}

TurnSequence parse_sequence(const std::string& text) {
    TurnSequence s;
    bool comment = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (comment) {
            if (c == '\n') comment = false;
            continue;
        }
        if (c == '#') {
            comment = true;
        } else if (c == 'L') {
            s.turns.push_back(Turn::L);
        } else if (c == 'R') {
            s.turns.push_back(Turn::R);
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
                   c == '\f') {
            continue;
        } else {
            throw ParseError(ParseError::Kind::IllegalCharacter, static_cast<int>(i),
                             "illegal character '" + std::string(1, c) +
                                 "' at position " + std::to_string(i));
        }
    }
    if (s.turns.empty())
        throw ParseError(ParseError::Kind::EmptySequence, -1, "empty sequence");
    return s;
}

std::string ValidationReport::message() const {
    switch (kind) {
        case Kind::Ok:
            return "ok";
        case Kind::TooShort:
            return "sequence too short (need at least 4 turns)";
        case Kind::BalanceViolation:
            return "balance violation: " + std::to_string(lefts) + " left vs " +
                   std::to_string(rights) + " right turns (need #L - #R = 4)";
    }
    return "";
}

ValidationReport validate(const TurnSequence& s) {
    ValidationReport r;
    r.lefts = s.count(Turn::L);
    r.rights = s.count(Turn::R);
    if (s.size() < 4) {
        r.kind = ValidationReport::Kind::TooShort;
    } else if (r.lefts - r.rights != 4) {
        r.kind = ValidationReport::Kind::BalanceViolation;
    }
    return r;
}

std::vector<Direction> directions(const TurnSequence& s, Direction start) {
    int n = s.size();
    std::vector<Direction> d(static_cast<size_t>(n));
    d[0] = start;
    for (int i = 1; i < n; ++i)
        d[static_cast<size_t>(i)] = rotate(d[static_cast<size_t>(i - 1)], s[i]);
    return d;
}

namespace {

// True iff the a-headed edges form one cyclically contiguous arc and the
// b-headed edges another.
bool arcs_contiguous(const std::vector<Direction>& dirs, Direction a, Direction b) {
    int n = static_cast<int>(dirs.size());
    std::vector<Direction> axis;
    axis.reserve(static_cast<size_t>(n) / 2);
    for (Direction d : dirs)
        if (d == a || d == b) axis.push_back(d);
    int m = static_cast<int>(axis.size());
    int switches = 0;
    for (int i = 0; i < m; ++i)
        if (axis[static_cast<size_t>(i)] != axis[static_cast<size_t>((i + 1) % m)])
            ++switches;
    return switches == 2;
}

int first_pair_offset(const TurnSequence& s, Turn t) {
    int n = s.size();
    for (int i = 0; i < n; ++i)
        if (s[i] == t && s.at_cyclic(i + 1) == t) return i;
    return -1;
}

}  // namespace

SequenceClass classify(const TurnSequence& s) {
    if (!validate(s).ok()) throw std::invalid_argument("classify: invalid sequence");
    auto dirs = directions(s, Direction::East);
    bool xm = arcs_contiguous(dirs, Direction::East, Direction::West);
    bool ym = arcs_contiguous(dirs, Direction::North, Direction::South);
    SequenceClass c;
    if (xm && ym) {
        c.tag = SequenceClassTag::XYMonotone;
        c.rotation_offset = first_pair_offset(s, Turn::L);
    } else if (xm || ym) {
        c.tag = SequenceClassTag::XMonotone;
        c.rotation_offset = first_pair_offset(s, Turn::R);
    } else {
        c.tag = SequenceClassTag::General;
        c.rotation_offset = 0;
    }
    return c;
}

StairDecomposition decompose_xy(const TurnSequence& s) {
    SequenceClass c = classify(s);
    if (c.tag != SequenceClassTag::XYMonotone) throw NotXYMonotone();
    TurnSequence t = rotate_sequence(s, c.rotation_offset);
    int n = t.size();
    // t = [L (LR)^{k1}] [L (LR)^{k2}] [L (LR)^{k3}] [L (LR)^{k4}],
    // stars in stair order TL, BL, BR, TR.
    int stars[4] = {0, 0, 0, 0};
    int pos = 0;
    for (int u = 0; u < 4; ++u) {
        if (pos >= n || t[pos] != Turn::L) throw NotXYMonotone();
        ++pos;
        while (pos + 1 < n && t[pos] == Turn::L && t[pos + 1] == Turn::R) {
            stars[u] += 1;
            pos += 2;
        }
    }
    if (pos != n) throw NotXYMonotone();
    StairDecomposition d;
    d.r2 = stars[0];  // TL
    d.r3 = stars[1];  // BL
    d.r4 = stars[2];  // BR
    d.r1 = stars[3];  // TR
    d.rotation_offset = c.rotation_offset;
    return d;
}

TurnSequence expand_stairs(const StairDecomposition& d) {
    std::string w;
    int stars[4] = {d.r2, d.r3, d.r4, d.r1};  // TL, BL, BR, TR
    for (int u = 0; u < 4; ++u) {
        w.push_back('L');
        for (int i = 0; i < stars[u]; ++i) w += "LR";
    }
    return make_sequence(w);
}

namespace {

// Horizontal edge indices of one hull, in ccw walk order.
std::vector<int> hull_arc(const std::vector<Direction>& dirs, Direction heading) {
    int n = static_cast<int>(dirs.size());
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (dirs[static_cast<size_t>(i)] == heading) idx.push_back(i);
    int m = static_cast<int>(idx.size());
    int startpos = 0;
    for (int i = 0; i < m; ++i) {
        int cur = idx[static_cast<size_t>(i)];
        int prev = idx[static_cast<size_t>((i + m - 1) % m)];
        if (((cur - prev) % n + n) % n != 2) startpos = i;
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out.push_back(idx[static_cast<size_t>((startpos + i) % m)]);
    return out;
}

struct RawHulls {
    std::vector<HullEdge> upper;  // right-to-left
    std::vector<HullEdge> lower;  // right-to-left
    int r_upper = 0;
    int r_lower = 0;
    Direction start = Direction::East;
};

// Hull structure of s drawn with the E/W-contiguous heading; no flip applied.
RawHulls raw_hulls(const TurnSequence& s) {
    Direction start = Direction::East;
    {
        auto dirs = directions(s, Direction::East);
        if (!arcs_contiguous(dirs, Direction::East, Direction::West))
            start = Direction::North;
    }
    auto dirs = directions(s, start);
    // In this drawing the East arc is the lower hull (ccw walks it left to
    // right) and the West arc is the upper hull.
    Direction lower_heading = Direction::East;

    auto tag_of = [&](int e) {
        Turn a = s.at_cyclic(e);
        Turn b = s.at_cyclic(e + 1);
        if (a == Turn::L && b == Turn::L) return EdgeTag::Outer;
        if (a == Turn::R && b == Turn::R) return EdgeTag::Inner;
        return EdgeTag::Plain;
    };
    auto reflex_on = [&](const std::vector<int>& arc) {
        // Reflex vertices strictly inside the chain (chain endpoints at the
        // vertical extreme edges are always convex).
        int m = static_cast<int>(arc.size());
        if (m == 0) return 0;
        int first = arc.front();
        int r = 0;
        for (int k = 1; k <= 2 * (m - 1); ++k)
            if (s.at_cyclic(first + k) == Turn::R) ++r;
        return r;
    };

    std::vector<int> lower_ccw = hull_arc(dirs, lower_heading);           // left->right
    std::vector<int> upper_ccw = hull_arc(dirs, opposite(lower_heading));  // right->left

    RawHulls rh;
    rh.start = start;
    rh.r_lower = reflex_on(lower_ccw);
    rh.r_upper = reflex_on(upper_ccw);

    // Upper list right-to-left = ccw order; lower list right-to-left =
    // reversed ccw order.
    for (int e : upper_ccw) rh.upper.push_back({e, tag_of(e), 0});
    for (auto it = lower_ccw.rbegin(); it != lower_ccw.rend(); ++it)
        rh.lower.push_back({*it, tag_of(*it), 0});

    // step_left: consider the vertical between list[i] (righter) and
    // list[i+1] (lefter). Reading the two turns around that vertical in ccw
    // walk order (a, b): a == L means the walk turns toward the interior
    // side, which works out to "the lefter edge sits one step lower" on both
    // hulls; a == R means one step higher.
    for (size_t i = 0; i + 1 < rh.upper.size(); ++i) {
        Turn a = s.at_cyclic(rh.upper[i].seq_index + 1);  // ccw visits righter first
        rh.upper[i].step_left = (a == Turn::L) ? -1 : +1;
    }
    for (size_t i = 0; i + 1 < rh.lower.size(); ++i) {
        Turn a = s.at_cyclic(rh.lower[i + 1].seq_index + 1);  // ccw visits lefter first
        rh.lower[i].step_left = (a == Turn::L) ? -1 : +1;
    }
    return rh;
}

}  // namespace

HullDecomposition decompose_x(const TurnSequence& s) {
    SequenceClass c = classify(s);
    if (c.tag == SequenceClassTag::General) throw NotXMonotone();

    RawHulls rh = raw_hulls(s);
    HullDecomposition h;
    h.rotation_offset = c.rotation_offset;
    if (rh.r_upper >= rh.r_lower) {
        h.flipped = false;
        h.start_heading = rh.start;
        h.upper_edges = std::move(rh.upper);
        h.lower_edges = std::move(rh.lower);
        h.rT = rh.r_upper;
        h.rB = rh.r_lower;
    } else {
        // Work on the mirror image; edge indices then refer to
        // mirror_sequence(s). Witnesses built from a flipped decomposition
        // realize the mirrored word and get un-mirrored by the solvers.
        RawHulls mh = raw_hulls(mirror_sequence(s));
        h.flipped = true;
        h.start_heading = mh.start;
        h.upper_edges = std::move(mh.upper);
        h.lower_edges = std::move(mh.lower);
        h.rT = mh.r_upper;
        h.rB = mh.r_lower;
    }
    return h;
}

}  // namespace minpoly
