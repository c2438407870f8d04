#include "minpoly/polygon.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace minpoly {

namespace {

using i128 = __int128;

int64_t checked_i64(i128 v, const char* what) {
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw InvalidPolygon(std::string(what) + " overflows 64 bits");
    return static_cast<int64_t>(v);
}

}  // namespace

GridPolygon::GridPolygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    int n = size();
    if (n < 4 || n % 2 != 0)
        throw InvalidPolygon("polygon needs an even number (>= 4) of vertices");
    i128 twice_area = 0;
    for (int i = 0; i < n; ++i) {
        const Point& a = verts_[static_cast<size_t>(i)];
        const Point& b = verts_[static_cast<size_t>((i + 1) % n)];
        bool horiz = a.y == b.y && a.x != b.x;
        bool vert = a.x == b.x && a.y != b.y;
        if (!horiz && !vert)
            throw InvalidPolygon("edges must be axis-parallel with nonzero length");
        const Point& c = verts_[static_cast<size_t>((i + 2) % n)];
        bool next_horiz = b.y == c.y;
        if (horiz == next_horiz)
            throw InvalidPolygon("edges must strictly alternate horizontal/vertical");
        twice_area += static_cast<i128>(a.x) * b.y - static_cast<i128>(b.x) * a.y;
    }
    if (twice_area <= 0) throw InvalidPolygon("vertices must be in ccw order");
    if (!is_simple(verts_)) throw InvalidPolygon("boundary is not simple");
}

GridPolygon GridPolygon::from_edge_lengths(const TurnSequence& s, Direction start,
                                           const std::vector<int64_t>& lens) {
    int n = s.size();
    if (static_cast<int>(lens.size()) != n)
        throw InvalidPolygon("need one length per edge");
    auto dirs = directions(s, start);
    std::vector<Point> v;
    v.reserve(static_cast<size_t>(n));
    Point cur{0, 0};
    for (int i = 0; i < n; ++i) {
        v.push_back(cur);
        int64_t len = lens[static_cast<size_t>(i)];
        switch (dirs[static_cast<size_t>(i)]) {
            case Direction::East: cur.x += len; break;
            case Direction::West: cur.x -= len; break;
            case Direction::North: cur.y += len; break;
            case Direction::South: cur.y -= len; break;
        }
    }
    if (cur != Point{0, 0}) throw InvalidPolygon("edge lengths do not close the walk");
    return GridPolygon(std::move(v));
}

Point GridPolygon::edge_vector(int i) const {
    const Point& a = vertex(i);
    const Point& b = vertex(i + 1);
    return Point{b.x - a.x, b.y - a.y};
}

int64_t GridPolygon::edge_length(int i) const {
    Point v = edge_vector(i);
    return std::llabs(v.x) + std::llabs(v.y);
}

Direction GridPolygon::edge_direction(int i) const {
    Point v = edge_vector(i);
    if (v.x > 0) return Direction::East;
    if (v.x < 0) return Direction::West;
    if (v.y > 0) return Direction::North;
    return Direction::South;
}

int64_t area(const GridPolygon& p) {
    i128 twice = 0;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        const Point& a = p.vertex(i);
        const Point& b = p.vertex(i + 1);
        twice += static_cast<i128>(a.x) * b.y - static_cast<i128>(b.x) * a.y;
    }
    return checked_i64(twice / 2, "area");
}

int64_t perimeter(const GridPolygon& p) {
    i128 total = 0;
    for (int i = 0; i < p.size(); ++i) total += p.edge_length(i);
    return checked_i64(total, "perimeter");
}

std::pair<int64_t, int64_t> bbox(const GridPolygon& p) {
    int64_t xmin = INT64_MAX, xmax = INT64_MIN, ymin = INT64_MAX, ymax = INT64_MIN;
    for (const Point& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    return {xmax - xmin, ymax - ymin};
}

Measures measures(const GridPolygon& p) {
    Measures m;
    m.area = area(p);
    m.perimeter = perimeter(p);
    auto [w, h] = bbox(p);
    m.bbox_w = w;
    m.bbox_h = h;
    return m;
}

namespace {

struct Seg {
    Point a, b;  // normalized so a <= b
};

Seg make_seg(Point a, Point b) {
    if (b < a) std::swap(a, b);
    return Seg{a, b};
}

bool overlap1d(int64_t a1, int64_t a2, int64_t b1, int64_t b2) {
    return std::max(a1, b1) <= std::min(a2, b2);
}

// Closed-segment intersection test for axis-parallel segments.
bool segs_touch(const Seg& s, const Seg& t) {
    bool s_h = s.a.y == s.b.y;
    bool t_h = t.a.y == t.b.y;
    if (s_h && t_h)
        return s.a.y == t.a.y && overlap1d(s.a.x, s.b.x, t.a.x, t.b.x);
    if (!s_h && !t_h)
        return s.a.x == t.a.x && overlap1d(s.a.y, s.b.y, t.a.y, t.b.y);
    const Seg& h = s_h ? s : t;
    const Seg& v = s_h ? t : s;
    return v.a.x >= h.a.x && v.a.x <= h.b.x && h.a.y >= v.a.y && h.a.y <= v.b.y;
}

}  // namespace

bool is_simple(const std::vector<Point>& vertices) {
    int n = static_cast<int>(vertices.size());
    if (n < 4) return false;
    std::vector<Seg> segs;
    segs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point a = vertices[static_cast<size_t>(i)];
        Point b = vertices[static_cast<size_t>((i + 1) % n)];
        if (a == b) return false;
        if (a.x != b.x && a.y != b.y) return false;
        segs.push_back(make_seg(a, b));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Seg& si = segs[static_cast<size_t>(i)];
            const Seg& sj = segs[static_cast<size_t>(j)];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segs_touch(si, sj)) return false;
                continue;
            }
            if (!segs_touch(si, sj)) return false;
            bool i_h = si.a.y == si.b.y;
            bool j_h = sj.a.y == sj.b.y;
            if (i_h == j_h) {
                // Collinear neighbors: the closed overlap must be one point.
                if (i_h) {
                    if (std::min(si.b.x, sj.b.x) != std::max(si.a.x, sj.a.x))
                        return false;
                } else {
                    if (std::min(si.b.y, sj.b.y) != std::max(si.a.y, sj.a.y))
                        return false;
                }
            }
        }
    }
    return true;
}

TurnSequence sequence_of(const GridPolygon& p) {
    int n = p.size();
    TurnSequence s;
    s.turns.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point u = p.edge_vector(i - 1 + n);
        Point v = p.edge_vector(i);
        i128 cross = static_cast<i128>(u.x) * v.y - static_cast<i128>(u.y) * v.x;
        if (cross == 0) throw InvalidPolygon("collinear edges have no turn");
        s.turns.push_back(cross > 0 ? Turn::L : Turn::R);
    }
    return s;
}

GridPolygon translate(const GridPolygon& p, int64_t dx, int64_t dy) {
    std::vector<Point> v = p.vertices();
    for (Point& q : v) {
        q.x += dx;
        q.y += dy;
    }
    return GridPolygon(std::move(v));
}

GridPolygon mirror_y(const GridPolygon& p) {
    int n = p.size();
    std::vector<Point> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point q = p.vertex(-i);
        v.push_back(Point{q.x, -q.y});
    }
    return GridPolygon(std::move(v));
}

GridPolygon rotate_start(const GridPolygon& p, int k) {
    int n = p.size();
    std::vector<Point> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(p.vertex(i + k));
    return GridPolygon(std::move(v));
}

GridPolygon align_to_sequence(const GridPolygon& p, const TurnSequence& s) {
    TurnSequence got = sequence_of(p);
    int n = got.size();
    if (n != s.size()) throw InvalidPolygon("align: sequence length mismatch");
    for (int k = 0; k < n; ++k) {
        bool match = true;
        for (int i = 0; i < n; ++i) {
            if (got.at_cyclic(i + k) != s[i]) {
                match = false;
                break;
            }
        }
        if (match) return rotate_start(p, k);
    }
    throw InvalidPolygon("align: polygon does not realize the sequence");
}

namespace {

struct HullView {
    std::vector<int> upper;  // edge indices, right-to-left (ccw order)
    std::vector<int> lower;  // edge indices, left-to-right (ccw order)
    int e_left = -1;
    int e_right = -1;
};

bool drawing_is_x_monotone(const GridPolygon& p) {
    int n = p.size();
    std::vector<Direction> horiz;
    for (int i = 0; i < n; ++i) {
        Direction d = p.edge_direction(i);
        if (is_horizontal(d)) horiz.push_back(d);
    }
    int m = static_cast<int>(horiz.size());
    int switches = 0;
    for (int i = 0; i < m; ++i)
        if (horiz[static_cast<size_t>(i)] != horiz[static_cast<size_t>((i + 1) % m)])
            ++switches;
    return switches == 2;
}

HullView hull_view(const GridPolygon& p) {
    int n = p.size();
    std::vector<int> east, west;
    for (int i = 0; i < n; ++i) {
        Direction d = p.edge_direction(i);
        if (d == Direction::East) east.push_back(i);
        if (d == Direction::West) west.push_back(i);
    }
    auto rotate_contiguous = [&](std::vector<int>& idx) {
        int m = static_cast<int>(idx.size());
        int startpos = 0;
        for (int i = 0; i < m; ++i) {
            int cur = idx[static_cast<size_t>(i)];
            int prev = idx[static_cast<size_t>((i + m - 1) % m)];
            if (((cur - prev) % n + n) % n != 2) startpos = i;
        }
        std::rotate(idx.begin(), idx.begin() + startpos, idx.end());
    };
    rotate_contiguous(east);
    rotate_contiguous(west);
    HullView h;
    h.lower = east;
    h.upper = west;
    h.e_right = (east.back() + 1) % n;
    h.e_left = (west.back() + 1) % n;
    return h;
}

EdgeTag tag_of_edge(const TurnSequence& seq, int e) {
    Turn a = seq.at_cyclic(e);
    Turn b = seq.at_cyclic(e + 1);
    if (a == Turn::L && b == Turn::L) return EdgeTag::Outer;
    if (a == Turn::R && b == Turn::R) return EdgeTag::Inner;
    return EdgeTag::Plain;
}

int reflex_on_arc(const TurnSequence& seq, const std::vector<int>& arc) {
    int m = static_cast<int>(arc.size());
    if (m == 0) return 0;
    int r = 0;
    for (int k = 1; k <= 2 * (m - 1); ++k)
        if (seq.at_cyclic(arc.front() + k) == Turn::R) ++r;
    return r;
}

}  // namespace

bool satisfies_bbox_canonical(const GridPolygon& p) {
    if (!drawing_is_x_monotone(p)) return false;
    HullView h = hull_view(p);
    TurnSequence seq = sequence_of(p);
    int64_t ymax = INT64_MIN, ymin = INT64_MAX;
    for (const Point& v : p.vertices()) {
        ymax = std::max(ymax, v.y);
        ymin = std::min(ymin, v.y);
    }
    for (int e : h.upper)
        if (tag_of_edge(seq, e) == EdgeTag::Outer && p.vertex(e).y != ymax)
            return false;
    for (int e : h.lower)
        if (tag_of_edge(seq, e) == EdgeTag::Outer && p.vertex(e).y != ymin)
            return false;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (is_horizontal(p.edge_direction(i))) {
            if (tag_of_edge(seq, i) != EdgeTag::Outer && p.edge_length(i) != 1)
                return false;
        } else {
            if (i == h.e_left || i == h.e_right) continue;
            bool inc_inner = tag_of_edge(seq, (i + 1) % n) == EdgeTag::Inner ||
                             tag_of_edge(seq, (i - 1 + n) % n) == EdgeTag::Inner;
            if (!inc_inner && p.edge_length(i) != 1) return false;
        }
    }
    return true;
}

bool satisfies_perimeter_canonical(const GridPolygon& p) {
    if (!drawing_is_x_monotone(p)) return false;
    HullView h = hull_view(p);
    TurnSequence seq = sequence_of(p);
    int rT = reflex_on_arc(seq, h.upper);
    int rB = reflex_on_arc(seq, h.lower);
    const std::vector<int>& t_hull = (rT >= rB) ? h.upper : h.lower;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (is_horizontal(p.edge_direction(i))) continue;
        if (i == h.e_left || i == h.e_right) continue;
        if (p.edge_length(i) != 1) return false;
    }
    for (int e : t_hull)
        if (p.edge_length(e) != 1) return false;
    return true;
}

GridPolygon canonicalize_x_bbox(const GridPolygon& p) {
    if (!drawing_is_x_monotone(p)) throw NotXMonotone();
    HullView h = hull_view(p);
    TurnSequence seq = sequence_of(p);
    int n = p.size();

    int64_t ymax = INT64_MIN, ymin = INT64_MAX, xmin = INT64_MAX, xmax = INT64_MIN;
    for (const Point& v : p.vertices()) {
        ymax = std::max(ymax, v.y);
        ymin = std::min(ymin, v.y);
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
    }

    // Step 1 of the transform fixes all y-coordinates: outer extreme edges on
    // the border, unit steps down the stairs, each inner extreme edge pushed
    // as close to the border as its longer flanking stair allows. Step 2
    // packs every stair against its inner extreme edge, pinning the inner
    // edge's right end at its original x; outer edges absorb the slack and
    // the hull tails pack against the vertical extreme edges. Neither step
    // changes the bounding box, and both only move the upper profile up /
    // the lower profile down, so simplicity is preserved.

    std::map<int, int64_t> edge_y;
    std::map<int, int64_t> edge_left;
    std::map<int, int64_t> edge_len;

    auto orig_right = [&](int e) {
        return std::max(p.vertex(e).x, p.vertex(e + 1).x);
    };

    auto assign_hull = [&](const std::vector<int>& ltr, bool upper) {
        int64_t border = upper ? ymax : ymin;
        int sign = upper ? -1 : +1;
        int m = static_cast<int>(ltr.size());
        std::vector<int> outs;
        for (int i = 0; i < m; ++i)
            if (tag_of_edge(seq, ltr[static_cast<size_t>(i)]) == EdgeTag::Outer)
                outs.push_back(i);
        if (outs.empty())
            throw InvalidPolygon("hull without an outer extreme edge");

        // y-coordinates.
        for (int oi : outs) edge_y[ltr[static_cast<size_t>(oi)]] = border;
        for (size_t k = 0; k + 1 < outs.size(); ++k) {
            int lo = outs[k], hi = outs[k + 1];
            int inner = -1;
            for (int i = lo + 1; i < hi; ++i)
                if (tag_of_edge(seq, ltr[static_cast<size_t>(i)]) == EdgeTag::Inner)
                    inner = i;
            if (inner < 0) throw InvalidPolygon("missing inner extreme edge");
            int s1 = inner - lo - 1;
            int s2 = hi - inner - 1;
            for (int i = lo + 1; i < hi; ++i) {
                int64_t d;
                if (i < inner)
                    d = i - lo;
                else if (i > inner)
                    d = hi - i;
                else
                    d = std::max(s1, s2) + 1;
                edge_y[ltr[static_cast<size_t>(i)]] = border + sign * d;
            }
        }
        for (int i = outs.front() - 1; i >= 0; --i)
            edge_y[ltr[static_cast<size_t>(i)]] = border + sign * (outs.front() - i);
        for (int i = outs.back() + 1; i < m; ++i)
            edge_y[ltr[static_cast<size_t>(i)]] = border + sign * (i - outs.back());

        // x-coordinates, left to right.
        int64_t x = xmin;
        for (int i = 0; i < outs.front(); ++i) {  // left tail packs left
            edge_left[ltr[static_cast<size_t>(i)]] = x;
            edge_len[ltr[static_cast<size_t>(i)]] = 1;
            x += 1;
        }
        for (size_t k = 0; k < outs.size(); ++k) {
            int o = outs[k];
            int e_o = ltr[static_cast<size_t>(o)];
            int64_t right_end;
            if (k + 1 < outs.size()) {
                int hi = outs[k + 1];
                int inner = -1;
                for (int i = o + 1; i < hi; ++i)
                    if (tag_of_edge(seq, ltr[static_cast<size_t>(i)]) == EdgeTag::Inner)
                        inner = i;
                int s1 = inner - o - 1;
                int64_t inner_right = orig_right(ltr[static_cast<size_t>(inner)]);
                right_end = inner_right - 1 - s1;
                if (right_end <= x) right_end = x + 1;  // keep length positive
                edge_left[e_o] = x;
                edge_len[e_o] = right_end - x;
                x = right_end;
                for (int i = o + 1; i < hi; ++i) {
                    edge_left[ltr[static_cast<size_t>(i)]] = x;
                    edge_len[ltr[static_cast<size_t>(i)]] = 1;
                    x += 1;
                }
            } else {
                int tail = m - o - 1;  // right tail packs right
                right_end = xmax - tail;
                if (right_end <= x)
                    throw InvalidPolygon("canonicalize_x_bbox: width exhausted");
                edge_left[e_o] = x;
                edge_len[e_o] = right_end - x;
                x = right_end;
                for (int i = o + 1; i < m; ++i) {
                    edge_left[ltr[static_cast<size_t>(i)]] = x;
                    edge_len[ltr[static_cast<size_t>(i)]] = 1;
                    x += 1;
                }
            }
        }
    };

    std::vector<int> upper_ltr(h.upper.rbegin(), h.upper.rend());
    assign_hull(upper_ltr, true);
    assign_hull(h.lower, false);

    std::vector<Point> verts(static_cast<size_t>(n));
    for (int e : h.upper) {  // upper edges head West: vertex e is the right end
        verts[static_cast<size_t>(e)] = Point{edge_left[e] + edge_len[e], edge_y[e]};
        verts[static_cast<size_t>((e + 1) % n)] = Point{edge_left[e], edge_y[e]};
    }
    for (int e : h.lower) {  // lower edges head East
        verts[static_cast<size_t>(e)] = Point{edge_left[e], edge_y[e]};
        verts[static_cast<size_t>((e + 1) % n)] = Point{edge_left[e] + edge_len[e], edge_y[e]};
    }
    return GridPolygon(std::move(verts));
}

GridPolygon canonicalize_x_perimeter(const GridPolygon& input) {
    if (!drawing_is_x_monotone(input)) throw NotXMonotone();

    {
        HullView h = hull_view(input);
        TurnSequence seq = sequence_of(input);
        if (reflex_on_arc(seq, h.upper) < reflex_on_arc(seq, h.lower)) {
            // Work on the mirror image, then mirror back; vertex indices and
            // their turns are restored by the double flip.
            return mirror_y(canonicalize_x_perimeter(mirror_y(input)));
        }
    }

    GridPolygon p = input;

    // Step 1: shorten long verticals (all but e_L/e_R) to unit length by
    // shifting the subchain toward the nearer vertical extreme edge, which
    // stretches that extreme edge by the same amount.
    bool changed = true;
    while (changed) {
        changed = false;
        HullView h = hull_view(p);
        int n = p.size();
        TurnSequence seq = sequence_of(p);
        for (int i = 0; i < n && !changed; ++i) {
            if (is_horizontal(p.edge_direction(i))) continue;
            if (i == h.e_left || i == h.e_right) continue;
            int64_t len = p.edge_length(i);
            if (len == 1) continue;
            bool upper = p.edge_direction((i + 1) % n) == Direction::West;
            int64_t delta = len - 1;
            Turn a = seq.at_cyclic(i);
            std::vector<Point> v = p.vertices();
            auto shift_range = [&](int from, int to, int64_t dy) {
                int k = from;
                while (true) {
                    k = (k + 1) % n;
                    v[static_cast<size_t>(k)].y += dy;
                    if (k == to) break;
                }
            };
            if (upper) {
                if (a == Turn::R)
                    shift_range(h.e_right, i, +delta);  // rising edge: move right part up
                else
                    shift_range(i, h.e_left, +delta);  // falling edge: move left part up
            } else {
                if (a == Turn::R)
                    shift_range(h.e_left, i, -delta);
                else
                    shift_range(i, h.e_right, -delta);
            }
            p = GridPolygon(std::move(v));
            changed = true;
        }
    }

    // Step 2: shorten long horizontals of the upper chain, pairing each with
    // a long lower-chain edge and pulling everything right of them one unit
    // left; a pinch is resolved by lifting the whole upper chain first.
    auto try_shift = [&](int e_top, int e_bot) -> bool {
        int n = p.size();
        std::vector<Point> v = p.vertices();
        int k = e_bot;
        while (true) {
            k = (k + 1) % n;
            v[static_cast<size_t>(k)].x -= 1;
            if (k == e_top) break;
        }
        if (!is_simple(v)) return false;
        try {
            p = GridPolygon(std::move(v));
        } catch (const InvalidPolygon&) {
            return false;
        }
        return true;
    };

    while (true) {
        HullView h = hull_view(p);
        int e_top = -1;
        for (int e : h.upper) {
            if (p.edge_length(e) > 1) {
                e_top = e;  // upper list is right-to-left: first hit = rightmost
                break;
            }
        }
        if (e_top < 0) break;
        int e_bot = -1;
        for (auto it = h.lower.rbegin(); it != h.lower.rend(); ++it) {
            if (p.edge_length(*it) > 1) {
                e_bot = *it;
                break;
            }
        }
        if (e_bot < 0)
            throw InvalidPolygon("canonicalize_x_perimeter: no long lower edge");
        if (try_shift(e_top, e_bot)) continue;
        {
            int n = p.size();
            std::vector<Point> v = p.vertices();
            int k = h.e_right;
            while (true) {
                k = (k + 1) % n;
                v[static_cast<size_t>(k)].y += 1;
                if (k == h.e_left) break;
            }
            p = GridPolygon(std::move(v));
        }
        if (!try_shift(e_top, e_bot))
            throw InvalidPolygon("canonicalize_x_perimeter: shift failed after lift");
    }

    return p;
}

GridPolygon polygon_from_cells(const std::set<Point>& cells) {
    if (cells.empty()) throw InvalidPolygon("no cells");
    std::map<Point, Point> next;
    auto add = [&](Point a, Point b) {
        if (!next.emplace(a, b).second)
            throw InvalidPolygon("cell set boundary is pinched");
    };
    for (const Point& c : cells) {
        bool up = cells.count(Point{c.x, c.y + 1});
        bool down = cells.count(Point{c.x, c.y - 1});
        bool left = cells.count(Point{c.x - 1, c.y});
        bool right = cells.count(Point{c.x + 1, c.y});
        if (!down) add(Point{c.x, c.y}, Point{c.x + 1, c.y});
        if (!right) add(Point{c.x + 1, c.y}, Point{c.x + 1, c.y + 1});
        if (!up) add(Point{c.x + 1, c.y + 1}, Point{c.x, c.y + 1});
        if (!left) add(Point{c.x, c.y + 1}, Point{c.x, c.y});
    }

    Point start = next.rbegin()->first;  // top-right-most corner; heads West
    std::vector<Point> corners;
    Point cur = start;
    do {
        corners.push_back(cur);
        cur = next.at(cur);
    } while (cur != start);
    if (corners.size() != next.size())
        throw InvalidPolygon("cell set boundary is disconnected (holes?)");

    std::vector<Point> verts;
    int m = static_cast<int>(corners.size());
    for (int i = 0; i < m; ++i) {
        Point prev = corners[static_cast<size_t>((i + m - 1) % m)];
        Point here = corners[static_cast<size_t>(i)];
        Point nxt = corners[static_cast<size_t>((i + 1) % m)];
        int64_t cross = (here.x - prev.x) * (nxt.y - here.y) -
                        (here.y - prev.y) * (nxt.x - here.x);
        if (cross != 0) verts.push_back(here);
    }
    return GridPolygon(std::move(verts));
}

std::set<Point> cells_of(const GridPolygon& p) {
    auto [w, h] = bbox(p);
    int64_t xmin = INT64_MAX, ymin = INT64_MAX;
    for (const Point& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        ymin = std::min(ymin, v.y);
    }
    (void)ymin;
    if (w > 4000 || h > 4000)
        throw std::invalid_argument("cells_of: polygon too large");
    std::set<Point> cells;
    for (int64_t x = xmin; x < xmin + w; ++x) {
        std::vector<int64_t> ys;
        for (int i = 0; i < p.size(); ++i) {
            const Point& a = p.vertex(i);
            const Point& b = p.vertex(i + 1);
            if (a.y == b.y) {
                int64_t lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
                if (lo <= x && x < hi) ys.push_back(a.y);
            }
        }
        std::sort(ys.begin(), ys.end());
        for (size_t k = 0; k + 1 < ys.size(); k += 2)
            for (int64_t y = ys[k]; y < ys[k + 1]; ++y) cells.insert(Point{x, y});
    }
    return cells;
}

}  // namespace minpoly
