#include "minpoly/x_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace minpoly {

namespace {

constexpr int64_t kInf = INT64_MAX / 4;

// Left-to-right view of one hull of the canonical drawing.
struct Hull {
    std::vector<EdgeTag> tag;
    std::vector<int> step;       // step[i]: +1 if edge i+1 sits one step above edge i
    std::vector<int64_t> depth;  // canonical distance from the hull's border
    std::vector<int> outs;       // outer extreme edge indices
    int m = 0;
};

Hull hull_from_rtl(const std::vector<HullEdge>& rtl) {
    Hull h;
    h.m = static_cast<int>(rtl.size());
    h.tag.resize(static_cast<size_t>(h.m));
    h.step.assign(static_cast<size_t>(h.m), 0);
    for (int i = 0; i < h.m; ++i)
        h.tag[static_cast<size_t>(i)] = rtl[static_cast<size_t>(h.m - 1 - i)].tag;
    // rtl step_left describes the edge one further left; negate for ltr.
    for (int i = 0; i + 1 < h.m; ++i)
        h.step[static_cast<size_t>(i)] =
            -rtl[static_cast<size_t>(h.m - 2 - i)].step_left;
    for (int i = 0; i < h.m; ++i)
        if (h.tag[static_cast<size_t>(i)] == EdgeTag::Outer) h.outs.push_back(i);
    if (h.outs.empty()) throw NotXMonotone();
    h.depth.assign(static_cast<size_t>(h.m), 0);
    for (size_t k = 0; k + 1 < h.outs.size(); ++k) {
        int lo = h.outs[k], hi = h.outs[k + 1];
        int inner = -1;
        for (int i = lo + 1; i < hi; ++i)
            if (h.tag[static_cast<size_t>(i)] == EdgeTag::Inner) inner = i;
        if (inner < 0) throw NotXMonotone();
        int s1 = inner - lo - 1, s2 = hi - inner - 1;
        for (int i = lo + 1; i < hi; ++i) {
            if (i < inner)
                h.depth[static_cast<size_t>(i)] = i - lo;
            else if (i > inner)
                h.depth[static_cast<size_t>(i)] = hi - i;
            else
                h.depth[static_cast<size_t>(i)] = std::max(s1, s2) + 1;
        }
    }
    for (int i = h.outs.front() - 1; i >= 0; --i)
        h.depth[static_cast<size_t>(i)] = h.outs.front() - i;
    for (int i = h.outs.back() + 1; i < h.m; ++i)
        h.depth[static_cast<size_t>(i)] = i - h.outs.back();
    return h;
}

// Assemble a polygon from per-edge positions (left x, y, length) of both
// hulls. Vertices run ccw: lower hull left-to-right, then upper right-to-left.
GridPolygon polygon_from_hull_geometry(int mT, int mB,
                                       const std::vector<int64_t>& t_left,
                                       const std::vector<int64_t>& t_len,
                                       const std::vector<int64_t>& t_y,
                                       const std::vector<int64_t>& b_left,
                                       const std::vector<int64_t>& b_len,
                                       const std::vector<int64_t>& b_y) {
    std::vector<Point> v;
    for (int i = 0; i < mB; ++i) {
        v.push_back(Point{b_left[static_cast<size_t>(i)], b_y[static_cast<size_t>(i)]});
        v.push_back(Point{b_left[static_cast<size_t>(i)] + b_len[static_cast<size_t>(i)],
                          b_y[static_cast<size_t>(i)]});
    }
    for (int i = mT - 1; i >= 0; --i) {
        v.push_back(Point{t_left[static_cast<size_t>(i)] + t_len[static_cast<size_t>(i)],
                          t_y[static_cast<size_t>(i)]});
        v.push_back(Point{t_left[static_cast<size_t>(i)], t_y[static_cast<size_t>(i)]});
    }
    return GridPolygon(std::move(v));
}

GridPolygon finish_witness(GridPolygon poly, const HullDecomposition& hd,
                           const TurnSequence& s) {
    if (hd.flipped) poly = mirror_y(poly);
    return align_to_sequence(poly, s);
}

// ---------------------------------------------------------------------------
// Minimum perimeter
// ---------------------------------------------------------------------------

XResult x_min_perimeter_impl(const TurnSequence& s) {
    HullDecomposition hd = decompose_x(s);
    const auto& t_rtl = hd.upper_edges;
    const auto& b_rtl = hd.lower_edges;
    int I = static_cast<int>(t_rtl.size());
    int J = static_cast<int>(b_rtl.size());

    auto up_t = [&](int i) { return t_rtl[static_cast<size_t>(i - 2)].step_left > 0; };
    auto up_b = [&](int j) { return b_rtl[static_cast<size_t>(j - 2)].step_left > 0; };

    std::vector<int64_t> A(static_cast<size_t>(I + 1) * (J + 1), kInf);
    std::vector<uint8_t> par(A.size(), 0);  // 0 diagonal, 1 top-only
    auto at = [&](int i, int j) -> int64_t& {
        return A[static_cast<size_t>(i) * (J + 1) + j];
    };
    auto pt_ = [&](int i, int j) -> uint8_t& {
        return par[static_cast<size_t>(i) * (J + 1) + j];
    };
    at(1, 1) = 1;
    for (int i = 2; i <= I; ++i) {
        for (int j = 1; j <= std::min(i, J); ++j) {
            int64_t diag = kInf, top = kInf;
            if (j == 1) {
                int64_t prev = at(i - 1, 1);
                if (prev < kInf)
                    top = up_t(i) ? prev + 1 : std::max<int64_t>(prev - 1, 1);
            } else {
                int64_t pd = at(i - 1, j - 1);
                int64_t ptop = (i - 1 >= j) ? at(i - 1, j) : kInf;
                bool ut = up_t(i), ub = up_b(j);
                if (pd < kInf) {
                    if (ut == ub)
                        diag = std::max<int64_t>(pd, 2);
                    else if (ut && !ub)
                        diag = pd + 2;
                    else
                        diag = std::max<int64_t>(pd - 2, 1);
                }
                if (ptop < kInf)
                    top = ut ? ptop + 1 : std::max<int64_t>(ptop - 1, 1);
            }
            if (diag <= top) {
                at(i, j) = diag;
                pt_(i, j) = 0;
            } else {
                at(i, j) = top;
                pt_(i, j) = 1;
            }
        }
    }
    if (at(I, J) >= kInf) throw std::runtime_error("perimeter DP infeasible");

    // Backtrack, then lay out columns right to left; a clamped entry lifts
    // everything already built (stretching what becomes e_R).
    std::vector<std::pair<int, int>> path;
    for (int i = I, j = J; !(i == 1 && j == 1);) {
        path.emplace_back(i, j);
        if (j == 1 || pt_(i, j) == 1)
            i -= 1;
        else {
            i -= 1;
            j -= 1;
        }
    }
    path.emplace_back(1, 1);

    std::vector<int64_t> t_level(static_cast<size_t>(I), 0);
    std::vector<int64_t> b_level(static_cast<size_t>(I), 0);
    std::vector<int> b_of_col(static_cast<size_t>(I), 1);
    int c = I - 1;
    t_level[static_cast<size_t>(c)] = 1;
    b_level[static_cast<size_t>(c)] = 0;
    for (size_t k = path.size() - 1; k > 0; --k) {
        auto [ni, nj] = path[k - 1];
        auto [pi, pj] = path[k];
        (void)pi;
        int nc = c - 1;
        if (nj == pj)
            b_level[static_cast<size_t>(nc)] = b_level[static_cast<size_t>(c)];
        else
            b_level[static_cast<size_t>(nc)] =
                b_level[static_cast<size_t>(c)] + (up_b(nj) ? 1 : -1);
        b_of_col[static_cast<size_t>(nc)] = nj;
        int64_t t_exp = t_level[static_cast<size_t>(c)] + (up_t(ni) ? 1 : -1);
        int64_t t_req = b_level[static_cast<size_t>(nc)] + at(ni, nj);
        int64_t lift = t_req - t_exp;
        if (lift < 0) throw std::runtime_error("perimeter DP: inconsistent lift");
        if (lift > 0)
            for (int cc = c; cc < I; ++cc) t_level[static_cast<size_t>(cc)] += lift;
        t_level[static_cast<size_t>(nc)] = t_req;
        c = nc;
    }
    if (c != 0) throw std::runtime_error("perimeter DP: column mismatch");
    (void)b_of_col;

    std::vector<Point> verts;
    verts.push_back(Point{0, b_level[0]});
    for (int x = 0; x + 1 < I; ++x) {
        if (b_level[static_cast<size_t>(x + 1)] != b_level[static_cast<size_t>(x)]) {
            verts.push_back(Point{x + 1, b_level[static_cast<size_t>(x)]});
            verts.push_back(Point{x + 1, b_level[static_cast<size_t>(x + 1)]});
        }
    }
    verts.push_back(Point{I, b_level[static_cast<size_t>(I - 1)]});
    verts.push_back(Point{I, t_level[static_cast<size_t>(I - 1)]});
    for (int x = I - 1; x > 0; --x) {
        verts.push_back(Point{x, t_level[static_cast<size_t>(x)]});
        verts.push_back(Point{x, t_level[static_cast<size_t>(x - 1)]});
    }
    verts.push_back(Point{0, t_level[0]});

    GridPolygon poly(std::move(verts));
    int64_t peri = perimeter(poly);
    return XResult{peri, finish_witness(std::move(poly), hd, s)};
}

// ---------------------------------------------------------------------------
// Minimum bounding box
// ---------------------------------------------------------------------------

struct Ev {
    int edge = 0;
    bool right = false;
    int left_edges = 0;  // edges strictly left of the vertex
    int left_adj = -1;   // edge immediately left of the vertex
};

struct Side {
    const Hull* hull = nullptr;
    std::vector<Ev> evs;
    std::vector<int> ev_of_edge;   // nearest EV at/left of the edge's left end
    std::vector<int> dist_of_edge; // unit edges between that EV and the edge
    std::vector<int> inner_upto;   // last inner edge index <= k
    int last_outer = -1;
    std::vector<int64_t> y;        // per current height
};

Side make_side(const Hull& h) {
    Side s;
    s.hull = &h;
    for (int o : h.outs) {
        s.evs.push_back(Ev{o, false, o, o - 1});
        s.evs.push_back(Ev{o, true, o + 1, o});
    }
    s.ev_of_edge.assign(static_cast<size_t>(h.m), -1);
    s.dist_of_edge.assign(static_cast<size_t>(h.m), 0);
    int last_rev = -1, after = 0;
    for (int e = 0; e < h.m; ++e) {
        if (h.tag[static_cast<size_t>(e)] == EdgeTag::Outer) {
            int li = 0;
            for (size_t q = 0; q < s.evs.size(); ++q)
                if (s.evs[q].edge == e && !s.evs[q].right) li = static_cast<int>(q);
            s.ev_of_edge[static_cast<size_t>(e)] = li;
            s.dist_of_edge[static_cast<size_t>(e)] = 0;
            last_rev = li + 1;
            after = e + 1;
        } else {
            s.ev_of_edge[static_cast<size_t>(e)] = last_rev;
            s.dist_of_edge[static_cast<size_t>(e)] = last_rev < 0 ? e : e - after;
        }
    }
    s.inner_upto.assign(static_cast<size_t>(h.m), -1);
    int li = -1;
    for (int e = 0; e < h.m; ++e) {
        if (h.tag[static_cast<size_t>(e)] == EdgeTag::Inner) li = e;
        s.inner_upto[static_cast<size_t>(e)] = li;
    }
    s.last_outer = h.outs.back();
    return s;
}

struct Cell {
    int64_t v = kInf;
    // Families: 0 base, 1 same-hull step, 2 outer stretch, 3 cross,
    // 4 wall stretch.
    int8_t family = -1;
    int8_t pside = -1;
    bool opp_covers = false;  // opposite side spanned by one outer edge
    int pev = -1;
    int pedge = -1;
    int32_t w = 0;
};

struct BBoxSolver {
    Side st;  // side 0 = upper
    Side sb;  // side 1 = lower
    int64_t hh = 0;
    std::vector<Cell> cells[2];

    explicit BBoxSolver(const Hull& t, const Hull& b)
        : st(make_side(t)), sb(make_side(b)) {}

    Side& side(int s) { return s == 0 ? st : sb; }
    const Side& cs(int s) const { return s == 0 ? st : sb; }

    Cell& at(int s, int ev, int e) {
        return cells[s][static_cast<size_t>(ev) * cs(1 - s).hull->m + e];
    }

    // Gap over a span of width w ending at column boundary "right end":
    // own content = unit run ending at edge a_end (a_end < 0: an outer on
    // the own border), opposite = unit run ending at b_end (b_end < 0: an
    // outer on the opposite border).
    bool span_ok(int pside, int a_end, int b_end, int64_t w) const {
        const Side& A = cs(pside);
        const Side& B = cs(1 - pside);
        auto y_own = [&](int64_t off) {
            return a_end < 0 ? (pside == 0 ? hh : 0)
                             : A.y[static_cast<size_t>(a_end - off)];
        };
        auto y_opp = [&](int64_t off) {
            return b_end < 0 ? (pside == 0 ? 0 : hh)
                             : B.y[static_cast<size_t>(b_end - off)];
        };
        auto ok = [&](int64_t off) {
            if (off < 0 || off >= w) return true;
            int64_t yu = pside == 0 ? y_own(off) : y_opp(off);
            int64_t yl = pside == 0 ? y_opp(off) : y_own(off);
            return yu >= yl + 1;
        };
        if (w <= 12) {
            for (int64_t off = 0; off < w; ++off)
                if (!ok(off)) return false;
            return true;
        }
        if (!ok(0) || !ok(w - 1)) return false;
        if (a_end >= 0) {
            int inner = A.inner_upto[static_cast<size_t>(a_end)];
            if (inner >= 0)
                for (int64_t d = -1; d <= 1; ++d)
                    if (!ok(a_end - inner + d)) return false;
        }
        if (b_end >= 0) {
            int inner = B.inner_upto[static_cast<size_t>(b_end)];
            if (inner >= 0)
                for (int64_t d = -1; d <= 1; ++d)
                    if (!ok(b_end - inner + d)) return false;
        }
        return true;
    }

    void relax(int s, int ev, int e, int64_t val, int8_t fam, int8_t ps, int pev,
               int pedge, int64_t w, bool opp_covers) {
        Cell& c = at(s, ev, e);
        if (val < c.v)
            c = Cell{val, fam, ps, opp_covers, pev, pedge, static_cast<int32_t>(w)};
    }

    void compute_state(int s, int ev, int e) {
        const Side& own = cs(s);
        const Side& opp = cs(1 - s);
        const Ev& p = own.evs[static_cast<size_t>(ev)];

        // Base: both hulls unit from the wall.
        if (ev == 0 && p.left_edges >= 1 && e == p.left_edges - 1 &&
            opp.dist_of_edge[static_cast<size_t>(e)] >= e) {
            int64_t c = p.left_edges;
            if (span_ok(s, p.left_adj, e, c)) relax(s, ev, e, c, 0, -1, -1, -1, c, false);
        }
        // Base with the opposite hull's first edge an outer covering from
        // the wall.
        if (ev == 0 && p.left_edges >= 1 && e == 0 &&
            opp.hull->tag[0] == EdgeTag::Outer) {
            int64_t c = p.left_edges;
            if (span_ok(s, p.left_adj, -1, c)) relax(s, ev, e, c, 0, -1, -1, -1, c, true);
        }
        // Wall stretch: own first edge is an outer, p its right endpoint.
        if (p.right && p.edge == 0) {
            if (opp.dist_of_edge[static_cast<size_t>(e)] >= e &&
                span_ok(s, -1, e, e + 1))
                relax(s, ev, e, e + 1, 4, -1, -1, -1, e + 1, false);
            if (e == 0 && opp.hull->tag[0] == EdgeTag::Outer)
                relax(s, ev, e, 1, 4, -1, -1, -1, 1, true);
        }
        if (ev > 0) {
            const Ev& q = own.evs[static_cast<size_t>(ev - 1)];
            if (q.edge != p.edge) {
                // Unit step between consecutive outer edges on the own hull.
                int64_t w = p.left_edges - q.left_edges;
                if (e - w >= 0 && opp.dist_of_edge[static_cast<size_t>(e)] >= w - 1) {
                    const Cell& pc = at(s, ev - 1, static_cast<int>(e - w));
                    if (pc.v < kInf && span_ok(s, p.left_adj, e, w))
                        relax(s, ev, e, pc.v + w, 1, static_cast<int8_t>(s), ev - 1,
                              static_cast<int>(e - w), w, false);
                }
                if (opp.hull->tag[static_cast<size_t>(e)] == EdgeTag::Outer) {
                    const Cell& pc = at(s, ev - 1, e);
                    if (pc.v < kInf && span_ok(s, p.left_adj, -1, w))
                        relax(s, ev, e, pc.v + w, 1, static_cast<int8_t>(s), ev - 1,
                              e, w, true);
                }
            } else {
                // The own outer edge stretches from its left endpoint.
                int64_t cap = opp.dist_of_edge[static_cast<size_t>(e)] + 1;
                for (int64_t w = 1; w <= cap && e - w >= 0; ++w) {
                    const Cell& pc = at(s, ev - 1, static_cast<int>(e - w));
                    if (pc.v >= kInf) continue;
                    if (!span_ok(s, -1, e, w)) break;
                    relax(s, ev, e, pc.v + w, 2, static_cast<int8_t>(s), ev - 1,
                          static_cast<int>(e - w), w, false);
                }
                if (opp.hull->tag[static_cast<size_t>(e)] == EdgeTag::Outer) {
                    const Cell& pc = at(s, ev - 1, e);
                    if (pc.v < kInf)
                        relax(s, ev, e, pc.v + 1, 2, static_cast<int8_t>(s), ev - 1,
                              e, 1, true);
                }
            }
        }
        // Cross-hull predecessors.
        int qev = opp.ev_of_edge[static_cast<size_t>(e)];
        if (qev >= 0) {
            int own_cap =
                ev == 0 ? p.left_edges
                        : p.left_edges - own.evs[static_cast<size_t>(ev - 1)].left_edges;
            if (opp.hull->tag[static_cast<size_t>(e)] != EdgeTag::Outer) {
                int64_t w = opp.dist_of_edge[static_cast<size_t>(e)] + 1;
                if (p.right) {
                    const Cell& pc = at(1 - s, qev, p.edge);
                    if (pc.v < kInf && span_ok(s, -1, e, w))
                        relax(s, ev, e, pc.v + w, 3, static_cast<int8_t>(1 - s), qev,
                              p.edge, w, false);
                } else if (w <= own_cap && p.left_adj - w >= 0) {
                    const Cell& pc = at(1 - s, qev, static_cast<int>(p.left_adj - w));
                    if (pc.v < kInf && span_ok(s, p.left_adj, e, w))
                        relax(s, ev, e, pc.v + w, 3, static_cast<int8_t>(1 - s), qev,
                              static_cast<int>(p.left_adj - w), w, false);
                }
            } else {
                // The opposite outer covers the span; its left endpoint is
                // the predecessor, at free distance.
                if (p.right) {
                    const Cell& pc = at(1 - s, qev, p.edge);
                    if (pc.v < kInf)
                        relax(s, ev, e, pc.v + 1, 3, static_cast<int8_t>(1 - s), qev,
                              p.edge, 1, true);
                } else {
                    for (int64_t w = 1; w <= own_cap && p.left_adj - w >= 0; ++w) {
                        const Cell& pc =
                            at(1 - s, qev, static_cast<int>(p.left_adj - w));
                        if (pc.v >= kInf) continue;
                        if (!span_ok(s, p.left_adj, -1, w)) break;
                        relax(s, ev, e, pc.v + w, 3, static_cast<int8_t>(1 - s), qev,
                              static_cast<int>(p.left_adj - w), w, true);
                    }
                }
            }
        }
    }

    struct Final {
        int64_t width = kInf;
        int s = -1, ev = -1, e = -1;
        int64_t tail = 0;
    };

    Final run(int64_t height) {
        hh = height;
        for (int s = 0; s < 2; ++s) {
            Side& sd = side(s);
            const Hull& h = *sd.hull;
            sd.y.resize(static_cast<size_t>(h.m));
            for (int e = 0; e < h.m; ++e)
                sd.y[static_cast<size_t>(e)] =
                    s == 0 ? hh - h.depth[static_cast<size_t>(e)]
                           : h.depth[static_cast<size_t>(e)];
        }
        cells[0].assign(st.evs.size() * static_cast<size_t>(sb.hull->m), Cell{});
        cells[1].assign(sb.evs.size() * static_cast<size_t>(st.hull->m), Cell{});

        struct Ref {
            int measure, s, ev, e;
        };
        std::vector<Ref> order;
        for (int s = 0; s < 2; ++s) {
            const Side& own = cs(s);
            int om = cs(1 - s).hull->m;
            for (int ev = 0; ev < static_cast<int>(own.evs.size()); ++ev)
                for (int e = 0; e < om; ++e)
                    order.push_back(
                        {own.evs[static_cast<size_t>(ev)].left_edges + e, s, ev, e});
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const Ref& a, const Ref& b) { return a.measure < b.measure; });
        for (const Ref& r : order) compute_state(r.s, r.ev, r.e);

        Final best;
        for (int s = 0; s < 2; ++s) {
            const Side& own = cs(s);
            const Side& opp = cs(1 - s);
            int ev = static_cast<int>(own.evs.size()) - 1;
            const Ev& p = own.evs[static_cast<size_t>(ev)];
            int tail = own.hull->m - p.left_edges;
            int e_star = opp.hull->m - 1 - tail;
            if (e_star < 0 || e_star < opp.last_outer) continue;
            const Cell& cell = at(s, ev, e_star);
            if (cell.v >= kInf) continue;
            bool ok = true;
            for (int off = 1; off <= tail && ok; ++off) {
                int64_t ya = own.y[static_cast<size_t>(p.left_adj + off)];
                int64_t yb = opp.y[static_cast<size_t>(e_star + off)];
                int64_t yu = s == 0 ? ya : yb;
                int64_t yl = s == 0 ? yb : ya;
                if (yu < yl + 1) ok = false;
            }
            if (!ok) continue;
            int64_t w = cell.v + tail;
            if (w < best.width) best = Final{w, s, ev, e_star, tail};
        }
        return best;
    }

    // Lay out the witness for the last run() given its final state.
    GridPolygon build_witness(const Final& fin) {
        // Walk the chain; record every EV's column and fill unit edges.
        int mT = st.hull->m, mB = sb.hull->m;
        std::vector<int64_t> left[2];
        std::vector<int64_t> len[2];
        left[0].assign(static_cast<size_t>(mT), -1);
        left[1].assign(static_cast<size_t>(mB), -1);
        len[0].assign(static_cast<size_t>(mT), 1);
        len[1].assign(static_cast<size_t>(mB), 1);
        std::map<std::pair<int, int>, int64_t> ev_col;  // (side, ev) -> column

        int s = fin.s, ev = fin.ev, e = fin.e;
        while (true) {
            const Cell& c = at(s, ev, e);
            const Side& own = cs(s);
            const Ev& p = own.evs[static_cast<size_t>(ev)];
            ev_col[{s, ev}] = c.v;
            int64_t cl = c.v - c.w;  // span start column
            // Own side content.
            if (c.family == 2 || (c.family == 3 && p.right) || c.family == 4) {
                // Own outer covers the span; placed at the R event below.
            } else {
                for (int64_t off = 0; off < c.w; ++off) {
                    int edge = p.left_adj - static_cast<int>(off);
                    left[s][static_cast<size_t>(edge)] = c.v - 1 - off;
                }
            }
            // Opposite side content.
            if (!c.opp_covers) {
                for (int64_t off = 0; off < c.w; ++off) {
                    int edge = e - static_cast<int>(off);
                    left[1 - s][static_cast<size_t>(edge)] = c.v - 1 - off;
                }
            }
            (void)cl;
            if (c.family <= 0 || c.family == 4) break;
            s = c.pside;
            ev = c.pev;
            e = c.pedge;
        }
        // Place outer edges: for every R event, the matching L column (or the
        // wall) pins the extent.
        for (int sd = 0; sd < 2; ++sd) {
            const Side& own = cs(sd);
            for (int evi = 0; evi < static_cast<int>(own.evs.size()); ++evi) {
                const Ev& p = own.evs[static_cast<size_t>(evi)];
                auto itR = ev_col.find({sd, evi});
                if (!p.right || itR == ev_col.end()) continue;
                auto itL = ev_col.find({sd, evi - 1});
                int64_t lcol = 0;
                if (itL != ev_col.end())
                    lcol = itL->second;
                else if (own.evs[static_cast<size_t>(evi - 1)].left_edges != 0)
                    throw std::runtime_error("bbox witness: missing left endpoint");
                left[sd][static_cast<size_t>(p.edge)] = lcol;
                len[sd][static_cast<size_t>(p.edge)] = itR->second - lcol;
                if (len[sd][static_cast<size_t>(p.edge)] < 1)
                    throw std::runtime_error("bbox witness: empty outer edge");
            }
        }
        // Tail edges right of the final state.
        {
            const Side& own = cs(fin.s);
            const Side& opp = cs(1 - fin.s);
            const Ev& p = own.evs[static_cast<size_t>(fin.ev)];
            int64_t c = at(fin.s, fin.ev, fin.e).v;
            for (int off = 1; off <= fin.tail; ++off) {
                left[fin.s][static_cast<size_t>(p.left_adj + off)] = c - 1 + off;
                left[1 - fin.s][static_cast<size_t>(fin.e + off)] = c - 1 + off;
            }
            (void)opp;
        }
        for (int sd = 0; sd < 2; ++sd)
            for (int eidx = 0; eidx < cs(sd).hull->m; ++eidx)
                if (left[sd][static_cast<size_t>(eidx)] < 0)
                    throw std::runtime_error("bbox witness: unplaced edge");
        std::vector<int64_t> ty(static_cast<size_t>(mT)), by(static_cast<size_t>(mB));
        for (int i = 0; i < mT; ++i) ty[static_cast<size_t>(i)] = st.y[static_cast<size_t>(i)];
        for (int i = 0; i < mB; ++i) by[static_cast<size_t>(i)] = sb.y[static_cast<size_t>(i)];
        return polygon_from_hull_geometry(mT, mB, left[0], len[0], ty, left[1],
                                          len[1], by);
    }
};

// ---------------------------------------------------------------------------
// Minimum area
// ---------------------------------------------------------------------------

XResult x_min_area_impl(const TurnSequence& s) {
    HullDecomposition hd = decompose_x(s);
    Hull T = hull_from_rtl(hd.upper_edges);
    Hull B = hull_from_rtl(hd.lower_edges);
    int n = s.size();
    int mT = T.m, mB = B.m;
    int H = n;

    // up-step of the upper/lower chain between edge i-1 and i (0-based ltr).
    auto dT = [&](int i) { return T.step[static_cast<size_t>(i - 1)]; };
    auto dB = [&](int j) { return B.step[static_cast<size_t>(j - 1)]; };

    // T3[i][j][h]: minimum area left of (and including) the column shared by
    // upper edge i and lower edge j at gap h. Parent move: 0 diag, 1 top
    // advance, 2 bottom advance; parent gap stored alongside.
    size_t stride_h = static_cast<size_t>(H) + 1;
    size_t stride_j = static_cast<size_t>(mB) * stride_h;
    std::vector<int64_t> val(static_cast<size_t>(mT) * stride_j, kInf);
    std::vector<uint8_t> mov(val.size(), 255);
    std::vector<int16_t> pgap(val.size(), -1);
    auto idx = [&](int i, int j, int h) {
        return static_cast<size_t>(i) * stride_j + static_cast<size_t>(j) * stride_h +
               static_cast<size_t>(h);
    };
    for (int h = 1; h <= H; ++h) val[idx(0, 0, h)] = h;

    for (int i = 0; i < mT; ++i) {
        for (int j = 0; j < mB; ++j) {
            if (i == 0 && j == 0) continue;
            for (int h = 1; h <= H; ++h) {
                int64_t best = kInf;
                uint8_t bm = 255;
                int16_t bg = -1;
                // Diagonal: both advanced at this column boundary.
                if (i > 0 && j > 0) {
                    int a = dT(i), b = dB(j);
                    for (int g = 1; g <= H; ++g) {
                        bool okv;
                        if (a > 0 && b > 0)
                            okv = h >= 2 && g >= 2;
                        else if (a > 0 && b < 0)
                            okv = h >= g + 2;
                        else if (a < 0 && b > 0)
                            okv = g >= h + 2;
                        else
                            okv = h >= 2 && g >= 2;
                        if (!okv) continue;
                        int64_t pv = val[idx(i - 1, j - 1, g)];
                        if (pv < best) {
                            best = pv;
                            bm = 0;
                            bg = static_cast<int16_t>(g);
                        }
                    }
                }
                // Top advance: lower edge j continues.
                if (i > 0) {
                    int a = dT(i);
                    if (a > 0) {
                        for (int g = 1; g < h; ++g) {
                            int64_t pv = val[idx(i - 1, j, g)];
                            if (pv < best) {
                                best = pv;
                                bm = 1;
                                bg = static_cast<int16_t>(g);
                            }
                        }
                    } else {
                        for (int g = h + 1; g <= H; ++g) {
                            int64_t pv = val[idx(i - 1, j, g)];
                            if (pv < best) {
                                best = pv;
                                bm = 1;
                                bg = static_cast<int16_t>(g);
                            }
                        }
                    }
                }
                // Bottom advance: upper edge i continues.
                if (j > 0) {
                    int b = dB(j);
                    if (b > 0) {
                        for (int g = h + 1; g <= H; ++g) {
                            int64_t pv = val[idx(i, j - 1, g)];
                            if (pv < best) {
                                best = pv;
                                bm = 2;
                                bg = static_cast<int16_t>(g);
                            }
                        }
                    } else {
                        for (int g = 1; g < h; ++g) {
                            int64_t pv = val[idx(i, j - 1, g)];
                            if (pv < best) {
                                best = pv;
                                bm = 2;
                                bg = static_cast<int16_t>(g);
                            }
                        }
                    }
                }
                if (best < kInf) {
                    val[idx(i, j, h)] = best + h;
                    mov[idx(i, j, h)] = bm;
                    pgap[idx(i, j, h)] = bg;
                }
            }
        }
    }

    int64_t best = kInf;
    int best_h = -1;
    for (int h = 1; h <= H; ++h) {
        int64_t v = val[idx(mT - 1, mB - 1, h)];
        if (v < best) {
            best = v;
            best_h = h;
        }
    }
    if (best >= kInf) throw std::runtime_error("area DP infeasible");

    // Backtrack: one state per column, right to left.
    struct Col {
        int i, j, h;
    };
    std::vector<Col> colstates;
    {
        int i = mT - 1, j = mB - 1, h = best_h;
        while (true) {
            colstates.push_back({i, j, h});
            if (i == 0 && j == 0) break;
            uint8_t m = mov[idx(i, j, h)];
            int g = pgap[idx(i, j, h)];
            if (m == 0) {
                i -= 1;
                j -= 1;
            } else if (m == 1) {
                i -= 1;
            } else {
                j -= 1;
            }
            h = g;
        }
    }
    int Wd = static_cast<int>(colstates.size());
    // Levels right to left, then positions.
    std::vector<int64_t> u(static_cast<size_t>(Wd)), l(static_cast<size_t>(Wd));
    int c = Wd - 1;  // rightmost column
    l[static_cast<size_t>(c)] = 0;
    u[static_cast<size_t>(c)] = colstates[0].h;
    for (size_t k = 0; k + 1 < colstates.size(); ++k) {
        const Col& cur = colstates[k];
        const Col& prv = colstates[k + 1];
        int nc = c - 1;
        int64_t hp = prv.h, hcur = cur.h;
        if (prv.i == cur.i) {
            // bottom advanced at this boundary: upper edge continues
            u[static_cast<size_t>(nc)] = u[static_cast<size_t>(c)];
            l[static_cast<size_t>(nc)] = u[static_cast<size_t>(nc)] - hp;
        } else if (prv.j == cur.j) {
            l[static_cast<size_t>(nc)] = l[static_cast<size_t>(c)];
            u[static_cast<size_t>(nc)] = l[static_cast<size_t>(nc)] + hp;
        } else {
            int a = dT(cur.i), b = dB(cur.j);
            int64_t vT, vB;
            if (a > 0 && b > 0) {
                vB = std::max<int64_t>(1, 1 + hp - hcur);
                vT = vB + (hcur - hp);
            } else if (a < 0 && b < 0) {
                vB = std::max<int64_t>(1, 1 + hcur - hp);
                vT = vB + (hp - hcur);
            } else if (a > 0 && b < 0) {
                vT = 1;
                vB = (hcur - hp) - 1;
            } else {
                vT = 1;
                vB = (hp - hcur) - 1;
            }
            u[static_cast<size_t>(nc)] = u[static_cast<size_t>(c)] - a * vT;
            l[static_cast<size_t>(nc)] = l[static_cast<size_t>(c)] - b * vB;
            if (u[static_cast<size_t>(nc)] - l[static_cast<size_t>(nc)] != hp)
                throw std::runtime_error("area DP: inconsistent reconstruction");
        }
        c = nc;
    }

    // Column ranges per hull edge.
    std::vector<int64_t> t_left(static_cast<size_t>(mT), -1), t_len(static_cast<size_t>(mT), 0);
    std::vector<int64_t> b_left(static_cast<size_t>(mB), -1), b_len(static_cast<size_t>(mB), 0);
    std::vector<int64_t> t_y(static_cast<size_t>(mT)), b_y(static_cast<size_t>(mB));
    for (int col = 0; col < Wd; ++col) {
        const Col& cst = colstates[static_cast<size_t>(Wd - 1 - col)];
        if (t_left[static_cast<size_t>(cst.i)] < 0) t_left[static_cast<size_t>(cst.i)] = col;
        t_len[static_cast<size_t>(cst.i)] += 1;
        t_y[static_cast<size_t>(cst.i)] = u[static_cast<size_t>(col)];
        if (b_left[static_cast<size_t>(cst.j)] < 0) b_left[static_cast<size_t>(cst.j)] = col;
        b_len[static_cast<size_t>(cst.j)] += 1;
        b_y[static_cast<size_t>(cst.j)] = l[static_cast<size_t>(col)];
    }
    GridPolygon poly = polygon_from_hull_geometry(mT, mB, t_left, t_len, t_y,
                                                  b_left, b_len, b_y);
    return XResult{best, finish_witness(std::move(poly), hd, s)};
}

}  // namespace

XResult x_min_perimeter(const TurnSequence& s) { return x_min_perimeter_impl(s); }

XResult x_min_area(const TurnSequence& s) { return x_min_area_impl(s); }

XBBoxResult x_min_bbox(const TurnSequence& s) {
    HullDecomposition hd = decompose_x(s);
    Hull T = hull_from_rtl(hd.upper_edges);
    Hull B = hull_from_rtl(hd.lower_edges);
    int n = s.size();
    BBoxSolver solver(T, B);
    int64_t best_area = kInf, best_w = 0, best_h = 0;
    BBoxSolver::Final best_fin;
    int64_t min_width = std::max(T.m, B.m);
    GridPolygon witness;
    for (int64_t h = 1; h <= n; ++h) {
        if (best_area < kInf && h * min_width >= best_area) break;
        auto fin = solver.run(h);
        if (fin.width >= kInf) continue;
        int64_t a = fin.width * h;
        if (a < best_area) {
            best_area = a;
            best_w = fin.width;
            best_h = h;
            // Rebuild immediately: the solver's tables are per-height.
            witness = solver.build_witness(fin);
            best_fin = fin;
        }
    }
    if (best_area >= kInf) throw std::runtime_error("bbox DP found no drawing");
    (void)best_fin;
    return XBBoxResult{best_w, best_h, finish_witness(std::move(witness), hd, s)};
}

}  // namespace minpoly
