#include "minpoly/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace minpoly::oracle {

int64_t objective_value(const Measures& m, Objective obj) {
    switch (obj) {
        case Objective::Area: return m.area;
        case Objective::Perimeter: return m.perimeter;
        case Objective::BBox: return m.bbox_w * m.bbox_h;
    }
    return 0;
}

namespace {

struct Extent {
    int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0, perim = 0;
};

struct Walker {
    const TurnSequence& s;
    int n;
    int64_t lmax;
    const std::function<bool(const GridPolygon&)>& sink;
    std::vector<Direction> dirs;
    std::vector<Point> pts;
    // Remaining edge counts per axis direction from index i on.
    std::vector<int> rem_pos_x, rem_neg_x, rem_pos_y, rem_neg_y;
    bool stopped = false;
    // Strict branch-and-bound: prune only when the partial lower bound
    // exceeds *best, so ties (and the lexicographic witness) survive.
    Objective objective = Objective::Area;
    const int64_t* best = nullptr;

    explicit Walker(const TurnSequence& seq, int64_t bound,
                    const std::function<bool(const GridPolygon&)>& cb)
        : s(seq), n(seq.size()), lmax(bound), sink(cb) {
        dirs = directions(s, Direction::East);
        pts.assign(static_cast<size_t>(n) + 1, Point{0, 0});
        rem_pos_x.assign(static_cast<size_t>(n) + 1, 0);
        rem_neg_x.assign(static_cast<size_t>(n) + 1, 0);
        rem_pos_y.assign(static_cast<size_t>(n) + 1, 0);
        rem_neg_y.assign(static_cast<size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i) {
            rem_pos_x[static_cast<size_t>(i)] = rem_pos_x[static_cast<size_t>(i) + 1];
            rem_neg_x[static_cast<size_t>(i)] = rem_neg_x[static_cast<size_t>(i) + 1];
            rem_pos_y[static_cast<size_t>(i)] = rem_pos_y[static_cast<size_t>(i) + 1];
            rem_neg_y[static_cast<size_t>(i)] = rem_neg_y[static_cast<size_t>(i) + 1];
            switch (dirs[static_cast<size_t>(i)]) {
                case Direction::East: rem_pos_x[static_cast<size_t>(i)]++; break;
                case Direction::West: rem_neg_x[static_cast<size_t>(i)]++; break;
                case Direction::North: rem_pos_y[static_cast<size_t>(i)]++; break;
                case Direction::South: rem_neg_y[static_cast<size_t>(i)]++; break;
            }
        }
    }

    bool closable(int i, const Point& cur) const {
        int px = rem_pos_x[static_cast<size_t>(i)], nx = rem_neg_x[static_cast<size_t>(i)];
        int py = rem_pos_y[static_cast<size_t>(i)], ny = rem_neg_y[static_cast<size_t>(i)];
        if (cur.x + px - nx * lmax > 0 || cur.x + px * lmax - nx < 0) return false;
        if (cur.y + py - ny * lmax > 0 || cur.y + py * lmax - ny < 0) return false;
        return true;
    }

    bool pruned(int i, const Extent& e) const {
        if (!best) return false;
        int64_t w = e.xmax - e.xmin, h = e.ymax - e.ymin;
        int64_t lb = 0;
        switch (objective) {
            case Objective::Area:
                // A connected region spanning w columns and h rows has at
                // least w + h - 1 cells.
                lb = w + h - 1;
                break;
            case Objective::Perimeter:
                lb = e.perim + (n - i);
                break;
            case Objective::BBox:
                lb = w * h;
                break;
        }
        return lb > *best;
    }

    bool hits_earlier(int i, const Point& a, const Point& b) const {
        int64_t lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
        int64_t lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
        for (int j = 0; j < i - 1; ++j) {
            const Point& c = pts[static_cast<size_t>(j)];
            const Point& d = pts[static_cast<size_t>(j) + 1];
            if (std::max(lo_x, std::min(c.x, d.x)) > std::min(hi_x, std::max(c.x, d.x)))
                continue;
            if (std::max(lo_y, std::min(c.y, d.y)) > std::min(hi_y, std::max(c.y, d.y)))
                continue;
            if (j == 0 && i == n - 1) continue;  // closing edge touches vertex 0
            return true;
        }
        return false;
    }

    void rec(int i, const Extent& ext) {
        if (stopped) return;
        const Point& cur = pts[static_cast<size_t>(i)];
        if (i == n) {
            if (cur != Point{0, 0}) return;
            std::vector<Point> verts(pts.begin(), pts.end() - 1);
            if (!is_simple(verts)) return;
            GridPolygon poly(std::move(verts));
            if (!sink(poly)) stopped = true;
            return;
        }
        Direction d = dirs[static_cast<size_t>(i)];
        for (int64_t len = 1; len <= lmax; ++len) {
            Point nxt = cur;
            switch (d) {
                case Direction::East: nxt.x += len; break;
                case Direction::West: nxt.x -= len; break;
                case Direction::North: nxt.y += len; break;
                case Direction::South: nxt.y -= len; break;
            }
            Extent e = ext;
            e.xmin = std::min(e.xmin, nxt.x);
            e.xmax = std::max(e.xmax, nxt.x);
            e.ymin = std::min(e.ymin, nxt.y);
            e.ymax = std::max(e.ymax, nxt.y);
            e.perim = ext.perim + len;
            // Larger lengths only grow the extents, so the bound is monotone.
            if (pruned(i + 1, e)) break;
            if (!closable(i + 1, nxt)) continue;
            if (i > 0 && hits_earlier(i, cur, nxt)) continue;
            pts[static_cast<size_t>(i) + 1] = nxt;
            rec(i + 1, e);
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_realizations(const TurnSequence& s, const OracleConfig& cfg,
                            const std::function<bool(const GridPolygon&)>& sink) {
    auto rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument("enumerate_realizations: " + rep.message());
    if (s.size() > cfg.size_guard) throw InstanceTooLarge(s.size(), cfg.size_guard);
    Walker w(s, cfg.max_edge_len, sink);
    w.rec(0, Extent{});
}

std::vector<GridPolygon> all_realizations(const TurnSequence& s,
                                          const OracleConfig& cfg) {
    std::vector<GridPolygon> out;
    enumerate_realizations(s, cfg, [&](const GridPolygon& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace {

struct BestTracker {
    bool have = false;
    int64_t value = INT64_MAX;
    GridPolygon witness;
    int64_t max_edge = 0;

    void offer(const GridPolygon& p, Objective obj) {
        Measures m = measures(p);
        int64_t v = objective_value(m, obj);
        if (!have || v < value || (v == value && p.vertices() < witness.vertices())) {
            have = true;
            value = v;
            witness = p;
            max_edge = 0;
            for (int i = 0; i < p.size(); ++i)
                max_edge = std::max(max_edge, p.edge_length(i));
        }
    }
};

}  // namespace

OracleResult oracle_min(const TurnSequence& s, OracleConfig cfg) {
    auto rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument("oracle_min: " + rep.message());
    if (s.size() > cfg.size_guard) throw InstanceTooLarge(s.size(), cfg.size_guard);

    std::optional<int64_t> prev_value;
    while (true) {
        BestTracker best;
        {
            auto sink = [&](const GridPolygon& p) {
                best.offer(p, cfg.objective);
                return true;
            };
            std::function<bool(const GridPolygon&)> f = sink;
            Walker w(s, cfg.max_edge_len, f);
            w.objective = cfg.objective;
            w.best = &best.value;
            w.rec(0, Extent{});
        }
        if (!best.have) {
            if (!cfg.escalate) throw NoRealizationWithinBound();
            cfg.max_edge_len += 1;
            continue;
        }
        bool stable = prev_value.has_value() && *prev_value == best.value;
        bool clear_of_bound = best.max_edge < cfg.max_edge_len;
        if (!cfg.escalate || clear_of_bound || stable)
            return OracleResult{best.value, best.witness, cfg.max_edge_len};
        prev_value = best.value;
        cfg.max_edge_len += 1;
    }
}

std::vector<TurnSequence> all_sequences(int n, bool dedupe_rotations,
                                        int size_guard) {
    if (n > size_guard) throw InstanceTooLarge(n, size_guard);
    std::vector<TurnSequence> out;
    if (n < 4 || n % 2 != 0) return out;
    int r = (n - 4) / 2;
    std::vector<int> pos(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) pos[static_cast<size_t>(i)] = i;
    auto emit = [&]() {
        TurnSequence s;
        s.turns.assign(static_cast<size_t>(n), Turn::L);
        for (int i : pos) s.turns[static_cast<size_t>(i)] = Turn::R;
        if (dedupe_rotations) {
            std::string w = s.str();
            std::string doubled = w + w;
            for (int k = 1; k < n; ++k)
                if (doubled.compare(static_cast<size_t>(k), static_cast<size_t>(n), w) < 0)
                    return;
        }
        out.push_back(std::move(s));
    };
    if (r == 0) {
        emit();
        return out;
    }
    while (true) {
        emit();
        int i = r - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        pos[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < r; ++j)
            pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

DeltaResult delta_Delta(int n, int size_guard) {
    auto seqs = all_sequences(n, /*dedupe_rotations=*/true, size_guard);
    if (seqs.empty()) throw std::invalid_argument("delta_Delta: no sequences");

    std::vector<int64_t> minima(seqs.size(), 0);
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::max(1u, std::min<unsigned>(hw, 8));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= seqs.size()) break;
            OracleConfig cfg;
            cfg.objective = Objective::Area;
            cfg.escalate = true;
            cfg.size_guard = size_guard;
            minima[i] = oracle_min(seqs[i], cfg).value;
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    DeltaResult r;
    r.delta = *std::min_element(minima.begin(), minima.end());
    r.Delta = *std::max_element(minima.begin(), minima.end());
    return r;
}

}  // namespace minpoly::oracle
