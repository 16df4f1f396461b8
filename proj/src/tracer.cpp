#include "billiards/tracer.hpp"

#include <utility>

namespace billiards {

Table build_table(Polygon poly, Point origin, Point target) {
    if (origin == target) throw CoincidentMarkedPoints();
    if (contains(poly, origin) == Containment::Outside) throw PointOutsideTable("origin");
    if (contains(poly, target) == Containment::Outside) throw PointOutsideTable("target");
    return Table{std::move(poly), std::move(origin), std::move(target)};
}

std::vector<std::size_t> edges_containing(const Polygon& poly, const Point& p) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (on_segment(poly.edge(i), p)) idx.push_back(i);
    return idx;
}

// Strict inwardness of d at a boundary point. For CCW polygons the interior
// lies to the left of each edge.
bool points_strictly_inward(const Polygon& poly, const std::vector<std::size_t>& edges,
                            const Point& p, const Direction& d) {
    if (edges.size() == 1) {
        Segment e = poly.edge(edges[0]);
        return cross(e.direction(), d).sign() > 0;
    }
    if (edges.size() == 2) {
        // p is the vertex shared by edge prev (u -> p) and edge next (p -> w).
        std::size_t prev = edges[0], next = edges[1];
        if (poly.edge(prev).a == p) std::swap(prev, next);
        const Point& u = poly.edge(prev).a;
        const Point& w = poly.edge(next).b;
        bool left_of_prev = cross(vec(u, p), d).sign() > 0;
        bool left_of_next = cross(vec(p, w), d).sign() > 0;
        return orient(u, p, w) > 0 ? (left_of_prev && left_of_next)
                                   : (left_of_prev || left_of_next);
    }
    return false;
}

TraceResult trace(const Table& table, const Point& start, const Direction& d, int max_bounces) {
    const Polygon& poly = table.polygon;
    Containment where = contains(poly, start);
    if (where == Containment::Outside) throw PointOutsideTable("trace start");

    std::vector<std::size_t> excluded;
    if (where == Containment::Boundary) {
        excluded = edges_containing(poly, start);
        if (!points_strictly_inward(poly, excluded, start, d)) throw DirectionOutward();
    }

    Point pos = start;
    Direction dir = d;
    std::vector<Bounce> bounces;
    if (start == table.target)
        return Trajectory{start, d, {}, start, TraceStatus::ReachedTarget};

    for (;;) {
        // Nearest wall intersection ahead, departed edge(s) excluded: a straight
        // step meets the line of the departed wall only at parameter 0.
        std::optional<RayHit> best;
        std::size_t best_edge = 0;
        bool tie = false;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            bool skip = false;
            for (std::size_t ex : excluded) skip = skip || (ex == j);
            if (skip) continue;
            std::optional<RayHit> h = ray_hit(pos, dir, poly.edge(j));
            if (!h) continue;
            if (!best || h->t < best->t) {
                best = std::move(h);
                best_edge = j;
                tie = false;
            } else if (h->t == best->t) {
                tie = true;
            }
        }
        if (!best) throw Error("trajectory escaped the table");  // unreachable on valid tables

        // Target first: a target lying exactly on the current segment ends the
        // trace at the target, not at the wall beyond it.
        if (on_segment(Segment(pos, best->point), table.target))
            return Trajectory{start, d, std::move(bounces), table.target,
                              TraceStatus::ReachedTarget};

        if (tie || best->cls == HitClass::Endpoint)
            return CornerHit{best->point, bounces.size()};

        if (static_cast<long long>(bounces.size()) >= max_bounces)
            return Trajectory{start, d, std::move(bounces), best->point,
                              TraceStatus::BudgetExhausted};

        Direction wall = poly.edge(best_edge).direction();
        Direction out = reflect_direction(dir, wall);
        bounces.push_back(Bounce{best->point, best_edge, dir, out});
        pos = best->point;
        dir = out;
        excluded.assign(1, best_edge);
    }
}

std::vector<Point> chain(const Trajectory& traj) {
    std::vector<Point> pts;
    pts.reserve(traj.bounces.size() + 2);
    pts.push_back(traj.start);
    for (const Bounce& b : traj.bounces) pts.push_back(b.point);
    pts.push_back(traj.terminal);
    return pts;
}

bool passes_through(const Trajectory& traj, const Point& p) {
    std::vector<Point> pts = chain(traj);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] == pts[i + 1]) continue;
        if (on_segment(Segment(pts[i], pts[i + 1]), p)) return true;
    }
    return false;
}

std::vector<Point> crossing_at_height(const Trajectory& traj, const QElement& y0) {
    std::vector<Point> pts = chain(traj);
    std::vector<Point> out;
    auto push = [&out](Point p) {
        if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point& p = pts[i];
        const Point& q = pts[i + 1];
        int sp = (p.y - y0).sign();
        int sq = (q.y - y0).sign();
        if (sp == 0 && sq == 0) {
            push(p);
            push(q);
        } else if (sp == 0) {
            push(p);
        } else if (sq == 0) {
            push(q);
        } else if (sp * sq < 0) {
            QElement x = p.x + (y0 - p.y) * (q.x - p.x) / (q.y - p.y);
            push(Point{std::move(x), y0});
        }
    }
    return out;
}

BounceSplit bounce_counts_split(const Trajectory& traj, const QElement& y0) {
    std::vector<Point> crossings = crossing_at_height(traj, y0);
    if (crossings.size() != 1) throw AmbiguousCrossing(crossings.size());
    const Point& c = crossings[0];
    std::vector<Point> pts = chain(traj);
    const long long total = static_cast<long long>(traj.bounces.size());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!on_segment(Segment(pts[i], pts[i + 1]), c)) continue;
        long long below = static_cast<long long>(i);
        bool at_bounce = (i + 1 < pts.size() - 1) && c == pts[i + 1];
        return BounceSplit{below, total - below - (at_bounce ? 1 : 0)};
    }
    throw Error("crossing point not on trajectory chain");  // unreachable
}

}  // namespace billiards
