#include "billiards/geometry.hpp"

#include <utility>

namespace billiards {

QElement dot(const Direction& a, const Direction& b) { return a.dx * b.dx + a.dy * b.dy; }

QElement cross(const Direction& a, const Direction& b) { return a.dx * b.dy - a.dy * b.dx; }

Direction vec(const Point& from, const Point& to) {
    return Direction(to.x - from.x, to.y - from.y);
}

Point advance(const Point& p, const QElement& t, const Direction& d) {
    return Point{p.x + t * d.dx, p.y + t * d.dy};
}

int orient(const Point& p, const Point& q, const Point& r) {
    QElement c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return c.sign();
}

bool on_segment(const Segment& seg, const Point& p) {
    if (orient(seg.a, seg.b, p) != 0) return false;
    // Collinear: between iff (p-a).(p-b) <= 0.
    QElement d = (p.x - seg.a.x) * (p.x - seg.b.x) + (p.y - seg.a.y) * (p.y - seg.b.y);
    return d.sign() <= 0;
}

Direction reflect_direction(const Direction& d, const Direction& w) {
    QElement scale = dot(d, w) / dot(w, w);
    QElement two = scale + scale;
    return Direction(two * w.dx - d.dx, two * w.dy - d.dy);
}

std::optional<RayHit> ray_hit(const Point& origin, const Direction& d, const Segment& seg) {
    Direction e = seg.direction();
    Direction qa = vec(origin, seg.a);
    QElement denom = cross(d, e);
    if (denom.sign() != 0) {
        QElement t = cross(qa, e) / denom;
        if (t.sign() <= 0) return std::nullopt;
        QElement u = cross(qa, d) / denom;
        int su = u.sign();
        int su1 = (u - qel(1, 0, u.spec())).sign();
        if (su < 0 || su1 > 0) return std::nullopt;
        HitClass cls = (su == 0 || su1 == 0) ? HitClass::Endpoint : HitClass::Interior;
        Point p = su == 0 ? seg.a : (su1 == 0 ? seg.b : advance(origin, t, d));
        return RayHit{std::move(t), std::move(p), cls};
    }
    // Parallel: a collinear overlap reports the nearest endpoint ahead.
    if (cross(qa, d).sign() != 0) return std::nullopt;
    QElement dd = dot(d, d);
    QElement ta = dot(qa, d) / dd;
    QElement tb = dot(vec(origin, seg.b), d) / dd;
    const bool a_ahead = ta.sign() > 0;
    const bool b_ahead = tb.sign() > 0;
    if (!a_ahead && !b_ahead) return std::nullopt;
    if (a_ahead && (!b_ahead || ta < tb)) return RayHit{std::move(ta), seg.a, HitClass::Endpoint};
    return RayHit{std::move(tb), seg.b, HitClass::Endpoint};
}

namespace {

// Closed-segment intersection test (any shared point counts).
bool segments_intersect(const Segment& s1, const Segment& s2) {
    int d1 = orient(s2.a, s2.b, s1.a);
    int d2 = orient(s2.a, s2.b, s1.b);
    int d3 = orient(s1.a, s1.b, s2.a);
    int d4 = orient(s1.a, s1.b, s2.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(s2, s1.a)) return true;
    if (d2 == 0 && on_segment(s2, s1.b)) return true;
    if (d3 == 0 && on_segment(s1, s2.a)) return true;
    if (d4 == 0 && on_segment(s1, s2.b)) return true;
    return false;
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw InvalidParams("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i] == vertices_[(i + 1) % n])
            throw InvalidParams("polygon has coincident consecutive vertices");
        if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) == 0)
            throw InvalidParams("polygon has three consecutive collinear vertices");
    }
    // Orientation: doubled signed area must be positive (counterclockwise).
    QElement area2 = qel(0, 0, vertices_[0].x.spec());
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n];
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2.sign() <= 0) throw InvalidParams("polygon vertices must be counterclockwise");
    // Simplicity in O(E^2) exact pair tests; tables here are tiny.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;  // meet only at the shared vertex, checked above
            if (segments_intersect(edge(i), edge(j)))
                throw InvalidParams("polygon is not simple");
        }
    }
}

Segment Polygon::edge(std::size_t i) const {
    return Segment(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
}

Containment contains(const Polygon& poly, const Point& p) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(poly.edge(i), p)) return Containment::Boundary;
    // Crossing number against the rightward horizontal ray, half-open in y so
    // vertices on the ray are counted once.
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices()[i];
        const Point& b = poly.vertices()[(i + 1) % n];
        const bool a_above = (a.y - p.y).sign() > 0;
        const bool b_above = (b.y - p.y).sign() > 0;
        if (a_above == b_above) continue;
        QElement x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if ((x_int - p.x).sign() > 0) ++crossings;
    }
    return crossings % 2 == 1 ? Containment::Inside : Containment::Outside;
}

}  // namespace billiards
