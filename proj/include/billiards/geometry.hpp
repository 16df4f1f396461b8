#ifndef BILLIARDS_GEOMETRY_HPP
#define BILLIARDS_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "billiards/qfield.hpp"

namespace billiards {

struct Point {
    QElement x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Unnormalized direction vector; unit vectors would need square roots that
/// leave the field. All predicates below are homogeneous in the direction.
struct Direction {
    QElement dx, dy;

    Direction(QElement dx_, QElement dy_) : dx(std::move(dx_)), dy(std::move(dy_)) {
        if (dx.is_zero() && dy.is_zero())
            throw InvalidParams("direction must be nonzero");
    }

    friend bool operator==(const Direction& a, const Direction& b) {
        return a.dx == b.dx && a.dy == b.dy;
    }
    friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
};

struct Segment {
    Point a, b;

    Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) throw InvalidParams("segment endpoints must be distinct");
    }

    Direction direction() const { return Direction(b.x - a.x, b.y - a.y); }
};

QElement dot(const Direction& a, const Direction& b);
QElement cross(const Direction& a, const Direction& b);
Direction vec(const Point& from, const Point& to);
Point advance(const Point& p, const QElement& t, const Direction& d);

/// Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear, -1 right.
int orient(const Point& p, const Point& q, const Point& r);

/// True iff p lies on the closed segment.
bool on_segment(const Segment& seg, const Point& p);

/// Specular reflection of d at a wall with direction w: 2 (d.w / w.w) w - d.
/// Involutive and squared-length preserving; no normalization needed.
Direction reflect_direction(const Direction& d, const Direction& w);

enum class HitClass { Interior, Endpoint };

struct RayHit {
    QElement t;
    Point point;
    HitClass cls;
};

/// Smallest t > 0 with origin + t*d on seg, if any. Endpoint coincidence is
/// classified Endpoint; parallel disjoint rays yield nullopt; collinear
/// overlap reports the nearest endpoint ahead as an Endpoint hit.
std::optional<RayHit> ray_hit(const Point& origin, const Direction& d, const Segment& seg);

enum class Containment { Inside, Boundary, Outside };

/// Simple polygon with exact vertices. Construction verifies: >= 3 vertices,
/// consecutive vertices distinct, no three consecutive collinear, CCW
/// orientation, and simplicity by exact pairwise segment tests.
class Polygon {
  public:
    explicit Polygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Segment edge(std::size_t i) const;

  private:
    std::vector<Point> vertices_;
};

/// Exact point classification: boundary detection first, then crossing number.
Containment contains(const Polygon& poly, const Point& p);

}  // namespace billiards

#endif
