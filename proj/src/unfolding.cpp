#include "billiards/unfolding.hpp"

#include <optional>
#include <utility>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

QElement zero_of(const AlphaSpecPtr& spec) { return qel(0, 0, spec); }
QElement one_of(const AlphaSpecPtr& spec) { return qel(1, 0, spec); }

// Wall direction at a bounce. Specular reflection gives in + out parallel to
// the wall unless the hit is perpendicular, where in + out = 0 and the wall
// is the perp of the incoming direction.
Direction wall_direction(const Bounce& b) {
    QElement wx = b.incoming.dx + b.outgoing.dx;
    QElement wy = b.incoming.dy + b.outgoing.dy;
    if (wx.is_zero() && wy.is_zero()) return Direction(-b.incoming.dy, b.incoming.dx);
    return Direction(std::move(wx), std::move(wy));
}

}  // namespace

Isometry::Isometry(QElement m00, QElement m01, QElement m10, QElement m11, QElement tx,
                   QElement ty)
    : m00_(std::move(m00)),
      m01_(std::move(m01)),
      m10_(std::move(m10)),
      m11_(std::move(m11)),
      tx_(std::move(tx)),
      ty_(std::move(ty)) {}

Isometry Isometry::identity(const AlphaSpecPtr& spec) {
    QElement z = zero_of(spec);
    QElement o = one_of(spec);
    return Isometry(o, z, z, o, z, z);
}

Isometry Isometry::reflection_across_line(const Segment& seg) {
    Direction w = seg.direction();
    QElement nn = w.dx * w.dx + w.dy * w.dy;
    QElement m00 = (w.dx * w.dx - w.dy * w.dy) / nn;
    QElement m01 = qel(2, 0, nn.spec()) * w.dx * w.dy / nn;
    QElement m10 = m01;
    QElement m11 = -m00;
    // Fix the anchor point: t = a - M*a.
    QElement tx = seg.a.x - (m00 * seg.a.x + m01 * seg.a.y);
    QElement ty = seg.a.y - (m10 * seg.a.x + m11 * seg.a.y);
    return Isometry(std::move(m00), std::move(m01), std::move(m10), std::move(m11),
                    std::move(tx), std::move(ty));
}

Isometry Isometry::from_parts(QElement m00, QElement m01, QElement m10, QElement m11,
                              QElement tx, QElement ty) {
    const AlphaSpecPtr& spec = m00.spec();
    QElement one = one_of(spec);
    QElement zero = zero_of(spec);
    bool orthogonal = m00 * m00 + m10 * m10 == one && m01 * m01 + m11 * m11 == one &&
                      m00 * m01 + m10 * m11 == zero;
    if (!orthogonal) throw InvalidParams("isometry linear part is not orthogonal");
    return Isometry(std::move(m00), std::move(m01), std::move(m10), std::move(m11),
                    std::move(tx), std::move(ty));
}

Point Isometry::apply(const Point& p) const {
    return Point{m00_ * p.x + m01_ * p.y + tx_, m10_ * p.x + m11_ * p.y + ty_};
}

Direction Isometry::apply_linear(const Direction& d) const {
    return Direction(m00_ * d.dx + m01_ * d.dy, m10_ * d.dx + m11_ * d.dy);
}

Isometry Isometry::compose(const Isometry& inner) const {
    return Isometry(m00_ * inner.m00_ + m01_ * inner.m10_,
                    m00_ * inner.m01_ + m01_ * inner.m11_,
                    m10_ * inner.m00_ + m11_ * inner.m10_,
                    m10_ * inner.m01_ + m11_ * inner.m11_,
                    m00_ * inner.tx_ + m01_ * inner.ty_ + tx_,
                    m10_ * inner.tx_ + m11_ * inner.ty_ + ty_);
}

Isometry Isometry::inverse() const {
    // Orthogonal linear part: inverse is the transpose.
    QElement itx = -(m00_ * tx_ + m10_ * ty_);
    QElement ity = -(m01_ * tx_ + m11_ * ty_);
    return Isometry(m00_, m10_, m01_, m11_, std::move(itx), std::move(ity));
}

UnfoldedLine unfold(const Trajectory& traj) {
    const AlphaSpecPtr& spec = traj.start.x.spec();
    Isometry cum = Isometry::identity(spec);
    std::vector<Isometry> copies;
    copies.reserve(traj.bounces.size());
    for (const Bounce& b : traj.bounces) {
        Segment wall(b.point, advance(b.point, one_of(spec), wall_direction(b)));
        cum = cum.compose(Isometry::reflection_across_line(wall));
        copies.push_back(cum);
    }
    Point terminal = copies.empty() ? traj.terminal : copies.back().apply(traj.terminal);
    return UnfoldedLine{traj.start, traj.initial, std::move(copies), std::move(terminal)};
}

TraceResult fold(const Table& table, const Point& origin, const Direction& d,
                 const QElement& rise) {
    if (sign(d.dy) <= 0) throw InvalidParams("fold requires a direction with dy > 0");
    if (sign(rise) <= 0) throw InvalidParams("fold requires rise > 0");
    Containment where = contains(table.polygon, origin);
    if (where == Containment::Outside) throw PointOutsideTable("fold origin");

    const Polygon& poly = table.polygon;
    const std::size_t n = poly.size();
    QElement t_star = rise / d.dy;
    Point exit_unfolded = advance(origin, t_star, d);

    Isometry cum = Isometry::identity(rise.spec());
    Isometry cum_inv = cum;
    QElement t_cur = zero_of(rise.spec());
    std::vector<Bounce> bounces;
    std::vector<std::size_t> excluded;
    if (where == Containment::Boundary) {
        excluded = edges_containing(poly, origin);
        if (!points_strictly_inward(poly, excluded, origin, d)) throw DirectionOutward();
    }

    for (;;) {
        std::optional<RayHit> best;
        std::size_t best_edge = 0;
        bool tie = false;
        for (std::size_t j = 0; j < n; ++j) {
            bool skip = false;
            for (std::size_t e : excluded)
                if (e == j) skip = true;
            if (skip) continue;
            Segment img(cum.apply(poly.edge(j).a), cum.apply(poly.edge(j).b));
            auto hit = ray_hit(origin, d, img);
            if (!hit || hit->t <= t_cur) continue;
            if (!best || hit->t < best->t) {
                best = hit;
                best_edge = j;
                tie = false;
            } else if (hit->t == best->t) {
                tie = true;
            }
        }
        if (!best) throw Error("fold: ray escaped every table copy");

        if (t_star <= best->t) {
            Point folded_exit = t_star == best->t ? cum_inv.apply(best->point)
                                                  : cum_inv.apply(exit_unfolded);
            if (folded_exit == table.target)
                return Trajectory{origin, d, std::move(bounces), std::move(folded_exit),
                                  TraceStatus::ReachedTarget};
            if (t_star == best->t && (tie || best->cls == HitClass::Endpoint))
                return CornerHit{std::move(folded_exit), bounces.size()};
            return Trajectory{origin, d, std::move(bounces), std::move(folded_exit),
                              TraceStatus::BudgetExhausted};
        }

        if (tie || best->cls == HitClass::Endpoint)
            return CornerHit{cum_inv.apply(best->point), bounces.size()};

        Direction incoming = cum_inv.apply_linear(d);
        Isometry refl = Isometry::reflection_across_line(poly.edge(best_edge));
        cum = cum.compose(refl);
        cum_inv = refl.compose(cum_inv);  // reflections are involutions
        bounces.push_back(Bounce{cum_inv.apply(best->point), best_edge, std::move(incoming),
                                 cum_inv.apply_linear(d)});
        t_cur = best->t;
        excluded.assign(1, best_edge);
    }
}

namespace {

// z - 2k*alpha with k = floor(z/(2*alpha) + 1/2), landing in [-alpha, alpha).
QElement reduce_mod_two_alpha(const QElement& z) {
    const AlphaSpecPtr& spec = z.spec();
    QElement two_alpha = qel(0, 2, spec);
    Int k = floor(z / two_alpha + qel(rational(1, 2), Rational(0), spec));
    return z - QElement(Rational(0), rational(2 * k, Int(1)), spec);
}

}  // namespace

CorridorPair corridor_position(const QElement& y, long long p, long long q,
                               const QElement& lambda) {
    const AlphaSpecPtr& spec = lambda.spec();
    y.require_same_field(lambda);
    if (sign(y) < 0 || qel(1, 0, spec) < y)
        throw InvalidParams("corridor_position requires 0 <= y <= 1");
    QElement z = y * qel(rational(p), rational(q), spec);
    CorridorPair out{reduce_mod_two_alpha(z), reduce_mod_two_alpha(-z)};
    if (y == qel(1, 0, spec) && abs(out.x_even) != abs(lambda))
        throw InvalidParams("corridor_position: lambda inconsistent with (p, q) at y = 1");
    return out;
}

}  // namespace billiards
