#include "billiards/unfolding.hpp"

#include <doctest.h>

#include <vector>

#include "support/random_gen.hpp"
#include "support/seeded_main.hpp"

using namespace billiards;

namespace {

AlphaSpecPtr spec2() { return AlphaSpec::sqrt2(); }

Point pti(long rx, long sx, long ry, long sy, const AlphaSpecPtr& spec) {
    return Point{qel(rx, sx, spec), qel(ry, sy, spec)};
}

Table hand_table() {
    AlphaSpecPtr spec = spec2();
    std::vector<Point> v{
        pti(0, -1, -1, 0, spec), pti(0, 1, -1, 0, spec), pti(0, 1, 1, 0, spec),
        pti(1, 0, 1, 0, spec),   pti(1, 0, 3, 0, spec),  pti(-1, 0, 3, 0, spec),
        pti(-1, 0, 1, 0, spec),  pti(0, -1, 1, 0, spec),
    };
    return build_table(Polygon(v), pti(0, 0, 0, 0, spec), pti(0, 0, 2, 0, spec));
}

Direction launch(long n, const AlphaSpecPtr& spec) {
    long q = n + 1;
    Int p = billiards::floor(qel(0, q, spec));
    return Direction(QElement(Rational(p), Rational(q), spec), qel(1, 0, spec));
}

bool on_ray(const Point& origin, const Direction& d, const Point& p) {
    Direction v = vec(origin, p);
    return cross(v, d).is_zero() && sign(dot(v, d)) >= 0;
}

QElement sq_dist(const Point& a, const Point& b) {
    QElement dx = b.x - a.x, dy = b.y - a.y;
    return dx * dx + dy * dy;
}

bool same_trajectory(const Trajectory& a, const Trajectory& b) {
    if (a.status != b.status || !(a.start == b.start) || a.initial != b.initial ||
        !(a.terminal == b.terminal) || a.bounces.size() != b.bounces.size())
        return false;
    for (std::size_t i = 0; i < a.bounces.size(); ++i) {
        const Bounce& x = a.bounces[i];
        const Bounce& y = b.bounces[i];
        if (!(x.point == y.point) || x.edge_index != y.edge_index || x.incoming != y.incoming ||
            x.outgoing != y.outgoing)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("isometry identity, axis reflections, and anchoring") {
    AlphaSpecPtr spec = spec2();
    Isometry id = Isometry::identity(spec);
    Point p = pti(3, 1, -2, 2, spec);
    CHECK(id.apply(p) == p);

    // line y = 1
    Isometry ry1 = Isometry::reflection_across_line(
        Segment(pti(0, 0, 1, 0, spec), pti(1, 0, 1, 0, spec)));
    CHECK(ry1.apply(pti(3, 0, 5, 0, spec)) == pti(3, 0, -3, 0, spec));
    CHECK(ry1.apply(pti(7, 2, 1, 0, spec)) == pti(7, 2, 1, 0, spec));  // on the line: fixed

    // line x = sqrt2
    Isometry rxa = Isometry::reflection_across_line(
        Segment(pti(0, 1, 0, 0, spec), pti(0, 1, 1, 0, spec)));
    CHECK(rxa.apply(pti(0, 0, 5, 0, spec)) == pti(0, 2, 5, 0, spec));

    // diagonal y = x swaps coordinates
    Isometry rdiag = Isometry::reflection_across_line(
        Segment(pti(0, 0, 0, 0, spec), pti(1, 0, 1, 0, spec)));
    CHECK(rdiag.apply(pti(4, 0, -1, 1, spec)) == pti(-1, 1, 4, 0, spec));

    CHECK(ry1.compose(ry1) == id);
    CHECK(rxa.compose(rxa) == id);
    CHECK(rdiag.compose(rdiag) == id);
}

TEST_CASE("from_parts accepts orthogonal linear parts only") {
    AlphaSpecPtr spec = spec2();
    QElement z = qel(0, 0, spec), o = qel(1, 0, spec);
    QElement h(Rational(0), Rational(1, 2), spec);  // sqrt2 / 2

    // rotation by 45 degrees lives in this field
    Isometry rot = Isometry::from_parts(h, -h, h, h, z, z);
    CHECK(rot.apply_linear(Direction(o, z)) == Direction(h, h));
    CHECK(rot.compose(rot).apply_linear(Direction(o, z)) == Direction(z, o));

    // plain translation
    Isometry shift = Isometry::from_parts(o, z, z, o, qel(5, 0, spec), qel(-3, 0, spec));
    CHECK(shift.apply(pti(1, 0, 1, 0, spec)) == pti(6, 0, -2, 0, spec));
    CHECK(shift.inverse().apply(pti(6, 0, -2, 0, spec)) == pti(1, 0, 1, 0, spec));

    CHECK_THROWS_AS(Isometry::from_parts(o, o, z, o, z, z), InvalidParams);  // shear
    CHECK_THROWS_AS(Isometry::from_parts(qel(2, 0, spec), z, z, o, z, z), InvalidParams);
    CHECK_THROWS_AS(Isometry::from_parts(h, h, h, h, z, z), InvalidParams);  // rank 1
}

TEST_CASE("random reflections: involution, rigidity, composition laws") {
    AlphaSpecPtr spec = spec2();
    testgen::Rng rng(g_seed + 20);
    Isometry id = Isometry::identity(spec);

    for (int trial = 0; trial < 300; ++trial) {
        Point a = rng.point(spec, 10, 4);
        Point b = rng.point(spec, 10, 4);
        if (a == b) continue;
        Isometry r = Isometry::reflection_across_line(Segment(a, b));
        CHECK(r.compose(r) == id);
        CHECK(r.m00() * r.m11() - r.m01() * r.m10() == qel(-1, 0, spec));
        CHECK(r.apply(a) == a);

        Point p = rng.point(spec, 10, 4);
        Point q = rng.point(spec, 10, 4);
        CHECK(sq_dist(r.apply(p), r.apply(q)) == sq_dist(p, q));
    }

    for (int trial = 0; trial < 100; ++trial) {
        // composite of several reflections, still exactly invertible
        Isometry m = id;
        for (int i = 0; i < 5; ++i) {
            Point a = rng.point(spec, 8, 3);
            Point b = rng.point(spec, 8, 3);
            if (a == b) {
                --i;
                continue;
            }
            m = m.compose(Isometry::reflection_across_line(Segment(a, b)));
        }
        CHECK(m.compose(m.inverse()) == id);
        CHECK(m.inverse().compose(m) == id);

        Point a2 = rng.point(spec, 8, 3), b2 = rng.point(spec, 8, 3);
        if (a2 == b2) continue;
        Isometry r = Isometry::reflection_across_line(Segment(a2, b2));
        Point p = rng.point(spec, 8, 3);
        CHECK(m.compose(r).apply(p) == m.apply(r.apply(p)));
        CHECK(m.compose(r).compose(m.inverse()) ==
              m.compose(r.compose(m.inverse())));
    }
}

TEST_CASE("unfolding the first launch straightens it exactly") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    const Trajectory traj = get_trajectory(trace(t, t.origin, launch(0, spec)));
    UnfoldedLine line = unfold(traj);

    CHECK(line.origin == t.origin);
    CHECK(line.direction == traj.initial);
    REQUIRE(line.copies.size() == 2);
    CHECK(line.terminal == pti(2, 2, 2, 0, spec));  // (2 + 2*sqrt2, 2)

    // bounce images land on the straight ray, in order
    Point img0 = line.copies[0].apply(traj.bounces[0].point);
    Point img1 = line.copies[1].apply(traj.bounces[1].point);
    CHECK(img0 == traj.bounces[0].point);  // first wall is fixed by its own reflection
    CHECK(on_ray(line.origin, line.direction, img0));
    CHECK(on_ray(line.origin, line.direction, img1));
    CHECK(on_ray(line.origin, line.direction, line.terminal));
    CHECK(img0.y < img1.y);
    CHECK(img1.y < line.terminal.y);
}

TEST_CASE("every launch unfolds to the closed-form terminal") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    for (long n = 0; n <= 20; ++n) {
        long q = n + 1;
        Int p = billiards::floor(qel(0, q, spec));
        const Trajectory traj = get_trajectory(trace(t, t.origin, launch(n, spec)));
        UnfoldedLine line = unfold(traj);

        CHECK(line.copies.size() == traj.bounces.size());
        Point expected{QElement(Rational(2 * p), Rational(2 * q), spec), qel(2, 0, spec)};
        CHECK(line.terminal == expected);

        QElement prev_y = line.origin.y;
        for (std::size_t i = 0; i < line.copies.size(); ++i) {
            Point img = line.copies[i].apply(traj.bounces[i].point);
            CHECK(on_ray(line.origin, line.direction, img));
            CHECK(prev_y < img.y);
            prev_y = img.y;
        }
    }
}

TEST_CASE("head-on bounces use the perpendicular wall fallback") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    Point start{QElement(Rational(1, 2), Rational(0), spec),
                QElement(Rational(3, 2), Rational(0), spec)};
    TraceResult r = trace(t, start, Direction(qel(0, 0, spec), qel(-1, 0, spec)), 2);
    const Trajectory& traj = get_trajectory(r);
    REQUIRE(traj.bounces.size() == 2);

    UnfoldedLine line = unfold(traj);
    // straight continuation downward: floor copy then roof copy
    Point img1 = line.copies[1].apply(traj.bounces[1].point);
    CHECK(img1 == Point{QElement(Rational(1, 2), Rational(0), spec), qel(-5, 0, spec)});
    CHECK(line.terminal == Point{QElement(Rational(1, 2), Rational(0), spec), qel(-9, 0, spec)});
    CHECK(on_ray(line.origin, line.direction, img1));

    // the same fallback sideways
    TraceResult rh = trace(t, t.origin, Direction(qel(1, 0, spec), qel(0, 0, spec)), 2);
    const Trajectory& th = get_trajectory(rh);
    UnfoldedLine lh = unfold(th);
    CHECK(lh.terminal == pti(0, 5, 0, 0, spec));  // 5*sqrt2 of straight-line travel
}

TEST_CASE("fold rejects bad inputs") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    QElement two = qel(2, 0, spec);
    CHECK_THROWS_AS(fold(t, t.origin, Direction(qel(1, 0, spec), qel(0, 0, spec)), two),
                    InvalidParams);
    CHECK_THROWS_AS(fold(t, t.origin, Direction(qel(1, 0, spec), qel(-1, 0, spec)), two),
                    InvalidParams);
    CHECK_THROWS_AS(fold(t, t.origin, launch(0, spec), qel(0, 0, spec)), InvalidParams);
    CHECK_THROWS_AS(fold(t, pti(5, 0, 5, 0, spec), launch(0, spec), two), PointOutsideTable);
    // rising direction from the roof midpoint escapes the table
    CHECK_THROWS_AS(
        fold(t, pti(0, 0, 3, 0, spec), Direction(qel(0, 0, spec), qel(1, 0, spec)), two),
        DirectionOutward);
}

TEST_CASE("fold reproduces the tracer on every launch") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    QElement two = qel(2, 0, spec);
    for (long n = 0; n <= 20; ++n) {
        const Trajectory traced = get_trajectory(trace(t, t.origin, launch(n, spec)));
        TraceResult folded = fold(t, t.origin, launch(n, spec), two);
        REQUIRE_FALSE(is_corner(folded));
        CHECK(same_trajectory(get_trajectory(folded), traced));
    }
}

TEST_CASE("fold reproduces a dead-corner shot") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    TraceResult folded =
        fold(t, t.origin, Direction(qel(0, 1, spec), qel(1, 0, spec)), qel(1, 0, spec));
    REQUIRE(is_corner(folded));
    CHECK(get_corner(folded).at == pti(0, 1, 1, 0, spec));
    CHECK(get_corner(folded).after_bounces == 0);
}

TEST_CASE("fold agrees with trace on random inward directions") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    testgen::Rng rng(g_seed + 21);

    int done = 0;
    while (done < 100) {
        QElement dx = rng.elem(spec, 6, 3);
        QElement dy = rng.elem(spec, 6, 3);
        if (sign(dy) <= 0) continue;
        Direction d(dx, dy);
        TraceResult r = trace(t, t.origin, d, 60);
        if (is_corner(r)) continue;  // degenerate aim: nothing to round-trip
        const Trajectory& traced = get_trajectory(r);

        UnfoldedLine line = unfold(traced);
        QElement rise = line.terminal.y - t.origin.y;
        REQUIRE(sign(rise) > 0);
        TraceResult folded = fold(t, t.origin, d, rise);
        REQUIRE_FALSE(is_corner(folded));
        CHECK(same_trajectory(get_trajectory(folded), traced));
        ++done;
    }
}

TEST_CASE("corridor coordinates reduce into the fundamental interval") {
    AlphaSpecPtr spec = spec2();
    Table t = hand_table();
    QElement alpha = qel(0, 1, spec);
    QElement two_alpha = qel(0, 2, spec);
    QElement one = qel(1, 0, spec);

    for (long n = 0; n <= 50; ++n) {
        long q = n + 1;
        Int p_int = billiards::floor(qel(0, q, spec));
        long long p = p_int.get_si();
        QElement lambda = QElement(Rational(p_int), Rational(-q), spec);

        CorridorPair at1 = corridor_position(one, p, q, lambda);
        CHECK(at1.x_even == lambda);
        CHECK(at1.x_odd == -lambda);

        // interior heights stay in [-alpha, alpha) and differ from z by an
        // even multiple of alpha
        for (long num = 0; num <= 4; ++num) {
            QElement y(Rational(num, 4), Rational(0), spec);
            CorridorPair pair = corridor_position(y, p, q, lambda);
            QElement z = y * QElement(Rational(p_int), Rational(q), spec);
            for (const QElement* x : {&pair.x_even, &pair.x_odd}) {
                CHECK(-alpha <= *x);
                CHECK(*x < alpha);
            }
            QElement k_even = (z - pair.x_even) / two_alpha;
            QElement k_sum = (pair.x_even + pair.x_odd) / two_alpha;
            CHECK(k_even.is_rational());
            CHECK(k_even.r().get_den() == 1);
            CHECK(k_sum.is_rational());
            CHECK(k_sum.r().get_den() == 1);
        }

        // the slit crossing realized by the traced path picks the parity of q
        const Trajectory traj = get_trajectory(trace(t, t.origin, launch(n, spec)));
        std::vector<Point> cr = crossing_at_height(traj, one);
        REQUIRE(cr.size() == 1);
        CHECK(cr[0].x == (q % 2 == 0 ? at1.x_even : at1.x_odd));
    }
}

TEST_CASE("corridor_position validates its inputs") {
    AlphaSpecPtr spec = spec2();
    QElement one = qel(1, 0, spec);
    QElement lambda0 = qel(1, -1, spec);  // 1 - sqrt2
    CHECK_NOTHROW(corridor_position(one, 1, 1, lambda0));
    CHECK_THROWS_AS(corridor_position(one, 1, 1, qel(2, -1, spec)), InvalidParams);
    CHECK_THROWS_AS(corridor_position(QElement(Rational(-1, 2), Rational(0), spec), 1, 1, lambda0),
                    InvalidParams);
    CHECK_THROWS_AS(corridor_position(QElement(Rational(3, 2), Rational(0), spec), 1, 1, lambda0),
                    InvalidParams);
}
