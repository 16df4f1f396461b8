#ifndef BILLIARDS_UNFOLDING_HPP
#define BILLIARDS_UNFOLDING_HPP

#include <vector>

#include "billiards/tracer.hpp"

namespace billiards {

/// Plane isometry with exact entries: orthogonal linear part (det +-1) plus a
/// translation. Built here as compositions of reflections across wall lines.
class Isometry {
  public:
    static Isometry identity(const AlphaSpecPtr& spec);

    /// Reflection across the infinite line through seg.
    static Isometry reflection_across_line(const Segment& seg);

    /// Assemble from raw entries; rejects non-orthogonal linear parts.
    static Isometry from_parts(QElement m00, QElement m01, QElement m10, QElement m11,
                               QElement tx, QElement ty);

    Point apply(const Point& p) const;
    Direction apply_linear(const Direction& d) const;

    /// this after inner: (this o inner)(p) = this(inner(p)).
    Isometry compose(const Isometry& inner) const;

    /// Exact inverse; linear part is orthogonal so its inverse is the transpose.
    Isometry inverse() const;

    const QElement& m00() const { return m00_; }
    const QElement& m01() const { return m01_; }
    const QElement& m10() const { return m10_; }
    const QElement& m11() const { return m11_; }
    const QElement& tx() const { return tx_; }
    const QElement& ty() const { return ty_; }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.m00_ == b.m00_ && a.m01_ == b.m01_ && a.m10_ == b.m10_ &&
               a.m11_ == b.m11_ && a.tx_ == b.tx_ && a.ty_ == b.ty_;
    }

  private:
    Isometry(QElement m00, QElement m01, QElement m10, QElement m11, QElement tx, QElement ty);

    QElement m00_, m01_, m10_, m11_, tx_, ty_;
};

/// Straightened image of a folded trajectory: every bounce image under its
/// cumulative isometry lies on the line through origin along direction.
struct UnfoldedLine {
    Point origin;
    Direction direction;
    std::vector<Isometry> copies;  ///< cumulative, one per bounce
    Point terminal;                ///< unfolded image of the folded terminal
};

/// Unfold a traced path into a straight line. The wall line at each bounce is
/// recovered from the bounce record itself (incoming + outgoing spans the
/// wall; the perpendicular-incidence case falls back to the normal's perp).
UnfoldedLine unfold(const Trajectory& traj);

/// Inverse reading of the unfolding: walk the straight segment from origin
/// along d (dy > 0) with total vertical rise `rise` across reflected table
/// copies and fold it back to a billiard path. Independent of trace();
/// the two are cross-checked in the test suite.
TraceResult fold(const Table& table, const Point& origin, const Direction& d,
                 const QElement& rise);

struct CorridorPair {
    QElement x_even;  ///< folded x for an even bounce count (epsilon = +1)
    QElement x_odd;   ///< folded x for an odd bounce count (epsilon = -1)
};

/// Closed-form folded x-coordinates +-(y*(p+q*alpha) mod 2*alpha) reduced into
/// the lower-chamber interval [-alpha, alpha], for both parity classes.
/// At y = 1 the even-parity coordinate equals lambda exactly (checked).
CorridorPair corridor_position(const QElement& y, long long p, long long q,
                               const QElement& lambda);

/// Solution of x = epsilon*y*(p+q*alpha) + 2*k*alpha at a trajectory point.
/// At rational heights the solving sign is unique; at wall contacts both
/// signs admit an integer k and the +1 solution is reported.
struct FoldingWitness {
    int epsilon;  ///< sign of the straightened abscissa in the solution
    long long k;
};

}  // namespace billiards

#endif
