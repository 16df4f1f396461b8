#ifndef BILLIARDS_TRACER_HPP
#define BILLIARDS_TRACER_HPP

#include <utility>
#include <variant>
#include <vector>

#include "billiards/errors.hpp"
#include "billiards/geometry.hpp"

namespace billiards {

/// A billiard table: a simple polygon with two marked points. Marked points
/// may lie on the boundary but never outside.
struct Table {
    Polygon polygon;
    Point origin;  ///< O, the trajectory source
    Point target;  ///< A, the trajectory destination
};

Table build_table(Polygon poly, Point origin, Point target);

struct Bounce {
    Point point;
    std::size_t edge_index;
    Direction incoming;
    Direction outgoing;
};

enum class TraceStatus { ReachedTarget, BudgetExhausted };

struct Trajectory {
    Point start;
    Direction initial;
    std::vector<Bounce> bounces;
    Point terminal;
    TraceStatus status;
};

/// Degenerate event: the path ran exactly into a polygon vertex (or two walls
/// tied at the same minimal parameter). Reflection there is undefined.
struct CornerHit {
    Point at;
    std::size_t after_bounces;
};

using TraceResult = std::variant<Trajectory, CornerHit>;

/// Thrown by callers that need a full Trajectory when the trace degenerated.
struct CornerHitError : Error {
    explicit CornerHitError(CornerHit h)
        : Error("trajectory hit a corner after " + std::to_string(h.after_bounces) +
                " bounces"),
          hit(std::move(h)) {}
    CornerHit hit;
};

inline bool is_corner(const TraceResult& r) { return std::holds_alternative<CornerHit>(r); }
inline const Trajectory& get_trajectory(const TraceResult& r) { return std::get<Trajectory>(r); }
inline const CornerHit& get_corner(const TraceResult& r) { return std::get<CornerHit>(r); }

/// Indices of all polygon edges whose closed segment contains p.
std::vector<std::size_t> edges_containing(const Polygon& poly, const Point& p);

/// Strict inwardness of d at a boundary point p covered by `edges` (as
/// returned by edges_containing). False for degenerate edge sets.
bool points_strictly_inward(const Polygon& poly, const std::vector<std::size_t>& edges,
                            const Point& p, const Direction& d);

inline constexpr int kDefaultMaxBounces = 1'000'000;

/// Iterated specular reflection from `start` along `d`, stopping the moment a
/// segment passes exactly through table.target (before committing the bounce
/// beyond it), or with BudgetExhausted after max_bounces. Every predicate is
/// exact; any endpoint hit or two-wall tie yields a CornerHit value.
///
/// Throws DirectionOutward if `start` is on the boundary and `d` does not
/// point strictly inward, PointOutsideTable if `start` is outside.
TraceResult trace(const Table& table, const Point& start, const Direction& d,
                  int max_bounces = kDefaultMaxBounces);

/// The polyline start -> bounces... -> terminal.
std::vector<Point> chain(const Trajectory& traj);

/// True iff p lies on any closed segment of the trajectory chain.
bool passes_through(const Trajectory& traj, const Point& p);

/// All points of the chain with y = y0, in path order, consecutive duplicates
/// merged. A segment lying inside the height line contributes its endpoints.
std::vector<Point> crossing_at_height(const Trajectory& traj, const QElement& y0);

struct BounceSplit {
    long long below;  ///< bounces strictly before the crossing in path order
    long long above;  ///< bounces strictly after it
};

/// Requires exactly one y0 crossing (else throws AmbiguousCrossing). A bounce
/// exactly at the crossing point would count on neither side.
BounceSplit bounce_counts_split(const Trajectory& traj, const QElement& y0);

}  // namespace billiards

#endif
