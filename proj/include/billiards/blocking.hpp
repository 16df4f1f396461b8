#ifndef BILLIARDS_BLOCKING_HPP
#define BILLIARDS_BLOCKING_HPP

#include <optional>
#include <variant>
#include <vector>

#include "billiards/family.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {

/// Finite candidate set of blocking points. Members may lie anywhere in the
/// closed table except at O or A.
struct BlockingSet {
    std::vector<Point> points;
};

/// Throws InvalidBlockingPoint on a member equal to O, equal to A, or outside
/// the table.
void validate_blocking_set(const Table& table, const BlockingSet& set);

struct EvasionResult {
    long long witness_n;    ///< first index whose path avoids every point
    Trajectory trajectory;  ///< the avoiding path itself
    long long checked_up_to;
};

struct EvasionFailure {
    long long checked_up_to;
    std::vector<long long> hit_tallies;  ///< per blocking point, paths it met
};

using EvasionOutcome = std::variant<EvasionResult, EvasionFailure>;

/// Scan the indices in order for a path from O to A that misses every point
/// of `set`. Every path is checked against every point, so tallies are
/// complete even when a witness exists later in the scan.
EvasionOutcome evade(const Table& table, const std::vector<FamilyIndex>& indices,
                     const BlockingSet& set);

/// Indices n <= n_max (from `indices`) whose path passes through p. Requires
/// p inside or on the boundary of the table.
std::vector<long long> hit_indices(const Table& table,
                                   const std::vector<FamilyIndex>& indices, const Point& p,
                                   long long n_max);

/// For a point p with 0 < p.y <= 1 lying on the traced path, solve
/// p.x = epsilon*p.y*(p_idx + q_idx*alpha) + 2*k*alpha exactly over
/// epsilon in {+1, -1} and integer k. Returns nothing if p is off the path;
/// throws if p is on the path but no exact solution exists (which would
/// falsify the folding identity the family is built on).
std::optional<FoldingWitness> folding_witnesses(const Trajectory& traj,
                                                const FamilyIndex& idx, const Point& p);
std::optional<FoldingWitness> folding_witnesses(const Table& table, const FamilyIndex& idx,
                                                const Point& p);

}  // namespace billiards

#endif
