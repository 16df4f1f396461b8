#include "billiards/blocking.hpp"

#include <utility>

namespace billiards {

void validate_blocking_set(const Table& table, const BlockingSet& set) {
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        const Point& b = set.points[i];
        std::string where = "blocking point #" + std::to_string(i);
        if (b == table.origin) throw InvalidBlockingPoint(where + " coincides with O");
        if (b == table.target) throw InvalidBlockingPoint(where + " coincides with A");
        if (contains(table.polygon, b) == Containment::Outside)
            throw InvalidBlockingPoint(where + " lies outside the table");
    }
}

EvasionOutcome evade(const Table& table, const std::vector<FamilyIndex>& indices,
                     const BlockingSet& set) {
    validate_blocking_set(table, set);
    std::vector<long long> tallies(set.points.size(), 0);
    long long checked = -1;
    for (const FamilyIndex& idx : indices) {
        Trajectory traj = gamma(table, idx);
        checked = idx.n;
        bool blocked = false;
        for (std::size_t i = 0; i < set.points.size(); ++i) {
            if (passes_through(traj, set.points[i])) {
                ++tallies[i];
                blocked = true;
            }
        }
        if (!blocked) return EvasionResult{idx.n, std::move(traj), checked};
    }
    return EvasionFailure{checked, std::move(tallies)};
}

std::vector<long long> hit_indices(const Table& table,
                                   const std::vector<FamilyIndex>& indices, const Point& p,
                                   long long n_max) {
    if (contains(table.polygon, p) == Containment::Outside)
        throw PointOutsideTable("hit query point");
    std::vector<long long> hits;
    for (const FamilyIndex& idx : indices) {
        if (idx.n > n_max) continue;
        if (passes_through(gamma(table, idx), p)) hits.push_back(idx.n);
    }
    return hits;
}

std::optional<FoldingWitness> folding_witnesses(const Trajectory& traj,
                                                const FamilyIndex& idx, const Point& p) {
    const AlphaSpecPtr& spec = idx.lambda.spec();
    if (sign(p.y) <= 0 || qel(1, 0, spec) < p.y)
        throw InvalidParams("folding witness point needs 0 < y <= 1");
    if (!passes_through(traj, p)) return std::nullopt;

    QElement slope_len = qel(rational(idx.p), rational(idx.q), spec);  // p + q*alpha
    QElement two_alpha = qel(0, 2, spec);
    for (int epsilon : {+1, -1}) {
        QElement scaled = epsilon > 0 ? p.y * slope_len : -(p.y * slope_len);
        QElement k_elem = (p.x - scaled) / two_alpha;
        if (!k_elem.is_rational()) continue;
        const Rational& k_rat = k_elem.r();
        if (k_rat.get_den() != 1) continue;
        Int k_int = k_rat.get_num();
        if (!k_int.fits_slong_p()) throw Error("folding witness k out of range");
        return FoldingWitness{epsilon, k_int.get_si()};
    }
    throw Error("point on path admits no exact folded-coordinate solution");
}

std::optional<FoldingWitness> folding_witnesses(const Table& table, const FamilyIndex& idx,
                                                const Point& p) {
    return folding_witnesses(gamma(table, idx), idx, p);
}

}  // namespace billiards
