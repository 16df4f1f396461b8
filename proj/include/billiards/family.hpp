#ifndef BILLIARDS_FAMILY_HPP
#define BILLIARDS_FAMILY_HPP

#include <vector>

#include "billiards/tracer.hpp"

namespace billiards {

/// Shape parameters of the two-chamber table. The lower chamber is
/// [-alpha, alpha] x [1 - lower_depth, 1], the upper chamber is
/// [-1, 1] x [1, 1 + upper_height], and they meet along the open slit
/// (-1, 1) x {1}. Requires alpha > 1 and both extents > 1.
struct FamilyParams {
    AlphaSpecPtr alpha;
    Rational lower_depth;   ///< L1
    Rational upper_height;  ///< L2
};

FamilyParams default_params();

/// The eight-vertex table for `params`, with marked points O = (0, 0) and
/// A = (0, 2).
Table build_polygon(const FamilyParams& params);

/// One launch index: shoot from O with slope (p + q*alpha : 1), where
/// lambda = p - q*alpha satisfies 0 < |lambda| < 1. This makes p + q*alpha
/// equal to both 2*q*alpha + lambda and 2*p - lambda.
struct FamilyIndex {
    long long n;  ///< position in the approximant list, or a caller tag
    long long q;
    long long p;
    QElement lambda;
};

/// Validated index for arbitrary (q, p); p defaults to floor(q*alpha), which
/// is the unique choice with lambda in (-1, 0) when q*alpha is irrational.
FamilyIndex make_index(const AlphaSpecPtr& alpha, long long n, long long q);
FamilyIndex make_index(const AlphaSpecPtr& alpha, long long n, long long q, long long p);

/// Indices n = 0..n_max with q = n + 1, strictly increasing q.
std::vector<FamilyIndex> approximants(const FamilyParams& params, long long n_max);

/// Trace from O along (p + q*alpha, 1). Throws CornerHitError if the path
/// degenerates; returns the trajectory otherwise.
Trajectory gamma(const Table& table, const FamilyIndex& idx,
                 int max_bounces = kDefaultMaxBounces);

struct GammaReport {
    FamilyIndex index;
    long long lower_bounces;  ///< bounces strictly below the slit crossing
    Point crossing;           ///< the unique point of the path with y = 1
    long long upper_bounces;  ///< bounces strictly above it
    Point terminal;
    bool ok;
};

/// Full check of one launch: reaches A = (0, 2) with exactly q bounces below
/// the slit, p above it, and a unique slit crossing whose |x| = |lambda|.
GammaReport verify_gamma(const Table& table, const FamilyIndex& idx,
                         int max_bounces = kDefaultMaxBounces);

/// verify_gamma over a batch, optionally on `jobs` threads. Reports come back
/// in input order; the first exception from any worker is rethrown. Each
/// index gets the tight bounce budget q + p + 1, which cannot alter an ok
/// verdict (ok requires exactly q + p bounces) but stops bad tables fast.
std::vector<GammaReport> verify_family(const Table& table,
                                       const std::vector<FamilyIndex>& indices,
                                       unsigned jobs = 1);

}  // namespace billiards

#endif
