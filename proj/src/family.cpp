#include "billiards/family.hpp"

#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>

namespace billiards {

namespace {

long long to_long_long(const Int& z) {
    if (!z.fits_slong_p()) throw InvalidParams("index component out of range: " + z.get_str());
    return z.get_si();
}

void check_params(const FamilyParams& params) {
    if (!params.alpha) throw InvalidParams("missing alpha");
    const AlphaSpecPtr& spec = params.alpha;
    if (sign(qel(-1, 1, spec)) <= 0) throw InvalidParams("alpha must exceed 1");
    if (params.lower_depth <= 1) throw InvalidParams("lower chamber depth must exceed 1");
    if (params.upper_height <= 1) throw InvalidParams("upper chamber height must exceed 1");
}

}  // namespace

FamilyParams default_params() {
    return FamilyParams{AlphaSpec::sqrt2(), rational(2), rational(2)};
}

Table build_polygon(const FamilyParams& params) {
    check_params(params);
    const AlphaSpecPtr& spec = params.alpha;
    auto pt = [&](const Rational& r, const Rational& s, const Rational& y) {
        return Point{QElement(r, s, spec), QElement(y, Rational(0), spec)};
    };
    Rational zero(0), one(1);
    Rational y_floor = one - params.lower_depth;    // 1 - L1 < 0
    Rational y_roof = one + params.upper_height;    // 1 + L2 > 2
    std::vector<Point> verts{
        pt(zero, Rational(-1), y_floor), pt(zero, one, y_floor),  // lower chamber floor
        pt(zero, one, one),              pt(one, zero, one),      // right slit shoulder
        pt(one, zero, y_roof),           pt(Rational(-1), zero, y_roof),
        pt(Rational(-1), zero, one),     pt(zero, Rational(-1), one),
    };
    Point origin = pt(zero, zero, zero);
    Point target = pt(zero, zero, Rational(2));
    return build_table(Polygon(std::move(verts)), std::move(origin), std::move(target));
}

FamilyIndex make_index(const AlphaSpecPtr& alpha, long long n, long long q) {
    if (q < 1) throw InvalidParams("q must be positive");
    return make_index(alpha, n, q, to_long_long(floor(qel(0, q, alpha))));
}

FamilyIndex make_index(const AlphaSpecPtr& alpha, long long n, long long q, long long p) {
    if (q < 1) throw InvalidParams("q must be positive");
    QElement lambda = qel(rational(p), rational(-q), alpha);
    if (lambda.is_zero()) throw InvalidParams("p = q*alpha: slope degenerates");
    if (!(abs(lambda) < qel(1, 0, alpha)))
        throw InvalidParams("|p - q*alpha| must be below 1");
    return FamilyIndex{n, q, p, std::move(lambda)};
}

std::vector<FamilyIndex> approximants(const FamilyParams& params, long long n_max) {
    check_params(params);
    if (n_max < 0) throw InvalidParams("n_max must be nonnegative");
    std::vector<FamilyIndex> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n) {
        FamilyIndex idx = make_index(params.alpha, n, n + 1);
        // q = n + 1 and p = floor(q*alpha), so the slope identities
        // p + q*alpha = 2*q*alpha + lambda = 2*p - lambda hold by
        // construction; q is strictly increasing.
        out.push_back(std::move(idx));
    }
    return out;
}

Trajectory gamma(const Table& table, const FamilyIndex& idx, int max_bounces) {
    const AlphaSpecPtr& spec = idx.lambda.spec();
    Direction d(qel(rational(idx.p), rational(idx.q), spec), qel(1, 0, spec));
    TraceResult r = trace(table, table.origin, d, max_bounces);
    if (is_corner(r)) throw CornerHitError(get_corner(r));
    return std::move(std::get<Trajectory>(r));
}

GammaReport verify_gamma(const Table& table, const FamilyIndex& idx, int max_bounces) {
    Trajectory traj = gamma(table, idx, max_bounces);
    const AlphaSpecPtr& spec = idx.lambda.spec();
    QElement slit_y = qel(1, 0, spec);
    BounceSplit split = bounce_counts_split(traj, slit_y);
    Point crossing = crossing_at_height(traj, slit_y).front();
    bool ok = traj.status == TraceStatus::ReachedTarget && split.below == idx.q &&
              abs(crossing.x) == abs(idx.lambda) && crossing.y == slit_y &&
              split.above == idx.p && traj.terminal == table.target;
    return GammaReport{idx, split.below, std::move(crossing), split.above,
                       traj.terminal, ok};
}

std::vector<GammaReport> verify_family(const Table& table,
                                       const std::vector<FamilyIndex>& indices,
                                       unsigned jobs) {
    const std::size_t count = indices.size();
    std::vector<std::optional<GammaReport>> slots(count);
    auto run_one = [&](std::size_t i) {
        long long want = indices[i].q + indices[i].p + 1;
        long long cap = std::numeric_limits<int>::max();
        slots[i] = verify_gamma(table, indices[i], static_cast<int>(want < cap ? want : cap));
    };

    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) run_one(i);
    } else {
        unsigned workers = jobs < count ? jobs : static_cast<unsigned>(count);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) run_one(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<GammaReport> out;
    out.reserve(count);
    for (std::optional<GammaReport>& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace billiards
