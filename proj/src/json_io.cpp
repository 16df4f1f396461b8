#include "billiards/json_io.hpp"

#include <string>
#include <utility>

namespace billiards {

namespace {

const Json& expect(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidParams(std::string("missing JSON key: ") + key);
    return *it;
}

long long expect_int(const Json& j, const char* key) {
    const Json& v = expect(j, key);
    if (!v.is_number_integer()) throw InvalidParams(std::string(key) + " must be an integer");
    return v.get<long long>();
}

std::size_t expect_index(const Json& j, const char* key, std::size_t limit) {
    long long v = expect_int(j, key);
    if (v < 0 || static_cast<std::size_t>(v) >= limit)
        throw InvalidParams(std::string(key) + " out of range");
    return static_cast<std::size_t>(v);
}

}  // namespace

Json json_of(const Rational& x) {
    return Json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Json json_of(const AlphaSpec& spec) {
    return Json{{"u", json_of(spec.u())}, {"v", json_of(spec.v())}};
}

Json json_of(const QElement& a) {
    return Json{{"r", json_of(a.r())}, {"s", json_of(a.s())}};
}

Json json_of(const Point& p) { return Json{{"x", json_of(p.x)}, {"y", json_of(p.y)}}; }

Json json_of(const Direction& d) {
    return Json{{"dx", json_of(d.dx)}, {"dy", json_of(d.dy)}};
}

Json json_of(const Polygon& poly) {
    Json verts = Json::array();
    for (const Point& v : poly.vertices()) verts.push_back(json_of(v));
    return Json{{"vertices", std::move(verts)}};
}

Json json_of(const Table& table) {
    return Json{{"alpha", json_of(*table.origin.x.spec())},
                {"polygon", json_of(table.polygon)},
                {"O", json_of(table.origin)},
                {"A", json_of(table.target)}};
}

Json json_of(const Trajectory& traj) {
    Json bounces = Json::array();
    for (const Bounce& b : traj.bounces)
        bounces.push_back(Json{{"point", json_of(b.point)},
                               {"edge", static_cast<long long>(b.edge_index)}});
    return Json{{"start", json_of(traj.start)},
                {"direction", json_of(traj.initial)},
                {"bounces", std::move(bounces)},
                {"terminal", json_of(traj.terminal)},
                {"status", traj.status == TraceStatus::ReachedTarget ? "REACHED_TARGET"
                                                                     : "BUDGET_EXHAUSTED"}};
}

Json json_of(const CornerHit& hit) {
    return Json{{"error", "corner_hit"},
                {"at", json_of(hit.at)},
                {"after_bounces", static_cast<long long>(hit.after_bounces)}};
}

Json json_of(const TraceResult& result) {
    if (is_corner(result)) return json_of(get_corner(result));
    return json_of(get_trajectory(result));
}

Json json_of(const BlockingSet& set) {
    Json pts = Json::array();
    for (const Point& p : set.points) pts.push_back(json_of(p));
    return Json{{"points", std::move(pts)}};
}

Json json_of(const FamilyIndex& idx) {
    return Json{{"n", idx.n}, {"q", idx.q}, {"p", idx.p}, {"lambda", json_of(idx.lambda)}};
}

Json json_of(const GammaReport& report) {
    Json j = json_of(report.index);
    j["lower_bounces"] = report.lower_bounces;
    j["crossing"] = json_of(report.crossing);
    j["upper_bounces"] = report.upper_bounces;
    j["terminal"] = json_of(report.terminal);
    j["ok"] = report.ok;
    return j;
}

Json json_of(const Isometry& iso) {
    Json linear = Json::array({Json::array({json_of(iso.m00()), json_of(iso.m01())}),
                               Json::array({json_of(iso.m10()), json_of(iso.m11())})});
    return Json{{"linear", std::move(linear)},
                {"translation", Json::array({json_of(iso.tx()), json_of(iso.ty())})}};
}

Json json_of(const UnfoldedLine& line) {
    Json copies = Json::array();
    for (const Isometry& iso : line.copies) copies.push_back(json_of(iso));
    return Json{{"origin", json_of(line.origin)},
                {"direction", json_of(line.direction)},
                {"copies", std::move(copies)},
                {"terminal", json_of(line.terminal)}};
}

Json json_of(const EvasionOutcome& outcome) {
    if (const auto* found = std::get_if<EvasionResult>(&outcome)) {
        return Json{{"witness_n", found->witness_n},
                    {"checked_up_to", found->checked_up_to},
                    {"trajectory", json_of(found->trajectory)}};
    }
    const auto& failure = std::get<EvasionFailure>(outcome);
    return Json{{"error", "not_found_within_budget"},
                {"checked_up_to", failure.checked_up_to},
                {"hit_tallies", failure.hit_tallies}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw InvalidParams("rational must be a two-string array [num, den]");
    return rational_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

AlphaSpecPtr alpha_from_json(const Json& j) {
    return AlphaSpec::make(rational_from_json(expect(j, "u")), rational_from_json(expect(j, "v")));
}

QElement qelement_from_json(const Json& j, const AlphaSpecPtr& spec) {
    return QElement(rational_from_json(expect(j, "r")), rational_from_json(expect(j, "s")),
                    spec);
}

Point point_from_json(const Json& j, const AlphaSpecPtr& spec) {
    return Point{qelement_from_json(expect(j, "x"), spec),
                 qelement_from_json(expect(j, "y"), spec)};
}

Direction direction_from_json(const Json& j, const AlphaSpecPtr& spec) {
    return Direction(qelement_from_json(expect(j, "dx"), spec),
                     qelement_from_json(expect(j, "dy"), spec));
}

Polygon polygon_from_json(const Json& j, const AlphaSpecPtr& spec) {
    const Json& verts = expect(j, "vertices");
    if (!verts.is_array()) throw InvalidParams("vertices must be an array");
    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (const Json& v : verts) pts.push_back(point_from_json(v, spec));
    return Polygon(std::move(pts));
}

Table table_from_json(const Json& j) {
    AlphaSpecPtr spec = alpha_from_json(expect(j, "alpha"));
    return build_table(polygon_from_json(expect(j, "polygon"), spec),
                       point_from_json(expect(j, "O"), spec),
                       point_from_json(expect(j, "A"), spec));
}

Trajectory trajectory_from_json(const Json& j, const Table& table) {
    const AlphaSpecPtr& spec = table.origin.x.spec();
    Point start = point_from_json(expect(j, "start"), spec);
    Direction dir = direction_from_json(expect(j, "direction"), spec);

    const Json& bounces = expect(j, "bounces");
    if (!bounces.is_array()) throw InvalidParams("bounces must be an array");
    std::vector<Bounce> replayed;
    replayed.reserve(bounces.size());
    Direction current = dir;
    for (const Json& b : bounces) {
        Point at = point_from_json(expect(b, "point"), spec);
        std::size_t edge = expect_index(b, "edge", table.polygon.size());
        Direction out = reflect_direction(current, table.polygon.edge(edge).direction());
        replayed.push_back(Bounce{std::move(at), edge, current, out});
        current = out;
    }

    std::string status = expect(j, "status").get<std::string>();
    TraceStatus st;
    if (status == "REACHED_TARGET")
        st = TraceStatus::ReachedTarget;
    else if (status == "BUDGET_EXHAUSTED")
        st = TraceStatus::BudgetExhausted;
    else
        throw InvalidParams("unknown trajectory status: " + status);

    return Trajectory{std::move(start), std::move(dir), std::move(replayed),
                      point_from_json(expect(j, "terminal"), spec), st};
}

CornerHit corner_from_json(const Json& j, const AlphaSpecPtr& spec) {
    long long k = expect_int(j, "after_bounces");
    if (k < 0) throw InvalidParams("after_bounces must be nonnegative");
    return CornerHit{point_from_json(expect(j, "at"), spec), static_cast<std::size_t>(k)};
}

BlockingSet blocking_set_from_json(const Json& j, const AlphaSpecPtr& spec) {
    const Json& pts = expect(j, "points");
    if (!pts.is_array()) throw InvalidParams("points must be an array");
    BlockingSet set;
    set.points.reserve(pts.size());
    for (const Json& p : pts) set.points.push_back(point_from_json(p, spec));
    return set;
}

FamilyIndex index_from_json(const Json& j, const AlphaSpecPtr& spec) {
    long long q = expect_int(j, "q");
    long long p = expect_int(j, "p");
    FamilyIndex idx = make_index(spec, expect_int(j, "n"), q, p);
    if (auto it = j.find("lambda"); it != j.end()) {
        if (qelement_from_json(*it, spec) != idx.lambda)
            throw InvalidParams("lambda inconsistent with (p, q)");
    }
    return idx;
}

Isometry isometry_from_json(const Json& j, const AlphaSpecPtr& spec) {
    const Json& linear = expect(j, "linear");
    const Json& translation = expect(j, "translation");
    if (!linear.is_array() || linear.size() != 2 || !linear[0].is_array() ||
        !linear[1].is_array() || linear[0].size() != 2 || linear[1].size() != 2)
        throw InvalidParams("linear must be a 2x2 array");
    if (!translation.is_array() || translation.size() != 2)
        throw InvalidParams("translation must be a pair");
    return Isometry::from_parts(qelement_from_json(linear[0][0], spec),
                                qelement_from_json(linear[0][1], spec),
                                qelement_from_json(linear[1][0], spec),
                                qelement_from_json(linear[1][1], spec),
                                qelement_from_json(translation[0], spec),
                                qelement_from_json(translation[1], spec));
}

}  // namespace billiards
