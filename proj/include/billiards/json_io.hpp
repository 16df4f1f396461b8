#ifndef BILLIARDS_JSON_IO_HPP
#define BILLIARDS_JSON_IO_HPP

#include <json.hpp>

#include "billiards/blocking.hpp"
#include "billiards/family.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {

/// Key order is part of the wire format, so everything goes through
/// ordered_json. Rationals are ["num", "den"] decimal strings to keep
/// arbitrary precision out of JSON number territory.
using Json = nlohmann::ordered_json;

Json json_of(const Rational& x);
Json json_of(const AlphaSpec& spec);
Json json_of(const QElement& a);
Json json_of(const Point& p);
Json json_of(const Direction& d);
Json json_of(const Polygon& poly);
Json json_of(const Table& table);
Json json_of(const Trajectory& traj);
Json json_of(const CornerHit& hit);
Json json_of(const TraceResult& result);
Json json_of(const BlockingSet& set);
Json json_of(const FamilyIndex& idx);
Json json_of(const GammaReport& report);
Json json_of(const Isometry& iso);
Json json_of(const UnfoldedLine& line);
Json json_of(const EvasionOutcome& outcome);

/// Parsers throw InvalidParams on structural problems; field-level errors
/// (bad rationals, unknown status strings) surface the same way.
Rational rational_from_json(const Json& j);
AlphaSpecPtr alpha_from_json(const Json& j);
QElement qelement_from_json(const Json& j, const AlphaSpecPtr& spec);
Point point_from_json(const Json& j, const AlphaSpecPtr& spec);
Direction direction_from_json(const Json& j, const AlphaSpecPtr& spec);
Polygon polygon_from_json(const Json& j, const AlphaSpecPtr& spec);

/// Tables embed their field, so no spec parameter here.
Table table_from_json(const Json& j);

/// Bounce directions are not serialized; they are reconstructed by replaying
/// the reflection sequence against the table's walls.
Trajectory trajectory_from_json(const Json& j, const Table& table);

CornerHit corner_from_json(const Json& j, const AlphaSpecPtr& spec);
BlockingSet blocking_set_from_json(const Json& j, const AlphaSpecPtr& spec);
FamilyIndex index_from_json(const Json& j, const AlphaSpecPtr& spec);
Isometry isometry_from_json(const Json& j, const AlphaSpecPtr& spec);

}  // namespace billiards

#endif
