#ifndef BILLIARDS_SVG_RENDER_HPP
#define BILLIARDS_SVG_RENDER_HPP

#include <string>

#include "billiards/tracer.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {

/// Standalone SVG documents. Coordinates are written with `digits` decimal
/// places, correctly rounded from the exact values; the y axis is negated so
/// the table appears y-up. One <path> per polygon copy, one <polyline> per
/// traced or unfolded line.
std::string render_table_svg(const Table& table, int digits = 12);

std::string render_gamma_svg(const Table& table, const Trajectory& traj, int digits = 12);

/// The straightened picture: every reflected copy of the table the path
/// passes through (1 + bounce count of them) plus the straight chord.
std::string render_unfolded_svg(const Table& table, const Trajectory& traj, int digits = 12);

}  // namespace billiards

#endif
