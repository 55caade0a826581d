#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "dyadic/bounds.hpp"
#include "dyadic/gains.hpp"
#include "dyadic/metrics.hpp"
#include "dyadic/phase_diagram.hpp"

namespace dyadic {

// Header `m10,m11,count`, rows sorted by (m10, m11).
void write_phase_csv(const PhaseDiagram& d, std::ostream& out);
// Grayscale heatmap, m10 on x, m11 on y (upwards), darkness ~ log(1+count).
void write_phase_svg(const PhaseDiagram& d, std::ostream& out);

// Header `n1,area_old,area_new,gain_ub_m11,gain_ub_m10,gain_lb_m11,gain_lb_m10,gain_total`.
void write_gain_csv(const std::vector<GainRow>& rows, std::ostream& out);

void write_bounds_csv(const std::vector<BoundsReport>& rows, std::ostream& out);
// Field names n1, ub_m11_old, ub_m10_old, ub_m11, ub_m10, lb_m11, lb_m10,
// d_min, d_max, h_min, h_max; undefined ranges are the string "undefined".
nlohmann::ordered_json bounds_json(const BoundsReport& r);

nlohmann::ordered_json metrics_json(const Graph& g, const CharacteristicAssignment& a);

// Expected dyad curves: header `n1,fraction,density,expected_m11,expected_m10`.
void write_expected_csv(std::int64_t node_count, const std::vector<Rational>& densities,
                        std::ostream& out);

} // namespace dyadic
