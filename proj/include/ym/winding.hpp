#pragma once

#include <vector>

#include "ym/graph.hpp"
#include "ym/loops.hpp"
#include "ym/yangmills.hpp"

namespace ym {

// Closed polyline: first point equals the last, consecutive points distinct.
struct PolylineLoop {
  std::vector<Point> points;
};

PolylineLoop polyline_of_loop(const EmbeddedGraph& g, const EdgeWord& loop);

// Signed crossing count of a rightward ray; throws if x lies on the curve.
int winding_number(const PolylineLoop& l, Point x);

// A point strictly inside a bounded face (midpoint of an ear of its polygon).
Point face_interior_point(const EmbeddedGraph& g, int face);

// Integral of the winding number against the face areas:
// sum_F n_l(interior of F) * area(F).
double integrated_index(const EmbeddedGraph& g, const std::vector<double>& areas,
                        const EdgeWord& loop);

// Angle D * integrated_index(l) on the circle group.
double index_holonomy(const EmbeddedGraph& g, const std::vector<double>& areas,
                      const EdgeWord& loop, double drift);

// Shifts each coordinate of a circle-group empirical law by its index phase.
LoopLaw drifted_law(const LoopLaw& base, const std::vector<double>& index_phases);

}  // namespace ym
