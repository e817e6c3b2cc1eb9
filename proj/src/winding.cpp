#include "ym/winding.hpp"

#include <cmath>
#include <stdexcept>

namespace ym {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double dist_point_segment(Point p, Point a, Point b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double wx = p.x - a.x, wy = p.y - a.y;
  double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? std::max(0.0, std::min(1.0, (wx * vx + wy * vy) / len2)) : 0.0;
  double dx = wx - t * vx, dy = wy - t * vy;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

PolylineLoop polyline_of_loop(const EmbeddedGraph& g, const EdgeWord& loop) {
  if (!is_loop(g, loop)) throw std::invalid_argument("polyline_of_loop: not a loop");
  PolylineLoop pl;
  pl.points.push_back(g.vertex(loop.base));
  for (int s : loop.edges) {
    auto pts = g.half_edge_points(half_edge_of_signed(s));
    for (size_t i = 1; i < pts.size(); ++i) pl.points.push_back(pts[i]);
  }
  return pl;
}

int winding_number(const PolylineLoop& l, Point x) {
  const auto& p = l.points;
  if (p.size() < 2) return 0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (dist_point_segment(x, p[i], p[i + 1]) < 1e-12)
      throw std::invalid_argument("winding_number: point lies on the curve");
  int w = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Point a = p[i], b = p[i + 1];
    // Half-open crossing rule; vertices exactly on the ray height are counted
    // on one side only, so no perturbation is needed for generic data.
    if ((a.y > x.y) != (b.y > x.y)) {
      double t = (x.y - a.y) / (b.y - a.y);
      double xi = a.x + t * (b.x - a.x);
      if (xi > x.x) w += (b.y > a.y) ? 1 : -1;
    }
  }
  return w;
}

Point face_interior_point(const EmbeddedGraph& g, int face) {
  if (face < 0 || face >= g.bounded_face_count())
    throw std::invalid_argument("face_interior_point: not a bounded face");
  // Polygon of the face boundary (anticlockwise), with collinear repeats kept.
  std::vector<Point> poly;
  for (int h : g.face(face).boundary) {
    auto pts = g.half_edge_points(h);
    for (size_t i = 0; i + 1 < pts.size(); ++i) poly.push_back(pts[i]);
  }
  const size_t n = poly.size();
  if (n < 3) throw std::invalid_argument("face_interior_point: degenerate face");
  auto cross3 = [](Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  PolylineLoop outline;
  outline.points = poly;
  outline.points.push_back(poly[0]);
  // Ear clipping: find a convex corner whose triangle midpoint is inside.
  for (size_t i = 0; i < n; ++i) {
    Point a = poly[(i + n - 1) % n], b = poly[i], c = poly[(i + 1) % n];
    if (cross3(a, b, c) <= 1e-12) continue;  // reflex or flat corner
    Point m{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
    bool on_curve = false;
    for (size_t k = 0; k + 1 < outline.points.size(); ++k)
      if (dist_point_segment(m, outline.points[k], outline.points[k + 1]) < 1e-9) {
        on_curve = true;
        break;
      }
    if (!on_curve && winding_number(outline, m) == 1) return m;
  }
  throw std::invalid_argument("face_interior_point: no ear found (degenerate face)");
}

double integrated_index(const EmbeddedGraph& g, const std::vector<double>& areas,
                        const EdgeWord& loop) {
  if (int(areas.size()) != g.bounded_face_count())
    throw std::invalid_argument("integrated_index: one area per bounded face required");
  PolylineLoop pl = polyline_of_loop(g, loop);
  double total = 0;
  for (int f = 0; f < g.bounded_face_count(); ++f) {
    Point m = face_interior_point(g, f);
    total += winding_number(pl, m) * areas[f];
  }
  return total;
}

double index_holonomy(const EmbeddedGraph& g, const std::vector<double>& areas,
                      const EdgeWord& loop, double drift) {
  double a = std::fmod(drift * integrated_index(g, areas, loop), kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

LoopLaw drifted_law(const LoopLaw& base, const std::vector<double>& index_phases) {
  if (base.exact) throw std::invalid_argument("drifted_law: needs an empirical circle law");
  LoopLaw out = base;
  for (auto& tuple : out.samples) {
    if (tuple.size() != index_phases.size())
      throw std::invalid_argument("drifted_law: phase count mismatch");
    for (size_t k = 0; k < tuple.size(); ++k) {
      double a = std::fmod(tuple[k] + index_phases[k], kTwoPi);
      if (a < 0) a += kTwoPi;
      tuple[k] = a;
    }
  }
  return out;
}

}  // namespace ym
