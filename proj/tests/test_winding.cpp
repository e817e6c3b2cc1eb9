#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ym/winding.hpp"

using namespace ym;

namespace {

// Independent oracle: total signed angle swept around x, divided by 2pi.
int winding_by_angles(const PolylineLoop& l, Point x) {
  double total = 0;
  for (size_t i = 0; i + 1 < l.points.size(); ++i) {
    Point a = l.points[i], b = l.points[i + 1];
    double a1 = std::atan2(a.y - x.y, a.x - x.x);
    double a2 = std::atan2(b.y - x.y, b.x - x.x);
    double d = a2 - a1;
    while (d > 3.141592653589793) d -= 6.283185307179586;
    while (d < -3.141592653589793) d += 6.283185307179586;
    total += d;
  }
  return int(std::lround(total / 6.283185307179586));
}

PolylineLoop unit_square(int repeats = 1) {
  PolylineLoop l;
  for (int r = 0; r < repeats; ++r) {
    l.points.push_back({0, 0});
    l.points.push_back({1, 0});
    l.points.push_back({1, 1});
    l.points.push_back({0, 1});
  }
  l.points.push_back({0, 0});
  return l;
}

// Random loop on the grid as a word in the grid lassos.
EdgeWord random_grid_loop(const EmbeddedGraph& g, int w, int h, Rng& rng, int len) {
  std::vector<int> edges;
  for (int k = 0; k < len; ++k) {
    int i = int(rng.next_below(uint64_t(w)));
    int j = int(rng.next_below(uint64_t(h)));
    auto l = grid_lasso(g, w, h, i, j);
    auto piece = rng.next_below(2) ? l.edges : invert_word(l.edges);
    edges.insert(edges.end(), piece.begin(), piece.end());
  }
  return EdgeWord{0, free_reduce(edges)};
}

}  // namespace

TEST_CASE("winding number basics") {
  auto sq = unit_square();
  CHECK(winding_number(sq, {0.5, 0.5}) == 1);
  CHECK(winding_number(sq, {2.0, 0.5}) == 0);
  CHECK(winding_number(sq, {-1.0, -1.0}) == 0);
  CHECK(winding_number(unit_square(2), {0.5, 0.5}) == 2);
  CHECK_THROWS(winding_number(sq, {0.5, 0.0}));

  // Against the angle-summation oracle on a grid of probe points.
  for (double x = -0.3; x < 1.4; x += 0.17)
    for (double y = -0.3; y < 1.4; y += 0.17) {
      Point p{x, y};
      bool on_curve = false;
      try {
        int w = winding_number(sq, p);
        CHECK(w == winding_by_angles(sq, p));
      } catch (const std::invalid_argument&) {
        on_curve = true;
      }
      (void)on_curve;
    }
}

TEST_CASE("winding invariance under rotation and subdivision") {
  auto sq = unit_square();
  Point p{0.5, 0.5};
  // Cyclic rotation of the closed polyline.
  PolylineLoop rot;
  rot.points = {{1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}};
  CHECK(winding_number(rot, p) == winding_number(sq, p));
  // Subdivision of segments.
  PolylineLoop sub;
  sub.points = {{0, 0}, {0.5, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0, 1}, {0, 0}};
  CHECK(winding_number(sub, p) == winding_number(sq, p));
}

TEST_CASE("face interior points are interior") {
  auto g = EmbeddedGraph::grid(3, 2);
  for (int f = 0; f < g.bounded_face_count(); ++f) {
    Point m = face_interior_point(g, f);
    // The interior point sees winding 1 from its own face boundary.
    PolylineLoop cyc;
    for (int h : g.face(f).boundary) {
      auto pts = g.half_edge_points(h);
      for (size_t i = 0; i + 1 < pts.size(); ++i) cyc.points.push_back(pts[i]);
    }
    cyc.points.push_back(cyc.points[0]);
    CHECK(winding_number(cyc, m) == 1);
  }
}

TEST_CASE("integrated index") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto areas = geometric_areas(g);

  // Unit square, Lebesgue areas.
  auto l00 = grid_lasso(g, 2, 1, 0, 0);
  CHECK(integrated_index(g, areas, l00) == doctest::Approx(1.0));

  // Strip lasso L_0^2 covers both faces.
  auto l02 = strip_lasso(g, 2, 1, 0, 2);
  CHECK(integrated_index(g, areas, l02) == doctest::Approx(2.0));

  // l l^{-1} integrates to zero.
  auto cancel = concat(g, l00, inverse(g, l00));
  CHECK(integrated_index(g, areas, EdgeWord{0, cancel.edges}) == doctest::Approx(0.0));

  // Abstract areas scale the index.
  std::vector<double> ab{2.5, 4.0};
  CHECK(integrated_index(g, ab, l02) == doctest::Approx(6.5));
}

TEST_CASE("index additivity on random concatenated grid loops") {
  int w = 3, h = 3;
  auto g = EmbeddedGraph::grid(w, h);
  auto areas = geometric_areas(g);
  Rng rng(51);
  for (int it = 0; it < 100; ++it) {
    auto l1 = random_grid_loop(g, w, h, rng, 1 + int(rng.next_below(3)));
    auto l2 = random_grid_loop(g, w, h, rng, 1 + int(rng.next_below(3)));
    std::vector<int> cat = l1.edges;
    cat.insert(cat.end(), l2.edges.begin(), l2.edges.end());
    EdgeWord l12{0, free_reduce(cat)};

    // Face-by-face winding additivity, exact integers via both routes.
    auto p1 = polyline_of_loop(g, l1);
    auto p2 = polyline_of_loop(g, l2);
    auto p12 = polyline_of_loop(g, l12);
    for (int f = 0; f < g.bounded_face_count(); ++f) {
      Point m = face_interior_point(g, f);
      int w1 = winding_number(p1, m), w2 = winding_number(p2, m);
      CHECK(winding_number(p12, m) == w1 + w2);
      CHECK(w1 == winding_by_angles(p1, m));
      CHECK(w2 == winding_by_angles(p2, m));
    }
    CHECK(integrated_index(g, areas, l12) ==
          doctest::Approx(integrated_index(g, areas, l1) + integrated_index(g, areas, l2)));
  }
}

TEST_CASE("index agrees with the abelianized lasso expansion") {
  int w = 2, h = 2;
  auto g = EmbeddedGraph::grid(w, h);
  auto t = spanning_tree(g, 0);
  auto fb = facial_basis_change(g, t);
  auto areas = geometric_areas(g);
  Rng rng(53);
  auto gens = generator_basis(g, t);
  for (int it = 0; it < 50; ++it) {
    auto loop = random_grid_loop(g, w, h, rng, 2);
    auto genword = loop_to_generator_word(g, t, gens, loop);
    auto lassoword = substitute(genword, fb.gen_to_lassos);
    // Exponent sum of each facial letter = winding number around that face.
    std::vector<int> exponent(g.bounded_face_count(), 0);
    for (int s : lassoword) exponent[std::abs(s) - 1] += s > 0 ? 1 : -1;
    auto pl = polyline_of_loop(g, loop);
    double total = 0;
    for (int f = 0; f < g.bounded_face_count(); ++f) {
      CHECK(exponent[f] == winding_number(pl, face_interior_point(g, f)));
      total += exponent[f] * areas[f];
    }
    CHECK(integrated_index(g, areas, loop) == doctest::Approx(total));
  }
}

TEST_CASE("index holonomy and drift") {
  auto g = EmbeddedGraph::grid(1, 1);
  std::vector<double> areas{0.8};
  auto t = spanning_tree(g, 0);
  auto fb = facial_basis_change(g, t);
  auto loop = fb.lasso[0];

  CHECK(index_holonomy(g, areas, loop, 0.0) == doctest::Approx(0.0));
  CHECK(index_holonomy(g, areas, loop, 1.0) == doctest::Approx(0.8));

  // Drifted Brownian square loop: E[cos] = cos(aD) exp(-a/2).
  double a = 0.8, d = 1.3;
  CircleLevy brownian{1.0, d};
  auto base = sample_loop_law(g, t, areas, brownian, {loop}, 400000, 99);
  auto drifted = drifted_law(base, {index_holonomy(g, areas, loop, d)});
  double mean = 0;
  for (const auto& tup : drifted.samples) mean += std::cos(tup[0]);
  mean /= double(drifted.samples.size());
  double expect = std::cos(a * d) * std::exp(-a / 2);
  CHECK(std::abs(mean - expect) < 0.005);

  CHECK_THROWS(drifted_law(base, {1.0, 2.0}));
}
