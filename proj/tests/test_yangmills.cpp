#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "ym/stats.hpp"
#include "ym/yangmills.hpp"

using namespace ym;

namespace {

JumpMeasure class_rates_s3(const FiniteGroup& s3, double transposition_rate,
                           double cycle_rate) {
  std::vector<double> rates(6, 0.0);
  for (int g = 0; g < 6; ++g) {
    if (g == s3.identity()) continue;
    bool is_transposition = s3.mul(g, g) == s3.identity();
    rates[g] = is_transposition ? transposition_rate : cycle_rate;
  }
  return JumpMeasure::from_rates(s3, rates);
}

std::vector<EdgeWord> facial_lasso_tuple(const EmbeddedGraph& g, const SpanningTree& t) {
  std::vector<EdgeWord> loops;
  auto fb = facial_basis_change(g, t);
  for (int f = 0; f < g.bounded_face_count(); ++f) loops.push_back(fb.lasso[f]);
  return loops;
}

}  // namespace

TEST_CASE("holonomy is multiplicative and reduction invariant") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::symmetric(3);
  HolonomyField f{&g, &grp, std::vector<int>(g.edge_count())};
  Rng rng(5);
  for (int& v : f.value) v = int(rng.next_below(6));

  CHECK(holonomy(f, EdgeWord{0, {}}) == grp.identity());

  auto l = grid_lasso(g, 2, 1, 1, 0);
  CHECK(holonomy(f, inverse(g, l)) == grp.inv(holonomy(f, l)));

  // Unreduced words evaluate like their reductions.
  std::vector<int> padded = {1, -1};
  padded.insert(padded.end(), l.edges.begin(), l.edges.end());
  CHECK(holonomy(f, EdgeWord{0, padded}) == holonomy(f, l));

  // Strip composition: the word identity L_0^2 = L_1^2 L_0^1 evaluates in
  // reverse order, h(L_0^2) = h(L_0^1) h(L_1^2).
  auto l02 = strip_lasso(g, 2, 1, 0, 2);
  auto l01 = strip_lasso(g, 2, 1, 0, 1);
  auto l12 = strip_lasso(g, 2, 1, 1, 2);
  CHECK(holonomy(f, l02) == grp.mul(holonomy(f, l01), holonomy(f, l12)));
}

TEST_CASE("sampled fields satisfy the facial constraint exactly") {
  auto g = EmbeddedGraph::grid(2, 2);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 1.0, 0.5);
  std::vector<double> areas(4, 0.7);
  Rng rng(11);

  auto loops = facial_lasso_tuple(g, t);
  for (int it = 0; it < 50; ++it) {
    auto field = sample_field(g, t, areas, m, rng);
    for (int e = 0; e < g.edge_count(); ++e)
      if (t.in_tree[e]) CHECK(field.value[e] == grp.identity());
  }

  // Near-zero areas force identity holonomy on every facial lasso.
  std::vector<double> tiny(4, 1e-300);
  auto field = sample_field(g, t, tiny, m, rng);
  for (const auto& l : loops) CHECK(holonomy(field, l) == grp.identity());
}

TEST_CASE("single face law matches the semigroup density") {
  auto g = EmbeddedGraph::grid(1, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 0.8, 0.3);
  double area = 0.9;

  auto fb = facial_basis_change(g, t);
  std::vector<EdgeWord> loops{fb.lasso[0]};

  auto law = exact_lasso_law(g, t, {area}, m, loops, {false, 1e7, 1});
  auto q = semigroup_density(m, area);
  for (int x = 0; x < 6; ++x)
    CHECK(law.prob_of({x}) == doctest::Approx(q.p[x]).epsilon(1e-10));

  // Monte Carlo agreement at chi-square level.
  Rng rng(3);
  std::vector<uint64_t> counts(6, 0);
  for (int i = 0; i < 100000; ++i) {
    auto f = sample_field(g, t, {area}, m, rng);
    ++counts[size_t(holonomy(f, loops[0]))];
  }
  auto gof = chisq_goodness_of_fit(counts, q.p);
  CHECK(gof.p_value > 0.001);
}

TEST_CASE("independent faces with product law") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::cyclic(3);
  auto t = spanning_tree(g, 0);
  auto m = JumpMeasure::from_rates(grp, {0, 1, 2});

  std::vector<EdgeWord> loops{grid_lasso(g, 2, 1, 0, 0), grid_lasso(g, 2, 1, 1, 0)};
  auto law = exact_lasso_law(g, t, {1.0, 1.0}, m, loops, {false, 1e7, 1});
  auto q = semigroup_density(m, 1.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(law.prob_of({a, b}) == doctest::Approx(q.p[a] * q.p[b]).epsilon(1e-10));
}

TEST_CASE("paradigm equivalence on small fixtures") {
  LawOptions raw{false, 1e7, 1};
  LawOptions canon{true, 1e7, 1};

  SUBCASE("grid(1,1) over S3") {
    auto g = EmbeddedGraph::grid(1, 1);
    auto grp = FiniteGroup::symmetric(3);
    auto t = spanning_tree(g, 0);
    auto m = class_rates_s3(grp, 1.0, 2.0);
    auto fb = facial_basis_change(g, t);
    std::vector<EdgeWord> loops{fb.lasso[0]};
    auto lasso = exact_lasso_law(g, t, {0.6}, m, loops, canon);
    auto dens = exact_density_law(g, {0.6}, m, loops, canon);
    CHECK(tv_distance(lasso, dens) < 1e-9);
  }

  SUBCASE("grid(2,1) over Z/3, strip-lasso tuple") {
    auto g = EmbeddedGraph::grid(2, 1);
    auto grp = FiniteGroup::cyclic(3);
    auto t = spanning_tree(g, 0);
    auto m = JumpMeasure::from_rates(grp, {0, 1, 0.5});
    std::vector<EdgeWord> loops{grid_lasso(g, 2, 1, 0, 0), grid_lasso(g, 2, 1, 1, 0)};
    auto lasso = exact_lasso_law(g, t, {1.0, 2.0}, m, loops, canon);
    auto dens = exact_density_law(g, {1.0, 2.0}, m, loops, canon);
    CHECK(tv_distance(lasso, dens) < 1e-9);
    // Abelian group: raw tuples agree as well.
    auto lasso_raw = exact_lasso_law(g, t, {1.0, 2.0}, m, loops, raw);
    auto dens_raw = exact_density_law(g, {1.0, 2.0}, m, loops, raw);
    CHECK(tv_distance(lasso_raw, dens_raw) < 1e-9);
  }

  SUBCASE("gauge-fixed density enumeration agrees with the full one") {
    auto g = EmbeddedGraph::grid(2, 1);
    auto grp = FiniteGroup::symmetric(3);
    auto t = spanning_tree(g, 0);
    auto m = class_rates_s3(grp, 0.5, 1.5);
    auto loops = facial_lasso_tuple(g, t);
    auto full = exact_density_law(g, {1.0, 0.5}, m, loops, canon);
    auto fixed = exact_density_law(g, {1.0, 0.5}, m, loops, canon, &t);
    CHECK(tv_distance(full, fixed) < 1e-9);
  }

  SUBCASE("gauge fixing also agrees on the four-face grid") {
    auto g = EmbeddedGraph::grid(2, 2);
    auto grp = FiniteGroup::cyclic(2);
    auto t = spanning_tree(g, 0);
    auto m = JumpMeasure::from_rates(grp, {0, 1.1});
    std::vector<double> areas{0.5, 1.0, 1.5, 2.0};
    auto loops = facial_lasso_tuple(g, t);
    loops.push_back(strip_lasso(g, 2, 2, 0, 2));
    auto full = exact_density_law(g, areas, m, loops, canon);
    auto fixed = exact_density_law(g, areas, m, loops, canon, &t);
    CHECK(tv_distance(full, fixed) < 1e-9);
  }
}

TEST_CASE("tree independence of the lasso law") {
  auto g = EmbeddedGraph::grid(2, 2);
  auto grp = FiniteGroup::cyclic(2);
  auto m = JumpMeasure::from_rates(grp, {0, 1.3});
  std::vector<double> areas{0.5, 1.0, 1.5, 2.0};

  auto t1 = spanning_tree(g, 0);
  auto t2 = spanning_tree_variant(g, 4, 2, true);
  std::vector<EdgeWord> loops;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) loops.push_back(grid_lasso(g, 2, 2, i, j));
  auto law1 = exact_lasso_law(g, t1, areas, m, loops, {true, 1e7, 1});
  auto law2 = exact_lasso_law(g, t2, areas, m, loops, {true, 1e7, 1});
  CHECK(tv_distance(law1, law2) < 1e-9);
}

TEST_CASE("non-loop tree paths are Haar under the density law") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::cyclic(3);
  auto m = JumpMeasure::from_rates(grp, {0, 0.7, 0.2});
  std::vector<EdgeWord> path{make_word(g, 0, {grid_edge_right(2, 1, 0, 0) + 1})};
  auto law = exact_density_law(g, {1.0, 2.0}, m, path, {false, 1e7, 1});
  for (int x = 0; x < 3; ++x)
    CHECK(law.prob_of({x}) == doctest::Approx(1.0 / 3).epsilon(1e-10));
}

TEST_CASE("gauge transformations fix canonical loop statistics") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 1.0, 1.0);
  Rng rng(19);
  std::vector<EdgeWord> loops{grid_lasso(g, 2, 1, 0, 0), grid_lasso(g, 2, 1, 1, 0)};

  for (int it = 0; it < 100; ++it) {
    auto field = sample_field(g, t, {1.0, 1.0}, m, rng);
    std::vector<int> j(g.vertex_count());
    for (int& v : j) v = int(rng.next_below(6));
    auto gauged = gauge_transform(field, j);

    std::vector<int> tup, gtup;
    for (const auto& l : loops) {
      tup.push_back(holonomy(field, l));
      gtup.push_back(holonomy(gauged, l));
    }
    CHECK(tuple_canonical(grp, tup) == tuple_canonical(grp, gtup));
    // Loop holonomies based at 0 are conjugated by j_0.
    for (size_t k = 0; k < loops.size(); ++k)
      CHECK(gtup[k] == grp.conj(tup[k], j[0]));
  }

  // Identity gauge leaves the field unchanged.
  auto field = sample_field(g, t, {1.0, 1.0}, m, rng);
  std::vector<int> id(g.vertex_count(), grp.identity());
  CHECK(gauge_transform(field, id).value == field.value);
}

TEST_CASE("mixed self-invariant law uses the global conjugation average") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  // Supported on the 3-cycles: self-invariant, not pure.
  std::vector<double> rates(6, 0.0);
  rates[grp.element_by_label("(2 3 1)")] = 1.0;
  rates[grp.element_by_label("(3 1 2)")] = 2.0;
  auto m = JumpMeasure::from_rates(grp, rates);
  REQUIRE(invariance_scope(m).kind == InvarianceKind::self_invariant);

  std::vector<EdgeWord> loops{grid_lasso(g, 2, 1, 0, 0), grid_lasso(g, 2, 1, 1, 0)};
  auto law = exact_lasso_law(g, t, {1.0, 1.5}, m, loops, {false, 1e7, 1});

  // Oracle: average the product law over the six conjugators.
  auto q1 = semigroup_density(m, 1.0);
  auto q2 = semigroup_density(m, 1.5);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double expect = 0;
      for (int u = 0; u < 6; ++u)
        expect += q1.p[grp.conj(a, grp.inv(u))] * q2.p[grp.conj(b, grp.inv(u))];
      expect /= 6;
      CHECK(law.prob_of({a, b}) == doctest::Approx(expect).epsilon(1e-10));
    }

  // Sampler agreement on the canonical law.
  auto canon_law = exact_lasso_law(g, t, {1.0, 1.5}, m, loops, {true, 1e7, 1});
  Rng rng(23);
  std::map<std::vector<int>, uint64_t> counts;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    auto f2 = sample_field(g, t, {1.0, 1.5}, m, rng);
    std::vector<int> tup{holonomy(f2, loops[0]), holonomy(f2, loops[1])};
    ++counts[tuple_canonical(grp, tup)];
  }
  std::vector<uint64_t> obs;
  std::vector<double> probs;
  for (const auto& [key, p] : canon_law.table) {
    auto it = counts.find(key);
    obs.push_back(it == counts.end() ? 0 : it->second);
    probs.push_back(p);
  }
  auto gof = chisq_goodness_of_fit(obs, probs);
  CHECK(gof.p_value > 0.001);

  // The counter-example measure is rejected outright.
  std::vector<double> bad(6, 0.0);
  bad[grp.element_by_label("(3 2 1)")] = 1.0;
  bad[grp.element_by_label("(1 3 2)")] = 2.0;
  bad[grp.element_by_label("(2 3 1)")] = 2.0;
  auto mbad = JumpMeasure::from_rates(grp, bad);
  Rng r2(1);
  CHECK_THROWS(sample_field(g, t, {1.0, 1.0}, mbad, r2));
}

TEST_CASE("wilson estimator") {
  auto g = EmbeddedGraph::grid(1, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 1.0, 0.5);
  auto fb = facial_basis_change(g, t);
  std::vector<EdgeWord> loops{fb.lasso[0]};
  double area = 0.8;

  auto one = wilson_estimate(g, t, {area}, m, loops,
                             [](const std::vector<int>&) { return 1.0; }, 10000, 7, 1);
  CHECK(one.mean == doctest::Approx(1.0));
  CHECK(one.stderr_ == doctest::Approx(0.0));

  auto q = semigroup_density(m, area);
  auto indicator = [&](const std::vector<int>& x) {
    return x[0] == grp.identity() ? 1.0 : 0.0;
  };
  auto est = wilson_estimate(g, t, {area}, m, loops, indicator, 1000000, 7, 1);
  CHECK(std::abs(est.mean - q.p[grp.identity()]) < 3 * est.stderr_);

  // Deterministic in the seed and across thread counts.
  auto est2 = wilson_estimate(g, t, {area}, m, loops, indicator, 100000, 7, 1);
  auto est3 = wilson_estimate(g, t, {area}, m, loops, indicator, 100000, 7, 4);
  CHECK(est2.mean == est3.mean);
  CHECK(est2.stderr_ == est3.stderr_);

  // Non-invariant observables are rejected.
  int t12 = grp.element_by_label("(2 1 3)");
  CHECK_THROWS(wilson_estimate(
      g, t, {area}, m, loops,
      [&](const std::vector<int>& x) { return x[0] == t12 ? 1.0 : 0.0; }, 1000, 7, 1));
}

TEST_CASE("circle group wilson loop") {
  auto g = EmbeddedGraph::grid(1, 1);
  auto t = spanning_tree(g, 0);
  CircleLevy brownian{1.0, 0.0};
  auto fb = facial_basis_change(g, t);
  std::vector<EdgeWord> loops{fb.lasso[0]};
  double a = 0.7;

  auto est = wilson_estimate(
      g, t, {a}, brownian, loops,
      [](const std::vector<double>& x) { return std::cos(x[0]); }, 1000000, 13, 1);
  CHECK(std::abs(est.mean - std::exp(-a / 2)) < 3 * est.stderr_);
}

TEST_CASE("disjoint-closure loops have factorizing class statistics") {
  // Faces 0 and 2 of grid(3,1) have disjoint closures; class functions of
  // their boundary holonomies are independent under the density law.
  auto g = EmbeddedGraph::grid(3, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto m = class_rates_s3(grp, 0.7, 0.4);
  std::vector<double> areas{1.0, 0.5, 1.5};

  // Boundary loops of the two outer cells, based at their own corners.
  auto cycle_of = [&](int i) {
    std::vector<int> edges{
        grid_edge_right(3, 1, i, 0) + 1, grid_edge_up(3, 1, i + 1, 0) + 1,
        -(grid_edge_right(3, 1, i, 1) + 1), -(grid_edge_up(3, 1, i, 0) + 1)};
    return make_word(g, grid_vertex(3, i, 0), edges);
  };
  std::vector<EdgeWord> loops{cycle_of(0), cycle_of(2)};
  // Class statistics are gauge-invariant, so the tree-pinned enumeration is
  // exact for them (the full S3 edge enumeration would blow the budget).
  auto t = spanning_tree(g, 0);
  auto joint = exact_density_law(g, areas, m, loops, {false, 1e7, 1}, &t);

  // E[f(h1) g(h2)] = E[f] E[g] for all pairs of class indicators.
  auto check_factorization = [](const FiniteGroup& gr, const LoopLaw& law) {
    for (int c1 = 0; c1 < int(gr.conjugacy_classes().size()); ++c1)
      for (int c2 = 0; c2 < int(gr.conjugacy_classes().size()); ++c2) {
        double joint_p = 0, p1 = 0, p2 = 0;
        for (const auto& [key, p] : law.table) {
          bool in1 = gr.class_of(key[0]) == c1, in2 = gr.class_of(key[1]) == c2;
          if (in1 && in2) joint_p += p;
          if (in1) p1 += p;
          if (in2) p2 += p;
        }
        CHECK(joint_p == doctest::Approx(p1 * p2).epsilon(1e-9));
      }
  };
  check_factorization(grp, joint);

  // Abelian cross-check with the full edge enumeration.
  auto z3 = FiniteGroup::cyclic(3);
  auto mz = JumpMeasure::from_rates(z3, {0, 1, 0.5});
  auto joint_z = exact_density_law(g, areas, mz, loops, {false, 1e7, 1});
  check_factorization(z3, joint_z);
}

TEST_CASE("base-point independence of the canonical law") {
  auto g = EmbeddedGraph::grid(2, 1);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 1.1, 0.3);
  std::vector<double> areas{1.0, 2.0};

  auto fb1 = facial_basis_change(g, t);
  // Move both facial base points.
  std::vector<int> alt{grid_vertex(2, 1, 0), grid_vertex(2, 2, 1)};
  auto fb2 = facial_basis_change(g, t, alt);

  LawOptions canon{true, 1e7, 1};
  auto law1 = exact_lasso_law(g, t, areas, m, {fb1.lasso[0], fb1.lasso[1]}, canon);
  auto law2 = exact_lasso_law(g, t, areas, m, {fb2.lasso[0], fb2.lasso[1]}, canon);
  CHECK(tv_distance(law1, law2) < 1e-9);
}

TEST_CASE("strip lasso law is the semigroup at the total area") {
  // L_0^2 encircles both faces of grid(2,1) once, so its holonomy law under
  // either construction is Q_{a1+a2}.
  auto g = EmbeddedGraph::grid(2, 1);
  auto t = spanning_tree(g, 0);
  double a1 = 0.7, a2 = 1.9;

  SUBCASE("over Z/3") {
    auto grp = FiniteGroup::cyclic(3);
    auto m = JumpMeasure::from_rates(grp, {0, 1, 0.5});
    std::vector<EdgeWord> loops{strip_lasso(g, 2, 1, 0, 2)};
    auto lasso = exact_lasso_law(g, t, {a1, a2}, m, loops, {false, 1e7, 1});
    auto dens = exact_density_law(g, {a1, a2}, m, loops, {false, 1e7, 1});
    auto q = semigroup_density(m, a1 + a2);
    for (int x = 0; x < 3; ++x) {
      CHECK(lasso.prob_of({x}) == doctest::Approx(q.p[x]).epsilon(1e-10));
      CHECK(dens.prob_of({x}) == doctest::Approx(q.p[x]).epsilon(1e-10));
    }
  }

  SUBCASE("over S3, canonical law") {
    auto grp = FiniteGroup::symmetric(3);
    auto m = class_rates_s3(grp, 0.8, 0.3);
    std::vector<EdgeWord> loops{strip_lasso(g, 2, 1, 0, 2)};
    auto lasso = exact_lasso_law(g, t, {a1, a2}, m, loops, {true, 1e7, 1});
    auto q = semigroup_density(m, a1 + a2);
    std::map<std::vector<int>, double> expect;
    for (int x = 0; x < 6; ++x) expect[tuple_canonical(grp, std::vector<int>{x})] += q.p[x];
    for (const auto& [key, p] : expect)
      CHECK(lasso.prob_of(key) == doctest::Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("law computation error paths") {
  auto g = EmbeddedGraph::grid(2, 2);
  auto grp = FiniteGroup::symmetric(3);
  auto t = spanning_tree(g, 0);
  auto m = class_rates_s3(grp, 1.0, 1.0);
  std::vector<double> areas(4, 1.0);
  auto fb = facial_basis_change(g, t);
  std::vector<EdgeWord> loops{fb.lasso[0]};

  // Budget overflow advises Monte Carlo instead of running forever.
  CHECK_THROWS_WITH_AS(exact_density_law(g, areas, m, loops, {true, 1e3, 1}),
                       doctest::Contains("Monte Carlo"), std::invalid_argument);
  CHECK_THROWS(exact_lasso_law(g, t, areas, m, loops, {true, 10.0, 1}));

  // Empty loop lists and mismatched areas are rejected.
  CHECK_THROWS(exact_lasso_law(g, t, areas, m, {}, {true, 1e7, 1}));
  Rng rng(1);
  CHECK_THROWS(sample_field(g, t, {1.0, 2.0}, m, rng));

  // Canonical laws need loops sharing a base point.
  std::vector<EdgeWord> mixed_bases{fb.lasso[0],
                                    make_word(g, 1, {grid_edge_up(2, 2, 1, 0) + 1,
                                                     -(grid_edge_up(2, 2, 1, 0) + 1)})};
  CHECK_THROWS(exact_lasso_law(g, t, areas, m, mixed_bases, {true, 1e7, 1}));
}
