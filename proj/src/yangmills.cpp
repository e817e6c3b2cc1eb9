#include "ym/yangmills.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ym/parallel.hpp"

namespace ym {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// Per-face elimination data shared by the sampler and the exact lasso law.
struct Elimination {
  struct FaceStep {
    int face;
    std::vector<int> boundary;  // signed edge ids, anticlockwise path order
    int parent_pos;             // index of the parent edge in `boundary`
    int parent_edge;
  };
  std::vector<FaceStep> steps;  // in elimination order
};

Elimination make_elimination(const EmbeddedGraph& g, const SpanningTree& t) {
  Cotree cot = cotree_parent_map(g, t);
  Elimination el;
  for (int f : cot.elimination_order) {
    Elimination::FaceStep s;
    s.face = f;
    for (int h : g.face(f).boundary) s.boundary.push_back(signed_of_half_edge(h));
    s.parent_edge = cot.parent_edge[f];
    s.parent_pos = -1;
    for (size_t i = 0; i < s.boundary.size(); ++i)
      if (std::abs(s.boundary[i]) - 1 == s.parent_edge) {
        if (s.parent_pos >= 0) throw std::logic_error("elimination: parent edge repeated");
        s.parent_pos = int(i);
      }
    if (s.parent_pos < 0) throw std::logic_error("elimination: parent edge not on face");
    el.steps.push_back(std::move(s));
  }
  return el;
}

// Given face draws, fill the non-tree edge values so each anticlockwise
// facial boundary evaluates to its draw (finite group).
void solve_edges(const EmbeddedGraph& g, const FiniteGroup& grp, const Elimination& el,
                 const std::vector<int>& face_values, std::vector<int>& edge_values) {
  edge_values.assign(g.edge_count(), grp.identity());
  for (const auto& st : el.steps) {
    // boundary = (e_1 ... e_m); holonomy multiplies in reverse path order.
    int after = grp.identity();  // val(e_m) ... val(e_{p+1})
    for (int i = int(st.boundary.size()) - 1; i > st.parent_pos; --i) {
      int s = st.boundary[i];
      int v = edge_values[std::abs(s) - 1];
      after = grp.mul(after, s > 0 ? v : grp.inv(v));
    }
    int before = grp.identity();  // val(e_{p-1}) ... val(e_1)
    for (int i = st.parent_pos - 1; i >= 0; --i) {
      int s = st.boundary[i];
      int v = edge_values[std::abs(s) - 1];
      before = grp.mul(before, s > 0 ? v : grp.inv(v));
    }
    // after * x * before = y
    int y = face_values[st.face];
    int x = grp.mul(grp.mul(grp.inv(after), y), grp.inv(before));
    int s = st.boundary[st.parent_pos];
    edge_values[st.parent_edge] = s > 0 ? x : grp.inv(x);
  }
}

void solve_edges_circle(const EmbeddedGraph& g, const Elimination& el,
                        const std::vector<double>& face_values,
                        std::vector<double>& edge_angles) {
  edge_angles.assign(g.edge_count(), 0.0);
  for (const auto& st : el.steps) {
    double rest = 0;
    for (size_t i = 0; i < st.boundary.size(); ++i) {
      if (int(i) == st.parent_pos) continue;
      int s = st.boundary[i];
      rest += s > 0 ? edge_angles[s - 1] : -edge_angles[-s - 1];
    }
    double y = face_values[st.face];
    int s = st.boundary[st.parent_pos];
    double x = y - rest;
    edge_angles[st.parent_edge] = wrap_angle(s > 0 ? x : -x);
  }
}

void check_same_base_loops(const EmbeddedGraph& g, const std::vector<EdgeWord>& loops,
                           bool canonical) {
  if (loops.empty()) throw std::invalid_argument("loop law: no loops given");
  for (const auto& l : loops) {
    make_word(g, l.base, l.edges);  // validates concatenability
    if (canonical) {
      if (!is_loop(g, l)) throw std::invalid_argument("loop law: canonical keys need loops");
      if (l.base != loops[0].base)
        throw std::invalid_argument("loop law: canonical keys need a common base point");
    }
  }
}

std::vector<Density> face_densities_from_levy(const EmbeddedGraph& g,
                                              const std::vector<double>& areas,
                                              const JumpMeasure& levy) {
  if (int(areas.size()) != g.bounded_face_count())
    throw std::invalid_argument("areas: one positive value per bounded face required");
  std::vector<Density> ds;
  ds.reserve(areas.size());
  for (double a : areas) {
    if (a <= 0) throw std::invalid_argument("areas: must be positive");
    ds.push_back(semigroup_density(levy, a));
  }
  return ds;
}

LoopLaw table_from_map(const FiniteGroup& grp, std::map<std::vector<int>, double> acc) {
  LoopLaw law;
  law.group = &grp;
  law.exact = true;
  law.table.assign(acc.begin(), acc.end());
  return law;
}

}  // namespace

int holonomy(const HolonomyField& f, const EdgeWord& w) {
  int v = f.group->identity();
  for (int s : w.edges) {
    if (std::abs(s) - 1 >= f.graph->edge_count())
      throw std::invalid_argument("holonomy: edge off the graph");
    v = f.group->mul(f.value_signed(s), v);  // reverse order: later edges on the left
  }
  return v;
}

double holonomy(const CircleField& f, const EdgeWord& w) {
  double a = 0;
  for (int s : w.edges) {
    if (std::abs(s) - 1 >= f.graph->edge_count())
      throw std::invalid_argument("holonomy: edge off the graph");
    a += f.angle_signed(s);
  }
  return wrap_angle(a);
}

HolonomyField gauge_transform(const HolonomyField& f, const std::vector<int>& j) {
  if (int(j.size()) != f.graph->vertex_count())
    throw std::invalid_argument("gauge_transform: one group element per vertex required");
  HolonomyField out = f;
  for (int e = 0; e < f.graph->edge_count(); ++e) {
    int tail = f.graph->tail(2 * e), head = f.graph->head(2 * e);
    out.value[e] = f.group->mul(f.group->mul(f.group->inv(j[head]), f.value[e]), j[tail]);
  }
  return out;
}

double LoopLaw::prob_of(const std::vector<int>& key) const {
  auto it = std::lower_bound(table.begin(), table.end(), key,
                             [](const auto& a, const auto& k) { return a.first < k; });
  if (it == table.end() || it->first != key) return 0.0;
  return it->second;
}

double tv_distance(const LoopLaw& a, const LoopLaw& b) {
  if (!a.exact || !b.exact) throw std::invalid_argument("tv_distance: exact laws required");
  double s = 0;
  size_t i = 0, j = 0;
  while (i < a.table.size() || j < b.table.size()) {
    if (j >= b.table.size() || (i < a.table.size() && a.table[i].first < b.table[j].first)) {
      s += std::abs(a.table[i].second);
      ++i;
    } else if (i >= a.table.size() || b.table[j].first < a.table[i].first) {
      s += std::abs(b.table[j].second);
      ++j;
    } else {
      s += std::abs(a.table[i].second - b.table[j].second);
      ++i;
      ++j;
    }
  }
  return 0.5 * s;
}

LoopLaw map_law(const LoopLaw& law,
                const std::function<std::vector<int>(const std::vector<int>&)>& fn,
                const FiniteGroup& g, bool canonical) {
  std::map<std::vector<int>, double> acc;
  for (const auto& [key, p] : law.table) {
    auto img = fn(key);
    if (canonical) img = tuple_canonical(g, img);
    acc[img] += p;
  }
  return table_from_map(g, std::move(acc));
}

HolonomyField sample_field(const EmbeddedGraph& g, const SpanningTree& t,
                           const std::vector<double>& areas, const JumpMeasure& levy,
                           Rng& rng) {
  const FiniteGroup& grp = *levy.group;
  auto scope = invariance_scope(levy);
  if (scope.kind == InvarianceKind::neither)
    throw std::invalid_argument("sample_field: jump measure is neither pure nor self-invariant");
  if (int(areas.size()) != g.bounded_face_count())
    throw std::invalid_argument("sample_field: one area per bounded face required");
  Elimination el = make_elimination(g, t);
  std::vector<int> face_values(g.bounded_face_count());
  for (int f = 0; f < g.bounded_face_count(); ++f)
    face_values[f] = sample_levy(levy, areas[f], rng);
  if (scope.kind == InvarianceKind::self_invariant) {
    int u = int(rng.next_below(uint64_t(grp.order())));
    for (int& v : face_values) v = grp.conj(v, u);
  }
  HolonomyField field{&g, &grp, {}};
  solve_edges(g, grp, el, face_values, field.value);
  return field;
}

CircleField sample_field(const EmbeddedGraph& g, const SpanningTree& t,
                         const std::vector<double>& areas, const CircleLevy& levy,
                         Rng& rng) {
  if (int(areas.size()) != g.bounded_face_count())
    throw std::invalid_argument("sample_field: one area per bounded face required");
  Elimination el = make_elimination(g, t);
  std::vector<double> face_values(g.bounded_face_count());
  for (int f = 0; f < g.bounded_face_count(); ++f)
    face_values[f] = circle_sample(levy, areas[f], rng);
  CircleField field{&g, {}};
  solve_edges_circle(g, el, face_values, field.angle);
  return field;
}

LoopLaw exact_lasso_law_with_densities(const EmbeddedGraph& g, const SpanningTree& t,
                                       const std::vector<Density>& face_densities,
                                       const std::vector<EdgeWord>& loops,
                                       bool mixed_average, const LawOptions& opt) {
  const int nb = g.bounded_face_count();
  if (int(face_densities.size()) != nb)
    throw std::invalid_argument("exact_lasso_law: one density per bounded face required");
  const FiniteGroup& grp = *face_densities[0].group;
  check_same_base_loops(g, loops, opt.canonical);
  double combos = std::pow(double(grp.order()), nb);
  if (combos > opt.budget)
    throw std::invalid_argument(
        "exact_lasso_law: |G|^faces exceeds the enumeration budget; use Monte Carlo");
  Elimination el = make_elimination(g, t);

  std::map<std::vector<int>, double> acc;
  std::vector<int> face_values(nb, 0), conj_values(nb), edge_values, tuple(loops.size());
  const uint64_t total = uint64_t(combos);
  HolonomyField field{&g, &grp, {}};
  for (uint64_t it = 0; it < total; ++it) {
    double w = 1.0;
    {
      uint64_t x = it;
      for (int f = 0; f < nb; ++f) {
        face_values[f] = int(x % grp.order());
        x /= grp.order();
        w *= face_densities[f].p[face_values[f]];
      }
    }
    if (w == 0.0) continue;
    const int n_conj = mixed_average ? grp.order() : 1;
    for (int u = 0; u < n_conj; ++u) {
      if (mixed_average) {
        for (int f = 0; f < nb; ++f) conj_values[f] = grp.conj(face_values[f], u);
        solve_edges(g, grp, el, conj_values, edge_values);
      } else {
        solve_edges(g, grp, el, face_values, edge_values);
      }
      field.value = edge_values;
      for (size_t k = 0; k < loops.size(); ++k) tuple[k] = holonomy(field, loops[k]);
      auto key = opt.canonical ? tuple_canonical(grp, tuple) : tuple;
      acc[key] += w / n_conj;
    }
  }
  return table_from_map(grp, std::move(acc));
}

LoopLaw exact_lasso_law(const EmbeddedGraph& g, const SpanningTree& t,
                        const std::vector<double>& areas, const JumpMeasure& levy,
                        const std::vector<EdgeWord>& loops, const LawOptions& opt) {
  auto scope = invariance_scope(levy);
  if (scope.kind == InvarianceKind::neither)
    throw std::invalid_argument("exact_lasso_law: jump measure is neither pure nor self-invariant");
  auto ds = face_densities_from_levy(g, areas, levy);
  return exact_lasso_law_with_densities(g, t, ds, loops,
                                        scope.kind == InvarianceKind::self_invariant, opt);
}

LoopLaw exact_density_law_with_densities(const EmbeddedGraph& g,
                                         const std::vector<Density>& face_densities,
                                         const std::vector<EdgeWord>& loops,
                                         const LawOptions& opt, const SpanningTree* fix_tree) {
  const int nb = g.bounded_face_count();
  if (int(face_densities.size()) != nb)
    throw std::invalid_argument("exact_density_law: one density per bounded face required");
  const FiniteGroup& grp = *face_densities[0].group;
  check_same_base_loops(g, loops, opt.canonical);

  // Free edges: all of them, or the non-tree ones with the tree pinned.
  std::vector<int> free_edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!fix_tree || !fix_tree->in_tree[e]) free_edges.push_back(e);
  const int ne = int(free_edges.size());
  double combos = std::pow(double(grp.order()), ne);
  if (combos > opt.budget)
    throw std::invalid_argument(
        "exact_density_law: |G|^edges exceeds the enumeration budget; fix a tree or use "
        "Monte Carlo");

  // Face boundaries as signed words; Q_area is evaluated on the anticlockwise
  // boundary holonomy.
  std::vector<std::vector<int>> boundaries(nb);
  for (int f = 0; f < nb; ++f)
    for (int h : g.face(f).boundary) boundaries[f].push_back(signed_of_half_edge(h));

  // Parallel over fixed-size ranges of the configuration odometer; partial
  // tables are folded in range order, so the result does not depend on the
  // thread count.
  const uint64_t total = uint64_t(combos);
  const uint64_t chunk = 1 << 14;
  const size_t n_chunks = size_t((total + chunk - 1) / chunk);
  std::vector<std::map<std::vector<int>, double>> partial(n_chunks);
  std::vector<double> partial_weight(n_chunks, 0.0);
  parallel_blocks(total, chunk, opt.threads, [&](size_t b, size_t lo, size_t hi) {
    HolonomyField field{&g, &grp, std::vector<int>(g.edge_count(), grp.identity())};
    std::vector<int> tuple(loops.size());
    auto& acc = partial[b];
    double weight_sum = 0;
    for (uint64_t it = lo; it < hi; ++it) {
      uint64_t x = it;
      for (int k = 0; k < ne; ++k) {
        field.value[free_edges[k]] = int(x % grp.order());
        x /= grp.order();
      }
      double w = 1.0;
      for (int f = 0; f < nb && w != 0.0; ++f) {
        int hol = grp.identity();
        for (int s : boundaries[f]) hol = grp.mul(field.value_signed(s), hol);
        w *= face_densities[f].p[hol];
      }
      if (w == 0.0) continue;
      weight_sum += w;
      for (size_t k = 0; k < loops.size(); ++k) tuple[k] = holonomy(field, loops[k]);
      auto key = opt.canonical ? tuple_canonical(grp, tuple) : tuple;
      acc[key] += w;
    }
    partial_weight[b] = weight_sum;
  });
  std::map<std::vector<int>, double> acc;
  double total_weight = 0;
  for (size_t b = 0; b < n_chunks; ++b) {
    total_weight += partial_weight[b];
    for (const auto& [k, v] : partial[b]) acc[k] += v;
  }
  // The reference measure is the product probability Haar; the total mass
  // must come out to exactly 1.
  const double haar_scale = std::pow(double(grp.order()), nb - ne);
  if (std::abs(total_weight * haar_scale - 1.0) > 1e-10)
    throw std::logic_error("exact_density_law: density does not normalize to 1");
  for (auto& [k, v] : acc) v /= total_weight;
  return table_from_map(grp, std::move(acc));
}

LoopLaw exact_density_law(const EmbeddedGraph& g, const std::vector<double>& areas,
                          const JumpMeasure& levy, const std::vector<EdgeWord>& loops,
                          const LawOptions& opt, const SpanningTree* fix_tree) {
  auto ds = face_densities_from_levy(g, areas, levy);
  return exact_density_law_with_densities(g, ds, loops, opt, fix_tree);
}

namespace {

WilsonEstimate reduce_blocks(const std::vector<double>& sums, const std::vector<double>& sqs,
                             uint64_t n_samples) {
  double s = 0, q = 0;
  for (size_t b = 0; b < sums.size(); ++b) {
    s += sums[b];
    q += sqs[b];
  }
  WilsonEstimate est;
  est.n_samples = n_samples;
  est.mean = s / double(n_samples);
  double var = std::max(0.0, q / double(n_samples) - est.mean * est.mean);
  est.stderr_ = std::sqrt(var / double(std::max<uint64_t>(1, n_samples - 1)));
  return est;
}

}  // namespace

WilsonEstimate wilson_estimate(const EmbeddedGraph& g, const SpanningTree& t,
                               const std::vector<double>& areas, const JumpMeasure& levy,
                               const std::vector<EdgeWord>& loops,
                               const std::function<double(const std::vector<int>&)>& f,
                               uint64_t n_samples, uint64_t seed, unsigned threads,
                               bool validate_invariance) {
  const FiniteGroup& grp = *levy.group;
  check_same_base_loops(g, loops, true);
  if (validate_invariance) {
    double combos = std::pow(double(grp.order()), double(loops.size()));
    if (combos <= 1e6) {
      std::vector<int> tuple(loops.size()), conj(loops.size());
      for (uint64_t it = 0; it < uint64_t(combos); ++it) {
        uint64_t x = it;
        for (size_t k = 0; k < tuple.size(); ++k) {
          tuple[k] = int(x % grp.order());
          x /= grp.order();
        }
        double v = f(tuple);
        for (int u = 0; u < grp.order(); ++u) {
          for (size_t k = 0; k < tuple.size(); ++k) conj[k] = grp.conj(tuple[k], u);
          if (std::abs(f(conj) - v) > 1e-12)
            throw std::invalid_argument(
                "wilson_estimate: observable is not invariant under diagonal conjugation");
        }
      }
    }
  }

  const uint64_t block = 4096;
  const size_t n_blocks = size_t((n_samples + block - 1) / block);
  std::vector<double> sums(n_blocks, 0.0), sqs(n_blocks, 0.0);
  Rng base(seed);
  parallel_blocks(n_samples, block, threads, [&](size_t b, size_t lo, size_t hi) {
    Rng rng = base.stream(b);
    std::vector<int> tuple(loops.size());
    double s = 0, q = 0;
    for (size_t i = lo; i < hi; ++i) {
      HolonomyField field = sample_field(g, t, areas, levy, rng);
      for (size_t k = 0; k < loops.size(); ++k) tuple[k] = holonomy(field, loops[k]);
      double v = f(tuple);
      s += v;
      q += v * v;
    }
    sums[b] = s;
    sqs[b] = q;
  });
  return reduce_blocks(sums, sqs, n_samples);
}

WilsonEstimate wilson_estimate(const EmbeddedGraph& g, const SpanningTree& t,
                               const std::vector<double>& areas, const CircleLevy& levy,
                               const std::vector<EdgeWord>& loops,
                               const std::function<double(const std::vector<double>&)>& f,
                               uint64_t n_samples, uint64_t seed, unsigned threads) {
  check_same_base_loops(g, loops, true);
  const uint64_t block = 4096;
  const size_t n_blocks = size_t((n_samples + block - 1) / block);
  std::vector<double> sums(n_blocks, 0.0), sqs(n_blocks, 0.0);
  Rng base(seed);
  parallel_blocks(n_samples, block, threads, [&](size_t b, size_t lo, size_t hi) {
    Rng rng = base.stream(b);
    std::vector<double> tuple(loops.size());
    double s = 0, q = 0;
    for (size_t i = lo; i < hi; ++i) {
      CircleField field = sample_field(g, t, areas, levy, rng);
      for (size_t k = 0; k < loops.size(); ++k) tuple[k] = holonomy(field, loops[k]);
      double v = f(tuple);
      s += v;
      q += v * v;
    }
    sums[b] = s;
    sqs[b] = q;
  });
  return reduce_blocks(sums, sqs, n_samples);
}

LoopLaw sample_loop_law(const EmbeddedGraph& g, const SpanningTree& t,
                        const std::vector<double>& areas, const CircleLevy& levy,
                        const std::vector<EdgeWord>& loops, uint64_t n_samples,
                        uint64_t seed) {
  check_same_base_loops(g, loops, true);
  LoopLaw law;
  law.exact = false;
  Rng rng = Rng(seed).stream(0);
  law.samples.reserve(n_samples);
  for (uint64_t i = 0; i < n_samples; ++i) {
    CircleField field = sample_field(g, t, areas, levy, rng);
    std::vector<double> tuple(loops.size());
    for (size_t k = 0; k < loops.size(); ++k) tuple[k] = holonomy(field, loops[k]);
    law.samples.push_back(std::move(tuple));
  }
  return law;
}

}  // namespace ym
