#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ym/graph.hpp"
#include "ym/levy.hpp"
#include "ym/loops.hpp"
#include "ym/rng.hpp"

namespace ym {

// Multiplicative edge field with values in a finite group; h(e^{-1}) is
// represented implicitly as the inverse of the stored forward value. Tree
// edges carry the identity when produced by the sampler (gauge fixing).
struct HolonomyField {
  const EmbeddedGraph* graph = nullptr;
  const FiniteGroup* group = nullptr;
  std::vector<int> value;  // per positive edge

  int value_signed(int signed_id) const {
    int v = value[std::abs(signed_id) - 1];
    return signed_id > 0 ? v : group->inv(v);
  }
};

struct CircleField {
  const EmbeddedGraph* graph = nullptr;
  std::vector<double> angle;  // per positive edge, in [0, 2pi)

  double angle_signed(int signed_id) const {
    double a = angle[std::abs(signed_id) - 1];
    return signed_id > 0 ? a : -a;
  }
};

// Holonomy of a path: the edge values multiplied in reverse path order.
int holonomy(const HolonomyField& f, const EdgeWord& w);
double holonomy(const CircleField& f, const EdgeWord& w);  // angle mod 2pi

// (j . h)(e) = j_head^{-1} h(e) j_tail for a vertex-indexed family j.
HolonomyField gauge_transform(const HolonomyField& f, const std::vector<int>& j);

// Exact or empirical law of a loop tuple. Exact tables are sorted by tuple.
struct LoopLaw {
  const FiniteGroup* group = nullptr;
  bool exact = true;
  std::vector<std::pair<std::vector<int>, double>> table;
  std::vector<std::vector<double>> samples;  // circle group: empirical tuples

  double prob_of(const std::vector<int>& key) const;
};

double tv_distance(const LoopLaw& a, const LoopLaw& b);

// Pushforward of an exact law through a per-tuple map (e.g. a braid action),
// re-canonicalized when `canonical` is set.
LoopLaw map_law(const LoopLaw& law,
                const std::function<std::vector<int>(const std::vector<int>&)>& fn,
                const FiniteGroup& g, bool canonical);

// Lasso-paradigm sampler: tree edges identity, one draw Y_F ~ Y_{area(F)} per
// bounded face, non-tree edges solved so every anticlockwise facial boundary
// evaluates to its draw. Self-invariant (mixed) processes get one global Haar
// conjugator per field; measures that are neither pure nor self-invariant are
// rejected.
HolonomyField sample_field(const EmbeddedGraph& g, const SpanningTree& t,
                           const std::vector<double>& areas, const JumpMeasure& levy,
                           Rng& rng);
CircleField sample_field(const EmbeddedGraph& g, const SpanningTree& t,
                         const std::vector<double>& areas, const CircleLevy& levy,
                         Rng& rng);

struct LawOptions {
  bool canonical = true;          // keys are diagonal-conjugacy minima
  double budget = 1e7;            // max enumeration size
  unsigned threads = 1;
};

// Exact law of (h(l_1),...,h(l_k)) under the lasso-paradigm construction,
// by enumeration of the per-face draws (times a global conjugator for mixed
// processes), weighted by the semigroup densities at the face areas.
LoopLaw exact_lasso_law(const EmbeddedGraph& g, const SpanningTree& t,
                        const std::vector<double>& areas, const JumpMeasure& levy,
                        const std::vector<EdgeWord>& loops, const LawOptions& opt = {});
// Same with explicit per-face densities; `mixed_average` adds the global
// conjugation average.
LoopLaw exact_lasso_law_with_densities(const EmbeddedGraph& g, const SpanningTree& t,
                                       const std::vector<Density>& face_densities,
                                       const std::vector<EdgeWord>& loops,
                                       bool mixed_average, const LawOptions& opt = {});

// Edge-paradigm law: enumerate the edge configurations weighted by
// prod_F Q_area(F)(h(dF)) against the product Haar measure. `fix_tree` pins
// the tree edges to the identity, which preserves exactly the statistics
// invariant under vertex-wise conjugation: canonical tuples of loops with a
// common base, and per-loop class functions in general. Raw tuple laws (e.g.
// Haar marginals of tree paths) need the full enumeration. The weights must
// renormalize to 1 within 1e-10, otherwise the enumeration aborts.
LoopLaw exact_density_law(const EmbeddedGraph& g, const std::vector<double>& areas,
                          const JumpMeasure& levy, const std::vector<EdgeWord>& loops,
                          const LawOptions& opt = {},
                          const SpanningTree* fix_tree = nullptr);
LoopLaw exact_density_law_with_densities(const EmbeddedGraph& g,
                                         const std::vector<Density>& face_densities,
                                         const std::vector<EdgeWord>& loops,
                                         const LawOptions& opt = {},
                                         const SpanningTree* fix_tree = nullptr);

struct WilsonEstimate {
  double mean = 0;
  double stderr_ = 0;
  uint64_t n_samples = 0;
};

// Monte Carlo expectation of a diagonal-conjugation-invariant function of the
// loop holonomies; the invariance is verified exhaustively. Deterministic for
// a fixed seed, independent of the thread count.
WilsonEstimate wilson_estimate(const EmbeddedGraph& g, const SpanningTree& t,
                               const std::vector<double>& areas, const JumpMeasure& levy,
                               const std::vector<EdgeWord>& loops,
                               const std::function<double(const std::vector<int>&)>& f,
                               uint64_t n_samples, uint64_t seed, unsigned threads = 1,
                               bool validate_invariance = true);
WilsonEstimate wilson_estimate(const EmbeddedGraph& g, const SpanningTree& t,
                               const std::vector<double>& areas, const CircleLevy& levy,
                               const std::vector<EdgeWord>& loops,
                               const std::function<double(const std::vector<double>&)>& f,
                               uint64_t n_samples, uint64_t seed, unsigned threads = 1);

// Empirical circle-group loop law (stored samples).
LoopLaw sample_loop_law(const EmbeddedGraph& g, const SpanningTree& t,
                        const std::vector<double>& areas, const CircleLevy& levy,
                        const std::vector<EdgeWord>& loops, uint64_t n_samples,
                        uint64_t seed);

}  // namespace ym
