#pragma once

#include <optional>
#include <vector>

#include "ym/group.hpp"
#include "ym/rng.hpp"

namespace ym {

// Probability mass function on a finite group. The density with respect to
// the normalized Haar (= uniform) measure is |G| * p(g).
struct Density {
  const FiniteGroup* group = nullptr;
  std::vector<double> p;

  double tv(const Density& other) const;
  bool validate(double tol = 1e-12) const;  // nonnegative, sums to 1
};

Density dirac(const FiniteGroup& g, int element);
Density uniform_density(const FiniteGroup& g);
// Law of XY with X ~ a, Y ~ b independent.
Density convolve(const Density& a, const Density& b);
// Law of g^{-1} X g.
Density conjugate(const Density& a, int g);
// (1/|G|) sum_g law of g^{-1} X g.
Density conjugation_average(const Density& a);

// Jump rates of a compound-Poisson Levy process on a finite group; the rate
// at the identity must be zero.
struct JumpMeasure {
  const FiniteGroup* group = nullptr;
  std::vector<double> rates;

  double total_rate() const;
  std::vector<int> support() const;  // elements with positive rate
  static JumpMeasure from_rates(const FiniteGroup& g, std::vector<double> rates);
};

// Marginal Q_t of the process as a Poisson mixture of convolution powers of
// the normalized jump law; the Poisson tail below `tail_tol` is dropped.
Density semigroup_density(const JumpMeasure& m, double t, double tail_tol = 1e-12);

// Exact-in-distribution draw of Y_t by uniformization: a Poisson(t*lambda)
// number of i.i.d. jumps.
int sample_levy(const JumpMeasure& m, double t, Rng& rng);

enum class InvarianceKind { pure, self_invariant, neither };

struct InvarianceScope {
  InvarianceKind kind;
  std::vector<int> support_subgroup;  // H_Y
};

InvarianceScope invariance_scope(const JumpMeasure& m);

struct MixingResult {
  std::optional<int> n_mixed;   // smallest n with TV(p^{*n}, uniform) < tol
  std::vector<double> tv_trace; // tv_trace[k] = TV(p^{*(k+1)}, uniform)
};

// Iterated convolution against the uniform target (Ito-Kawada behaviour).
MixingResult itokawada_mixing(const Density& p, int n_max, double tol);

// Checks int_G (m^g)^{*n} dg == nu^{*n} for n = 1..n_max at the given TV
// tolerance.
bool quasi_invariance_check(const Density& m, const Density& nu, int n_max,
                            double tol = 1e-10);

struct HolderFit {
  bool holds;      // bound 1 - Q_t(e) <= K sqrt(t) with the fitted K
  double k_fitted; // max over the sampled times of (1 - Q_t(e)) / sqrt(t)
  std::vector<double> ratios;
};

HolderFit holder_check(const JumpMeasure& m, const std::vector<double>& times);

// Brownian motion on the circle group, angles in [0, 2pi).
struct CircleLevy {
  double variance_rate = 1.0;
  double drift = 0.0;  // used by the index-field drift, not by sampling
};

// Wrapped Gaussian heat kernel density at angle theta, time t.
double circle_density(const CircleLevy& c, double t, double theta);
double circle_sample(const CircleLevy& c, double t, Rng& rng);

}  // namespace ym
