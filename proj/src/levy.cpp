#include "ym/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ym {

double Density::tv(const Density& other) const {
  if (group != other.group && group->order() != other.group->order())
    throw std::invalid_argument("tv: densities on different groups");
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - other.p[i]);
  return 0.5 * s;
}

bool Density::validate(double tol) const {
  double s = 0;
  for (double x : p) {
    if (x < -tol || !std::isfinite(x)) return false;
    s += x;
  }
  return std::abs(s - 1.0) <= tol;
}

Density dirac(const FiniteGroup& g, int element) {
  Density d{&g, std::vector<double>(g.order(), 0.0)};
  d.p[element] = 1.0;
  return d;
}

Density uniform_density(const FiniteGroup& g) {
  return Density{&g, std::vector<double>(g.order(), 1.0 / g.order())};
}

Density convolve(const Density& a, const Density& b) {
  const FiniteGroup& g = *a.group;
  Density r{&g, std::vector<double>(g.order(), 0.0)};
  for (int x = 0; x < g.order(); ++x) {
    if (a.p[x] == 0.0) continue;
    for (int y = 0; y < g.order(); ++y) r.p[g.mul(x, y)] += a.p[x] * b.p[y];
  }
  return r;
}

Density conjugate(const Density& a, int g) {
  const FiniteGroup& grp = *a.group;
  Density r{&grp, std::vector<double>(grp.order(), 0.0)};
  for (int x = 0; x < grp.order(); ++x) r.p[grp.conj(x, g)] += a.p[x];
  return r;
}

Density conjugation_average(const Density& a) {
  const FiniteGroup& grp = *a.group;
  Density r{&grp, std::vector<double>(grp.order(), 0.0)};
  for (int g = 0; g < grp.order(); ++g) {
    for (int x = 0; x < grp.order(); ++x) r.p[grp.conj(x, g)] += a.p[x];
  }
  for (double& v : r.p) v /= grp.order();
  return r;
}

double JumpMeasure::total_rate() const {
  return std::accumulate(rates.begin(), rates.end(), 0.0);
}

std::vector<int> JumpMeasure::support() const {
  std::vector<int> s;
  for (int i = 0; i < int(rates.size()); ++i)
    if (rates[i] > 0) s.push_back(i);
  return s;
}

JumpMeasure JumpMeasure::from_rates(const FiniteGroup& g, std::vector<double> rates) {
  if (int(rates.size()) != g.order())
    throw std::invalid_argument("jump measure: rate vector size mismatch");
  for (double r : rates)
    if (r < 0 || !std::isfinite(r)) throw std::invalid_argument("jump measure: bad rate");
  if (rates[g.identity()] != 0.0)
    throw std::invalid_argument("jump measure: identity rate must be zero");
  return JumpMeasure{&g, std::move(rates)};
}

Density semigroup_density(const JumpMeasure& m, double t, double tail_tol) {
  if (t < 0) throw std::invalid_argument("semigroup_density: t < 0");
  const FiniteGroup& g = *m.group;
  const double lambda = m.total_rate();
  if (t == 0.0 || lambda == 0.0) return dirac(g, g.identity());

  Density jump{&g, m.rates};
  for (double& v : jump.p) v /= lambda;

  Density out{&g, std::vector<double>(g.order(), 0.0)};
  Density power = dirac(g, g.identity());
  const double mean = lambda * t;
  double weight = std::exp(-mean);
  double cum = 0.0;
  for (int k = 0; cum < 1.0 - tail_tol; ++k) {
    if (k > 0) {
      power = convolve(power, jump);
      weight *= mean / k;
    }
    for (int x = 0; x < g.order(); ++x) out.p[x] += weight * power.p[x];
    cum += weight;
    if (k > mean + 20.0 * std::sqrt(mean) + 200.0) break;
  }
  return out;
}

int sample_levy(const JumpMeasure& m, double t, Rng& rng) {
  if (t < 0) throw std::invalid_argument("sample_levy: t < 0");
  const FiniteGroup& g = *m.group;
  const double lambda = m.total_rate();
  if (t == 0.0 || lambda == 0.0) return g.identity();
  uint64_t n = rng.next_poisson(lambda * t);
  int x = g.identity();
  for (uint64_t i = 0; i < n; ++i) {
    double u = rng.next_double() * lambda;
    double acc = 0.0;
    int jump = g.identity();
    for (int a = 0; a < g.order(); ++a) {
      acc += m.rates[a];
      if (u < acc) {
        jump = a;
        break;
      }
    }
    x = g.mul(x, jump);
  }
  return x;
}

InvarianceScope invariance_scope(const JumpMeasure& m) {
  const FiniteGroup& g = *m.group;
  auto supp = m.support();
  std::vector<int> h = supp.empty() ? std::vector<int>{g.identity()}
                                    : subgroup_generated(g, supp);
  auto invariant_under = [&](const std::vector<int>& conjugators) {
    for (int x : conjugators)
      for (int a = 0; a < g.order(); ++a)
        if (std::abs(m.rates[g.conj(a, x)] - m.rates[a]) > 1e-12) return false;
    return true;
  };
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  InvarianceKind kind = InvarianceKind::neither;
  if (invariant_under(all))
    kind = InvarianceKind::pure;
  else if (invariant_under(h))
    kind = InvarianceKind::self_invariant;
  return InvarianceScope{kind, std::move(h)};
}

MixingResult itokawada_mixing(const Density& p, int n_max, double tol) {
  const FiniteGroup& g = *p.group;
  Density target = uniform_density(g);
  MixingResult res;
  Density cur = p;
  for (int n = 1; n <= n_max; ++n) {
    double tv = cur.tv(target);
    res.tv_trace.push_back(tv);
    if (!res.n_mixed && tv < tol) res.n_mixed = n;
    if (n < n_max) cur = convolve(cur, p);
  }
  return res;
}

bool quasi_invariance_check(const Density& m, const Density& nu, int n_max, double tol) {
  if (m.group->order() != nu.group->order())
    throw std::invalid_argument("quasi_invariance_check: group mismatch");
  const FiniteGroup& g = *m.group;
  Density nu_pow = nu;
  for (int n = 1; n <= n_max; ++n) {
    // (1/|G|) sum_g (m^g)^{*n}
    Density avg{&g, std::vector<double>(g.order(), 0.0)};
    for (int x = 0; x < g.order(); ++x) {
      Density mg = conjugate(m, x);
      Density mg_pow = mg;
      for (int k = 1; k < n; ++k) mg_pow = convolve(mg_pow, mg);
      for (int a = 0; a < g.order(); ++a) avg.p[a] += mg_pow.p[a];
    }
    for (double& v : avg.p) v /= g.order();
    if (avg.tv(nu_pow) > tol) return false;
    if (n < n_max) nu_pow = convolve(nu_pow, nu);
  }
  return true;
}

HolderFit holder_check(const JumpMeasure& m, const std::vector<double>& times) {
  HolderFit fit{true, 0.0, {}};
  const int e = m.group->identity();
  for (double t : times) {
    if (t <= 0) throw std::invalid_argument("holder_check: times must be positive");
    Density q = semigroup_density(m, t);
    double ratio = (1.0 - q.p[e]) / std::sqrt(t);
    fit.ratios.push_back(ratio);
    fit.k_fitted = std::max(fit.k_fitted, ratio);
  }
  fit.holds = std::isfinite(fit.k_fitted);
  return fit;
}

static constexpr double kTwoPi = 6.283185307179586476925287;

double circle_density(const CircleLevy& c, double t, double theta) {
  if (c.variance_rate <= 0) throw std::invalid_argument("circle: variance_rate must be positive");
  if (t < 0) throw std::invalid_argument("circle_density: t < 0");
  if (t == 0.0) throw std::invalid_argument("circle_density: t = 0 is a point mass");
  const double v = c.variance_rate * t;
  const double norm = 1.0 / std::sqrt(kTwoPi * v);
  theta = std::fmod(theta, kTwoPi);
  double sum = 0.0;
  for (int k = 0;; ++k) {
    double up = norm * std::exp(-(theta + kTwoPi * k) * (theta + kTwoPi * k) / (2 * v));
    double down = norm * std::exp(-(theta - kTwoPi * (k + 1)) * (theta - kTwoPi * (k + 1)) / (2 * v));
    sum += up + down;
    if (up < 1e-14 && down < 1e-14) break;
    if (k > 10000) break;
  }
  return sum;
}

double circle_sample(const CircleLevy& c, double t, Rng& rng) {
  if (c.variance_rate <= 0) throw std::invalid_argument("circle: variance_rate must be positive");
  if (t < 0) throw std::invalid_argument("circle_sample: t < 0");
  if (t == 0.0) return 0.0;
  double x = rng.next_normal() * std::sqrt(c.variance_rate * t);
  x = std::fmod(x, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x;
}

}  // namespace ym
