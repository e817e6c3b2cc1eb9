#include "ym/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ym {

namespace {

// Series expansion of P(a,x), valid for x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a+1 (Lentz's method).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chisq_pvalue(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquare chisq_goodness_of_fit(const std::vector<uint64_t>& observed,
                                const std::vector<double>& probs, double min_expected) {
  if (observed.size() != probs.size())
    throw std::invalid_argument("chisq: cell count mismatch");
  uint64_t n = 0;
  for (uint64_t o : observed) n += o;
  if (n == 0) throw std::invalid_argument("chisq: empty sample");
  // Pool small-expectation cells into one.
  double stat = 0;
  int cells = 0;
  double pool_exp = 0;
  uint64_t pool_obs = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    double expect = probs[i] * double(n);
    if (expect < min_expected) {
      pool_exp += expect;
      pool_obs += observed[i];
      continue;
    }
    double d = double(observed[i]) - expect;
    stat += d * d / expect;
    ++cells;
  }
  if (pool_exp > 0) {
    double d = double(pool_obs) - pool_exp;
    stat += d * d / pool_exp;
    ++cells;
  }
  ChiSquare r;
  r.statistic = stat;
  r.dof = cells - 1;
  r.p_value = chisq_pvalue(stat, r.dof);
  return r;
}

ChiSquare chisq_two_sample(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                           double min_expected) {
  if (a.size() != b.size()) throw std::invalid_argument("chisq: cell count mismatch");
  double na = 0, nb = 0;
  for (uint64_t x : a) na += double(x);
  for (uint64_t x : b) nb += double(x);
  if (na == 0 || nb == 0) throw std::invalid_argument("chisq: empty sample");
  double stat = 0;
  int cells = 0;
  double pa = 0, pb = 0, pt = 0;
  auto add_cell = [&](double oa, double ob, double tot) {
    double ea = na * tot / (na + nb), eb = nb * tot / (na + nb);
    if (ea > 0) stat += (oa - ea) * (oa - ea) / ea;
    if (eb > 0) stat += (ob - eb) * (ob - eb) / eb;
    ++cells;
  };
  for (size_t i = 0; i < a.size(); ++i) {
    double tot = double(a[i] + b[i]);
    double ea = na * tot / (na + nb);
    double eb = nb * tot / (na + nb);
    if (ea < min_expected || eb < min_expected) {
      pa += double(a[i]);
      pb += double(b[i]);
      pt += tot;
      continue;
    }
    add_cell(double(a[i]), double(b[i]), tot);
  }
  if (pt > 0) add_cell(pa, pb, pt);
  ChiSquare r;
  r.statistic = stat;
  r.dof = cells - 1;
  r.p_value = chisq_pvalue(stat, r.dof);
  return r;
}

}  // namespace ym
