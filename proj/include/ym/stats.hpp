#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ym {

// Regularized upper incomplete gamma Q(a, x); chi-square survival function is
// Q(df/2, x/2).
double gamma_q(double a, double x);
double chisq_pvalue(double statistic, int dof);

// Goodness of fit of observed counts against exact cell probabilities.
// Cells with expected count below `min_expected` are pooled.
struct ChiSquare {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
};
ChiSquare chisq_goodness_of_fit(const std::vector<uint64_t>& observed,
                                const std::vector<double>& probs, double min_expected = 5.0);

// Two-sample homogeneity test on shared cells.
ChiSquare chisq_two_sample(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                           double min_expected = 5.0);

}  // namespace ym
