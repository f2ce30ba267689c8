#pragma once

#include <span>

namespace ccp {

// Survival function P(X >= x) of the chi-squared distribution with 2k degrees
// of freedom, via the closed form exp(-x/2) * sum_{j<k} (x/2)^j / j!.
double chi_squared_survival_even(double x, int half_df);

// Fisher's combination of p-values: the survival probability of
// -2 * sum(log p_k) under chi-squared with 2K degrees of freedom. Identity
// for K = 1. Each p_k must lie in (0, 1]; the result lies in (0, 1].
double fisher_combine(std::span<const double> pvalues);

}  // namespace ccp
