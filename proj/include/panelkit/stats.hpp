#pragma once

#include <string>

namespace panelkit {

// Standard normal distribution.
double normal_cdf(double x);
double normal_pdf(double x);
double normal_quantile(double p);  // inverse cdf, 0 < p < 1

// Two-sided p-value for an asymptotically N(0,1) statistic.
double normal_p_two_sided(double z);

// Chi-square distribution with k > 0 degrees of freedom.
double chi2_cdf(double x, double k);
double chi2_quantile(double p, double k);

// Significance stars: *** p<0.01, ** p<0.05, * p<0.10.
std::string stars(double p_value);

}  // namespace panelkit
