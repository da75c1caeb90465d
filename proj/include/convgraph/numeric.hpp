#pragma once

#include <cstddef>
#include <span>

namespace convgraph {

/// Pairwise (cascade) summation; order-independent up to the fixed
/// recursive split and markedly more stable than a running sum.
double pairwise_sum(std::span<const double> xs);

double mean(std::span<const double> xs);

/// Unbiased sample variance (n - 1 denominator). Requires xs.size() >= 2.
double sample_variance(std::span<const double> xs);

/// Regularized incomplete beta function I_x(a, b) via the Lentz continued
/// fraction. a, b > 0 and x in [0, 1].
double ibeta_reg(double a, double b, double x);

/// Two-tailed p-value of Student's t statistic with df degrees of freedom:
/// p = I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_tailed_p(double t, double df);

}  // namespace convgraph
