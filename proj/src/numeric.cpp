#include "convgraph/numeric.hpp"

#include <cmath>
#include <limits>

#include "convgraph/errors.hpp"

namespace convgraph {

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw EmptyInput("mean of empty sample");
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw InsufficientSamples("variance needs >= 2 samples");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double ibeta_cont_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-30;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double ibeta_reg(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error("ibeta_reg requires a, b > 0");
  }
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw Error("ibeta_reg requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  // Symmetry keeps the continued fraction in its fast-converging region.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * ibeta_cont_fraction(a, b, x) / a;
  }
  return 1.0 - front * ibeta_cont_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_tailed_p(double t, double df) {
  if (!(df > 0.0)) throw Error("degrees of freedom must be positive");
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return ibeta_reg(df / 2.0, 0.5, x);
}

}  // namespace convgraph
