#pragma once

// Reference computations used only by tests. They deliberately share no
// code with the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace confprio::testing {

// DCG of a grade sequence, written straight from the definition.
inline double reference_dcg(const std::vector<int>& grades, int k) {
  double dcg = 0.0;
  for (int i = 0; i < k && i < static_cast<int>(grades.size()); ++i) {
    dcg += (std::pow(2.0, grades[i]) - 1.0) / (std::log(i + 2.0) / std::log(2.0));
  }
  return dcg;
}

// IDCG by trying every permutation of the judged grades.
inline double brute_force_idcg(std::vector<int> judged, int k) {
  std::sort(judged.begin(), judged.end());
  double best = 0.0;
  do {
    best = std::max(best, reference_dcg(judged, k));
  } while (std::next_permutation(judged.begin(), judged.end()));
  return best;
}

inline double brute_force_ndcg(const std::vector<int>& run_grades, const std::vector<int>& judged,
                               int k) {
  const double idcg = brute_force_idcg(judged, k);
  return idcg == 0.0 ? 0.0 : reference_dcg(run_grades, k) / idcg;
}

// Student t density.
inline double t_pdf(double x, double nu) {
  const double log_c = std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
                       0.5 * std::log(nu * M_PI);
  return std::exp(log_c - (nu + 1.0) / 2.0 * std::log1p(x * x / nu));
}

// Two-sided tail probability by composite Simpson integration of the density
// over [0, |t|].
inline double t_two_sided_quadrature(double t, double nu, int intervals = 200000) {
  const double upper = std::fabs(t);
  if (upper == 0.0) return 1.0;
  const double h = upper / intervals;
  double s = t_pdf(0.0, nu) + t_pdf(upper, nu);
  for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * t_pdf(i * h, nu);
  const double central = s * h / 3.0;
  return 1.0 - 2.0 * central;
}

inline double reference_paired_p(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double se = std::sqrt(ss / (n - 1)) / std::sqrt(static_cast<double>(n));
  return t_two_sided_quadrature(mean / se, static_cast<double>(n - 1));
}

}  // namespace confprio::testing
