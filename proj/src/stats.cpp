// Copyright 2026 The stylofair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stylofair/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/erf.hpp>

#include "stylofair/error.hpp"

namespace stylofair::stats {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DataError("normal quantile needs 0 < p < 1");
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

RegressionFit linfit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DataError("line fit needs at least two points");
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw DataError("degenerate design: all x values are identical");
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.mse = ss_res / n;
  fit.r2 = syy == 0.0 ? 0.0 : 1.0 - ss_res / syy;
  return fit;
}

std::string_view to_string(RankSumMethod m) {
  return m == RankSumMethod::kExact ? "exact" : "asymptotic";
}

namespace {

struct Ranked {
  std::vector<double> ranks;  // a first, then b
  double tie_term = 0.0;      // sum of t^3 - t over tie groups
  bool has_ties = false;
};

Ranked midranks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DataError("rank-sum test needs two non-empty samples");
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  for (double v : all)
    if (!std::isfinite(v)) throw DataError("rank-sum test on a non-finite value");
  std::vector<size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return all[i] < all[j]; });
  Ranked r;
  r.ranks.assign(all.size(), 0.0);
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && all[order[j + 1]] == all[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) r.ranks[order[k]] = rank;
    const double t = static_cast<double>(j - i + 1);
    if (t > 1) {
      r.has_ties = true;
      r.tie_term += t * t * t - t;
    }
    i = j + 1;
  }
  if (r.ranks.size() > 1 && r.tie_term == std::pow(static_cast<double>(all.size()), 3) -
                                             static_cast<double>(all.size()))
    throw UndefinedTestError("rank-sum test undefined: every value is tied");
  return r;
}

}  // namespace

RankSumResult ranksum_asymptotic(std::span<const double> a, std::span<const double> b) {
  const Ranked r = midranks(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;
  double rank_sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) rank_sum += r.ranks[i];
  const double mu = na * (n + 1.0) / 2.0;
  const double var = na * nb / 12.0 * ((n + 1.0) - r.tie_term / (n * (n - 1.0)));
  if (!(var > 0.0)) throw UndefinedTestError("rank-sum test undefined: zero variance");
  const double diff = rank_sum - mu;
  const double corrected = std::max(0.0, std::abs(diff) - 0.5);
  RankSumResult res;
  res.statistic = std::copysign(corrected / std::sqrt(var), diff);
  res.p_value = std::min(1.0, 2.0 * normal_upper_tail(corrected / std::sqrt(var)));
  res.method = RankSumMethod::kAsymptotic;
  res.continuity_correction = true;
  return res;
}

RankSumResult ranksum_exact(std::span<const double> a, std::span<const double> b) {
  const Ranked r = midranks(a, b);
  if (r.has_ties) throw DataError("exact rank-sum test requires untied samples");
  const size_t n = a.size() + b.size();
  if (n > kExactRankSumMaxTotal) throw DataError("exact rank-sum test limited to 12 observations");
  const size_t k = a.size();
  int observed = 0;
  for (size_t i = 0; i < k; ++i) observed += static_cast<int>(r.ranks[i]);

  // Walk every k-subset of ranks 1..n.
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  size_t total = 0, low = 0, high = 0;
  while (true) {
    const int s = std::accumulate(pick.begin(), pick.end(), 0);
    ++total;
    if (s <= observed) ++low;
    if (s >= observed) ++high;
    size_t i = k;
    while (i > 0 && pick[i - 1] == static_cast<int>(n - k + i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  RankSumResult res;
  res.statistic = observed;
  res.p_value = std::min(1.0, 2.0 * static_cast<double>(std::min(low, high)) /
                                  static_cast<double>(total));
  res.method = RankSumMethod::kExact;
  res.continuity_correction = false;
  return res;
}

RankSumResult ranksum(std::span<const double> a, std::span<const double> b) {
  const Ranked r = midranks(a, b);
  if (!r.has_ties && a.size() + b.size() <= kExactRankSumMaxTotal) return ranksum_exact(a, b);
  return ranksum_asymptotic(a, b);
}

// ---------------------------------------------------------------------------
// Shapiro-Wilk, Royston (1995) AS R94.

namespace {

double poly(std::span<const double> c, double x) {
  double result = 0.0;
  for (size_t i = c.size(); i-- > 0;) result = result * x + c[i];
  return result;
}

constexpr double kC1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr double kC2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double kC3[] = {0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[] = {-2.273, 0.459};

}  // namespace

NormalityResult shapiro_wilk(std::span<const double> sample) {
  const size_t n = sample.size();
  if (n < 3 || n > 5000) throw DataError("Shapiro-Wilk needs 3 <= n <= 5000");
  std::vector<double> x(sample.begin(), sample.end());
  for (double v : x)
    if (!std::isfinite(v)) throw DataError("Shapiro-Wilk on a non-finite value");
  std::sort(x.begin(), x.end());
  if (x.back() - x.front() <= 0.0) throw DataError("Shapiro-Wilk undefined for zero variance");

  const size_t half = n / 2;
  std::vector<double> a(half);  // upper-half coefficients, positive
  if (n == 3) {
    a[0] = std::sqrt(0.5);
  } else {
    std::vector<double> m(half);
    double summ2 = 0.0;
    for (size_t i = 0; i < half; ++i) {
      m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (static_cast<double>(n) + 0.25));
      summ2 += m[i] * m[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
    const double a1 = poly(kC1, rsn) - m[0] / ssumm2;
    size_t first;
    double fac;
    if (n > 5) {
      const double a2 = -m[1] / ssumm2 + poly(kC2, rsn);
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
      first = 2;
    } else {
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
      first = 1;
    }
    a[0] = a1;
    for (size_t i = first; i < half; ++i) a[i] = -m[i] / fac;
  }

  // Centred, range-scaled sample.
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double range = x.back() - x.front();
  double ssx = 0.0;
  for (double& v : x) {
    v = (v - mean) / range;
    ssx += v * v;
  }
  double num = 0.0;
  for (size_t i = 0; i < half; ++i) num += a[i] * (x[n - 1 - i] - x[i]);
  NormalityResult res;
  res.w = std::min(1.0, num * num / ssx);

  if (n == 3) {
    constexpr double kPi = 3.14159265358979323846;
    res.p_value = std::max(0.0, 6.0 / kPi * (std::asin(std::sqrt(res.w)) - kPi / 3.0));
    return res;
  }
  const double w1 = std::log1p(-res.w);
  if (!std::isfinite(w1)) {
    res.p_value = 1.0;
    return res;
  }
  const double nn = static_cast<double>(n);
  double y, mu, sigma;
  if (n <= 11) {
    const double gamma = poly(kG, nn);
    if (w1 >= gamma) {
      res.p_value = 1e-99;
      return res;
    }
    y = -std::log(gamma - w1);
    mu = poly(kC3, nn);
    sigma = std::exp(poly(kC4, nn));
  } else {
    const double ln = std::log(nn);
    y = w1;
    mu = poly(kC5, ln);
    sigma = std::exp(poly(kC6, ln));
  }
  res.p_value = normal_upper_tail((y - mu) / sigma);
  return res;
}

double misclassification_probability(size_t misclassified, size_t total) {
  if (total == 0) throw DataError("misclassification probability over zero test comments");
  if (misclassified > total) throw DataError("more misclassified comments than test comments");
  return static_cast<double>(misclassified) / static_cast<double>(total);
}

}  // namespace stylofair::stats
