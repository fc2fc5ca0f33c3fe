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

#pragma once

// Line fitting, two-sided Wilcoxon rank-sum and Shapiro-Wilk.

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace stylofair::stats {

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double mse = 0.0;
  double r2 = 0.0;
};

// Ordinary least squares. r2 is 0 when y has no variance. Throws DataError
// for fewer than two points or a single distinct x.
RegressionFit linfit(std::span<const std::pair<double, double>> points);

enum class RankSumMethod { kAsymptotic, kExact };
std::string_view to_string(RankSumMethod m);

struct RankSumResult {
  double statistic = 0.0;  // z (asymptotic) or rank sum of `a` (exact)
  double p_value = 1.0;
  RankSumMethod method = RankSumMethod::kAsymptotic;
  bool continuity_correction = true;
};

inline constexpr size_t kExactRankSumMaxTotal = 12;

// Midranks, tie-corrected variance, 0.5 continuity correction, two-sided.
RankSumResult ranksum_asymptotic(std::span<const double> a, std::span<const double> b);
// Full enumeration of rank assignments; requires no ties and |a|+|b| <= 12.
RankSumResult ranksum_exact(std::span<const double> a, std::span<const double> b);
// Exact when feasible, asymptotic otherwise. Throws UndefinedTestError when
// every value is tied and DataError on an empty sample.
RankSumResult ranksum(std::span<const double> a, std::span<const double> b);

struct NormalityResult {
  double w = 1.0;
  double p_value = 1.0;
};

// Royston's approximation (Applied Statistics algorithm R94). Throws
// DataError outside 3 <= n <= 5000 or on zero variance.
NormalityResult shapiro_wilk(std::span<const double> x);

// Share of an author's test comments that were misattributed.
double misclassification_probability(size_t misclassified, size_t total);

double normal_cdf(double z);
double normal_upper_tail(double z);
double normal_quantile(double p);

}  // namespace stylofair::stats
