#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tsboost {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

// Predicted positive iff score >= threshold.
ConfusionCounts confusion_at_threshold(std::span<const double> scores,
                                       std::span<const std::uint8_t> labels, double threshold);

// precision = tp/(tp+fp), 1.0 by convention when tp+fp == 0.
// recall = tp/(tp+fn); throws if the set has no positives.
std::pair<double, double> precision_recall(const ConfusionCounts& c);

struct PRCurve {
  std::vector<double> recall;     // nondecreasing
  std::vector<double> precision;  // same length
  double auc = 0.0;               // average precision, step interpolation
};

// Threshold sweep at each distinct score descending; tied scores are processed
// as one group. AUC is average precision: sum_k (R_k - R_{k-1}) * P_k.
// Throws if labels contain no positives.
PRCurve pr_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Two-column CSV (recall,precision) for plotting.
void save_pr_curve_csv(const PRCurve& curve, const std::string& path);

}  // namespace tsboost
