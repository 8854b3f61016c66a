#include "tsboost/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "tsboost/common.hpp"

namespace tsboost {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ConfusionCounts confusion_at_threshold(std::span<const double> scores,
                                       std::span<const std::uint8_t> labels, double threshold) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("confusion_at_threshold: scores/labels length mismatch");
  if (scores.empty()) throw std::invalid_argument("confusion_at_threshold: empty input");
  ConfusionCounts c;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] >= threshold;
    const bool pos = labels[i] != 0;
    if (pred && pos)
      ++c.tp;
    else if (pred && !pos)
      ++c.fp;
    else if (!pred && pos)
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

std::pair<double, double> precision_recall(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) throw std::invalid_argument("precision_recall: no positive labels");
  const double precision =
      (c.tp + c.fp == 0) ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  const double recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  return {precision, recall};
}

PRCurve pr_auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("pr_auc: scores/labels length mismatch");
  const std::size_t n = scores.size();
  std::size_t n_pos = 0;
  for (auto y : labels) n_pos += (y != 0);
  if (n_pos == 0) throw std::invalid_argument("pr_auc: no positive labels");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  PRCurve curve;
  curve.recall.push_back(0.0);
  curve.precision.push_back(1.0);  // convention at tp+fp = 0

  double auc = 0.0;
  std::size_t tp = 0, fp = 0;
  double prev_recall = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      if (labels[order[j]] != 0)
        ++tp;
      else
        ++fp;
      ++j;
    }
    const double recall = static_cast<double>(tp) / static_cast<double>(n_pos);
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    auc += (recall - prev_recall) * precision;
    prev_recall = recall;
    curve.recall.push_back(recall);
    curve.precision.push_back(precision);
    i = j;
  }
  curve.auc = auc;
  return curve;
}

void save_pr_curve_csv(const PRCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "recall,precision\n";
  for (std::size_t i = 0; i < curve.recall.size(); ++i)
    out << format_double(curve.recall[i]) << "," << format_double(curve.precision[i]) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tsboost
