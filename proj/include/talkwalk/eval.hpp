#pragma once
// Evaluation: accuracy with normal-approximation confidence intervals,
// Mann-Whitney AUC over expanded decisions, and contact-influence analyses.

#include <cstdint>
#include <string>
#include <vector>

#include "talkwalk/dataset.hpp"
#include "talkwalk/predict.hpp"

namespace talkwalk {

struct AccuracyResult {
  double accuracy = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::size_t n = 0;
};

// Throws std::invalid_argument on an empty decision list. 95% CI, clamped.
AccuracyResult accuracy_ci(const std::vector<Decision>& decisions);

struct ScoredLabel {
  double score = 0;
  bool positive = false;
};

// One positive (the attended talk) and one negative per alternative, carrying
// normalized scores.
std::vector<ScoredLabel> expand_decisions(const std::vector<Decision>& decisions);

// Rank-based Mann-Whitney statistic; tied scores count 1/2. Throws
// std::invalid_argument when either class is empty.
double mann_whitney_auc(std::vector<ScoredLabel> labels);

double auc(const std::vector<Decision>& decisions);

struct EvaluationReport {
  double accuracy = 0;
  double ci_low = 0;
  double ci_high = 0;
  double auc_value = 0;
  std::size_t decision_count = 0;
  std::size_t tie_count = 0;
  std::string population;
};

EvaluationReport evaluate(const std::vector<Decision>& decisions, std::string population);

struct CategoryStat {
  std::string name;
  std::size_t n = 0;
  std::size_t hits = 0;
  double probability = 0;  // NaN when n == 0
  double ci_low = 0;
  double ci_high = 0;
};

// P(two participants sit in the same talk | contact category), over all pairs
// attending the same slot position. Categories: contact overlapping the slot's
// break, any contact ended before the slot, any contact at all, no contact
// ever. The first three overlap by construction; no_contact is disjoint.
std::vector<CategoryStat> influence_same_talk(const Dataset& dataset);

// P(participant attends the talk | aggregated pre-slot contact with its
// presenter >= threshold), over participants attending the talk's position.
// One stat per threshold; thresholds must be >= 20 and strictly increasing.
std::vector<CategoryStat> influence_presenter(const Dataset& dataset,
                                              const std::vector<EpochSeconds>& thresholds);

std::vector<EpochSeconds> default_presenter_thresholds();  // 20, 40, ..., 1280

}  // namespace talkwalk
