#pragma once
// Attendance predictors: track-size and first-room baselines, cosine ranking,
// hybrid random-walk scoring and the mixture sweep.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "talkwalk/dataset.hpp"
#include "talkwalk/graphs.hpp"
#include "talkwalk/text.hpp"
#include "talkwalk/walk.hpp"

namespace talkwalk {

// Composition of the three networks. Field order follows the sweep grid
// convention (cosine, presenter, break); layer_mixture() reorders to the graph
// layer order (cosine, break, presenter).
struct Mixture {
  double cosine = 1;
  double presenter = 0;
  double coffee_break = 0;

  std::vector<double> layer_mixture() const { return {cosine, coffee_break, presenter}; }
  bool contact_only() const { return cosine == 0; }
};

// One attendance choice between the parallel talks at a slot position.
struct Decision {
  std::string participant;
  std::string slot;
  std::size_t position = 0;
  std::vector<std::pair<std::string, double>> scores;      // talk -> raw, sorted by talk id
  std::vector<std::pair<std::string, double>> normalized;  // raw / sum, 0s when sum == 0
  std::string predicted;  // argmax, lexicographic on ties
  std::string attended;   // ground truth
  bool tie = false;

  bool correct() const { return predicted == attended; }
};

// Normalizes, picks the argmax (smallest talk id wins ties and sets the flag).
Decision make_decision(std::string participant, std::string slot, std::size_t position,
                       const std::map<std::string, double>& raw_scores, std::string attended);

// Predicts the talk whose track accepted more papers. One decision per
// attended position of every attending participant.
std::vector<Decision> baseline_majority(const Dataset& dataset);

// Predicts the talk held in the room of the participant's first attended talk;
// the slot containing that first talk is excluded for the participant.
std::vector<Decision> baseline_room(const Dataset& dataset);

enum class CosineMode { TalkWise, SessionMax, SessionAvg };

// Ranks parallel talks by profile-talk cosine. Session modes score whole
// sessions (max or mean over their talks) and apply the choice to every
// attended position. Only participants with profiles take part.
std::vector<Decision> cosine_predict(const Dataset& dataset, const VectorSpace& space,
                                     CosineMode mode);

struct HrprOptions {
  double alpha = 0.15;
  double tolerance = 1e-10;
  std::int64_t max_iterations = 100000;
  Mixture mixture;
  bool merged = false;  // collapse sessions into supernodes before walking
  WeightMode weight_mode = WeightMode::Duration;
  TalkRepresentation representation = TalkRepresentation::FullPaper;
};

// Scores slot talks by their stationary probability in the walk rooted at the
// participant; merged graphs score the talk's session supernode instead, so
// parallel talks inherit their sessions' scores. Mixtures using the cosine
// layer evaluate only participants with profiles.
std::vector<Decision> hrpr_predict(const Dataset& dataset, const VectorSpace& space,
                                   const HrprOptions& options);

struct SweepPoint {
  Mixture mixture;
  double auc_value = 0;
  double accuracy = 0;
  std::size_t decision_count = 0;
};

// Evaluates every mixture on the step grid (p_cosine + p_presenter + p_break
// = 1), ordered lexicographically by (p_cosine, p_presenter). step must divide
// 1 evenly. Points are independent; TALKWALK_THREADS caps the worker count.
std::vector<SweepPoint> sweep(const Dataset& dataset, const VectorSpace& space,
                              const HrprOptions& base, double step = 0.1);

}  // namespace talkwalk
