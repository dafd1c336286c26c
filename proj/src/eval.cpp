#include "talkwalk/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace talkwalk {

namespace {

constexpr double kZ95 = 1.959963984540054;  // 97.5% normal quantile

void fill_proportion(CategoryStat& s) {
  if (s.n == 0) {
    s.probability = std::numeric_limits<double>::quiet_NaN();
    s.ci_low = s.probability;
    s.ci_high = s.probability;
    return;
  }
  const double p = static_cast<double>(s.hits) / static_cast<double>(s.n);
  const double half = kZ95 * std::sqrt(p * (1 - p) / static_cast<double>(s.n));
  s.probability = p;
  s.ci_low = std::max(0.0, p - half);
  s.ci_high = std::min(1.0, p + half);
}

}  // namespace

AccuracyResult accuracy_ci(const std::vector<Decision>& decisions) {
  if (decisions.empty()) throw std::invalid_argument("no decisions to score");
  std::size_t correct = 0;
  for (const auto& d : decisions) correct += d.correct() ? 1 : 0;
  CategoryStat s;
  s.n = decisions.size();
  s.hits = correct;
  fill_proportion(s);
  return {s.probability, s.ci_low, s.ci_high, s.n};
}

std::vector<ScoredLabel> expand_decisions(const std::vector<Decision>& decisions) {
  std::vector<ScoredLabel> labels;
  for (const auto& d : decisions) {
    bool found = false;
    for (const auto& [talk, score] : d.normalized) {
      const bool positive = talk == d.attended;
      found = found || positive;
      labels.push_back({score, positive});
    }
    if (!found)
      throw std::invalid_argument("attended talk " + d.attended +
                                  " is not among the scored candidates");
  }
  return labels;
}

double mann_whitney_auc(std::vector<ScoredLabel> labels) {
  std::size_t positives = 0;
  for (const auto& l : labels) positives += l.positive ? 1 : 0;
  const std::size_t negatives = labels.size() - positives;
  if (positives == 0 || negatives == 0)
    throw std::invalid_argument("AUC needs at least one positive and one negative");

  std::sort(labels.begin(), labels.end(),
            [](const ScoredLabel& a, const ScoredLabel& b) { return a.score < b.score; });
  double positive_rank_sum = 0;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i;
    while (j < labels.size() && labels[j].score == labels[i].score) ++j;
    const double shared_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k)
      if (labels[k].positive) positive_rank_sum += shared_rank;
    i = j;
  }
  const double np = static_cast<double>(positives);
  const double u = positive_rank_sum - np * (np + 1) / 2.0;
  return u / (np * static_cast<double>(negatives));
}

double auc(const std::vector<Decision>& decisions) {
  return mann_whitney_auc(expand_decisions(decisions));
}

EvaluationReport evaluate(const std::vector<Decision>& decisions, std::string population) {
  const AccuracyResult acc = accuracy_ci(decisions);
  EvaluationReport report;
  report.accuracy = acc.accuracy;
  report.ci_low = acc.ci_low;
  report.ci_high = acc.ci_high;
  report.auc_value = auc(decisions);
  report.decision_count = decisions.size();
  for (const auto& d : decisions) report.tie_count += d.tie ? 1 : 0;
  report.population = std::move(population);
  return report;
}

namespace {

// participant -> attended talk, per (slot id, position).
using PositionAttendance =
    std::map<std::pair<std::string, std::size_t>, std::vector<std::pair<std::string, std::string>>>;

PositionAttendance attendance_by_position(const Dataset& ds) {
  PositionAttendance by_position;
  for (const auto& [participant, slots] : ds.attendance.index)
    for (const auto& [slot, positions] : slots)
      for (const auto& [position, talk] : positions)
        by_position[{slot, position}].emplace_back(participant, talk);
  return by_position;
}

}  // namespace

std::vector<CategoryStat> influence_same_talk(const Dataset& dataset) {
  const auto contacts = dataset.contacts.by_pair();
  std::vector<CategoryStat> stats(4);
  stats[0].name = "coffee_break";
  stats[1].name = "prior_contact";
  stats[2].name = "contact_by_end";
  stats[3].name = "no_contact";

  for (const auto& [key, attendees] : attendance_by_position(dataset)) {
    const TimeSlot& slot = dataset.schedule.slot(key.first);
    const auto break_it = dataset.schedule.breaks.find(slot.id);
    for (std::size_t i = 0; i < attendees.size(); ++i) {
      for (std::size_t j = i + 1; j < attendees.size(); ++j) {
        const bool same = attendees[i].second == attendees[j].second;
        const auto pair_it =
            contacts.find({attendees[i].first, attendees[j].first});
        bool in_break = false, prior = false;
        const bool ever = pair_it != contacts.end();
        if (ever) {
          for (const auto& when : pair_it->second) {
            prior = prior || when.end < slot.start;
            in_break = in_break ||
                       (break_it != dataset.schedule.breaks.end() &&
                        when.overlap(break_it->second) > 0);
          }
        }
        const bool hit[4] = {in_break, prior, ever, !ever};
        for (std::size_t c = 0; c < 4; ++c) {
          if (!hit[c]) continue;
          stats[c].n++;
          stats[c].hits += same ? 1 : 0;
        }
      }
    }
  }
  for (auto& s : stats) fill_proportion(s);
  return stats;
}

std::vector<CategoryStat> influence_presenter(const Dataset& dataset,
                                              const std::vector<EpochSeconds>& thresholds) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 20)
      throw std::invalid_argument("thresholds below the 20 s sensor resolution");
    if (i > 0 && thresholds[i] <= thresholds[i - 1])
      throw std::invalid_argument("thresholds must be strictly increasing");
  }
  const auto contacts = dataset.contacts.by_pair();
  std::vector<CategoryStat> stats(thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    stats[i].name = std::to_string(thresholds[i]);

  for (const auto& [key, attendees] : attendance_by_position(dataset)) {
    const TimeSlot& slot = dataset.schedule.slot(key.first);
    for (const auto& talk_id : dataset.schedule.talks_at(slot, key.second)) {
      const std::string& presenter = dataset.schedule.talk(talk_id).presenter;
      for (const auto& [participant, attended] : attendees) {
        const auto pair_it = contacts.find({std::min(participant, presenter),
                                            std::max(participant, presenter)});
        EpochSeconds aggregated = 0;
        if (participant != presenter && pair_it != contacts.end()) {
          for (const auto& when : pair_it->second)
            if (when.end < slot.start) aggregated += when.duration();
        }
        for (std::size_t i = 0; i < thresholds.size(); ++i) {
          if (aggregated < thresholds[i]) break;  // thresholds increase
          stats[i].n++;
          stats[i].hits += attended == talk_id ? 1 : 0;
        }
      }
    }
  }
  for (auto& s : stats) fill_proportion(s);
  return stats;
}

std::vector<EpochSeconds> default_presenter_thresholds() {
  std::vector<EpochSeconds> thresholds;
  for (EpochSeconds t = 20; t <= 1280; t *= 2) thresholds.push_back(t);
  return thresholds;
}

}  // namespace talkwalk
