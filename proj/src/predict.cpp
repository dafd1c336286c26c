#include "talkwalk/predict.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "talkwalk/eval.hpp"

namespace talkwalk {

Decision make_decision(std::string participant, std::string slot, std::size_t position,
                       const std::map<std::string, double>& raw_scores, std::string attended) {
  if (raw_scores.empty()) throw std::invalid_argument("decision needs at least one candidate");
  Decision d;
  d.participant = std::move(participant);
  d.slot = std::move(slot);
  d.position = position;
  d.attended = std::move(attended);
  double sum = 0;
  for (const auto& [talk, score] : raw_scores) {
    if (score < 0) throw std::invalid_argument("negative score for talk " + talk);
    d.scores.emplace_back(talk, score);
    sum += score;
  }
  double best = -1;
  std::size_t best_count = 0;
  for (const auto& [talk, score] : d.scores) {
    d.normalized.emplace_back(talk, sum > 0 ? score / sum : 0.0);
    if (score > best) {
      best = score;
      d.predicted = talk;
      best_count = 1;
    } else if (score == best) {
      ++best_count;
    }
  }
  d.tie = best_count > 1;
  return d;
}

namespace {

// Attended (slot, position, talk) triples of one participant, in slot order.
struct AttendedCase {
  const TimeSlot* slot;
  std::size_t position;
  std::string talk;
};

std::vector<AttendedCase> attended_cases(const Dataset& ds, const std::string& participant) {
  std::vector<AttendedCase> cases;
  auto pit = ds.attendance.index.find(participant);
  if (pit == ds.attendance.index.end()) return cases;
  for (const auto& slot : ds.schedule.slots) {
    auto sit = pit->second.find(slot.id);
    if (sit == pit->second.end()) continue;
    for (const auto& [position, talk] : sit->second)
      cases.push_back({&slot, position, talk});
  }
  return cases;
}

}  // namespace

std::vector<Decision> baseline_majority(const Dataset& dataset) {
  std::vector<Decision> decisions;
  for (const auto& participant : dataset.attendance.participants()) {
    for (const auto& c : attended_cases(dataset, participant)) {
      std::map<std::string, double> scores;
      for (const auto& talk : dataset.schedule.talks_at(*c.slot, c.position)) {
        const auto& track = dataset.schedule.talk(talk).track;
        auto it = dataset.schedule.track_paper_counts.find(track);
        if (it == dataset.schedule.track_paper_counts.end())
          throw ValidationError("no accepted-paper count for track " + track);
        scores[talk] = static_cast<double>(it->second);
      }
      decisions.push_back(make_decision(participant, c.slot->id, c.position, scores, c.talk));
    }
  }
  return decisions;
}

std::vector<Decision> baseline_room(const Dataset& dataset) {
  std::vector<Decision> decisions;
  for (const auto& participant : dataset.attendance.participants()) {
    const auto cases = attended_cases(dataset, participant);
    if (cases.empty()) continue;
    const std::string& room =
        dataset.schedule.session(dataset.schedule.talk(cases.front().talk).session).room;
    const std::string& first_slot = cases.front().slot->id;
    for (const auto& c : cases) {
      if (c.slot->id == first_slot) continue;
      bool room_present = false;
      std::map<std::string, double> scores;
      for (const auto& talk : dataset.schedule.talks_at(*c.slot, c.position)) {
        const bool match =
            dataset.schedule.session(dataset.schedule.talk(talk).session).room == room;
        scores[talk] = match ? 1.0 : 0.0;
        room_present = room_present || match;
      }
      for (const auto& session_id : c.slot->sessions)
        room_present = room_present || dataset.schedule.session(session_id).room == room;
      if (!room_present)
        throw ValidationError("slot " + c.slot->id + " has no session in room " + room);
      decisions.push_back(make_decision(participant, c.slot->id, c.position, scores, c.talk));
    }
  }
  return decisions;
}

std::vector<Decision> cosine_predict(const Dataset& dataset, const VectorSpace& space,
                                     CosineMode mode) {
  std::vector<Decision> decisions;
  for (const auto& [participant, profile] : space.profiles) {
    for (const auto& c : attended_cases(dataset, participant)) {
      std::map<std::string, double> scores;
      for (const auto& talk : dataset.schedule.talks_at(*c.slot, c.position)) {
        if (mode == CosineMode::TalkWise) {
          scores[talk] = cosine(profile, space.talk_vectors.at(talk));
          continue;
        }
        const auto& session = dataset.schedule.session(dataset.schedule.talk(talk).session);
        double best = 0, sum = 0;
        for (const auto& other : session.talks) {
          const double s = cosine(profile, space.talk_vectors.at(other));
          best = std::max(best, s);
          sum += s;
        }
        scores[talk] = mode == CosineMode::SessionMax
                           ? best
                           : sum / static_cast<double>(session.talks.size());
      }
      decisions.push_back(make_decision(participant, c.slot->id, c.position, scores, c.talk));
    }
  }
  return decisions;
}

std::vector<Decision> hrpr_predict(const Dataset& dataset, const VectorSpace& space,
                                   const HrprOptions& options) {
  WalkConfig config{options.alpha, options.mixture.layer_mixture(), options.tolerance,
                    options.max_iterations};
  config.validate(3);

  std::vector<std::string> population;
  for (const auto& participant : dataset.attendance.participants()) {
    if (options.mixture.contact_only() || space.profiles.count(participant))
      population.push_back(participant);
  }

  std::vector<Decision> decisions;
  for (const auto& slot : dataset.schedule.slots) {
    const bool anyone_here = std::any_of(
        population.begin(), population.end(), [&](const std::string& participant) {
          auto pit = dataset.attendance.index.find(participant);
          return pit->second.count(slot.id) != 0;
        });
    if (!anyone_here) continue;
    LayeredGraph graph = build_slot_graph(dataset, space, slot, options.weight_mode);
    std::map<NodeId, NodeId> talk_to_group;
    if (options.merged) {
      SessionMerge merge = merge_sessions(graph, dataset.schedule);
      talk_to_group = std::move(merge.talk_to_group);
      graph = std::move(merge.graph);
    }
    for (const auto& participant : population) {
      auto pit = dataset.attendance.index.find(participant);
      auto sit = pit->second.find(slot.id);
      if (sit == pit->second.end()) continue;
      const TransitionMatrix t =
          hybrid_transition(graph, NodeId::person(participant), config);
      const StationaryDistribution pi =
          stationary(t, config.tolerance, config.max_iterations);
      for (const auto& [position, attended] : sit->second) {
        std::map<std::string, double> scores;
        for (const auto& talk : dataset.schedule.talks_at(slot, position)) {
          const NodeId node = NodeId::talk(talk);
          scores[talk] = pi.at(options.merged ? talk_to_group.at(node) : node);
        }
        decisions.push_back(make_decision(participant, slot.id, position, scores, attended));
      }
    }
  }
  return decisions;
}

namespace {

std::size_t worker_count(std::size_t jobs) {
  std::size_t threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* cap = std::getenv("TALKWALK_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(cap, &end, 10);
    if (end != cap && parsed >= 1) threads = static_cast<std::size_t>(parsed);
  }
  return std::min(threads, jobs == 0 ? std::size_t{1} : jobs);
}

}  // namespace

std::vector<SweepPoint> sweep(const Dataset& dataset, const VectorSpace& space,
                              const HrprOptions& base, double step) {
  if (!(step > 0) || step > 1) throw std::invalid_argument("step must lie in (0, 1]");
  const auto ticks = static_cast<std::int64_t>(std::llround(1.0 / step));
  if (std::abs(step * static_cast<double>(ticks) - 1.0) > 1e-9)
    throw std::invalid_argument("step must divide 1 evenly");

  std::vector<Mixture> grid;
  for (std::int64_t a = 0; a <= ticks; ++a)
    for (std::int64_t b = 0; b + a <= ticks; ++b) {
      Mixture m;
      m.cosine = static_cast<double>(a) / static_cast<double>(ticks);
      m.presenter = static_cast<double>(b) / static_cast<double>(ticks);
      m.coffee_break = static_cast<double>(ticks - a - b) / static_cast<double>(ticks);
      grid.push_back(m);
    }

  std::vector<SweepPoint> points(grid.size());
  auto run_point = [&](std::size_t i) {
    HrprOptions options = base;
    options.mixture = grid[i];
    const std::vector<Decision> decisions = hrpr_predict(dataset, space, options);
    points[i] = {grid[i], auc(decisions), accuracy_ci(decisions).accuracy, decisions.size()};
  };

  const std::size_t threads = worker_count(grid.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) run_point(i);
    return points;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < threads; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) run_point(i);
    });
  for (auto& w : workers) w.join();
  return points;
}

}  // namespace talkwalk
