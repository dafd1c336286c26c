#pragma once
// Shared test fixtures and independent oracles.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "talkwalk/dataset.hpp"
#include "talkwalk/eval.hpp"
#include "talkwalk/graphs.hpp"
#include "talkwalk/walk.hpp"

namespace testutil {

// Independent stationary solver: pi = pi * T with sum(pi) = 1, via Gaussian
// elimination on (T^t - I) with the last equation replaced by the
// normalization row. Well-posed whenever the restart makes the chain unichain.
inline std::vector<double> dense_stationary(const talkwalk::TransitionMatrix& t) {
  const std::size_t n = t.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = t.at(j, i) - (i == j ? 1.0 : 0.0);
  std::vector<double> b(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) a[(n - 1) * n + j] = 1.0;
  b[n - 1] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      std::swap(b[pivot], b[col]);
    }
    const double d = a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / d;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random multigraph over <= max_nodes nodes with layer_count layers. Leaves
// some nodes without out-edges so the dead-end fallback gets exercised.
inline talkwalk::LayeredGraph random_layered_graph(std::mt19937_64& rng,
                                                   std::size_t max_nodes,
                                                   std::size_t layer_count,
                                                   bool unit_weights = false) {
  talkwalk::LayeredGraph graph;
  graph.slot = "test";
  const std::size_t n = 2 + rng() % (max_nodes - 1);
  for (std::size_t i = 0; i < n; ++i)
    graph.nodes.push_back(talkwalk::NodeId::person("n" + std::to_string(100 + i)));
  for (std::size_t li = 0; li < layer_count; ++li) {
    talkwalk::Layer layer{.name = "layer" + std::to_string(li), .out = {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (u01(rng) < 0.25) continue;  // node isolated in this layer
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || u01(rng) < 0.55) continue;
        const double w = unit_weights ? 1.0 : 0.1 + 1.9 * u01(rng);
        layer.add_edge(graph.nodes[i], graph.nodes[j], w);
      }
    }
    graph.layers.push_back(std::move(layer));
  }
  return graph;
}

// Random point on the simplex with strictly positive coordinates, summing to 1
// exactly (the last coordinate absorbs the rounding).
inline std::vector<double> random_mixture(std::mt19937_64& rng, std::size_t layers) {
  std::vector<double> raw(layers);
  double total = 0;
  for (auto& v : raw) {
    v = 0.05 + u01(rng);
    total += v;
  }
  std::vector<double> mix(layers);
  double partial = 0;
  for (std::size_t i = 0; i + 1 < layers; ++i) {
    mix[i] = raw[i] / total;
    partial += mix[i];
  }
  mix[layers - 1] = 1.0 - partial;
  return mix;
}

// ROC integration oracle: sweep score thresholds from high to low, grouping
// ties into single (possibly diagonal) segments, and integrate by trapezoids.
inline double trapezoid_auc(std::vector<talkwalk::ScoredLabel> labels) {
  std::sort(labels.begin(), labels.end(),
            [](const talkwalk::ScoredLabel& a, const talkwalk::ScoredLabel& b) {
              return a.score > b.score;
            });
  double positives = 0, negatives = 0;
  for (const auto& l : labels) (l.positive ? positives : negatives) += 1;
  double area = 0, tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i;
    double dtp = 0, dfp = 0;
    while (j < labels.size() && labels[j].score == labels[i].score) {
      (labels[j].positive ? dtp : dfp) += 1;
      ++j;
    }
    area += dfp * (tp + (tp + dtp)) / 2.0;
    tp += dtp;
    fp += dfp;
    i = j;
  }
  (void)fp;
  return area / (positives * negatives);
}

// Two slots with two parallel two-talk sessions each. Session a* sits in
// room_a on the bigger track, b* in room_b on the smaller one. Every talk has
// its own presenter (qa1, qa2, ...). Breaks: [500,1000] and [2000,3000].
inline talkwalk::Schedule two_slot_schedule() {
  using namespace talkwalk;
  Schedule sched;
  sched.slots.push_back({"s1", 1000, 2000, {"a1", "b1"}});
  sched.slots.push_back({"s2", 3000, 4000, {"a2", "b2"}});
  sched.breaks["s1"] = {500, 1000};
  sched.breaks["s2"] = {2000, 3000};
  sched.sessions["a1"] = {"a1", "room_a", "s1", {"ta1", "ta2"}};
  sched.sessions["b1"] = {"b1", "room_b", "s1", {"tb1", "tb2"}};
  sched.sessions["a2"] = {"a2", "room_a", "s2", {"tc1", "tc2"}};
  sched.sessions["b2"] = {"b2", "room_b", "s2", {"td1", "td2"}};
  sched.track_paper_counts["big"] = 5;
  sched.track_paper_counts["small"] = 3;
  auto add_talk = [&](const std::string& id, const std::string& session,
                      const std::string& track, const std::string& presenter) {
    Talk t;
    t.id = id;
    t.title = id + " title";
    t.abstract_text = id + " abstract";
    t.session = session;
    t.track = track;
    t.presenter = presenter;
    sched.talks[id] = std::move(t);
  };
  add_talk("ta1", "a1", "big", "qa1");
  add_talk("ta2", "a1", "big", "qa2");
  add_talk("tb1", "b1", "small", "qb1");
  add_talk("tb2", "b1", "small", "qb2");
  add_talk("tc1", "a2", "big", "qc1");
  add_talk("tc2", "a2", "big", "qc2");
  add_talk("td1", "b2", "small", "qd1");
  add_talk("td2", "b2", "small", "qd2");
  validate_schedule(sched);
  return sched;
}

inline void attend(talkwalk::Dataset& ds,
                   std::vector<std::pair<std::string, std::string>> records) {
  for (auto& [p, t] : records) ds.attendance.records.push_back({p, t});
  ds.attendance.build_index(ds.schedule);
}

}  // namespace testutil
