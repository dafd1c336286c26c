#pragma once
// Descriptive statistics over the aggregated contact graph, the corpus and the
// attendance table.

#include <cstdint>
#include <vector>

#include "talkwalk/dataset.hpp"

namespace talkwalk {

// One point of a cumulative histogram: how many items have value >= x.
struct HistogramBin {
  std::int64_t x = 0;
  std::int64_t count = 0;
  bool operator==(const HistogramBin&) const = default;
};

// Per (participant, slot) attendance cases. A case falls into exactly one of:
// changed (records span two sessions), visited_all (every talk of the stayed-in
// session), exactly two, exactly one. Partial visits of 3+ talks in longer
// sessions fall outside the named buckets, so the four never exceed the total.
struct SessionBehavior {
  std::int64_t attended_cases = 0;
  std::int64_t visited_all = 0;
  std::int64_t changed_session = 0;
  std::int64_t visited_exactly_two = 0;
  std::int64_t visited_exactly_one = 0;
  bool operator==(const SessionBehavior&) const = default;
};

struct StatsReport {
  std::int64_t node_count = 0;  // participants appearing in the contact log
  std::int64_t edge_count = 0;  // aggregated contact pairs
  double average_degree = 0;
  double average_path_length = 0;  // unweighted hops, ordered reachable pairs
  std::int64_t diameter = 0;       // within the largest connected component
  double average_contact_duration = 0;  // aggregated seconds per pair
  std::vector<HistogramBin> contact_length_all;         // per raw interval
  std::vector<HistogramBin> contact_length_aggregated;  // per pair total
  std::vector<HistogramBin> papers_per_participant;
  SessionBehavior sessions;
};

StatsReport dataset_stats(const Dataset& dataset);

}  // namespace talkwalk
