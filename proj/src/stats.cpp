#include "talkwalk/stats.hpp"

#include <deque>
#include <map>
#include <set>

namespace talkwalk {

namespace {

// Cumulative histogram over the observed values: one bin per distinct value,
// counting items at least that large.
std::vector<HistogramBin> cumulative_histogram(const std::vector<std::int64_t>& values) {
  std::map<std::int64_t, std::int64_t> counts;
  for (auto v : values) counts[v]++;
  std::vector<HistogramBin> bins;
  std::int64_t at_least = static_cast<std::int64_t>(values.size());
  for (const auto& [value, count] : counts) {
    bins.push_back({value, at_least});
    at_least -= count;
  }
  return bins;
}

}  // namespace

StatsReport dataset_stats(const Dataset& ds) {
  StatsReport report;

  // Aggregated contact graph: one edge per pair, weight = total seconds.
  std::map<std::pair<std::string, std::string>, std::int64_t> pair_seconds;
  std::vector<std::int64_t> raw_durations;
  for (const auto& c : ds.contacts.intervals) {
    pair_seconds[{c.u, c.v}] += c.when.duration();
    raw_durations.push_back(c.when.duration());
  }
  std::set<std::string> node_set;
  std::map<std::string, std::vector<std::string>> adjacency;
  std::vector<std::int64_t> pair_totals;
  for (const auto& [pair, seconds] : pair_seconds) {
    node_set.insert(pair.first);
    node_set.insert(pair.second);
    adjacency[pair.first].push_back(pair.second);
    adjacency[pair.second].push_back(pair.first);
    pair_totals.push_back(seconds);
  }
  report.node_count = static_cast<std::int64_t>(node_set.size());
  report.edge_count = static_cast<std::int64_t>(pair_seconds.size());
  if (report.node_count > 0)
    report.average_degree = 2.0 * static_cast<double>(report.edge_count) /
                            static_cast<double>(report.node_count);
  if (!pair_totals.empty()) {
    std::int64_t total = 0;
    for (auto s : pair_totals) total += s;
    report.average_contact_duration =
        static_cast<double>(total) / static_cast<double>(pair_totals.size());
  }

  // BFS from every node: path lengths over ordered reachable pairs, diameter
  // restricted to the largest connected component.
  std::vector<std::string> nodes(node_set.begin(), node_set.end());
  std::map<std::string, std::size_t> node_index;
  for (std::size_t i = 0; i < nodes.size(); ++i) node_index[nodes[i]] = i;

  std::vector<std::int64_t> component(nodes.size(), -1);
  std::int64_t component_count = 0;
  std::vector<std::int64_t> component_size;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (component[i] >= 0) continue;
    std::deque<std::size_t> queue{i};
    component[i] = component_count;
    std::int64_t size = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& nbr : adjacency[nodes[cur]]) {
        std::size_t j = node_index[nbr];
        if (component[j] < 0) {
          component[j] = component_count;
          queue.push_back(j);
        }
      }
    }
    component_size.push_back(size);
    ++component_count;
  }
  std::int64_t largest = 0;
  for (std::int64_t c = 0; c < component_count; ++c)
    if (component_size[c] > component_size[largest]) largest = c;

  std::int64_t pair_count = 0;
  std::int64_t distance_sum = 0;
  std::int64_t diameter = 0;
  std::vector<std::int64_t> dist(nodes.size());
  for (std::size_t src = 0; src < nodes.size(); ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& nbr : adjacency[nodes[cur]]) {
        std::size_t j = node_index[nbr];
        if (dist[j] < 0) {
          dist[j] = dist[cur] + 1;
          queue.push_back(j);
        }
      }
    }
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == src || dist[j] < 0) continue;
      distance_sum += dist[j];
      ++pair_count;
      if (component[src] == largest) diameter = std::max(diameter, dist[j]);
    }
  }
  if (pair_count > 0)
    report.average_path_length =
        static_cast<double>(distance_sum) / static_cast<double>(pair_count);
  report.diameter = diameter;

  report.contact_length_all = cumulative_histogram(raw_durations);
  report.contact_length_aggregated = cumulative_histogram(pair_totals);

  // Papers per participant, over everyone the dataset mentions.
  {
    std::vector<std::int64_t> paper_counts;
    std::int64_t max_papers = 0;
    for (const auto& pid : ds.participants()) {
      auto it = ds.corpus.documents.find(pid);
      std::int64_t n = it == ds.corpus.documents.end()
                           ? 0
                           : static_cast<std::int64_t>(it->second.size());
      paper_counts.push_back(n);
      max_papers = std::max(max_papers, n);
    }
    for (std::int64_t x = 0; x <= max_papers; ++x) {
      std::int64_t count = 0;
      for (auto n : paper_counts)
        if (n >= x) ++count;
      report.papers_per_participant.push_back({x, count});
    }
    if (report.papers_per_participant.empty() && !paper_counts.empty())
      report.papers_per_participant.push_back(
          {0, static_cast<std::int64_t>(paper_counts.size())});
  }

  // Session behavior per (participant, slot) case.
  for (const auto& [participant, slots] : ds.attendance.index) {
    for (const auto& [slot_id, by_position] : slots) {
      if (by_position.empty()) continue;
      report.sessions.attended_cases++;
      std::set<std::string> sessions_used;
      for (const auto& [pos, talk_id] : by_position)
        sessions_used.insert(ds.schedule.talk(talk_id).session);
      if (sessions_used.size() > 1) {
        report.sessions.changed_session++;
        continue;
      }
      const Session& sess = ds.schedule.session(*sessions_used.begin());
      const std::size_t visited = by_position.size();
      if (visited == sess.talks.size())
        report.sessions.visited_all++;
      else if (visited == 2)
        report.sessions.visited_exactly_two++;
      else if (visited == 1)
        report.sessions.visited_exactly_one++;
    }
  }

  return report;
}

}  // namespace talkwalk
