#include "talkwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace talkwalk {

void WalkConfig::validate(std::size_t layer_count) const {
  if (!(alpha > 0) || !(alpha < 1))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  if (mixture.size() != layer_count)
    throw std::invalid_argument("mixture length must match the layer count");
  double sum = 0;
  for (double p : mixture) {
    if (p < 0) throw std::invalid_argument("mixture entries must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("mixture must sum to 1");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

double StationaryDistribution::at(const NodeId& n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  if (it == nodes.end() || *it != n)
    throw std::invalid_argument("node not in distribution: " + n.label());
  return probabilities[static_cast<std::size_t>(it - nodes.begin())];
}

TransitionMatrix hybrid_transition(const LayeredGraph& graph, const NodeId& root,
                                   const WalkConfig& config) {
  config.validate(graph.layers.size());
  TransitionMatrix t;
  t.nodes = graph.nodes;
  t.root = graph.index_of(root);
  const std::size_t n = t.nodes.size();
  t.rows.assign(n * n, 0.0);

  const double follow = 1.0 - config.alpha;
  for (std::size_t c = 0; c < n; ++c) {
    double* row = &t.rows[c * n];
    row[t.root] += config.alpha;
    for (std::size_t li = 0; li < graph.layers.size(); ++li) {
      const double p = config.mixture[li];
      if (p == 0) continue;
      const auto it = graph.layers[li].out.find(t.nodes[c]);
      if (it == graph.layers[li].out.end() || it->second.empty()) {
        row[t.root] += follow * p;  // dead end in this layer: back to the root
        continue;
      }
      double total = 0;
      for (const auto& [to, w] : it->second) total += w;
      for (const auto& [to, w] : it->second)
        row[graph.index_of(to)] += follow * p * (w / total);
    }
  }
  return t;
}

TransitionMatrix rooted_transition(const Layer& layer, const std::vector<NodeId>& nodes,
                                   const NodeId& root, double alpha, NeighborChoice choice) {
  if (!(alpha > 0) || !(alpha < 1))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  TransitionMatrix t;
  t.nodes = nodes;
  auto root_it = std::lower_bound(nodes.begin(), nodes.end(), root);
  if (root_it == nodes.end() || *root_it != root)
    throw std::invalid_argument("root not among nodes: " + root.label());
  t.root = static_cast<std::size_t>(root_it - nodes.begin());
  const std::size_t n = nodes.size();
  t.rows.assign(n * n, 0.0);
  auto index_of = [&](const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id)
      throw std::invalid_argument("edge endpoint not among nodes: " + id.label());
    return static_cast<std::size_t>(it - nodes.begin());
  };
  const double follow = 1.0 - alpha;
  for (std::size_t c = 0; c < n; ++c) {
    double* row = &t.rows[c * n];
    row[t.root] += alpha;
    const auto it = layer.out.find(nodes[c]);
    if (it == layer.out.end() || it->second.empty()) {
      row[t.root] += follow;
      continue;
    }
    if (choice == NeighborChoice::Uniform) {
      const double share = follow / static_cast<double>(it->second.size());
      for (const auto& [to, w] : it->second) row[index_of(to)] += share;
    } else {
      double total = 0;
      for (const auto& [to, w] : it->second) total += w;
      for (const auto& [to, w] : it->second) row[index_of(to)] += follow * (w / total);
    }
  }
  return t;
}

StationaryDistribution stationary(const TransitionMatrix& transition, double tolerance,
                                  std::int64_t max_iterations) {
  const std::size_t n = transition.size();
  if (n == 0) throw std::invalid_argument("empty transition matrix");
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double residual = 0;
  for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t c = 0; c < n; ++c) {
      const double xc = x[c];
      if (xc == 0) continue;
      const double* row = &transition.rows[c * n];
      for (std::size_t j = 0; j < n; ++j) next[j] += xc * row[j];
    }
    residual = 0;
    for (std::size_t j = 0; j < n; ++j) residual += std::abs(next[j] - x[j]);
    x.swap(next);
    if (residual < tolerance) {
      double sum = 0;
      for (double v : x) sum += v;
      for (double& v : x) v /= sum;
      return {transition.nodes, std::move(x)};
    }
  }
  throw ConvergenceError("power iteration did not converge within " +
                             std::to_string(max_iterations) + " iterations (residual " +
                             std::to_string(residual) + ")",
                         std::move(x), residual);
}

std::map<NodeId, double> hrpr_score(const LayeredGraph& graph, const NodeId& root,
                                    const std::vector<NodeId>& targets,
                                    const WalkConfig& config) {
  const TransitionMatrix t = hybrid_transition(graph, root, config);
  const StationaryDistribution pi = stationary(t, config.tolerance, config.max_iterations);
  std::map<NodeId, double> scores;
  for (const auto& target : targets) scores[target] = pi.at(target);
  return scores;
}

StationaryDistribution monte_carlo_stationary(const LayeredGraph& graph, const NodeId& root,
                                              const WalkConfig& config, std::int64_t steps,
                                              std::uint64_t seed) {
  config.validate(graph.layers.size());
  if (steps < 100) throw std::invalid_argument("need at least 100 steps");
  const std::size_t n = graph.nodes.size();
  const std::size_t root_idx = graph.index_of(root);

  // Per node and layer: neighbour indices with cumulative weights.
  struct Alternatives {
    std::vector<std::size_t> neighbors;
    std::vector<double> cumulative;
  };
  std::vector<std::vector<Alternatives>> walkable(graph.layers.size(),
                                                  std::vector<Alternatives>(n));
  for (std::size_t li = 0; li < graph.layers.size(); ++li) {
    for (const auto& [from, nbrs] : graph.layers[li].out) {
      Alternatives& alt = walkable[li][graph.index_of(from)];
      double running = 0;
      for (const auto& [to, w] : nbrs) {
        running += w;
        alt.neighbors.push_back(graph.index_of(to));
        alt.cumulative.push_back(running);
      }
    }
  }
  std::vector<double> layer_cumulative;
  double running = 0;
  for (double p : config.mixture) {
    running += p;
    layer_cumulative.push_back(running);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::int64_t burn_in = steps / 100;  // discard the first 1%
  std::vector<std::int64_t> visits(n, 0);
  std::size_t state = root_idx;
  for (std::int64_t step = 1; step <= steps; ++step) {
    if (unit(rng) < config.alpha) {
      state = root_idx;
    } else {
      const double pick = unit(rng) * layer_cumulative.back();
      std::size_t li = 0;
      while (li + 1 < layer_cumulative.size() && pick >= layer_cumulative[li]) ++li;
      const Alternatives& alt = walkable[li][state];
      if (alt.neighbors.empty()) {
        state = root_idx;
      } else {
        const double target = unit(rng) * alt.cumulative.back();
        const auto it =
            std::upper_bound(alt.cumulative.begin(), alt.cumulative.end(), target);
        const std::size_t pos = std::min(
            static_cast<std::size_t>(it - alt.cumulative.begin()), alt.neighbors.size() - 1);
        state = alt.neighbors[pos];
      }
    }
    if (step > burn_in) visits[state]++;
  }
  const double denom = static_cast<double>(steps - burn_in);
  std::vector<double> freq(n);
  for (std::size_t i = 0; i < n; ++i) freq[i] = static_cast<double>(visits[i]) / denom;
  return {graph.nodes, std::move(freq)};
}

}  // namespace talkwalk
