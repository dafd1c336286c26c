#pragma once
// Rooted random walks with restart over layered graphs, and their stationary
// distributions.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "talkwalk/graphs.hpp"

namespace talkwalk {

struct WalkConfig {
  double alpha = 0.15;           // restart probability, in (0, 1)
  std::vector<double> mixture;   // per-layer pick probabilities, sums to 1
  double tolerance = 1e-10;      // L1 convergence threshold
  std::int64_t max_iterations = 100000;

  void validate(std::size_t layer_count) const;  // throws std::invalid_argument
};

struct TransitionMatrix {
  std::vector<NodeId> nodes;
  std::size_t root = 0;
  std::vector<double> rows;  // n*n row-major; every row sums to 1

  std::size_t size() const { return nodes.size(); }
  double at(std::size_t from, std::size_t to) const { return rows[from * size() + to]; }
};

struct StationaryDistribution {
  std::vector<NodeId> nodes;
  std::vector<double> probabilities;  // sums to 1

  double at(const NodeId& n) const;  // throws std::invalid_argument if absent
};

struct ConvergenceError : std::runtime_error {
  std::vector<double> last_iterate;
  double residual;
  ConvergenceError(const std::string& msg, std::vector<double> it, double res)
      : std::runtime_error(msg), last_iterate(std::move(it)), residual(res) {}
};

// One step: restart to root with probability alpha; otherwise pick layer i with
// probability mixture[i] and follow a weight-proportional out-edge, falling
// back to the root when the current node has no out-edges in that layer.
TransitionMatrix hybrid_transition(const LayeredGraph& graph, const NodeId& root,
                                   const WalkConfig& config);

enum class NeighborChoice { Uniform, ByWeight };

// Classic single-network rooted walk over one layer's adjacency.
TransitionMatrix rooted_transition(const Layer& layer, const std::vector<NodeId>& nodes,
                                   const NodeId& root, double alpha, NeighborChoice choice);

// Power iteration from the uniform vector until the L1 change drops below
// tolerance; throws ConvergenceError after max_iterations.
StationaryDistribution stationary(const TransitionMatrix& transition, double tolerance,
                                  std::int64_t max_iterations);

// Stationary probabilities of the given target nodes, rooted at root.
std::map<NodeId, double> hrpr_score(const LayeredGraph& graph, const NodeId& root,
                                    const std::vector<NodeId>& targets,
                                    const WalkConfig& config);

// Empirical visit frequencies of one seeded walk, discarding the first 1% of
// steps as burn-in.
StationaryDistribution monte_carlo_stationary(const LayeredGraph& graph, const NodeId& root,
                                              const WalkConfig& config, std::int64_t steps,
                                              std::uint64_t seed);

}  // namespace talkwalk
