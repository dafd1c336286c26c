#pragma once
// Per-slot layered graphs over person and talk nodes: content similarity,
// coffee-break contacts, and pre-slot contacts with presenters.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "talkwalk/dataset.hpp"
#include "talkwalk/text.hpp"

namespace talkwalk {

enum class NodeKind { Person = 0, Talk = 1, SessionGroup = 2 };

struct NodeId {
  NodeKind kind = NodeKind::Person;
  std::string id;

  auto operator<=>(const NodeId&) const = default;
  static NodeId person(std::string id) { return {NodeKind::Person, std::move(id)}; }
  static NodeId talk(std::string id) { return {NodeKind::Talk, std::move(id)}; }
  static NodeId session(std::string id) { return {NodeKind::SessionGroup, std::move(id)}; }
  std::string label() const;  // "person:alice", "talk:t1", "session:s1"
};

struct Layer {
  std::string name;
  // Directed adjacency; weights strictly positive. Undirected edges are stored
  // in both directions.
  std::map<NodeId, std::map<NodeId, double>> out;

  void add_edge(const NodeId& from, const NodeId& to, double w);  // accumulates
  void add_undirected(const NodeId& a, const NodeId& b, double w);
  void set_undirected(const NodeId& a, const NodeId& b, double w);
  bool has_out(const NodeId& n) const;
  double out_weight(const NodeId& n) const;
  std::size_t edge_entries() const;  // directed entry count
};

enum class WeightMode { Duration, Binary };

inline constexpr std::size_t kCosineLayer = 0;
inline constexpr std::size_t kBreakLayer = 1;
inline constexpr std::size_t kPresenterLayer = 2;

struct LayeredGraph {
  std::string slot;
  std::vector<NodeId> nodes;  // sorted, unique
  std::vector<Layer> layers;  // fixed order: cosine, break, presenter

  std::size_t index_of(const NodeId& n) const;  // throws std::invalid_argument
  bool has_node(const NodeId& n) const;
};

// Directed person -> talk edges, weight = cosine(profile, talk vector),
// zero-similarity edges omitted. Covers every talk of the slot.
Layer build_cosine_layer(const VectorSpace& space, const Schedule& schedule,
                         const TimeSlot& slot);

// Undirected person-person edges weighted by contact overlap with the break
// preceding the slot. No break defined -> empty layer.
Layer build_break_layer(const Dataset& dataset, const TimeSlot& slot, WeightMode mode);

// Contacts that ended before the slot starts and touch a presenter of a slot
// talk; presenter endpoints are replaced by their talk nodes, so edges are
// person-talk or talk-talk. Slot presenters keep no person edges here.
Layer build_presenter_layer(const Dataset& dataset, const TimeSlot& slot, WeightMode mode);

// All participants plus the slot's talks, with the three layers above.
LayeredGraph build_slot_graph(const Dataset& dataset, const VectorSpace& space,
                              const TimeSlot& slot, WeightMode mode = WeightMode::Duration);

struct SessionMerge {
  LayeredGraph graph;  // talk nodes collapsed into per-session supernodes
  std::map<NodeId, NodeId> talk_to_group;
};

// Collapses each session's talks into one supernode, summing raw weights and
// dropping edges that become internal to a supernode.
SessionMerge merge_sessions(const LayeredGraph& graph, const Schedule& schedule);

}  // namespace talkwalk
