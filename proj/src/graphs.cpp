#include "talkwalk/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace talkwalk {

std::string NodeId::label() const {
  switch (kind) {
    case NodeKind::Person:
      return "person:" + id;
    case NodeKind::Talk:
      return "talk:" + id;
    case NodeKind::SessionGroup:
      return "session:" + id;
  }
  return id;
}

void Layer::add_edge(const NodeId& from, const NodeId& to, double w) {
  if (w <= 0) throw std::invalid_argument("layer edges need positive weight");
  out[from][to] += w;
}

void Layer::add_undirected(const NodeId& a, const NodeId& b, double w) {
  add_edge(a, b, w);
  add_edge(b, a, w);
}

void Layer::set_undirected(const NodeId& a, const NodeId& b, double w) {
  if (w <= 0) throw std::invalid_argument("layer edges need positive weight");
  out[a][b] = w;
  out[b][a] = w;
}

bool Layer::has_out(const NodeId& n) const {
  auto it = out.find(n);
  return it != out.end() && !it->second.empty();
}

double Layer::out_weight(const NodeId& n) const {
  auto it = out.find(n);
  if (it == out.end()) return 0;
  double sum = 0;
  for (const auto& [to, w] : it->second) sum += w;
  return sum;
}

std::size_t Layer::edge_entries() const {
  std::size_t n = 0;
  for (const auto& [from, nbrs] : out) n += nbrs.size();
  return n;
}

std::size_t LayeredGraph::index_of(const NodeId& n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  if (it == nodes.end() || *it != n)
    throw std::invalid_argument("node not in graph: " + n.label());
  return static_cast<std::size_t>(it - nodes.begin());
}

bool LayeredGraph::has_node(const NodeId& n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  return it != nodes.end() && *it == n;
}

Layer build_cosine_layer(const VectorSpace& space, const Schedule& schedule,
                         const TimeSlot& slot) {
  Layer layer{.name = "cosine", .out = {}};
  for (const auto& [pid, profile] : space.profiles) {
    const NodeId person = NodeId::person(pid);
    for (const auto& session_id : slot.sessions) {
      for (const auto& talk_id : schedule.session(session_id).talks) {
        auto it = space.talk_vectors.find(talk_id);
        if (it == space.talk_vectors.end())
          throw std::invalid_argument("no vector for talk " + talk_id);
        const double sim = cosine(profile, it->second);
        if (sim > 0) layer.add_edge(person, NodeId::talk(talk_id), sim);
      }
    }
  }
  return layer;
}

Layer build_break_layer(const Dataset& dataset, const TimeSlot& slot, WeightMode mode) {
  Layer layer{.name = "break", .out = {}};
  auto brk = dataset.schedule.breaks.find(slot.id);
  if (brk == dataset.schedule.breaks.end()) return layer;  // no break, no edges
  std::map<std::pair<std::string, std::string>, EpochSeconds> overlap;
  for (const auto& c : dataset.contacts.intervals) {
    const EpochSeconds ov = c.when.overlap(brk->second);
    if (ov > 0) overlap[{c.u, c.v}] += ov;
  }
  for (const auto& [pair, seconds] : overlap) {
    const double w = mode == WeightMode::Binary ? 1.0 : static_cast<double>(seconds);
    layer.set_undirected(NodeId::person(pair.first), NodeId::person(pair.second), w);
  }
  return layer;
}

Layer build_presenter_layer(const Dataset& dataset, const TimeSlot& slot, WeightMode mode) {
  Layer layer{.name = "presenter", .out = {}};
  // A person presenting in this slot is represented by their talk node(s).
  std::map<std::string, std::vector<NodeId>> presents;
  for (const auto& session_id : slot.sessions)
    for (const auto& talk_id : dataset.schedule.session(session_id).talks)
      presents[dataset.schedule.talk(talk_id).presenter].push_back(NodeId::talk(talk_id));

  std::map<std::pair<NodeId, NodeId>, EpochSeconds> accumulated;
  for (const auto& c : dataset.contacts.intervals) {
    if (c.when.end >= slot.start) continue;  // only contacts finished before the slot
    auto pu = presents.find(c.u);
    auto pv = presents.find(c.v);
    if (pu == presents.end() && pv == presents.end()) continue;
    const std::vector<NodeId> u_nodes =
        pu != presents.end() ? pu->second : std::vector<NodeId>{NodeId::person(c.u)};
    const std::vector<NodeId> v_nodes =
        pv != presents.end() ? pv->second : std::vector<NodeId>{NodeId::person(c.v)};
    for (const auto& un : u_nodes)
      for (const auto& vn : v_nodes) {
        if (un == vn) continue;
        auto key = un < vn ? std::make_pair(un, vn) : std::make_pair(vn, un);
        accumulated[key] += c.when.duration();
      }
  }
  for (const auto& [pair, seconds] : accumulated) {
    const double w = mode == WeightMode::Binary ? 1.0 : static_cast<double>(seconds);
    layer.set_undirected(pair.first, pair.second, w);
  }
  return layer;
}

LayeredGraph build_slot_graph(const Dataset& dataset, const VectorSpace& space,
                              const TimeSlot& slot, WeightMode mode) {
  LayeredGraph graph;
  graph.slot = slot.id;
  std::set<NodeId> nodes;
  for (const auto& pid : dataset.participants()) nodes.insert(NodeId::person(pid));
  for (const auto& session_id : slot.sessions)
    for (const auto& talk_id : dataset.schedule.session(session_id).talks)
      nodes.insert(NodeId::talk(talk_id));
  graph.nodes.assign(nodes.begin(), nodes.end());
  graph.layers.push_back(build_cosine_layer(space, dataset.schedule, slot));
  graph.layers.push_back(build_break_layer(dataset, slot, mode));
  graph.layers.push_back(build_presenter_layer(dataset, slot, mode));
  return graph;
}

SessionMerge merge_sessions(const LayeredGraph& graph, const Schedule& schedule) {
  SessionMerge merge;
  merge.graph.slot = graph.slot;

  std::set<NodeId> nodes;
  for (const auto& n : graph.nodes) {
    if (n.kind == NodeKind::Talk) {
      const NodeId group = NodeId::session(schedule.talk(n.id).session);
      merge.talk_to_group[n] = group;
      nodes.insert(group);
    } else {
      nodes.insert(n);
    }
  }
  merge.graph.nodes.assign(nodes.begin(), nodes.end());

  auto mapped = [&](const NodeId& n) {
    auto it = merge.talk_to_group.find(n);
    return it == merge.talk_to_group.end() ? n : it->second;
  };
  for (const auto& layer : graph.layers) {
    Layer out{.name = layer.name, .out = {}};
    for (const auto& [from, nbrs] : layer.out) {
      const NodeId f = mapped(from);
      for (const auto& [to, w] : nbrs) {
        const NodeId t = mapped(to);
        if (f == t) continue;  // edges inside a supernode vanish
        out.out[f][t] += w;
      }
    }
    merge.graph.layers.push_back(std::move(out));
  }
  return merge;
}

}  // namespace talkwalk
