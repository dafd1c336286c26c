#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "talkwalk/graphs.hpp"

using namespace talkwalk;

namespace {

DocVector vec(std::initializer_list<std::pair<const char*, double>> entries) {
  std::map<std::string, double> w;
  for (const auto& [k, v] : entries) w[k] = v;
  return DocVector::from_weights(w);
}

// Profiles p1..p4 share dimension u with every talk of slot s1; p5 is
// orthogonal to everything.
VectorSpace s1_space() {
  VectorSpace space;
  space.profiles["p1"] = vec({{"u", 1}});
  space.profiles["p2"] = vec({{"u", 1}, {"v", 2}});
  space.profiles["p3"] = vec({{"u", 5}});
  space.profiles["p4"] = vec({{"u", 1}, {"w", 9}});
  space.profiles["p5"] = vec({{"z", 1}});
  space.talk_vectors["ta1"] = vec({{"u", 1}});
  space.talk_vectors["ta2"] = vec({{"u", 2}});
  space.talk_vectors["tb1"] = vec({{"u", 1}, {"v", 1}});
  space.talk_vectors["tb2"] = vec({{"u", 3}});
  return space;
}

}  // namespace

TEST_CASE("layer primitives") {
  Layer layer{.name = "t", .out = {}};
  const NodeId a = NodeId::person("a");
  const NodeId b = NodeId::talk("b");
  CHECK(a.label() == "person:a");
  CHECK(b.label() == "talk:b");
  CHECK(NodeId::session("s").label() == "session:s");

  layer.add_edge(a, b, 1.5);
  layer.add_edge(a, b, 0.5);  // accumulates
  CHECK(layer.out[a][b] == doctest::Approx(2.0));
  CHECK(layer.has_out(a));
  CHECK(!layer.has_out(b));
  CHECK(layer.out_weight(a) == doctest::Approx(2.0));
  CHECK(layer.out_weight(b) == 0.0);
  CHECK(layer.edge_entries() == 1);

  layer.add_undirected(a, b, 1.0);
  CHECK(layer.out[b][a] == doctest::Approx(1.0));
  layer.set_undirected(a, b, 4.0);  // overwrites
  CHECK(layer.out[a][b] == doctest::Approx(4.0));
  CHECK(layer.out[b][a] == doctest::Approx(4.0));

  CHECK_THROWS_AS(layer.add_edge(a, b, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(layer.add_edge(a, b, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(layer.set_undirected(a, b, 0.0), std::invalid_argument);
}

TEST_CASE("cosine layer links interested people to every slot talk") {
  const Schedule sched = testutil::two_slot_schedule();
  const VectorSpace space = s1_space();
  const Layer layer = build_cosine_layer(space, sched, sched.slot("s1"));

  // p1..p4 reach all four talks; p5 has no positive similarity.
  CHECK(layer.edge_entries() == 16);
  CHECK(!layer.has_out(NodeId::person("p5")));

  const auto& p1_out = layer.out.at(NodeId::person("p1"));
  CHECK(p1_out.at(NodeId::talk("ta1")) == doctest::Approx(1.0));
  CHECK(p1_out.at(NodeId::talk("tb1")) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(layer.out.at(NodeId::person("p2")).at(NodeId::talk("tb1")) ==
        doctest::Approx(3.0 / std::sqrt(10.0)));
  CHECK(layer.out_weight(NodeId::person("p1")) ==
        doctest::Approx(3.0 + 1.0 / std::sqrt(2.0)));

  // Talks never point anywhere in this layer.
  for (const auto& [from, nbrs] : layer.out) CHECK(from.kind == NodeKind::Person);

  VectorSpace broken = space;
  broken.talk_vectors.erase("tb2");
  CHECK_THROWS_AS(build_cosine_layer(broken, sched, sched.slot("s1")),
                  std::invalid_argument);
}

TEST_CASE("break layer weighs contact overlap with the preceding break") {
  Dataset ds;
  ds.schedule = testutil::two_slot_schedule();  // breaks: s1 [500,1000], s2 [2000,3000]
  ds.contacts = ContactLog::canonicalize({{"p1", "p2", {400, 560}},
                                          {"p1", "p2", {600, 660}},
                                          {"p1", "p3", {2100, 2200}}},
                                         20);

  const Layer s1 = build_break_layer(ds, ds.schedule.slot("s1"), WeightMode::Duration);
  // [400,560] gives 60 seconds inside the break, [600,660] another 60.
  CHECK(s1.out.at(NodeId::person("p1")).at(NodeId::person("p2")) == doctest::Approx(120.0));
  CHECK(s1.out.at(NodeId::person("p2")).at(NodeId::person("p1")) == doctest::Approx(120.0));
  CHECK(s1.edge_entries() == 2);
  CHECK(!s1.has_out(NodeId::person("p3")));

  const Layer s1_binary = build_break_layer(ds, ds.schedule.slot("s1"), WeightMode::Binary);
  CHECK(s1_binary.out.at(NodeId::person("p1")).at(NodeId::person("p2")) == 1.0);

  const Layer s2 = build_break_layer(ds, ds.schedule.slot("s2"), WeightMode::Duration);
  CHECK(s2.out.at(NodeId::person("p1")).at(NodeId::person("p3")) == doctest::Approx(100.0));
  CHECK(s2.edge_entries() == 2);

  Dataset no_break = ds;
  no_break.schedule.breaks.erase("s1");
  const Layer empty = build_break_layer(no_break, no_break.schedule.slot("s1"),
                                        WeightMode::Duration);
  CHECK(empty.out.empty());
}

TEST_CASE("presenter layer folds presenters into their talks") {
  Dataset ds;
  ds.schedule = testutil::two_slot_schedule();
  ds.schedule.talks["ta2"].presenter = "qa1";  // qa1 now presents ta1 and ta2
  ds.contacts = ContactLog::canonicalize({{"p1", "qa1", {0, 300}},
                                          {"qa1", "qb1", {100, 200}},
                                          {"p1", "qa1", {950, 1050}},  // ends inside the slot
                                          {"p2", "p3", {0, 50}}},
                                         20);

  const Layer layer = build_presenter_layer(ds, ds.schedule.slot("s1"), WeightMode::Duration);

  const auto& p1_out = layer.out.at(NodeId::person("p1"));
  CHECK(p1_out.at(NodeId::talk("ta1")) == doctest::Approx(300.0));
  CHECK(p1_out.at(NodeId::talk("ta2")) == doctest::Approx(300.0));
  CHECK(layer.out.at(NodeId::talk("ta1")).at(NodeId::person("p1")) == doctest::Approx(300.0));
  CHECK(layer.out.at(NodeId::talk("ta1")).at(NodeId::talk("tb1")) == doctest::Approx(100.0));
  CHECK(layer.out.at(NodeId::talk("ta2")).at(NodeId::talk("tb1")) == doctest::Approx(100.0));
  CHECK(layer.edge_entries() == 8);

  // Slot presenters appear only through their talks, and contacts between
  // non-presenters stay out of this layer entirely.
  CHECK(layer.out.count(NodeId::person("qa1")) == 0);
  for (const auto& [from, nbrs] : layer.out) {
    CHECK(from != NodeId::person("qa1"));
    for (const auto& [to, w] : nbrs) CHECK(to != NodeId::person("qa1"));
  }
  CHECK(!layer.has_out(NodeId::person("p2")));
  CHECK(!layer.has_out(NodeId::person("p3")));

  const Layer binary = build_presenter_layer(ds, ds.schedule.slot("s1"), WeightMode::Binary);
  CHECK(binary.out.at(NodeId::person("p1")).at(NodeId::talk("ta1")) == 1.0);
  CHECK(binary.out.at(NodeId::talk("ta1")).at(NodeId::talk("tb1")) == 1.0);
}

TEST_CASE("slot graph carries participants, slot talks and three layers") {
  Dataset ds;
  ds.schedule = testutil::two_slot_schedule();
  testutil::attend(ds, {{"p1", "ta1"}});
  ds.contacts = ContactLog::canonicalize({{"p1", "p2", {600, 700}}}, 20);

  VectorSpace space;
  space.profiles["p1"] = vec({{"u", 1}});
  space.profiles["p2"] = vec({{"u", 2}, {"v", 1}});
  space.talk_vectors["ta1"] = vec({{"u", 1}});
  space.talk_vectors["ta2"] = vec({{"u", 2}});
  space.talk_vectors["tb1"] = vec({{"u", 1}, {"v", 1}});
  space.talk_vectors["tb2"] = vec({{"u", 3}});

  const LayeredGraph graph = build_slot_graph(ds, space, ds.schedule.slot("s1"));
  CHECK(graph.slot == "s1");
  REQUIRE(graph.layers.size() == 3);
  CHECK(graph.layers[kCosineLayer].name == "cosine");
  CHECK(graph.layers[kBreakLayer].name == "break");
  CHECK(graph.layers[kPresenterLayer].name == "presenter");

  CHECK(std::is_sorted(graph.nodes.begin(), graph.nodes.end()));
  CHECK(graph.has_node(NodeId::person("p1")));
  CHECK(graph.has_node(NodeId::person("qc1")));  // presenters count as participants
  CHECK(graph.has_node(NodeId::talk("ta1")));
  CHECK(graph.has_node(NodeId::talk("tb2")));
  CHECK(!graph.has_node(NodeId::talk("tc1")));  // other slot's talk
  CHECK(graph.index_of(NodeId::person("p1")) < graph.index_of(NodeId::talk("ta1")));
  CHECK_THROWS_AS(graph.index_of(NodeId::talk("tc1")), std::invalid_argument);
}

TEST_CASE("merging sessions pools talk weights and drops internal edges") {
  const Schedule sched = testutil::two_slot_schedule();
  LayeredGraph graph;
  graph.slot = "s1";
  graph.nodes = {NodeId::person("p1"), NodeId::talk("ta1"), NodeId::talk("ta2"),
                 NodeId::talk("tb1"), NodeId::talk("tb2")};
  std::sort(graph.nodes.begin(), graph.nodes.end());
  graph.layers.resize(3);
  graph.layers[kCosineLayer].name = "cosine";
  graph.layers[kBreakLayer].name = "break";
  graph.layers[kPresenterLayer].name = "presenter";
  Layer& cos_layer = graph.layers[kCosineLayer];
  cos_layer.add_edge(NodeId::person("p1"), NodeId::talk("ta1"), 0.3);
  cos_layer.add_edge(NodeId::person("p1"), NodeId::talk("ta2"), 0.2);
  cos_layer.add_edge(NodeId::person("p1"), NodeId::talk("tb1"), 0.4);
  cos_layer.add_edge(NodeId::person("p1"), NodeId::talk("tb2"), 0.1);
  Layer& pres = graph.layers[kPresenterLayer];
  pres.set_undirected(NodeId::talk("ta1"), NodeId::talk("ta2"), 100.0);  // same session
  pres.set_undirected(NodeId::talk("ta1"), NodeId::talk("tb1"), 50.0);
  pres.set_undirected(NodeId::talk("ta2"), NodeId::talk("tb1"), 7.0);

  const SessionMerge merged = merge_sessions(graph, sched);

  CHECK(merged.graph.slot == "s1");
  CHECK(merged.talk_to_group.size() == 4);
  CHECK(merged.talk_to_group.at(NodeId::talk("ta1")) == NodeId::session("a1"));
  CHECK(merged.talk_to_group.at(NodeId::talk("tb2")) == NodeId::session("b1"));
  CHECK(merged.graph.nodes ==
        std::vector<NodeId>{NodeId::person("p1"), NodeId::session("a1"),
                            NodeId::session("b1")});

  const Layer& mcos = merged.graph.layers[kCosineLayer];
  CHECK(mcos.out.at(NodeId::person("p1")).at(NodeId::session("a1")) == doctest::Approx(0.5));
  CHECK(mcos.out.at(NodeId::person("p1")).at(NodeId::session("b1")) == doctest::Approx(0.5));
  CHECK(merged.graph.layers[kBreakLayer].out.empty());

  // ta1-ta2 became internal to session a1 and vanished; the two cross edges
  // pool into one supernode pair.
  const Layer& mpres = merged.graph.layers[kPresenterLayer];
  CHECK(mpres.edge_entries() == 2);
  CHECK(mpres.out.at(NodeId::session("a1")).at(NodeId::session("b1")) == doctest::Approx(57.0));
  CHECK(mpres.out.at(NodeId::session("b1")).at(NodeId::session("a1")) == doctest::Approx(57.0));
  CHECK(mpres.out.count(NodeId::session("a1")) == 1);
  CHECK(mpres.out.at(NodeId::session("a1")).count(NodeId::session("a1")) == 0);
}
