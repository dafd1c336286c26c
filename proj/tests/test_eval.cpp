#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "talkwalk/eval.hpp"

using namespace talkwalk;

namespace {

constexpr double kZ = 1.959963984540054;

Decision quick_decision(double score_a, double score_b, const std::string& attended) {
  return make_decision("p", "s", 0, {{"a", score_a}, {"b", score_b}}, attended);
}

// One slot, two single-talk parallel sessions, break [500,1000).
Schedule one_slot_schedule() {
  Schedule sched;
  sched.slots.push_back({"s1", 1000, 2000, {"a1", "b1"}});
  sched.breaks["s1"] = {500, 1000};
  sched.sessions["a1"] = {"a1", "ra", "s1", {"ta1"}};
  sched.sessions["b1"] = {"b1", "rb", "s1", {"tb1"}};
  Talk ta1;
  ta1.id = "ta1";
  ta1.presenter = "q1";
  ta1.track = "x";
  ta1.session = "a1";
  Talk tb1 = ta1;
  tb1.id = "tb1";
  tb1.presenter = "q2";
  tb1.session = "b1";
  sched.talks["ta1"] = std::move(ta1);
  sched.talks["tb1"] = std::move(tb1);
  sched.track_paper_counts["x"] = 1;
  validate_schedule(sched);
  return sched;
}

}  // namespace

TEST_CASE("accuracy with a normal-approximation interval") {
  std::vector<Decision> decisions;
  decisions.push_back(quick_decision(0.9, 0.1, "a"));
  decisions.push_back(quick_decision(0.9, 0.1, "a"));
  decisions.push_back(quick_decision(0.1, 0.9, "b"));
  decisions.push_back(quick_decision(0.9, 0.1, "b"));  // wrong

  const AccuracyResult r = accuracy_ci(decisions);
  CHECK(r.n == 4);
  CHECK(r.accuracy == doctest::Approx(0.75));
  const double half = kZ * std::sqrt(0.75 * 0.25 / 4.0);
  CHECK(r.ci_low == doctest::Approx(0.75 - half).epsilon(1e-14));
  CHECK(r.ci_high == 1.0);  // clamped

  SUBCASE("half-width at n=100, p=0.5") {
    std::vector<Decision> hundred;
    for (int i = 0; i < 100; ++i)
      hundred.push_back(quick_decision(0.9, 0.1, i % 2 == 0 ? "a" : "b"));
    const AccuracyResult h = accuracy_ci(hundred);
    CHECK(h.accuracy == doctest::Approx(0.5));
    CHECK(h.ci_low == doctest::Approx(0.5 - 0.0979981992270027).epsilon(1e-13));
    CHECK(h.ci_high == doctest::Approx(0.5 + 0.0979981992270027).epsilon(1e-13));
  }
  SUBCASE("a perfect score has a degenerate interval") {
    const std::vector<Decision> perfect{quick_decision(1.0, 0.0, "a"),
                                        quick_decision(0.0, 1.0, "b")};
    const AccuracyResult p = accuracy_ci(perfect);
    CHECK(p.accuracy == 1.0);
    CHECK(p.ci_low == 1.0);
    CHECK(p.ci_high == 1.0);
  }
  CHECK_THROWS_AS(accuracy_ci({}), std::invalid_argument);
}

TEST_CASE("decision expansion labels the attended talk positive") {
  const Decision d = make_decision("p", "s", 0, {{"a", 0.6}, {"b", 0.3}, {"c", 0.1}}, "b");
  const auto labels = expand_decisions({d});
  REQUIRE(labels.size() == 3);
  std::size_t positives = 0;
  for (const auto& l : labels) positives += l.positive ? 1 : 0;
  CHECK(positives == 1);
  CHECK(labels[1].positive);  // candidates stay in talk-id order
  CHECK(labels[1].score == doctest::Approx(0.3));

  Decision broken = d;
  broken.attended = "zz";
  CHECK_THROWS_AS(expand_decisions({broken}), std::invalid_argument);
}

TEST_CASE("rank-based AUC handles ties by half-credit") {
  auto labs = [](std::initializer_list<std::pair<double, bool>> ps) {
    std::vector<ScoredLabel> out;
    for (const auto& [s, pos] : ps) out.push_back({s, pos});
    return out;
  };

  CHECK(mann_whitney_auc(labs({{0.9, true}, {0.8, true}, {0.7, false}, {0.1, false}})) == 1.0);
  CHECK(mann_whitney_auc(labs({{0.1, true}, {0.2, true}, {0.7, false}, {0.9, false}})) == 0.0);
  // Ascending ranks: 0.2(-) 0.4(+) 0.6(-) 0.9(+) -> R+ = 6, U = 3, AUC = 0.75.
  CHECK(mann_whitney_auc(labs({{0.9, true}, {0.4, true}, {0.6, false}, {0.2, false}})) == 0.75);
  CHECK(mann_whitney_auc(labs({{0.5, true}, {0.5, true}, {0.5, false}, {0.5, false}})) == 0.5);
  CHECK_THROWS_AS(mann_whitney_auc(labs({{0.5, true}})), std::invalid_argument);
  CHECK_THROWS_AS(mann_whitney_auc(labs({{0.5, false}, {0.1, false}})), std::invalid_argument);

  SUBCASE("flipping the labels mirrors the statistic") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
      std::vector<ScoredLabel> labels;
      const std::size_t n = 4 + rng() % 30;
      for (std::size_t i = 0; i < n; ++i)
        labels.push_back({static_cast<double>(rng() % 10) / 10.0, (rng() & 1) != 0});
      labels[0].positive = true;  // keep both classes inhabited
      labels[1].positive = false;
      std::vector<ScoredLabel> flipped = labels;
      for (auto& l : flipped) l.positive = !l.positive;
      CHECK(std::abs(mann_whitney_auc(labels) + mann_whitney_auc(flipped) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("rank statistic equals explicit ROC integration") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
      std::vector<ScoredLabel> labels;
      const std::size_t n = 3 + rng() % 40;
      for (std::size_t i = 0; i < n; ++i)
        labels.push_back({static_cast<double>(rng() % 8) / 8.0, (rng() & 1) != 0});
      labels[0].positive = true;
      labels[1].positive = false;
      CHECK(std::abs(mann_whitney_auc(labels) - testutil::trapezoid_auc(labels)) <= 1e-12);
    }
  }
  SUBCASE("random guessing scores about one half") {
    std::mt19937_64 rng(9);
    std::vector<Decision> decisions;
    for (int i = 0; i < 1000; ++i)
      decisions.push_back(quick_decision(testutil::u01(rng), testutil::u01(rng),
                                         (rng() & 1) ? "a" : "b"));
    const double value = auc(decisions);
    CHECK(value > 0.45);
    CHECK(value < 0.55);
  }
}

TEST_CASE("evaluation report bundles the metrics") {
  std::vector<Decision> decisions;
  decisions.push_back(quick_decision(0.5, 0.5, "b"));  // tie, predicted a, wrong
  decisions.push_back(quick_decision(0.2, 0.8, "b"));

  const EvaluationReport report = evaluate(decisions, "everyone");
  CHECK(report.decision_count == 2);
  CHECK(report.tie_count == 1);
  CHECK(report.accuracy == doctest::Approx(0.5));
  CHECK(report.population == "everyone");
  // Labels 0.5+ 0.5- 0.2- 0.8+: R+ = 2.5 + 4, U = 3.5, AUC = 0.875.
  CHECK(report.auc_value == doctest::Approx(0.875));
  CHECK(report.auc_value == auc(decisions));
}

TEST_CASE("same-talk probability by contact category") {
  Dataset ds;
  ds.schedule = one_slot_schedule();
  testutil::attend(ds, {{"p1", "ta1"}, {"p2", "ta1"}, {"p3", "tb1"}});
  ds.contacts = ContactLog::canonicalize(
      {{"p1", "p2", {600, 700}}, {"p1", "p3", {1500, 1600}}}, 20);

  const auto stats = influence_same_talk(ds);
  REQUIRE(stats.size() == 4);
  CHECK(stats[0].name == "coffee_break");
  CHECK(stats[1].name == "prior_contact");
  CHECK(stats[2].name == "contact_by_end");
  CHECK(stats[3].name == "no_contact");

  // (p1,p2) met in the break and sit together; (p1,p3) met during the slot
  // and sit apart; (p2,p3) never met.
  CHECK(stats[0].n == 1);
  CHECK(stats[0].probability == doctest::Approx(1.0));
  CHECK(stats[0].ci_low == 1.0);
  CHECK(stats[0].ci_high == 1.0);
  CHECK(stats[1].n == 1);
  CHECK(stats[1].probability == doctest::Approx(1.0));
  CHECK(stats[2].n == 2);
  CHECK(stats[2].probability == doctest::Approx(0.5));
  CHECK(stats[2].ci_low == 0.0);  // clamped on both sides at n=2
  CHECK(stats[2].ci_high == 1.0);
  CHECK(stats[3].n == 1);
  CHECK(stats[3].probability == doctest::Approx(0.0));

  SUBCASE("no contacts: contact categories go empty, pairs all uncontacted") {
    Dataset quiet;
    quiet.schedule = one_slot_schedule();
    testutil::attend(quiet, {{"p1", "ta1"}, {"p2", "ta1"}, {"p3", "tb1"}});
    const auto empty_stats = influence_same_talk(quiet);
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(empty_stats[c].n == 0);
      CHECK(std::isnan(empty_stats[c].probability));
      CHECK(std::isnan(empty_stats[c].ci_low));
      CHECK(std::isnan(empty_stats[c].ci_high));
    }
    CHECK(empty_stats[3].n == 3);
    CHECK(empty_stats[3].probability == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("attendance probability by presenter familiarity") {
  Dataset ds;
  ds.schedule = one_slot_schedule();
  testutil::attend(ds, {{"p1", "ta1"}});
  // 100 s with q1 before the slot; the later interval ends inside the slot.
  ds.contacts = ContactLog::canonicalize(
      {{"p1", "q1", {100, 200}}, {"p1", "q1", {1500, 1600}}}, 20);

  const auto stats = influence_presenter(ds, {20, 40, 80, 160});
  REQUIRE(stats.size() == 4);
  CHECK(stats[0].name == "20");
  CHECK(stats[3].name == "160");
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(stats[i].n == 1);
    CHECK(stats[i].hits == 1);
    CHECK(stats[i].probability == doctest::Approx(1.0));
  }
  CHECK(stats[3].n == 0);
  CHECK(std::isnan(stats[3].probability));

  SUBCASE("a presenter attending their own talk adds no cases") {
    Dataset with_q1 = ds;
    testutil::attend(with_q1, {{"q1", "ta1"}});
    const auto again = influence_presenter(with_q1, {20, 40, 80, 160});
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(again[i].n == stats[i].n);
      CHECK(again[i].hits == stats[i].hits);
    }
  }
  SUBCASE("threshold validation") {
    CHECK_THROWS_AS(influence_presenter(ds, {10}), std::invalid_argument);
    CHECK_THROWS_AS(influence_presenter(ds, {20, 20}), std::invalid_argument);
    CHECK_THROWS_AS(influence_presenter(ds, {40, 20}), std::invalid_argument);
  }
  SUBCASE("default thresholds double from 20 to 1280") {
    CHECK(default_presenter_thresholds() ==
          std::vector<EpochSeconds>{20, 40, 80, 160, 320, 640, 1280});
  }
}
