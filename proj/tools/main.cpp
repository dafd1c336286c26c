#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "talkwalk/dataset.hpp"
#include "talkwalk/eval.hpp"
#include "talkwalk/graphs.hpp"
#include "talkwalk/predict.hpp"
#include "talkwalk/reports.hpp"
#include "talkwalk/stats.hpp"
#include "talkwalk/synthetic.hpp"
#include "talkwalk/text.hpp"

using namespace talkwalk;

namespace {

std::string format_flag(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct CommonFlags {
  std::string schedule;
  std::string attendance;
  std::string contacts;
  std::string corpus;
  std::string stopwords;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--schedule", f.schedule, "schedule.json path")->required();
  cmd->add_option("--attendance", f.attendance, "attendance.csv path")->required();
  cmd->add_option("--contacts", f.contacts, "contacts.csv path");
  cmd->add_option("--corpus", f.corpus, "corpus directory");
  cmd->add_option("--stopwords", f.stopwords, "stopword file, one word per line");
  cmd->add_option("--out", f.out, "output directory")->required();
}

Dataset load_from(const CommonFlags& f) {
  return load_dataset(f.schedule, f.attendance, f.contacts, f.corpus);
}

Stopwords stopwords_from(const CommonFlags& f) {
  return f.stopwords.empty() ? Stopwords{} : Stopwords::load(f.stopwords);
}

std::vector<std::pair<std::string, std::string>> common_config(const CommonFlags& f) {
  return {{"schedule", f.schedule}, {"attendance", f.attendance},
          {"contacts", f.contacts}, {"corpus", f.corpus},
          {"stopwords", f.stopwords}, {"out", f.out}};
}

TalkRepresentation representation_from(const std::string& name) {
  if (name == "abstract") return TalkRepresentation::Abstract;
  if (name == "title") return TalkRepresentation::Title;
  return TalkRepresentation::FullPaper;
}

struct HrprFlags {
  std::string representation = "paper";
  double alpha = 0.15;
  double tolerance = 1e-10;
  std::int64_t max_iterations = 100000;
  bool merged = false;
  std::string weight_mode = "duration";
};

void add_hrpr(CLI::App* cmd, HrprFlags& f) {
  cmd->add_option("--representation", f.representation, "talk text used for vectors")
      ->check(CLI::IsMember({"paper", "abstract", "title"}));
  cmd->add_option("--alpha", f.alpha, "restart probability")->check(CLI::Range(1e-9, 1.0));
  cmd->add_option("--tol", f.tolerance, "L1 convergence threshold");
  cmd->add_option("--max-iter", f.max_iterations, "power iteration cap");
  cmd->add_flag("--merged", f.merged, "collapse sessions into supernodes");
  cmd->add_option("--weight-mode", f.weight_mode, "contact edge weights")
      ->check(CLI::IsMember({"duration", "binary"}));
}

HrprOptions options_from(const HrprFlags& f) {
  HrprOptions options;
  options.alpha = f.alpha;
  options.tolerance = f.tolerance;
  options.max_iterations = f.max_iterations;
  options.merged = f.merged;
  options.weight_mode = f.weight_mode == "binary" ? WeightMode::Binary : WeightMode::Duration;
  options.representation = representation_from(f.representation);
  return options;
}

void append_hrpr_config(std::vector<std::pair<std::string, std::string>>& cfg,
                        const HrprFlags& f) {
  cfg.emplace_back("representation", f.representation);
  cfg.emplace_back("alpha", format_flag(f.alpha));
  cfg.emplace_back("tol", format_flag(f.tolerance));
  cfg.emplace_back("max_iter", std::to_string(f.max_iterations));
  cfg.emplace_back("merged", f.merged ? "true" : "false");
  cfg.emplace_back("weight_mode", f.weight_mode);
}

void write_prediction_outputs(const std::vector<Decision>& decisions,
                              const std::string& population,
                              const std::filesystem::path& out) {
  write_predictions_csv(decisions, out / "predictions.csv");
  write_metrics_json(evaluate(decisions, population), out / "metrics.json");
}

void run_stats(const CommonFlags& f) {
  const StatsReport report = dataset_stats(load_from(f));
  write_stats_report(report, f.out);
  write_manifest("stats", common_config(f), f.out);
}

void run_influence(const CommonFlags& f, std::vector<EpochSeconds> thresholds) {
  if (thresholds.empty()) thresholds = default_presenter_thresholds();
  const Dataset ds = load_from(f);
  write_influence_csv(influence_same_talk(ds), influence_presenter(ds, thresholds),
                      std::filesystem::path(f.out) / "influence.csv");
  auto cfg = common_config(f);
  std::string joined;
  for (const auto t : thresholds) {
    if (!joined.empty()) joined += ',';
    joined += std::to_string(t);
  }
  cfg.emplace_back("thresholds", joined);
  write_manifest("influence", cfg, f.out);
}

void run_baseline(const CommonFlags& f, const std::string& mode) {
  const Dataset ds = load_from(f);
  std::vector<Decision> decisions;
  std::string population;
  if (mode == "majority") {
    decisions = baseline_majority(ds);
    population = "all attending participants";
  } else {
    decisions = baseline_room(ds);
    population = "attending participants, first attended slot excluded";
  }
  write_prediction_outputs(decisions, population, f.out);
  auto cfg = common_config(f);
  cfg.emplace_back("mode", mode);
  write_manifest("baseline", cfg, f.out);
}

void run_cosine(const CommonFlags& f, const std::string& representation,
                const std::string& mode) {
  const Dataset ds = load_from(f);
  const VectorSpace space = build_vectors(ds.corpus, ds.schedule,
                                          representation_from(representation),
                                          stopwords_from(f));
  const CosineMode cosine_mode = mode == "session-max"   ? CosineMode::SessionMax
                                 : mode == "session-avg" ? CosineMode::SessionAvg
                                                         : CosineMode::TalkWise;
  write_prediction_outputs(cosine_predict(ds, space, cosine_mode),
                           "participants with interest profiles", f.out);
  auto cfg = common_config(f);
  cfg.emplace_back("representation", representation);
  cfg.emplace_back("mode", mode);
  write_manifest("cosine", cfg, f.out);
}

void run_hrpr(const CommonFlags& f, const HrprFlags& h, const std::vector<double>& mixture,
              bool dump_edges) {
  const Dataset ds = load_from(f);
  const VectorSpace space = build_vectors(ds.corpus, ds.schedule,
                                          representation_from(h.representation),
                                          stopwords_from(f));
  HrprOptions options = options_from(h);
  options.mixture = {mixture[0], mixture[1], mixture[2]};
  const std::vector<Decision> decisions = hrpr_predict(ds, space, options);
  const std::string population = options.mixture.contact_only()
                                     ? "all attending participants"
                                     : "participants with interest profiles";
  write_prediction_outputs(decisions, population, f.out);
  if (dump_edges) {
    std::vector<LayeredGraph> graphs;
    for (const auto& slot : ds.schedule.slots) {
      LayeredGraph graph = build_slot_graph(ds, space, slot, options.weight_mode);
      if (options.merged) graph = merge_sessions(graph, ds.schedule).graph;
      graphs.push_back(std::move(graph));
    }
    write_edges_csv(graphs, std::filesystem::path(f.out) / "edges.csv");
  }
  auto cfg = common_config(f);
  append_hrpr_config(cfg, h);
  cfg.emplace_back("mixture", format_flag(mixture[0]) + "," + format_flag(mixture[1]) +
                                  "," + format_flag(mixture[2]));
  cfg.emplace_back("dump_edges", dump_edges ? "true" : "false");
  write_manifest("hrpr", cfg, f.out);
}

void run_sweep(const CommonFlags& f, const HrprFlags& h, double step) {
  const Dataset ds = load_from(f);
  const VectorSpace space = build_vectors(ds.corpus, ds.schedule,
                                          representation_from(h.representation),
                                          stopwords_from(f));
  const std::vector<SweepPoint> points = sweep(ds, space, options_from(h), step);
  write_sweep_csv(points, std::filesystem::path(f.out) / "sweep.csv");
  auto cfg = common_config(f);
  append_hrpr_config(cfg, h);
  cfg.emplace_back("step", format_flag(step));
  write_manifest("sweep", cfg, f.out);
}

void run_silhouette(const CommonFlags& f) {
  const Dataset ds = load_from(f);
  const Stopwords stop = stopwords_from(f);
  const std::pair<TalkRepresentation, const char*> representations[] = {
      {TalkRepresentation::FullPaper, "paper"},
      {TalkRepresentation::Abstract, "abstract"},
      {TalkRepresentation::Title, "title"}};
  std::vector<VectorSpace> spaces;
  for (const auto& [rep, name] : representations)
    spaces.push_back(build_vectors(ds.corpus, ds.schedule, rep, stop));
  std::vector<SilhouetteRow> rows;
  for (const auto& slot : ds.schedule.slots) {
    const Session& a = ds.schedule.session(slot.sessions[0]);
    const Session& b = ds.schedule.session(slot.sessions[1]);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      const SilhouetteResult result =
          silhouette_pair(a.talks, b.talks, spaces[i].talk_vectors);
      rows.push_back({slot.id, representations[i].second, result.average});
    }
  }
  write_silhouette_csv(rows, std::filesystem::path(f.out) / "silhouette.csv");
  write_manifest("silhouette", common_config(f), f.out);
}

void run_synth(const SyntheticConfig& config, const std::string& out) {
  const SyntheticResult result = generate_synthetic(config);
  save_dataset(result.dataset, out);

  nlohmann::ordered_json truth;
  truth["participant_topics"] = nlohmann::ordered_json::object();
  for (const auto& [id, topic] : result.participant_topics)
    truth["participant_topics"][id] = topic;
  truth["session_topics"] = nlohmann::ordered_json::object();
  for (const auto& [id, topic] : result.session_topics) truth["session_topics"][id] = topic;
  std::ofstream truth_out(std::filesystem::path(out) / "truth.json");
  if (!truth_out) throw std::runtime_error("cannot write truth.json under " + out);
  truth_out << truth.dump(2) << '\n';

  std::ofstream stop_out(std::filesystem::path(out) / "stopwords.txt");
  if (!stop_out) throw std::runtime_error("cannot write stopwords.txt under " + out);
  for (const auto& word : synthetic_stopwords()) stop_out << word << '\n';

  write_manifest("synth",
                 {{"participants", std::to_string(config.participants)},
                  {"slots", std::to_string(config.slots)},
                  {"talks_per_slot", std::to_string(config.talks_per_session)},
                  {"topics", std::to_string(config.topics)},
                  {"interest_strength", format_flag(config.interest_strength)},
                  {"contact_homophily", format_flag(config.contact_homophily)},
                  {"seed", std::to_string(config.seed)},
                  {"out", out}},
                 out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conference attendance analysis and prediction"};
  app.require_subcommand(1);

  CommonFlags stats_flags;
  CLI::App* stats_cmd = app.add_subcommand("stats", "dataset summary statistics");
  add_common(stats_cmd, stats_flags);
  stats_cmd->callback([&] { run_stats(stats_flags); });

  CommonFlags influence_flags;
  std::vector<EpochSeconds> thresholds;
  CLI::App* influence_cmd =
      app.add_subcommand("influence", "contact influence on attendance");
  add_common(influence_cmd, influence_flags);
  influence_cmd
      ->add_option("--thresholds", thresholds, "presenter-contact duration thresholds")
      ->delimiter(',');
  influence_cmd->callback([&] { run_influence(influence_flags, thresholds); });

  CommonFlags baseline_flags;
  std::string baseline_mode = "majority";
  CLI::App* baseline_cmd = app.add_subcommand("baseline", "track-size or room baselines");
  add_common(baseline_cmd, baseline_flags);
  baseline_cmd->add_option("--mode", baseline_mode, "baseline rule")
      ->check(CLI::IsMember({"majority", "room"}));
  baseline_cmd->callback([&] { run_baseline(baseline_flags, baseline_mode); });

  CommonFlags cosine_flags;
  std::string cosine_representation = "paper";
  std::string cosine_mode = "talk";
  CLI::App* cosine_cmd = app.add_subcommand("cosine", "interest-similarity prediction");
  add_common(cosine_cmd, cosine_flags);
  cosine_cmd
      ->add_option("--representation", cosine_representation, "talk text used for vectors")
      ->check(CLI::IsMember({"paper", "abstract", "title"}));
  cosine_cmd->add_option("--mode", cosine_mode, "ranking granularity")
      ->check(CLI::IsMember({"talk", "session-max", "session-avg"}));
  cosine_cmd->callback(
      [&] { run_cosine(cosine_flags, cosine_representation, cosine_mode); });

  CommonFlags hrpr_flags;
  HrprFlags hrpr_opts;
  std::vector<double> mixture = {1, 0, 0};
  bool dump_edges = false;
  CLI::App* hrpr_cmd = app.add_subcommand("hrpr", "hybrid random-walk prediction");
  add_common(hrpr_cmd, hrpr_flags);
  add_hrpr(hrpr_cmd, hrpr_opts);
  hrpr_cmd->add_option("--mixture", mixture, "p_cosine,p_presenter,p_break")
      ->delimiter(',')
      ->expected(3);
  hrpr_cmd->add_flag("--dump-edges", dump_edges, "also write the layered graphs");
  hrpr_cmd->callback([&] { run_hrpr(hrpr_flags, hrpr_opts, mixture, dump_edges); });

  CommonFlags sweep_flags;
  HrprFlags sweep_opts;
  double step = 0.1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "full mixture-grid evaluation");
  add_common(sweep_cmd, sweep_flags);
  add_hrpr(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--step", step, "grid step; must divide 1");
  sweep_cmd->callback([&] { run_sweep(sweep_flags, sweep_opts, step); });

  CommonFlags silhouette_flags;
  CLI::App* silhouette_cmd =
      app.add_subcommand("silhouette", "parallel-session separation quality");
  add_common(silhouette_cmd, silhouette_flags);
  silhouette_cmd->callback([&] { run_silhouette(silhouette_flags); });

  SyntheticConfig synth_config;
  std::string synth_out;
  CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
  synth_cmd->add_option("--participants", synth_config.participants, "participant count");
  synth_cmd->add_option("--slots", synth_config.slots, "parallel-session slot count");
  synth_cmd->add_option("--talks-per-slot", synth_config.talks_per_session,
                        "talks per session within each slot (two sessions per slot)");
  synth_cmd->add_option("--topics", synth_config.topics, "planted topic count");
  synth_cmd->add_option("--interest-strength", synth_config.interest_strength,
                        "0 = uniform attendance, 1 = always the matching topic");
  synth_cmd->add_option("--contact-homophily", synth_config.contact_homophily,
                        "same-topic contact boost in [0,1]");
  synth_cmd->add_option("--seed", synth_config.seed, "generator seed");
  synth_cmd->add_option("--out", synth_out, "output directory")->required();
  synth_cmd->callback([&] { run_synth(synth_config, synth_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
