#include "talkwalk/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace talkwalk {

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  return out;
}

std::string json_escape(const std::string& s) {
  std::string escaped;
  for (char c : s) {
    switch (c) {
      case '"': escaped += "\\\""; break;
      case '\\': escaped += "\\\\"; break;
      case '\n': escaped += "\\n"; break;
      case '\t': escaped += "\\t"; break;
      case '\r': escaped += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          escaped += buf;
        } else {
          escaped += c;
        }
    }
  }
  return escaped;
}

void write_histogram(const std::vector<HistogramBin>& bins,
                     const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "x,count\n";
  for (const auto& bin : bins) out << bin.x << ',' << bin.count << '\n';
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_stats_report(const StatsReport& report, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream out = open_out(out_dir / "stats.json");
  out << "{\n"
      << "  \"node_count\": " << report.node_count << ",\n"
      << "  \"edge_count\": " << report.edge_count << ",\n"
      << "  \"average_degree\": " << format_double(report.average_degree) << ",\n"
      << "  \"average_path_length\": " << format_double(report.average_path_length) << ",\n"
      << "  \"diameter\": " << report.diameter << ",\n"
      << "  \"average_contact_duration\": " << format_double(report.average_contact_duration)
      << ",\n"
      << "  \"sessions\": {\n"
      << "    \"attended_cases\": " << report.sessions.attended_cases << ",\n"
      << "    \"visited_all\": " << report.sessions.visited_all << ",\n"
      << "    \"changed_session\": " << report.sessions.changed_session << ",\n"
      << "    \"visited_exactly_two\": " << report.sessions.visited_exactly_two << ",\n"
      << "    \"visited_exactly_one\": " << report.sessions.visited_exactly_one << "\n"
      << "  }\n"
      << "}\n";
  write_histogram(report.contact_length_all, out_dir / "contact_length_all.csv");
  write_histogram(report.contact_length_aggregated,
                  out_dir / "contact_length_aggregated.csv");
  write_histogram(report.papers_per_participant, out_dir / "papers_per_participant.csv");
}

void write_predictions_csv(const std::vector<Decision>& decisions,
                           const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "participant,slot,talk,raw_score,norm_score,predicted,correct,tie\n";
  for (const auto& d : decisions) {
    for (std::size_t i = 0; i < d.scores.size(); ++i) {
      const auto& [talk, raw] = d.scores[i];
      out << d.participant << ',' << d.slot << ',' << talk << ',' << format_double(raw)
          << ',' << format_double(d.normalized[i].second) << ','
          << (talk == d.predicted ? 1 : 0) << ',' << (talk == d.attended ? 1 : 0) << ','
          << (d.tie ? 1 : 0) << '\n';
    }
  }
}

void write_metrics_json(const EvaluationReport& report, const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "{\n"
      << "  \"accuracy\": " << format_double(report.accuracy) << ",\n"
      << "  \"ci_low\": " << format_double(report.ci_low) << ",\n"
      << "  \"ci_high\": " << format_double(report.ci_high) << ",\n"
      << "  \"auc\": " << format_double(report.auc_value) << ",\n"
      << "  \"decision_count\": " << report.decision_count << ",\n"
      << "  \"tie_count\": " << report.tie_count << ",\n"
      << "  \"population\": \"" << json_escape(report.population) << "\"\n"
      << "}\n";
}

void write_sweep_csv(const std::vector<SweepPoint>& points,
                     const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "p_cosine,p_presenter,p_break,auc,accuracy\n";
  for (const auto& p : points) {
    out << format_double(p.mixture.cosine) << ',' << format_double(p.mixture.presenter)
        << ',' << format_double(p.mixture.coffee_break) << ',' << format_double(p.auc_value)
        << ',' << format_double(p.accuracy) << '\n';
  }
}

void write_influence_csv(const std::vector<CategoryStat>& categories,
                         const std::vector<CategoryStat>& presenter_curve,
                         const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "category,probability,ci_lo,ci_hi,n\n";
  auto emit = [&](const CategoryStat& s) {
    out << s.name << ',' << format_double(s.probability) << ',' << format_double(s.ci_low)
        << ',' << format_double(s.ci_high) << ',' << s.n << '\n';
  };
  for (const auto& s : categories) emit(s);
  for (const auto& s : presenter_curve) emit(s);
}

void write_edges_csv(const std::vector<LayeredGraph>& graphs,
                     const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "slot,layer,src,dst,weight\n";
  for (const auto& graph : graphs) {
    for (const auto& layer : graph.layers) {
      for (const auto& [from, neighbors] : layer.out) {
        for (const auto& [to, weight] : neighbors) {
          out << graph.slot << ',' << layer.name << ',' << from.label() << ','
              << to.label() << ',' << format_double(weight) << '\n';
        }
      }
    }
  }
}

void write_silhouette_csv(const std::vector<SilhouetteRow>& rows,
                          const std::filesystem::path& file) {
  std::ofstream out = open_out(file);
  out << "slot,representation,avg_silh\n";
  for (const auto& row : rows)
    out << row.slot << ',' << row.representation << ',' << format_double(row.average)
        << '\n';
}

void write_manifest(const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  nlohmann::ordered_json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kToolVersion;
  manifest["command"] = command;
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) echo[key] = value;
  manifest["config"] = echo;
  std::ofstream out = open_out(out_dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

}  // namespace talkwalk
