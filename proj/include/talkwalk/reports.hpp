#pragma once
// File emission: stable field order, floats with six decimals, byte-identical
// across reruns of the same configuration.

#include <filesystem>
#include <string>
#include <vector>

#include "talkwalk/eval.hpp"
#include "talkwalk/graphs.hpp"
#include "talkwalk/predict.hpp"
#include "talkwalk/stats.hpp"

namespace talkwalk {

std::string format_double(double v);  // fixed, 6 decimals; NaN -> empty string

void write_stats_report(const StatsReport& report, const std::filesystem::path& out_dir);
void write_predictions_csv(const std::vector<Decision>& decisions,
                           const std::filesystem::path& file);
void write_metrics_json(const EvaluationReport& report, const std::filesystem::path& file);
void write_sweep_csv(const std::vector<SweepPoint>& points, const std::filesystem::path& file);
void write_influence_csv(const std::vector<CategoryStat>& categories,
                         const std::vector<CategoryStat>& presenter_curve,
                         const std::filesystem::path& file);
void write_edges_csv(const std::vector<LayeredGraph>& graphs, const std::filesystem::path& file);

struct SilhouetteRow {
  std::string slot;
  std::string representation;
  double average = 0;
};
void write_silhouette_csv(const std::vector<SilhouetteRow>& rows,
                          const std::filesystem::path& file);

// manifest.json: tool name/version, command, and the echoed configuration.
void write_manifest(const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::filesystem::path& out_dir);

inline constexpr const char* kToolName = "talkwalk";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace talkwalk
