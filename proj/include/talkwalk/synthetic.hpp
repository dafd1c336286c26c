#pragma once
// Seeded synthetic conference generator with planted topic structure.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "talkwalk/dataset.hpp"

namespace talkwalk {

struct SyntheticConfig {
  std::int64_t participants = 60;
  std::int64_t slots = 7;
  std::int64_t talks_per_session = 3;  // parallel positions per slot, two sessions each
  std::int64_t topics = 2;
  double interest_strength = 0.5;   // 0: attendance uniform; 1: always the matching topic
  double contact_homophily = 0.5;   // extra break-contact probability for same-topic pairs
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SyntheticResult {
  Dataset dataset;
  std::map<std::string, std::int64_t> participant_topics;  // planted ground truth
  std::map<std::string, std::int64_t> session_topics;
};

// Deterministic per config: equal configs yield equal datasets.
SyntheticResult generate_synthetic(const SyntheticConfig& config);

// The filler words the generator plants in every document.
const std::vector<std::string>& synthetic_stopwords();

}  // namespace talkwalk
