#pragma once
// Porter's suffix-stripping algorithm (1980), steps 1a through 5b.

#include <string>

namespace talkwalk {

// Expects a lowercase alphabetic word; returns its stem.
std::string porter_stem(std::string word);

}  // namespace talkwalk
