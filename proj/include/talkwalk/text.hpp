#pragma once
// Text pipeline: tokenization, stopword removal, stemming, tf-idf vectors,
// cosine similarity and the session silhouette measure.

#include <filesystem>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "talkwalk/dataset.hpp"

namespace talkwalk {

enum class TalkRepresentation { FullPaper, Abstract, Title };

struct Stopwords {
  std::unordered_set<std::string> words;
  static Stopwords load(const std::filesystem::path& file);  // one word per line
  bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// Lowercase, split on non-alphabetic, drop single letters, drop stopwords
// (before stemming), Porter-stem the rest.
std::vector<std::string> preprocess(const std::string& text, const Stopwords& stopwords);

struct DocVector {
  std::map<std::string, double> weights;  // strictly positive entries only
  double norm = 0;

  static DocVector from_weights(std::map<std::string, double> w);
  bool operator==(const DocVector&) const = default;
};

struct VectorSpace {
  std::map<std::string, DocVector> profiles;      // participant -> tf-idf
  std::map<std::string, DocVector> talk_vectors;  // talk -> tf-idf
};

// tf-idf over the document universe formed by all participant profiles (one
// merged document each; participants without documents are excluded) plus one
// document per scheduled talk in the chosen representation. idf = ln(N/df);
// terms present in every document drop out.
VectorSpace build_vectors(const Corpus& corpus, const Schedule& schedule,
                          TalkRepresentation representation, const Stopwords& stopwords);

// dot / (|a||b|); 0 when either norm is 0.
double cosine(const DocVector& a, const DocVector& b);

struct SilhouetteResult {
  std::map<std::string, double> per_talk;
  double average = 0;
};

// Silhouette of two parallel sessions under single-link cosine distance:
// silh(t) = (dist(t, other) - dist(t, own)) / max(...). A talk alone in its
// session, or one with both distances 0, gets 0.
SilhouetteResult silhouette_pair(const std::vector<std::string>& session_a,
                                 const std::vector<std::string>& session_b,
                                 const std::map<std::string, DocVector>& talk_vectors);

}  // namespace talkwalk
