#include "talkwalk/text.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "talkwalk/porter.hpp"

namespace talkwalk {

Stopwords Stopwords::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open stopword list: " + file.string());
  Stopwords sw;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) sw.words.insert(line);
  }
  return sw;
}

std::vector<std::string> preprocess(const std::string& text, const Stopwords& stopwords) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    // Single letters carry no content; stopwords go before stemming.
    if (cur.size() >= 2 && !stopwords.contains(cur)) tokens.push_back(porter_stem(cur));
    cur.clear();
  };
  for (unsigned char c : text) {
    if (std::isalpha(c))
      cur.push_back(static_cast<char>(std::tolower(c)));
    else
      flush();
  }
  flush();
  return tokens;
}

DocVector DocVector::from_weights(std::map<std::string, double> w) {
  DocVector v;
  double sq = 0;
  for (auto it = w.begin(); it != w.end();) {
    if (it->second == 0) {
      it = w.erase(it);
    } else {
      sq += it->second * it->second;
      ++it;
    }
  }
  v.weights = std::move(w);
  v.norm = std::sqrt(sq);
  return v;
}

namespace {

std::map<std::string, double> term_counts(const std::vector<std::string>& tokens) {
  std::map<std::string, double> counts;
  for (const auto& t : tokens) counts[t] += 1;
  return counts;
}

const std::string& talk_text(const Talk& talk, TalkRepresentation rep) {
  switch (rep) {
    case TalkRepresentation::FullPaper:
      return talk.fulltext;
    case TalkRepresentation::Abstract:
      return talk.abstract_text;
    case TalkRepresentation::Title:
      return talk.title;
  }
  throw std::invalid_argument("unknown representation");
}

}  // namespace

VectorSpace build_vectors(const Corpus& corpus, const Schedule& schedule,
                          TalkRepresentation representation, const Stopwords& stopwords) {
  // Document universe: one merged profile per participant with documents, plus
  // one document per scheduled talk.
  std::map<std::string, std::map<std::string, double>> profile_counts;
  for (const auto& [pid, docs] : corpus.documents) {
    if (docs.empty()) continue;
    auto& counts = profile_counts[pid];
    for (const auto& doc : docs)
      for (const auto& token : preprocess(doc, stopwords)) counts[token] += 1;
  }
  std::map<std::string, std::map<std::string, double>> talk_counts;
  for (const auto& [tid, talk] : schedule.talks)
    talk_counts[tid] = term_counts(preprocess(talk_text(talk, representation), stopwords));

  const double universe = static_cast<double>(profile_counts.size() + talk_counts.size());
  std::map<std::string, std::int64_t> df;
  for (const auto& [pid, counts] : profile_counts)
    for (const auto& [term, count] : counts) df[term] += 1;
  for (const auto& [tid, counts] : talk_counts)
    for (const auto& [term, count] : counts) df[term] += 1;

  auto weigh = [&](const std::map<std::string, double>& counts) {
    std::map<std::string, double> weights;
    for (const auto& [term, count] : counts) {
      const double idf = std::log(universe / static_cast<double>(df.at(term)));
      if (idf > 0) weights[term] = count * idf;  // df == N terms drop out
    }
    return DocVector::from_weights(std::move(weights));
  };

  VectorSpace space;
  for (const auto& [pid, counts] : profile_counts) space.profiles[pid] = weigh(counts);
  for (const auto& [tid, counts] : talk_counts) space.talk_vectors[tid] = weigh(counts);
  return space;
}

double cosine(const DocVector& a, const DocVector& b) {
  if (a.norm == 0 || b.norm == 0) return 0;
  const DocVector& small = a.weights.size() <= b.weights.size() ? a : b;
  const DocVector& large = a.weights.size() <= b.weights.size() ? b : a;
  double dot = 0;
  for (const auto& [term, w] : small.weights) {
    auto it = large.weights.find(term);
    if (it != large.weights.end()) dot += w * it->second;
  }
  return dot / (a.norm * b.norm);
}

SilhouetteResult silhouette_pair(const std::vector<std::string>& session_a,
                                 const std::vector<std::string>& session_b,
                                 const std::map<std::string, DocVector>& talk_vectors) {
  if (session_a.empty() || session_b.empty())
    throw std::invalid_argument("silhouette needs a talk in each session");
  auto vec = [&](const std::string& id) -> const DocVector& {
    auto it = talk_vectors.find(id);
    if (it == talk_vectors.end())
      throw std::invalid_argument("no vector for talk " + id);
    return it->second;
  };
  // Single-link distance to a session, skipping the talk itself.
  auto dist_to = [&](const std::string& t, const std::vector<std::string>& session,
                     bool& defined) {
    double best = 2.0;
    defined = false;
    for (const auto& u : session) {
      if (u == t) continue;
      defined = true;
      best = std::min(best, 1.0 - cosine(vec(t), vec(u)));
    }
    return best;
  };

  SilhouetteResult result;
  double sum = 0;
  std::size_t count = 0;
  auto eval = [&](const std::vector<std::string>& own, const std::vector<std::string>& other) {
    for (const auto& t : own) {
      bool own_defined = false, other_defined = false;
      const double a = dist_to(t, own, own_defined);
      const double b = dist_to(t, other, other_defined);
      double silh = 0;  // lone talk in its session, or identical distances of 0
      if (own_defined && other_defined) {
        const double denom = std::max(a, b);
        if (denom > 0) silh = (b - a) / denom;
      }
      result.per_talk[t] = silh;
      sum += silh;
      ++count;
    }
  };
  eval(session_a, session_b);
  eval(session_b, session_a);
  result.average = count > 0 ? sum / static_cast<double>(count) : 0;
  return result;
}

}  // namespace talkwalk
