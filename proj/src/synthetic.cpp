#include "talkwalk/synthetic.hpp"

#include <cctype>
#include <random>
#include <stdexcept>
#include <vector>

namespace talkwalk {

namespace {

constexpr double kAttendProbability = 0.85;
constexpr double kContactBase = 0.04;
constexpr double kContactHomophilyGain = 0.45;
constexpr EpochSeconds kAnchor = 1600000000;  // schedule epoch origin
constexpr EpochSeconds kBreakSeconds = 900;
constexpr EpochSeconds kTalkSeconds = 1800;
constexpr std::int64_t kTopicVocabulary = 40;

// Terms every document shares; idf removes them from all vector spaces.
const std::vector<std::string> kUniversalTerms = {"ubiqax", "ubiqbx", "ubiqcx"};
// Plain stopwords, also present in every document.
const std::vector<std::string> kFillerWords = {"the", "and", "of",   "to", "in",
                                               "is",  "it",  "that", "for", "on"};

// Platform-stable draws (std distributions vary across standard libraries).
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t pick_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string letters(std::int64_t n) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  } while (n > 0);
  return s;
}

std::string pad(std::int64_t value, std::int64_t max_value) {
  const std::string digits = std::to_string(value);
  const std::string widest = std::to_string(max_value);
  return std::string(widest.size() - digits.size(), '0') + digits;
}

std::string topic_term(std::int64_t topic, std::int64_t j) {
  // The trailing x keeps every term a Porter fixed point.
  return "t" + letters(topic) + "w" + letters(j) + "x";
}

// Eight-word sentences, capitalized and period-terminated.
std::string make_text(const std::vector<std::string>& tokens) {
  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string word = tokens[i];
    if (i % 8 == 0) {
      if (!text.empty()) text += ". ";
      word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    } else if (!text.empty()) {
      text += ' ';
    }
    text += word;
  }
  if (!text.empty()) text += '.';
  return text;
}

std::vector<std::string> with_shared_prefix(std::vector<std::string> topical) {
  std::vector<std::string> tokens = kUniversalTerms;
  tokens.insert(tokens.end(), kFillerWords.begin(), kFillerWords.end());
  tokens.insert(tokens.end(), std::make_move_iterator(topical.begin()),
                std::make_move_iterator(topical.end()));
  return tokens;
}

std::vector<std::string> draw_topical(std::mt19937_64& rng, std::int64_t topic,
                                      std::int64_t count) {
  std::vector<std::string> tokens;
  tokens.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i)
    tokens.push_back(topic_term(topic, pick_int(rng, 0, kTopicVocabulary - 1)));
  return tokens;
}

}  // namespace

const std::vector<std::string>& synthetic_stopwords() { return kFillerWords; }

void SyntheticConfig::validate() const {
  if (participants < 1) throw std::invalid_argument("participants must be at least 1");
  if (slots < 1) throw std::invalid_argument("slots must be at least 1");
  if (talks_per_session < 1)
    throw std::invalid_argument("talks_per_session must be at least 1");
  if (topics < 1) throw std::invalid_argument("topics must be at least 1");
  if (participants < topics)
    throw std::invalid_argument("every topic needs at least one participant to present");
  if (interest_strength < 0 || interest_strength > 1)
    throw std::invalid_argument("interest_strength must lie in [0, 1]");
  if (contact_homophily < 0 || contact_homophily > 1)
    throw std::invalid_argument("contact_homophily must lie in [0, 1]");
}

SyntheticResult generate_synthetic(const SyntheticConfig& config) {
  config.validate();
  SyntheticResult result;
  Dataset& ds = result.dataset;

  std::vector<std::string> people;
  std::vector<std::int64_t> person_topic;
  std::vector<std::vector<std::size_t>> by_topic(static_cast<std::size_t>(config.topics));
  for (std::int64_t k = 0; k < config.participants; ++k) {
    people.push_back("p" + pad(k + 1, config.participants));
    person_topic.push_back(k % config.topics);
    by_topic[static_cast<std::size_t>(k % config.topics)].push_back(
        static_cast<std::size_t>(k));
    result.participant_topics[people.back()] = person_topic.back();
  }

  for (std::int64_t topic = 0; topic < config.topics; ++topic)
    ds.schedule.track_paper_counts["track_" + letters(topic)] = 10 + topic;

  // Two parallel sessions per slot; topics rotate across slots so no room owns
  // a topic. A 900 s break precedes every slot.
  const EpochSeconds slot_len = config.talks_per_session * kTalkSeconds;
  std::vector<std::size_t> presenter_cursor(static_cast<std::size_t>(config.topics), 0);
  struct TalkTopic {
    std::string id;
    std::int64_t topic;
  };
  std::vector<TalkTopic> all_talks;
  for (std::int64_t i = 0; i < config.slots; ++i) {
    TimeSlot slot;
    slot.id = "s" + pad(i + 1, config.slots);
    slot.start = kAnchor + kBreakSeconds + i * (slot_len + kBreakSeconds);
    slot.end = slot.start + slot_len;
    ds.schedule.breaks[slot.id] = {slot.start - kBreakSeconds, slot.start};
    const char room_tag[2] = {'a', 'b'};
    for (int r = 0; r < 2; ++r) {
      Session session;
      session.id = slot.id + room_tag[r];
      session.room = std::string("room_") + room_tag[r];
      session.slot = slot.id;
      const std::int64_t topic = (i + r) % config.topics;
      result.session_topics[session.id] = topic;
      for (std::int64_t j = 0; j < config.talks_per_session; ++j) {
        Talk talk;
        talk.id = session.id + "_t" + pad(j + 1, config.talks_per_session);
        talk.track = "track_" + letters(topic);
        talk.session = session.id;
        auto& cursor = presenter_cursor[static_cast<std::size_t>(topic)];
        const auto& candidates = by_topic[static_cast<std::size_t>(topic)];
        talk.presenter = people[candidates[cursor % candidates.size()]];
        ++cursor;
        session.talks.push_back(talk.id);
        all_talks.push_back({talk.id, topic});
        ds.schedule.talks[talk.id] = std::move(talk);
      }
      slot.sessions.push_back(session.id);
      ds.schedule.sessions[session.id] = std::move(session);
    }
    ds.schedule.slots.push_back(std::move(slot));
  }

  std::mt19937_64 attend_rng(config.seed * 1000003ULL + 1);
  std::mt19937_64 contact_rng(config.seed * 1000003ULL + 2);
  std::mt19937_64 text_rng(config.seed * 1000003ULL + 3);

  // Attendance: a participant sits out a whole slot or decides every position,
  // drawn between the parallel talks with weight (1-s) + s*[topic match].
  const double s = config.interest_strength;
  for (std::size_t k = 0; k < people.size(); ++k) {
    for (const auto& slot : ds.schedule.slots) {
      if (u01(attend_rng) >= kAttendProbability) continue;
      for (std::int64_t j = 0; j < config.talks_per_session; ++j) {
        const auto candidates = ds.schedule.talks_at(slot, static_cast<std::size_t>(j));
        std::vector<double> weights;
        double total = 0;
        for (const auto& talk_id : candidates) {
          const std::int64_t topic =
              result.session_topics.at(ds.schedule.talk(talk_id).session);
          weights.push_back((1 - s) + s * (topic == person_topic[k] ? 1.0 : 0.0));
          total += weights.back();
        }
        std::size_t choice = 0;
        const double u = u01(attend_rng);
        if (total > 0) {
          double edge = 0;
          for (std::size_t c = 0; c < candidates.size(); ++c) {
            edge += weights[c] / total;
            if (u < edge) {
              choice = c;
              break;
            }
          }
        } else {
          choice = std::min(static_cast<std::size_t>(u * candidates.size()),
                            candidates.size() - 1);
        }
        ds.attendance.records.push_back({people[k], candidates[choice]});
      }
    }
  }
  ds.attendance.build_index(ds.schedule);

  // Contacts happen only during breaks, with a same-topic bonus.
  std::vector<ContactInterval> raw;
  for (const auto& slot : ds.schedule.slots) {
    const TimeInterval brk = ds.schedule.breaks.at(slot.id);
    for (std::size_t a = 0; a < people.size(); ++a) {
      for (std::size_t b = a + 1; b < people.size(); ++b) {
        const bool same_topic = person_topic[a] == person_topic[b];
        const double p =
            kContactBase + kContactHomophilyGain * config.contact_homophily *
                               (same_topic ? 1.0 : 0.0);
        if (u01(contact_rng) >= p) continue;
        const EpochSeconds duration = pick_int(contact_rng, 40, 300);
        const EpochSeconds start =
            brk.start + pick_int(contact_rng, 0, brk.end - brk.start - duration);
        raw.push_back({people[a], people[b], {start, start + duration}});
      }
    }
  }
  ds.contacts = ContactLog::canonicalize(std::move(raw), 20);

  // Interest profiles: one to three prior documents in the author's topic.
  for (std::size_t k = 0; k < people.size(); ++k) {
    const std::int64_t docs = pick_int(text_rng, 1, 3);
    for (std::int64_t d = 0; d < docs; ++d) {
      const std::int64_t length = pick_int(text_rng, 30, 80);
      ds.corpus.documents[people[k]].push_back(
          make_text(with_shared_prefix(draw_topical(text_rng, person_topic[k], length))));
    }
  }
  ds.corpus.cutoff = ds.schedule.slots.front().start;

  for (const auto& t : all_talks) {
    Talk& talk = ds.schedule.talks.at(t.id);
    talk.title = make_text(with_shared_prefix(draw_topical(text_rng, t.topic, 4)));
    talk.abstract_text = make_text(with_shared_prefix(draw_topical(text_rng, t.topic, 30)));
    talk.fulltext = make_text(with_shared_prefix(draw_topical(text_rng, t.topic, 120)));
  }

  validate_schedule(ds.schedule);
  return result;
}

}  // namespace talkwalk
