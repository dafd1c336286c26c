#include "talkwalk/dataset.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace talkwalk {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

std::int64_t require_int(const ordered_json& obj, const std::string& key,
                         const std::string& where) {
  if (!obj.contains(key)) fail(where, "missing '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail(where, "'" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string require_string(const ordered_json& obj, const std::string& key,
                           const std::string& where) {
  if (!obj.contains(key)) fail(where, "missing '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_string()) fail(where, "'" + key + "' must be a string");
  return v.get<std::string>();
}

std::string optional_string(const ordered_json& obj, const std::string& key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return "";
  if (!obj.at(key).is_string()) fail(key, "must be a string when present");
  return obj.at(key).get<std::string>();
}

std::vector<std::string> require_string_array(const ordered_json& obj, const std::string& key,
                                              const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_array()) fail(where, "missing array '" + key + "'");
  std::vector<std::string> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_string()) fail(where, "'" + key + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Splits a CSV line on commas. Field values in this format carry no commas or
// quoting; ids are plain tokens.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

EpochSeconds parse_epoch(const std::string& field, const std::string& where) {
  EpochSeconds value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail(where, "'" + field + "' is not an integer");
  return value;
}

}  // namespace

const TimeSlot& Schedule::slot(const std::string& id) const {
  for (const auto& s : slots)
    if (s.id == id) return s;
  throw ValidationError("unknown slot: " + id);
}

const Session& Schedule::session(const std::string& id) const {
  auto it = sessions.find(id);
  if (it == sessions.end()) throw ValidationError("unknown session: " + id);
  return it->second;
}

const Talk& Schedule::talk(const std::string& id) const {
  auto it = talks.find(id);
  if (it == talks.end()) throw ValidationError("unknown talk: " + id);
  return it->second;
}

std::size_t Schedule::position_of(const Talk& t) const {
  const Session& s = session(t.session);
  for (std::size_t i = 0; i < s.talks.size(); ++i)
    if (s.talks[i] == t.id) return i;
  throw ValidationError("talk " + t.id + " not listed in session " + s.id);
}

std::size_t Schedule::position_count(const TimeSlot& s) const {
  std::size_t n = 0;
  for (const auto& sid : s.sessions) n = std::max(n, session(sid).talks.size());
  return n;
}

std::vector<std::string> Schedule::talks_at(const TimeSlot& s, std::size_t position) const {
  std::vector<std::string> out;
  for (const auto& sid : s.sessions) {
    const Session& sess = session(sid);
    if (position < sess.talks.size()) out.push_back(sess.talks[position]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void AttendanceTable::build_index(const Schedule& schedule) {
  index.clear();
  for (const auto& rec : records) {
    const Talk& t = schedule.talk(rec.talk);
    const Session& sess = schedule.session(t.session);
    std::size_t pos = schedule.position_of(t);
    auto& slot_map = index[rec.participant][sess.slot];
    auto [it, inserted] = slot_map.emplace(pos, rec.talk);
    if (!inserted)
      throw ValidationError("attendance: participant " + rec.participant +
                            " has two records at slot " + sess.slot + " position " +
                            std::to_string(pos) + " (talks " + it->second + ", " + rec.talk +
                            ")");
  }
}

const std::string* AttendanceTable::attended(const std::string& participant,
                                             const std::string& slot,
                                             std::size_t position) const {
  auto pit = index.find(participant);
  if (pit == index.end()) return nullptr;
  auto sit = pit->second.find(slot);
  if (sit == pit->second.end()) return nullptr;
  auto tit = sit->second.find(position);
  if (tit == sit->second.end()) return nullptr;
  return &tit->second;
}

std::vector<std::string> AttendanceTable::participants() const {
  std::set<std::string> ids;
  for (const auto& rec : records) ids.insert(rec.participant);
  return {ids.begin(), ids.end()};
}

ContactLog ContactLog::canonicalize(std::vector<ContactInterval> raw,
                                    EpochSeconds min_duration) {
  std::map<std::pair<std::string, std::string>, std::vector<TimeInterval>> grouped;
  for (auto& c : raw) {
    if (c.when.duration() < min_duration) continue;
    auto key = c.u < c.v ? std::make_pair(c.u, c.v) : std::make_pair(c.v, c.u);
    grouped[std::move(key)].push_back(c.when);
  }
  ContactLog log;
  for (auto& [pair, spans] : grouped) {
    std::sort(spans.begin(), spans.end(),
              [](const TimeInterval& a, const TimeInterval& b) { return a.start < b.start; });
    TimeInterval cur = spans.front();
    for (std::size_t i = 1; i < spans.size(); ++i) {
      if (spans[i].start <= cur.end) {
        cur.end = std::max(cur.end, spans[i].end);
      } else {
        log.intervals.push_back({pair.first, pair.second, cur});
        cur = spans[i];
      }
    }
    log.intervals.push_back({pair.first, pair.second, cur});
  }
  return log;
}

std::map<std::pair<std::string, std::string>, std::vector<TimeInterval>> ContactLog::by_pair()
    const {
  std::map<std::pair<std::string, std::string>, std::vector<TimeInterval>> out;
  for (const auto& c : intervals) out[{c.u, c.v}].push_back(c.when);
  return out;
}

std::vector<std::string> Dataset::participants() const {
  std::set<std::string> ids;
  for (const auto& rec : attendance.records) ids.insert(rec.participant);
  for (const auto& c : contacts.intervals) {
    ids.insert(c.u);
    ids.insert(c.v);
  }
  for (const auto& [pid, docs] : corpus.documents) ids.insert(pid);
  for (const auto& [tid, talk] : schedule.talks) ids.insert(talk.presenter);
  return {ids.begin(), ids.end()};
}

void validate_schedule(const Schedule& sched) {
  // Cross references: session <-> slot, talk <-> session, talk -> track.
  std::map<std::string, std::string> session_owner;  // session -> slot that lists it
  for (const auto& slot : sched.slots) {
    if (slot.start >= slot.end) fail("slot " + slot.id, "start must precede end");
    if (slot.sessions.size() < 2) fail("slot " + slot.id, "needs at least 2 parallel sessions");
    std::set<std::string> rooms;
    for (const auto& sid : slot.sessions) {
      auto it = sched.sessions.find(sid);
      if (it == sched.sessions.end()) fail("slot " + slot.id, "unknown session " + sid);
      if (it->second.slot != slot.id)
        fail("session " + sid, "declares slot " + it->second.slot + " but is listed by slot " +
                                   slot.id);
      if (!rooms.insert(it->second.room).second)
        fail("slot " + slot.id, "two sessions share room " + it->second.room);
      if (!session_owner.emplace(sid, slot.id).second)
        fail("session " + sid, "listed by more than one slot");
    }
  }
  for (const auto& [sid, sess] : sched.sessions) {
    if (!session_owner.count(sid)) fail("session " + sid, "not listed by any slot");
    if (sess.talks.empty()) fail("session " + sid, "has no talks");
  }

  std::map<std::string, std::string> talk_owner;  // talk -> session that lists it
  for (const auto& [sid, sess] : sched.sessions) {
    for (const auto& tid : sess.talks) {
      auto it = sched.talks.find(tid);
      if (it == sched.talks.end()) fail("session " + sid, "unknown talk " + tid);
      if (it->second.session != sid)
        fail("talk " + tid,
             "declares session " + it->second.session + " but is listed by session " + sid);
      if (!talk_owner.emplace(tid, sid).second) fail("talk " + tid, "listed twice");
    }
  }
  for (const auto& [tid, talk] : sched.talks) {
    if (!talk_owner.count(tid)) fail("talk " + tid, "not listed by any session");
    if (talk.presenter.empty()) fail("talk " + tid, "needs exactly one presenter id");
    if (!sched.track_paper_counts.count(talk.track))
      fail("talk " + tid, "unknown track " + talk.track);
  }

  // Slots must not overlap in time.
  std::vector<const TimeSlot*> ordered;
  for (const auto& s : sched.slots) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const TimeSlot* a, const TimeSlot* b) { return a->start < b->start; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->start < ordered[i - 1]->end)
      fail("slot " + ordered[i]->id, "overlaps slot " + ordered[i - 1]->id);
  }

  for (const auto& [slot_id, brk] : sched.breaks) {
    const TimeSlot& slot = sched.slot(slot_id);
    if (brk.start >= brk.end) fail("break before slot " + slot_id, "start must precede end");
    if (brk.end > slot.start)
      fail("break before slot " + slot_id, "must end at or before the slot starts");
  }
}

namespace {

Schedule load_schedule(const std::filesystem::path& path) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  Schedule sched;
  const auto dir = path.parent_path();

  if (!doc.contains("slots") || !doc["slots"].is_array()) fail(path.string(), "missing 'slots'");
  std::set<std::string> slot_ids;
  for (const auto& js : doc["slots"]) {
    TimeSlot slot;
    slot.id = require_string(js, "id", "slots entry");
    slot.start = require_int(js, "start", "slot " + slot.id);
    slot.end = require_int(js, "end", "slot " + slot.id);
    slot.sessions = require_string_array(js, "sessions", "slot " + slot.id);
    if (!slot_ids.insert(slot.id).second) fail("slot " + slot.id, "duplicate id");
    sched.slots.push_back(std::move(slot));
  }
  std::sort(sched.slots.begin(), sched.slots.end(),
            [](const TimeSlot& a, const TimeSlot& b) { return a.start < b.start; });

  if (!doc.contains("sessions") || !doc["sessions"].is_array())
    fail(path.string(), "missing 'sessions'");
  for (const auto& js : doc["sessions"]) {
    Session sess;
    sess.id = require_string(js, "id", "sessions entry");
    sess.room = require_string(js, "room", "session " + sess.id);
    sess.slot = require_string(js, "slot", "session " + sess.id);
    sess.talks = require_string_array(js, "talks", "session " + sess.id);
    if (!sched.sessions.emplace(sess.id, sess).second) fail("session " + sess.id, "duplicate id");
  }

  if (!doc.contains("talks") || !doc["talks"].is_array()) fail(path.string(), "missing 'talks'");
  for (const auto& js : doc["talks"]) {
    Talk talk;
    talk.id = require_string(js, "id", "talks entry");
    talk.title = optional_string(js, "title");
    talk.abstract_text = optional_string(js, "abstract");
    talk.presenter = require_string(js, "presenter", "talk " + talk.id);
    talk.track = require_string(js, "track", "talk " + talk.id);
    talk.session = require_string(js, "session", "talk " + talk.id);
    const std::string rel = optional_string(js, "fulltext_path");
    if (!rel.empty()) talk.fulltext = read_file(dir / rel);
    if (!sched.talks.emplace(talk.id, talk).second) fail("talk " + talk.id, "duplicate id");
  }

  if (!doc.contains("tracks") || !doc["tracks"].is_array())
    fail(path.string(), "missing 'tracks'");
  for (const auto& js : doc["tracks"]) {
    const std::string id = require_string(js, "id", "tracks entry");
    const std::int64_t count = require_int(js, "accepted_papers", "track " + id);
    if (count < 0) fail("track " + id, "accepted_papers must be >= 0");
    if (!sched.track_paper_counts.emplace(id, count).second) fail("track " + id, "duplicate id");
  }

  if (doc.contains("breaks")) {
    if (!doc["breaks"].is_array()) fail(path.string(), "'breaks' must be an array");
    for (const auto& js : doc["breaks"]) {
      const std::string slot_id = require_string(js, "slot", "breaks entry");
      TimeInterval brk{require_int(js, "start", "break for slot " + slot_id),
                       require_int(js, "end", "break for slot " + slot_id)};
      if (!sched.breaks.emplace(slot_id, brk).second)
        fail("break for slot " + slot_id, "duplicate");
      if (!slot_ids.count(slot_id)) fail("breaks entry", "unknown slot " + slot_id);
    }
  }

  validate_schedule(sched);
  return sched;
}

AttendanceTable load_attendance(const std::filesystem::path& path, const Schedule& sched) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  AttendanceTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (line_no == 1) {
      if (fields != std::vector<std::string>{"participant_id", "talk_id"})
        fail(where, "expected header 'participant_id,talk_id'");
      continue;
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      fail(where, "expected 'participant_id,talk_id'");
    if (!sched.talks.count(fields[1])) fail(where, "unknown talk " + fields[1]);
    table.records.push_back({fields[0], fields[1]});
  }
  table.build_index(sched);
  return table;
}

ContactLog load_contacts(const std::filesystem::path& path, EpochSeconds min_duration) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  std::vector<ContactInterval> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (line_no == 1) {
      if (fields != std::vector<std::string>{"u", "v", "start", "end"})
        fail(where, "expected header 'u,v,start,end'");
      continue;
    }
    if (fields.size() != 4 || fields[0].empty() || fields[1].empty())
      fail(where, "expected 'u,v,start,end'");
    if (fields[0] == fields[1]) fail(where, "self contact for " + fields[0]);
    TimeInterval when{parse_epoch(fields[2], where), parse_epoch(fields[3], where)};
    if (when.end < when.start) fail(where, "interval ends before it starts");
    raw.push_back({fields[0], fields[1], when});
  }
  return ContactLog::canonicalize(std::move(raw), min_duration);
}

Corpus load_corpus(const std::filesystem::path& dir) {
  Corpus corpus;
  if (!std::filesystem::is_directory(dir))
    throw ValidationError("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> members;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_directory()) members.push_back(entry.path());
  std::sort(members.begin(), members.end());
  for (const auto& member : members) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(member))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) continue;
    auto& docs = corpus.documents[member.filename().string()];
    for (const auto& f : files) docs.push_back(read_file(f));
  }
  return corpus;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& schedule_json,
                     const std::filesystem::path& attendance_csv,
                     const std::filesystem::path& contacts_csv,
                     const std::filesystem::path& corpus_dir, const LoadOptions& opts) {
  Dataset ds;
  ds.schedule = load_schedule(schedule_json);
  ds.attendance = load_attendance(attendance_csv, ds.schedule);
  if (!contacts_csv.empty())
    ds.contacts = load_contacts(contacts_csv, opts.min_contact_duration);
  if (!corpus_dir.empty()) ds.corpus = load_corpus(corpus_dir);
  // Corpus cutoff: everything published before the conference begins.
  ds.corpus.cutoff = ds.schedule.slots.empty() ? 0 : ds.schedule.slots.front().start;
  return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  ordered_json doc;
  doc["slots"] = ordered_json::array();
  for (const auto& slot : ds.schedule.slots) {
    ordered_json js;
    js["id"] = slot.id;
    js["start"] = slot.start;
    js["end"] = slot.end;
    js["sessions"] = slot.sessions;
    doc["slots"].push_back(js);
  }
  doc["sessions"] = ordered_json::array();
  for (const auto& [sid, sess] : ds.schedule.sessions) {
    ordered_json js;
    js["id"] = sess.id;
    js["room"] = sess.room;
    js["slot"] = sess.slot;
    js["talks"] = sess.talks;
    doc["sessions"].push_back(js);
  }
  bool any_fulltext = false;
  for (const auto& [tid, talk] : ds.schedule.talks)
    if (!talk.fulltext.empty()) any_fulltext = true;
  if (any_fulltext) fs::create_directories(out_dir / "fulltext");
  doc["talks"] = ordered_json::array();
  for (const auto& [tid, talk] : ds.schedule.talks) {
    ordered_json js;
    js["id"] = talk.id;
    js["title"] = talk.title;
    js["abstract"] = talk.abstract_text;
    if (talk.fulltext.empty()) {
      js["fulltext_path"] = "";
    } else {
      const std::string rel = "fulltext/" + talk.id + ".txt";
      std::ofstream out(out_dir / rel, std::ios::binary);
      out << talk.fulltext;
      js["fulltext_path"] = rel;
    }
    js["presenter"] = talk.presenter;
    js["track"] = talk.track;
    js["session"] = talk.session;
    doc["talks"].push_back(js);
  }
  doc["tracks"] = ordered_json::array();
  for (const auto& [id, count] : ds.schedule.track_paper_counts) {
    ordered_json js;
    js["id"] = id;
    js["accepted_papers"] = count;
    doc["tracks"].push_back(js);
  }
  doc["breaks"] = ordered_json::array();
  for (const auto& [slot_id, brk] : ds.schedule.breaks) {
    ordered_json js;
    js["slot"] = slot_id;
    js["start"] = brk.start;
    js["end"] = brk.end;
    doc["breaks"].push_back(js);
  }
  {
    std::ofstream out(out_dir / "schedule.json", std::ios::binary);
    out << doc.dump(2) << "\n";
  }

  {
    std::ofstream out(out_dir / "attendance.csv", std::ios::binary);
    out << "participant_id,talk_id\n";
    for (const auto& rec : ds.attendance.records) out << rec.participant << "," << rec.talk << "\n";
  }
  {
    std::ofstream out(out_dir / "contacts.csv", std::ios::binary);
    out << "u,v,start,end\n";
    for (const auto& c : ds.contacts.intervals)
      out << c.u << "," << c.v << "," << c.when.start << "," << c.when.end << "\n";
  }
  for (const auto& [pid, docs] : ds.corpus.documents) {
    const fs::path member = out_dir / "corpus" / pid;
    fs::create_directories(member);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "doc%03zu.txt", i);
      std::ofstream out(member / name, std::ios::binary);
      out << docs[i];
    }
  }
}

}  // namespace talkwalk
