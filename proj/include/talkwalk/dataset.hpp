#pragma once
// Conference dataset model: schedule, attendance, face-to-face contacts, text corpus.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace talkwalk {

using EpochSeconds = std::int64_t;

// Input data broke a documented contract (schema, reference, or invariant).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeInterval {
  EpochSeconds start = 0;
  EpochSeconds end = 0;

  EpochSeconds duration() const { return end - start; }
  EpochSeconds overlap(const TimeInterval& o) const {
    EpochSeconds lo = std::max(start, o.start);
    EpochSeconds hi = std::min(end, o.end);
    return hi > lo ? hi - lo : 0;
  }
  bool operator==(const TimeInterval&) const = default;
};

// A block of parallel sessions. Talks at the same list position inside the
// slot's sessions run simultaneously; attendance is decided per position.
struct TimeSlot {
  std::string id;
  EpochSeconds start = 0;
  EpochSeconds end = 0;
  std::vector<std::string> sessions;  // >= 2, distinct rooms
  bool operator==(const TimeSlot&) const = default;
};

struct Session {
  std::string id;
  std::string room;
  std::string slot;
  std::vector<std::string> talks;  // presentation order
  bool operator==(const Session&) const = default;
};

struct Talk {
  std::string id;
  std::string title;
  std::string abstract_text;
  std::string fulltext;
  std::string presenter;  // participant id, exactly one
  std::string track;
  std::string session;
  bool operator==(const Talk&) const = default;
};

struct Schedule {
  std::vector<TimeSlot> slots;  // ordered by start time, non-overlapping
  std::map<std::string, Session> sessions;
  std::map<std::string, Talk> talks;
  std::map<std::string, std::int64_t> track_paper_counts;  // accepted papers per track
  std::map<std::string, TimeInterval> breaks;  // slot id -> break ending at/before it

  const TimeSlot& slot(const std::string& id) const;
  const Session& session(const std::string& id) const;
  const Talk& talk(const std::string& id) const;

  // Position of a talk inside its session's presentation order.
  std::size_t position_of(const Talk& t) const;
  // Longest session length in the slot.
  std::size_t position_count(const TimeSlot& s) const;
  // Talks running in parallel at one position, sorted by talk id. Sessions
  // shorter than the position contribute nothing.
  std::vector<std::string> talks_at(const TimeSlot& s, std::size_t position) const;

  bool operator==(const Schedule&) const = default;
};

struct AttendanceRecord {
  std::string participant;
  std::string talk;
  bool operator==(const AttendanceRecord&) const = default;
};

struct AttendanceTable {
  std::vector<AttendanceRecord> records;
  // Derived: participant -> slot id -> position -> talk id. Rebuilt by
  // build_index; at most one record per (participant, slot, position).
  std::map<std::string, std::map<std::string, std::map<std::size_t, std::string>>> index;

  void build_index(const Schedule& schedule);  // throws ValidationError on duplicates
  // nullptr when the participant has no record at that position.
  const std::string* attended(const std::string& participant, const std::string& slot,
                              std::size_t position) const;
  std::vector<std::string> participants() const;  // sorted, unique

  bool operator==(const AttendanceTable& o) const { return records == o.records; }
};

struct ContactInterval {
  std::string u;  // canonical: u < v
  std::string v;
  TimeInterval when;
  bool operator==(const ContactInterval&) const = default;
};

struct ContactLog {
  // Canonical: u < v, sorted by (u, v, start), per-pair intervals disjoint.
  std::vector<ContactInterval> intervals;

  // Drops intervals shorter than min_duration, orients pairs, merges overlaps.
  static ContactLog canonicalize(std::vector<ContactInterval> raw, EpochSeconds min_duration);
  std::map<std::pair<std::string, std::string>, std::vector<TimeInterval>> by_pair() const;
  bool operator==(const ContactLog&) const = default;
};

struct Corpus {
  // participant id -> documents (file order). All documents are asserted by the
  // caller to predate the cutoff; nothing here can verify it.
  std::map<std::string, std::vector<std::string>> documents;
  EpochSeconds cutoff = 0;
  bool operator==(const Corpus&) const = default;
};

struct Dataset {
  Schedule schedule;
  AttendanceTable attendance;
  ContactLog contacts;
  Corpus corpus;

  // Sorted union of everyone the data mentions: attendance, contact endpoints,
  // corpus authors, presenters.
  std::vector<std::string> participants() const;
  bool operator==(const Dataset&) const = default;
};

struct LoadOptions {
  EpochSeconds min_contact_duration = 20;  // sensor resolution; shorter intervals dropped
};

// Structural invariants of a parsed schedule; throws ValidationError.
void validate_schedule(const Schedule& schedule);

// contacts_csv and corpus_dir may be empty paths (empty log / empty corpus).
Dataset load_dataset(const std::filesystem::path& schedule_json,
                     const std::filesystem::path& attendance_csv,
                     const std::filesystem::path& contacts_csv,
                     const std::filesystem::path& corpus_dir,
                     const LoadOptions& opts = {});

// Writes schedule.json, attendance.csv, contacts.csv, fulltext/, corpus/ under
// out_dir in the same format load_dataset reads.
void save_dataset(const Dataset& dataset, const std::filesystem::path& out_dir);

}  // namespace talkwalk
