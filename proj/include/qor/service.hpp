#pragma once

// Timed test administration: sessions over a battery, an append-only log
// per session, scoring, and the JSON operations behind the HTTP endpoints.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qor/items.hpp"

namespace qor::service {

struct AnswerRecord {
  std::string item;
  Answer answer = Answer::same;
  std::int64_t elapsed_ms = 0;
};

struct Session {
  std::string id;
  Battery battery;
  std::int64_t started_at_ms = 0;
  std::vector<AnswerRecord> answers;

  std::int64_t deadline_ms() const { return started_at_ms + std::int64_t{battery.time_limit_s} * 1000; }
  bool expired(std::int64_t now_ms) const { return now_ms > deadline_ms(); }
  bool complete() const { return answers.size() == battery.items.size(); }
  bool finished(std::int64_t now_ms) const { return complete() || expired(now_ms); }
  const AnswerRecord* answer_for(std::string_view item_id) const;
};

struct ScoreEntry {
  std::string item;
  Answer key = Answer::same;
  std::optional<Answer> answer;
  std::optional<std::int64_t> elapsed_ms;
  bool correct() const { return answer && *answer == key; }
};

struct ScoreReport {
  int n_correct = 0;
  int n_wrong = 0;
  int n_skipped = 0;
  std::vector<ScoreEntry> items;
};

/// Raw counts only; unanswered items count as skipped.
ScoreReport score(const Session& session);
nlohmann::json report_to_json(const ScoreReport& report);

/// Log text format: one JSON object per line. The first line is the
/// session event carrying the full battery; each later line is an answer.
std::string session_header_line(const Session& session);
std::string answer_line(const AnswerRecord& answer);
Session parse_session_log(std::string_view text);

/// One append-only `<id>.log` file per session.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path dir);

  void create(const Session& session);
  void append(const std::string& id, const AnswerRecord& answer);
  std::optional<Session> load(const std::string& id) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& id) const;
  std::filesystem::path dir_;
};

enum class ErrorCode { bad_request, not_found, forbidden, conflict, expired };

std::string_view to_string(ErrorCode c);
int http_status(ErrorCode c);

class ServiceError : public std::runtime_error {
 public:
  ServiceError(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

using Clock = std::function<std::int64_t()>;
Clock system_clock_ms();

/// Session operations. Keys never leave the service before the item is
/// answered; in exam mode correctness and explanations wait until the
/// session is finished. Each call re-reads the session log, so a restarted
/// service picks up where it left off.
class TrainerService {
 public:
  explicit TrainerService(SessionStore store, Clock clock = system_clock_ms());

  nlohmann::json create_session(const Battery& battery);
  nlohmann::json status(const std::string& session_id);
  nlohmann::json next_item(const std::string& session_id);
  nlohmann::json submit_answer(const std::string& session_id, const std::string& item_id, Answer answer);
  nlohmann::json explanation(const std::string& session_id, const std::string& item_id);
  nlohmann::json report(const std::string& session_id);

  const SessionStore& store() const { return store_; }

 private:
  Session load_or_throw(const std::string& session_id) const;
  std::mutex& session_mutex(const std::string& session_id);
  std::string new_session_id();

  SessionStore store_;
  Clock clock_;
  std::mutex registry_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> session_mutexes_;
  std::uint64_t id_state_;
};

}  // namespace qor::service
