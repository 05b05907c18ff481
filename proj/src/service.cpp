#include "qor/service.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "qor/export.hpp"

namespace qor::service {

using nlohmann::json;

const AnswerRecord* Session::answer_for(std::string_view item_id) const {
  for (const auto& a : answers) {
    if (a.item == item_id) return &a;
  }
  return nullptr;
}

ScoreReport score(const Session& session) {
  ScoreReport rep;
  for (const auto& item : session.battery.items) {
    ScoreEntry entry;
    entry.item = item.id;
    entry.key = item.key.value_or(Answer::same);
    if (const auto* a = session.answer_for(item.id)) {
      entry.answer = a->answer;
      entry.elapsed_ms = a->elapsed_ms;
      entry.correct() ? ++rep.n_correct : ++rep.n_wrong;
    } else {
      ++rep.n_skipped;
    }
    rep.items.push_back(entry);
  }
  return rep;
}

json report_to_json(const ScoreReport& report) {
  json items = json::array();
  for (const auto& e : report.items) {
    json entry = {{"item", e.item}, {"key", std::string(1, to_char(e.key))}};
    entry["answer"] = e.answer ? json(std::string(1, to_char(*e.answer))) : json(nullptr);
    entry["correct"] = e.answer ? json(e.correct()) : json(nullptr);
    entry["elapsed_ms"] = e.elapsed_ms ? json(*e.elapsed_ms) : json(nullptr);
    entry["explanation"] = "items/" + e.item + "/explanation";
    items.push_back(entry);
  }
  return {{"n_correct", report.n_correct},
          {"n_wrong", report.n_wrong},
          {"n_skipped", report.n_skipped},
          {"items", items}};
}

std::string session_header_line(const Session& session) {
  return json{{"event", "session"},
              {"id", session.id},
              {"started_at_ms", session.started_at_ms},
              {"battery", battery_to_json(session.battery)}}
      .dump();
}

std::string answer_line(const AnswerRecord& answer) {
  return json{{"event", "answer"},
              {"item", answer.item},
              {"answer", std::string(1, to_char(answer.answer))},
              {"elapsed_ms", answer.elapsed_ms}}
      .dump();
}

Session parse_session_log(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Session session;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("session log line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string event = j.value("event", "");
    if (!header) {
      if (event != "session") throw std::runtime_error("session log must start with a session event");
      session.id = j.at("id").get<std::string>();
      session.started_at_ms = j.at("started_at_ms").get<std::int64_t>();
      session.battery = battery_from_json(j.at("battery"));
      header = true;
    } else if (event == "answer") {
      const auto answer = parse_answer(j.at("answer").get<std::string>());
      if (!answer) throw std::runtime_error("session log line " + std::to_string(line_no) + ": bad answer");
      session.answers.push_back({j.at("item").get<std::string>(), *answer, j.at("elapsed_ms").get<std::int64_t>()});
    } else {
      throw std::runtime_error("session log line " + std::to_string(line_no) + ": unknown event '" + event + "'");
    }
  }
  if (!header) throw std::runtime_error("empty session log");
  return session;
}

SessionStore::SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SessionStore::path_for(const std::string& id) const {
  const bool safe = !id.empty() && id.size() <= 64 &&
                    id.find_first_not_of("0123456789abcdef") == std::string::npos;
  if (!safe) throw ServiceError(ErrorCode::not_found, "unknown session '" + id + "'");
  return dir_ / (id + ".log");
}

void SessionStore::create(const Session& session) {
  const auto path = path_for(session.id);
  if (std::filesystem::exists(path)) throw ServiceError(ErrorCode::conflict, "session exists: " + session.id);
  std::ofstream out(path);
  out << session_header_line(session) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void SessionStore::append(const std::string& id, const AnswerRecord& answer) {
  std::ofstream out(path_for(id), std::ios::app);
  out << answer_line(answer) << '\n';
  if (!out) throw std::runtime_error("cannot append to session log " + id);
}

std::optional<Session> SessionStore::load(const std::string& id) const {
  const auto path = path_for(id);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return parse_session_log(text.str());
}

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::bad_request: return "bad_request";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::forbidden: return "forbidden";
    case ErrorCode::conflict: return "conflict";
    case ErrorCode::expired: return "expired";
  }
  return "?";
}

int http_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::bad_request: return 400;
    case ErrorCode::not_found: return 404;
    case ErrorCode::forbidden: return 403;
    case ErrorCode::conflict: return 409;
    case ErrorCode::expired: return 410;
  }
  return 500;
}

Clock system_clock_ms() {
  return [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
}

TrainerService::TrainerService(SessionStore store, Clock clock)
    : store_(std::move(store)), clock_(std::move(clock)), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ std::random_device{}();
}

std::string TrainerService::new_session_id() {
  std::lock_guard lock(registry_mutex_);
  std::mt19937_64 gen(id_state_++ ^ static_cast<std::uint64_t>(clock_()));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(gen()));
  return buf;
}

std::mutex& TrainerService::session_mutex(const std::string& session_id) {
  std::lock_guard lock(registry_mutex_);
  auto& slot = session_mutexes_[session_id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

Session TrainerService::load_or_throw(const std::string& session_id) const {
  auto session = store_.load(session_id);
  if (!session) throw ServiceError(ErrorCode::not_found, "unknown session '" + session_id + "'");
  return *std::move(session);
}

namespace {

json public_item(const Item& item, std::size_t index, std::size_t total) {
  json j = item_to_json(item, false);
  j["position"] = index + 1;
  j["total"] = total;
  return j;
}

}  // namespace

json TrainerService::create_session(const Battery& battery) {
  if (battery.items.empty()) throw ServiceError(ErrorCode::bad_request, "battery has no items");
  for (const auto& item : battery.items) {
    if (!item.key) throw ServiceError(ErrorCode::bad_request, "item " + item.id + " has no answer key");
  }
  Session session;
  session.id = new_session_id();
  session.battery = battery;
  session.started_at_ms = clock_();
  store_.create(session);
  return {{"session", session.id},
          {"name", battery.name},
          {"mode", std::string(to_string(battery.mode))},
          {"time_limit_s", battery.time_limit_s},
          {"started_at_ms", session.started_at_ms},
          {"total", battery.items.size()},
          {"item", public_item(battery.items.front(), 0, battery.items.size())}};
}

json TrainerService::status(const std::string& session_id) {
  std::lock_guard lock(session_mutex(session_id));
  const Session s = load_or_throw(session_id);
  const auto now = clock_();
  return {{"session", s.id},
          {"mode", std::string(to_string(s.battery.mode))},
          {"time_limit_s", s.battery.time_limit_s},
          {"remaining_ms", std::max<std::int64_t>(0, s.deadline_ms() - now)},
          {"answered", s.answers.size()},
          {"total", s.battery.items.size()},
          {"expired", s.expired(now)},
          {"finished", s.finished(now)}};
}

json TrainerService::next_item(const std::string& session_id) {
  std::lock_guard lock(session_mutex(session_id));
  const Session s = load_or_throw(session_id);
  const auto now = clock_();
  if (s.complete()) return {{"done", true}};
  if (s.expired(now)) throw ServiceError(ErrorCode::expired, "time limit of the session has passed");
  for (std::size_t i = 0; i < s.battery.items.size(); ++i) {
    const Item& item = s.battery.items[i];
    if (!s.answer_for(item.id)) {
      return {{"done", false},
              {"remaining_ms", s.deadline_ms() - now},
              {"item", public_item(item, i, s.battery.items.size())}};
    }
  }
  return {{"done", true}};
}

json TrainerService::submit_answer(const std::string& session_id, const std::string& item_id, Answer answer) {
  std::lock_guard lock(session_mutex(session_id));
  Session s = load_or_throw(session_id);
  const Item* item = s.battery.find(item_id);
  if (!item) throw ServiceError(ErrorCode::not_found, "unknown item '" + item_id + "'");
  const auto now = clock_();
  if (s.expired(now)) throw ServiceError(ErrorCode::expired, "answer arrived after the time limit");
  if (s.answer_for(item_id)) throw ServiceError(ErrorCode::conflict, "item " + item_id + " already answered");

  const AnswerRecord record{item_id, answer, now - s.started_at_ms};
  store_.append(s.id, record);
  s.answers.push_back(record);

  json out = {{"item", item_id},
              {"answer", std::string(1, to_char(answer))},
              {"elapsed_ms", record.elapsed_ms},
              {"answered", s.answers.size()},
              {"total", s.battery.items.size()},
              {"finished", s.complete()}};
  if (s.battery.mode == Mode::training || s.complete()) {
    out["correct"] = answer == *item->key;
    out["key"] = std::string(1, to_char(*item->key));
  }
  return out;
}

json TrainerService::explanation(const std::string& session_id, const std::string& item_id) {
  std::lock_guard lock(session_mutex(session_id));
  const Session s = load_or_throw(session_id);
  const Item* item = s.battery.find(item_id);
  if (!item) throw ServiceError(ErrorCode::not_found, "unknown item '" + item_id + "'");
  const bool finished = s.finished(clock_());
  if (!finished) {
    if (!s.answer_for(item_id)) throw ServiceError(ErrorCode::forbidden, "answer item " + item_id + " first");
    if (s.battery.mode == Mode::exam) {
      throw ServiceError(ErrorCode::forbidden, "explanations are shown when the exam session ends");
    }
  }
  return solution_to_json(*item, solve(item->left, item->right));
}

json TrainerService::report(const std::string& session_id) {
  std::lock_guard lock(session_mutex(session_id));
  const Session s = load_or_throw(session_id);
  if (!s.finished(clock_())) throw ServiceError(ErrorCode::conflict, "session still in progress");
  json j = report_to_json(score(s));
  j["session"] = s.id;
  return j;
}

}  // namespace qor::service
