#include "qor/http.hpp"

#include <httplib.h>

#include "qor/export.hpp"

namespace qor::service {

using nlohmann::json;

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
  res.set_header("Access-Control-Allow-Origin", "*");
}

// Runs a handler and maps failures onto the error JSON shape.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    send(res, 200, fn());
  } catch (const ServiceError& e) {
    send(res, http_status(e.code()), {{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
  } catch (const ParseError& e) {
    send(res, 400, {{"error", "bad_request"}, {"message", e.what()}});
  } catch (const json::exception& e) {
    send(res, 400, {{"error", "bad_request"}, {"message", e.what()}});
  } catch (const std::invalid_argument& e) {
    send(res, 400, {{"error", "bad_request"}, {"message", e.what()}});
  }
}

json body_of(const httplib::Request& req) {
  try {
    return req.body.empty() ? json::object() : json::parse(req.body);
  } catch (const json::exception& e) {
    throw ServiceError(ErrorCode::bad_request, std::string("invalid JSON body: ") + e.what());
  }
}

Battery battery_from_request(const json& body) {
  if (body.contains("battery")) return battery_from_json(body.at("battery"));
  if (body.contains("battery_text")) return parse_battery(body.at("battery_text").get<std::string>());
  BatteryRequest request;
  request.n_items = body.value("n_items", std::size_t{21});
  request.mix.same = body.value("same", 0.5);
  request.mix.different = 1.0 - request.mix.same;
  request.time_limit_s = body.value("time_limit_s", 180);
  request.name = body.value("name", std::string("cct"));
  const auto mode = parse_mode(body.value("mode", std::string("exam")));
  if (!mode) throw ServiceError(ErrorCode::bad_request, "mode must be exam or training");
  request.mode = *mode;
  return assemble_battery(body.value("seed", std::uint64_t{1}), request);
}

}  // namespace

void mount_routes(httplib::Server& server, TrainerService& service) {
  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.create_session(battery_from_request(body_of(req))); });
  });
  server.Get(R"(/sessions/([0-9a-zA-Z]+))", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.status(req.matches[1]); });
  });
  server.Get(R"(/sessions/([0-9a-zA-Z]+)/next)", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.next_item(req.matches[1]); });
  });
  server.Post(R"(/sessions/([0-9a-zA-Z]+)/answers)", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = body_of(req);
      if (!body.contains("item") || !body.contains("answer")) {
        throw ServiceError(ErrorCode::bad_request, "body needs 'item' and 'answer'");
      }
      const auto answer = parse_answer(body.at("answer").get<std::string>());
      if (!answer) throw ServiceError(ErrorCode::bad_request, "answer must be s or d");
      return service.submit_answer(req.matches[1], body.at("item").get<std::string>(), *answer);
    });
  });
  server.Get(R"(/sessions/([0-9a-zA-Z]+)/items/([0-9A-Za-z_-]+)/explanation)",
             [&](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { return service.explanation(req.matches[1], req.matches[2]); });
             });
  server.Get(R"(/sessions/([0-9a-zA-Z]+)/report)", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.report(req.matches[1]); });
  });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

}  // namespace qor::service
