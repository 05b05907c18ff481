#pragma once

#include <functional>

#include "qor/service.hpp"

namespace httplib {
class Server;
}

namespace qor::service {

/// Routes (all JSON):
///   POST /sessions                          body: {"battery": {...}} | {"battery_text": "..."}
///                                           | {"seed": n, "n_items": 21, "same": 0.5, "mode": "exam",
///                                              "time_limit_s": 180}
///   GET  /sessions/{id}                     status and remaining time
///   GET  /sessions/{id}/next                next unanswered item, never with its key
///   POST /sessions/{id}/answers             body: {"item": "01", "answer": "s"}
///   GET  /sessions/{id}/items/{item}/explanation
///   GET  /sessions/{id}/report
/// Errors are {"error": <code>, "message": ...} with 400/403/404/409/410.
void mount_routes(httplib::Server& server, TrainerService& service);

}  // namespace qor::service
