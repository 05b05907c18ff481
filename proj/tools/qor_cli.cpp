// qor: solve, explain, generate and administer cube comparison items.

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qor/certify.hpp"
#include "qor/cng.hpp"
#include "qor/export.hpp"
#include "qor/http.hpp"
#include "qor/items.hpp"
#include "qor/service.hpp"
#include "qor/solver.hpp"

namespace {

constexpr int kExitSame = 0;
constexpr int kExitDifferent = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

qor::Item load_single_item(const std::string& path) {
  auto items = qor::parse_items(read_file(path));
  if (items.size() != 1) {
    throw std::runtime_error(path + ": expected exactly one item, found " + std::to_string(items.size()));
  }
  return std::move(items.front());
}

int run_solve(const std::string& path, bool explain, bool json_out) {
  qor::Item item = [&] {
    try {
      return load_single_item(path);
    } catch (const qor::ParseError& e) {
      throw std::runtime_error(path + ":" + e.what());
    }
  }();
  const qor::Solution sol = qor::solve(item.left, item.right);
  const auto brute = qor::brute_force_solve(item.left, item.right);
  const auto& e = sol.explanation;
  if (json_out) {
    auto j = qor::solution_to_json(item, sol);
    j["brute_force"] = std::string(1, qor::to_char(brute.verdict.answer));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "verdict: " << qor::to_char(sol.verdict.answer) << '\n';
    std::cout << "R: " << e.r_count << '\n';
    if (e.witness_path) {
      std::cout << "witness: " << qor::to_icons(*e.witness_path);
      if (!e.witness_path->empty()) std::cout << " (" << qor::to_names(*e.witness_path) << ')';
      std::cout << '\n';
    }
    if (e.contradiction) {
      const auto& k = *e.contradiction;
      std::cout << "contradiction: " << qor::to_string(k.kind) << ' ' << k.feature << " at "
                << qor::to_string(k.location) << '\n';
    }
    if (explain) std::cout << '\n' << e.prose;
    if (brute.verdict.answer != sol.verdict.answer) {
      std::cout << "warning: brute-force oracle disagrees (" << qor::to_char(brute.verdict.answer) << ")\n";
    }
    if (item.key && *item.key != sol.verdict.answer) {
      std::cout << "note: file key is " << qor::to_char(*item.key) << '\n';
    }
  }
  return sol.verdict.answer == qor::Answer::same ? kExitSame : kExitDifferent;
}

std::string item_file_text(const qor::Item& item) {
  std::ostringstream os;
  os << "# seed=" << item.meta.seed.value_or(0) << " r=" << item.meta.r_count;
  if (item.meta.witness_length) os << " witness=" << *item.meta.witness_length;
  if (item.meta.perturbation) os << " perturbation=" << qor::to_string(*item.meta.perturbation);
  if (item.meta.contradiction_kind) os << " contradiction=" << *item.meta.contradiction_kind;
  os << '\n' << qor::emit_item(item) << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qualitative cube rotation reasoning for cube comparison items"};
  app.require_subcommand(1);

  std::string item_path;
  bool json_out = false;
  auto* solve_cmd = app.add_subcommand("solve", "Decide same (exit 0) or different (exit 1) for an item file");
  solve_cmd->add_option("file", item_path, "Item file")->required();
  solve_cmd->add_flag("--json", json_out, "Print the structured solution");

  auto* explain_cmd = app.add_subcommand("explain", "Solve an item file and print the explanation");
  explain_cmd->add_option("file", item_path, "Item file")->required();
  explain_cmd->add_flag("--json", json_out, "Print the structured solution");

  std::uint64_t seed = 1;
  std::string key_text = "s";
  int r_count = 2;
  int min_witness = 0;
  std::string out_path;
  bool emit_json = false;
  auto* gen_cmd = app.add_subcommand("generate", "Generate one item with a verified key");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--key", key_text, "s or d")->check(CLI::IsMember({"s", "d"}));
  gen_cmd->add_option("--r", r_count, "Number of shared features (0-3)");
  gen_cmd->add_option("--min-witness", min_witness, "Minimum witness path length (same items)");
  gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");
  gen_cmd->add_flag("--json", emit_json, "Write the structured export instead of the text line");

  qor::BatteryRequest battery_request;
  std::string mode_text = "exam";
  auto* bat_cmd = app.add_subcommand("battery", "Assemble a timed battery");
  bat_cmd->add_option("--seed", seed, "Random seed");
  bat_cmd->add_option("--n", battery_request.n_items, "Number of items");
  bat_cmd->add_option("--same", battery_request.mix.same, "Fraction of same items")->check(CLI::Range(0.0, 1.0));
  bat_cmd->add_option("--name", battery_request.name, "Battery name");
  bat_cmd->add_option("--time", battery_request.time_limit_s, "Time limit in seconds");
  bat_cmd->add_option("--mode", mode_text, "exam or training")->check(CLI::IsMember({"exam", "training"}));
  bat_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");
  bat_cmd->add_flag("--json", emit_json, "Write the structured export instead of the text format");

  std::string golden_path;
  std::string write_golden;
  auto* cert_cmd = app.add_subcommand("certify", "Re-derive the qualitative tables from geometry and compare");
  cert_cmd->add_option("--golden", golden_path, "Transition file to check (default: the built-in data)");
  cert_cmd->add_option("--write-golden", write_golden, "Write the derived transition file and exit");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string sessions_dir = "sessions";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port");
  serve_cmd->add_option("--sessions", sessions_dir, "Directory for session logs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve_cmd) return run_solve(item_path, false, json_out);
    if (*explain_cmd) return run_solve(item_path, true, json_out);

    if (*gen_cmd) {
      qor::ItemRequest request;
      request.key = *qor::parse_answer(key_text);
      request.r_count = r_count;
      request.min_witness_length = min_witness;
      const qor::Item item = qor::generate_item(seed, request);
      write_output(out_path, emit_json ? qor::item_to_json(item).dump(2) + "\n" : item_file_text(item));
      return 0;
    }

    if (*bat_cmd) {
      battery_request.mix.different = 1.0 - battery_request.mix.same;
      battery_request.mode = *qor::parse_mode(mode_text);
      const qor::Battery battery = qor::assemble_battery(seed, battery_request);
      write_output(out_path,
                   emit_json ? qor::battery_to_json(battery).dump(2) + "\n" : qor::emit_battery(battery));
      return 0;
    }

    if (*cert_cmd) {
      if (!write_golden.empty()) {
        write_output(write_golden, qor::geometry::emit_transition_table());
        return 0;
      }
      const std::string golden = golden_path.empty() ? std::string(qor::embedded_cng_data()) : read_file(golden_path);
      const auto report = qor::certify_tables(golden);
      std::cout << report.summary();
      // The graph layer must agree with the geometry it was generated from.
      const qor::RotationGraph graph(qor::parse_cng_edges(qor::embedded_cng_data()));
      if (graph.diameter() != report.group_diameter) {
        std::cout << "MISMATCH graph diameter " << graph.diameter() << " vs group " << report.group_diameter << '\n';
        return 1;
      }
      return report.ok() ? 0 : 1;
    }

    if (*serve_cmd) {
      qor::service::TrainerService service{qor::service::SessionStore(sessions_dir)};
      httplib::Server server;
      qor::service::mount_routes(server, service);
      std::cout << "serving on http://" << host << ':' << port << " (sessions in " << sessions_dir << ")\n";
      if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ':' << port << '\n';
        return kExitInputError;
      }
      return 0;
    }
  } catch (const qor::UnsatisfiableRequest& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
