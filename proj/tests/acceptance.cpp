// Acceptance suite: one PASS/FAIL line per primary criterion. Tolerances and
// time limits are pinned below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qor/export.hpp"
#include "qor/geometry.hpp"
#include "qor/items.hpp"
#include "qor/reference_tables.hpp"
#include "qor/solver.hpp"

using namespace qor;
using L = Location;

namespace {

// Counts of random and generated cases for the agreement criterion.
constexpr int kRandomPairs = 12000;
constexpr int kGeneratedSeedsPerCase = 40;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(const char* name, double limit_s, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) {
    out.pass = false;
    out.detail += " [too slow]";
  }
  if (!out.pass) ++failures;
  std::printf("%s  %-28s %6.2fs / %4.0fs  %s\n", out.pass ? "PASS" : "FAIL", name, secs, limit_s,
              out.detail.c_str());
}

std::set<Rotation> derived_cell(Location from, Location to) {
  std::set<Rotation> out;
  for (Rotation r : kAllRotations) {
    if (geometry::derive_transition(r, from).location == to) out.insert(r);
  }
  return out;
}

bool replay_matches(const CubeView& left, const RotationPath& path, const CubeView& right) {
  const CubeState end = RotationGraph::standard().replay(CubeState(left), path);
  for (const auto& side : right.sides()) {
    const auto& got = end.at(side.location);
    if (!got) {
      if (left.find(side.feature.id)) return false;  // a shared feature went missing
      continue;
    }
    if (got->feature.id != side.feature.id) return false;
    if (!orientations_match(got->orientation, side.orientation, side.feature.symmetry)) return false;
  }
  return true;
}

CubeView random_view(std::mt19937_64& rng, std::vector<std::string> ids) {
  std::shuffle(ids.begin(), ids.end(), rng);
  std::array<SideDescriptor, 3> sides;
  for (int i = 0; i < 3; ++i) {
    const auto sym = AlphabetSpec::latin().symmetry_of(ids[i]).value_or(Symmetry::c1_asymmetric);
    const auto o = sym == Symmetry::c4_full ? Orientation::non_oriented
                                            : orientation_from_quarters(static_cast<int>(rng() % 4));
    sides[i] = SideDescriptor({ids[i], sym}, kVisibleLocations[i], o);
  }
  return CubeView(sides);
}

std::vector<Item> generated_items() {
  std::vector<Item> items;
  for (std::uint64_t seed = 1; seed <= kGeneratedSeedsPerCase; ++seed) {
    for (int r = 0; r <= 3; ++r) items.push_back(generate_item(seed, {Answer::same, r, 0}));
    for (int r = 1; r <= 3; ++r) items.push_back(generate_item(seed, {Answer::different, r, 0}));
    items.push_back(generate_item(seed, {Answer::same, 2, 3}));
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (auto& item : assemble_battery(seed).items) items.push_back(std::move(item));
  }
  return items;
}

std::string read_file(const char* path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(std::string("cannot open ") + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  run("table2-composition", 1, [] {
    int ok = 0;
    for (const auto& cell : reference::composition_table()) {
      const std::set<Rotation> printed(cell.rotations.begin(), cell.rotations.end());
      if (derived_cell(cell.from, cell.to) == printed &&
          RotationGraph::standard().rotations_between(cell.from, cell.to).size() == printed.size()) {
        ++ok;
      }
    }
    const bool pass = ok == 36 && reference::composition_table().size() == 36;
    return Outcome{pass, std::to_string(ok) + "/36 cells"};
  });

  run("table3-table4-visible", 1, [] {
    int ok = 0;
    std::string detail;
    for (const auto& cell : reference::visible_table()) {
      const auto t = geometry::derive_transition(cell.rotation, cell.from);
      const auto s = RotationGraph::standard().visible_shortcut(cell.from, cell.to);
      if (t.location == cell.to && t.delta == cell.delta && s.rotation == cell.rotation && s.delta == cell.delta) {
        ++ok;
      }
    }
    const auto ur = geometry::derive_transition(Rotation::towards_up_right, L::up).delta;
    const auto ru = geometry::derive_transition(Rotation::towards_up_left, L::right).delta;
    detail = std::to_string(ok) + "/6 transitions; up->right " + std::string(to_string(ur)) + ", right->up " +
             std::string(to_string(ru));
    return Outcome{ok == 6 && ur == OrientationDelta::plus_q && ru == OrientationDelta::minus_q, detail};
  });

  run("group-facts", 1, [] {
    const auto& group = geometry::rotation_group();
    bool order_four = true;
    for (Rotation r : kAllRotations) {
      const auto m = geometry::rotation_matrix(r);
      order_four = order_four && m * m * m * m == geometry::RotMatrix::identity() && m * m != geometry::RotMatrix::identity();
    }
    const int d = group.diameter();
    // Completeness: every element is reachable by find_paths within D steps.
    const auto& graph = RotationGraph::standard();
    std::size_t produced = 0;
    for (const auto& g : group.elements()) {
      const auto front = geometry::transition(g, L::front);
      const auto up = geometry::transition(g, L::up);
      const auto a = graph.find_paths({L::front, Orientation::q0}, {front.location, add_delta(Orientation::q0, front.delta)},
                                      Symmetry::c1_asymmetric, d);
      const auto b = graph.find_paths({L::up, Orientation::q0}, {up.location, add_delta(Orientation::q0, up.delta)},
                                      Symmetry::c1_asymmetric, d);
      if (a.size() == 1 && b.size() == 1 && a[0] == b[0] && geometry::word_matrix(a[0].steps) == g) ++produced;
    }
    const bool pass = group.elements().size() == 24 && geometry::enumerate_group().size() == 24 && order_four &&
                      produced == 24;
    return Outcome{pass, "|G|=" + std::to_string(group.elements().size()) + ", generators of order 4: " +
                             (order_four ? "yes" : "no") + ", D=" + std::to_string(d) +
                             ", find_paths produced " + std::to_string(produced) + "/24"};
  });

  run("fig1-worked-examples", 1, [] {
    const Item p1 = parse_item("L: front=D@0q up=N@0q right=A@1q | R: front=A@0q up=F@3q right=N@0q | key=d");
    const Item p2 = parse_item("L: front=A@0q up=X@nq right=B@0q | R: front=A@3q up=B@3q right=C@0q | key=s");
    const auto h1 = solve(p1.left, p1.right).verdict.answer;
    const auto b1 = brute_force_solve(p1.left, p1.right).verdict.answer;
    const auto h2 = solve(p2.left, p2.right).verdict.answer;
    const auto b2 = brute_force_solve(p2.left, p2.right).verdict.answer;
    const bool x_nq = p2.left.at(L::up).feature.symmetry == Symmetry::c4_full;
    const bool pass = h1 == Answer::different && b1 == Answer::different && h2 == Answer::same &&
                      b2 == Answer::same && x_nq;
    std::string detail = "pair 1: ";
    detail += to_char(h1);
    detail += '/';
    detail += to_char(b1);
    detail += ", pair 2: ";
    detail += to_char(h2);
    detail += '/';
    detail += to_char(b2);
    detail += " (heuristic/brute force)";
    return Outcome{pass, detail};
  });

  run("heuristic-oracle-agreement", 30, [] {
    std::mt19937_64 rng(0x5eed);
    // Small alphabets force frequent overlaps; N is half-turn and X fully symmetric.
    const std::vector<std::string> pool = {"A", "B", "C", "N", "X", "F"};
    int agree = 0;
    int same = 0;
    for (int i = 0; i < kRandomPairs; ++i) {
      const auto a = random_view(rng, pool);
      const auto b = random_view(rng, pool);
      const auto h = solve(a, b).verdict.answer;
      if (h == brute_force_solve(a, b).verdict.answer) ++agree;
      same += h == Answer::same;
    }
    int items_agree = 0;
    const auto items = generated_items();
    for (const auto& item : items) {
      const auto h = solve(item.left, item.right).verdict.answer;
      if (h == brute_force_solve(item.left, item.right).verdict.answer && item.key == h) ++items_agree;
    }
    const bool pass = agree == kRandomPairs && items_agree == static_cast<int>(items.size());
    return Outcome{pass, std::to_string(agree) + "/" + std::to_string(kRandomPairs) + " random pairs (" +
                             std::to_string(same) + " same), " + std::to_string(items_agree) + "/" +
                             std::to_string(items.size()) + " generated items"};
  });

  run("witness-soundness", 10, [] {
    int checked = 0;
    int sound = 0;
    for (const auto& item : generated_items()) {
      if (item.key != Answer::same) continue;
      ++checked;
      const auto sol = solve(item.left, item.right);
      if (sol.explanation.witness_path && replay_matches(item.left, *sol.explanation.witness_path, item.right)) ++sound;
    }
    return Outcome{checked > 0 && sound == checked,
                   std::to_string(sound) + "/" + std::to_string(checked) + " same-item witnesses replay"};
  });

  run("r0-theorem", 10, [] {
    // Every orientation combination of two disjoint c1 views, then mixed symmetry classes.
    int pairs = 0;
    int same = 0;
    for (int code = 0; code < 4096; ++code) {
      std::array<SideDescriptor, 3> a;
      std::array<SideDescriptor, 3> b;
      for (int i = 0; i < 3; ++i) {
        a[i] = SideDescriptor({std::string(1, static_cast<char>('A' + i))}, kVisibleLocations[i],
                              orientation_from_quarters((code >> (2 * i)) & 3));
        b[i] = SideDescriptor({std::string(1, static_cast<char>('D' + i))}, kVisibleLocations[i],
                              orientation_from_quarters((code >> (6 + 2 * i)) & 3));
      }
      ++pairs;
      same += brute_force_solve(CubeView(a), CubeView(b)).verdict.answer == Answer::same &&
              solve(CubeView(a), CubeView(b)).verdict.answer == Answer::same;
    }
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
      const auto a = random_view(rng, {"A", "N", "X", "B"});
      const auto b = random_view(rng, {"C", "S", "O", "D"});
      ++pairs;
      same += brute_force_solve(a, b).verdict.answer == Answer::same && solve(a, b).verdict.answer == Answer::same;
    }
    return Outcome{same == pairs, std::to_string(same) + "/" + std::to_string(pairs) + " disjoint pairs same"};
  });

  run("round-trip-determinism", 5, [] {
    const std::string corpus = read_file(QOR_CORPUS_FILE);
    int lines = 0;
    int identical = 0;
    std::istringstream in(corpus);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      ++lines;
      const Item item = parse_item(line);
      if (emit_item(item) == line && emit_item(parse_item(emit_item(item))) == line) ++identical;
    }
    BatteryRequest req;
    req.mode = Mode::training;
    const std::string run1 = emit_battery(assemble_battery(2024, req)) + battery_to_json(assemble_battery(2024, req)).dump();
    const std::string run2 = emit_battery(assemble_battery(2024, req)) + battery_to_json(assemble_battery(2024, req)).dump();
    const Item g1 = generate_item(77, {Answer::different, 3, 0});
    const Item g2 = generate_item(77, {Answer::different, 3, 0});
    const bool generator_same = run1 == run2 && item_to_json(g1).dump() == item_to_json(g2).dump();
    const bool pass = lines >= 2 && identical == lines && generator_same;
    return Outcome{pass, std::to_string(identical) + "/" + std::to_string(lines) +
                             " corpus lines round-trip, generator output " +
                             (generator_same ? "byte-identical" : "DIFFERS")};
  });

  std::printf("%s\n", failures == 0 ? "all primary criteria pass" : "some primary criteria FAIL");
  return failures == 0 ? 0 : 1;
}
