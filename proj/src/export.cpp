#include "qor/export.hpp"

#include <stdexcept>

namespace qor {

using nlohmann::json;

namespace {

json side_to_json(const SideDescriptor& side) {
  return {{"feature", side.feature.id},
          {"symmetry", std::string(to_string(side.feature.symmetry))},
          {"orientation", std::string(to_string(side.orientation))}};
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("bad field '") + key + "'");
  }
}

json path_to_json(const RotationPath& path) {
  json steps = json::array();
  for (Rotation r : path.steps) {
    steps.push_back({{"name", std::string(name(r))}, {"icon", std::string(icon(r))}});
  }
  return steps;
}

}  // namespace

json view_to_json(const CubeView& view) {
  json j = json::object();
  for (const auto& side : view.sides()) j[std::string(to_string(side.location))] = side_to_json(side);
  return j;
}

CubeView view_from_json(const json& j) {
  std::array<SideDescriptor, 3> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    const Location l = kVisibleLocations[i];
    const char* key = to_string(l).data();
    if (!j.is_object() || !j.contains(key)) {
      throw std::invalid_argument("view is missing side '" + std::string(to_string(l)) + "'");
    }
    const json& s = j.at(key);
    const auto sym = parse_symmetry(required<std::string>(s, "symmetry"));
    const auto ori = parse_orientation(required<std::string>(s, "orientation"));
    if (!sym || !ori) throw std::invalid_argument("bad symmetry or orientation");
    sides[i] = SideDescriptor(Feature(required<std::string>(s, "feature"), *sym), l, *ori);
  }
  return CubeView(sides);
}

json state_to_json(const CubeState& state) {
  json j = json::object();
  for (const auto& side : state.known()) j[std::string(to_string(side.location))] = side_to_json(side);
  return j;
}

json item_to_json(const Item& item, bool include_key) {
  json j = {{"id", item.id}, {"left", view_to_json(item.left)}, {"right", view_to_json(item.right)}};
  if (include_key) {
    j["key"] = item.key ? json(std::string(1, to_char(*item.key))) : json(nullptr);
    json meta = {{"r_count", item.meta.r_count}};
    if (item.meta.witness_length) meta["witness_length"] = *item.meta.witness_length;
    if (item.meta.contradiction_kind) meta["contradiction_kind"] = *item.meta.contradiction_kind;
    if (item.meta.seed) meta["seed"] = *item.meta.seed;
    if (item.meta.perturbation) meta["perturbation"] = std::string(to_string(*item.meta.perturbation));
    if (item.meta.parent_right) meta["parent_right"] = view_to_json(*item.meta.parent_right);
    j["meta"] = meta;
  }
  return j;
}

Item item_from_json(const json& j) {
  Item item{required<std::string>(j, "id"), view_from_json(j.at("left")), view_from_json(j.at("right")),
            std::nullopt, {}};
  if (j.contains("key") && !j.at("key").is_null()) {
    item.key = parse_answer(required<std::string>(j, "key"));
    if (!item.key) throw std::invalid_argument("key must be s or d");
  }
  item.meta.r_count = count_repeated(item.left, item.right);
  if (j.contains("meta")) {
    const json& m = j.at("meta");
    if (m.contains("witness_length")) item.meta.witness_length = m.at("witness_length").get<int>();
    if (m.contains("contradiction_kind")) item.meta.contradiction_kind = m.at("contradiction_kind").get<std::string>();
    if (m.contains("seed")) item.meta.seed = m.at("seed").get<std::uint64_t>();
    if (m.contains("perturbation")) item.meta.perturbation = parse_perturbation(m.at("perturbation").get<std::string>());
    if (m.contains("parent_right")) item.meta.parent_right = view_from_json(m.at("parent_right"));
  }
  return item;
}

json battery_to_json(const Battery& battery, bool include_keys) {
  json items = json::array();
  for (const auto& item : battery.items) items.push_back(item_to_json(item, include_keys));
  return {{"name", battery.name},
          {"time_limit_s", battery.time_limit_s},
          {"mode", std::string(to_string(battery.mode))},
          {"items", items}};
}

Battery battery_from_json(const json& j) {
  Battery b;
  b.name = required<std::string>(j, "name");
  b.time_limit_s = required<int>(j, "time_limit_s");
  if (b.time_limit_s <= 0) throw std::invalid_argument("time_limit_s must be positive");
  if (j.contains("mode")) {
    const auto mode = parse_mode(required<std::string>(j, "mode"));
    if (!mode) throw std::invalid_argument("mode must be exam or training");
    b.mode = *mode;
  }
  if (!j.contains("items") || !j.at("items").is_array()) throw std::invalid_argument("missing items array");
  for (const auto& item : j.at("items")) b.items.push_back(item_from_json(item));
  return b;
}

json solution_to_json(const Item& item, const Solution& solution) {
  const Explanation& e = solution.explanation;
  json j = {{"item", item.id},
            {"verdict", std::string(1, to_char(solution.verdict.answer))},
            {"r_count", e.r_count},
            {"shared", e.shared},
            {"prose", e.prose}};
  if (item.key) j["key"] = std::string(1, to_char(*item.key));
  json candidates = json::array();
  for (const auto& c : e.candidate_rotations) candidates.push_back(path_to_json(c));
  j["candidate_rotations"] = candidates;
  if (e.witness_path) {
    j["witness"] = path_to_json(*e.witness_path);
    // Snapshot of the left cube's visible sides after each step.
    const auto& graph = RotationGraph::standard();
    CubeState state(item.left);
    json frames = json::array({state_to_json(CubeState(item.left))});
    for (std::size_t i = 0; i < e.witness_path->size(); ++i) {
      state = graph.step(state, e.witness_path->steps[i]);
      CubeState visible = state;
      for (Location l : kAllLocations) {
        if (!is_visible(l)) visible.clear(l);
      }
      // Hidden faces that come into view are whatever the right cube shows.
      if (i + 1 == e.witness_path->size()) {
        for (const auto& side : item.right.sides()) {
          if (!visible.at(side.location)) visible.set(side);
        }
      }
      frames.push_back(state_to_json(visible));
    }
    j["frames"] = frames;
  }
  if (e.contradiction) {
    const Contradiction& k = *e.contradiction;
    j["contradiction"] = {{"kind", std::string(to_string(k.kind))},
                          {"feature", k.feature},
                          {"location", std::string(to_string(k.location))},
                          {"predicted_location", std::string(to_string(k.predicted_location))},
                          {"other_feature", k.other_feature},
                          {"candidate", path_to_json(k.candidate)}};
  }
  return j;
}

}  // namespace qor
