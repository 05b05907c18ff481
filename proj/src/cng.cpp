#include "qor/cng.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace qor {

std::vector<CngEdge> parse_cng_edges(std::string_view text) {
  std::vector<CngEdge> edges;
  std::array<std::array<bool, 6>, 6> seen{};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string from, rot, arrow, to, delta, extra;
    if (!(fields >> from)) continue;
    if (!(fields >> rot >> arrow >> to >> delta) || (fields >> extra) || arrow != "->") {
      throw GoldenFormatError(line_no, "expected `<from> <rotation> -> <to> <delta>`");
    }
    CngEdge e;
    const auto f = parse_location(from);
    const auto r = parse_rotation(rot);
    const auto t = parse_location(to);
    const auto d = parse_delta(delta);
    if (!f) throw GoldenFormatError(line_no, "unknown location '" + from + "'");
    if (!r) throw GoldenFormatError(line_no, "unknown rotation '" + rot + "'");
    if (!t) throw GoldenFormatError(line_no, "unknown location '" + to + "'");
    if (!d) throw GoldenFormatError(line_no, "unknown orientation delta '" + delta + "'");
    e.from = *f;
    e.rotation = *r;
    e.to = *t;
    e.delta = *d;
    bool& slot = seen[index_of(e.from)][index_of(e.rotation)];
    if (slot) throw GoldenFormatError(line_no, "duplicate edge " + from + " " + rot);
    slot = true;
    edges.push_back(e);
  }
  if (edges.size() != 36) {
    throw GoldenFormatError(line_no, "expected 36 edges, found " + std::to_string(edges.size()));
  }
  return edges;
}

std::string to_icons(const RotationPath& p) {
  if (p.empty()) return "(none)";
  std::string out;
  for (Rotation r : p.steps) {
    if (!out.empty()) out += ' ';
    out += icon(r);
  }
  return out;
}

std::string to_names(const RotationPath& p) {
  std::string out;
  for (Rotation r : p.steps) {
    if (!out.empty()) out += ", ";
    out += name(r);
  }
  return out;
}

FaceMap FaceMap::identity() {
  FaceMap m;
  for (Location l : kAllLocations) {
    m.image_[index_of(l)] = l;
    m.delta_[index_of(l)] = OrientationDelta::same;
  }
  return m;
}

Location FaceMap::preimage(Location l) const {
  for (Location src : kAllLocations) {
    if (image(src) == l) return src;
  }
  throw std::logic_error("face map is not a bijection");
}

SideDescriptor FaceMap::apply(const SideDescriptor& side) const {
  return SideDescriptor(side.feature, image(side.location),
                        add_delta(side.orientation, delta(side.location)));
}

FaceMap FaceMap::then(const FaceMap& next) const {
  FaceMap out;
  for (Location l : kAllLocations) {
    const Location mid = image(l);
    out.image_[index_of(l)] = next.image(mid);
    out.delta_[index_of(l)] = delta(l) + next.delta(mid);
  }
  return out;
}

RotationGraph::RotationGraph(std::span<const CngEdge> edges) {
  std::array<std::array<bool, 6>, 6> seen{};
  for (const CngEdge& e : edges) {
    seen[index_of(e.from)][index_of(e.rotation)] = true;
    edges_[index_of(e.from)][index_of(e.rotation)] = e;
  }
  for (const auto& row : seen) {
    if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) {
      throw std::invalid_argument("rotation graph needs one edge per (location, rotation)");
    }
  }
  for (Rotation r : kAllRotations) {
    std::array<bool, 6> hit{};
    for (Location l : kAllLocations) hit[index_of(edge(l, r).to)] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      throw std::invalid_argument("rotation " + std::string(name(r)) + " does not permute the sides");
    }
  }

  // Breadth-first closure over face maps; first discovery is the shortest,
  // lexicographically first path.
  closure_.push_back({RotationPath{}, FaceMap::identity()});
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (Rotation r : kAllRotations) {
      RotationPath path = closure_[i].path;
      path.steps.push_back(r);
      const FaceMap map = closure_[i].map.then(face_map(RotationPath{{r}}));
      const bool known = std::any_of(closure_.begin(), closure_.end(),
                                     [&](const Candidate& c) { return c.map == map; });
      if (known) continue;
      closure_.push_back({std::move(path), map});
      frontier.push_back(closure_.size() - 1);
    }
  }
}

const RotationGraph& RotationGraph::standard() {
  static const RotationGraph graph = [] {
    const auto edges = parse_cng_edges(embedded_cng_data());
    return RotationGraph(edges);
  }();
  return graph;
}

const CngEdge& RotationGraph::edge(Location from, Rotation r) const {
  return edges_[index_of(from)][index_of(r)];
}

std::vector<CngEdge> RotationGraph::edges() const {
  std::vector<CngEdge> out;
  for (const auto& row : edges_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::pair<Location, Location>> RotationGraph::neighborhood() const {
  std::vector<std::pair<Location, Location>> out;
  for (Location a : kAllLocations) {
    for (Location b : kAllLocations) {
      if (index_of(a) >= index_of(b)) continue;
      if (!rotations_between(a, b).empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Rotation> RotationGraph::rotations_between(Location from, Location to) const {
  std::vector<Rotation> out;
  for (Rotation r : kAllRotations) {
    if (edge(from, r).to == to) out.push_back(r);
  }
  return out;
}

RotationGraph::Shortcut RotationGraph::visible_shortcut(Location from, Location to) const {
  if (!is_visible(from) || !is_visible(to)) {
    throw std::invalid_argument("visible_shortcut: " + std::string(to_string(from)) + " -> " +
                                std::string(to_string(to)) + " involves a hidden side");
  }
  if (from == to) throw std::invalid_argument("visible_shortcut: locations must differ");
  const auto rotations = rotations_between(from, to);
  if (rotations.size() != 1) throw std::logic_error("visible sides must be one quarter turn apart");
  return {rotations.front(), edge(from, rotations.front()).delta};
}

SideDescriptor RotationGraph::step(const SideDescriptor& side, Rotation r) const {
  const CngEdge& e = edge(side.location, r);
  return SideDescriptor(side.feature, e.to, add_delta(side.orientation, e.delta));
}

CubeState RotationGraph::step(const CubeState& state, Rotation r) const {
  CubeState out;
  for (const auto& side : state.known()) out.set(step(side, r));
  return out;
}

CubeState RotationGraph::step(const CubeView& view, Rotation r) const {
  CubeState out = step(CubeState(view), r);
  for (Location l : kAllLocations) {
    if (!is_visible(l)) out.clear(l);
  }
  return out;
}

CubeState RotationGraph::replay(CubeState state, const RotationPath& path) const {
  for (Rotation r : path.steps) state = step(state, r);
  return state;
}

FaceMap RotationGraph::face_map(const RotationPath& path) const {
  FaceMap m = FaceMap::identity();
  for (Rotation r : path.steps) {
    FaceMap single;
    for (Location l : kAllLocations) {
      single.image_[index_of(l)] = edge(l, r).to;
      single.delta_[index_of(l)] = edge(l, r).delta;
    }
    m = m.then(single);
  }
  return m;
}

std::vector<Candidate> RotationGraph::rotations_up_to(int max_len) const {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  std::vector<Candidate> out;
  for (const Candidate& c : closure_) {
    if (static_cast<int>(c.path.size()) <= max_len) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> RotationGraph::find_candidates(Pose from, Pose to, Symmetry sym,
                                                      int max_len) const {
  std::vector<Candidate> out;
  for (const Candidate& c : rotations_up_to(max_len)) {
    if (c.map.image(from.location) != to.location) continue;
    const Orientation reached = add_delta(from.orientation, c.map.delta(from.location));
    if (orientations_match(reached, to.orientation, sym)) out.push_back(c);
  }
  return out;
}

std::vector<RotationPath> RotationGraph::find_paths(Pose from, Pose to, Symmetry sym,
                                                    int max_len) const {
  std::vector<RotationPath> out;
  for (auto& c : find_candidates(from, to, sym, max_len)) out.push_back(std::move(c.path));
  return out;
}

int RotationGraph::diameter() const {
  std::size_t longest = 0;
  for (const Candidate& c : closure_) longest = std::max(longest, c.path.size());
  return static_cast<int>(longest);
}

}  // namespace qor
