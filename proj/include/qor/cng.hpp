#pragma once

// Qualitative inference over the rotation/location/orientation graph.
// Nothing here touches coordinates: every answer is read off the edge
// data, which is loaded from the generated golden file.

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qor/core.hpp"

namespace qor {

struct CngEdge {
  Location from = Location::front;
  Rotation rotation = Rotation::towards_up;
  Location to = Location::front;
  OrientationDelta delta = OrientationDelta::same;

  friend bool operator==(const CngEdge&, const CngEdge&) = default;
};

class GoldenFormatError : public std::runtime_error {
 public:
  GoldenFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses `<from> <rotation> -> <to> <delta>` lines; `#` starts a comment.
/// Requires exactly one edge per (location, rotation).
std::vector<CngEdge> parse_cng_edges(std::string_view text);

/// Golden data compiled into the library from data/cng_rlo.txt.
std::string_view embedded_cng_data();

struct RotationPath {
  std::vector<Rotation> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  friend bool operator==(const RotationPath&, const RotationPath&) = default;
};

std::string to_icons(const RotationPath& p);  // "↑ ↶", or "(none)"
std::string to_names(const RotationPath& p);  // "towards-up, towards-up-left"

/// Action of a whole-cube rotation on the six sides: where each side goes
/// and how its glyph turns. Two paths are the same rotation exactly when
/// their face maps are equal.
class FaceMap {
 public:
  static FaceMap identity();

  Location image(Location l) const { return image_[index_of(l)]; }
  OrientationDelta delta(Location l) const { return delta_[index_of(l)]; }
  Location preimage(Location l) const;

  SideDescriptor apply(const SideDescriptor& side) const;
  /// Applies `this` first, then `next`.
  FaceMap then(const FaceMap& next) const;

  friend bool operator==(const FaceMap&, const FaceMap&) = default;
  friend auto operator<=>(const FaceMap&, const FaceMap&) = default;

 private:
  friend class RotationGraph;
  std::array<Location, 6> image_{};
  std::array<OrientationDelta, 6> delta_{};
};

struct Pose {
  Location location = Location::front;
  Orientation orientation = Orientation::q0;
};

/// A rotation found by path search: its shortest path and its face map.
struct Candidate {
  RotationPath path;
  FaceMap map;
};

class RotationGraph {
 public:
  explicit RotationGraph(std::span<const CngEdge> edges);

  /// Graph built from the embedded golden data.
  static const RotationGraph& standard();

  const CngEdge& edge(Location from, Rotation r) const;
  std::vector<CngEdge> edges() const;

  /// Undirected adjacency of locations under single quarter turns, each
  /// pair listed once in location order.
  std::vector<std::pair<Location, Location>> neighborhood() const;

  /// Rotations moving a feature from `from` to `to`, in Rotation order.
  std::vector<Rotation> rotations_between(Location from, Location to) const;

  struct Shortcut {
    Rotation rotation;
    OrientationDelta delta;
  };
  /// Single rotation between two distinct visible sides; throws
  /// std::invalid_argument for hidden or equal locations.
  Shortcut visible_shortcut(Location from, Location to) const;

  SideDescriptor step(const SideDescriptor& side, Rotation r) const;
  /// Moves every known side; unknown slots stay unknown.
  CubeState step(const CubeState& state, Rotation r) const;
  /// Moves the view's sides and keeps only those still visible. Hidden
  /// sides rotating into view are unknown.
  CubeState step(const CubeView& view, Rotation r) const;
  CubeState replay(CubeState state, const RotationPath& path) const;

  FaceMap face_map(const RotationPath& path) const;

  /// Every distinct rotation whose shortest path has at most `max_len`
  /// steps, shortest first, ties broken by Rotation order.
  std::vector<Candidate> rotations_up_to(int max_len) const;

  /// All rotations (as shortest paths) taking `from` to `to`, with
  /// orientations compared modulo `sym`. An empty result is valid.
  std::vector<RotationPath> find_paths(Pose from, Pose to, Symmetry sym, int max_len) const;
  std::vector<Candidate> find_candidates(Pose from, Pose to, Symmetry sym, int max_len) const;

  /// Longest shortest path over all reachable rotations.
  int diameter() const;

 private:
  std::array<std::array<CngEdge, 6>, 6> edges_{};  // [location][rotation]
  std::vector<Candidate> closure_;                 // breadth-first, all elements
};

}  // namespace qor
