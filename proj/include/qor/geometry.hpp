#pragma once

// Exact integer geometry of the cube: quarter-turn matrices, per-face
// glyph frames and the 24-element rotation group. This is the ground truth
// the qualitative tables are derived from and checked against.
//
// World frame: x to the observer's right, y up, z toward the observer.
// front = +z, up = +y, right = +x.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qor/core.hpp"

namespace qor::geometry {

struct IntVec3 {
  int x = 0;
  int y = 0;
  int z = 0;

  friend bool operator==(const IntVec3&, const IntVec3&) = default;
  friend auto operator<=>(const IntVec3&, const IntVec3&) = default;
};

IntVec3 operator-(const IntVec3& v);
int dot(const IntVec3& a, const IntVec3& b);
IntVec3 cross(const IntVec3& a, const IntVec3& b);
bool is_unit_axis(const IntVec3& v);
std::string to_string(const IntVec3& v);

/// 3x3 integer matrix; the rotation group uses signed permutations only.
struct RotMatrix {
  std::array<std::array<int, 3>, 3> m{};

  static RotMatrix identity();

  RotMatrix transpose() const;
  int determinant() const;
  bool is_signed_permutation() const;
  bool is_rotation() const { return is_signed_permutation() && determinant() == 1; }

  friend RotMatrix operator*(const RotMatrix& a, const RotMatrix& b);
  friend IntVec3 operator*(const RotMatrix& a, const IntVec3& v);
  friend bool operator==(const RotMatrix&, const RotMatrix&) = default;
  friend auto operator<=>(const RotMatrix&, const RotMatrix&) = default;
};

RotMatrix rotation_matrix(Rotation r);
/// Matrix of a word applied left to right (first step first).
RotMatrix word_matrix(const std::vector<Rotation>& word);

IntVec3 normal_of(Location l);
std::optional<Location> location_of(const IntVec3& normal);

/// Reference "top" direction of an unturned (0q) glyph on each face.
struct FrameSet {
  std::array<IntVec3, 6> glyph_up{};

  friend bool operator==(const FrameSet&, const FrameSet&) = default;
};

/// Side faces use +y. Up uses -z and down uses +z; these two are pinned by
/// calibration against the reference delta tables (see certify.hpp).
const FrameSet& standard_frames();

struct FaceFrame {
  Location location = Location::front;
  IntVec3 normal;
  IntVec3 glyph_up;
};

FaceFrame face_frame(Location l, const FrameSet& frames = standard_frames());

struct OrientedPose {
  IntVec3 normal;
  IntVec3 glyph_up;

  friend bool operator==(const OrientedPose&, const OrientedPose&) = default;
};

/// Pose of a glyph at `o` on face `l`. Quarters turn clockwise as seen from
/// outside the face. A non-oriented glyph is posed as 0q.
OrientedPose pose_of(Location l, Orientation o, const FrameSet& frames = standard_frames());
/// Inverse of pose_of; precondition: the pose is valid.
Orientation orientation_of(const OrientedPose& p, const FrameSet& frames = standard_frames());

OrientedPose apply(const RotMatrix& g, const OrientedPose& p);
OrientedPose apply(Rotation r, const OrientedPose& p);

struct Transition {
  Location location = Location::front;
  OrientationDelta delta = OrientationDelta::same;

  friend bool operator==(const Transition&, const Transition&) = default;
};

Transition transition(const RotMatrix& g, Location l, const FrameSet& frames = standard_frames());
Transition derive_transition(Rotation r, Location l, const FrameSet& frames = standard_frames());

/// Maps a side descriptor through g; symmetric glyphs stay non-oriented.
SideDescriptor apply(const RotMatrix& g, const SideDescriptor& side);

/// Closure of the six generators, discovered breadth first from the
/// identity with generators tried in Rotation enumerator order.
class RotationGroup {
 public:
  RotationGroup();

  const std::vector<RotMatrix>& elements() const { return elements_; }
  /// Shortest generator word per element (lexicographically first among
  /// shortest), parallel to elements().
  const std::vector<std::vector<Rotation>>& shortest_words() const { return words_; }
  int diameter() const { return diameter_; }
  std::optional<std::size_t> index_of(const RotMatrix& g) const;

 private:
  std::vector<RotMatrix> elements_;
  std::vector<std::vector<Rotation>> words_;
  int diameter_ = 0;
};

const RotationGroup& rotation_group();
std::vector<RotMatrix> enumerate_group();

/// One line per (location, rotation): `<from> <rotation> -> <to> <delta>`,
/// preceded by `#` comment lines. This is the golden CNG data file format.
std::string emit_transition_table(const FrameSet& frames = standard_frames());

}  // namespace qor::geometry
