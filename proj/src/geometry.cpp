#include "qor/geometry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qor::geometry {

IntVec3 operator-(const IntVec3& v) { return {-v.x, -v.y, -v.z}; }

int dot(const IntVec3& a, const IntVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

IntVec3 cross(const IntVec3& a, const IntVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool is_unit_axis(const IntVec3& v) {
  const int nonzero = (v.x != 0) + (v.y != 0) + (v.z != 0);
  return nonzero == 1 && dot(v, v) == 1;
}

std::string to_string(const IntVec3& v) {
  std::ostringstream os;
  os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
  return os.str();
}

RotMatrix RotMatrix::identity() {
  RotMatrix r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

RotMatrix RotMatrix::transpose() const {
  RotMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
  return t;
}

int RotMatrix::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool RotMatrix::is_signed_permutation() const {
  for (int i = 0; i < 3; ++i) {
    int row_nonzero = 0;
    int col_nonzero = 0;
    for (int j = 0; j < 3; ++j) {
      if (m[i][j] < -1 || m[i][j] > 1) return false;
      row_nonzero += m[i][j] != 0;
      col_nonzero += m[j][i] != 0;
    }
    if (row_nonzero != 1 || col_nonzero != 1) return false;
  }
  return true;
}

RotMatrix operator*(const RotMatrix& a, const RotMatrix& b) {
  RotMatrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
  return c;
}

IntVec3 operator*(const RotMatrix& a, const IntVec3& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

namespace {

// Right-handed rotation by sign*90 degrees about a coordinate axis.
RotMatrix quarter_turn(Axis a, int sign) {
  const int s = sign;
  switch (a) {
    case Axis::x_right_left: return RotMatrix{{{{1, 0, 0}, {0, 0, -s}, {0, s, 0}}}};
    case Axis::y_up_down: return RotMatrix{{{{0, 0, s}, {0, 1, 0}, {-s, 0, 0}}}};
    case Axis::z_front_back: return RotMatrix{{{{0, -s, 0}, {s, 0, 0}, {0, 0, 1}}}};
  }
  throw std::logic_error("bad axis");
}

// Quarter turn clockwise as seen from the tip of n, i.e. -90 degrees about n.
IntVec3 clockwise(const IntVec3& n, const IntVec3& v) { return cross(v, n); }

}  // namespace

RotMatrix rotation_matrix(Rotation r) {
  return quarter_turn(axis(r), direction(r) == Direction::positive_90 ? 1 : -1);
}

RotMatrix word_matrix(const std::vector<Rotation>& word) {
  RotMatrix g = RotMatrix::identity();
  for (Rotation r : word) g = rotation_matrix(r) * g;
  return g;
}

IntVec3 normal_of(Location l) {
  switch (l) {
    case Location::front: return {0, 0, 1};
    case Location::back: return {0, 0, -1};
    case Location::up: return {0, 1, 0};
    case Location::down: return {0, -1, 0};
    case Location::right: return {1, 0, 0};
    case Location::left: return {-1, 0, 0};
  }
  throw std::logic_error("bad location");
}

std::optional<Location> location_of(const IntVec3& normal) {
  for (Location l : kAllLocations) {
    if (normal_of(l) == normal) return l;
  }
  return std::nullopt;
}

const FrameSet& standard_frames() {
  static const FrameSet frames = [] {
    FrameSet f;
    f.glyph_up[index_of(Location::front)] = {0, 1, 0};
    f.glyph_up[index_of(Location::back)] = {0, 1, 0};
    f.glyph_up[index_of(Location::right)] = {0, 1, 0};
    f.glyph_up[index_of(Location::left)] = {0, 1, 0};
    f.glyph_up[index_of(Location::up)] = {0, 0, -1};
    f.glyph_up[index_of(Location::down)] = {0, 0, 1};
    return f;
  }();
  return frames;
}

FaceFrame face_frame(Location l, const FrameSet& frames) {
  return {l, normal_of(l), frames.glyph_up[index_of(l)]};
}

OrientedPose pose_of(Location l, Orientation o, const FrameSet& frames) {
  const IntVec3 n = normal_of(l);
  IntVec3 top = frames.glyph_up[index_of(l)];
  const int q = is_oriented(o) ? quarters(o) : 0;
  for (int i = 0; i < q; ++i) top = clockwise(n, top);
  return {n, top};
}

Orientation orientation_of(const OrientedPose& p, const FrameSet& frames) {
  const auto l = location_of(p.normal);
  if (!l || !is_unit_axis(p.glyph_up) || dot(p.normal, p.glyph_up) != 0) {
    throw std::invalid_argument("invalid pose " + to_string(p.normal) + " " + to_string(p.glyph_up));
  }
  IntVec3 top = frames.glyph_up[index_of(*l)];
  for (int q = 0; q < 4; ++q) {
    if (top == p.glyph_up) return orientation_from_quarters(q);
    top = clockwise(p.normal, top);
  }
  throw std::logic_error("glyph direction not reachable by quarter turns");
}

OrientedPose apply(const RotMatrix& g, const OrientedPose& p) {
  return {g * p.normal, g * p.glyph_up};
}

OrientedPose apply(Rotation r, const OrientedPose& p) { return apply(rotation_matrix(r), p); }

Transition transition(const RotMatrix& g, Location l, const FrameSet& frames) {
  const OrientedPose moved = apply(g, pose_of(l, Orientation::q0, frames));
  const Location to = *location_of(moved.normal);
  return {to, delta_from_quarters(quarters(orientation_of(moved, frames)))};
}

Transition derive_transition(Rotation r, Location l, const FrameSet& frames) {
  return transition(rotation_matrix(r), l, frames);
}

SideDescriptor apply(const RotMatrix& g, const SideDescriptor& side) {
  const OrientedPose moved = apply(g, pose_of(side.location, side.orientation));
  const Location to = *location_of(moved.normal);
  const Orientation o =
      is_oriented(side.orientation) ? orientation_of(moved) : Orientation::non_oriented;
  return SideDescriptor(side.feature, to, o);
}

RotationGroup::RotationGroup() {
  elements_.push_back(RotMatrix::identity());
  words_.push_back({});
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (Rotation r : kAllRotations) {
      const RotMatrix next = rotation_matrix(r) * elements_[i];
      if (index_of(next)) continue;
      auto word = words_[i];
      word.push_back(r);
      diameter_ = std::max(diameter_, static_cast<int>(word.size()));
      elements_.push_back(next);
      words_.push_back(std::move(word));
      frontier.push_back(elements_.size() - 1);
    }
  }
}

std::optional<std::size_t> RotationGroup::index_of(const RotMatrix& g) const {
  const auto it = std::find(elements_.begin(), elements_.end(), g);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

const RotationGroup& rotation_group() {
  static const RotationGroup group;
  return group;
}

std::vector<RotMatrix> enumerate_group() { return rotation_group().elements(); }

std::string emit_transition_table(const FrameSet& frames) {
  std::ostringstream os;
  os << "# Cube face transitions under the six quarter turns.\n"
     << "# Generated by `qor certify --write-golden`; do not edit by hand.\n"
     << "# <from> <rotation> -> <to> <orientation-delta>\n";
  for (Location l : kAllLocations) {
    for (Rotation r : kAllRotations) {
      const Transition t = derive_transition(r, l, frames);
      os << to_string(l) << ' ' << name(r) << " -> " << to_string(t.location) << ' '
         << to_string(t.delta) << '\n';
    }
  }
  return os.str();
}

}  // namespace qor::geometry
