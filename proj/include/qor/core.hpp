#pragma once

// Qualitative vocabulary for describing a cube seen from the
// front-up-right perspective: side locations, glyph orientations measured
// in quarter turns, the six 90-degree rotation operators and the views
// built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qor {

enum class Location : std::uint8_t { front, back, up, down, right, left };

inline constexpr std::array<Location, 6> kAllLocations = {
    Location::front, Location::back, Location::up,
    Location::down,  Location::right, Location::left};

/// Locations shown by a front-up-right view, in canonical display order.
inline constexpr std::array<Location, 3> kVisibleLocations = {
    Location::front, Location::up, Location::right};

constexpr std::size_t index_of(Location l) { return static_cast<std::size_t>(l); }

Location opposite(Location l);
std::array<Location, 4> neighbors(Location l);
bool are_parallel(Location a, Location b);
bool is_visible(Location l);

std::string_view to_string(Location l);
std::optional<Location> parse_location(std::string_view text);

/// Glyph turn relative to the side's reference frame. q1 is a quarter
/// clockwise as seen by an observer facing that side.
enum class Orientation : std::uint8_t { q0, q1, q2, q3, non_oriented };

inline constexpr std::array<Orientation, 5> kAllOrientations = {
    Orientation::q0, Orientation::q1, Orientation::q2, Orientation::q3,
    Orientation::non_oriented};

constexpr bool is_oriented(Orientation o) { return o != Orientation::non_oriented; }

/// Quarter count 0..3; precondition: is_oriented(o).
int quarters(Orientation o);
Orientation orientation_from_quarters(int q);

std::string_view to_string(Orientation o);  // "0q" .. "3q", "nq"
std::optional<Orientation> parse_orientation(std::string_view text);

/// Relative change of orientation. Forms the cyclic group of order 4;
/// +2q and -2q coincide and are both plus_2q.
enum class OrientationDelta : std::uint8_t { same, plus_q, plus_2q, minus_q };

inline constexpr std::array<OrientationDelta, 4> kAllDeltas = {
    OrientationDelta::same, OrientationDelta::plus_q, OrientationDelta::plus_2q,
    OrientationDelta::minus_q};

int quarters(OrientationDelta d);
OrientationDelta delta_from_quarters(int q);
OrientationDelta operator+(OrientationDelta a, OrientationDelta b);
OrientationDelta operator-(OrientationDelta d);

/// Delta taking `from` to `to`; precondition: both oriented.
OrientationDelta delta_between(Orientation from, Orientation to);

std::string_view to_string(OrientationDelta d);  // "same", "+q", "+2q", "-q"
std::optional<OrientationDelta> parse_delta(std::string_view text);

Orientation add_delta(Orientation o, OrientationDelta d);

enum class Symmetry : std::uint8_t { c1_asymmetric, c2_half_turn, c4_full };

std::string_view to_string(Symmetry s);  // "c1", "c2", "c4"
std::optional<Symmetry> parse_symmetry(std::string_view text);

/// Symmetry-aware equality. non_oriented matches anything.
bool orientations_match(Orientation a, Orientation b, Symmetry sym);

enum class Axis : std::uint8_t { x_right_left, y_up_down, z_front_back };
enum class Direction : std::uint8_t { positive_90, negative_90 };

/// The six whole-cube quarter turns. Enumerator order is the tie-break
/// order used by path search: up, down, left, right, up-right, up-left.
enum class Rotation : std::uint8_t {
  towards_up,
  towards_down,
  towards_left,
  towards_right,
  towards_up_right,
  towards_up_left
};

inline constexpr std::array<Rotation, 6> kAllRotations = {
    Rotation::towards_up,    Rotation::towards_down,     Rotation::towards_left,
    Rotation::towards_right, Rotation::towards_up_right, Rotation::towards_up_left};

constexpr std::size_t index_of(Rotation r) { return static_cast<std::size_t>(r); }

Axis axis(Rotation r);
Direction direction(Rotation r);
int degrees(Rotation r);  // +90 or -90 about the axis
Rotation inverse(Rotation r);
Rotation rotation_from(Axis a, Direction d);

std::string_view name(Rotation r);  // "towards-up", ...
std::string_view icon(Rotation r);  // UTF-8 arrow glyph
std::optional<Rotation> parse_rotation(std::string_view text);  // name or icon

std::string_view to_string(Axis a);

struct Feature {
  std::string id;
  Symmetry symmetry = Symmetry::c1_asymmetric;

  Feature() = default;
  Feature(std::string id, Symmetry symmetry = Symmetry::c1_asymmetric);

  friend bool operator==(const Feature&, const Feature&) = default;
};

struct SideDescriptor {
  Feature feature;
  Location location = Location::front;
  Orientation orientation = Orientation::q0;

  SideDescriptor() = default;
  /// Throws std::invalid_argument unless orientation is non_oriented
  /// exactly when the feature is fully symmetric.
  SideDescriptor(Feature feature, Location location, Orientation orientation);

  friend bool operator==(const SideDescriptor&, const SideDescriptor&) = default;
};

/// Three sides seen from the front-up-right perspective.
class CubeView {
 public:
  /// Accepts the sides in any order; throws std::invalid_argument unless
  /// they sit exactly on front, up and right with distinct feature ids.
  explicit CubeView(std::array<SideDescriptor, 3> sides);

  /// Sides in front, up, right order.
  const std::array<SideDescriptor, 3>& sides() const { return sides_; }
  const SideDescriptor& at(Location visible) const;
  const SideDescriptor* find(std::string_view feature_id) const;

  friend bool operator==(const CubeView&, const CubeView&) = default;

 private:
  std::array<SideDescriptor, 3> sides_;
};

/// Up to six sides, one slot per location; empty slots are unknown.
class CubeState {
 public:
  CubeState() = default;
  explicit CubeState(const CubeView& view);

  /// Throws std::invalid_argument on a duplicate feature id.
  void set(const SideDescriptor& side);
  void clear(Location l) { slots_[index_of(l)].reset(); }

  const std::optional<SideDescriptor>& at(Location l) const { return slots_[index_of(l)]; }
  const SideDescriptor* find(std::string_view feature_id) const;
  std::vector<SideDescriptor> known() const;
  bool complete() const;

  /// The visible part; nullopt when some visible slot is unknown.
  std::optional<CubeView> view() const;

  friend bool operator==(const CubeState&, const CubeState&) = default;

 private:
  std::array<std::optional<SideDescriptor>, 6> slots_{};
};

}  // namespace qor
