#include "qor/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace qor {

Location opposite(Location l) {
  switch (l) {
    case Location::front: return Location::back;
    case Location::back: return Location::front;
    case Location::up: return Location::down;
    case Location::down: return Location::up;
    case Location::right: return Location::left;
    case Location::left: return Location::right;
  }
  throw std::logic_error("bad location");
}

std::array<Location, 4> neighbors(Location l) {
  std::array<Location, 4> out{};
  std::size_t n = 0;
  for (Location other : kAllLocations) {
    if (other != l && other != opposite(l)) out[n++] = other;
  }
  return out;
}

bool are_parallel(Location a, Location b) { return a == b || a == opposite(b); }

bool is_visible(Location l) {
  return l == Location::front || l == Location::up || l == Location::right;
}

std::string_view to_string(Location l) {
  switch (l) {
    case Location::front: return "front";
    case Location::back: return "back";
    case Location::up: return "up";
    case Location::down: return "down";
    case Location::right: return "right";
    case Location::left: return "left";
  }
  return "?";
}

std::optional<Location> parse_location(std::string_view text) {
  for (Location l : kAllLocations) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

int quarters(Orientation o) {
  if (!is_oriented(o)) throw std::invalid_argument("non-oriented glyph has no quarter count");
  return static_cast<int>(o);
}

Orientation orientation_from_quarters(int q) {
  return static_cast<Orientation>(((q % 4) + 4) % 4);
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::q0: return "0q";
    case Orientation::q1: return "1q";
    case Orientation::q2: return "2q";
    case Orientation::q3: return "3q";
    case Orientation::non_oriented: return "nq";
  }
  return "?";
}

std::optional<Orientation> parse_orientation(std::string_view text) {
  for (Orientation o : kAllOrientations) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

int quarters(OrientationDelta d) {
  switch (d) {
    case OrientationDelta::same: return 0;
    case OrientationDelta::plus_q: return 1;
    case OrientationDelta::plus_2q: return 2;
    case OrientationDelta::minus_q: return 3;
  }
  return 0;
}

OrientationDelta delta_from_quarters(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return OrientationDelta::same;
    case 1: return OrientationDelta::plus_q;
    case 2: return OrientationDelta::plus_2q;
    default: return OrientationDelta::minus_q;
  }
}

OrientationDelta operator+(OrientationDelta a, OrientationDelta b) {
  return delta_from_quarters(quarters(a) + quarters(b));
}

OrientationDelta operator-(OrientationDelta d) { return delta_from_quarters(-quarters(d)); }

OrientationDelta delta_between(Orientation from, Orientation to) {
  return delta_from_quarters(quarters(to) - quarters(from));
}

std::string_view to_string(OrientationDelta d) {
  switch (d) {
    case OrientationDelta::same: return "same";
    case OrientationDelta::plus_q: return "+q";
    case OrientationDelta::plus_2q: return "+2q";
    case OrientationDelta::minus_q: return "-q";
  }
  return "?";
}

std::optional<OrientationDelta> parse_delta(std::string_view text) {
  for (OrientationDelta d : kAllDeltas) {
    if (to_string(d) == text) return d;
  }
  // Accepted spellings that canonicalize onto the four values.
  if (text == "0") return OrientationDelta::same;
  if (text == "+1q") return OrientationDelta::plus_q;
  if (text == "-1q") return OrientationDelta::minus_q;
  if (text == "-2q") return OrientationDelta::plus_2q;
  return std::nullopt;
}

Orientation add_delta(Orientation o, OrientationDelta d) {
  if (!is_oriented(o)) return o;
  return orientation_from_quarters(quarters(o) + quarters(d));
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::c1_asymmetric: return "c1";
    case Symmetry::c2_half_turn: return "c2";
    case Symmetry::c4_full: return "c4";
  }
  return "?";
}

std::optional<Symmetry> parse_symmetry(std::string_view text) {
  if (text == "c1") return Symmetry::c1_asymmetric;
  if (text == "c2") return Symmetry::c2_half_turn;
  if (text == "c4") return Symmetry::c4_full;
  return std::nullopt;
}

bool orientations_match(Orientation a, Orientation b, Symmetry sym) {
  if (sym == Symmetry::c4_full || !is_oriented(a) || !is_oriented(b)) return true;
  const int diff = quarters(a) - quarters(b);
  if (sym == Symmetry::c2_half_turn) return diff % 2 == 0;
  return diff == 0;
}

Axis axis(Rotation r) {
  switch (r) {
    case Rotation::towards_up:
    case Rotation::towards_down: return Axis::x_right_left;
    case Rotation::towards_left:
    case Rotation::towards_right: return Axis::y_up_down;
    case Rotation::towards_up_right:
    case Rotation::towards_up_left: return Axis::z_front_back;
  }
  throw std::logic_error("bad rotation");
}

Direction direction(Rotation r) {
  switch (r) {
    case Rotation::towards_down:
    case Rotation::towards_right:
    case Rotation::towards_up_left: return Direction::positive_90;
    default: return Direction::negative_90;
  }
}

int degrees(Rotation r) { return direction(r) == Direction::positive_90 ? 90 : -90; }

Rotation rotation_from(Axis a, Direction d) {
  for (Rotation r : kAllRotations) {
    if (axis(r) == a && direction(r) == d) return r;
  }
  throw std::logic_error("bad axis/direction");
}

Rotation inverse(Rotation r) {
  return rotation_from(axis(r), direction(r) == Direction::positive_90 ? Direction::negative_90
                                                                       : Direction::positive_90);
}

std::string_view name(Rotation r) {
  switch (r) {
    case Rotation::towards_up: return "towards-up";
    case Rotation::towards_down: return "towards-down";
    case Rotation::towards_left: return "towards-left";
    case Rotation::towards_right: return "towards-right";
    case Rotation::towards_up_right: return "towards-up-right";
    case Rotation::towards_up_left: return "towards-up-left";
  }
  return "?";
}

std::string_view icon(Rotation r) {
  switch (r) {
    case Rotation::towards_up: return "↑";
    case Rotation::towards_down: return "↓";
    case Rotation::towards_left: return "←";
    case Rotation::towards_right: return "→";
    case Rotation::towards_up_right: return "↷";
    case Rotation::towards_up_left: return "↶";
  }
  return "?";
}

std::optional<Rotation> parse_rotation(std::string_view text) {
  for (Rotation r : kAllRotations) {
    if (name(r) == text || icon(r) == text) return r;
  }
  return std::nullopt;
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::x_right_left: return "x";
    case Axis::y_up_down: return "y";
    case Axis::z_front_back: return "z";
  }
  return "?";
}

Feature::Feature(std::string feature_id, Symmetry sym) : id(std::move(feature_id)), symmetry(sym) {
  if (id.empty()) throw std::invalid_argument("feature id must not be empty");
}

SideDescriptor::SideDescriptor(Feature f, Location l, Orientation o)
    : feature(std::move(f)), location(l), orientation(o) {
  const bool symmetric = feature.symmetry == Symmetry::c4_full;
  if (symmetric != !is_oriented(orientation)) {
    throw std::invalid_argument("feature '" + feature.id +
                                "': orientation must be non-oriented exactly for c4 features");
  }
}

CubeView::CubeView(std::array<SideDescriptor, 3> sides) {
  std::array<bool, 3> seen{};
  for (auto& side : sides) {
    const auto slot = std::find(kVisibleLocations.begin(), kVisibleLocations.end(), side.location);
    if (slot == kVisibleLocations.end()) {
      throw std::invalid_argument("view side on hidden location " +
                                  std::string(to_string(side.location)));
    }
    const auto i = static_cast<std::size_t>(slot - kVisibleLocations.begin());
    if (seen[i]) {
      throw std::invalid_argument("duplicate location " + std::string(to_string(side.location)));
    }
    seen[i] = true;
    sides_[i] = std::move(side);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (sides_[i].feature.id == sides_[j].feature.id) {
        throw std::invalid_argument("duplicate feature " + sides_[i].feature.id);
      }
    }
  }
}

const SideDescriptor& CubeView::at(Location visible) const {
  for (const auto& side : sides_) {
    if (side.location == visible) return side;
  }
  throw std::invalid_argument("location not visible: " + std::string(to_string(visible)));
}

const SideDescriptor* CubeView::find(std::string_view feature_id) const {
  for (const auto& side : sides_) {
    if (side.feature.id == feature_id) return &side;
  }
  return nullptr;
}

CubeState::CubeState(const CubeView& view) {
  for (const auto& side : view.sides()) slots_[index_of(side.location)] = side;
}

void CubeState::set(const SideDescriptor& side) {
  for (const auto& slot : slots_) {
    if (slot && slot->location != side.location && slot->feature.id == side.feature.id) {
      throw std::invalid_argument("duplicate feature " + side.feature.id);
    }
  }
  slots_[index_of(side.location)] = side;
}

const SideDescriptor* CubeState::find(std::string_view feature_id) const {
  for (const auto& slot : slots_) {
    if (slot && slot->feature.id == feature_id) return &*slot;
  }
  return nullptr;
}

std::vector<SideDescriptor> CubeState::known() const {
  std::vector<SideDescriptor> out;
  for (const auto& slot : slots_) {
    if (slot) out.push_back(*slot);
  }
  return out;
}

bool CubeState::complete() const {
  return std::all_of(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); });
}

std::optional<CubeView> CubeState::view() const {
  const auto& f = at(Location::front);
  const auto& u = at(Location::up);
  const auto& r = at(Location::right);
  if (!f || !u || !r) return std::nullopt;
  return CubeView({*f, *u, *r});
}

}  // namespace qor
