#pragma once

// Published qualitative tables, transcribed cell by cell. They are never
// used for reasoning; certification compares them with what the integer
// geometry derives.

#include <array>
#include <vector>

#include "qor/core.hpp"

namespace qor::reference {

using L = Location;
using R = Rotation;
using D = OrientationDelta;

/// Which rotations move a feature from one side to another. Diagonal cells
/// list the two rotations about that side's axis; opposite pairs are blank.
struct CompositionCell {
  Location from;
  Location to;
  std::vector<Rotation> rotations;
};

inline const std::vector<CompositionCell>& composition_table() {
  static const std::vector<CompositionCell> cells = {
      {L::front, L::front, {R::towards_up_left, R::towards_up_right}},
      {L::front, L::back, {}},
      {L::front, L::up, {R::towards_up}},
      {L::front, L::down, {R::towards_down}},
      {L::front, L::right, {R::towards_right}},
      {L::front, L::left, {R::towards_left}},

      {L::back, L::front, {}},
      {L::back, L::back, {R::towards_up_left, R::towards_up_right}},
      {L::back, L::up, {R::towards_down}},
      {L::back, L::down, {R::towards_up}},
      {L::back, L::right, {R::towards_left}},
      {L::back, L::left, {R::towards_right}},

      {L::up, L::front, {R::towards_down}},
      {L::up, L::back, {R::towards_up}},
      {L::up, L::up, {R::towards_right, R::towards_left}},
      {L::up, L::down, {}},
      {L::up, L::right, {R::towards_up_right}},
      {L::up, L::left, {R::towards_up_left}},

      {L::down, L::front, {R::towards_up}},
      {L::down, L::back, {R::towards_down}},
      {L::down, L::up, {}},
      {L::down, L::down, {R::towards_right, R::towards_left}},
      {L::down, L::right, {R::towards_up_left}},
      {L::down, L::left, {R::towards_up_right}},

      {L::right, L::front, {R::towards_left}},
      {L::right, L::back, {R::towards_right}},
      {L::right, L::up, {R::towards_up_left}},
      {L::right, L::down, {R::towards_up_right}},
      {L::right, L::right, {R::towards_down, R::towards_up}},
      {L::right, L::left, {}},

      {L::left, L::front, {R::towards_right}},
      {L::left, L::back, {R::towards_left}},
      {L::left, L::up, {R::towards_up_right}},
      {L::left, L::down, {R::towards_up_left}},
      {L::left, L::right, {}},
      {L::left, L::left, {R::towards_down, R::towards_up}},
  };
  return cells;
}

/// Shortest moves between the visible sides, with the glyph turn each one
/// applies.
struct VisibleCell {
  Location from;
  Location to;
  Rotation rotation;
  OrientationDelta delta;
};

inline const std::array<VisibleCell, 6>& visible_table() {
  static const std::array<VisibleCell, 6> cells = {{
      {L::front, L::up, R::towards_up, D::same},
      {L::front, L::right, R::towards_right, D::same},
      {L::up, L::front, R::towards_down, D::same},
      {L::up, L::right, R::towards_up_right, D::plus_q},
      {L::right, L::front, R::towards_left, D::same},
      {L::right, L::up, R::towards_up_left, D::minus_q},
  }};
  return cells;
}

/// Directed rotation/location/orientation graph, one edge per
/// (side, rotation). `printed_inconsistently` marks the one label whose
/// printed value contradicts the inverse edge (left->down and down->left
/// are both printed +q; inverse moves must have opposite turns).
struct GraphEdge {
  Location from;
  Rotation rotation;
  Location to;
  OrientationDelta delta;
  bool printed_inconsistently = false;
};

inline const std::vector<GraphEdge>& rotation_graph() {
  static const std::vector<GraphEdge> edges = {
      {L::front, R::towards_right, L::right, D::same},
      {L::front, R::towards_up, L::up, D::same},
      {L::front, R::towards_left, L::left, D::same},
      {L::front, R::towards_down, L::down, D::same},
      {L::front, R::towards_up_left, L::front, D::minus_q},
      {L::front, R::towards_up_right, L::front, D::plus_q},

      {L::up, R::towards_up_right, L::right, D::plus_q},
      {L::up, R::towards_down, L::front, D::same},
      {L::up, R::towards_up, L::back, D::plus_2q},
      {L::up, R::towards_up_left, L::left, D::minus_q},
      {L::up, R::towards_left, L::up, D::plus_q},
      {L::up, R::towards_right, L::up, D::minus_q},

      {L::left, R::towards_left, L::back, D::same},
      {L::left, R::towards_right, L::front, D::same},
      {L::left, R::towards_up_left, L::down, D::plus_q, true},
      {L::left, R::towards_up_right, L::up, D::plus_q},
      {L::left, R::towards_up, L::left, D::minus_q},
      {L::left, R::towards_down, L::left, D::plus_q},

      {L::back, R::towards_right, L::left, D::same},
      {L::back, R::towards_down, L::up, D::plus_2q},
      {L::back, R::towards_left, L::right, D::same},
      {L::back, R::towards_up, L::down, D::plus_2q},
      {L::back, R::towards_up_left, L::back, D::plus_q},
      {L::back, R::towards_up_right, L::back, D::minus_q},

      {L::down, R::towards_down, L::back, D::plus_2q},
      {L::down, R::towards_up_left, L::right, D::minus_q},
      {L::down, R::towards_up_right, L::left, D::plus_q},
      {L::down, R::towards_up, L::front, D::same},
      {L::down, R::towards_left, L::down, D::minus_q},
      {L::down, R::towards_right, L::down, D::plus_q},

      {L::right, R::towards_left, L::front, D::same},
      {L::right, R::towards_right, L::back, D::same},
      {L::right, R::towards_up_left, L::up, D::minus_q},
      {L::right, R::towards_up_right, L::down, D::plus_q},
      {L::right, R::towards_up, L::right, D::plus_q},
      {L::right, R::towards_down, L::right, D::minus_q},
  };
  return edges;
}

}  // namespace qor::reference
