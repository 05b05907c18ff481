#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qor/geometry.hpp"

namespace qor {

struct CertificationReport {
  int composition_cells = 0;
  int composition_cells_ok = 0;
  bool visible_rotations_ok = false;
  bool visible_deltas_ok = false;
  bool graph_edges_ok = false;
  bool golden_ok = false;
  std::size_t group_order = 0;
  int group_diameter = 0;
  bool generators_order_four = false;
  /// One human-readable line per failed check, naming the cell.
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
  /// Multi-line summary; the first line is the headline.
  std::string summary() const;
};

/// Recomputes the composition table, the visible-side rotation and delta
/// tables and the full rotation graph from integer geometry, and compares
/// them cell by cell with the transcribed reference data. When
/// `golden_text` is given, it is also compared with the derivation.
CertificationReport certify_tables(std::optional<std::string_view> golden_text = std::nullopt,
                                   const geometry::FrameSet& frames = geometry::standard_frames());

/// Which assignments of the up/down glyph frames (side faces fixed to +y)
/// reproduce the reference orientation data.
struct FrameCalibration {
  std::vector<geometry::FrameSet> visible_delta_matches;  // visible-delta table only
  std::vector<geometry::FrameSet> full_matches;           // plus every graph delta
};

FrameCalibration calibrate_vertical_frames();

}  // namespace qor
