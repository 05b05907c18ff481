#include "qor/certify.hpp"

#include <algorithm>
#include <sstream>

#include "qor/cng.hpp"
#include "qor/reference_tables.hpp"

namespace qor {

namespace {

using geometry::derive_transition;
using geometry::FrameSet;
using geometry::IntVec3;

std::string rotation_list(const std::vector<Rotation>& rs) {
  if (rs.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += name(rs[i]);
  }
  return out + "}";
}

std::vector<Rotation> derived_rotations(Location from, Location to, const FrameSet& frames) {
  std::vector<Rotation> out;
  for (Rotation r : kAllRotations) {
    if (derive_transition(r, from, frames).location == to) out.push_back(r);
  }
  return out;
}

std::string cell_name(Location from, Location to) {
  return std::string(to_string(from)) + "->" + std::string(to_string(to));
}

bool visible_deltas_match(const FrameSet& frames) {
  return std::all_of(reference::visible_table().begin(), reference::visible_table().end(),
                     [&](const reference::VisibleCell& c) {
                       const auto t = derive_transition(c.rotation, c.from, frames);
                       return t.location == c.to && t.delta == c.delta;
                     });
}

bool graph_deltas_match(const FrameSet& frames) {
  return std::all_of(reference::rotation_graph().begin(), reference::rotation_graph().end(),
                     [&](const reference::GraphEdge& e) {
                       if (e.printed_inconsistently) return true;
                       const auto t = derive_transition(e.rotation, e.from, frames);
                       return t.location == e.to && t.delta == e.delta;
                     });
}

std::vector<IntVec3> in_plane_axes(Location l) {
  std::vector<IntVec3> out;
  const IntVec3 n = geometry::normal_of(l);
  for (Location other : kAllLocations) {
    const IntVec3 v = geometry::normal_of(other);
    if (geometry::dot(v, n) == 0) out.push_back(v);
  }
  return out;
}

}  // namespace

CertificationReport certify_tables(std::optional<std::string_view> golden_text,
                                   const FrameSet& frames) {
  CertificationReport rep;

  for (const auto& cell : reference::composition_table()) {
    ++rep.composition_cells;
    auto expected = cell.rotations;
    std::sort(expected.begin(), expected.end());
    const auto got = derived_rotations(cell.from, cell.to, frames);
    if (got == expected) {
      ++rep.composition_cells_ok;
    } else {
      rep.mismatches.push_back("composition cell " + cell_name(cell.from, cell.to) + ": derived " +
                               rotation_list(got) + ", table " + rotation_list(expected));
    }
  }

  rep.visible_rotations_ok = true;
  rep.visible_deltas_ok = true;
  for (const auto& cell : reference::visible_table()) {
    const auto got = derived_rotations(cell.from, cell.to, frames);
    if (got != std::vector<Rotation>{cell.rotation}) {
      rep.visible_rotations_ok = false;
      rep.mismatches.push_back("visible rotation " + cell_name(cell.from, cell.to) + ": derived " +
                               rotation_list(got) + ", table " + std::string(name(cell.rotation)));
      continue;
    }
    const auto t = derive_transition(cell.rotation, cell.from, frames);
    if (t.delta != cell.delta) {
      rep.visible_deltas_ok = false;
      rep.mismatches.push_back("visible delta " + cell_name(cell.from, cell.to) + ": derived " +
                               std::string(to_string(t.delta)) + ", table " +
                               std::string(to_string(cell.delta)));
    }
  }

  rep.graph_edges_ok = true;
  if (reference::rotation_graph().size() != 36) {
    rep.graph_edges_ok = false;
    rep.mismatches.push_back("reference graph does not list 36 edges");
  }
  for (const auto& e : reference::rotation_graph()) {
    const auto t = derive_transition(e.rotation, e.from, frames);
    const std::string where =
        "graph edge " + std::string(to_string(e.from)) + " " + std::string(name(e.rotation));
    if (t.location != e.to) {
      rep.graph_edges_ok = false;
      rep.mismatches.push_back(where + ": derived target " + std::string(to_string(t.location)) +
                               ", graph " + std::string(to_string(e.to)));
    } else if (!e.printed_inconsistently && t.delta != e.delta) {
      rep.graph_edges_ok = false;
      rep.mismatches.push_back(where + ": derived delta " + std::string(to_string(t.delta)) +
                               ", graph " + std::string(to_string(e.delta)));
    }
  }

  if (golden_text) {
    rep.golden_ok = true;
    try {
      for (const CngEdge& e : parse_cng_edges(*golden_text)) {
        const auto t = derive_transition(e.rotation, e.from, frames);
        if (t.location != e.to || t.delta != e.delta) {
          rep.golden_ok = false;
          rep.mismatches.push_back("golden edge " + std::string(to_string(e.from)) + " " +
                                   std::string(name(e.rotation)) + ": file says " +
                                   std::string(to_string(e.to)) + " " +
                                   std::string(to_string(e.delta)) + ", derived " +
                                   std::string(to_string(t.location)) + " " +
                                   std::string(to_string(t.delta)));
        }
      }
    } catch (const GoldenFormatError& err) {
      rep.golden_ok = false;
      rep.mismatches.push_back(std::string("golden file: ") + err.what());
    }
  }

  const auto& group = geometry::rotation_group();
  rep.group_order = group.elements().size();
  rep.group_diameter = group.diameter();
  if (rep.group_order != 24) {
    rep.mismatches.push_back("rotation group has " + std::to_string(rep.group_order) +
                             " elements, expected 24");
  }
  rep.generators_order_four = true;
  for (Rotation r : kAllRotations) {
    const auto g = geometry::rotation_matrix(r);
    const bool order_four = g != geometry::RotMatrix::identity() && g * g * g * g ==
                                                                        geometry::RotMatrix::identity();
    if (!order_four || !g.is_rotation()) {
      rep.generators_order_four = false;
      rep.mismatches.push_back("generator " + std::string(name(r)) + " is not a quarter turn");
    }
  }
  return rep;
}

std::string CertificationReport::summary() const {
  std::ostringstream os;
  os << composition_cells_ok << '/' << composition_cells << " Table-2 cells "
     << (composition_cells_ok == composition_cells ? "OK" : "FAILED") << ", Table 3 "
     << (visible_rotations_ok ? "OK" : "FAILED") << ", Table 4 "
     << (visible_deltas_ok ? "OK" : "FAILED") << ", |G|=" << group_order << '\n';
  os << "rotation graph edges " << (graph_edges_ok ? "OK" : "FAILED") << '\n';
  os << "golden transition file " << (golden_ok ? "OK" : "FAILED or not checked") << '\n';
  os << "generators of order 4 " << (generators_order_four ? "OK" : "FAILED")
     << ", group diameter D=" << group_diameter << '\n';
  for (const auto& m : mismatches) os << "MISMATCH " << m << '\n';
  return os.str();
}

FrameCalibration calibrate_vertical_frames() {
  FrameCalibration cal;
  FrameSet frames = geometry::standard_frames();
  for (const IntVec3& up : in_plane_axes(Location::up)) {
    for (const IntVec3& down : in_plane_axes(Location::down)) {
      frames.glyph_up[index_of(Location::up)] = up;
      frames.glyph_up[index_of(Location::down)] = down;
      if (!visible_deltas_match(frames)) continue;
      cal.visible_delta_matches.push_back(frames);
      if (graph_deltas_match(frames)) cal.full_matches.push_back(frames);
    }
  }
  return cal;
}

}  // namespace qor
