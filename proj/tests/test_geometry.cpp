#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qor/certify.hpp"
#include "qor/geometry.hpp"
#include "qor/reference_tables.hpp"

using namespace qor;
using namespace qor::geometry;
using L = Location;
using R = Rotation;
using D = OrientationDelta;

namespace {

// Independent check of a face transition: track where the tip of a 0q glyph
// (a point on the face, offset towards glyph_up) goes, using plain 3-vectors.
Transition track_glyph_tip(Rotation r, Location l) {
  const auto frame = face_frame(l);
  const RotMatrix g = rotation_matrix(r);
  const IntVec3 n2 = g * frame.normal;
  const IntVec3 tip = g * frame.glyph_up;
  const Location to = *location_of(n2);
  const IntVec3 ref = face_frame(to).glyph_up;
  // Count clockwise quarter steps (seen from outside) from ref to tip.
  IntVec3 v = ref;
  for (int q = 0; q < 4; ++q) {
    if (v == tip) return {to, delta_from_quarters(q)};
    v = cross(v, n2);
  }
  FAIL("glyph tip left the face plane");
  return {};
}

}  // namespace

TEST_CASE("generators are quarter turns with the reference-system axes") {
  for (Rotation r : kAllRotations) {
    const RotMatrix m = rotation_matrix(r);
    CHECK(m.is_rotation());
    CHECK(m != RotMatrix::identity());
    CHECK(m * m != RotMatrix::identity());
    CHECK(m * m * m * m == RotMatrix::identity());
    CHECK(m * rotation_matrix(inverse(r)) == RotMatrix::identity());
  }
  CHECK(rotation_matrix(R::towards_up_right) * normal_of(L::up) == normal_of(L::right));
  CHECK(rotation_matrix(R::towards_up) * normal_of(L::front) == normal_of(L::up));
  CHECK(rotation_matrix(R::towards_right) * normal_of(L::front) == normal_of(L::right));
}

TEST_CASE("frames") {
  for (Location l : kAllLocations) {
    const auto f = face_frame(l);
    CHECK(is_unit_axis(f.normal));
    CHECK(is_unit_axis(f.glyph_up));
    CHECK(dot(f.normal, f.glyph_up) == 0);
    CHECK(location_of(f.normal) == l);
  }
  CHECK(normal_of(L::front) == IntVec3{0, 0, 1});
  CHECK(normal_of(L::up) == IntVec3{0, 1, 0});
  CHECK(normal_of(L::right) == IntVec3{1, 0, 0});
}

TEST_CASE("apply on poses") {
  SUBCASE("front 0q goes up unchanged") {
    const auto p = apply(R::towards_up, pose_of(L::front, Orientation::q0));
    CHECK(p == pose_of(L::up, Orientation::q0));
  }
  SUBCASE("right 0q goes up losing a quarter") {
    const auto p = apply(R::towards_up_left, pose_of(L::right, Orientation::q0));
    CHECK(p == pose_of(L::up, Orientation::q3));
  }
  SUBCASE("inverse undoes every pose") {
    for (Location l : kAllLocations) {
      for (int q = 0; q < 4; ++q) {
        const auto p = pose_of(l, orientation_from_quarters(q));
        for (Rotation r : kAllRotations) {
          const auto moved = apply(r, apply(inverse(r), p));
          CHECK(moved == p);
          const auto once = apply(r, p);
          CHECK(dot(once.normal, once.glyph_up) == 0);
        }
      }
    }
  }
}

TEST_CASE("derive_transition examples") {
  CHECK(derive_transition(R::towards_up_right, L::up) == Transition{L::right, D::plus_q});
  CHECK(derive_transition(R::towards_up_left, L::right) == Transition{L::up, D::minus_q});
  CHECK(derive_transition(R::towards_right, L::front) == Transition{L::right, D::same});
  // Fig. 4: B on the right turns +q under towards-up.
  CHECK(derive_transition(R::towards_up, L::right) == Transition{L::right, D::plus_q});
}

TEST_CASE("derive_transition agrees with glyph-tip tracking") {
  for (Location l : kAllLocations) {
    for (Rotation r : kAllRotations) {
      CAPTURE(to_string(l));
      CAPTURE(name(r));
      CHECK(derive_transition(r, l) == track_glyph_tip(r, l));
    }
  }
}

TEST_CASE("transition structure") {
  for (Rotation r : kAllRotations) {
    int fixed = 0;
    for (Location l : kAllLocations) {
      const auto t = derive_transition(r, l);
      CHECK(derive_transition(r, opposite(l)).location == opposite(t.location));
      if (t.location == l) {
        ++fixed;
        CHECK((t.delta == D::plus_q || t.delta == D::minus_q));
      } else {
        // A 4-cycle: four steps return, never sooner than four.
        Location x = l;
        int steps = 0;
        do {
          x = derive_transition(r, x).location;
          ++steps;
        } while (x != l);
        CHECK(steps == 4);
      }
    }
    CHECK(fixed == 2);
  }
}

TEST_CASE("adjacent moves are inverse pairs") {
  for (Location a : kAllLocations) {
    for (Location b : neighbors(a)) {
      for (Rotation r : kAllRotations) {
        if (derive_transition(r, a).location != b) continue;
        const auto back = derive_transition(inverse(r), b);
        CHECK(back.location == a);
        CHECK(back.delta == -derive_transition(r, a).delta);
      }
    }
  }
}

TEST_CASE("functoriality over words of length <= 3") {
  std::vector<std::vector<Rotation>> words = {{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<Rotation>> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (Rotation r : kAllRotations) {
        auto v = w;
        v.push_back(r);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  CHECK(words.size() == 1 + 6 + 36 + 216);
  for (const auto& w : words) {
    const RotMatrix g = word_matrix(w);
    for (Location l : kAllLocations) {
      Transition step_by_step{l, D::same};
      for (Rotation r : w) {
        const auto t = derive_transition(r, step_by_step.location);
        step_by_step = {t.location, step_by_step.delta + t.delta};
      }
      CHECK(transition(g, l) == step_by_step);
    }
  }
}

TEST_CASE("rotation group") {
  const auto& group = rotation_group();
  CHECK(group.elements().size() == 24);
  CHECK(enumerate_group().size() == 24);
  CHECK(group.index_of(RotMatrix::identity()) == 0u);
  CHECK(group.shortest_words()[0].empty());

  std::set<RotMatrix> distinct(group.elements().begin(), group.elements().end());
  CHECK(distinct.size() == 24);
  for (const auto& a : group.elements()) {
    CHECK(a.is_rotation());
    for (const auto& b : group.elements()) CHECK(distinct.count(a * b) == 1);
  }
  for (std::size_t i = 0; i < group.elements().size(); ++i) {
    CHECK(word_matrix(group.shortest_words()[i]) == group.elements()[i]);
  }
  // Measured, then pinned: every cube orientation is at most three quarter turns away.
  CHECK(group.diameter() == 3);
}

TEST_CASE("certify against the printed tables") {
  const auto report = certify_tables(geometry::emit_transition_table());
  for (const auto& m : report.mismatches) CAPTURE(m);
  CHECK(report.ok());
  CHECK(report.composition_cells == 36);
  CHECK(report.composition_cells_ok == 36);
  CHECK(report.visible_rotations_ok);
  CHECK(report.visible_deltas_ok);
  CHECK(report.graph_edges_ok);
  CHECK(report.golden_ok);
  CHECK(report.group_order == 24);
  CHECK(report.generators_order_four);
  CHECK(report.summary().rfind("36/36 Table-2 cells OK, Table 3 OK, Table 4 OK, |G|=24\n", 0) == 0);
}

TEST_CASE("composition cells") {
  auto cell = [](L from, L to) {
    for (const auto& c : reference::composition_table()) {
      if (c.from == from && c.to == to) return c.rotations;
    }
    return std::vector<Rotation>{R::towards_up};
  };
  CHECK(cell(L::front, L::up) == std::vector{R::towards_up});
  CHECK(cell(L::front, L::back).empty());
  CHECK(cell(L::up, L::up) == std::vector{R::towards_right, R::towards_left});
}

TEST_CASE("frame calibration") {
  const auto cal = calibrate_vertical_frames();
  // Table 4 alone fixes the up frame but leaves the down frame open.
  CHECK(cal.visible_delta_matches.size() == 4);
  for (const auto& f : cal.visible_delta_matches) {
    CHECK(f.glyph_up[index_of(L::up)] == standard_frames().glyph_up[index_of(L::up)]);
  }
  // The full graph labels pin both.
  REQUIRE(cal.full_matches.size() == 1);
  CHECK(cal.full_matches.front() == standard_frames());
  CHECK(face_frame(L::up).glyph_up == IntVec3{0, 0, -1});
  CHECK(face_frame(L::down).glyph_up == IntVec3{0, 0, 1});
}

TEST_CASE("printed graph labels") {
  int flagged = 0;
  for (const auto& e : reference::rotation_graph()) {
    const auto t = derive_transition(e.rotation, e.from);
    CHECK(t.location == e.to);
    if (e.printed_inconsistently) {
      ++flagged;
      CHECK(t.delta == -e.delta);
    } else {
      CHECK(t.delta == e.delta);
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("golden text is stable") {
  CHECK(emit_transition_table() == emit_transition_table());
}
