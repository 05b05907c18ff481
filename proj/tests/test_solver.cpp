#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qor/solver.hpp"
#include "support.hpp"

using namespace qor;
using L = Location;
using R = Rotation;

namespace {

const RotationGraph& graph() { return RotationGraph::standard(); }

CubeView random_view(std::mt19937& rng, const std::vector<std::string>& pool) {
  std::vector<std::string> ids = pool;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::array<SideDescriptor, 3> sides;
  for (int i = 0; i < 3; ++i) {
    const auto sym = AlphabetSpec::latin().symmetry_of(ids[i]).value_or(Symmetry::c1_asymmetric);
    const auto o = sym == Symmetry::c4_full ? Orientation::non_oriented
                                            : orientation_from_quarters(static_cast<int>(rng() % 4));
    sides[i] = SideDescriptor({ids[i], sym}, kVisibleLocations[i], o);
  }
  return CubeView(sides);
}

bool consistent(const CubeState& replayed, const CubeView& target) {
  for (const auto& side : target.sides()) {
    const auto& got = replayed.at(side.location);
    if (!got) continue;  // brought in from a hidden face
    if (got->feature.id != side.feature.id) return false;
    if (!orientations_match(got->orientation, side.orientation, side.feature.symmetry)) return false;
  }
  for (const auto& side : replayed.known()) {
    if (is_visible(side.location) && !target.find(side.feature.id)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("count_repeated") {
  const auto p1 = test::item(test::kPair1);
  const auto p2 = test::item(test::kPair2);
  CHECK(count_repeated(p1.left, p1.right) == 2);
  CHECK(count_repeated(p2.left, p2.right) == 2);
  CHECK(count_repeated(p1.left, p1.left) == 3);
}

TEST_CASE("Fig. 1 pair 1 is different") {
  const auto item = test::item(test::kPair1);
  CHECK(brute_force_solve(item.left, item.right).verdict.answer == Answer::different);
  const auto sol = solve(item.left, item.right);
  CHECK(sol.verdict.answer == Answer::different);
  CHECK(sol.verdict.method == Method::heuristic);
  const auto& e = sol.explanation;
  CHECK(e.r_count == 2);
  CHECK_FALSE(e.witness_path);
  REQUIRE(e.contradiction);
  CHECK(e.contradiction->feature == "N");
  CHECK(e.contradiction->location == L::right);
  CHECK(e.contradiction->predicted_location == L::left);
  CHECK(e.prose.find("N") != std::string::npos);
  CHECK(e.prose.find("hidden") != std::string::npos);
  CHECK(e.prose.find("Answer: d") != std::string::npos);
}

TEST_CASE("Fig. 1 pair 2 is the same cube") {
  const auto item = test::item(test::kPair2);
  CHECK(item.left.at(L::up).orientation == Orientation::non_oriented);
  const auto brute = brute_force_solve(item.left, item.right);
  CHECK(brute.verdict.answer == Answer::same);
  CHECK(brute.witnesses.size() == 1);
  const auto sol = solve(item.left, item.right);
  CHECK(sol.verdict.answer == Answer::same);
  REQUIRE(sol.explanation.witness_path);
  CHECK(sol.explanation.witness_path->steps == std::vector{R::towards_up_left});
  CHECK(sol.explanation.prose.find("towards-up-left") != std::string::npos);
  CHECK_FALSE(sol.explanation.contradiction);
}

TEST_CASE("identical views need no rotation") {
  const auto v = test::view("front=A@1q up=B@2q right=C@3q");
  const auto brute = brute_force_solve(v, v);
  CHECK(brute.verdict.answer == Answer::same);
  CHECK(std::find(brute.witnesses.begin(), brute.witnesses.end(), geometry::RotMatrix::identity()) !=
        brute.witnesses.end());
  const auto sol = solve(v, v);
  REQUIRE(sol.explanation.witness_path);
  CHECK(sol.explanation.witness_path->empty());
  CHECK(sol.explanation.prose.find("No rotation needed; the views are identical") != std::string::npos);
}

TEST_CASE("R=0 views are always the same cube") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_view(rng, {"A", "B", "C", "N", "X"});
    const auto b = random_view(rng, {"D", "E", "F", "S", "O"});
    const auto sol = solve(a, b);
    CHECK(sol.verdict.answer == Answer::same);
    CHECK(brute_force_solve(a, b).verdict.answer == Answer::same);
    CHECK(sol.explanation.prose.find("opposite perspectives") != std::string::npos);
  }
}

TEST_CASE("heuristic agrees with brute force; witnesses replay; contradictions are concrete") {
  std::mt19937 rng(11);
  const std::vector<std::string> pool = {"A", "B", "C", "N", "X"};
  int same = 0;
  int different = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_view(rng, pool);
    const auto b = random_view(rng, pool);
    const auto sol = solve(a, b);
    const auto brute = brute_force_solve(a, b);
    REQUIRE(sol.verdict.answer == brute.verdict.answer);
    const auto& e = sol.explanation;
    CHECK(e.r_count == count_repeated(a, b));
    if (sol.verdict.answer == Answer::same) {
      ++same;
      REQUIRE(e.witness_path);
      CHECK(e.witness_path->size() <= 3u);
      CHECK(consistent(graph().replay(CubeState(a), *e.witness_path), b));
      CHECK_FALSE(e.contradiction);
    } else {
      ++different;
      REQUIRE(e.contradiction);
      CHECK(e.prose.find(e.contradiction->feature) != std::string::npos);
      CHECK(e.prose.find(std::string(to_string(e.contradiction->location))) != std::string::npos);
    }
  }
  CHECK(same > 100);
  CHECK(different > 100);
}

TEST_CASE("candidate sets intersect per shared feature") {
  const auto item = test::item(test::kPair2);
  const auto sol = solve(item.left, item.right);
  // A (c1) admits one group element, B (c1) one; they coincide.
  CHECK(sol.explanation.candidate_rotations.size() == 1);
}

TEST_CASE("inconsistent symmetry classes are rejected") {
  const CubeView a({SideDescriptor({"A"}, L::front, Orientation::q0), SideDescriptor({"B"}, L::up, Orientation::q0),
                    SideDescriptor({"C"}, L::right, Orientation::q0)});
  const CubeView b({SideDescriptor({"A", Symmetry::c2_half_turn}, L::front, Orientation::q0),
                    SideDescriptor({"D"}, L::up, Orientation::q0), SideDescriptor({"E"}, L::right, Orientation::q0)});
  CHECK_THROWS_AS(solve(a, b), std::invalid_argument);
}

TEST_CASE("explanations are deterministic") {
  const auto item = test::item(test::kPair1);
  CHECK(solve(item.left, item.right).explanation.prose == solve(item.left, item.right).explanation.prose);
  CHECK(to_char(Answer::same) == 's');
  CHECK(parse_answer("d") == Answer::different);
  CHECK_FALSE(parse_answer("x"));
}

TEST_CASE("the right-view condition follows from the other two") {
  // For any rotation: if shared features land where the right view shows them
  // and unshared left features land on hidden sides, then no right feature can
  // come from a visible left side holding something else.
  std::mt19937 rng(3);
  const std::vector<std::string> pool = {"A", "B", "C", "D", "N"};
  int premises = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_view(rng, pool);
    const auto b = random_view(rng, pool);
    for (const auto& g : geometry::rotation_group().elements()) {
      bool i_and_ii = true;
      for (const auto& side : a.sides()) {
        const auto moved = geometry::apply(g, side);
        const auto* target = b.find(side.feature.id);
        if (target ? moved.location != target->location ||
                         !orientations_match(moved.orientation, target->orientation, side.feature.symmetry)
                   : is_visible(moved.location)) {
          i_and_ii = false;
        }
      }
      if (!i_and_ii) continue;
      ++premises;
      for (const auto& side : b.sides()) {
        const auto origin = *geometry::location_of(g.transpose() * geometry::normal_of(side.location));
        if (is_visible(origin)) CHECK(a.at(origin).feature.id == side.feature.id);
      }
    }
  }
  CHECK(premises > 100);
}
