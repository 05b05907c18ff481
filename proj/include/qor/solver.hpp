#pragma once

// Same/different decisions for pairs of cube views. `solve` reasons over
// the rotation graph by the number of shared features and explains itself;
// `brute_force_solve` tries all 24 rotations geometrically and serves as
// the oracle the heuristic is checked against.

#include <optional>
#include <string>
#include <vector>

#include "qor/cng.hpp"
#include "qor/core.hpp"
#include "qor/geometry.hpp"

namespace qor {

enum class Answer { same, different };

char to_char(Answer a);  // 's' / 'd'
std::optional<Answer> parse_answer(std::string_view text);

enum class Method { heuristic, brute_force };

struct Verdict {
  Answer answer = Answer::same;
  Method method = Method::heuristic;
};

/// Number of feature ids visible in both views.
int count_repeated(const CubeView& a, const CubeView& b);

struct BruteForceResult {
  Verdict verdict;
  /// Every rotation consistent with both views, in group order.
  std::vector<geometry::RotMatrix> witnesses;
};

BruteForceResult brute_force_solve(const CubeView& a, const CubeView& b);

/// Why a candidate rotation fails.
enum class ContradictionKind {
  misplaced,     // a shared feature would land somewhere else
  misoriented,   // a shared feature lands right but turned wrong
  occupied,      // an unshared left feature would show where the right view shows another
  uncovered,     // an unshared right feature would come from a visible left side
};

std::string_view to_string(ContradictionKind k);

struct Contradiction {
  ContradictionKind kind = ContradictionKind::misplaced;
  std::string feature;
  /// Visible location in the right view where the prediction fails.
  Location location = Location::front;
  /// Where the rotation would put the feature, and how turned.
  Location predicted_location = Location::front;
  Orientation predicted_orientation = Orientation::q0;
  Orientation observed_orientation = Orientation::q0;
  std::string other_feature;  // occupied / uncovered: the feature actually shown
  RotationPath candidate;     // the rotation the trace is based on
  std::vector<std::string> matched;  // shared features the candidate does match
};

/// What happens to one left-view feature under the witness rotation.
struct FeatureOutcome {
  std::string feature;
  Location from = Location::front;
  Location to = Location::front;
  Orientation orientation = Orientation::q0;
};

/// A feature that appears in the right view from a side hidden on the left.
struct RevealedFeature {
  std::string feature;
  Location hidden_origin = Location::back;
  Location shown_at = Location::front;
};

struct Explanation {
  int r_count = 0;
  std::vector<std::string> shared;  // shared feature ids, left-view order
  std::vector<RotationPath> candidate_rotations;
  std::optional<RotationPath> witness_path;
  std::vector<FeatureOutcome> outcomes;  // present iff same
  std::vector<RevealedFeature> revealed;
  std::optional<Contradiction> contradiction;  // present iff different
  std::string prose;
};

struct Solution {
  Verdict verdict;
  Explanation explanation;
};

/// Heuristic solver; throws std::invalid_argument if a shared feature is
/// declared with different symmetry classes in the two views.
Solution solve(const CubeView& a, const CubeView& b,
               const RotationGraph& graph = RotationGraph::standard());

std::string render_explanation(const Explanation& e);

}  // namespace qor
