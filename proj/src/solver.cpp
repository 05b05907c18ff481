#include "qor/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qor {

char to_char(Answer a) { return a == Answer::same ? 's' : 'd'; }

std::optional<Answer> parse_answer(std::string_view text) {
  if (text == "s" || text == "same") return Answer::same;
  if (text == "d" || text == "different") return Answer::different;
  return std::nullopt;
}

std::string_view to_string(ContradictionKind k) {
  switch (k) {
    case ContradictionKind::misplaced: return "misplaced";
    case ContradictionKind::misoriented: return "misoriented";
    case ContradictionKind::occupied: return "occupied";
    case ContradictionKind::uncovered: return "uncovered";
  }
  return "?";
}

int count_repeated(const CubeView& a, const CubeView& b) {
  int n = 0;
  for (const auto& side : a.sides()) n += b.find(side.feature.id) != nullptr;
  return n;
}

BruteForceResult brute_force_solve(const CubeView& a, const CubeView& b) {
  BruteForceResult result;
  result.verdict.method = Method::brute_force;
  for (const auto& g : geometry::rotation_group().elements()) {
    bool consistent = true;
    for (const auto& side : a.sides()) {
      const SideDescriptor moved = geometry::apply(g, side);
      // (i) a feature shown in both views lands exactly where B shows it.
      if (const auto* target = b.find(side.feature.id)) {
        if (moved.location != target->location ||
            !orientations_match(moved.orientation, target->orientation, side.feature.symmetry)) {
          consistent = false;
          break;
        }
        continue;
      }
      // (ii) a feature only A shows must not land on a visible B side.
      if (is_visible(moved.location)) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      // (iii) nothing shown on the right comes from a visible left side
      // holding a different feature.
      const auto back = g.transpose();
      for (const auto& side : b.sides()) {
        const Location origin = *geometry::location_of(back * geometry::normal_of(side.location));
        if (is_visible(origin) && a.at(origin).feature.id != side.feature.id) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) result.witnesses.push_back(g);
  }
  result.verdict.answer = result.witnesses.empty() ? Answer::different : Answer::same;
  return result;
}

namespace {

struct SharedPair {
  const SideDescriptor* left;
  const SideDescriptor* right;
};

std::vector<SharedPair> shared_pairs(const CubeView& a, const CubeView& b) {
  std::vector<SharedPair> out;
  for (const auto& side : a.sides()) {
    if (const auto* other = b.find(side.feature.id)) {
      if (other->feature.symmetry != side.feature.symmetry) {
        throw std::invalid_argument("feature '" + side.feature.id +
                                    "' has different symmetry classes in the two views");
      }
      out.push_back({&side, other});
    }
  }
  return out;
}

bool contains(const std::vector<Candidate>& set, const FaceMap& m) {
  return std::any_of(set.begin(), set.end(), [&](const Candidate& c) { return c.map == m; });
}

// First violation of the hidden-side conditions for an otherwise matching
// candidate, if any.
std::optional<Contradiction> hidden_side_violation(const Candidate& c, const CubeView& a,
                                                   const CubeView& b) {
  for (const auto& side : a.sides()) {
    if (b.find(side.feature.id)) continue;
    const SideDescriptor moved = c.map.apply(side);
    if (is_visible(moved.location)) {
      Contradiction k;
      k.kind = ContradictionKind::occupied;
      k.feature = side.feature.id;
      k.location = moved.location;
      k.predicted_location = moved.location;
      k.predicted_orientation = moved.orientation;
      k.other_feature = b.at(moved.location).feature.id;
      k.candidate = c.path;
      return k;
    }
  }
  for (const auto& side : b.sides()) {
    if (a.find(side.feature.id)) continue;
    const Location origin = c.map.preimage(side.location);
    if (is_visible(origin)) {
      Contradiction k;
      k.kind = ContradictionKind::uncovered;
      k.feature = side.feature.id;
      k.location = side.location;
      k.predicted_location = origin;
      k.observed_orientation = side.orientation;
      k.other_feature = a.at(origin).feature.id;
      k.candidate = c.path;
      return k;
    }
  }
  return std::nullopt;
}

// Trace of the first shared feature that the anchor's rotation gets wrong.
Contradiction shared_feature_violation(const Candidate& c, const std::vector<SharedPair>& pairs) {
  for (const auto& p : pairs) {
    const SideDescriptor moved = c.map.apply(*p.left);
    Contradiction k;
    k.feature = p.left->feature.id;
    k.location = p.right->location;
    k.predicted_location = moved.location;
    k.predicted_orientation = moved.orientation;
    k.observed_orientation = p.right->orientation;
    k.candidate = c.path;
    if (moved.location != p.right->location) {
      k.kind = ContradictionKind::misplaced;
      return k;
    }
    if (!orientations_match(moved.orientation, p.right->orientation, p.left->feature.symmetry)) {
      k.kind = ContradictionKind::misoriented;
      return k;
    }
  }
  throw std::logic_error("candidate outside the intersection matches every shared feature");
}

}  // namespace

Solution solve(const CubeView& a, const CubeView& b, const RotationGraph& graph) {
  const int depth = geometry::rotation_group().diameter();
  const auto pairs = shared_pairs(a, b);

  Solution sol;
  sol.verdict.method = Method::heuristic;
  Explanation& e = sol.explanation;
  e.r_count = static_cast<int>(pairs.size());
  for (const auto& p : pairs) e.shared.push_back(p.left->feature.id);

  // Candidate rotations: all of them when nothing is shared, otherwise the
  // intersection of the per-feature path sets.
  std::vector<Candidate> candidates;
  std::vector<std::vector<Candidate>> per_feature;
  std::size_t anchor = 0;
  if (pairs.empty()) {
    candidates = graph.rotations_up_to(depth);
  } else {
    for (const auto& p : pairs) {
      per_feature.push_back(graph.find_candidates({p.left->location, p.left->orientation},
                                                  {p.right->location, p.right->orientation},
                                                  p.left->feature.symmetry, depth));
      if (per_feature.back().size() < per_feature[anchor].size()) anchor = per_feature.size() - 1;
    }
    for (const Candidate& c : per_feature[anchor]) {
      const bool everywhere = std::all_of(per_feature.begin(), per_feature.end(),
                                          [&](const auto& set) { return contains(set, c.map); });
      if (everywhere) candidates.push_back(c);
    }
  }
  for (const auto& c : candidates) e.candidate_rotations.push_back(c.path);

  for (const Candidate& c : candidates) {
    if (hidden_side_violation(c, a, b)) continue;
    e.witness_path = c.path;
    for (const auto& side : a.sides()) {
      const SideDescriptor moved = c.map.apply(side);
      e.outcomes.push_back({side.feature.id, side.location, moved.location, moved.orientation});
    }
    for (const auto& side : b.sides()) {
      if (a.find(side.feature.id)) continue;
      e.revealed.push_back({side.feature.id, c.map.preimage(side.location), side.location});
    }
    break;
  }

  if (e.witness_path) {
    sol.verdict.answer = Answer::same;
  } else {
    sol.verdict.answer = Answer::different;
    if (!candidates.empty()) {
      e.contradiction = hidden_side_violation(candidates.front(), a, b);
      e.contradiction->matched = e.shared;
    } else if (!per_feature.empty() && !per_feature[anchor].empty()) {
      e.contradiction = shared_feature_violation(per_feature[anchor].front(), pairs);
      e.contradiction->matched = {pairs[anchor].left->feature.id};
    } else {
      throw std::logic_error("no candidate rotation for a shared feature");
    }
  }
  e.prose = render_explanation(e);
  return sol;
}

namespace {

std::string turn_phrase(const RotationPath& path) {
  if (path.empty()) return "Keep the left cube as it is";
  std::string out = "Turn the left cube ";
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (i) out += ", then ";
    out += std::string(name(path.steps[i])) + " (" + std::string(icon(path.steps[i])) + ")";
  }
  return out;
}

std::string turned(Orientation o) {
  if (!is_oriented(o)) return "non-oriented";
  return "turned " + std::string(to_string(o));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += (i + 1 == items.size()) ? " and " : ", ";
    out += items[i];
  }
  return out;
}

std::string on(Location l) { return "the " + std::string(to_string(l)); }

}  // namespace

std::string render_explanation(const Explanation& e) {
  std::ostringstream os;
  if (e.r_count == 0) {
    os << "R=0: no feature is shared. The right cube can show the sides hidden on the left "
          "one, so both can be the same cube seen from opposite perspectives.\n";
  } else {
    os << "R=" << e.r_count << ": shared " << (e.r_count == 1 ? "feature " : "features ")
       << join(e.shared) << ".\n";
  }

  if (e.witness_path) {
    if (e.witness_path->empty()) {
      os << "No rotation needed; the views are identical.\n";
    } else {
      os << turn_phrase(*e.witness_path) << ".\n";
      for (const auto& o : e.outcomes) {
        os << o.feature;
        if (o.from == o.to) {
          os << " stays on " << on(o.to);
        } else {
          os << " moves from " << on(o.from) << " to " << on(o.to);
        }
        if (is_visible(o.to)) {
          os << ", " << turned(o.orientation) << ".\n";
        } else {
          os << " and becomes hidden.\n";
        }
      }
      for (const auto& r : e.revealed) {
        os << r.feature << " was hidden on " << on(r.hidden_origin) << " and now appears on "
           << on(r.shown_at) << ".\n";
      }
    }
    os << "Answer: s (the cubes can be the same).\n";
    return os.str();
  }

  if (e.contradiction) {
    const Contradiction& k = *e.contradiction;
    os << turn_phrase(k.candidate);
    if (!k.matched.empty()) {
      os << " so that " << join(k.matched) << (k.matched.size() == 1 ? " matches" : " match");
    }
    os << ".\n";
    switch (k.kind) {
      case ContradictionKind::misplaced:
        os << "Then " << k.feature << " would be on " << on(k.predicted_location)
           << (is_visible(k.predicted_location) ? "" : " and hidden") << ", not on "
           << on(k.location) << " as shown in the right cube.\n";
        break;
      case ContradictionKind::misoriented:
        os << "Then " << k.feature << " would be on " << on(k.location) << " "
           << turned(k.predicted_orientation) << ", but the right cube shows it "
           << turned(k.observed_orientation) << ".\n";
        break;
      case ContradictionKind::occupied:
        os << "Then " << k.feature << " would appear on " << on(k.location)
           << ", where the right cube shows " << k.other_feature << ".\n";
        break;
      case ContradictionKind::uncovered:
        os << "Then " << k.feature << " on " << on(k.location) << " would have to come from "
           << on(k.predicted_location) << ", where the left cube shows " << k.other_feature
           << ".\n";
        break;
    }
    if (e.candidate_rotations.size() > 1) {
      os << "The other " << e.candidate_rotations.size() - 1
         << " candidate rotations fail as well.\n";
    }
  }
  os << "Answer: d (the cubes are different).\n";
  return os.str();
}

}  // namespace qor
