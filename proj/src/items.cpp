#include "qor/items.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "qor/geometry.hpp"

namespace qor {

const AlphabetSpec& AlphabetSpec::latin() {
  static const AlphabetSpec alphabet = [] {
    AlphabetSpec a;
    for (char c = 'A'; c <= 'Z'; ++c) {
      Symmetry s = Symmetry::c1_asymmetric;
      if (c == 'O' || c == 'X') s = Symmetry::c4_full;
      if (c == 'H' || c == 'I' || c == 'N' || c == 'S' || c == 'Z') s = Symmetry::c2_half_turn;
      a.symbols.emplace_back(std::string(1, c), s);
    }
    return a;
  }();
  return alphabet;
}

std::optional<Symmetry> AlphabetSpec::symmetry_of(std::string_view id) const {
  for (const auto& f : symbols) {
    if (f.id == id) return f.symmetry;
  }
  return std::nullopt;
}

void AlphabetSpec::validate() const {
  if (symbols.size() < 6) throw std::invalid_argument("alphabet needs at least 6 symbols");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (symbols[i].id == symbols[j].id) {
        throw std::invalid_argument("duplicate alphabet symbol " + symbols[i].id);
      }
    }
  }
}

std::string_view to_string(Perturbation p) {
  switch (p) {
    case Perturbation::feature_swap: return "feature_swap";
    case Perturbation::orientation_twist: return "orientation_twist";
    case Perturbation::reflected_placement: return "reflected_placement";
  }
  return "?";
}

std::optional<Perturbation> parse_perturbation(std::string_view text) {
  for (auto p : {Perturbation::feature_swap, Perturbation::orientation_twist,
                 Perturbation::reflected_placement}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Mode m) { return m == Mode::exam ? "exam" : "training"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "exam") return Mode::exam;
  if (text == "training") return Mode::training;
  return std::nullopt;
}

const Item* Battery::find(std::string_view item_id) const {
  for (const auto& item : items) {
    if (item.id == item_id) return &item;
  }
  return nullptr;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string item_id(std::size_t index) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%02zu", index + 1);
  return buf;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_words(std::string_view text, int base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), base_column + static_cast<int>(start)});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

struct RawSide {
  std::string id;
  Location location;
  Orientation orientation;
  int column;
};

std::vector<RawSide> parse_sides(const std::vector<Token>& tokens, int line_no) {
  std::vector<RawSide> sides;
  for (const Token& t : tokens) {
    const auto eq = t.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, t.column, "expected <location>=<feature>@<orientation>");
    }
    const auto loc_text = t.text.substr(0, eq);
    const auto loc = parse_location(loc_text);
    if (!loc) throw ParseError(line_no, t.column, "unknown location '" + std::string(loc_text) + "'");
    if (!is_visible(*loc)) {
      throw ParseError(line_no, t.column,
                       "location '" + std::string(loc_text) + "' is not visible (use front, up, right)");
    }
    const auto rest = t.text.substr(eq + 1);
    const auto at = rest.rfind('@');
    const int feature_col = t.column + static_cast<int>(eq) + 1;
    if (at == std::string_view::npos) throw ParseError(line_no, feature_col, "missing '@<orientation>'");
    const auto id = rest.substr(0, at);
    if (id.empty()) throw ParseError(line_no, feature_col, "empty feature id");
    if (id.find_first_of("=@|") != std::string_view::npos) {
      throw ParseError(line_no, feature_col, "feature id '" + std::string(id) + "' contains a reserved character");
    }
    const auto ori_text = rest.substr(at + 1);
    const auto ori = parse_orientation(ori_text);
    if (!ori) {
      throw ParseError(line_no, feature_col + static_cast<int>(at) + 1,
                       "bad orientation '" + std::string(ori_text) + "' (expected 0q, 1q, 2q, 3q or nq)");
    }
    for (const auto& prev : sides) {
      if (prev.location == *loc) {
        throw ParseError(line_no, t.column, "duplicate location '" + std::string(loc_text) + "'");
      }
      if (prev.id == id) throw ParseError(line_no, feature_col, "duplicate feature '" + std::string(id) + "'");
    }
    sides.push_back({std::string(id), *loc, *ori, t.column});
  }
  return sides;
}

struct Segment {
  std::string_view text;
  int column;
};

std::vector<Segment> split_segments(std::string_view line) {
  std::vector<Segment> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    out.push_back({line.substr(start, bar == std::string_view::npos ? line.npos : bar - start),
                   static_cast<int>(start) + 1});
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

std::vector<RawSide> parse_view_segment(const Segment& seg, std::string_view label, int line_no) {
  auto tokens = split_words(seg.text, seg.column);
  if (tokens.empty() || tokens.front().text != label) {
    throw ParseError(line_no, tokens.empty() ? seg.column : tokens.front().column,
                     "expected '" + std::string(label) + "'");
  }
  tokens.erase(tokens.begin());
  auto sides = parse_sides(tokens, line_no);
  if (sides.size() != 3) {
    throw ParseError(line_no, seg.column, "a view needs exactly front, up and right sides");
  }
  return sides;
}

}  // namespace

Item parse_item(std::string_view raw_line, const AlphabetSpec& alphabet, int line_no) {
  const std::string_view line = strip_comment(raw_line);
  const auto segments = split_segments(line);
  if (segments.size() < 2 || segments.size() > 3) {
    throw ParseError(line_no, 1, "expected 'L: ... | R: ... [| key=<s|d>]'");
  }
  const auto left_raw = parse_view_segment(segments[0], "L:", line_no);
  const auto right_raw = parse_view_segment(segments[1], "R:", line_no);

  std::optional<Answer> key;
  if (segments.size() == 3) {
    const auto tokens = split_words(segments[2].text, segments[2].column);
    if (tokens.size() != 1 || tokens[0].text.substr(0, 4) != "key=") {
      throw ParseError(line_no, segments[2].column, "expected 'key=<s|d>'");
    }
    const auto value = tokens[0].text.substr(4);
    if (value != "s" && value != "d") {
      throw ParseError(line_no, tokens[0].column + 4, "key must be s or d");
    }
    key = parse_answer(value);
  }

  // Resolve one symmetry class per feature id across both views.
  std::map<std::string, Symmetry> symmetry;
  std::map<std::string, bool> non_oriented;
  for (const auto* raw : {&left_raw, &right_raw}) {
    for (const auto& s : *raw) {
      const bool nq = !is_oriented(s.orientation);
      const auto [it, inserted] = non_oriented.emplace(s.id, nq);
      if (!inserted && it->second != nq) {
        throw ParseError(line_no, s.column, "feature '" + s.id + "' is non-oriented in one view only");
      }
      if (nq) {
        symmetry[s.id] = Symmetry::c4_full;
        continue;
      }
      const auto declared = alphabet.symmetry_of(s.id);
      if (declared == Symmetry::c4_full) {
        throw ParseError(line_no, s.column, "feature '" + s.id + "' is fully symmetric; write it as " + s.id + "@nq");
      }
      symmetry[s.id] = declared.value_or(Symmetry::c1_asymmetric);
    }
  }

  auto build = [&](const std::vector<RawSide>& raw) {
    std::array<SideDescriptor, 3> sides;
    for (std::size_t i = 0; i < 3; ++i) {
      sides[i] = SideDescriptor(Feature(raw[i].id, symmetry.at(raw[i].id)), raw[i].location,
                                raw[i].orientation);
    }
    return CubeView(sides);
  };
  Item item{"", build(left_raw), build(right_raw), key, {}};
  item.meta.r_count = count_repeated(item.left, item.right);
  return item;
}

namespace {

void emit_view(std::ostringstream& os, const CubeView& view) {
  for (const auto& side : view.sides()) {
    os << ' ' << to_string(side.location) << '=' << side.feature.id << '@'
       << to_string(side.orientation);
  }
}

}  // namespace

std::string emit_item(const Item& item) {
  std::ostringstream os;
  os << "L:";
  emit_view(os, item.left);
  os << " | R:";
  emit_view(os, item.right);
  if (item.key) os << " | key=" << to_char(*item.key);
  return os.str();
}

std::vector<Item> parse_items(std::string_view text, const AlphabetSpec& alphabet) {
  std::vector<Item> items;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(strip_comment(line))) continue;
    Item item = parse_item(line, alphabet, line_no);
    item.id = item_id(items.size());
    items.push_back(std::move(item));
  }
  return items;
}

Battery parse_battery(std::string_view text, const AlphabetSpec& alphabet) {
  Battery battery;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = strip_comment(line);
    if (blank(content)) continue;
    if (!header) {
      const auto tokens = split_words(content, 1);
      if (tokens.size() < 3 || tokens.size() > 4 || tokens[0].text != "battery") {
        throw ParseError(line_no, 1, "expected 'battery <name> time=<seconds> [mode=training]'");
      }
      battery.name = std::string(tokens[1].text);
      const auto time = tokens[2].text;
      if (time.substr(0, 5) != "time=") throw ParseError(line_no, tokens[2].column, "expected time=<seconds>");
      try {
        std::size_t used = 0;
        const std::string digits(time.substr(5));
        battery.time_limit_s = std::stoi(digits, &used);
        if (used != digits.size() || battery.time_limit_s <= 0) throw std::invalid_argument("time");
      } catch (const std::exception&) {
        throw ParseError(line_no, tokens[2].column + 5, "time must be a positive integer");
      }
      if (tokens.size() == 4) {
        const auto m = tokens[3].text;
        const auto mode = m.substr(0, 5) == "mode=" ? parse_mode(m.substr(5)) : std::nullopt;
        if (!mode) throw ParseError(line_no, tokens[3].column, "expected mode=exam or mode=training");
        battery.mode = *mode;
      }
      header = true;
      continue;
    }
    Item item = parse_item(line, alphabet, line_no);
    item.id = item_id(battery.items.size());
    battery.items.push_back(std::move(item));
  }
  if (!header) throw ParseError(line_no + 1, 1, "missing battery header");
  return battery;
}

std::string emit_battery(const Battery& battery) {
  std::ostringstream os;
  os << "battery " << battery.name << " time=" << battery.time_limit_s;
  if (battery.mode == Mode::training) os << " mode=training";
  os << '\n';
  for (const auto& item : battery.items) os << emit_item(item) << '\n';
  return os.str();
}

CubeView reflect_view(const CubeView& view) {
  const geometry::RotMatrix mirror{{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  std::array<SideDescriptor, 3> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& side = view.sides()[i];
    const auto moved = geometry::apply(mirror, geometry::pose_of(side.location, side.orientation));
    const Location to = *geometry::location_of(moved.normal);
    const Orientation o =
        is_oriented(side.orientation) ? geometry::orientation_of(moved) : Orientation::non_oriented;
    sides[i] = SideDescriptor(side.feature, to, o);
  }
  return CubeView(sides);
}

namespace {

// splitmix64: small, portable and fully specified, so generated items are
// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

constexpr int kMaxAttempts = 20000;

int longest_witness(int r_count) {
  const auto& group = geometry::rotation_group();
  int longest = -1;
  for (std::size_t i = 0; i < group.elements().size(); ++i) {
    int kept = 0;
    for (Location l : kVisibleLocations) kept += is_visible(geometry::transition(group.elements()[i], l).location);
    if (kept == r_count) longest = std::max(longest, static_cast<int>(group.shortest_words()[i].size()));
  }
  return longest;
}

CubeState random_cube(Rng& rng, const AlphabetSpec& alphabet) {
  std::vector<std::size_t> order(alphabet.symbols.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  CubeState state;
  for (std::size_t k = 0; k < 6; ++k) {
    std::swap(order[k], order[k + rng.below(order.size() - k)]);
    const Feature& f = alphabet.symbols[order[k]];
    const Orientation o = f.symmetry == Symmetry::c4_full ? Orientation::non_oriented
                                                          : orientation_from_quarters(static_cast<int>(rng.below(4)));
    state.set(SideDescriptor(f, kAllLocations[k], o));
  }
  return state;
}

CubeState rotate(const geometry::RotMatrix& g, const CubeState& state) {
  CubeState out;
  for (const auto& side : state.known()) out.set(geometry::apply(g, side));
  return out;
}

std::optional<CubeView> perturb(const CubeView& right, Perturbation kind, Rng& rng) {
  auto sides = right.sides();
  switch (kind) {
    case Perturbation::feature_swap: {
      const std::size_t i = rng.below(3);
      const std::size_t j = (i + 1 + rng.below(2)) % 3;
      std::swap(sides[i].feature, sides[j].feature);
      std::swap(sides[i].orientation, sides[j].orientation);
      return CubeView(sides);
    }
    case Perturbation::orientation_twist: {
      std::vector<std::size_t> oriented;
      for (std::size_t i = 0; i < 3; ++i) {
        if (is_oriented(sides[i].orientation)) oriented.push_back(i);
      }
      if (oriented.empty()) return std::nullopt;
      auto& side = sides[oriented[rng.below(oriented.size())]];
      const std::vector<OrientationDelta> twists =
          side.feature.symmetry == Symmetry::c2_half_turn
              ? std::vector<OrientationDelta>{OrientationDelta::plus_q, OrientationDelta::minus_q}
              : std::vector<OrientationDelta>{OrientationDelta::plus_q, OrientationDelta::plus_2q,
                                              OrientationDelta::minus_q};
      side.orientation = add_delta(side.orientation, twists[rng.below(twists.size())]);
      return CubeView(sides);
    }
    case Perturbation::reflected_placement: {
      CubeView mirrored = reflect_view(right);
      if (mirrored == right) return std::nullopt;
      return mirrored;
    }
  }
  return std::nullopt;
}

}  // namespace

Item generate_item(std::uint64_t seed, const ItemRequest& request, const AlphabetSpec& alphabet) {
  alphabet.validate();
  const int depth = geometry::rotation_group().diameter();
  if (request.r_count < 0 || request.r_count > 3) {
    throw UnsatisfiableRequest("r_count must be between 0 and 3");
  }
  if (request.key == Answer::different && request.r_count == 0) {
    throw UnsatisfiableRequest(
        "unsatisfiable: views sharing no feature always admit a consistent rotation, so "
        "key=d requires r_count >= 1");
  }
  if (request.key == Answer::different && request.min_witness_length > 0) {
    throw UnsatisfiableRequest("unsatisfiable: different items have no witness path");
  }
  // A same-item witness keeps exactly the shared features visible, so the
  // longest witness for a given R is the longest element keeping R sides visible.
  if (request.key == Answer::same && request.min_witness_length > longest_witness(request.r_count)) {
    throw UnsatisfiableRequest("unsatisfiable: with R=" + std::to_string(request.r_count) +
                               " no witness needs more than " +
                               std::to_string(longest_witness(request.r_count)) + " quarter turns");
  }
  if (request.min_witness_length > depth) {
    throw UnsatisfiableRequest("unsatisfiable: no rotation needs more than " + std::to_string(depth) +
                               " quarter turns");
  }

  Rng rng(seed);
  const auto& group = geometry::rotation_group().elements();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CubeState cube = random_cube(rng, alphabet);
    const auto& g = group[rng.below(group.size())];
    const CubeView left = *cube.view();
    const CubeView parent_right = *rotate(g, cube).view();
    if (count_repeated(left, parent_right) != request.r_count) continue;

    if (request.key == Answer::same) {
      const Solution sol = solve(left, parent_right);
      const int length = static_cast<int>(sol.explanation.witness_path.value_or(RotationPath{}).size());
      if (sol.verdict.answer != Answer::same || length < request.min_witness_length) continue;
      if (brute_force_solve(left, parent_right).verdict.answer != Answer::same) {
        throw std::logic_error("rendered views of one cube judged different");
      }
      Item item{"seed-" + std::to_string(seed), left, parent_right, Answer::same, {}};
      item.meta.r_count = request.r_count;
      item.meta.witness_length = length;
      item.meta.seed = seed;
      return item;
    }

    std::vector<Perturbation> kinds = {Perturbation::feature_swap, Perturbation::orientation_twist,
                                       Perturbation::reflected_placement};
    rng.shuffle(kinds);
    for (Perturbation kind : kinds) {
      const auto right = perturb(parent_right, kind, rng);
      if (!right || count_repeated(left, *right) != request.r_count) continue;
      if (brute_force_solve(left, *right).verdict.answer != Answer::different) continue;
      const Solution sol = solve(left, *right);
      Item item{"seed-" + std::to_string(seed), left, *right, Answer::different, {}};
      item.meta.r_count = count_repeated(left, *right);
      if (sol.explanation.contradiction) {
        item.meta.contradiction_kind = std::string(to_string(sol.explanation.contradiction->kind));
      }
      item.meta.seed = seed;
      item.meta.perturbation = kind;
      item.meta.parent_right = parent_right;
      return item;
    }
  }
  throw UnsatisfiableRequest("no item satisfying the request found in " + std::to_string(kMaxAttempts) +
                             " attempts");
}

Battery assemble_battery(std::uint64_t seed, const BatteryRequest& request, const AlphabetSpec& alphabet) {
  const auto& mix = request.mix;
  if (mix.same < 0 || mix.different < 0 || std::abs(mix.same + mix.different - 1.0) > 1e-9) {
    throw std::invalid_argument("battery mix proportions must be non-negative and sum to 1");
  }
  if (request.n_items == 0) throw std::invalid_argument("battery needs at least one item");
  if (request.time_limit_s <= 0) throw std::invalid_argument("time limit must be positive");
  if (request.name.empty() ||
      std::any_of(request.name.begin(), request.name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '#';
      })) {
    throw std::invalid_argument("battery name must be a single word");
  }

  Rng rng(seed);
  const auto n_same = static_cast<std::size_t>(std::llround(static_cast<double>(request.n_items) * mix.same));
  std::vector<Answer> keys(request.n_items, Answer::different);
  std::fill(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(std::min(n_same, keys.size())),
            Answer::same);
  rng.shuffle(keys);

  Battery battery;
  battery.name = request.name;
  battery.time_limit_s = request.time_limit_s;
  battery.mode = request.mode;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ItemRequest want;
    want.key = keys[i];
    want.r_count = keys[i] == Answer::same ? static_cast<int>(rng.below(4)) : 1 + static_cast<int>(rng.below(3));
    Item item = generate_item(rng.next(), want, alphabet);
    item.id = item_id(i);
    battery.items.push_back(std::move(item));
  }
  return battery;
}

}  // namespace qor
