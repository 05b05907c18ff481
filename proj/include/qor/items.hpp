#pragma once

// Cube comparison items and batteries: the line-oriented text format and
// a seeded generator whose answer keys are verified by brute force.
//
// Item line:
//   L: front=<ID>@<0q|1q|2q|3q|nq> up=... right=... | R: ... | key=<s|d>
// Battery file: a header `battery <name> time=<seconds> [mode=training]`
// followed by one item per line. `#` starts a comment.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qor/core.hpp"
#include "qor/solver.hpp"

namespace qor {

/// Symbols available to a generator, each with its symmetry class.
struct AlphabetSpec {
  std::vector<Feature> symbols;

  /// Uppercase Latin letters: O, X fully symmetric; H, I, N, S, Z
  /// half-turn symmetric; the rest asymmetric.
  static const AlphabetSpec& latin();

  std::optional<Symmetry> symmetry_of(std::string_view id) const;
  /// Throws std::invalid_argument on duplicate ids or fewer than 6 symbols.
  void validate() const;
};

enum class Perturbation { feature_swap, orientation_twist, reflected_placement };

std::string_view to_string(Perturbation p);
std::optional<Perturbation> parse_perturbation(std::string_view text);

struct ItemMeta {
  int r_count = 0;
  std::optional<int> witness_length;  // same items
  std::optional<std::string> contradiction_kind;  // different items
  std::optional<std::uint64_t> seed;
  std::optional<Perturbation> perturbation;
  /// Right view of the unperturbed "same" item a distractor was made from.
  std::optional<CubeView> parent_right;
};

struct Item {
  std::string id;
  CubeView left;
  CubeView right;
  std::optional<Answer> key;
  ItemMeta meta;
};

enum class Mode { exam, training };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

struct Battery {
  std::string name = "cct";
  int time_limit_s = 180;
  Mode mode = Mode::exam;
  std::vector<Item> items;

  const Item* find(std::string_view item_id) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses one item line. Symmetry classes come from `nq` (fully symmetric)
/// or, for oriented glyphs, from the alphabet (c2 if listed so, else c1).
Item parse_item(std::string_view line, const AlphabetSpec& alphabet = AlphabetSpec::latin(),
                int line_no = 1);
/// Canonical single line without trailing newline.
std::string emit_item(const Item& item);

/// Every item line of a text; ids are 1-based, two-digit positions.
std::vector<Item> parse_items(std::string_view text,
                              const AlphabetSpec& alphabet = AlphabetSpec::latin());

Battery parse_battery(std::string_view text, const AlphabetSpec& alphabet = AlphabetSpec::latin());
std::string emit_battery(const Battery& battery);

/// Item ids used inside batteries and item files: "01", "02", ...
std::string item_id(std::size_t index);

struct ItemRequest {
  Answer key = Answer::same;
  int r_count = 0;
  int min_witness_length = 0;  // same items only
};

class UnsatisfiableRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic in (seed, request, alphabet). The returned key has been
/// re-verified by brute_force_solve.
Item generate_item(std::uint64_t seed, const ItemRequest& request,
                   const AlphabetSpec& alphabet = AlphabetSpec::latin());

struct BatteryMix {
  double same = 0.5;
  double different = 0.5;
};

struct BatteryRequest {
  std::size_t n_items = 21;
  BatteryMix mix;
  std::string name = "cct";
  int time_limit_s = 180;
  Mode mode = Mode::exam;
};

Battery assemble_battery(std::uint64_t seed, const BatteryRequest& request = {},
                         const AlphabetSpec& alphabet = AlphabetSpec::latin());

/// Mirror image of a view across the plane swapping up and right; glyphs
/// keep their ids and take the mirrored top direction.
CubeView reflect_view(const CubeView& view);

}  // namespace qor
