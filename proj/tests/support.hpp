#pragma once

#include <string>

#include "qor/items.hpp"

namespace qor::test {

// "front=A@0q up=B@1q right=C@nq" -> view, using the default alphabet.
inline CubeView view(const std::string& sides) {
  return parse_item("L: " + sides + " | R: " + sides).left;
}

inline Item item(const std::string& line) { return parse_item(line); }

inline const char* const kPair1 = "L: front=D@0q up=N@0q right=A@1q | R: front=A@0q up=F@3q right=N@0q | key=d";
inline const char* const kPair2 = "L: front=A@0q up=X@nq right=B@0q | R: front=A@3q up=B@3q right=C@0q | key=s";

}  // namespace qor::test
