#pragma once

#include <string>

#include "morrey/errors.hpp"

namespace morrey {

// Three-valued answer. "unknown" is a first-class outcome and is never
// collapsed into "no".
enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

inline Tri tri_from_string(const std::string& s) {
  if (s == "yes") return Tri::yes;
  if (s == "no") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  throw config_error("invalid tri-state value: " + s);
}

inline Tri to_tri(bool b) { return b ? Tri::yes : Tri::no; }

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::yes && b == Tri::yes) return Tri::yes;
  return Tri::unknown;
}

}  // namespace morrey
