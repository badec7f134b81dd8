#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "polyrw/error.hpp"

namespace polyrw {

/// Cell families of the Garside coherent presentation, in rank order of the
/// reduction (A and B lowest).
inline constexpr std::array<const char*, 12> family_names{"A", "B", "C", "D", "E", "F", "G", "H", "I", "E'", "F'", "G'"};

inline bool is_family(const std::string& f) {
  for (const char* n : family_names)
    if (f == n) return true;
  return false;
}

inline std::size_t family_index(const std::string& f) {
  for (std::size_t i = 0; i < family_names.size(); ++i)
    if (f == family_names[i]) return i;
  throw error(errc::bad_parameter, "unknown family '" + f + "'");
}

/// Family tag carried by a cell label of the form "<family>:<params>".
inline std::string family_of_label(const std::string& label) {
  auto colon = label.find(':');
  if (colon == std::string::npos) return {};
  std::string f = label.substr(0, colon);
  return is_family(f) ? f : std::string{};
}

}  // namespace polyrw
