#pragma once

#include <stdexcept>
#include <string>

namespace ogw {

// The two double covers of O(n). Pin::Plus squares generators to +1,
// Pin::Minus to -1.
enum class Pin { Plus, Minus };

inline std::string to_string(Pin p) { return p == Pin::Plus ? "pin+" : "pin-"; }

inline Pin pin_from_string(const std::string& s) {
  if (s == "pin+" || s == "plus" || s == "+") return Pin::Plus;
  if (s == "pin-" || s == "minus" || s == "-") return Pin::Minus;
  throw std::invalid_argument("unknown Pin model: " + s);
}

// Mod-2 reduction with negatives mapped to {0,1}.
inline int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

inline int require_bit(long long v, const char* name) {
  if (v != 0 && v != 1) {
    throw std::invalid_argument(std::string(name) + " must be a bit (0 or 1)");
  }
  return static_cast<int>(v);
}

}  // namespace ogw
