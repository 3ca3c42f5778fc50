#include "quantikit/caps.hpp"

#include <cstdlib>
#include <string>

namespace quantikit {

Caps caps_from_env() {
  Caps c;
  if (const char* raw = std::getenv("QUANTIKIT_CAP")) {
    try {
      long v = std::stol(raw);
      if (v > 0) {
        c.presheaf_objects = static_cast<std::size_t>(v);
        c.diagonal_morphisms = static_cast<std::size_t>(v);
        c.enumeration_budget = static_cast<std::size_t>(v);
      }
    } catch (...) {
      // Unparsable values fall back to the defaults.
    }
  }
  return c;
}

}  // namespace quantikit
