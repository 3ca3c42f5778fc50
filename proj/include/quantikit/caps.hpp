#pragma once

#include <cstddef>

namespace quantikit {

/// Size limits that keep exhaustive constructions and searches within desk
/// scale. `QUANTIKIT_CAP`, when set to a positive integer, replaces every
/// field below with that value.
struct Caps {
  /// Most objects a presheaf category may have (also bounds the raw
  /// candidate space of the presheaf enumeration).
  std::size_t presheaf_objects = 4096;
  /// Most morphisms a quantaloid may have before the diagonal construction
  /// refuses to run.
  std::size_t diagonal_morphisms = 64;
  /// Most candidate maps a functor enumeration may inspect.
  std::size_t enumeration_budget = 65536;
};

/// Default caps, honoring QUANTIKIT_CAP.
Caps caps_from_env();

}  // namespace quantikit
