#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quantikit {

/// Index of an element within its lattice.
using Elem = std::uint16_t;

/// A finite complete lattice over named elements.
///
/// The order is stored as its full reflexive-transitive closure; validation
/// certifies antisymmetry and the existence of all joins and meets (pairwise
/// suffices on a finite carrier, the rest follow by folding). Pairwise join
/// and meet tables are precomputed, so the instance is immutable afterwards
/// and safe to share across threads.
class FiniteLattice {
public:
  FiniteLattice() = default;

  static FiniteLattice validate(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& order);

  /// Chain 0 < 1 < ... < count-1 over the given names (names[i] sits at
  /// height i); with `reversed`, the numeric order is flipped.
  static FiniteLattice chain(std::vector<std::string> names, bool reversed = false);

  /// The sublattice on `members` (ambient element indices), with the induced
  /// order. Joins/meets are recomputed inside the subset.
  FiniteLattice restrict_to(const std::vector<Elem>& members) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> find(std::string_view name) const;
  Elem element(std::string_view name) const;  // throws UnknownElement

  bool leq(Elem a, Elem b) const { return leq_[std::size_t(a) * names_.size() + b] != 0; }

  Elem join2(Elem a, Elem b) const { return join_[std::size_t(a) * names_.size() + b]; }
  Elem meet2(Elem a, Elem b) const { return meet_[std::size_t(a) * names_.size() + b]; }
  Elem join(std::span<const Elem> s) const;
  Elem meet(std::span<const Elem> s) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && leq_ == o.leq_;
  }

private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;  // row-major closure matrix
  std::vector<Elem> join_, meet_;  // pairwise tables
  Elem bottom_ = 0, top_ = 0;
};

}  // namespace quantikit
