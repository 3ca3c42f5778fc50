#include "quantikit/lattice.hpp"

#include <unordered_map>

#include "quantikit/error.hpp"

namespace quantikit {

namespace {

// Least element of the set marked by `in`, or nullopt if the set has no
// member below all others.
std::optional<Elem> least_of(const std::vector<std::uint8_t>& leq, std::size_t n,
                             const std::vector<std::uint8_t>& in) {
  for (std::size_t u = 0; u < n; ++u) {
    if (!in[u]) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v)
      if (in[v] && !leq[u * n + v]) least = false;
    if (least) return static_cast<Elem>(u);
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice FiniteLattice::validate(std::vector<std::string> elements,
                                      const std::vector<std::pair<std::string, std::string>>& order) {
  if (elements.empty()) fail(Errc::BadParameter, "a lattice needs at least one element");
  const std::size_t n = elements.size();
  if (n > 0xFFFF) fail(Errc::BadParameter, "too many lattice elements");

  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], static_cast<Elem>(i)).second)
      fail(Errc::BadParameter, "duplicate element '" + elements[i] + "'");

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : order) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) fail(Errc::UnknownElement, "order pair references unknown element '" + lo + "'");
    if (b == index.end()) fail(Errc::UnknownElement, "order pair references unknown element '" + hi + "'");
    leq[std::size_t(a->second) * n + b->second] = 1;
  }

  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        fail(Errc::CycleError, "elements '" + elements[i] + "' and '" + elements[j] +
                                   "' are order-equivalent but distinct");

  FiniteLattice L;
  L.names_ = std::move(elements);
  L.leq_ = std::move(leq);
  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);

  std::vector<std::uint8_t> bounds(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t u = 0; u < n; ++u)
        bounds[u] = L.leq_[a * n + u] && L.leq_[b * n + u];
      auto j = least_of(L.leq_, n, bounds);
      if (!j)
        fail(Errc::NotALattice, "elements '" + L.names_[a] + "' and '" + L.names_[b] +
                                    "' have no join");
      L.join_[a * n + b] = *j;
      for (std::size_t u = 0; u < n; ++u)
        bounds[u] = L.leq_[u * n + a] && L.leq_[u * n + b];
      // greatest lower bound = least element of the lower set under the
      // reversed order; reuse least_of by transposing.
      std::optional<Elem> m;
      for (std::size_t u = 0; u < n && !m; ++u) {
        if (!bounds[u]) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n && greatest; ++v)
          if (bounds[v] && !L.leq_[v * n + u]) greatest = false;
        if (greatest) m = static_cast<Elem>(u);
      }
      if (!m)
        fail(Errc::NotALattice, "elements '" + L.names_[a] + "' and '" + L.names_[b] +
                                    "' have no meet");
      L.meet_[a * n + b] = *m;
    }

  Elem bot = 0, top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bot = L.meet_[std::size_t(bot) * n + i];
    top = L.join_[std::size_t(top) * n + i];
  }
  L.bottom_ = bot;
  L.top_ = top;
  return L;
}

FiniteLattice FiniteLattice::chain(std::vector<std::string> names, bool reversed) {
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    if (reversed)
      order.emplace_back(names[i + 1], names[i]);
    else
      order.emplace_back(names[i], names[i + 1]);
  }
  return validate(std::move(names), order);
}

FiniteLattice FiniteLattice::restrict_to(const std::vector<Elem>& members) const {
  std::vector<std::string> names;
  names.reserve(members.size());
  for (Elem m : members) names.push_back(names_[m]);
  std::vector<std::pair<std::string, std::string>> order;
  for (Elem a : members)
    for (Elem b : members)
      if (a != b && leq(a, b)) order.emplace_back(names_[a], names_[b]);
  return validate(std::move(names), order);
}

std::optional<Elem> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteLattice::element(std::string_view name) const {
  if (auto i = find(name)) return *i;
  fail(Errc::UnknownElement, "no element named '" + std::string(name) + "'");
}

Elem FiniteLattice::join(std::span<const Elem> s) const {
  Elem acc = bottom_;
  for (Elem e : s) {
    if (e >= size()) fail(Errc::UnknownElement, "element index out of range");
    acc = join2(acc, e);
  }
  return acc;
}

Elem FiniteLattice::meet(std::span<const Elem> s) const {
  Elem acc = top_;
  for (Elem e : s) {
    if (e >= size()) fail(Errc::UnknownElement, "element index out of range");
    acc = meet2(acc, e);
  }
  return acc;
}

}  // namespace quantikit
