#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quantikit/caps.hpp"
#include "quantikit/lattice.hpp"
#include "quantikit/parallel.hpp"

namespace quantikit {

/// Index of an object within its quantaloid.
using Obj = std::uint16_t;

/// A morphism q -> r of a quantaloid: an element of the hom-lattice (q, r).
struct Arrow {
  Obj dom = 0;
  Obj cod = 0;
  Elem val = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quantaloid: objects, a complete hom-lattice per ordered object
/// pair, a total composition table and identities. Validation certifies
/// associativity, unitality and preservation of joins (empty and binary, the
/// rest follow) in each composition variable. Residuals are derived by
/// exhaustive maximum. Immutable and cheap to copy.
class Quantaloid {
public:
  struct Builder {
    std::vector<std::string> objects;
    // row-major (dom, cod)
    std::vector<FiniteLattice> homs;
    // triple (q, r, s), table [g * |hom(q,r)| + f] -> element of hom(q,s)
    std::vector<std::vector<Elem>> compose;
    std::vector<Elem> identities;
  };

  Quantaloid() = default;

  static Quantaloid validate(Builder b, Exec ex = Exec::parallel);

  static Quantaloid builtin_two();
  /// One object, elements 0..n ordered by numeric >= (so the lattice bottom
  /// is n and the top is 0), composition min(a+b, n), unit 0.
  static Quantaloid builtin_chain(int n);
  /// Resolves "two" or "chain" (n required for the latter).
  static Quantaloid builtin(const std::string& name, std::optional<int> n = std::nullopt);

  std::size_t object_count() const { return d_->objects.size(); }
  const std::string& object_name(Obj q) const { return d_->objects[q]; }
  std::optional<Obj> find_object(std::string_view name) const;
  Obj object(std::string_view name) const;  // throws UnknownElement

  const FiniteLattice& hom(Obj q, Obj r) const {
    return d_->homs[std::size_t(q) * object_count() + r];
  }
  Elem identity(Obj q) const { return d_->identities[q]; }
  Arrow identity_arrow(Obj q) const { return {q, q, identity(q)}; }

  /// g in hom(r,s) composed with f in hom(q,r); table lookup.
  Elem compose(Obj q, Obj r, Obj s, Elem g, Elem f) const {
    const std::size_t n = object_count();
    return d_->compose[(std::size_t(q) * n + r) * n + s][std::size_t(g) * hom(q, r).size() + f];
  }
  Arrow compose(const Arrow& g, const Arrow& f) const;  // throws TypeMismatch

  /// d over u: the largest z with z∘u <= d.
  Arrow residual_left(const Arrow& d, const Arrow& u) const;
  /// v under d: the largest t with v∘t <= d.
  Arrow residual_right(const Arrow& v, const Arrow& d) const;

  /// Same objects, hom(q,r) = this->hom(r,q), composition transposed.
  Quantaloid opposite() const;

  /// Total number of morphisms (sum of hom-lattice sizes).
  std::size_t morphism_count() const;

  const Builder& raw() const { return *d_; }
  bool same(const Quantaloid& o) const { return d_ == o.d_; }
  bool operator==(const Quantaloid& o) const;

private:
  std::shared_ptr<const Builder> d_;
};

/// Quantaloid of diagonals of Q. Objects are the morphisms of Q; a diagonal
/// from u to v is a morphism d: dom u -> cod v with (d over u)∘u = d =
/// v∘(v under d); composition is (e over v)∘d; the identity on u is u.
struct DiagonalResult {
  Quantaloid dq;
  /// D-object index -> the underlying Q-morphism.
  std::vector<Arrow> objects;
  /// Q-object q -> D-object index of the identity morphism 1_q.
  std::vector<Obj> identity_object;
  /// D-hom (u,v), element index -> ambient element of Q(dom u, cod v).
  std::vector<std::vector<Elem>> members;
  /// Embedding on homs: for Q-objects (t,s), element u of Q(t,s) -> element
  /// index of the D-hom (1_t, 1_s) representing u.
  std::vector<std::vector<Elem>> embedding;

  Obj object_of(const Arrow& u) const;
};

DiagonalResult diagonal(const Quantaloid& q, const Caps& caps = caps_from_env(),
                        Exec ex = Exec::parallel);

/// Exhaustively verifies both residual adjunction biconditionals
/// (z <= d over u iff z∘u <= d, and t <= v under d iff v∘t <= d)
/// over every typed element triple. Returns true when all hold; the first
/// violating triple (in scan order) is described in *witness otherwise.
bool check_residual_adjunctions(const Quantaloid& q, Exec ex = Exec::parallel,
                                std::string* witness = nullptr);

/// Exhaustive join-preservation check over all subsets of each hom-lattice
/// (exponential; intended for lattices of at most a dozen elements).
bool check_sup_preservation_subsets(const Quantaloid& q, std::string* witness = nullptr);

}  // namespace quantikit
