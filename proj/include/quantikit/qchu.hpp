#pragma once

#include "quantikit/qdist.hpp"

namespace quantikit {

/// An object of the Chu category: a distributor phi: X -|-> W.
struct ChuObject {
  QDistributor dist;

  const QCategory& dom() const { return dist.source(); }
  const QCategory& cod() const { return dist.target(); }
  friend bool operator==(const ChuObject& a, const ChuObject& b) { return a.dist == b.dist; }
};

/// A morphism (f,g): phi -> psi with phi: X -|-> W, psi: Y -|-> Z,
/// f: X -> Y, g: Z -> W and psi(f(x), z) = phi(x, g(z)).
class ChuTransform {
public:
  ChuTransform() = default;

  /// Certifies the elementwise condition; when the presheaf categories of
  /// both domains fit under the cap, the same condition is recomputed
  /// through the presheaf square f* ∘ (transpose psi) = (transpose phi) ∘ g
  /// and the two routes must agree (a mismatch is an internal bug).
  static ChuTransform validate(ChuObject from, ChuObject to, QFunctor fwd, QFunctor bwd,
                               const Caps& caps = caps_from_env(), Exec ex = Exec::parallel);
  static ChuTransform unchecked(ChuObject from, ChuObject to, QFunctor fwd, QFunctor bwd);
  static ChuTransform identity(const ChuObject& o);

  /// True when the elementwise condition holds (no throw).
  static bool condition_holds(const ChuObject& from, const ChuObject& to, const QFunctor& fwd,
                              const QFunctor& bwd);

  const ChuObject& from() const { return from_; }
  const ChuObject& to() const { return to_; }
  const QFunctor& fwd() const { return fwd_; }
  const QFunctor& bwd() const { return bwd_; }

  /// Equality as pairs of maps between equal endpoints.
  bool operator==(const ChuTransform& o) const {
    return fwd_ == o.fwd_ && bwd_ == o.bwd_ && from_ == o.from_ && to_ == o.to_;
  }

private:
  ChuObject from_, to_;
  QFunctor fwd_, bwd_;
};

/// outer ∘ inner: forward parts compose forward, backward parts backward.
ChuTransform compose(const ChuTransform& outer, const ChuTransform& inner);

struct ChuProductResult {
  ChuObject object;
  std::vector<ChuTransform> projections;
};
/// Domain = product of domains, codomain = coproduct of codomains,
/// phi(x, inj_i(y)) = phi_i(x_i, y). Empty family: terminal object
/// (terminal category) -|-> (empty category).
ChuProductResult chu_product(const Quantaloid& q, const std::vector<ChuObject>& family,
                             Exec ex = Exec::parallel);

struct ChuCoproductResult {
  ChuObject object;
  std::vector<ChuTransform> injections;
};
/// Dual: domain = coproduct of domains, codomain = product of codomains.
ChuCoproductResult chu_coproduct(const Quantaloid& q, const std::vector<ChuObject>& family,
                                 Exec ex = Exec::parallel);

struct ChuEqualizerResult {
  ChuObject object;
  ChuTransform inclusion;
};
/// Equalizer of the forward parts, coequalizer of the backward parts;
/// chi(x, [w]) = phi(i(x), w), independence of the representative asserted.
ChuEqualizerResult chu_equalizer(const ChuTransform& t1, const ChuTransform& t2,
                                 Exec ex = Exec::parallel);

struct ChuCoequalizerResult {
  ChuObject object;
  ChuTransform projection;
};
ChuCoequalizerResult chu_coequalizer(const ChuTransform& t1, const ChuTransform& t2,
                                     Exec ex = Exec::parallel);

/// A finite diagram of Chu objects and transforms.
struct ChuDiagram {
  std::vector<ChuObject> nodes;
  struct Arr {
    std::size_t src = 0, dst = 0;
    ChuTransform t;  // nodes[src] -> nodes[dst]
  };
  std::vector<Arr> arrows;
};

/// The initial lifting of a cone over the forward parts of a diagram:
/// given legs gamma_j: X -> dom(node j) commuting with the forward parts,
/// builds W as the colimit of the codomain diagram, the unique functor
/// W -> PX induced by the node transposes, and from it phi: X -|-> W with
/// the lifted cone (gamma_j, delta_j).
struct DomLiftResult {
  ChuObject object;
  std::vector<ChuTransform> cone;
  // intermediates, exposed for inspection
  ColimitResult codomain_colimit;
  PresheafCategory tip_presheaves;
  QFunctor transpose_functor;        // W -> PX
  std::vector<QFunctor> node_transposes;  // W_j -> P(X_j)
  std::vector<QFunctor> pulled_legs;      // W_j -> PX
};
DomLiftResult dom_initial_lift(const ChuDiagram& d, const QCategory& tip,
                               const std::vector<QFunctor>& cone, const Caps& caps = caps_from_env(),
                               Exec ex = Exec::parallel);

/// The generating family: one empty-domain object into each indiscrete
/// cogenerator D_s = {s} + ob Q, plus one lambda_t: {t} -|-> C-hat per
/// object t, where C-hat doubles the coproduct C of the presheaf categories
/// of all singletons. The alternative mode swaps the empty-domain members
/// for a single lambda over the empty category.
class GeneratorFamily {
public:
  static GeneratorFamily build(const Quantaloid& q, bool alternative = false,
                               const Caps& caps = caps_from_env(), Exec ex = Exec::parallel);

  const Quantaloid& quantaloid() const { return q_; }
  bool alternative() const { return alternative_; }
  const std::vector<ChuObject>& members() const { return members_; }

  /// Members with empty domain (eta_s, or the single lambda over empty).
  const std::vector<ChuObject>& empty_domain_members() const { return eta_; }
  /// lambda_t in object order.
  const std::vector<ChuObject>& lambda_members() const { return lambda_; }

  const QCategory& c_hat() const { return c_hat_; }
  const QCategory& singleton(Obj t) const { return singletons_[t]; }
  const std::vector<QCategory>& cogenerators() const { return d_s_; }

  /// Object index of C-hat holding the arrow u: t -> s in the given copy
  /// (copy 0 or 1).
  std::size_t c_hat_object(Obj t, Obj s, Elem u, int copy) const;

private:
  Quantaloid q_;
  bool alternative_ = false;
  std::vector<ChuObject> members_, eta_, lambda_;
  QCategory c_hat_;
  std::vector<QCategory> singletons_;
  std::vector<QCategory> d_s_;
  std::vector<std::size_t> part_offset_;  // per t: offset of P{t} inside C
  std::size_t c_size_ = 0;
  std::vector<std::vector<std::size_t>> arrow_slot_;  // per t: per (s,u) flat index -> C index
};

/// Given two distinct parallel transforms, returns a generating-family
/// member G and m: G -> from with t1∘m != t2∘m, following the case split:
/// empty domain (1), differing forward parts (2), differing backward parts
/// with inhabited domain (3).
struct Separation {
  int case_used = 0;
  ChuObject generator;
  ChuTransform m;
};
Separation separate(const ChuTransform& t1, const ChuTransform& t2, const GeneratorFamily& gens,
                    const Caps& caps = caps_from_env(), Exec ex = Exec::parallel);

}  // namespace quantikit
