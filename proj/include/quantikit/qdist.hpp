#pragma once

#include <map>
#include <memory>

#include "quantikit/qcat.hpp"

namespace quantikit {

/// A bimodule phi: X -|-> Y with values phi(x,y) in Q(|x|,|y|) satisfying
/// b(y,y') ∘ phi(x,y) ∘ a(x',x) <= phi(x',y').
class QDistributor {
public:
  QDistributor() = default;

  static QDistributor validate(QCategory source, QCategory target, std::vector<Elem> values,
                               Exec ex = Exec::parallel);
  static QDistributor unchecked(QCategory source, QCategory target, std::vector<Elem> values);
  /// The hom structure a of X as the identity distributor X -|-> X.
  static QDistributor hom(const QCategory& x);

  const QCategory& source() const { return d_->src; }
  const QCategory& target() const { return d_->tgt; }
  Elem value(std::size_t x, std::size_t y) const { return d_->val[x * d_->tgt.size() + y]; }
  Arrow value_arrow(std::size_t x, std::size_t y) const {
    return {d_->src.extent(x), d_->tgt.extent(y), value(x, y)};
  }

  bool operator==(const QDistributor& o) const {
    return d_->val == o.d_->val && d_->src == o.d_->src && d_->tgt == o.d_->tgt;
  }

private:
  struct Data {
    QCategory src, tgt;
    std::vector<Elem> val;
  };
  std::shared_ptr<const Data> d_;
};

/// (psi ∘ phi)(x,z) = join over y of psi(y,z) ∘ phi(x,y).
QDistributor compose(const QDistributor& psi, const QDistributor& phi);

/// Pointwise order on parallel distributors.
bool dist_leq(const QDistributor& a, const QDistributor& b);

struct FunctorGraphs {
  QDistributor lower;  // X -|-> Y, (x,y) -> b(f(x), y)
  QDistributor upper;  // Y -|-> X, (y,x) -> b(y, f(x))
};
/// The graph pair of a functor; lower is left adjoint to upper.
FunctorGraphs graphs(const QFunctor& f);

/// A distributor X -|-> {s} given by components phi_x: |x| -> s with
/// phi_y ∘ a(x,y) <= phi_x.
struct Presheaf {
  QCategory base;
  Obj extent = 0;
  std::vector<Elem> components;

  static Presheaf validate(QCategory base, Obj extent, std::vector<Elem> components);
};

/// The category PX of all presheaves on X, one object per (extent,
/// components) pair, with hom [phi,psi] = meet over x of psi_x over phi_x.
/// Enumeration is exhaustive and capped.
class PresheafCategory {
public:
  PresheafCategory() = default;

  static PresheafCategory build(const QCategory& base, const Caps& caps = caps_from_env(),
                                Exec ex = Exec::parallel);
  /// The raw candidate count the enumeration would have to visit.
  static std::size_t candidate_count(const QCategory& base);

  const QCategory& category() const { return d_->cat; }
  const QCategory& base() const { return d_->base; }
  std::size_t count() const { return d_->extents.size(); }
  Obj extent(std::size_t i) const { return d_->extents[i]; }
  const std::vector<Elem>& components(std::size_t i) const { return d_->comps[i]; }

  std::optional<std::size_t> find(Obj extent, const std::vector<Elem>& components) const;
  std::size_t require(Obj extent, const std::vector<Elem>& components) const;

private:
  struct Data {
    QCategory base;
    QCategory cat;
    std::vector<Obj> extents;
    std::vector<std::vector<Elem>> comps;
    std::map<std::pair<Obj, std::vector<Elem>>, std::size_t> lookup;
  };
  std::shared_ptr<const Data> d_;
};

/// x -> a(-,x), fully faithful into PX.
QFunctor yoneda(const PresheafCategory& px);

/// y -> phi(-,y): the transpose of phi: X -|-> Y as a functor Y -> PX.
QFunctor transpose(const QDistributor& phi, const PresheafCategory& px);

/// psi -> psi ∘ phi: PY -> PX. For phi the lower graph of a functor f this
/// is precomposition with f; that simplification is asserted by pullback().
QFunctor kan_star(const QDistributor& phi, const PresheafCategory& py, const PresheafCategory& px);

/// f* = kan_star of the lower graph of f, asserted against the direct
/// formula (f*(psi))_x = psi_{f(x)}.
QFunctor pullback(const QFunctor& f, const PresheafCategory& py, const PresheafCategory& px);

}  // namespace quantikit
