#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quantikit/quantaloid.hpp"

namespace quantikit {

/// A small category enriched in a quantaloid Q: objects with extents |x| in
/// ob Q and hom-arrows a(x,y) in Q(|x|,|y|) satisfying
/// 1_{|x|} <= a(x,x) and a(y,z)∘a(x,y) <= a(x,z).
/// Values are immutable handles; copies are cheap.
class QCategory {
public:
  QCategory() = default;

  static QCategory validate(const Quantaloid& q, std::vector<std::string> names,
                            std::vector<Obj> extents, std::vector<Elem> hom,
                            Exec ex = Exec::parallel);
  /// Trusted constructor without the axiom checks; for corrupted test
  /// doubles and internal use where validity is re-established elsewhere.
  static QCategory unchecked(const Quantaloid& q, std::vector<std::string> names,
                             std::vector<Obj> extents, std::vector<Elem> hom);

  /// a(x,x) = 1_{|x|}, a(x,y) = bottom otherwise.
  static QCategory discrete(const Quantaloid& q, std::vector<std::string> names,
                            std::vector<Obj> extents);
  /// a(x,y) = top always.
  static QCategory indiscrete(const Quantaloid& q, std::vector<std::string> names,
                              std::vector<Obj> extents);
  static QCategory empty(const Quantaloid& q);
  /// One object of the given extent with the discrete structure.
  static QCategory singleton(const Quantaloid& q, Obj extent, std::string name);

  const Quantaloid& quantaloid() const { return d_->q; }
  std::size_t size() const { return d_->names.size(); }
  const std::string& name(std::size_t x) const { return d_->names[x]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t object(std::string_view name) const;  // throws UnknownElement
  Obj extent(std::size_t x) const { return d_->extents[x]; }
  Elem hom(std::size_t x, std::size_t y) const { return d_->hom[x * size() + y]; }
  Arrow hom_arrow(std::size_t x, std::size_t y) const {
    return {extent(x), extent(y), hom(x, y)};
  }

  bool operator==(const QCategory& o) const;

private:
  struct Data {
    Quantaloid q;
    std::vector<std::string> names;
    std::vector<Obj> extents;
    std::vector<Elem> hom;
    std::unordered_map<std::string, std::size_t> index;
  };
  static QCategory wrap(Data d);
  std::shared_ptr<const Data> d_;
};

/// An extent-preserving map f with a(x,y) <= b(f(x),f(y)).
class QFunctor {
public:
  QFunctor() = default;

  static QFunctor validate(QCategory source, QCategory target, std::vector<std::size_t> map,
                           Exec ex = Exec::parallel);
  static QFunctor unchecked(QCategory source, QCategory target, std::vector<std::size_t> map);
  static QFunctor identity(const QCategory& x);

  const QCategory& source() const { return src_; }
  const QCategory& target() const { return tgt_; }
  std::size_t map(std::size_t x) const { return map_[x]; }
  const std::vector<std::size_t>& mapping() const { return map_; }

  bool operator==(const QFunctor& o) const {
    return map_ == o.map_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

private:
  QCategory src_, tgt_;
  std::vector<std::size_t> map_;
};

/// g ∘ f; throws TypeMismatch unless f.target == g.source.
QFunctor compose(const QFunctor& g, const QFunctor& f);

/// Pointwise order on parallel functors: 1_{|x|} <= b(f(x),g(x)) for all x.
bool functor_leq(const QFunctor& f, const QFunctor& g);

/// Same objects and extents over the opposite quantaloid, homs transposed.
QCategory opposite_category(const QCategory& x);

struct ProductResult {
  QCategory category;
  std::vector<QFunctor> projections;
};
/// Extent-matching tuples "(x1,...,xk)@q" with hom = meet of component homs.
/// The empty family yields the terminal category (one object per Q-object,
/// all homs top).
ProductResult product(const Quantaloid& q, const std::vector<QCategory>& factors,
                      Exec ex = Exec::parallel);

struct CoproductResult {
  QCategory category;
  std::vector<QFunctor> injections;
};
/// Disjoint union with objects "i:x"; homs across parts are bottom. The
/// empty family yields the empty category.
CoproductResult coproduct(const Quantaloid& q, const std::vector<QCategory>& parts,
                          Exec ex = Exec::parallel);

struct EqualizerResult {
  QCategory category;
  QFunctor inclusion;
};
/// Full substructure on { x | f(x) = g(x) }.
EqualizerResult equalizer(const QFunctor& f, const QFunctor& g, Exec ex = Exec::parallel);

struct CoequalizerResult {
  QCategory category;
  QFunctor projection;
  /// Members (object indices of the common target) per class, ascending.
  std::vector<std::vector<std::size_t>> classes;
};
/// Quotient of the common target by the least equivalence with f(x) ~ g(x).
/// Classes are named by their sorted member lists joined with '|'; the hom
/// between classes is the least fixpoint of c <- c0 v (c ∘ c0) where c0 is
/// the join of member homs, i.e. the join over all composable chains that
/// connect through classes.
CoequalizerResult coequalizer(const QFunctor& f, const QFunctor& g, Exec ex = Exec::parallel);

/// A finite diagram in the category of Q-categories.
struct QCatDiagram {
  std::vector<QCategory> nodes;
  struct Arr {
    std::size_t src = 0, dst = 0;
    QFunctor h;  // nodes[src] -> nodes[dst]
  };
  std::vector<Arr> arrows;
};

struct ColimitResult {
  QCategory object;
  std::vector<QFunctor> cocone;  // one leg per node
  CoproductResult parts;         // internal: coproduct of the nodes
  CoequalizerResult quotient;    // internal: gluing coequalizer
};
/// Colimit as a coequalizer of a pair between coproducts.
ColimitResult colimit(const Quantaloid& q, const QCatDiagram& d, Exec ex = Exec::parallel);

/// The unique factorization of a compatible cocone through the colimit;
/// throws NotACone when the legs are not a cocone over the diagram.
QFunctor colimit_mediate(const ColimitResult& c, const std::vector<QFunctor>& legs,
                         const QCategory& target);

}  // namespace quantikit
