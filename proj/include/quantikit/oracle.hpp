#pragma once

#include <map>

#include "quantikit/qchu.hpp"

namespace quantikit {

/// Probe objects for the brute-force universal-property certification.
struct TestSuite {
  Quantaloid q;
  std::vector<QCategory> probes;
  std::vector<ChuObject> chu_probes;
  Caps caps = caps_from_env();
};

/// Every functor X -> Y: extent-preserving maps filtered by monotonicity,
/// in lexicographic order over the source objects. SizeCap when the raw
/// candidate space exceeds the enumeration budget.
std::vector<QFunctor> enumerate_functors(const QCategory& x, const QCategory& y,
                                         const Caps& caps = caps_from_env(),
                                         Exec ex = Exec::parallel);

/// Every transform a -> b, lexicographic over (forward, backward) pairs.
std::vector<ChuTransform> enumerate_chu_transforms(const ChuObject& a, const ChuObject& b,
                                                   const Caps& caps = caps_from_env(),
                                                   Exec ex = Exec::parallel);

/// Outcome of a brute-force certification run. When not certified, `stage`
/// tells whether the construction itself failed validation or a probe cone
/// failed to factor uniquely, and the witness fields carry the offending
/// (co)cone.
struct OracleReport {
  std::string kind;
  bool certified = false;
  std::size_t probes = 0;
  std::size_t cones = 0;
  std::string stage;
  std::string failure;
  std::vector<QFunctor> witness_functors;
  std::vector<ChuTransform> witness_transforms;
  std::map<std::string, std::size_t> stats;
};

OracleReport check_product(const ProductResult& r, const std::vector<QCategory>& factors,
                           const TestSuite& suite, Exec ex = Exec::parallel);
OracleReport check_coproduct(const CoproductResult& r, const std::vector<QCategory>& parts,
                             const TestSuite& suite, Exec ex = Exec::parallel);
OracleReport check_equalizer(const EqualizerResult& r, const QFunctor& f, const QFunctor& g,
                             const TestSuite& suite, Exec ex = Exec::parallel);
OracleReport check_coequalizer(const CoequalizerResult& r, const QFunctor& f, const QFunctor& g,
                               const TestSuite& suite, Exec ex = Exec::parallel);

OracleReport check_chu_product(const ChuProductResult& r, const std::vector<ChuObject>& family,
                               const TestSuite& suite, Exec ex = Exec::parallel);
OracleReport check_chu_coproduct(const ChuCoproductResult& r, const std::vector<ChuObject>& family,
                                 const TestSuite& suite, Exec ex = Exec::parallel);
OracleReport check_chu_equalizer(const ChuEqualizerResult& r, const ChuTransform& t1,
                                 const ChuTransform& t2, const TestSuite& suite,
                                 Exec ex = Exec::parallel);
OracleReport check_chu_coequalizer(const ChuCoequalizerResult& r, const ChuTransform& t1,
                                   const ChuTransform& t2, const TestSuite& suite,
                                   Exec ex = Exec::parallel);

/// Verifies a <= upper ∘ lower and lower ∘ upper <= b for the graph pair
/// of f.
OracleReport check_graph_adjunction(const QFunctor& f, Exec ex = Exec::parallel);

/// Enumerates every distinct parallel pair of transforms between suite
/// objects and verifies that separate() produces a morphism with distinct
/// composites. stats reports pair and per-case counts.
OracleReport check_generating(const TestSuite& suite, const GeneratorFamily& gens,
                              Exec ex = Exec::parallel);

/// Certifies initiality of a lifted cone: for every probe cone over the
/// diagram and every functor t into the tip commuting with the given legs,
/// exactly one transform with forward part t factors the probe cone.
OracleReport check_dom_initial(const DomLiftResult& lift, const ChuDiagram& d,
                               const std::vector<QFunctor>& cone, const TestSuite& suite,
                               Exec ex = Exec::parallel);

}  // namespace quantikit
