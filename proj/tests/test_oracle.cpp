#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "quantikit/error.hpp"
#include "quantikit/oracle.hpp"

using namespace quantikit;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::BadParameter;
}

QCategory poset(const Quantaloid& two, std::vector<std::string> names,
                const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  const std::size_t n = names.size();
  std::vector<Elem> hom(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) hom[i * n + i] = 1;
  for (auto [a, b] : rel) hom[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (hom[i * n + k] && hom[k * n + j]) hom[i * n + j] = 1;
  return QCategory::validate(two, std::move(names), std::vector<Obj>(n, 0), std::move(hom));
}

TestSuite small_suite(const Quantaloid& two) {
  TestSuite s;
  s.q = two;
  s.probes = {QCategory::empty(two), QCategory::singleton(two, 0, "pt"),
              poset(two, {"c1", "c2"}, {{0, 1}}), QCategory::discrete(two, {"d1", "d2"}, {0, 0})};
  for (const QCategory& p : s.probes)
    if (p.size() > 0) s.chu_probes.push_back(ChuObject{QDistributor::hom(p)});
  return s;
}

}  // namespace

TEST_CASE("functor enumeration counts") {
  Quantaloid two = Quantaloid::builtin_two();
  QCategory c2 = poset(two, {"x", "y"}, {{0, 1}});
  // the empty source admits exactly one functor
  CHECK(enumerate_functors(QCategory::empty(two), c2).size() == 1);
  // 2-chain to 2-chain: the three monotone maps out of four candidates
  CHECK(enumerate_functors(c2, c2).size() == 3);
  // extent mismatch everywhere: no functors
  Quantaloid d2 = diagonal(two).dq;
  QCategory a = QCategory::discrete(d2, {"x"}, {0});
  QCategory b = QCategory::discrete(d2, {"y"}, {1});
  CHECK(enumerate_functors(a, b).empty());
}

TEST_CASE("functor enumeration respects the budget cap") {
  Quantaloid two = Quantaloid::builtin_two();
  QCategory big = QCategory::indiscrete(two, {"a", "b", "c", "d"}, {0, 0, 0, 0});
  Caps caps;
  caps.enumeration_budget = 100;  // 4^4 = 256 candidates
  CHECK(code_of([&] { enumerate_functors(big, big, caps); }) == Errc::SizeCap);
}

TEST_CASE("products certify on the probe suite") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory c2 = poset(two, {"x", "y"}, {{0, 1}});
  QCategory d2 = QCategory::discrete(two, {"u", "v"}, {0, 0});
  std::vector<QCategory> factors{c2, d2};
  OracleReport r = check_product(product(two, factors), factors, suite);
  CHECK(r.certified);
  CHECK(r.cones > 0);
}

TEST_CASE("the empty product is certified as terminal") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  OracleReport r = check_product(product(two, {}), {}, suite);
  CHECK(r.certified);
  // terminal: exactly one functor from every probe, so one cone each
  CHECK(r.cones == suite.probes.size());
}

TEST_CASE("corrupted product homs produce a counterexample cone") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory c2 = poset(two, {"x", "y"}, {{0, 1}});
  QCategory d2 = QCategory::discrete(two, {"u", "v"}, {0, 0});
  std::vector<QCategory> factors{c2, d2};
  ProductResult good = product(two, factors);

  // discretize the product homs: still a category, no longer a product
  ProductResult mutant = good;
  {
    const QCategory& c = good.category;
    std::vector<Elem> hom(c.size() * c.size());
    std::vector<std::string> names;
    std::vector<Obj> extents;
    for (std::size_t i = 0; i < c.size(); ++i) {
      names.push_back(c.name(i));
      extents.push_back(c.extent(i));
      for (std::size_t j = 0; j < c.size(); ++j)
        hom[i * c.size() + j] = (i == j) ? two.identity(0) : 0;
    }
    mutant.category = QCategory::unchecked(two, names, extents, hom);
    for (std::size_t i = 0; i < 2; ++i)
      mutant.projections[i] =
          QFunctor::unchecked(mutant.category, factors[i], good.projections[i].mapping());
  }
  OracleReport r = check_product(mutant, factors, suite);
  CHECK_FALSE(r.certified);
  CHECK(r.stage == "cone");
  CHECK(r.failure.find("no mediating") != std::string::npos);
  CHECK_FALSE(r.witness_functors.empty());
}

TEST_CASE("coproducts certify; corrupted cross-homs are caught") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory s1 = QCategory::singleton(two, 0, "s");
  QCategory c2 = poset(two, {"x", "y"}, {{0, 1}});
  std::vector<QCategory> parts{s1, c2};
  CoproductResult good = coproduct(two, parts);
  CHECK(check_coproduct(good, parts, suite).certified);

  // raise the cross-homs to top: the injections survive but mediation breaks
  CoproductResult mutant = good;
  {
    const QCategory& c = good.category;
    std::vector<Elem> hom(c.size() * c.size());
    std::vector<std::string> names;
    std::vector<Obj> extents;
    for (std::size_t i = 0; i < c.size(); ++i) {
      names.push_back(c.name(i));
      extents.push_back(c.extent(i));
      for (std::size_t j = 0; j < c.size(); ++j) hom[i * c.size() + j] = std::max<Elem>(c.hom(i, j), 1);
    }
    mutant.category = QCategory::unchecked(two, names, extents, hom);
    for (std::size_t i = 0; i < 2; ++i)
      mutant.injections[i] =
          QFunctor::unchecked(parts[i], mutant.category, good.injections[i].mapping());
  }
  OracleReport r = check_coproduct(mutant, parts, suite);
  CHECK_FALSE(r.certified);
}

TEST_CASE("equalizers certify; dropping an object breaks existence") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory d2 = QCategory::discrete(two, {"x", "y"}, {0, 0});
  QCategory c2 = poset(two, {"a", "b"}, {{0, 1}});
  QFunctor f = QFunctor::validate(d2, c2, {0, 1});
  QFunctor g = QFunctor::validate(d2, c2, {0, 1});
  EqualizerResult good = equalizer(f, g);
  CHECK(check_equalizer(good, f, g, suite).certified);

  EqualizerResult mutant = good;  // keep only the first object
  mutant.category = QCategory::validate(two, {"x"}, {0}, {good.category.hom(0, 0)});
  mutant.inclusion = QFunctor::unchecked(mutant.category, d2, {0});
  OracleReport r = check_equalizer(mutant, f, g, suite);
  CHECK_FALSE(r.certified);
  CHECK(r.stage == "cone");
  CHECK(r.failure.find("does not factor") != std::string::npos);
}

TEST_CASE("coequalizers certify; skipping the chain fixpoint is caught") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory y = poset(two, {"p", "q", "r", "s"}, {{0, 1}, {2, 3}});
  QCategory tip = QCategory::singleton(two, 0, "t");
  QFunctor f = QFunctor::validate(tip, y, {1});
  QFunctor g = QFunctor::validate(tip, y, {2});
  CoequalizerResult good = coequalizer(f, g);
  CHECK(check_coequalizer(good, f, g, suite).certified);

  // replace the hom fixpoint by the one-step joins: transitivity breaks
  CoequalizerResult mutant = good;
  {
    const QCategory& c = good.category;
    const std::size_t m = c.size();
    std::vector<Elem> hom(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Elem acc = 0;
        for (std::size_t i : good.classes[a])
          for (std::size_t j : good.classes[b]) acc = std::max(acc, y.hom(i, j));
        hom[a * m + b] = acc;
      }
    std::vector<std::string> names;
    std::vector<Obj> extents;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(c.name(i));
      extents.push_back(c.extent(i));
    }
    mutant.category = QCategory::unchecked(two, names, extents, hom);
    mutant.projection = QFunctor::unchecked(y, mutant.category, good.projection.mapping());
  }
  OracleReport r = check_coequalizer(mutant, f, g, suite);
  CHECK_FALSE(r.certified);
  CHECK(r.stage == "validation");
}

TEST_CASE("chu products certify; a corrupted value table is caught") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory p = poset(two, {"x", "y"}, {{0, 1}});
  QCategory s = QCategory::singleton(two, 0, "s");
  std::vector<ChuObject> family{ChuObject{QDistributor::hom(p)},
                                ChuObject{QDistributor::validate(s, s, {1})}};
  ChuProductResult good = chu_product(two, family);
  CHECK(check_chu_product(good, family, suite).certified);

  ChuCoproductResult cogood = chu_coproduct(two, family);
  CHECK(check_chu_coproduct(cogood, family, suite).certified);

  // flip one value of the product table
  ChuProductResult mutant = good;
  {
    const QDistributor& d = good.object.dist;
    std::vector<Elem> values(d.source().size() * d.target().size());
    for (std::size_t a = 0; a < d.source().size(); ++a)
      for (std::size_t b = 0; b < d.target().size(); ++b)
        values[a * d.target().size() + b] = d.value(a, b);
    values[0] = values[0] ? 0 : 1;
    mutant.object = ChuObject{QDistributor::unchecked(d.source(), d.target(), values)};
    for (std::size_t i = 0; i < 2; ++i)
      mutant.projections[i] = ChuTransform::unchecked(mutant.object, family[i],
                                                      good.projections[i].fwd(),
                                                      good.projections[i].bwd());
  }
  OracleReport r = check_chu_product(mutant, family, suite);
  CHECK_FALSE(r.certified);
}

TEST_CASE("chu equalizers and coequalizers certify") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory p = poset(two, {"x", "y"}, {{0, 1}});
  ChuObject ia{QDistributor::hom(p)};
  std::vector<ChuTransform> ts = enumerate_chu_transforms(ia, ia);
  REQUIRE(ts.size() == 2);
  CHECK(check_chu_equalizer(chu_equalizer(ts[0], ts[1]), ts[0], ts[1], suite).certified);
  CHECK(check_chu_coequalizer(chu_coequalizer(ts[0], ts[1]), ts[0], ts[1], suite).certified);
}

TEST_CASE("graph adjunction certificates") {
  Quantaloid two = Quantaloid::builtin_two();
  QCategory p = poset(two, {"x", "y"}, {{0, 1}});
  QCategory r = poset(two, {"u", "v", "w"}, {{0, 1}, {1, 2}});
  CHECK(check_graph_adjunction(QFunctor::identity(p)).certified);
  for (const QFunctor& f : enumerate_functors(p, r)) CHECK(check_graph_adjunction(f).certified);
}

TEST_CASE("generating certificate on a small suite") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  GeneratorFamily gens = GeneratorFamily::build(two);
  OracleReport r = check_generating(suite, gens);
  CHECK(r.certified);
  CHECK(r.stats["pairs"] > 0);

  // a single-object suite with one transform is vacuously generating
  TestSuite tiny;
  tiny.q = two;
  QCategory s = QCategory::singleton(two, 0, "s");
  tiny.chu_probes = {ChuObject{QDistributor::validate(s, QCategory::empty(two), {})}};
  OracleReport rv = check_generating(tiny, gens);
  CHECK(rv.certified);
  CHECK(rv.stats["pairs"] == 0);
}

TEST_CASE("dom-initial certificate for the product diagram") {
  Quantaloid two = Quantaloid::builtin_two();
  TestSuite suite = small_suite(two);
  QCategory p = poset(two, {"x", "y"}, {{0, 1}});
  QCategory s = QCategory::singleton(two, 0, "s");
  std::vector<ChuObject> family{ChuObject{QDistributor::hom(p)},
                                ChuObject{QDistributor::validate(s, s, {1})}};
  ChuProductResult prod = chu_product(two, family);
  ChuDiagram d;
  d.nodes = family;
  std::vector<QFunctor> cone{prod.projections[0].fwd(), prod.projections[1].fwd()};
  DomLiftResult lift = dom_initial_lift(d, prod.object.dom(), cone);
  OracleReport r = check_dom_initial(lift, d, cone, suite);
  CHECK(r.certified);
  CHECK(r.cones > 0);
}
