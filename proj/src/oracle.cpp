#include "quantikit/oracle.hpp"

#include <algorithm>
#include <array>

#include "quantikit/error.hpp"

namespace quantikit {

std::vector<QFunctor> enumerate_functors(const QCategory& x, const QCategory& y, const Caps& caps,
                                         Exec ex) {
  if (!(x.quantaloid() == y.quantaloid()))
    fail(Errc::TypeMismatch, "functor enumeration needs categories over one quantaloid");
  const std::size_t n = x.size();
  std::vector<std::vector<std::size_t>> choices(n);
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y.extent(j) == x.extent(i)) choices[i].push_back(j);
    candidates *= choices[i].size();
    if (candidates > caps.enumeration_budget)
      fail(Errc::SizeCap, "functor enumeration would inspect more than " +
                              std::to_string(caps.enumeration_budget) + " candidates");
    if (candidates == 0) return {};
  }

  auto decode = [&](std::size_t idx, std::vector<std::size_t>& map) {
    for (std::size_t i = n; i-- > 0;) {
      map[i] = choices[i][idx % choices[i].size()];
      idx /= choices[i].size();
    }
  };
  std::vector<unsigned char> keep(candidates);
  fill_mask(ex, candidates, keep.data(), [&](std::size_t idx) {
    std::vector<std::size_t> map(n);
    decode(idx, map);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!x.quantaloid()
                 .hom(x.extent(a), x.extent(b))
                 .leq(x.hom(a, b), y.hom(map[a], map[b])))
          return false;
    return true;
  });

  std::vector<QFunctor> out;
  for (std::size_t idx = 0; idx < candidates; ++idx) {
    if (!keep[idx]) continue;
    std::vector<std::size_t> map(n);
    decode(idx, map);
    out.push_back(QFunctor::unchecked(x, y, std::move(map)));
  }
  return out;
}

std::vector<ChuTransform> enumerate_chu_transforms(const ChuObject& a, const ChuObject& b,
                                                   const Caps& caps, Exec ex) {
  std::vector<QFunctor> fwd = enumerate_functors(a.dom(), b.dom(), caps, ex);
  std::vector<QFunctor> bwd = enumerate_functors(b.cod(), a.cod(), caps, ex);
  std::vector<ChuTransform> out;
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if (ChuTransform::condition_holds(a, b, f, g))
        out.push_back(ChuTransform::unchecked(a, b, f, g));
  return out;
}

namespace {

OracleReport certified(std::string kind, std::size_t probes, std::size_t cones) {
  OracleReport r;
  r.kind = std::move(kind);
  r.certified = true;
  r.probes = probes;
  r.cones = cones;
  return r;
}

OracleReport invalid_construction(std::string kind, const std::exception& e) {
  OracleReport r;
  r.kind = std::move(kind);
  r.stage = "validation";
  r.failure = e.what();
  return r;
}

// Re-runs the axiom checks on a construction output (which may have been
// produced by a corrupted builder).
void revalidate_category(const QCategory& c) {
  std::vector<std::string> names;
  std::vector<Obj> extents;
  std::vector<Elem> hom(c.size() * c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    names.push_back(c.name(i));
    extents.push_back(c.extent(i));
    for (std::size_t j = 0; j < c.size(); ++j) hom[i * c.size() + j] = c.hom(i, j);
  }
  QCategory::validate(c.quantaloid(), std::move(names), std::move(extents), std::move(hom),
                      Exec::serial);
}

void revalidate_functor(const QFunctor& f) {
  QFunctor::validate(f.source(), f.target(), f.mapping(), Exec::serial);
}

void revalidate_distributor(const QDistributor& d) {
  std::vector<Elem> values(d.source().size() * d.target().size());
  for (std::size_t x = 0; x < d.source().size(); ++x)
    for (std::size_t y = 0; y < d.target().size(); ++y)
      values[x * d.target().size() + y] = d.value(x, y);
  QDistributor::validate(d.source(), d.target(), std::move(values), Exec::serial);
}

void revalidate_chu_transform(const ChuTransform& t) {
  revalidate_functor(t.fwd());
  revalidate_functor(t.bwd());
  if (!ChuTransform::condition_holds(t.from(), t.to(), t.fwd(), t.bwd()))
    fail(Errc::ChuViolation, "structure transform violates the adjointness condition");
}

std::string describe_functor(const QFunctor& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    if (i) s += ", ";
    s += f.source().name(i) + " -> " + f.target().name(f.map(i));
  }
  return s + "}";
}

// Iterates over all tuples drawn from the given per-slot option lists.
template <class Fn>
bool for_each_tuple(const std::vector<std::size_t>& sizes, Fn&& fn) {
  std::vector<std::size_t> pick(sizes.size(), 0);
  for (std::size_t s : sizes)
    if (s == 0) return true;
  while (true) {
    if (!fn(pick)) return false;
    std::size_t i = sizes.size();
    while (i > 0) {
      --i;
      if (++pick[i] < sizes[i]) break;
      pick[i] = 0;
      if (i == 0) return true;
    }
    if (sizes.empty()) return true;
  }
}

}  // namespace

OracleReport check_product(const ProductResult& r, const std::vector<QCategory>& factors,
                           const TestSuite& suite, Exec ex) {
  const std::string kind = "product";
  try {
    revalidate_category(r.category);
    if (r.projections.size() != factors.size())
      fail(Errc::ValidationError, "one projection per factor required");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      revalidate_functor(r.projections[i]);
      if (!(r.projections[i].source() == r.category && r.projections[i].target() == factors[i]))
        fail(Errc::ValidationError, "projection " + std::to_string(i) + " has wrong endpoints");
    }
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const QCategory& t : suite.probes) {
    std::vector<std::vector<QFunctor>> legs(factors.size());
    std::vector<std::size_t> sizes(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      legs[i] = enumerate_functors(t, factors[i], suite.caps, ex);
      sizes[i] = legs[i].size();
    }
    std::vector<QFunctor> into = enumerate_functors(t, r.category, suite.caps, ex);
    OracleReport bad;
    bool ok = for_each_tuple(sizes, [&](const std::vector<std::size_t>& pick) {
      ++cones;
      std::size_t found = 0;
      for (const QFunctor& m : into) {
        bool matches = true;
        for (std::size_t i = 0; i < factors.size() && matches; ++i)
          if (!(compose(r.projections[i], m) == legs[i][pick[i]])) matches = false;
        if (matches && ++found > 1) break;
      }
      if (found == 1) return true;
      bad.kind = kind;
      bad.stage = "cone";
      bad.failure = found == 0 ? "no mediating functor for a probe cone"
                               : "mediating functor is not unique";
      for (std::size_t i = 0; i < factors.size(); ++i)
        bad.witness_functors.push_back(legs[i][pick[i]]);
      return false;
    });
    if (!ok) {
      bad.probes = suite.probes.size();
      bad.cones = cones;
      return bad;
    }
  }
  return certified(kind, suite.probes.size(), cones);
}

OracleReport check_coproduct(const CoproductResult& r, const std::vector<QCategory>& parts,
                             const TestSuite& suite, Exec ex) {
  const std::string kind = "coproduct";
  try {
    revalidate_category(r.category);
    if (r.injections.size() != parts.size())
      fail(Errc::ValidationError, "one injection per part required");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      revalidate_functor(r.injections[i]);
      if (!(r.injections[i].source() == parts[i] && r.injections[i].target() == r.category))
        fail(Errc::ValidationError, "injection " + std::to_string(i) + " has wrong endpoints");
    }
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const QCategory& t : suite.probes) {
    std::vector<std::vector<QFunctor>> legs(parts.size());
    std::vector<std::size_t> sizes(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      legs[i] = enumerate_functors(parts[i], t, suite.caps, ex);
      sizes[i] = legs[i].size();
    }
    std::vector<QFunctor> outof = enumerate_functors(r.category, t, suite.caps, ex);
    OracleReport bad;
    bool ok = for_each_tuple(sizes, [&](const std::vector<std::size_t>& pick) {
      ++cones;
      std::size_t found = 0;
      for (const QFunctor& m : outof) {
        bool matches = true;
        for (std::size_t i = 0; i < parts.size() && matches; ++i)
          if (!(compose(m, r.injections[i]) == legs[i][pick[i]])) matches = false;
        if (matches && ++found > 1) break;
      }
      if (found == 1) return true;
      bad.kind = kind;
      bad.stage = "cone";
      bad.failure = found == 0 ? "no mediating functor for a probe cocone"
                               : "mediating functor is not unique";
      for (std::size_t i = 0; i < parts.size(); ++i)
        bad.witness_functors.push_back(legs[i][pick[i]]);
      return false;
    });
    if (!ok) {
      bad.probes = suite.probes.size();
      bad.cones = cones;
      return bad;
    }
  }
  return certified(kind, suite.probes.size(), cones);
}

OracleReport check_equalizer(const EqualizerResult& r, const QFunctor& f, const QFunctor& g,
                             const TestSuite& suite, Exec ex) {
  const std::string kind = "equalizer";
  try {
    revalidate_category(r.category);
    revalidate_functor(r.inclusion);
    if (!(r.inclusion.source() == r.category && r.inclusion.target() == f.source()))
      fail(Errc::ValidationError, "inclusion has wrong endpoints");
    if (!(compose(f, r.inclusion) == compose(g, r.inclusion)))
      fail(Errc::ValidationError, "inclusion does not equalize the pair");
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const QCategory& t : suite.probes) {
    std::vector<QFunctor> into = enumerate_functors(t, r.category, suite.caps, ex);
    for (const QFunctor& c : enumerate_functors(t, f.source(), suite.caps, ex)) {
      if (!(compose(f, c) == compose(g, c))) continue;
      ++cones;
      std::size_t found = 0;
      for (const QFunctor& m : into)
        if (compose(r.inclusion, m) == c && ++found > 1) break;
      if (found != 1) {
        OracleReport bad;
        bad.kind = kind;
        bad.stage = "cone";
        bad.failure = found == 0 ? "equalizing functor " + describe_functor(c) + " does not factor"
                                 : "factorization of " + describe_functor(c) + " is not unique";
        bad.witness_functors.push_back(c);
        bad.probes = suite.probes.size();
        bad.cones = cones;
        return bad;
      }
    }
  }
  return certified(kind, suite.probes.size(), cones);
}

OracleReport check_coequalizer(const CoequalizerResult& r, const QFunctor& f, const QFunctor& g,
                               const TestSuite& suite, Exec ex) {
  const std::string kind = "coequalizer";
  try {
    revalidate_category(r.category);
    revalidate_functor(r.projection);
    if (!(r.projection.source() == f.target() && r.projection.target() == r.category))
      fail(Errc::ValidationError, "projection has wrong endpoints");
    if (!(compose(r.projection, f) == compose(r.projection, g)))
      fail(Errc::ValidationError, "projection does not coequalize the pair");
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const QCategory& t : suite.probes) {
    std::vector<QFunctor> outof = enumerate_functors(r.category, t, suite.caps, ex);
    for (const QFunctor& h : enumerate_functors(f.target(), t, suite.caps, ex)) {
      if (!(compose(h, f) == compose(h, g))) continue;
      ++cones;
      std::size_t found = 0;
      for (const QFunctor& m : outof)
        if (compose(m, r.projection) == h && ++found > 1) break;
      if (found != 1) {
        OracleReport bad;
        bad.kind = kind;
        bad.stage = "cone";
        bad.failure = found == 0
                          ? "coequalizing functor " + describe_functor(h) + " does not factor"
                          : "factorization of " + describe_functor(h) + " is not unique";
        bad.witness_functors.push_back(h);
        bad.probes = suite.probes.size();
        bad.cones = cones;
        return bad;
      }
    }
  }
  return certified(kind, suite.probes.size(), cones);
}

OracleReport check_chu_product(const ChuProductResult& r, const std::vector<ChuObject>& family,
                               const TestSuite& suite, Exec ex) {
  const std::string kind = "chu-product";
  try {
    revalidate_distributor(r.object.dist);
    if (r.projections.size() != family.size())
      fail(Errc::ValidationError, "one projection per factor required");
    for (const auto& p : r.projections) revalidate_chu_transform(p);
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const ChuObject& t : suite.chu_probes) {
    std::vector<std::vector<ChuTransform>> legs(family.size());
    std::vector<std::size_t> sizes(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      legs[i] = enumerate_chu_transforms(t, family[i], suite.caps, ex);
      sizes[i] = legs[i].size();
    }
    std::vector<ChuTransform> into = enumerate_chu_transforms(t, r.object, suite.caps, ex);
    OracleReport bad;
    bool ok = for_each_tuple(sizes, [&](const std::vector<std::size_t>& pick) {
      ++cones;
      std::size_t found = 0;
      for (const ChuTransform& m : into) {
        bool matches = true;
        for (std::size_t i = 0; i < family.size() && matches; ++i)
          if (!(compose(r.projections[i], m) == legs[i][pick[i]])) matches = false;
        if (matches && ++found > 1) break;
      }
      if (found == 1) return true;
      bad.kind = kind;
      bad.stage = "cone";
      bad.failure =
          found == 0 ? "no mediating transform for a probe cone" : "mediating transform not unique";
      for (std::size_t i = 0; i < family.size(); ++i)
        bad.witness_transforms.push_back(legs[i][pick[i]]);
      return false;
    });
    if (!ok) {
      bad.probes = suite.chu_probes.size();
      bad.cones = cones;
      return bad;
    }
  }
  return certified(kind, suite.chu_probes.size(), cones);
}

OracleReport check_chu_coproduct(const ChuCoproductResult& r, const std::vector<ChuObject>& family,
                                 const TestSuite& suite, Exec ex) {
  const std::string kind = "chu-coproduct";
  try {
    revalidate_distributor(r.object.dist);
    if (r.injections.size() != family.size())
      fail(Errc::ValidationError, "one injection per part required");
    for (const auto& p : r.injections) revalidate_chu_transform(p);
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const ChuObject& t : suite.chu_probes) {
    std::vector<std::vector<ChuTransform>> legs(family.size());
    std::vector<std::size_t> sizes(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      legs[i] = enumerate_chu_transforms(family[i], t, suite.caps, ex);
      sizes[i] = legs[i].size();
    }
    std::vector<ChuTransform> outof = enumerate_chu_transforms(r.object, t, suite.caps, ex);
    OracleReport bad;
    bool ok = for_each_tuple(sizes, [&](const std::vector<std::size_t>& pick) {
      ++cones;
      std::size_t found = 0;
      for (const ChuTransform& m : outof) {
        bool matches = true;
        for (std::size_t i = 0; i < family.size() && matches; ++i)
          if (!(compose(m, r.injections[i]) == legs[i][pick[i]])) matches = false;
        if (matches && ++found > 1) break;
      }
      if (found == 1) return true;
      bad.kind = kind;
      bad.stage = "cone";
      bad.failure = found == 0 ? "no mediating transform for a probe cocone"
                               : "mediating transform not unique";
      for (std::size_t i = 0; i < family.size(); ++i)
        bad.witness_transforms.push_back(legs[i][pick[i]]);
      return false;
    });
    if (!ok) {
      bad.probes = suite.chu_probes.size();
      bad.cones = cones;
      return bad;
    }
  }
  return certified(kind, suite.chu_probes.size(), cones);
}

OracleReport check_chu_equalizer(const ChuEqualizerResult& r, const ChuTransform& t1,
                                 const ChuTransform& t2, const TestSuite& suite, Exec ex) {
  const std::string kind = "chu-equalizer";
  try {
    revalidate_distributor(r.object.dist);
    revalidate_chu_transform(r.inclusion);
    if (!(compose(t1, r.inclusion) == compose(t2, r.inclusion)))
      fail(Errc::ValidationError, "inclusion does not equalize the pair");
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const ChuObject& t : suite.chu_probes) {
    std::vector<ChuTransform> into = enumerate_chu_transforms(t, r.object, suite.caps, ex);
    for (const ChuTransform& c : enumerate_chu_transforms(t, t1.from(), suite.caps, ex)) {
      if (!(compose(t1, c) == compose(t2, c))) continue;
      ++cones;
      std::size_t found = 0;
      for (const ChuTransform& m : into)
        if (compose(r.inclusion, m) == c && ++found > 1) break;
      if (found != 1) {
        OracleReport bad;
        bad.kind = kind;
        bad.stage = "cone";
        bad.failure = found == 0 ? "equalizing transform does not factor"
                                 : "factorization is not unique";
        bad.witness_transforms.push_back(c);
        bad.probes = suite.chu_probes.size();
        bad.cones = cones;
        return bad;
      }
    }
  }
  return certified(kind, suite.chu_probes.size(), cones);
}

OracleReport check_chu_coequalizer(const ChuCoequalizerResult& r, const ChuTransform& t1,
                                   const ChuTransform& t2, const TestSuite& suite, Exec ex) {
  const std::string kind = "chu-coequalizer";
  try {
    revalidate_distributor(r.object.dist);
    revalidate_chu_transform(r.projection);
    if (!(compose(r.projection, t1) == compose(r.projection, t2)))
      fail(Errc::ValidationError, "projection does not coequalize the pair");
  } catch (const std::exception& e) {
    return invalid_construction(kind, e);
  }

  std::size_t cones = 0;
  for (const ChuObject& t : suite.chu_probes) {
    std::vector<ChuTransform> outof = enumerate_chu_transforms(r.object, t, suite.caps, ex);
    for (const ChuTransform& h : enumerate_chu_transforms(t1.to(), t, suite.caps, ex)) {
      if (!(compose(h, t1) == compose(h, t2))) continue;
      ++cones;
      std::size_t found = 0;
      for (const ChuTransform& m : outof)
        if (compose(m, r.projection) == h && ++found > 1) break;
      if (found != 1) {
        OracleReport bad;
        bad.kind = kind;
        bad.stage = "cone";
        bad.failure = found == 0 ? "coequalizing transform does not factor"
                                 : "factorization is not unique";
        bad.witness_transforms.push_back(h);
        bad.probes = suite.chu_probes.size();
        bad.cones = cones;
        return bad;
      }
    }
  }
  return certified(kind, suite.chu_probes.size(), cones);
}

OracleReport check_graph_adjunction(const QFunctor& f, Exec) {
  OracleReport r;
  r.kind = "graph-adjunction";
  FunctorGraphs g = graphs(f);
  const bool unit = dist_leq(QDistributor::hom(f.source()), compose(g.upper, g.lower));
  const bool counit = dist_leq(compose(g.lower, g.upper), QDistributor::hom(f.target()));
  if (unit && counit) {
    r.certified = true;
    r.cones = 2;
  } else {
    r.stage = "validation";
    r.failure = unit ? "counit inequality fails" : "unit inequality fails";
    r.witness_functors.push_back(f);
  }
  return r;
}

OracleReport check_generating(const TestSuite& suite, const GeneratorFamily& gens, Exec ex) {
  OracleReport r;
  r.kind = "generating";
  std::size_t pairs = 0;
  std::array<std::size_t, 3> cases{0, 0, 0};
  for (const ChuObject& a : suite.chu_probes)
    for (const ChuObject& b : suite.chu_probes) {
      std::vector<ChuTransform> ts = enumerate_chu_transforms(a, b, suite.caps, ex);
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
          ++pairs;
          Separation s;
          try {
            s = separate(ts[i], ts[j], gens, suite.caps, ex);
          } catch (const std::exception& e) {
            r.stage = "cone";
            r.failure = std::string("separation failed: ") + e.what();
            r.witness_transforms = {ts[i], ts[j]};
            r.stats["pairs"] = pairs;
            return r;
          }
          if (compose(ts[i], s.m) == compose(ts[j], s.m)) {
            r.stage = "cone";
            r.failure = "separating morphism does not distinguish the pair";
            r.witness_transforms = {ts[i], ts[j], s.m};
            r.stats["pairs"] = pairs;
            return r;
          }
          cases[static_cast<std::size_t>(s.case_used - 1)]++;
        }
    }
  r.certified = true;
  r.probes = suite.chu_probes.size();
  r.cones = pairs;
  r.stats["pairs"] = pairs;
  r.stats["case1"] = cases[0];
  r.stats["case2"] = cases[1];
  r.stats["case3"] = cases[2];
  return r;
}

OracleReport check_dom_initial(const DomLiftResult& lift, const ChuDiagram& d,
                               const std::vector<QFunctor>& cone, const TestSuite& suite, Exec ex) {
  OracleReport r;
  r.kind = "dom-initial";
  std::size_t checked = 0;
  for (const ChuObject& probe : suite.chu_probes) {
    // probe cones over the diagram
    std::vector<std::vector<ChuTransform>> legs(d.nodes.size());
    std::vector<std::size_t> sizes(d.nodes.size());
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      legs[j] = enumerate_chu_transforms(probe, d.nodes[j], suite.caps, ex);
      sizes[j] = legs[j].size();
    }
    std::vector<QFunctor> tips = enumerate_functors(probe.dom(), lift.object.dom(), suite.caps, ex);
    std::vector<ChuTransform> into = enumerate_chu_transforms(probe, lift.object, suite.caps, ex);

    OracleReport bad;
    bool ok = for_each_tuple(sizes, [&](const std::vector<std::size_t>& pick) {
      for (const auto& a : d.arrows)
        if (!(compose(a.t, legs[a.src][pick[a.src]]) == legs[a.dst][pick[a.dst]])) return true;
      for (const QFunctor& t : tips) {
        bool commutes = true;
        for (std::size_t j = 0; j < d.nodes.size() && commutes; ++j)
          if (!(compose(cone[j], t) == legs[j][pick[j]].fwd())) commutes = false;
        if (!commutes) continue;
        ++checked;
        std::size_t found = 0;
        for (const ChuTransform& m : into) {
          if (!(m.fwd() == t)) continue;
          bool matches = true;
          for (std::size_t j = 0; j < d.nodes.size() && matches; ++j)
            if (!(compose(lift.cone[j], m) == legs[j][pick[j]])) matches = false;
          if (matches && ++found > 1) break;
        }
        if (found != 1) {
          bad.kind = r.kind;
          bad.stage = "cone";
          bad.failure = found == 0 ? "no lifting of a structured probe cone"
                                   : "lifting of a structured probe cone is not unique";
          for (std::size_t j = 0; j < d.nodes.size(); ++j)
            bad.witness_transforms.push_back(legs[j][pick[j]]);
          bad.witness_functors.push_back(t);
          return false;
        }
      }
      return true;
    });
    if (!ok) {
      bad.probes = suite.chu_probes.size();
      bad.cones = checked;
      return bad;
    }
  }
  r.certified = true;
  r.probes = suite.chu_probes.size();
  r.cones = checked;
  return r;
}

}  // namespace quantikit
