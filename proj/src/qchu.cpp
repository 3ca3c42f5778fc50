#include "quantikit/qchu.hpp"

#include <algorithm>

#include "quantikit/error.hpp"

namespace quantikit {

ChuTransform ChuTransform::unchecked(ChuObject from, ChuObject to, QFunctor fwd, QFunctor bwd) {
  ChuTransform t;
  t.from_ = std::move(from);
  t.to_ = std::move(to);
  t.fwd_ = std::move(fwd);
  t.bwd_ = std::move(bwd);
  return t;
}

ChuTransform ChuTransform::identity(const ChuObject& o) {
  return unchecked(o, o, QFunctor::identity(o.dom()), QFunctor::identity(o.cod()));
}

bool ChuTransform::condition_holds(const ChuObject& from, const ChuObject& to, const QFunctor& fwd,
                                   const QFunctor& bwd) {
  for (std::size_t x = 0; x < from.dom().size(); ++x)
    for (std::size_t z = 0; z < to.cod().size(); ++z)
      if (to.dist.value(fwd.map(x), z) != from.dist.value(x, bwd.map(z))) return false;
  return true;
}

ChuTransform ChuTransform::validate(ChuObject from, ChuObject to, QFunctor fwd, QFunctor bwd,
                                    const Caps& caps, Exec ex) {
  if (!(fwd.source() == from.dom()) || !(fwd.target() == to.dom()))
    fail(Errc::TypeMismatch, "forward part must map the source domain to the target domain");
  if (!(bwd.source() == to.cod()) || !(bwd.target() == from.cod()))
    fail(Errc::TypeMismatch, "backward part must map the target codomain to the source codomain");

  const std::size_t nx = from.dom().size(), nz = to.cod().size();
  std::size_t w = 0;
  bool ok = check_all(ex, nx * nz, [&](std::size_t i) {
    const std::size_t z = i % nz, x = i / nz;
    return to.dist.value(fwd.map(x), z) == from.dist.value(x, bwd.map(z));
  }, &w);
  if (!ok) {
    const std::size_t z = w % nz, x = w / nz;
    fail(Errc::ChuViolation, "condition fails at (x=" + from.dom().name(x) + ", z=" +
                                 to.cod().name(z) + ")");
  }

  // dual route through the presheaf square, when it fits
  if (PresheafCategory::candidate_count(from.dom()) <= caps.presheaf_objects &&
      PresheafCategory::candidate_count(to.dom()) <= caps.presheaf_objects) {
    PresheafCategory px = PresheafCategory::build(from.dom(), caps, ex);
    PresheafCategory py = PresheafCategory::build(to.dom(), caps, ex);
    QFunctor fstar = pullback(fwd, py, px);
    QFunctor psit = transpose(to.dist, py);
    QFunctor phit = transpose(from.dist, px);
    for (std::size_t z = 0; z < nz; ++z)
      if (fstar.map(psit.map(z)) != phit.map(bwd.map(z)))
        fail(Errc::FormulationMismatch,
             "presheaf square disagrees with the elementwise condition at z=" + to.cod().name(z));
  }

  return unchecked(std::move(from), std::move(to), std::move(fwd), std::move(bwd));
}

ChuTransform compose(const ChuTransform& outer, const ChuTransform& inner) {
  if (!(inner.to() == outer.from())) fail(Errc::TypeMismatch, "transforms do not compose");
  return ChuTransform::unchecked(inner.from(), outer.to(), compose(outer.fwd(), inner.fwd()),
                                 compose(inner.bwd(), outer.bwd()));
}

namespace {

// coproduct object index -> (part, object within part)
std::vector<std::pair<std::size_t, std::size_t>> coproduct_origin(const CoproductResult& c) {
  std::vector<std::pair<std::size_t, std::size_t>> origin(c.category.size());
  for (std::size_t i = 0; i < c.injections.size(); ++i)
    for (std::size_t x = 0; x < c.injections[i].source().size(); ++x)
      origin[c.injections[i].map(x)] = {i, x};
  return origin;
}

}  // namespace

ChuProductResult chu_product(const Quantaloid& q, const std::vector<ChuObject>& family, Exec ex) {
  std::vector<QCategory> doms, cods;
  for (const auto& o : family) {
    doms.push_back(o.dom());
    cods.push_back(o.cod());
  }
  ProductResult prod = product(q, doms, ex);
  CoproductResult coprod = coproduct(q, cods, ex);
  auto origin = coproduct_origin(coprod);

  const std::size_t nx = prod.category.size(), ny = coprod.category.size();
  std::vector<Elem> values(nx * ny);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      auto [i, y] = origin[b];
      values[a * ny + b] = family[i].dist.value(prod.projections[i].map(a), y);
    }

  ChuProductResult out;
  out.object = ChuObject{QDistributor::validate(prod.category, coprod.category, std::move(values), ex)};
  for (std::size_t i = 0; i < family.size(); ++i)
    out.projections.push_back(ChuTransform::validate(out.object, family[i], prod.projections[i],
                                                     coprod.injections[i]));
  return out;
}

ChuCoproductResult chu_coproduct(const Quantaloid& q, const std::vector<ChuObject>& family, Exec ex) {
  std::vector<QCategory> doms, cods;
  for (const auto& o : family) {
    doms.push_back(o.dom());
    cods.push_back(o.cod());
  }
  CoproductResult coprod = coproduct(q, doms, ex);
  ProductResult prod = product(q, cods, ex);
  auto origin = coproduct_origin(coprod);

  const std::size_t nx = coprod.category.size(), ny = prod.category.size();
  std::vector<Elem> values(nx * ny);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      auto [i, x] = origin[a];
      values[a * ny + b] = family[i].dist.value(x, prod.projections[i].map(b));
    }

  ChuCoproductResult out;
  out.object = ChuObject{QDistributor::validate(coprod.category, prod.category, std::move(values), ex)};
  for (std::size_t i = 0; i < family.size(); ++i)
    out.injections.push_back(ChuTransform::validate(family[i], out.object, coprod.injections[i],
                                                    prod.projections[i]));
  return out;
}

ChuEqualizerResult chu_equalizer(const ChuTransform& t1, const ChuTransform& t2, Exec ex) {
  if (!(t1.from() == t2.from() && t1.to() == t2.to()))
    fail(Errc::TypeMismatch, "equalizer needs a parallel pair of transforms");
  const QDistributor& phi = t1.from().dist;

  EqualizerResult eq = equalizer(t1.fwd(), t2.fwd(), ex);
  CoequalizerResult coeq = coequalizer(t1.bwd(), t2.bwd(), ex);

  const std::size_t nu = eq.category.size(), nv = coeq.category.size();
  std::vector<Elem> values(nu * nv);
  for (std::size_t x = 0; x < nu; ++x)
    for (std::size_t c = 0; c < nv; ++c) {
      Elem v = phi.value(eq.inclusion.map(x), coeq.classes[c][0]);
      for (std::size_t w : coeq.classes[c])
        if (phi.value(eq.inclusion.map(x), w) != v)
          fail(Errc::WitnessedIllDefinedness,
               "value at (" + eq.category.name(x) + ", " + coeq.category.name(c) +
                   ") depends on the class representative");
      values[x * nv + c] = v;
    }

  ChuEqualizerResult out;
  out.object = ChuObject{QDistributor::validate(eq.category, coeq.category, std::move(values), ex)};
  out.inclusion = ChuTransform::validate(out.object, t1.from(), eq.inclusion, coeq.projection);
  return out;
}

ChuCoequalizerResult chu_coequalizer(const ChuTransform& t1, const ChuTransform& t2, Exec ex) {
  if (!(t1.from() == t2.from() && t1.to() == t2.to()))
    fail(Errc::TypeMismatch, "coequalizer needs a parallel pair of transforms");
  const QDistributor& psi = t1.to().dist;

  CoequalizerResult coeq = coequalizer(t1.fwd(), t2.fwd(), ex);
  EqualizerResult eq = equalizer(t1.bwd(), t2.bwd(), ex);

  const std::size_t np = coeq.category.size(), ne = eq.category.size();
  std::vector<Elem> values(np * ne);
  for (std::size_t c = 0; c < np; ++c)
    for (std::size_t e = 0; e < ne; ++e) {
      Elem v = psi.value(coeq.classes[c][0], eq.inclusion.map(e));
      for (std::size_t y : coeq.classes[c])
        if (psi.value(y, eq.inclusion.map(e)) != v)
          fail(Errc::WitnessedIllDefinedness,
               "value at (" + coeq.category.name(c) + ", " + eq.category.name(e) +
                   ") depends on the class representative");
      values[c * ne + e] = v;
    }

  ChuCoequalizerResult out;
  out.object = ChuObject{QDistributor::validate(coeq.category, eq.category, std::move(values), ex)};
  out.projection = ChuTransform::validate(t1.to(), out.object, coeq.projection, eq.inclusion);
  return out;
}

DomLiftResult dom_initial_lift(const ChuDiagram& d, const QCategory& tip,
                               const std::vector<QFunctor>& cone, const Caps& caps, Exec ex) {
  const Quantaloid& q = tip.quantaloid();
  if (cone.size() != d.nodes.size()) fail(Errc::NotACone, "one cone leg per diagram node required");
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    if (!(cone[j].source() == tip)) fail(Errc::NotACone, "cone leg " + std::to_string(j) + " does not start at the tip");
    if (!(cone[j].target() == d.nodes[j].dom()))
      fail(Errc::NotACone, "cone leg " + std::to_string(j) + " does not end at the node domain");
  }
  for (const auto& a : d.arrows) {
    if (a.src >= d.nodes.size() || a.dst >= d.nodes.size())
      fail(Errc::BadParameter, "diagram arrow endpoint out of range");
    if (!(a.t.from() == d.nodes[a.src]) || !(a.t.to() == d.nodes[a.dst]))
      fail(Errc::TypeMismatch, "diagram arrow does not match its endpoints");
    if (!(compose(a.t.fwd(), cone[a.src]) == cone[a.dst]))
      fail(Errc::NotACone, "cone legs do not commute with the forward parts");
  }

  DomLiftResult out;

  // colimit of the codomain diagram (backward parts reverse the arrows)
  QCatDiagram codiag;
  for (const auto& n : d.nodes) codiag.nodes.push_back(n.cod());
  for (const auto& a : d.arrows) codiag.arrows.push_back({a.dst, a.src, a.t.bwd()});
  out.codomain_colimit = colimit(q, codiag, ex);
  const QCategory& w = out.codomain_colimit.object;

  out.tip_presheaves = PresheafCategory::build(tip, caps, ex);

  // each node transposes into its own presheaf category and is pushed into
  // the tip's along the cone leg
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    PresheafCategory pxj = PresheafCategory::build(d.nodes[j].dom(), caps, ex);
    out.node_transposes.push_back(transpose(d.nodes[j].dist, pxj));
    QFunctor star = pullback(cone[j], pxj, out.tip_presheaves);
    out.pulled_legs.push_back(compose(star, out.node_transposes[j]));
  }

  out.transpose_functor =
      colimit_mediate(out.codomain_colimit, out.pulled_legs, out.tip_presheaves.category());

  std::vector<Elem> values(tip.size() * w.size());
  for (std::size_t c = 0; c < w.size(); ++c) {
    const std::vector<Elem>& comps = out.tip_presheaves.components(out.transpose_functor.map(c));
    for (std::size_t x = 0; x < tip.size(); ++x) values[x * w.size() + c] = comps[x];
  }
  out.object = ChuObject{QDistributor::validate(tip, w, std::move(values), ex)};
  for (std::size_t j = 0; j < d.nodes.size(); ++j)
    out.cone.push_back(ChuTransform::validate(out.object, d.nodes[j], cone[j],
                                              out.codomain_colimit.cocone[j], caps, ex));
  return out;
}

GeneratorFamily GeneratorFamily::build(const Quantaloid& q, bool alternative, const Caps& caps,
                                       Exec ex) {
  GeneratorFamily g;
  g.q_ = q;
  g.alternative_ = alternative;
  const std::size_t n = q.object_count();

  // C: coproduct over t of the presheaf categories of the singletons {t};
  // the objects of P{t} are exactly the arrows with domain t
  std::vector<QCategory> parts;
  std::vector<PresheafCategory> pts;
  for (Obj t = 0; t < n; ++t) {
    g.singletons_.push_back(QCategory::singleton(q, t, q.object_name(t)));
    pts.push_back(PresheafCategory::build(g.singletons_.back(), caps, ex));
    parts.push_back(pts.back().category());
  }
  CoproductResult c = coproduct(q, parts, ex);
  g.c_size_ = c.category.size();

  g.part_offset_.resize(n);
  g.arrow_slot_.resize(n);
  for (Obj t = 0; t < n; ++t) {
    g.part_offset_[t] = c.injections[t].map(0);
    std::size_t flat = 0;
    for (Obj s = 0; s < n; ++s) flat += q.hom(t, s).size();
    g.arrow_slot_[t].assign(flat, 0);
    std::size_t base = 0;
    for (Obj s = 0; s < n; ++s) {
      for (std::size_t u = 0; u < q.hom(t, s).size(); ++u)
        g.arrow_slot_[t][base + u] = pts[t].require(s, {static_cast<Elem>(u)});
      base += q.hom(t, s).size();
    }
  }

  // C-hat: two copies of every object, hom((x,i),(y,j)) = hom(x,y)
  {
    std::vector<std::string> names;
    std::vector<Obj> extents;
    for (int copy = 0; copy < 2; ++copy)
      for (std::size_t i = 0; i < g.c_size_; ++i) {
        names.push_back(c.category.name(i) + "#" + std::to_string(copy + 1));
        extents.push_back(c.category.extent(i));
      }
    const std::size_t m = 2 * g.c_size_;
    std::vector<Elem> hom(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        hom[a * m + b] = c.category.hom(a % g.c_size_, b % g.c_size_);
    g.c_hat_ = QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), ex);
  }

  // which part and which arrow each C object stands for
  auto origin = coproduct_origin(c);
  std::vector<Obj> part_of(g.c_size_);
  std::vector<Obj> ext_of(g.c_size_);
  std::vector<Elem> arrow_of(g.c_size_);
  for (std::size_t i = 0; i < g.c_size_; ++i) {
    auto [t, p] = origin[i];
    part_of[i] = static_cast<Obj>(t);
    ext_of[i] = pts[t].extent(p);
    arrow_of[i] = pts[t].components(p)[0];
  }

  // lambda_t: the arrow itself on the P{t} parts, bottom elsewhere
  for (Obj t = 0; t < n; ++t) {
    const std::size_t m = g.c_hat_.size();
    std::vector<Elem> values(m);
    for (std::size_t o = 0; o < m; ++o) {
      const std::size_t i = o % g.c_size_;
      values[o] = (part_of[i] == t) ? arrow_of[i] : q.hom(t, ext_of[i]).bottom();
    }
    g.lambda_.push_back(
        ChuObject{QDistributor::validate(g.singletons_[t], g.c_hat_, std::move(values), ex)});
  }

  QCategory empty_cat = QCategory::empty(q);
  if (alternative) {
    g.eta_.push_back(ChuObject{QDistributor::validate(empty_cat, g.c_hat_, {}, ex)});
  } else {
    // D_s = {s} + ob Q with the indiscrete structure
    for (Obj s = 0; s < n; ++s) {
      std::vector<std::string> names = {"0:" + q.object_name(s)};
      std::vector<Obj> extents = {s};
      for (Obj r = 0; r < n; ++r) {
        names.push_back("1:" + q.object_name(r));
        extents.push_back(r);
      }
      g.d_s_.push_back(QCategory::indiscrete(q, std::move(names), std::move(extents)));
      g.eta_.push_back(ChuObject{QDistributor::validate(empty_cat, g.d_s_.back(), {}, ex)});
    }
  }

  g.members_ = g.eta_;
  g.members_.insert(g.members_.end(), g.lambda_.begin(), g.lambda_.end());
  return g;
}

std::size_t GeneratorFamily::c_hat_object(Obj t, Obj s, Elem u, int copy) const {
  std::size_t base = 0;
  for (Obj r = 0; r < s; ++r) base += q_.hom(t, r).size();
  return static_cast<std::size_t>(copy) * c_size_ + arrow_slot_[t][base + u];
}

namespace {

// All extent-preserving maps from w into an indiscrete category, in
// lexicographic order; every one of them is a functor.
std::vector<std::vector<std::size_t>> extent_maps(const QCategory& w, const QCategory& target) {
  std::vector<std::vector<std::size_t>> choices(w.size());
  for (std::size_t x = 0; x < w.size(); ++x) {
    for (std::size_t y = 0; y < target.size(); ++y)
      if (target.extent(y) == w.extent(x)) choices[x].push_back(y);
    if (choices[x].empty()) return {};
  }
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> pick(w.size(), 0);
  while (true) {
    std::vector<std::size_t> m(w.size());
    for (std::size_t x = 0; x < w.size(); ++x) m[x] = choices[x][pick[x]];
    maps.push_back(std::move(m));
    std::size_t i = w.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return maps;
    }
    if (w.size() == 0) return maps;
  }
}

}  // namespace

Separation separate(const ChuTransform& t1, const ChuTransform& t2, const GeneratorFamily& gens,
                    const Caps& caps, Exec ex) {
  if (!(t1.from() == t2.from() && t1.to() == t2.to()))
    fail(Errc::TypeMismatch, "separation needs a parallel pair of transforms");
  if (t1 == t2) fail(Errc::NotDistinct, "the transforms are equal as pairs of maps");
  if (!(t1.from().dom().quantaloid() == gens.quantaloid()))
    fail(Errc::TypeMismatch, "generating family is over a different quantaloid");

  const ChuObject& phi = t1.from();
  const QCategory& x = phi.dom();
  const QCategory& w = phi.cod();
  const Quantaloid& q = gens.quantaloid();

  Separation out;

  auto finish = [&](int case_used, const ChuObject& gen, ChuTransform m) {
    ChuTransform c1 = compose(t1, m);
    ChuTransform c2 = compose(t2, m);
    if (c1 == c2) throw std::logic_error("separating morphism failed to distinguish the pair");
    out.case_used = case_used;
    out.generator = gen;
    out.m = std::move(m);
    return out;
  };

  // differing forward parts
  std::size_t x0 = x.size();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (t1.fwd().map(i) != t2.fwd().map(i)) {
      x0 = i;
      break;
    }
  if (x0 < x.size()) {
    const Obj t = x.extent(x0);
    QFunctor e = QFunctor::validate(gens.singleton(t), x, {x0}, Exec::serial);
    std::vector<std::size_t> hmap(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      hmap[i] = gens.c_hat_object(t, w.extent(i), phi.dist.value(x0, i), 0);
    QFunctor h = QFunctor::validate(w, gens.c_hat(), std::move(hmap), ex);
    const ChuObject& gen = gens.lambda_members()[t];
    return finish(2, gen, ChuTransform::validate(gen, phi, std::move(e), std::move(h), caps, ex));
  }

  // forward parts agree, so the backward parts must differ
  std::size_t z0 = SIZE_MAX;
  for (std::size_t i = 0; i < t1.bwd().source().size(); ++i)
    if (t1.bwd().map(i) != t2.bwd().map(i)) {
      z0 = i;
      break;
    }
  if (z0 == SIZE_MAX) throw std::logic_error("distinct transforms with equal parts");
  const std::size_t marked = t2.bwd().map(z0);

  if (x.size() == 0) {
    if (gens.alternative()) {
      const Obj q0 = 0;
      std::vector<std::size_t> hmap(w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        hmap[i] = gens.c_hat_object(q0, w.extent(i), q.hom(q0, w.extent(i)).top(),
                                    i == marked ? 1 : 0);
      QFunctor h = QFunctor::validate(w, gens.c_hat(), std::move(hmap), ex);
      const ChuObject& gen = gens.empty_domain_members()[0];
      QFunctor emptyf = QFunctor::validate(gen.dom(), x, {}, Exec::serial);
      return finish(1, gen,
                    ChuTransform::validate(gen, phi, std::move(emptyf), std::move(h), caps, ex));
    }
    // search objects then maps, lexicographic
    for (Obj s = 0; s < q.object_count(); ++s) {
      const QCategory& ds = gens.cogenerators()[s];
      for (const auto& hmap : extent_maps(w, ds)) {
        bool separates = false;
        for (std::size_t z = 0; z < t1.bwd().source().size(); ++z)
          if (hmap[t1.bwd().map(z)] != hmap[t2.bwd().map(z)]) {
            separates = true;
            break;
          }
        if (!separates) continue;
        QFunctor h = QFunctor::validate(w, ds, hmap, ex);
        const ChuObject& gen = gens.empty_domain_members()[s];
        QFunctor emptyf = QFunctor::validate(gen.dom(), x, {}, Exec::serial);
        return finish(1, gen,
                      ChuTransform::validate(gen, phi, std::move(emptyf), std::move(h), caps, ex));
      }
    }
    throw std::logic_error("no separating map into any indiscrete cogenerator");
  }

  // inhabited domain, backward parts differ: tag the marked codomain object
  const std::size_t x_any = 0;
  const Obj t = x.extent(x_any);
  QFunctor e = QFunctor::validate(gens.singleton(t), x, {x_any}, Exec::serial);
  std::vector<std::size_t> hmap(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    hmap[i] = gens.c_hat_object(t, w.extent(i), phi.dist.value(x_any, i), i == marked ? 1 : 0);
  QFunctor h = QFunctor::validate(w, gens.c_hat(), std::move(hmap), ex);
  const ChuObject& gen = gens.lambda_members()[t];
  return finish(3, gen, ChuTransform::validate(gen, phi, std::move(e), std::move(h), caps, ex));
}

}  // namespace quantikit
