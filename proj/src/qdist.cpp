#include "quantikit/qdist.hpp"

#include <algorithm>

#include "quantikit/error.hpp"

namespace quantikit {

QDistributor QDistributor::unchecked(QCategory source, QCategory target, std::vector<Elem> values) {
  QDistributor d;
  d.d_ = std::make_shared<const Data>(Data{std::move(source), std::move(target), std::move(values)});
  return d;
}

QDistributor QDistributor::validate(QCategory source, QCategory target, std::vector<Elem> values,
                                    Exec ex) {
  if (!(source.quantaloid() == target.quantaloid()))
    fail(Errc::TypeMismatch, "distributor endpoints live over different quantaloids");
  const Quantaloid& q = source.quantaloid();
  const std::size_t nx = source.size(), ny = target.size();
  if (values.size() != nx * ny) fail(Errc::BadParameter, "value table must cover every pair");
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (values[x * ny + y] >= q.hom(source.extent(x), target.extent(y)).size())
        fail(Errc::BadParameter, "distributor value out of range at (" + source.name(x) + "," +
                                     target.name(y) + ")");

  std::size_t w = 0;
  bool ok = check_all(ex, nx * nx * ny * ny, [&](std::size_t i) {
    const std::size_t yp = i % ny;
    const std::size_t y = (i / ny) % ny;
    const std::size_t xp = (i / (ny * ny)) % nx;
    const std::size_t x = i / (ny * ny * nx);
    const Obj ex_ = source.extent(x), exp_ = source.extent(xp);
    const Obj ey = target.extent(y), eyp = target.extent(yp);
    Elem inner = q.compose(exp_, ex_, ey, values[x * ny + y], source.hom(xp, x));
    Elem lhs = q.compose(exp_, ey, eyp, target.hom(y, yp), inner);
    return q.hom(exp_, eyp).leq(lhs, values[xp * ny + yp]);
  }, &w);
  if (!ok) {
    const std::size_t yp = w % ny;
    const std::size_t y = (w / ny) % ny;
    const std::size_t xp = (w / (ny * ny)) % nx;
    const std::size_t x = w / (ny * ny * nx);
    fail(Errc::BimoduleViolation,
         "witness (x=" + source.name(x) + ", x'=" + source.name(xp) + ", y=" + target.name(y) +
             ", y'=" + target.name(yp) + ")");
  }

  QDistributor out = unchecked(std::move(source), std::move(target), std::move(values));
  // the hom structures must act neutrally; this follows from the bimodule
  // condition plus reflexivity, so a failure here is a bug
  QDistributor left = compose(out, QDistributor::hom(out.source()));
  QDistributor right = compose(QDistributor::hom(out.target()), out);
  if (!(left == out) || !(right == out))
    throw std::logic_error("hom structure failed to act neutrally on a validated distributor");
  return out;
}

QDistributor QDistributor::hom(const QCategory& x) {
  std::vector<Elem> values(x.size() * x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) values[a * x.size() + b] = x.hom(a, b);
  return unchecked(x, x, std::move(values));
}

QDistributor compose(const QDistributor& psi, const QDistributor& phi) {
  if (!(phi.target() == psi.source())) fail(Errc::TypeMismatch, "distributors do not compose");
  const QCategory& x = phi.source();
  const QCategory& ymid = phi.target();
  const QCategory& z = psi.target();
  const Quantaloid& q = x.quantaloid();
  std::vector<Elem> values(x.size() * z.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t c = 0; c < z.size(); ++c) {
      std::vector<Elem> terms;
      terms.reserve(ymid.size());
      for (std::size_t b = 0; b < ymid.size(); ++b)
        terms.push_back(q.compose(x.extent(a), ymid.extent(b), z.extent(c), psi.value(b, c),
                                  phi.value(a, b)));
      values[a * z.size() + c] = q.hom(x.extent(a), z.extent(c)).join(terms);
    }
  return QDistributor::unchecked(x, z, std::move(values));
}

bool dist_leq(const QDistributor& a, const QDistributor& b) {
  if (!(a.source() == b.source() && a.target() == b.target()))
    fail(Errc::TypeMismatch, "distributor order needs a parallel pair");
  const Quantaloid& q = a.source().quantaloid();
  for (std::size_t x = 0; x < a.source().size(); ++x)
    for (std::size_t y = 0; y < a.target().size(); ++y)
      if (!q.hom(a.source().extent(x), a.target().extent(y)).leq(a.value(x, y), b.value(x, y)))
        return false;
  return true;
}

FunctorGraphs graphs(const QFunctor& f) {
  const QCategory& x = f.source();
  const QCategory& y = f.target();
  std::vector<Elem> lower(x.size() * y.size()), upper(y.size() * x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) {
      lower[a * y.size() + b] = y.hom(f.map(a), b);
      upper[b * x.size() + a] = y.hom(b, f.map(a));
    }
  return {QDistributor::validate(x, y, std::move(lower), Exec::serial),
          QDistributor::validate(y, x, std::move(upper), Exec::serial)};
}

Presheaf Presheaf::validate(QCategory base, Obj extent, std::vector<Elem> components) {
  const Quantaloid& q = base.quantaloid();
  if (extent >= q.object_count()) fail(Errc::BadParameter, "presheaf extent out of range");
  if (components.size() != base.size())
    fail(Errc::BadParameter, "presheaf needs one component per base object");
  for (std::size_t x = 0; x < base.size(); ++x)
    if (components[x] >= q.hom(base.extent(x), extent).size())
      fail(Errc::BadParameter, "presheaf component out of range");
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      Elem lhs = q.compose(base.extent(x), base.extent(y), extent, components[y], base.hom(x, y));
      if (!q.hom(base.extent(x), extent).leq(lhs, components[x]))
        fail(Errc::BimoduleViolation, "presheaf condition fails at (" + base.name(x) + "," +
                                          base.name(y) + ")");
    }
  return {std::move(base), extent, std::move(components)};
}

std::size_t PresheafCategory::candidate_count(const QCategory& base) {
  const Quantaloid& q = base.quantaloid();
  std::size_t total = 0;
  for (Obj s = 0; s < q.object_count(); ++s) {
    std::size_t per = 1;
    for (std::size_t x = 0; x < base.size(); ++x) {
      per *= q.hom(base.extent(x), s).size();
      if (per > (std::size_t(1) << 40)) return per;  // saturate
    }
    total += per;
  }
  return total;
}

PresheafCategory PresheafCategory::build(const QCategory& base, const Caps& caps, Exec ex) {
  const Quantaloid& q = base.quantaloid();
  const std::size_t n = base.size();

  const std::size_t bound = candidate_count(base);
  if (bound > caps.presheaf_objects)
    fail(Errc::SizeCap, "presheaf enumeration over " + std::to_string(bound) +
                            " candidates exceeds the cap of " + std::to_string(caps.presheaf_objects));

  Data d;
  d.base = base;
  for (Obj s = 0; s < q.object_count(); ++s) {
    std::vector<std::size_t> radix(n);
    std::size_t per = 1;
    for (std::size_t x = 0; x < n; ++x) {
      radix[x] = q.hom(base.extent(x), s).size();
      per *= radix[x];
    }
    std::vector<unsigned char> keep(per);
    auto decode = [&](std::size_t idx, std::vector<Elem>& comps) {
      for (std::size_t x = n; x-- > 0;) {
        comps[x] = static_cast<Elem>(idx % radix[x]);
        idx /= radix[x];
      }
    };
    fill_mask(ex, per, keep.data(), [&](std::size_t idx) {
      std::vector<Elem> comps(n);
      decode(idx, comps);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Elem lhs = q.compose(base.extent(x), base.extent(y), s, comps[y], base.hom(x, y));
          if (!q.hom(base.extent(x), s).leq(lhs, comps[x])) return false;
        }
      return true;
    });
    for (std::size_t idx = 0; idx < per; ++idx) {
      if (!keep[idx]) continue;
      std::vector<Elem> comps(n);
      decode(idx, comps);
      d.lookup.emplace(std::make_pair(s, comps), d.extents.size());
      d.extents.push_back(s);
      d.comps.push_back(std::move(comps));
    }
  }

  const std::size_t m = d.extents.size();
  if (m > caps.presheaf_objects)
    fail(Errc::SizeCap, "presheaf category with " + std::to_string(m) +
                            " objects exceeds the cap of " + std::to_string(caps.presheaf_objects));

  // canonical names: extent, then components sorted by base object name
  std::vector<std::size_t> by_name(n);
  for (std::size_t i = 0; i < n; ++i) by_name[i] = i;
  std::sort(by_name.begin(), by_name.end(),
            [&](std::size_t a, std::size_t b) { return base.name(a) < base.name(b); });
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string nm = q.object_name(d.extents[i]) + "[";
    for (std::size_t k = 0; k < n; ++k) {
      if (k) nm += ",";
      const std::size_t x = by_name[k];
      nm += base.name(x) + ":" + q.hom(base.extent(x), d.extents[i]).name(d.comps[i][x]);
    }
    nm += "]";
    names[i] = std::move(nm);
  }

  std::vector<Elem> hom(m * m);
  std::vector<Obj> extents = d.extents;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Obj s = d.extents[i], t = d.extents[j];
      std::vector<Elem> terms;
      terms.reserve(n);
      for (std::size_t x = 0; x < n; ++x) {
        Arrow r = q.residual_left({base.extent(x), t, d.comps[j][x]},
                                  {base.extent(x), s, d.comps[i][x]});
        terms.push_back(r.val);
      }
      hom[i * m + j] = q.hom(s, t).meet(terms);
    }

  d.cat = QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), ex);

  PresheafCategory out;
  out.d_ = std::make_shared<const Data>(std::move(d));
  return out;
}

std::optional<std::size_t> PresheafCategory::find(Obj extent,
                                                  const std::vector<Elem>& components) const {
  auto it = d_->lookup.find(std::make_pair(extent, components));
  if (it == d_->lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t PresheafCategory::require(Obj extent, const std::vector<Elem>& components) const {
  if (auto i = find(extent, components)) return *i;
  throw std::logic_error("a valid presheaf is missing from the exhaustive enumeration");
}

QFunctor yoneda(const PresheafCategory& px) {
  const QCategory& x = px.base();
  std::vector<std::size_t> map(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    std::vector<Elem> comps(x.size());
    for (std::size_t b = 0; b < x.size(); ++b) comps[b] = x.hom(b, a);
    map[a] = px.require(x.extent(a), comps);
  }
  QFunctor y = QFunctor::validate(x, px.category(), std::move(map), Exec::serial);
  // full faithfulness: [y(a), y(b)] = a(a,b)
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (px.category().hom(y.map(a), y.map(b)) != x.hom(a, b))
        throw std::logic_error("yoneda functor is not fully faithful");
  return y;
}

QFunctor transpose(const QDistributor& phi, const PresheafCategory& px) {
  if (!(px.base() == phi.source())) fail(Errc::TypeMismatch, "presheaf category is not over the source");
  const QCategory& y = phi.target();
  std::vector<std::size_t> map(y.size());
  for (std::size_t b = 0; b < y.size(); ++b) {
    std::vector<Elem> comps(phi.source().size());
    for (std::size_t a = 0; a < phi.source().size(); ++a) comps[a] = phi.value(a, b);
    map[b] = px.require(y.extent(b), comps);
  }
  return QFunctor::validate(y, px.category(), std::move(map), Exec::serial);
}

QFunctor kan_star(const QDistributor& phi, const PresheafCategory& py, const PresheafCategory& px) {
  if (!(py.base() == phi.target()) || !(px.base() == phi.source()))
    fail(Errc::TypeMismatch, "presheaf categories do not match the distributor");
  const QCategory& x = phi.source();
  const QCategory& y = phi.target();
  const Quantaloid& q = x.quantaloid();
  std::vector<std::size_t> map(py.count());
  for (std::size_t p = 0; p < py.count(); ++p) {
    const Obj t = py.extent(p);
    std::vector<Elem> comps(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      std::vector<Elem> terms;
      terms.reserve(y.size());
      for (std::size_t b = 0; b < y.size(); ++b)
        terms.push_back(q.compose(x.extent(a), y.extent(b), t, py.components(p)[b],
                                  phi.value(a, b)));
      comps[a] = q.hom(x.extent(a), t).join(terms);
    }
    map[p] = px.require(t, comps);
  }
  return QFunctor::validate(py.category(), px.category(), std::move(map), Exec::serial);
}

QFunctor pullback(const QFunctor& f, const PresheafCategory& py, const PresheafCategory& px) {
  QFunctor star = kan_star(graphs(f).lower, py, px);
  // the Kan construction must collapse to plain precomposition with f
  for (std::size_t p = 0; p < py.count(); ++p) {
    const std::vector<Elem>& comps = px.components(star.map(p));
    for (std::size_t a = 0; a < f.source().size(); ++a)
      if (comps[a] != py.components(p)[f.map(a)])
        throw std::logic_error("Kan star of a graph disagrees with precomposition");
  }
  return star;
}

}  // namespace quantikit
