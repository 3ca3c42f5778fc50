#include "quantikit/qcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quantikit/error.hpp"

namespace quantikit {

QCategory QCategory::wrap(Data d) {
  d.index.clear();
  for (std::size_t i = 0; i < d.names.size(); ++i) d.index.emplace(d.names[i], i);
  QCategory out;
  out.d_ = std::make_shared<const Data>(std::move(d));
  return out;
}

QCategory QCategory::unchecked(const Quantaloid& q, std::vector<std::string> names,
                               std::vector<Obj> extents, std::vector<Elem> hom) {
  return wrap({q, std::move(names), std::move(extents), std::move(hom), {}});
}

QCategory QCategory::validate(const Quantaloid& q, std::vector<std::string> names,
                              std::vector<Obj> extents, std::vector<Elem> hom, Exec ex) {
  const std::size_t n = names.size();
  if (extents.size() != n) fail(Errc::BadParameter, "one extent per object required");
  if (hom.size() != n * n) fail(Errc::BadParameter, "hom table must cover every object pair");
  for (Obj e : extents)
    if (e >= q.object_count()) fail(Errc::BadParameter, "extent out of range");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (hom[x * n + y] >= q.hom(extents[x], extents[y]).size())
        fail(Errc::BadParameter, "hom value out of range at (" + names[x] + "," + names[y] + ")");

  for (std::size_t x = 0; x < n; ++x) {
    const auto& L = q.hom(extents[x], extents[x]);
    if (!L.leq(q.identity(extents[x]), hom[x * n + x]))
      fail(Errc::ReflexivityViolation,
           "1 at '" + names[x] + "' is not below a(" + names[x] + "," + names[x] + ") = " +
               L.name(hom[x * n + x]));
  }

  std::size_t w = 0;
  bool ok = check_all(ex, n * n * n, [&](std::size_t i) {
    const std::size_t z = i % n, y = (i / n) % n, x = i / (n * n);
    const Elem lhs = q.compose(extents[x], extents[y], extents[z], hom[y * n + z], hom[x * n + y]);
    return q.hom(extents[x], extents[z]).leq(lhs, hom[x * n + z]);
  }, &w);
  if (!ok) {
    const std::size_t z = w % n, y = (w / n) % n, x = w / (n * n);
    fail(Errc::TransitivityViolation, "a(" + names[y] + "," + names[z] + ") ∘ a(" + names[x] + "," +
                                          names[y] + ") is not below a(" + names[x] + "," +
                                          names[z] + ")");
  }
  return wrap({q, std::move(names), std::move(extents), std::move(hom), {}});
}

QCategory QCategory::discrete(const Quantaloid& q, std::vector<std::string> names,
                              std::vector<Obj> extents) {
  const std::size_t n = names.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      hom[x * n + y] = (x == y) ? q.identity(extents[x]) : q.hom(extents[x], extents[y]).bottom();
  return validate(q, std::move(names), std::move(extents), std::move(hom), Exec::serial);
}

QCategory QCategory::indiscrete(const Quantaloid& q, std::vector<std::string> names,
                                std::vector<Obj> extents) {
  const std::size_t n = names.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x * n + y] = q.hom(extents[x], extents[y]).top();
  return validate(q, std::move(names), std::move(extents), std::move(hom), Exec::serial);
}

QCategory QCategory::empty(const Quantaloid& q) { return validate(q, {}, {}, {}, Exec::serial); }

QCategory QCategory::singleton(const Quantaloid& q, Obj extent, std::string name) {
  return discrete(q, {std::move(name)}, {extent});
}

std::optional<std::size_t> QCategory::find(std::string_view name) const {
  auto it = d_->index.find(std::string(name));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t QCategory::object(std::string_view name) const {
  if (auto i = find(name)) return *i;
  fail(Errc::UnknownElement, "no object named '" + std::string(name) + "'");
}

bool QCategory::operator==(const QCategory& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->names == o.d_->names && d_->extents == o.d_->extents && d_->hom == o.d_->hom &&
         d_->q == o.d_->q;
}

QFunctor QFunctor::unchecked(QCategory source, QCategory target, std::vector<std::size_t> map) {
  QFunctor f;
  f.src_ = std::move(source);
  f.tgt_ = std::move(target);
  f.map_ = std::move(map);
  return f;
}

QFunctor QFunctor::validate(QCategory source, QCategory target, std::vector<std::size_t> map,
                            Exec ex) {
  if (!(source.quantaloid() == target.quantaloid()))
    fail(Errc::TypeMismatch, "functor endpoints live over different quantaloids");
  const std::size_t n = source.size();
  if (map.size() != n) fail(Errc::BadParameter, "functor map must cover every source object");
  for (std::size_t x = 0; x < n; ++x) {
    if (map[x] >= target.size()) fail(Errc::BadParameter, "functor image out of range");
    if (source.extent(x) != target.extent(map[x]))
      fail(Errc::ExtentMismatch, "'" + source.name(x) + "' has extent " +
                                     source.quantaloid().object_name(source.extent(x)) +
                                     " but its image '" + target.name(map[x]) + "' has extent " +
                                     target.quantaloid().object_name(target.extent(map[x])));
  }
  std::size_t w = 0;
  bool ok = check_all(ex, n * n, [&](std::size_t i) {
    const std::size_t y = i % n, x = i / n;
    return source.quantaloid()
        .hom(source.extent(x), source.extent(y))
        .leq(source.hom(x, y), target.hom(map[x], map[y]));
  }, &w);
  if (!ok) {
    const std::size_t y = w % n, x = w / n;
    fail(Errc::NotMonotone, "a(" + source.name(x) + "," + source.name(y) +
                                ") is not below b(" + target.name(map[x]) + "," +
                                target.name(map[y]) + ")");
  }
  return unchecked(std::move(source), std::move(target), std::move(map));
}

QFunctor QFunctor::identity(const QCategory& x) {
  std::vector<std::size_t> map(x.size());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return unchecked(x, x, std::move(map));
}

QFunctor compose(const QFunctor& g, const QFunctor& f) {
  if (!(f.target() == g.source())) fail(Errc::TypeMismatch, "functors do not compose");
  std::vector<std::size_t> map(f.source().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.map(f.map(x));
  return QFunctor::unchecked(f.source(), g.target(), std::move(map));
}

bool functor_leq(const QFunctor& f, const QFunctor& g) {
  if (!(f.source() == g.source() && f.target() == g.target()))
    fail(Errc::TypeMismatch, "functor order needs a parallel pair");
  const QCategory& b = f.target();
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    const Obj q = f.source().extent(x);
    if (!b.quantaloid().hom(q, q).leq(b.quantaloid().identity(q), b.hom(f.map(x), g.map(x))))
      return false;
  }
  return true;
}

QCategory opposite_category(const QCategory& x) {
  const std::size_t n = x.size();
  std::vector<std::string> names;
  std::vector<Obj> extents;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(x.name(i));
    extents.push_back(x.extent(i));
  }
  std::vector<Elem> hom(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) hom[a * n + b] = x.hom(b, a);
  return QCategory::validate(x.quantaloid().opposite(), std::move(names), std::move(extents),
                             std::move(hom), Exec::serial);
}

ProductResult product(const Quantaloid& q, const std::vector<QCategory>& factors, Exec ex) {
  for (const auto& f : factors)
    if (!(f.quantaloid() == q)) fail(Errc::TypeMismatch, "product factors over a different quantaloid");
  const std::size_t k = factors.size();

  std::vector<std::vector<std::size_t>> tuples;  // flattened component object indices
  std::vector<Obj> extents;
  std::vector<std::string> names;
  for (Obj qo = 0; qo < q.object_count(); ++qo) {
    std::vector<std::vector<std::size_t>> choices(k);
    bool possible = true;
    for (std::size_t i = 0; i < k && possible; ++i) {
      for (std::size_t x = 0; x < factors[i].size(); ++x)
        if (factors[i].extent(x) == qo) choices[i].push_back(x);
      if (choices[i].empty()) possible = false;
    }
    if (!possible) continue;
    std::size_t total = 1;
    for (const auto& ch : choices) total *= ch.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<std::size_t> tup(k);
      std::size_t rem = idx;
      for (std::size_t i = k; i-- > 0;) {
        tup[i] = choices[i][rem % choices[i].size()];
        rem /= choices[i].size();
      }
      std::string nm = "(";
      for (std::size_t i = 0; i < k; ++i) {
        if (i) nm += ",";
        nm += factors[i].name(tup[i]);
      }
      nm += ")@" + q.object_name(qo);
      tuples.push_back(std::move(tup));
      extents.push_back(qo);
      names.push_back(std::move(nm));
    }
  }

  const std::size_t n = tuples.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Elem> comps(k);
      for (std::size_t i = 0; i < k; ++i) comps[i] = factors[i].hom(tuples[a][i], tuples[b][i]);
      hom[a * n + b] = q.hom(extents[a], extents[b]).meet(comps);
    }

  ProductResult out;
  out.category = QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), ex);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> map(n);
    for (std::size_t a = 0; a < n; ++a) map[a] = tuples[a][i];
    out.projections.push_back(QFunctor::validate(out.category, factors[i], std::move(map), ex));
  }
  return out;
}

CoproductResult coproduct(const Quantaloid& q, const std::vector<QCategory>& parts, Exec ex) {
  for (const auto& p : parts)
    if (!(p.quantaloid() == q)) fail(Errc::TypeMismatch, "coproduct parts over a different quantaloid");
  std::vector<std::string> names;
  std::vector<Obj> extents;
  std::vector<std::size_t> offset(parts.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = names.size();
    for (std::size_t x = 0; x < parts[i].size(); ++x) {
      names.push_back(std::to_string(i) + ":" + parts[i].name(x));
      extents.push_back(parts[i].extent(x));
    }
  }
  const std::size_t n = names.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t i = 0, a0 = 0; i < parts.size(); a0 += parts[i].size(), ++i)
    for (std::size_t j = 0, b0 = 0; j < parts.size(); b0 += parts[j].size(), ++j)
      for (std::size_t a = 0; a < parts[i].size(); ++a)
        for (std::size_t b = 0; b < parts[j].size(); ++b)
          hom[(a0 + a) * n + (b0 + b)] =
              (i == j) ? parts[i].hom(a, b)
                       : q.hom(parts[i].extent(a), parts[j].extent(b)).bottom();

  CoproductResult out;
  out.category = QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), ex);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::size_t> map(parts[i].size());
    std::iota(map.begin(), map.end(), offset[i]);
    out.injections.push_back(QFunctor::validate(parts[i], out.category, std::move(map), ex));
  }
  return out;
}

EqualizerResult equalizer(const QFunctor& f, const QFunctor& g, Exec ex) {
  if (!(f.source() == g.source() && f.target() == g.target()))
    fail(Errc::TypeMismatch, "equalizer needs a parallel pair");
  const QCategory& x = f.source();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (f.map(i) == g.map(i)) keep.push_back(i);
  std::vector<std::string> names;
  std::vector<Obj> extents;
  for (std::size_t i : keep) {
    names.push_back(x.name(i));
    extents.push_back(x.extent(i));
  }
  std::vector<Elem> hom(keep.size() * keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) hom[a * keep.size() + b] = x.hom(keep[a], keep[b]);
  EqualizerResult out;
  out.category =
      QCategory::validate(x.quantaloid(), std::move(names), std::move(extents), std::move(hom), ex);
  out.inclusion = QFunctor::validate(out.category, x, std::move(keep), ex);
  return out;
}

CoequalizerResult coequalizer(const QFunctor& f, const QFunctor& g, Exec ex) {
  if (!(f.source() == g.source() && f.target() == g.target()))
    fail(Errc::TypeMismatch, "coequalizer needs a parallel pair");
  const QCategory& y = f.target();
  const std::size_t n = y.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    std::size_t a = root(f.map(x)), b = root(g.map(x));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  CoequalizerResult out;
  std::vector<std::size_t> class_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = root(i);
    if (class_of[r] == SIZE_MAX) {
      class_of[r] = out.classes.size();
      out.classes.push_back({});
    }
    class_of[i] = class_of[r];
    out.classes[class_of[i]].push_back(i);
  }
  const std::size_t m = out.classes.size();

  std::vector<std::string> names(m);
  std::vector<Obj> extents(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::string> members;
    for (std::size_t i : out.classes[c]) members.push_back(y.name(i));
    std::sort(members.begin(), members.end());
    std::string nm;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) nm += "|";
      nm += members[k];
    }
    names[c] = std::move(nm);
    extents[c] = y.extent(out.classes[c][0]);
    for (std::size_t i : out.classes[c])
      if (y.extent(i) != extents[c])
        throw std::logic_error("glued objects have different extents");
  }

  // c0: join of member homs
  std::vector<Elem> c0(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Elem> vals;
      for (std::size_t i : out.classes[a])
        for (std::size_t j : out.classes[b]) vals.push_back(y.hom(i, j));
      c0[a * m + b] = y.quantaloid().hom(extents[a], extents[b]).join(vals);
    }

  // least fixpoint of c <- c0 v (c ∘ c0); each round strictly increases some
  // entry, so |hom lattice| * m^2 rounds bound the iteration
  std::vector<Elem> c = c0;
  std::size_t lattice_bound = 0;
  for (Obj a = 0; a < y.quantaloid().object_count(); ++a)
    for (Obj b = 0; b < y.quantaloid().object_count(); ++b)
      lattice_bound = std::max(lattice_bound, y.quantaloid().hom(a, b).size());
  const std::size_t max_iter = lattice_bound * m * m + 1;
  bool changed = true;
  std::size_t iter = 0;
  while (changed) {
    if (++iter > max_iter) throw std::logic_error("coequalizer fixpoint failed to terminate");
    changed = false;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const auto& L = y.quantaloid().hom(extents[a], extents[b]);
        Elem acc = c0[a * m + b];
        for (std::size_t mid = 0; mid < m; ++mid) {
          Elem step = y.quantaloid().compose(extents[a], extents[mid], extents[b],
                                             c[mid * m + b], c0[a * m + mid]);
          acc = L.join2(acc, step);
        }
        if (acc != c[a * m + b]) {
          c[a * m + b] = acc;
          changed = true;
        }
      }
  }

  out.category = QCategory::validate(y.quantaloid(), std::move(names), std::move(extents),
                                     std::move(c), ex);
  out.projection = QFunctor::validate(y, out.category, std::move(class_of), ex);
  return out;
}

ColimitResult colimit(const Quantaloid& q, const QCatDiagram& d, Exec ex) {
  ColimitResult out;
  out.parts = coproduct(q, d.nodes, ex);

  std::vector<QCategory> sources;
  sources.reserve(d.arrows.size());
  for (const auto& a : d.arrows) {
    if (a.src >= d.nodes.size() || a.dst >= d.nodes.size())
      fail(Errc::BadParameter, "diagram arrow endpoint out of range");
    if (!(a.h.source() == d.nodes[a.src] && a.h.target() == d.nodes[a.dst]))
      fail(Errc::TypeMismatch, "diagram arrow does not match its endpoints");
    sources.push_back(d.nodes[a.src]);
  }
  CoproductResult tip = coproduct(q, sources, ex);

  std::vector<std::size_t> fmap(tip.category.size()), gmap(tip.category.size());
  for (std::size_t i = 0; i < d.arrows.size(); ++i) {
    const auto& a = d.arrows[i];
    for (std::size_t x = 0; x < sources[i].size(); ++x) {
      fmap[tip.injections[i].map(x)] = out.parts.injections[a.dst].map(a.h.map(x));
      gmap[tip.injections[i].map(x)] = out.parts.injections[a.src].map(x);
    }
  }
  QFunctor F = QFunctor::validate(tip.category, out.parts.category, std::move(fmap), ex);
  QFunctor G = QFunctor::validate(tip.category, out.parts.category, std::move(gmap), ex);

  out.quotient = coequalizer(F, G, ex);
  out.object = out.quotient.category;
  for (std::size_t j = 0; j < d.nodes.size(); ++j)
    out.cocone.push_back(compose(out.quotient.projection, out.parts.injections[j]));
  return out;
}

QFunctor colimit_mediate(const ColimitResult& c, const std::vector<QFunctor>& legs,
                         const QCategory& target) {
  if (legs.size() != c.cocone.size()) fail(Errc::NotACone, "wrong number of cocone legs");
  for (std::size_t j = 0; j < legs.size(); ++j) {
    if (!(legs[j].target() == target))
      fail(Errc::NotACone, "cocone leg " + std::to_string(j) + " has the wrong target");
    if (!(legs[j].source() == c.cocone[j].source()))
      fail(Errc::NotACone, "cocone leg " + std::to_string(j) + " has the wrong source");
  }
  // decode coproduct indices back to (node, object)
  std::vector<std::pair<std::size_t, std::size_t>> origin(c.parts.category.size());
  for (std::size_t j = 0; j < c.parts.injections.size(); ++j)
    for (std::size_t x = 0; x < c.parts.injections[j].source().size(); ++x)
      origin[c.parts.injections[j].map(x)] = {j, x};

  std::vector<std::size_t> map(c.object.size());
  for (std::size_t cls = 0; cls < c.quotient.classes.size(); ++cls) {
    bool first = true;
    std::size_t value = 0;
    for (std::size_t member : c.quotient.classes[cls]) {
      auto [j, x] = origin[member];
      std::size_t v = legs[j].map(x);
      if (first) {
        value = v;
        first = false;
      } else if (v != value) {
        fail(Errc::NotACone, "legs disagree on the glued object '" + c.object.name(cls) + "'");
      }
    }
    map[cls] = value;
  }
  try {
    return QFunctor::validate(c.object, target, std::move(map), Exec::serial);
  } catch (const Error& e) {
    fail(Errc::NotACone, std::string("mediating map is not a functor: ") + e.what());
  }
}

}  // namespace quantikit
