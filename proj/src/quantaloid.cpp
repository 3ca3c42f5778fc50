#include "quantikit/quantaloid.hpp"

#include <algorithm>
#include <sstream>

#include "quantikit/error.hpp"

namespace quantikit {

namespace {

std::string arrow_str(const Quantaloid::Builder& b, Obj q, Obj r, Elem e) {
  const std::size_t n = b.objects.size();
  return b.objects[q] + "->" + b.objects[r] + ":" + b.homs[std::size_t(q) * n + r].name(e);
}

}  // namespace

Quantaloid Quantaloid::validate(Builder b, Exec ex) {
  const std::size_t n = b.objects.size();
  if (n > 0xFFFF) fail(Errc::BadParameter, "too many objects");
  if (b.homs.size() != n * n) fail(Errc::BadParameter, "hom-lattice table must cover every object pair");
  if (b.compose.size() != n * n * n) fail(Errc::BadParameter, "composition table must cover every object triple");
  if (b.identities.size() != n) fail(Errc::BadParameter, "one identity per object required");

  auto homqr = [&](Obj q, Obj r) -> const FiniteLattice& { return b.homs[std::size_t(q) * n + r]; };
  auto table = [&](Obj q, Obj r, Obj s) -> const std::vector<Elem>& {
    return b.compose[(std::size_t(q) * n + r) * n + s];
  };

  for (Obj q = 0; q < n; ++q)
    if (b.identities[q] >= homqr(q, q).size())
      fail(Errc::BadParameter, "identity of '" + b.objects[q] + "' is not a hom element");

  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        const auto& t = table(q, r, s);
        const std::size_t want = homqr(r, s).size() * homqr(q, r).size();
        if (t.size() != want)
          fail(Errc::BadParameter, "composition table (" + b.objects[r] + "->" + b.objects[s] +
                                       ")*(" + b.objects[q] + "->" + b.objects[r] + ") has wrong size");
        for (Elem v : t)
          if (v >= homqr(q, s).size())
            fail(Errc::BadParameter, "composition table entry out of range");
      }

  auto comp = [&](Obj q, Obj r, Obj s, Elem g, Elem f) -> Elem {
    return table(q, r, s)[std::size_t(g) * homqr(q, r).size() + f];
  };

  // unitality
  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r) {
      const auto& L = homqr(q, r);
      std::size_t w = 0;
      bool ok = check_all(ex, L.size(), [&](std::size_t f) {
        return comp(q, q, r, static_cast<Elem>(f), b.identities[q]) == f &&
               comp(q, r, r, b.identities[r], static_cast<Elem>(f)) == f;
      }, &w);
      if (!ok)
        fail(Errc::NotUnital, "identity is not neutral on " + arrow_str(b, q, r, static_cast<Elem>(w)));
    }

  // associativity: h∘(g∘f) = (h∘g)∘f
  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s)
        for (Obj t = 0; t < n; ++t) {
          const std::size_t nh = homqr(s, t).size(), ng = homqr(r, s).size(), nf = homqr(q, r).size();
          std::size_t w = 0;
          bool ok = check_all(ex, nh * ng * nf, [&](std::size_t i) {
            const Elem f = static_cast<Elem>(i % nf);
            const Elem g = static_cast<Elem>((i / nf) % ng);
            const Elem h = static_cast<Elem>(i / (nf * ng));
            return comp(q, s, t, h, comp(q, r, s, g, f)) ==
                   comp(q, r, t, comp(r, s, t, h, g), f);
          }, &w);
          if (!ok) {
            const Elem f = static_cast<Elem>(w % nf);
            const Elem g = static_cast<Elem>((w / nf) % ng);
            const Elem h = static_cast<Elem>(w / (nf * ng));
            fail(Errc::NotAssociative,
                 "witness h=" + arrow_str(b, s, t, h) + ", g=" + arrow_str(b, r, s, g) +
                     ", f=" + arrow_str(b, q, r, f));
          }
        }

  // join preservation in each variable: empty joins and binary joins
  // (all finite joins follow on a finite lattice).
  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        const auto& Lf = homqr(q, r);
        const auto& Lg = homqr(r, s);
        const auto& Lo = homqr(q, s);
        for (std::size_t g = 0; g < Lg.size(); ++g)
          if (comp(q, r, s, static_cast<Elem>(g), Lf.bottom()) != Lo.bottom())
            fail(Errc::NotSupPreserving,
                 arrow_str(b, r, s, static_cast<Elem>(g)) + " ∘ bottom is not bottom");
        for (std::size_t f = 0; f < Lf.size(); ++f)
          if (comp(q, r, s, Lg.bottom(), static_cast<Elem>(f)) != Lo.bottom())
            fail(Errc::NotSupPreserving,
                 "bottom ∘ " + arrow_str(b, q, r, static_cast<Elem>(f)) + " is not bottom");
        std::size_t w = 0;
        bool ok = check_all(ex, Lg.size() * Lf.size() * Lf.size(), [&](std::size_t i) {
          const Elem f2 = static_cast<Elem>(i % Lf.size());
          const Elem f1 = static_cast<Elem>((i / Lf.size()) % Lf.size());
          const Elem g = static_cast<Elem>(i / (Lf.size() * Lf.size()));
          return comp(q, r, s, g, Lf.join2(f1, f2)) ==
                 Lo.join2(comp(q, r, s, g, f1), comp(q, r, s, g, f2));
        }, &w);
        if (!ok) {
          const Elem f2 = static_cast<Elem>(w % Lf.size());
          const Elem f1 = static_cast<Elem>((w / Lf.size()) % Lf.size());
          const Elem g = static_cast<Elem>(w / (Lf.size() * Lf.size()));
          fail(Errc::NotSupPreserving,
               arrow_str(b, r, s, g) + " does not preserve the join of " +
                   arrow_str(b, q, r, f1) + " and " + arrow_str(b, q, r, f2));
        }
        ok = check_all(ex, Lg.size() * Lg.size() * Lf.size(), [&](std::size_t i) {
          const Elem f = static_cast<Elem>(i % Lf.size());
          const Elem g2 = static_cast<Elem>((i / Lf.size()) % Lg.size());
          const Elem g1 = static_cast<Elem>(i / (Lf.size() * Lg.size()));
          return comp(q, r, s, Lg.join2(g1, g2), f) ==
                 Lo.join2(comp(q, r, s, g1, f), comp(q, r, s, g2, f));
        }, &w);
        if (!ok) {
          const Elem f = static_cast<Elem>(w % Lf.size());
          const Elem g2 = static_cast<Elem>((w / Lf.size()) % Lg.size());
          const Elem g1 = static_cast<Elem>(w / (Lf.size() * Lg.size()));
          fail(Errc::NotSupPreserving,
               "join of " + arrow_str(b, r, s, g1) + " and " + arrow_str(b, r, s, g2) +
                   " is not preserved against " + arrow_str(b, q, r, f));
        }
      }

  Quantaloid out;
  out.d_ = std::make_shared<const Builder>(std::move(b));
  return out;
}

Quantaloid Quantaloid::builtin_two() {
  Builder b;
  b.objects = {"*"};
  FiniteLattice L = FiniteLattice::chain({"0", "1"});
  b.homs = {L};
  std::vector<Elem> t(4);
  for (Elem g = 0; g < 2; ++g)
    for (Elem f = 0; f < 2; ++f) t[std::size_t(g) * 2 + f] = std::min(g, f);
  b.compose = {t};
  b.identities = {1};
  return validate(std::move(b));
}

Quantaloid Quantaloid::builtin_chain(int n) {
  if (n < 1 || n > 4096) fail(Errc::BadParameter, "chain size must be between 1 and 4096");
  Builder b;
  b.objects = {"*"};
  std::vector<std::string> names;
  names.reserve(n + 1);
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  // numeric >= order: i+1 below i, so bottom is n and top is 0
  b.homs = {FiniteLattice::chain(std::move(names), /*reversed=*/true)};
  const std::size_t m = std::size_t(n) + 1;
  std::vector<Elem> t(m * m);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      t[g * m + f] = static_cast<Elem>(std::min(g + f, std::size_t(n)));
  b.compose = {std::move(t)};
  b.identities = {0};
  return validate(std::move(b));
}

Quantaloid Quantaloid::builtin(const std::string& name, std::optional<int> n) {
  if (name == "two") return builtin_two();
  if (name == "chain") {
    if (!n) fail(Errc::BadParameter, "builtin 'chain' needs a size");
    return builtin_chain(*n);
  }
  fail(Errc::BadParameter, "unknown builtin '" + name + "'");
}

std::optional<Obj> Quantaloid::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < object_count(); ++i)
    if (d_->objects[i] == name) return static_cast<Obj>(i);
  return std::nullopt;
}

Obj Quantaloid::object(std::string_view name) const {
  if (auto q = find_object(name)) return *q;
  fail(Errc::UnknownElement, "no object named '" + std::string(name) + "'");
}

Arrow Quantaloid::compose(const Arrow& g, const Arrow& f) const {
  if (f.cod != g.dom)
    fail(Errc::TypeMismatch, "cannot compose " + object_name(g.dom) + "->" + object_name(g.cod) +
                                 " after " + object_name(f.dom) + "->" + object_name(f.cod));
  return {f.dom, g.cod, compose(f.dom, f.cod, g.cod, g.val, f.val)};
}

Arrow Quantaloid::residual_left(const Arrow& d, const Arrow& u) const {
  if (d.dom != u.dom) fail(Errc::TypeMismatch, "residual d over u needs dom u = dom d");
  const Obj r = u.cod, s = d.cod;
  const auto& L = hom(r, s);
  const auto& Ld = hom(d.dom, s);
  Elem best = L.bottom();
  for (std::size_t z = 0; z < L.size(); ++z)
    if (Ld.leq(compose(u.dom, r, s, static_cast<Elem>(z), u.val), d.val))
      best = L.join2(best, static_cast<Elem>(z));
  // sup-preservation makes the join of candidates itself a candidate
  if (!Ld.leq(compose(u.dom, r, s, best, u.val), d.val))
    throw std::logic_error("residual: join of candidates escaped the candidate set");
  return {r, s, best};
}

Arrow Quantaloid::residual_right(const Arrow& v, const Arrow& d) const {
  if (v.cod != d.cod) fail(Errc::TypeMismatch, "residual v under d needs cod v = cod d");
  const Obj q = d.dom, r = v.dom;
  const auto& L = hom(q, r);
  const auto& Ld = hom(q, d.cod);
  Elem best = L.bottom();
  for (std::size_t t = 0; t < L.size(); ++t)
    if (Ld.leq(compose(q, r, d.cod, v.val, static_cast<Elem>(t)), d.val))
      best = L.join2(best, static_cast<Elem>(t));
  if (!Ld.leq(compose(q, r, d.cod, v.val, best), d.val))
    throw std::logic_error("residual: join of candidates escaped the candidate set");
  return {q, r, best};
}

Quantaloid Quantaloid::opposite() const {
  const std::size_t n = object_count();
  Builder b;
  b.objects = d_->objects;
  b.identities = d_->identities;
  b.homs.resize(n * n);
  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r) b.homs[std::size_t(q) * n + r] = hom(r, q);
  b.compose.resize(n * n * n);
  for (Obj q = 0; q < n; ++q)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        const auto& Lg = hom(s, r);  // hom'(r,s)
        const auto& Lf = hom(r, q);  // hom'(q,r)
        std::vector<Elem> t(Lg.size() * Lf.size());
        for (std::size_t g = 0; g < Lg.size(); ++g)
          for (std::size_t f = 0; f < Lf.size(); ++f)
            t[g * Lf.size() + f] = compose(s, r, q, static_cast<Elem>(f), static_cast<Elem>(g));
        b.compose[(std::size_t(q) * n + r) * n + s] = std::move(t);
      }
  return validate(std::move(b), Exec::serial);
}

std::size_t Quantaloid::morphism_count() const {
  std::size_t total = 0;
  for (const auto& L : d_->homs) total += L.size();
  return total;
}

bool Quantaloid::operator==(const Quantaloid& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->objects == o.d_->objects && d_->identities == o.d_->identities &&
         d_->homs == o.d_->homs && d_->compose == o.d_->compose;
}

Obj DiagonalResult::object_of(const Arrow& u) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == u) return static_cast<Obj>(i);
  fail(Errc::UnknownElement, "morphism is not an object of the diagonal quantaloid");
}

DiagonalResult diagonal(const Quantaloid& q, const Caps& caps, Exec ex) {
  const std::size_t n = q.object_count();
  if (q.morphism_count() > caps.diagonal_morphisms)
    fail(Errc::SizeCap, "diagonal construction over " + std::to_string(q.morphism_count()) +
                            " morphisms exceeds the cap of " + std::to_string(caps.diagonal_morphisms));

  DiagonalResult out;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (std::size_t e = 0; e < q.hom(a, b).size(); ++e)
        out.objects.push_back({a, b, static_cast<Elem>(e)});
  const std::size_t m = out.objects.size();

  out.identity_object.resize(n);
  for (Obj a = 0; a < n; ++a) out.identity_object[a] = out.object_of(q.identity_arrow(a));

  auto is_diagonal = [&](const Arrow& u, const Arrow& v, Elem dval) {
    const Arrow d{u.dom, v.cod, dval};
    const Arrow left = q.compose(q.residual_left(d, u), u);
    const Arrow right = q.compose(v, q.residual_right(v, d));
    return left.val == dval && right.val == dval;
  };

  Quantaloid::Builder b;
  b.objects.reserve(m);
  for (const Arrow& u : out.objects)
    b.objects.push_back(q.object_name(u.dom) + "->" + q.object_name(u.cod) + ":" +
                        q.hom(u.dom, u.cod).name(u.val));

  out.members.resize(m * m);
  b.homs.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Arrow& u = out.objects[i];
      const Arrow& v = out.objects[j];
      const auto& amb = q.hom(u.dom, v.cod);
      std::vector<Elem>& mem = out.members[i * m + j];
      for (std::size_t e = 0; e < amb.size(); ++e)
        if (is_diagonal(u, v, static_cast<Elem>(e))) mem.push_back(static_cast<Elem>(e));
      // the member set must be closed under ambient joins (with the ambient
      // bottom as the empty join), otherwise the construction is broken
      for (Elem x : mem)
        for (Elem y : mem) {
          Elem j2 = amb.join2(x, y);
          if (std::find(mem.begin(), mem.end(), j2) == mem.end())
            throw std::logic_error("diagonal hom-set is not closed under ambient joins");
        }
      if (std::find(mem.begin(), mem.end(), amb.bottom()) == mem.end())
        throw std::logic_error("diagonal hom-set is missing the ambient bottom");
      b.homs[i * m + j] = amb.restrict_to(mem);
    }

  auto member_index = [&](std::size_t i, std::size_t j, Elem ambient) -> Elem {
    const auto& mem = out.members[i * m + j];
    auto it = std::find(mem.begin(), mem.end(), ambient);
    if (it == mem.end())
      throw std::logic_error("composite of diagonals is not a diagonal");
    return static_cast<Elem>(it - mem.begin());
  };

  b.compose.resize(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Arrow& u = out.objects[i];
        const Arrow& v = out.objects[j];
        const Arrow& w = out.objects[k];
        const auto& md = out.members[i * m + j];
        const auto& me = out.members[j * m + k];
        std::vector<Elem> t(me.size() * md.size());
        for (std::size_t e = 0; e < me.size(); ++e)
          for (std::size_t d = 0; d < md.size(); ++d) {
            const Arrow da{u.dom, v.cod, md[d]};
            const Arrow ea{v.dom, w.cod, me[e]};
            // (e over v) ∘ d, cross-checked against e ∘ (v under d)
            const Arrow via_left = q.compose(q.residual_left(ea, v), da);
            const Arrow via_right = q.compose(ea, q.residual_right(v, da));
            if (via_left.val != via_right.val)
              throw std::logic_error("the two diagonal composites disagree");
            t[e * md.size() + d] = member_index(i, k, via_left.val);
          }
        b.compose[(i * m + j) * m + k] = std::move(t);
      }

  b.identities.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    b.identities[i] = member_index(i, i, out.objects[i].val);

  out.dq = Quantaloid::validate(std::move(b), ex);

  out.embedding.resize(n * n);
  for (Obj t = 0; t < n; ++t)
    for (Obj s = 0; s < n; ++s) {
      const std::size_t i = out.identity_object[t], j = out.identity_object[s];
      std::vector<Elem>& emb = out.embedding[std::size_t(t) * n + s];
      emb.resize(q.hom(t, s).size());
      for (std::size_t e = 0; e < emb.size(); ++e)
        emb[e] = member_index(i, j, static_cast<Elem>(e));
    }
  return out;
}

bool check_residual_adjunctions(const Quantaloid& q, Exec ex, std::string* witness) {
  const std::size_t n = q.object_count();
  for (Obj qo = 0; qo < n; ++qo)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        const auto& Lu = q.hom(qo, r);
        const auto& Ld = q.hom(qo, s);
        const auto& Lz = q.hom(r, s);
        // left residuals, one per (d, u) pair
        std::vector<Elem> res(Ld.size() * Lu.size());
        for (std::size_t d = 0; d < Ld.size(); ++d)
          for (std::size_t u = 0; u < Lu.size(); ++u)
            res[d * Lu.size() + u] =
                q.residual_left({qo, s, static_cast<Elem>(d)}, {qo, r, static_cast<Elem>(u)}).val;
        std::size_t w = 0;
        bool ok = check_all(ex, Ld.size() * Lu.size() * Lz.size(), [&](std::size_t i) {
          const Elem z = static_cast<Elem>(i % Lz.size());
          const Elem u = static_cast<Elem>((i / Lz.size()) % Lu.size());
          const Elem d = static_cast<Elem>(i / (Lz.size() * Lu.size()));
          const bool lhs = Lz.leq(z, res[std::size_t(d) * Lu.size() + u]);
          const bool rhs = Ld.leq(q.compose(qo, r, s, z, u), d);
          return lhs == rhs;
        }, &w);
        if (!ok) {
          if (witness) {
            const Elem z = static_cast<Elem>(w % Lz.size());
            const Elem u = static_cast<Elem>((w / Lz.size()) % Lu.size());
            const Elem d = static_cast<Elem>(w / (Lz.size() * Lu.size()));
            std::ostringstream os;
            os << "left residual biconditional fails at d=" << Ld.name(d) << ", u=" << Lu.name(u)
               << ", z=" << Lz.name(z) << " over (" << q.object_name(qo) << "," << q.object_name(r)
               << "," << q.object_name(s) << ")";
            *witness = os.str();
          }
          return false;
        }
        // right residuals
        const auto& Lv = q.hom(r, s);
        const auto& Lt = q.hom(qo, r);
        std::vector<Elem> resr(Lv.size() * Ld.size());
        for (std::size_t v = 0; v < Lv.size(); ++v)
          for (std::size_t d = 0; d < Ld.size(); ++d)
            resr[v * Ld.size() + d] =
                q.residual_right({r, s, static_cast<Elem>(v)}, {qo, s, static_cast<Elem>(d)}).val;
        ok = check_all(ex, Lv.size() * Ld.size() * Lt.size(), [&](std::size_t i) {
          const Elem t = static_cast<Elem>(i % Lt.size());
          const Elem d = static_cast<Elem>((i / Lt.size()) % Ld.size());
          const Elem v = static_cast<Elem>(i / (Lt.size() * Ld.size()));
          const bool lhs = Lt.leq(t, resr[std::size_t(v) * Ld.size() + d]);
          const bool rhs = Ld.leq(q.compose(qo, r, s, v, t), d);
          return lhs == rhs;
        }, &w);
        if (!ok) {
          if (witness) {
            const Elem t = static_cast<Elem>(w % Lt.size());
            const Elem d = static_cast<Elem>((w / Lt.size()) % Ld.size());
            const Elem v = static_cast<Elem>(w / (Lt.size() * Ld.size()));
            std::ostringstream os;
            os << "right residual biconditional fails at v=" << Lv.name(v) << ", d=" << Ld.name(d)
               << ", t=" << Lt.name(t) << " over (" << q.object_name(qo) << "," << q.object_name(r)
               << "," << q.object_name(s) << ")";
            *witness = os.str();
          }
          return false;
        }
      }
  return true;
}

bool check_sup_preservation_subsets(const Quantaloid& q, std::string* witness) {
  const std::size_t n = q.object_count();
  for (Obj qo = 0; qo < n; ++qo)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        const auto& Lf = q.hom(qo, r);
        const auto& Lg = q.hom(r, s);
        const auto& Lo = q.hom(qo, s);
        if (Lf.size() > 16 || Lg.size() > 16) fail(Errc::SizeCap, "subset check needs small hom-lattices");
        for (std::size_t g = 0; g < Lg.size(); ++g)
          for (std::size_t mask = 0; mask < (std::size_t(1) << Lf.size()); ++mask) {
            std::vector<Elem> subset, images;
            for (std::size_t e = 0; e < Lf.size(); ++e)
              if (mask & (std::size_t(1) << e)) {
                subset.push_back(static_cast<Elem>(e));
                images.push_back(q.compose(qo, r, s, static_cast<Elem>(g), static_cast<Elem>(e)));
              }
            if (q.compose(qo, r, s, static_cast<Elem>(g), Lf.join(subset)) != Lo.join(images)) {
              if (witness)
                *witness = "g=" + Lg.name(static_cast<Elem>(g)) + " fails on a subset of hom(" +
                           q.object_name(qo) + "," + q.object_name(r) + ")";
              return false;
            }
          }
        for (std::size_t f = 0; f < Lf.size(); ++f)
          for (std::size_t mask = 0; mask < (std::size_t(1) << Lg.size()); ++mask) {
            std::vector<Elem> subset, images;
            for (std::size_t e = 0; e < Lg.size(); ++e)
              if (mask & (std::size_t(1) << e)) {
                subset.push_back(static_cast<Elem>(e));
                images.push_back(q.compose(qo, r, s, static_cast<Elem>(e), static_cast<Elem>(f)));
              }
            if (q.compose(qo, r, s, Lg.join(subset), static_cast<Elem>(f)) != Lo.join(images)) {
              if (witness)
                *witness = "f=" + Lf.name(static_cast<Elem>(f)) + " fails on a subset of hom(" +
                           q.object_name(r) + "," + q.object_name(s) + ")";
              return false;
            }
          }
      }
  return true;
}

}  // namespace quantikit
