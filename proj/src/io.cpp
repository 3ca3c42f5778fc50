#include "quantikit/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "quantikit/error.hpp"

namespace quantikit {

namespace {

[[noreturn]] void wrap_validation(const std::string& path, const std::exception& e) {
  fail(Errc::ValidationError, path + ": " + e.what());
}

const json& expect(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::SyntaxError, path + ": missing key '" + key + "'");
  return *it;
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(Errc::SyntaxError, path + ": expected a string");
  return j.get<std::string>();
}

// "(r->s)*(q->r)" -> the four object names
std::array<std::string, 4> parse_compose_key(const std::string& key) {
  auto bad = [&]() -> std::array<std::string, 4> {
    fail(Errc::SyntaxError, "malformed composition key '" + key + "'");
  };
  if (key.size() < 7 || key.front() != '(' || key.back() != ')') return bad();
  auto mid = key.find(")*(");
  if (mid == std::string::npos) return bad();
  std::string left = key.substr(1, mid - 1);
  std::string right = key.substr(mid + 3, key.size() - mid - 4);
  auto la = left.find("->");
  auto ra = right.find("->");
  if (la == std::string::npos || ra == std::string::npos) return bad();
  return {right.substr(0, ra), right.substr(ra + 2), left.substr(0, la), left.substr(la + 2)};
}

Quantaloid parse_quantaloid_section(const json& j, Exec ex) {
  const std::string path = "quantaloid";
  if (!j.is_object()) fail(Errc::SyntaxError, path + ": expected an object");
  if (j.contains("builtin")) {
    std::string name = expect_string(j.at("builtin"), path + ".builtin");
    std::optional<int> n;
    if (j.contains("n")) {
      if (!j.at("n").is_number_integer()) fail(Errc::SyntaxError, path + ".n: expected an integer");
      n = j.at("n").get<int>();
    }
    try {
      return Quantaloid::builtin(name, n);
    } catch (const Error& e) {
      if (e.code() == Errc::BadParameter) throw;
      wrap_validation(path, e);
    }
  }

  Quantaloid::Builder b;
  for (const auto& o : expect(j, "objects", path)) b.objects.push_back(expect_string(o, path + ".objects"));
  const std::size_t n = b.objects.size();
  auto find_obj = [&](const std::string& name, const std::string& where) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (b.objects[i] == name) return i;
    fail(Errc::UnresolvedReference, where + ": unknown object '" + name + "'");
  };

  b.homs.resize(n * n);
  const json& homs = expect(j, "homs", path);
  std::vector<bool> seen(n * n, false);
  for (const auto& [key, val] : homs.items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos) fail(Errc::SyntaxError, path + ".homs: malformed key '" + key + "'");
    std::size_t q = find_obj(key.substr(0, arrow), path + ".homs");
    std::size_t r = find_obj(key.substr(arrow + 2), path + ".homs");
    std::vector<std::string> elements;
    for (const auto& e : expect(val, "elements", path + ".homs." + key))
      elements.push_back(expect_string(e, path + ".homs." + key));
    std::vector<std::pair<std::string, std::string>> order;
    if (val.contains("leq"))
      for (const auto& p : val.at("leq")) {
        if (!p.is_array() || p.size() != 2) fail(Errc::SyntaxError, path + ".homs." + key + ".leq: expected pairs");
        order.emplace_back(expect_string(p[0], path), expect_string(p[1], path));
      }
    try {
      b.homs[q * n + r] = FiniteLattice::validate(std::move(elements), order);
    } catch (const Error& e) {
      wrap_validation(path + ".homs." + key, e);
    }
    seen[q * n + r] = true;
  }
  for (std::size_t i = 0; i < n * n; ++i)
    if (!seen[i])
      fail(Errc::ValidationError, path + ".homs: no lattice for pair " + b.objects[i / n] + "->" +
                                      b.objects[i % n]);

  b.compose.resize(n * n * n);
  const json& comp = expect(j, "compose", path);
  for (const auto& [key, val] : comp.items()) {
    auto [qn, rn, rn2, sn] = parse_compose_key(key);
    if (rn != rn2) fail(Errc::SyntaxError, path + ".compose: middle objects disagree in '" + key + "'");
    std::size_t q = find_obj(qn, path + ".compose"), r = find_obj(rn, path + ".compose"),
                s = find_obj(sn, path + ".compose");
    const FiniteLattice& lg = b.homs[r * n + s];
    const FiniteLattice& lf = b.homs[q * n + r];
    const FiniteLattice& lo = b.homs[q * n + s];
    std::vector<Elem> table(lg.size() * lf.size(), 0);
    std::vector<bool> filled(table.size(), false);
    for (const auto& row : val) {
      if (!row.is_array() || row.size() != 3)
        fail(Errc::SyntaxError, path + ".compose." + key + ": expected [g, f, gf] triples");
      Elem g, f, gf;
      try {
        g = lg.element(expect_string(row[0], path));
        f = lf.element(expect_string(row[1], path));
        gf = lo.element(expect_string(row[2], path));
      } catch (const Error& e) {
        wrap_validation(path + ".compose." + key, e);
      }
      table[std::size_t(g) * lf.size() + f] = gf;
      filled[std::size_t(g) * lf.size() + f] = true;
    }
    for (bool fl : filled)
      if (!fl) fail(Errc::ValidationError, path + ".compose." + key + ": table is not total");
    b.compose[(q * n + r) * n + s] = std::move(table);
  }
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        if (b.compose[(q * n + r) * n + s].size() !=
            b.homs[r * n + s].size() * b.homs[q * n + r].size())
          fail(Errc::ValidationError, path + ".compose: missing table (" + b.objects[r] + "->" +
                                          b.objects[s] + ")*(" + b.objects[q] + "->" +
                                          b.objects[r] + ")");

  b.identities.resize(n);
  const json& ids = expect(j, "identities", path);
  std::vector<bool> idseen(n, false);
  for (const auto& [key, val] : ids.items()) {
    std::size_t q = find_obj(key, path + ".identities");
    try {
      b.identities[q] = b.homs[q * n + q].element(expect_string(val, path));
    } catch (const Error& e) {
      wrap_validation(path + ".identities." + key, e);
    }
    idseen[q] = true;
  }
  for (std::size_t q = 0; q < n; ++q)
    if (!idseen[q]) fail(Errc::ValidationError, path + ".identities: missing '" + b.objects[q] + "'");

  try {
    return Quantaloid::validate(std::move(b), ex);
  } catch (const Error& e) {
    wrap_validation(path, e);
  }
}

QCategory parse_category(const json& j, const Quantaloid& q, const std::string& path, Exec ex) {
  std::vector<std::string> names;
  std::vector<Obj> extents;
  for (const auto& o : expect(j, "objects", path)) {
    names.push_back(expect_string(expect(o, "name", path + ".objects"), path));
    const std::string ext = expect_string(expect(o, "extent", path + ".objects"), path);
    auto e = q.find_object(ext);
    if (!e) fail(Errc::UnresolvedReference, path + ": unknown extent '" + ext + "'");
    extents.push_back(*e);
  }
  const std::size_t n = names.size();
  auto find = [&](const std::string& nm) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == nm) return i;
    fail(Errc::UnresolvedReference, path + ".hom: unknown object '" + nm + "'");
  };

  // defaults: bottom off the diagonal, the identity on it
  std::vector<Elem> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      hom[x * n + y] = (x == y) ? q.identity(extents[x]) : q.hom(extents[x], extents[y]).bottom();
  if (j.contains("hom"))
    for (const auto& row : j.at("hom")) {
      if (!row.is_array() || row.size() != 3)
        fail(Errc::SyntaxError, path + ".hom: expected [x, y, value] triples");
      std::size_t x = find(expect_string(row[0], path));
      std::size_t y = find(expect_string(row[1], path));
      try {
        hom[x * n + y] = q.hom(extents[x], extents[y]).element(expect_string(row[2], path));
      } catch (const Error& e) {
        wrap_validation(path + ".hom[" + names[x] + "," + names[y] + "]", e);
      }
    }
  try {
    return QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), ex);
  } catch (const Error& e) {
    wrap_validation(path, e);
  }
}

}  // namespace

const QCategory& DefinitionBundle::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) fail(Errc::UnresolvedReference, "unknown category '" + name + "'");
  return it->second;
}
const BundleFunctor& DefinitionBundle::functor(const std::string& name) const {
  auto it = functors.find(name);
  if (it == functors.end()) fail(Errc::UnresolvedReference, "unknown functor '" + name + "'");
  return it->second;
}
const BundleDistributor& DefinitionBundle::distributor(const std::string& name) const {
  auto it = distributors.find(name);
  if (it == distributors.end()) fail(Errc::UnresolvedReference, "unknown distributor '" + name + "'");
  return it->second;
}
const BundleTransform& DefinitionBundle::transform(const std::string& name) const {
  auto it = transforms.find(name);
  if (it == transforms.end()) fail(Errc::UnresolvedReference, "unknown transform '" + name + "'");
  return it->second;
}
ChuObject DefinitionBundle::chu(const std::string& name) const {
  return ChuObject{distributor(name).d};
}

bool DefinitionBundle::operator==(const DefinitionBundle& o) const {
  auto eq_f = [](const BundleFunctor& a, const BundleFunctor& b) {
    return a.from == b.from && a.to == b.to && a.f == b.f;
  };
  auto eq_d = [](const BundleDistributor& a, const BundleDistributor& b) {
    return a.from == b.from && a.to == b.to && a.d == b.d;
  };
  auto eq_t = [](const BundleTransform& a, const BundleTransform& b) {
    return a.from == b.from && a.to == b.to && a.fwd == b.fwd && a.bwd == b.bwd && a.t == b.t;
  };
  auto eq_g = [](const BundleDiagram& a, const BundleDiagram& b) {
    return a.objects == b.objects && a.arrows == b.arrows;
  };
  if (!(version == o.version && q == o.q && categories == o.categories)) return false;
  auto cmp = [](const auto& x, const auto& y, auto eq) {
    if (x.size() != y.size()) return false;
    auto i = x.begin();
    auto j = y.begin();
    for (; i != x.end(); ++i, ++j)
      if (i->first != j->first || !eq(i->second, j->second)) return false;
    return true;
  };
  return cmp(functors, o.functors, eq_f) && cmp(distributors, o.distributors, eq_d) &&
         cmp(transforms, o.transforms, eq_t) && cmp(diagrams, o.diagrams, eq_g);
}

DefinitionBundle parse_bundle(const std::string& text, const Caps& caps, Exec ex) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::SyntaxError, e.what());
  }
  if (!j.is_object()) fail(Errc::SyntaxError, "top level must be an object");

  DefinitionBundle b;
  if (j.contains("version")) {
    if (!j.at("version").is_number_integer()) fail(Errc::SyntaxError, "version: expected an integer");
    b.version = j.at("version").get<int>();
    if (b.version != 1) fail(Errc::SyntaxError, "unsupported format version");
  }

  const json& qj = expect(j, "quantaloid", "");
  b.q = parse_quantaloid_section(qj, ex);
  if (qj.contains("builtin")) {
    b.builtin = qj.at("builtin").get<std::string>();
    if (qj.contains("n")) b.builtin += ":" + std::to_string(qj.at("n").get<int>());
  }

  if (j.contains("categories"))
    for (const auto& [name, cj] : j.at("categories").items())
      b.categories.emplace(name, parse_category(cj, b.q, "categories." + name, ex));

  if (j.contains("functors"))
    for (const auto& [name, fj] : j.at("functors").items()) {
      const std::string path = "functors." + name;
      BundleFunctor bf;
      bf.from = expect_string(expect(fj, "from", path), path);
      bf.to = expect_string(expect(fj, "to", path), path);
      const QCategory& src = b.category(bf.from);
      const QCategory& dst = b.category(bf.to);
      std::vector<std::size_t> map(src.size());
      std::vector<bool> seen(src.size(), false);
      for (const auto& [xn, yn] : expect(fj, "map", path).items()) {
        auto x = src.find(xn);
        if (!x) fail(Errc::UnresolvedReference, path + ".map: unknown source object '" + xn + "'");
        auto y = dst.find(expect_string(yn, path + ".map"));
        if (!y)
          fail(Errc::UnresolvedReference,
               path + ".map: unknown target object '" + yn.get<std::string>() + "'");
        map[*x] = *y;
        seen[*x] = true;
      }
      for (std::size_t x = 0; x < src.size(); ++x)
        if (!seen[x]) fail(Errc::ValidationError, path + ".map: no image for '" + src.name(x) + "'");
      try {
        bf.f = QFunctor::validate(src, dst, std::move(map), ex);
      } catch (const Error& e) {
        wrap_validation(path, e);
      }
      b.functors.emplace(name, std::move(bf));
    }

  if (j.contains("distributors"))
    for (const auto& [name, dj] : j.at("distributors").items()) {
      const std::string path = "distributors." + name;
      BundleDistributor bd;
      bd.from = expect_string(expect(dj, "from", path), path);
      bd.to = expect_string(expect(dj, "to", path), path);
      const QCategory& src = b.category(bd.from);
      const QCategory& dst = b.category(bd.to);
      std::vector<Elem> values(src.size() * dst.size());
      for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = 0; y < dst.size(); ++y)
          values[x * dst.size() + y] = b.q.hom(src.extent(x), dst.extent(y)).bottom();
      if (dj.contains("value"))
        for (const auto& row : dj.at("value")) {
          if (!row.is_array() || row.size() != 3)
            fail(Errc::SyntaxError, path + ".value: expected [x, y, value] triples");
          auto x = src.find(expect_string(row[0], path));
          if (!x) fail(Errc::UnresolvedReference, path + ".value: unknown source object");
          auto y = dst.find(expect_string(row[1], path));
          if (!y) fail(Errc::UnresolvedReference, path + ".value: unknown target object");
          try {
            values[*x * dst.size() + *y] =
                b.q.hom(src.extent(*x), dst.extent(*y)).element(expect_string(row[2], path));
          } catch (const Error& e) {
            wrap_validation(path + ".value[" + src.name(*x) + "," + dst.name(*y) + "]", e);
          }
        }
      try {
        bd.d = QDistributor::validate(src, dst, std::move(values), ex);
      } catch (const Error& e) {
        wrap_validation(path, e);
      }
      b.distributors.emplace(name, std::move(bd));
    }

  if (j.contains("transforms"))
    for (const auto& [name, tj] : j.at("transforms").items()) {
      const std::string path = "transforms." + name;
      BundleTransform bt;
      bt.from = expect_string(expect(tj, "from", path), path);
      bt.to = expect_string(expect(tj, "to", path), path);
      bt.fwd = expect_string(expect(tj, "fwd", path), path);
      bt.bwd = expect_string(expect(tj, "bwd", path), path);
      ChuObject from = b.chu(bt.from);
      ChuObject to = b.chu(bt.to);
      try {
        bt.t = ChuTransform::validate(from, to, b.functor(bt.fwd).f, b.functor(bt.bwd).f, caps, ex);
      } catch (const Error& e) {
        if (e.code() == Errc::UnresolvedReference) throw;
        wrap_validation(path, e);
      }
      b.transforms.emplace(name, std::move(bt));
    }

  if (j.contains("diagrams"))
    for (const auto& [name, gj] : j.at("diagrams").items()) {
      const std::string path = "diagrams." + name;
      BundleDiagram bg;
      for (const auto& o : expect(gj, "objects", path)) {
        std::string on = expect_string(o, path + ".objects");
        b.distributor(on);  // must resolve
        bg.objects.push_back(std::move(on));
      }
      if (gj.contains("arrows"))
        for (const auto& a : gj.at("arrows")) {
          std::string an = expect_string(a, path + ".arrows");
          const BundleTransform& t = b.transform(an);
          auto inside = [&](const std::string& nm) {
            return std::find(bg.objects.begin(), bg.objects.end(), nm) != bg.objects.end();
          };
          if (!inside(t.from) || !inside(t.to))
            fail(Errc::UnresolvedReference,
                 path + ".arrows: transform '" + an + "' does not stay within the diagram");
          bg.arrows.push_back(std::move(an));
        }
      b.diagrams.emplace(name, std::move(bg));
    }

  return b;
}

Quantaloid resolve_quantaloid(const std::string& spec, const Caps& caps, Exec ex) {
  if (spec.rfind("builtin:", 0) == 0) {
    std::string rest = spec.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return Quantaloid::builtin(rest);
    try {
      return Quantaloid::builtin(rest.substr(0, colon), std::stoi(rest.substr(colon + 1)));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::BadParameter, "malformed builtin spec '" + spec + "'");
    }
  }
  std::ifstream in(spec);
  if (!in) fail(Errc::SyntaxError, "cannot open '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str(), caps, ex).q;
}

ChuDiagram resolve_diagram(const DefinitionBundle& b, const std::string& name) {
  auto it = b.diagrams.find(name);
  if (it == b.diagrams.end()) fail(Errc::UnresolvedReference, "unknown diagram '" + name + "'");
  ChuDiagram d;
  for (const auto& on : it->second.objects) d.nodes.push_back(b.chu(on));
  for (const auto& an : it->second.arrows) {
    const BundleTransform& t = b.transform(an);
    auto index = [&](const std::string& nm) -> std::size_t {
      const auto& os = it->second.objects;
      return static_cast<std::size_t>(std::find(os.begin(), os.end(), nm) - os.begin());
    };
    d.arrows.push_back({index(t.from), index(t.to), t.t});
  }
  return d;
}

json quantaloid_json(const Quantaloid& q, const std::string& builtin) {
  if (!builtin.empty()) {
    json out;
    auto colon = builtin.find(':');
    if (colon == std::string::npos) {
      out["builtin"] = builtin;
    } else {
      out["builtin"] = builtin.substr(0, colon);
      out["n"] = std::stoi(builtin.substr(colon + 1));
    }
    return out;
  }
  const std::size_t n = q.object_count();
  json out;
  out["objects"] = json::array();
  for (Obj i = 0; i < n; ++i) out["objects"].push_back(q.object_name(i));
  json homs = json::object();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      const FiniteLattice& L = q.hom(a, b);
      json lj;
      lj["elements"] = L.names();
      json leq = json::array();
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y)
          if (L.leq(x, y)) leq.push_back(json::array({L.name(x), L.name(y)}));
      lj["leq"] = std::move(leq);
      homs[q.object_name(a) + "->" + q.object_name(b)] = std::move(lj);
    }
  out["homs"] = std::move(homs);
  json comp = json::object();
  for (Obj a = 0; a < n; ++a)
    for (Obj r = 0; r < n; ++r)
      for (Obj s = 0; s < n; ++s) {
        json rows = json::array();
        const FiniteLattice& lg = q.hom(r, s);
        const FiniteLattice& lf = q.hom(a, r);
        const FiniteLattice& lo = q.hom(a, s);
        for (Elem g = 0; g < lg.size(); ++g)
          for (Elem f = 0; f < lf.size(); ++f)
            rows.push_back(json::array(
                {lg.name(g), lf.name(f), lo.name(q.compose(a, r, s, g, f))}));
        comp["(" + q.object_name(r) + "->" + q.object_name(s) + ")*(" + q.object_name(a) + "->" +
             q.object_name(r) + ")"] = std::move(rows);
      }
  out["compose"] = std::move(comp);
  json ids = json::object();
  for (Obj a = 0; a < n; ++a) ids[q.object_name(a)] = q.hom(a, a).name(q.identity(a));
  out["identities"] = std::move(ids);
  return out;
}

json category_json(const QCategory& c) {
  json out;
  out["objects"] = json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    out["objects"].push_back(
        {{"name", c.name(i)}, {"extent", c.quantaloid().object_name(c.extent(i))}});
  json hom = json::array();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      hom.push_back(json::array(
          {c.name(x), c.name(y), c.quantaloid().hom(c.extent(x), c.extent(y)).name(c.hom(x, y))}));
  out["hom"] = std::move(hom);
  return out;
}

json functor_map_json(const QFunctor& f) {
  json map = json::object();
  for (std::size_t x = 0; x < f.source().size(); ++x)
    map[f.source().name(x)] = f.target().name(f.map(x));
  return json{{"map", std::move(map)}};
}

json distributor_values_json(const QDistributor& d) {
  json rows = json::array();
  for (std::size_t x = 0; x < d.source().size(); ++x)
    for (std::size_t y = 0; y < d.target().size(); ++y)
      rows.push_back(json::array({d.source().name(x), d.target().name(y),
                                  d.source()
                                      .quantaloid()
                                      .hom(d.source().extent(x), d.target().extent(y))
                                      .name(d.value(x, y))}));
  return rows;
}

json chu_object_json(const ChuObject& o) {
  json out;
  out["dom"] = category_json(o.dom());
  out["cod"] = category_json(o.cod());
  out["value"] = distributor_values_json(o.dist);
  return out;
}

json transform_json(const ChuTransform& t) {
  json out;
  out["fwd"] = functor_map_json(t.fwd());
  out["bwd"] = functor_map_json(t.bwd());
  return out;
}

json oracle_json(const OracleReport& r) {
  json out;
  out["kind"] = r.kind;
  out["status"] = r.certified ? "certified" : "counterexample";
  out["probes"] = r.probes;
  out["cones"] = r.cones;
  if (!r.certified) {
    out["stage"] = r.stage;
    out["failure"] = r.failure;
    json wf = json::array();
    for (const auto& f : r.witness_functors) wf.push_back(functor_map_json(f));
    out["witness_functors"] = std::move(wf);
    json wt = json::array();
    for (const auto& t : r.witness_transforms) wt.push_back(transform_json(t));
    out["witness_transforms"] = std::move(wt);
  }
  if (!r.stats.empty()) {
    json st = json::object();
    for (const auto& [k, v] : r.stats) st[k] = v;
    out["stats"] = std::move(st);
  }
  return out;
}

json error_json(const Error& e) {
  return json{{"error", {{"code", errc_name(e.code())}, {"message", e.message()}}}};
}

json diagonal_json(const DiagonalResult& d) {
  json out;
  out["quantaloid"] = quantaloid_json(d.dq);
  json emb = json::object();
  const Quantaloid& dq = d.dq;
  for (std::size_t i = 0; i < d.objects.size(); ++i) emb[dq.object_name(static_cast<Obj>(i))] = i;
  out["objects"] = std::move(emb);
  return out;
}

std::string emit_bundle(const DefinitionBundle& b) {
  json out;
  out["version"] = b.version;
  out["quantaloid"] = quantaloid_json(b.q, b.builtin);
  json cats = json::object();
  for (const auto& [name, c] : b.categories) cats[name] = category_json(c);
  out["categories"] = std::move(cats);
  json fs = json::object();
  for (const auto& [name, f] : b.functors) {
    json fj = functor_map_json(f.f);
    fj["from"] = f.from;
    fj["to"] = f.to;
    fs[name] = std::move(fj);
  }
  out["functors"] = std::move(fs);
  json ds = json::object();
  for (const auto& [name, d] : b.distributors) {
    json dj;
    dj["from"] = d.from;
    dj["to"] = d.to;
    dj["value"] = distributor_values_json(d.d);
    ds[name] = std::move(dj);
  }
  out["distributors"] = std::move(ds);
  json ts = json::object();
  for (const auto& [name, t] : b.transforms)
    ts[name] = json{{"from", t.from}, {"to", t.to}, {"fwd", t.fwd}, {"bwd", t.bwd}};
  out["transforms"] = std::move(ts);
  json gs = json::object();
  for (const auto& [name, g] : b.diagrams)
    gs[name] = json{{"objects", g.objects}, {"arrows", g.arrows}};
  out["diagrams"] = std::move(gs);
  return emit_report(out);
}

std::string emit_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace quantikit
