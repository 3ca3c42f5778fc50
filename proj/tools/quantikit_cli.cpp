// Command line driver: validation, constructions, checks, separation and
// brute-force certification over definition bundles.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quantikit/error.hpp"
#include "quantikit/io.hpp"

using namespace quantikit;

namespace {

struct Options {
  std::string bundle_path;
  std::string out_path;
  std::vector<std::string> args;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SyntaxError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DefinitionBundle load(const std::string& path, const Caps& caps) {
  return parse_bundle(slurp(path), caps);
}

std::vector<std::string> split_args(const std::string& joined) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : joined) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int emit(const json& report, const std::string& out_path, bool success) {
  const std::string text = emit_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return success ? 0 : 1;
}

TestSuite suite_from_bundle(const DefinitionBundle& b, const Caps& caps) {
  TestSuite s;
  s.q = b.q;
  s.caps = caps;
  for (const auto& [name, c] : b.categories) s.probes.push_back(c);
  for (const auto& [name, d] : b.distributors) s.chu_probes.push_back(ChuObject{d.d});
  return s;
}

json construct_report(const std::string& kind, const DefinitionBundle& b,
                      const std::vector<std::string>& args, bool alternative, const Caps& caps) {
  json report;
  report["kind"] = kind;
  if (kind == "product" || kind == "terminal") {
    std::vector<QCategory> factors;
    for (const auto& a : args) factors.push_back(b.category(a));
    ProductResult r = product(b.q, factors);
    report["category"] = category_json(r.category);
    json ps = json::array();
    for (const auto& p : r.projections) ps.push_back(functor_map_json(p));
    report["projections"] = std::move(ps);
  } else if (kind == "coproduct" || kind == "initial") {
    std::vector<QCategory> parts;
    for (const auto& a : args) parts.push_back(b.category(a));
    CoproductResult r = coproduct(b.q, parts);
    report["category"] = category_json(r.category);
    json is = json::array();
    for (const auto& i : r.injections) is.push_back(functor_map_json(i));
    report["injections"] = std::move(is);
  } else if (kind == "equalizer" || kind == "coequalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, kind + " needs --args f,g");
    const QFunctor& f = b.functor(args[0]).f;
    const QFunctor& g = b.functor(args[1]).f;
    if (kind == "equalizer") {
      EqualizerResult r = equalizer(f, g);
      report["category"] = category_json(r.category);
      report["inclusion"] = functor_map_json(r.inclusion);
    } else {
      CoequalizerResult r = coequalizer(f, g);
      report["category"] = category_json(r.category);
      report["projection"] = functor_map_json(r.projection);
    }
  } else if (kind == "presheaf") {
    if (args.size() != 1) fail(Errc::BadParameter, "presheaf needs --args X");
    PresheafCategory px = PresheafCategory::build(b.category(args[0]), caps);
    report["category"] = category_json(px.category());
    report["yoneda"] = functor_map_json(yoneda(px));
  } else if (kind == "diagonal") {
    report["diagonal"] = diagonal_json(diagonal(b.q, caps));
  } else if (kind == "opposite") {
    if (args.empty()) {
      report["quantaloid"] = quantaloid_json(b.q.opposite());
    } else {
      report["category"] = category_json(opposite_category(b.category(args[0])));
    }
  } else if (kind == "chu-product" || kind == "chu-coproduct") {
    std::vector<ChuObject> family;
    for (const auto& a : args) family.push_back(b.chu(a));
    if (kind == "chu-product") {
      ChuProductResult r = chu_product(b.q, family);
      report["object"] = chu_object_json(r.object);
      json ps = json::array();
      for (const auto& p : r.projections) ps.push_back(transform_json(p));
      report["projections"] = std::move(ps);
    } else {
      ChuCoproductResult r = chu_coproduct(b.q, family);
      report["object"] = chu_object_json(r.object);
      json is = json::array();
      for (const auto& i : r.injections) is.push_back(transform_json(i));
      report["injections"] = std::move(is);
    }
  } else if (kind == "chu-equalizer" || kind == "chu-coequalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, kind + " needs --args t1,t2");
    const ChuTransform& t1 = b.transform(args[0]).t;
    const ChuTransform& t2 = b.transform(args[1]).t;
    if (kind == "chu-equalizer") {
      ChuEqualizerResult r = chu_equalizer(t1, t2);
      report["object"] = chu_object_json(r.object);
      report["inclusion"] = transform_json(r.inclusion);
    } else {
      ChuCoequalizerResult r = chu_coequalizer(t1, t2);
      report["object"] = chu_object_json(r.object);
      report["projection"] = transform_json(r.projection);
    }
  } else if (kind == "dom-lift") {
    if (args.size() < 2) fail(Errc::BadParameter, "dom-lift needs --args diagram,tip[,leg...]");
    ChuDiagram d = resolve_diagram(b, args[0]);
    const QCategory& tip = b.category(args[1]);
    std::vector<QFunctor> cone;
    for (std::size_t i = 2; i < args.size(); ++i) cone.push_back(b.functor(args[i]).f);
    DomLiftResult r = dom_initial_lift(d, tip, cone, caps);
    report["object"] = chu_object_json(r.object);
    json cs = json::array();
    for (const auto& c : r.cone) cs.push_back(transform_json(c));
    report["cone"] = std::move(cs);
    report["debug"] = json{{"colimit", category_json(r.codomain_colimit.object)},
                           {"presheaves", r.tip_presheaves.count()},
                           {"transpose", functor_map_json(r.transpose_functor)}};
  } else if (kind == "generators") {
    GeneratorFamily g = GeneratorFamily::build(b.q, alternative, caps);
    json ms = json::array();
    for (const auto& m : g.members()) ms.push_back(chu_object_json(m));
    report["members"] = std::move(ms);
  } else {
    fail(Errc::BadParameter, "unknown construction '" + kind + "'");
  }
  return report;
}

json check_report(const std::string& kind, const DefinitionBundle& b, const std::string& name,
                  const std::string& name2, bool* okOut) {
  json report;
  report["kind"] = kind;
  report["name"] = name;
  bool ok = true;
  if (kind == "category") {
    report["category"] = category_json(b.category(name));
    report["status"] = "valid";
  } else if (kind == "functor") {
    report["functor"] = functor_map_json(b.functor(name).f);
    report["status"] = "valid";
  } else if (kind == "distributor") {
    report["value"] = distributor_values_json(b.distributor(name).d);
    report["status"] = "valid";
  } else if (kind == "chu") {
    report["transform"] = transform_json(b.transform(name).t);
    report["status"] = "valid";
  } else if (kind == "adjunction") {
    OracleReport r = check_graph_adjunction(b.functor(name).f);
    report = oracle_json(r);
    ok = r.certified;
  } else if (kind == "leq") {
    if (name2.empty()) fail(Errc::BadParameter, "check leq needs --name and --name2");
    bool le = functor_leq(b.functor(name).f, b.functor(name2).f);
    report["name2"] = name2;
    report["leq"] = le;
    report["status"] = "computed";
  } else {
    fail(Errc::BadParameter, "unknown check '" + kind + "'");
  }
  if (okOut) *okOut = ok;
  return report;
}

json oracle_report(const std::string& kind, const DefinitionBundle& b,
                   const std::vector<std::string>& args, const std::string& name, bool alternative,
                   const Caps& caps, bool* okOut) {
  TestSuite suite = suite_from_bundle(b, caps);
  OracleReport r;
  if (kind == "product") {
    std::vector<QCategory> fs;
    for (const auto& a : args) fs.push_back(b.category(a));
    r = check_product(product(b.q, fs), fs, suite);
  } else if (kind == "coproduct") {
    std::vector<QCategory> fs;
    for (const auto& a : args) fs.push_back(b.category(a));
    r = check_coproduct(coproduct(b.q, fs), fs, suite);
  } else if (kind == "equalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, "oracle equalizer needs --args f,g");
    const QFunctor& f = b.functor(args[0]).f;
    const QFunctor& g = b.functor(args[1]).f;
    r = check_equalizer(equalizer(f, g), f, g, suite);
  } else if (kind == "coequalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, "oracle coequalizer needs --args f,g");
    const QFunctor& f = b.functor(args[0]).f;
    const QFunctor& g = b.functor(args[1]).f;
    r = check_coequalizer(coequalizer(f, g), f, g, suite);
  } else if (kind == "chu-product") {
    std::vector<ChuObject> fam;
    for (const auto& a : args) fam.push_back(b.chu(a));
    r = check_chu_product(chu_product(b.q, fam), fam, suite);
  } else if (kind == "chu-coproduct") {
    std::vector<ChuObject> fam;
    for (const auto& a : args) fam.push_back(b.chu(a));
    r = check_chu_coproduct(chu_coproduct(b.q, fam), fam, suite);
  } else if (kind == "chu-equalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, "oracle chu-equalizer needs --args t1,t2");
    const ChuTransform& t1 = b.transform(args[0]).t;
    const ChuTransform& t2 = b.transform(args[1]).t;
    r = check_chu_equalizer(chu_equalizer(t1, t2), t1, t2, suite);
  } else if (kind == "chu-coequalizer") {
    if (args.size() != 2) fail(Errc::BadParameter, "oracle chu-coequalizer needs --args t1,t2");
    const ChuTransform& t1 = b.transform(args[0]).t;
    const ChuTransform& t2 = b.transform(args[1]).t;
    r = check_chu_coequalizer(chu_coequalizer(t1, t2), t1, t2, suite);
  } else if (kind == "adjunction") {
    r = check_graph_adjunction(b.functor(name).f);
  } else if (kind == "generating") {
    r = check_generating(suite, GeneratorFamily::build(b.q, alternative, caps));
  } else if (kind == "dom-lift") {
    if (args.size() < 2) fail(Errc::BadParameter, "oracle dom-lift needs --args diagram,tip[,leg...]");
    ChuDiagram d = resolve_diagram(b, args[0]);
    const QCategory& tip = b.category(args[1]);
    std::vector<QFunctor> cone;
    for (std::size_t i = 2; i < args.size(); ++i) cone.push_back(b.functor(args[i]).f);
    r = check_dom_initial(dom_initial_lift(d, tip, cone, caps), d, cone, suite);
  } else {
    fail(Errc::BadParameter, "unknown oracle kind '" + kind + "'");
  }
  if (okOut) *okOut = r.certified;
  return oracle_json(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantaloids, enriched categories and Chu objects"};
  app.require_subcommand(1);

  const Caps caps = caps_from_env();

  std::string bundle_path, out_path, name, name2, t1name, t2name, joined_args, of_spec;
  bool alternative = false;

  auto* validate_cmd = app.add_subcommand("validate", "parse a bundle and re-emit it canonically");
  validate_cmd->add_option("bundle", bundle_path)->required();
  validate_cmd->add_option("--out", out_path);

  auto* construct_cmd = app.add_subcommand("construct", "build a (co)limit or derived structure");
  std::string construct_kind;
  construct_cmd->add_option("kind", construct_kind)->required();
  construct_cmd->add_option("--bundle", bundle_path)->required();
  construct_cmd->add_option("--args", joined_args);
  construct_cmd->add_flag("--alternative", alternative);
  construct_cmd->add_option("--out", out_path);

  auto* check_cmd = app.add_subcommand("check", "validate a named entity or compute an order");
  std::string check_kind;
  check_cmd->add_option("kind", check_kind)->required();
  check_cmd->add_option("--bundle", bundle_path)->required();
  check_cmd->add_option("--name", name)->required();
  check_cmd->add_option("--name2", name2);
  check_cmd->add_option("--out", out_path);

  auto* separate_cmd = app.add_subcommand("separate", "separate two parallel transforms");
  separate_cmd->add_option("--bundle", bundle_path)->required();
  separate_cmd->add_option("--t1", t1name)->required();
  separate_cmd->add_option("--t2", t2name)->required();
  separate_cmd->add_flag("--alternative", alternative);
  separate_cmd->add_option("--out", out_path);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force certification");
  std::string oracle_kind;
  oracle_cmd->add_option("kind", oracle_kind)->required();
  oracle_cmd->add_option("--bundle", bundle_path)->required();
  oracle_cmd->add_option("--args", joined_args);
  oracle_cmd->add_option("--name", name);
  oracle_cmd->add_flag("--alternative", alternative);
  oracle_cmd->add_option("--out", out_path);

  auto* builtin_cmd = app.add_subcommand("builtin", "emit a builtin quantaloid");
  std::string builtin_kind;
  builtin_cmd->add_option("kind", builtin_kind)->required();
  builtin_cmd->add_option("--of", of_spec);
  builtin_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      DefinitionBundle b = load(bundle_path, caps);
      return emit(json::parse(emit_bundle(b)), out_path, true);
    }
    if (*construct_cmd) {
      DefinitionBundle b = load(bundle_path, caps);
      return emit(construct_report(construct_kind, b, split_args(joined_args), alternative, caps),
                  out_path, true);
    }
    if (*check_cmd) {
      DefinitionBundle b = load(bundle_path, caps);
      bool ok = true;
      json r = check_report(check_kind, b, name, name2, &ok);
      return emit(r, out_path, ok);
    }
    if (*separate_cmd) {
      DefinitionBundle b = load(bundle_path, caps);
      GeneratorFamily gens = GeneratorFamily::build(b.q, alternative, caps);
      Separation s = separate(b.transform(t1name).t, b.transform(t2name).t, gens, caps);
      json r;
      r["kind"] = "separate";
      r["case"] = s.case_used;
      r["generator"] = chu_object_json(s.generator);
      r["morphism"] = transform_json(s.m);
      return emit(r, out_path, true);
    }
    if (*oracle_cmd) {
      DefinitionBundle b = load(bundle_path, caps);
      bool ok = true;
      json r = oracle_report(oracle_kind, b, split_args(joined_args), name, alternative, caps, &ok);
      return emit(r, out_path, ok);
    }
    if (*builtin_cmd) {
      if (builtin_kind == "diagonal") {
        if (of_spec.empty()) fail(Errc::BadParameter, "builtin diagonal needs --of");
        Quantaloid q = resolve_quantaloid(of_spec, caps);
        return emit(json{{"kind", "diagonal"}, {"diagonal", diagonal_json(diagonal(q, caps))}},
                    out_path, true);
      }
      std::string spec = "builtin:" + builtin_kind;
      Quantaloid q = resolve_quantaloid(spec, caps);
      return emit(json{{"kind", "builtin"}, {"quantaloid", quantaloid_json(q, builtin_kind)}},
                  out_path, true);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    emit(error_json(e), out_path, false);
    switch (e.code()) {
      case Errc::SyntaxError:
      case Errc::UnresolvedReference:
      case Errc::BadParameter:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
