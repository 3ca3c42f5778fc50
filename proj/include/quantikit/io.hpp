#pragma once

#include <json.hpp>

#include "quantikit/error.hpp"
#include "quantikit/oracle.hpp"

namespace quantikit {

using nlohmann::json;

struct BundleFunctor {
  std::string from, to;
  QFunctor f;
};
struct BundleDistributor {
  std::string from, to;
  QDistributor d;
};
struct BundleTransform {
  std::string from, to, fwd, bwd;
  ChuTransform t;
};
struct BundleDiagram {
  std::vector<std::string> objects;  // distributor names
  std::vector<std::string> arrows;   // transform names
};

/// A fully resolved and validated definition file: one quantaloid plus named
/// categories, functors, distributors, transforms and diagrams over it.
struct DefinitionBundle {
  int version = 1;
  Quantaloid q;
  std::string builtin;  // "two" / "chain:5", empty for explicit quantaloids
  std::map<std::string, QCategory> categories;
  std::map<std::string, BundleFunctor> functors;
  std::map<std::string, BundleDistributor> distributors;
  std::map<std::string, BundleTransform> transforms;
  std::map<std::string, BundleDiagram> diagrams;

  const QCategory& category(const std::string& name) const;
  const BundleFunctor& functor(const std::string& name) const;
  const BundleDistributor& distributor(const std::string& name) const;
  const BundleTransform& transform(const std::string& name) const;
  ChuObject chu(const std::string& name) const;

  bool operator==(const DefinitionBundle& o) const;
};

DefinitionBundle parse_bundle(const std::string& text, const Caps& caps = caps_from_env(),
                              Exec ex = Exec::parallel);

/// Resolves "builtin:two" / "builtin:chain:5"; anything else is read as a
/// file path whose bundle supplies the quantaloid.
Quantaloid resolve_quantaloid(const std::string& spec, const Caps& caps = caps_from_env(),
                              Exec ex = Exec::parallel);

/// Canonical re-emission; parse(emit_bundle(b)) resolves to b again.
std::string emit_bundle(const DefinitionBundle& b);

ChuDiagram resolve_diagram(const DefinitionBundle& b, const std::string& name);

// report fragments
json quantaloid_json(const Quantaloid& q, const std::string& builtin = "");
json category_json(const QCategory& c);
json functor_map_json(const QFunctor& f);
json distributor_values_json(const QDistributor& d);
json chu_object_json(const ChuObject& o);
json transform_json(const ChuTransform& t);
json oracle_json(const OracleReport& r);
json error_json(const Error& e);
json diagonal_json(const DiagonalResult& d);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string emit_report(const json& j);

}  // namespace quantikit
