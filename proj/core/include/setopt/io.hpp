#ifndef SETOPT_IO_HPP
#define SETOPT_IO_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"
#include "setopt/sets.hpp"
#include "setopt/usop.hpp"

// JSON ingestion and report serialization. Every malformed input raises
// SchemaError; rationals are written as strings "p/q".

namespace setopt::io {

using json = nlohmann::json;

/// Reads and parses a JSON file (SchemaError "FileUnreadable" / "MalformedJson").
json load_file(const std::filesystem::path& path);

/// A string "p/q" or an integer number. Floating-point numbers are rejected.
Rational rational_from_json(const json& j);
Vector vector_from_json(const json& j);

/// {"dim": n, "facets": [...]} or {"dim": n, "rays": [...]}.
PolyhedralCone cone_from_json(const json& j);
/// {"points": [...]} or {"vertices": [...], "rays": [...]}.
VSet set_from_json(const json& j);
/// {"members": [{"label": ..., "set": {...}}, ...]}. A bare set is read as a
/// one-member family labelled "0".
SetFamily family_from_json(const json& j);
/// Decisions, uncertainty, objective block and constraint blocks; table keys
/// are "x,u".
usop::Instance instance_from_json(const json& j);

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const ExtReal& v);
json to_json(const std::vector<ExtReal>& v);
json to_json(const VSet& s);
json to_json(const PolyhedralCone& k);
json to_json(const SetFamily& f);
json to_json(const ScalarizationReport& r);
json to_json(const RelationVerdict& v);
json to_json(const usop::GapVector& g);
json to_json(const usop::RobustVerdict& v);

}  // namespace setopt::io

#endif  // SETOPT_IO_HPP
