#include "setopt/io.hpp"

#include <fstream>
#include <map>

namespace setopt::io {

namespace {

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object()) throw SchemaError("ExpectedObject", std::string(where) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("MissingField", std::string(where) + " lacks \"" + key + "\"");
  return *it;
}

std::vector<Vector> vectors_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError("ExpectedArray", std::string(where) + " must be an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

std::vector<std::string> labels_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError("ExpectedArray", std::string(where) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw SchemaError("ExpectedString", std::string(where) + " labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

void require_dim(std::size_t want, std::size_t got, const char* where) {
  if (want != got) {
    throw SchemaError("DimensionMismatch", std::string(where) + ": declared dimension " + std::to_string(want) +
                                              ", found " + std::to_string(got));
  }
}

usop::SetTable table_from_json(const json& j, const std::vector<std::string>& xs, const std::vector<std::string>& us,
                               std::size_t dim, const char* where) {
  if (!j.is_object()) throw SchemaError("ExpectedObject", std::string(where) + " table must be an object");
  std::map<std::string, VSet> cells;
  for (auto it = j.begin(); it != j.end(); ++it) cells.emplace(it.key(), set_from_json(it.value()));
  usop::SetTable out;
  for (const auto& x : xs) {
    std::vector<VSet> row;
    for (const auto& u : us) {
      auto c = cells.find(x + "," + u);
      if (c == cells.end()) throw SchemaError("IncompleteTable", std::string(where) + " misses \"" + x + "," + u + "\"");
      require_dim(dim, c->second.dim(), where);
      row.push_back(c->second);
      cells.erase(c);
    }
    out.push_back(std::move(row));
  }
  if (!cells.empty()) {
    throw SchemaError("UnknownTableKey", std::string(where) + " has unknown key \"" + cells.begin()->first + "\"");
  }
  return out;
}

struct Block {
  PolyhedralCone cone;
  Vector e;
  usop::SetTable table;
};

Block block_from_json(const json& j, const char* table_key, const std::vector<std::string>& xs,
                      const std::vector<std::string>& us, const char* where) {
  const json& d = field(j, "dim", where);
  if (!d.is_number_unsigned()) throw SchemaError("ExpectedInteger", std::string(where) + " dim must be a count");
  const auto dim = d.get<std::size_t>();
  PolyhedralCone cone = cone_from_json(field(j, "cone", where));
  require_dim(dim, cone.dim(), where);
  Vector e = vector_from_json(field(j, "e", where));
  require_dim(dim, e.dim(), where);
  return {std::move(cone), std::move(e), table_from_json(field(j, table_key, where), xs, us, dim, where)};
}

}  // namespace

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("FileUnreadable", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw SchemaError("MalformedJson", path.string() + ": " + err.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(Integer(j.get<unsigned long long>()));
  if (j.is_number_float()) {
    throw SchemaError("InexactNumber", "floating-point value " + j.dump() + "; write rationals as strings \"p/q\"");
  }
  throw SchemaError("MalformedRational", "expected a rational, got " + j.dump());
}

Vector vector_from_json(const json& j) {
  if (j.is_string()) return Vector::parse(j.get<std::string>());
  if (!j.is_array() || j.empty()) throw SchemaError("MalformedVector", "expected a nonempty array, got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Vector(std::move(coords));
}

PolyhedralCone cone_from_json(const json& j) {
  const json& d = field(j, "dim", "cone");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
    throw SchemaError("ExpectedInteger", "cone dim must be a positive count");
  }
  const auto dim = d.get<std::size_t>();
  const bool has_facets = j.contains("facets");
  const bool has_rays = j.contains("rays");
  if (has_facets == has_rays) throw SchemaError("ConeRepresentation", "cone needs exactly one of \"facets\", \"rays\"");
  std::vector<Vector> vs = vectors_from_json(j.at(has_facets ? "facets" : "rays"), "cone");
  for (const auto& v : vs) require_dim(dim, v.dim(), "cone");
  if (has_facets) return PolyhedralCone(dim, std::move(vs));
  return cone_from_generators(vs);
}

VSet set_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("ExpectedObject", "set must be a JSON object");
  const bool has_points = j.contains("points");
  const bool has_vertices = j.contains("vertices");
  if (has_points == has_vertices) throw SchemaError("SetRepresentation", "set needs exactly one of \"points\", \"vertices\"");
  if (has_points) {
    if (j.contains("rays")) throw SchemaError("SetRepresentation", "finite point sets carry no rays");
    auto pts = vectors_from_json(j.at("points"), "set points");
    if (pts.empty()) throw SchemaError("EmptySet", "set has no points");
    for (const auto& p : pts) require_dim(pts.front().dim(), p.dim(), "set points");
    return VSet::points(std::move(pts));
  }
  auto vs = vectors_from_json(j.at("vertices"), "set vertices");
  if (vs.empty()) throw SchemaError("EmptySet", "set has no vertices");
  std::vector<Vector> rs = j.contains("rays") ? vectors_from_json(j.at("rays"), "set rays") : std::vector<Vector>{};
  for (const auto& v : vs) require_dim(vs.front().dim(), v.dim(), "set vertices");
  for (const auto& r : rs) require_dim(vs.front().dim(), r.dim(), "set rays");
  return VSet::polyhedron(std::move(vs), std::move(rs));
}

SetFamily family_from_json(const json& j) {
  if (j.is_object() && !j.contains("members")) return SetFamily::singleton(set_from_json(j));
  const json& ms = field(j, "members", "family");
  if (!ms.is_array() || ms.empty()) throw SchemaError("ExpectedArray", "family members must be a nonempty array");
  std::vector<FamilyMember> members;
  for (const auto& m : ms) {
    const json& l = field(m, "label", "family member");
    if (!l.is_string()) throw SchemaError("ExpectedString", "member label must be a string");
    members.push_back({l.get<std::string>(), set_from_json(field(m, "set", "family member"))});
  }
  return SetFamily(std::move(members));
}

usop::Instance instance_from_json(const json& j) {
  auto xs = labels_from_json(field(j, "decisions", "instance"), "decisions");
  auto us = labels_from_json(field(j, "uncertainty", "instance"), "uncertainty");
  for (const auto& l : xs) {
    if (l.find(',') != std::string::npos) throw SchemaError("MalformedLabel", "labels may not contain ','");
  }
  for (const auto& l : us) {
    if (l.find(',') != std::string::npos) throw SchemaError("MalformedLabel", "labels may not contain ','");
  }
  Block obj = block_from_json(field(j, "objective", "instance"), "H", xs, us, "objective");
  std::vector<usop::ConstraintBlock> cons;
  if (j.contains("constraints")) {
    const json& cs = j.at("constraints");
    if (!cs.is_array()) throw SchemaError("ExpectedArray", "constraints must be an array");
    for (const auto& c : cs) {
      Block b = block_from_json(c, "F", xs, us, "constraint");
      cons.push_back({std::move(b.cone), std::move(b.e), std::move(b.table)});
    }
  }
  return usop::Instance(std::move(xs), std::move(us), {std::move(obj.cone), std::move(obj.e), std::move(obj.table)},
                        std::move(cons));
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

json to_json(const ExtReal& v) { return v.str(); }

json to_json(const std::vector<ExtReal>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const VSet& s) {
  json out = json::object();
  json vs = json::array();
  for (const auto& v : s.vertices()) vs.push_back(to_json(v));
  if (s.is_points()) {
    out["points"] = vs;
    return out;
  }
  out["vertices"] = vs;
  json rs = json::array();
  for (const auto& r : s.rays()) rs.push_back(to_json(r));
  out["rays"] = rs;
  return out;
}

json to_json(const PolyhedralCone& k) {
  json fs = json::array();
  for (const auto& f : k.facets()) fs.push_back(to_json(f));
  return {{"dim", k.dim()}, {"facets", fs}};
}

json to_json(const SetFamily& f) {
  json ms = json::array();
  for (const auto& m : f.members()) ms.push_back({{"label", m.label}, {"set", to_json(m.set)}});
  return {{"members", ms}};
}

json to_json(const ScalarizationReport& r) {
  json out{{"value", to_json(r.value)}, {"exactness", to_string(r.exactness)}, {"k_proper", r.k_proper}};
  if (r.attained_outer) out["attained_outer"] = to_json(*r.attained_outer);
  if (r.attained_inner) out["attained_inner"] = to_json(*r.attained_inner);
  if (r.inner_ray) out["inner_ray"] = to_json(*r.inner_ray);
  if (r.outer_ray) out["outer_ray"] = to_json(*r.outer_ray);
  return out;
}

json to_json(const RelationVerdict& v) {
  json w = json::object();
  if (v.witness.left_label) w["left_label"] = *v.witness.left_label;
  if (v.witness.right_label) w["right_label"] = *v.witness.right_label;
  if (v.witness.point) w["point"] = to_json(*v.witness.point);
  if (!v.witness.assignment.empty()) {
    json a = json::array();
    for (const auto& [g, l] : v.witness.assignment) a.push_back({g, l});
    w["assignment"] = a;
  }
  json out{{"holds", v.holds}, {"exactness", to_string(v.exactness)}, {"witness", w}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const usop::GapVector& g) {
  return {{"decision", g.decision}, {"gap", to_json(g.gap)}, {"feas", to_json(g.feas)}, {"exact", g.exact}};
}

json to_json(const usop::RobustVerdict& v) {
  json out{{"robust", v.robust}};
  if (v.witness) out["witness"] = *v.witness;
  if (v.forward) out["forward"] = to_json(*v.forward);
  if (v.backward) out["backward"] = to_json(*v.backward);
  return out;
}

}  // namespace setopt::io
