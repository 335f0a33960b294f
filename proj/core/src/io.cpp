#include "etanu/io.hpp"

#include <fstream>

#include "etanu/errors.hpp"

namespace etanu {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, std::int64_t lo, std::int64_t hi) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  std::int64_t value = v.get<std::int64_t>();
  if (value < lo || value > hi)
    bad(std::string("field \"") + key + "\" out of range [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "]");
  return static_cast<int>(value);
}

ElemSet set_from_array(const Json& arr, ElemSet space, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array of elements");
  ElemSet out;
  for (const Json& e : arr) {
    if (!e.is_number_integer()) bad(std::string(what) + " holds a non-integer element");
    std::int64_t v = e.get<std::int64_t>();
    if (v < 0 || v >= ElemSet::kMaxElements || !space.contains(static_cast<int>(v)))
      bad(std::string(what) + " element " + std::to_string(v) + " is outside the ground set");
    out = out.with(static_cast<int>(v));
  }
  return out;
}

std::vector<ElemSet> sets_from_array(const Json& arr, ElemSet space, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<ElemSet> out;
  out.reserve(arr.size());
  for (const Json& entry : arr) out.push_back(set_from_array(entry, space, what));
  return out;
}

// {0..n-1} unless an explicit sparse vertex list is present.
ElemSet ground_of(const Json& j, const char* list_key) {
  int n = int_field(j, "n", 0, ElemSet::kMaxElements);
  ElemSet dense = ElemSet::universe(n);
  if (!j.contains(list_key)) return dense;
  return set_from_array(j.at(list_key), dense, list_key);
}

Json set_to_array(ElemSet s) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

void emit_ground(Json& j, ElemSet ground, const char* list_key) {
  int n = ground.empty() ? 0 : ground.max_element() + 1;
  j["n"] = n;
  if (ground != ElemSet::universe(n)) j[list_key] = set_to_array(ground);
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& h) {
  Json j = Json::object();
  emit_ground(j, h.vertices, "vertices");
  Json edges = Json::array();
  for (ElemSet e : h.edges) edges.push_back(set_to_array(e));
  j["edges"] = edges;
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  ElemSet vertices = ground_of(j, "vertices");
  std::vector<ElemSet> edges = sets_from_array(field(j, "edges"), vertices, "edges");
  return make_hypergraph(vertices, std::move(edges));
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j = Json::object();
  emit_ground(j, c.ground(), "ground");
  if (c.is_void()) {
    j["facets"] = nullptr;
    return j;
  }
  Json facets = Json::array();
  for (ElemSet f : c.facets()) facets.push_back(set_to_array(f));
  j["facets"] = facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  ElemSet ground = ground_of(j, "ground");
  const Json& facets = field(j, "facets");
  if (facets.is_null()) return SimplicialComplex::void_complex(ground);
  return SimplicialComplex::from_facets(ground, sets_from_array(facets, ground, "facets"));
}

Matroid matroid_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("field \"type\" must be a string");
  std::string kind = type.get<std::string>();

  if (kind == "uniform")
    return Matroid::uniform(int_field(j, "n", 0, ElemSet::kMaxElements),
                            int_field(j, "k", 0, ElemSet::kMaxElements));

  if (kind == "partition") {
    std::vector<ElemSet> parts = sets_from_array(
        field(j, "parts"), ElemSet::universe(ElemSet::kMaxElements), "parts");
    const Json& caps = field(j, "capacities");
    if (!caps.is_array()) bad("field \"capacities\" must be an array");
    std::vector<int> capacities;
    for (const Json& c : caps) {
      if (!c.is_number_integer()) bad("capacities must be integers");
      capacities.push_back(c.get<int>());
    }
    return Matroid::partition(parts, capacities);
  }

  if (kind == "graphic") {
    Multigraph g;
    g.vertex_count = int_field(j, "vertices", 0, 1 << 20);
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) bad("field \"edges\" must be an array of pairs");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        bad("graphic edges must be [u, v] pairs");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
        bad("graphic edge endpoint outside the vertex range");
      g.edges.emplace_back(u, v);
    }
    return Matroid::graphic(g);
  }

  if (kind == "circuits") {
    ElemSet ground = ground_of(j, "ground");
    return Matroid::from_circuits(ground,
                                  sets_from_array(field(j, "circuits"), ground, "circuits"));
  }

  if (kind == "independent") {
    ElemSet ground = ground_of(j, "ground");
    return Matroid::from_independent_sets(ground,
                                          sets_from_array(field(j, "sets"), ground, "sets"));
  }

  bad("unknown matroid type \"" + kind + "\"");
}

Json matroid_to_json_description(const Json& source) {
  matroid_from_json(source);  // shape and semantic validation
  return source;
}

Json matroid_to_circuits_json(const Matroid& m) {
  Json j = Json::object();
  j["type"] = "circuits";
  emit_ground(j, m.ground(), "ground");
  Json cs = Json::array();
  for (ElemSet c : m.circuits()) cs.push_back(elemset_to_json(c));
  j["circuits"] = cs;
  return j;
}

Json frac_to_json(const Frac& f) { return f.to_string(); }

Frac frac_from_json(const Json& j) {
  if (j.is_number_integer()) return Frac(j.get<std::int64_t>());
  if (j.is_string()) return Frac::parse(j.get<std::string>());
  bad("expected a rational as \"num/den\" or an integer");
}

Json eta_to_json(EtaValue v) {
  if (v.is_infinite()) return "inf";
  return v.finite();
}

EtaValue eta_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return EtaValue::infinity();
  if (j.is_number_integer()) {
    std::int64_t v = j.get<std::int64_t>();
    if (v < 0) bad("negative connectivity value");
    return EtaValue(static_cast<int>(v));
  }
  bad("expected \"inf\" or a non-negative integer");
}

Json elemset_to_json(ElemSet s) { return set_to_array(s); }

ElemSet elemset_from_json(const Json& j, ElemSet space) {
  return set_from_array(j, space, "set");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("failed writing " + path);
}

InstanceKind detect_instance_kind(const Json& j) {
  if (j.is_object()) {
    if (j.contains("type")) return InstanceKind::MatroidInstance;
    if (j.contains("facets")) return InstanceKind::ComplexInstance;
    if (j.contains("edges")) return InstanceKind::HypergraphInstance;
  }
  bad("cannot tell what this describes: expected \"type\", \"facets\" or \"edges\"");
}

}  // namespace etanu
