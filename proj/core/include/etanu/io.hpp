#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "etanu/complex.hpp"
#include "etanu/homology.hpp"
#include "etanu/hypergraph.hpp"
#include "etanu/matroid.hpp"
#include "etanu/rational.hpp"

namespace etanu {

using Json = nlohmann::json;

// Hypergraphs: {"n": 3, "edges": [[0,1],[2]]}.  Elements are 0-based and
// must be < n; the vertex set is {0..n-1}.
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

// Complexes: {"n": 3, "facets": [[0,1],[2]]}.  "facets": null is the void
// complex; [[]] is the complex whose only face is empty.
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

// Matroids, tagged by "type":
//   {"type":"uniform","n":4,"k":2}
//   {"type":"partition","parts":[[0,1],[2,3]],"capacities":[1,1]}
//   {"type":"graphic","vertices":4,"edges":[[0,1],[1,2]]}
//   {"type":"circuits","n":3,"circuits":[[0,1,2]]}
//   {"type":"independent","n":2,"sets":[[],[0],[1]]}
Json matroid_to_json_description(const Json& source);  // validates shape
Matroid matroid_from_json(const Json& j);
// Serializes through the circuit family, which every loop-free matroid
// round-trips exactly.
Json matroid_to_circuits_json(const Matroid& m);

// Scalar conventions shared by every report: exact rationals as "num/den"
// strings, infinite eta as "inf".
Json frac_to_json(const Frac& f);
Frac frac_from_json(const Json& j);
Json eta_to_json(EtaValue v);
EtaValue eta_from_json(const Json& j);

Json elemset_to_json(ElemSet s);
ElemSet elemset_from_json(const Json& j, ElemSet space);

// Loads a file and parses it as JSON; ParseError on anything malformed.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Peeks at a parsed object to decide what it describes.
enum class InstanceKind { HypergraphInstance, ComplexInstance, MatroidInstance };
InstanceKind detect_instance_kind(const Json& j);

}  // namespace etanu
