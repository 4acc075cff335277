#pragma once

#include "symstress/framework.hpp"
#include "symstress/poly.hpp"
#include "symstress/statics.hpp"
#include "symstress/symmetry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symstress {

using Json = nlohmann::ordered_json;

// Scalars: rationals as "num/den" strings, floats as JSON numbers.
Json scalar_to_json(const Rational& q);
Json scalar_to_json(double d);
Rational scalar_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

template <class T> Json configuration_to_json(const Configuration<T>& p);
// Always parsed exactly; float inputs become their shortest decimal value.
Configuration<Rational> configuration_from_json(const Json& j);

Json element_to_json(const OrthogonalElement& e);
OrthogonalElement element_from_json(const Json& j);

Json symmetry_to_json(const SymmetryPair& pair);
SymmetryPair symmetry_from_json(const Graph& g, const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// Edge-indexed vectors: [{"edge":[i,j],"w":...}, ...]; plain arrays follow
// the sorted edge order.
template <class T> Json edge_vector_to_json(const Graph& g, const Vec<T>& w);
Vec<Rational> edge_vector_from_json(const Graph& g, const Json& j);

template <class T> Json lift_to_json(const LiftedFramework<T>& lf);
LiftedFramework<Rational> lift_from_json(const Graph& g, const Json& j);

Json faces_to_json(const FaceStructure& fs);
FaceStructure faces_from_json(const Json& j);

Json read_json_file(const std::string& path);
std::string sha256_hex(const std::string& data);

}  // namespace symstress
