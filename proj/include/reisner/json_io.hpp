#pragma once

// JSON formats. All vertex indices are 0-based.
//
//   graph   {"n": 3, "edges": [[0,1],[1,2]]}
//   space   the graph object plus "field": "real" | "complex" (default real);
//           {"graph": {...}, "field": ...} is accepted as well
//   vector  [r, ...] or [[re, im], ...]; each scalar is a JSON number or a
//           string such as "5/4" or "0.125", parsed exactly
//   poly    {"n": 2, "m": 2, "terms": [{"alpha": [1,1], "coeff": [re, im]}]}
//
// Exact rationals are written as JSON integers when integral and as "p/q"
// strings otherwise. Every numeric report field is an object carrying an
// "exact" flag so rational certificates and float estimates stay apart.

#include "reisner/analysis.hpp"
#include "reisner/clspace.hpp"
#include "reisner/graph.hpp"
#include "reisner/poly.hpp"

#include <json.hpp>

namespace reisner::json_io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);
ComplexQ complex_from_json(const json& j);
json complex_to_json(const ComplexQ& z);

json exact_number(const Rational& q);
json float_number(double v);
json measured(const Measured& m);

Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);
json vertex_set_to_json(VertexSet s);

struct SpaceDescriptor {
    Graph graph;
    Field field;
};
SpaceDescriptor space_from_json(const json& j);
json space_to_json(const CLSpace& s);

ExactVector vector_from_json(const json& j);
json vector_to_json(const ExactVector& v);
json float_vector_to_json(const FloatVector& v);

HomPoly poly_from_json(const json& j);
json poly_to_json(const HomPoly& p);
// A vector-valued polynomial: a JSON array of poly objects.
std::vector<HomPoly> poly_vector_from_json(const json& j);

json signed_support_to_json(const SignedSupport& s, int n);
json perfectness_to_json(const PerfectnessVerdict& v);
json cl_report_to_json(const CLReport& r);
json prediction_to_json(const AttainmentPrediction& p);
json attainment_report_to_json(const AttainmentReport& r);
json combination_to_json(const ConvexCombination& c);
json extreme_test_to_json(const ExtremeTestResult& r);
json classification_to_json(const IndexClassification& c);
json lee_violations_to_json(const std::vector<LeeViolation>& v);
json radius_bound_to_json(const NumericalRadiusBound& b);
json perturbation_to_json(const PerturbationReport& r);
json frechet_to_json(const FrechetTable& t);
json options_to_json(const MaximizeOptions& o);

} // namespace reisner::json_io
