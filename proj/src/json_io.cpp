#include "reisner/json_io.hpp"

#include "reisner/error.hpp"

namespace reisner::json_io {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(ErrorKind::Parse, "expected a number or rational string, got " + j.dump());
}

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

ComplexQ complex_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail(ErrorKind::Parse, "complex scalar must be [re, im]");
        return {rational_from_json(j[0]), rational_from_json(j[1])};
    }
    return ComplexQ(rational_from_json(j));
}

json complex_to_json(const ComplexQ& z) { return json::array({rational_to_json(z.re), rational_to_json(z.im)}); }

json exact_number(const Rational& q) { return {{"value", rational_to_json(q)}, {"decimal", q.get_d()}, {"exact", true}}; }

json float_number(double v) { return {{"value", v}, {"exact", false}}; }

json measured(const Measured& m) { return m.exact ? exact_number(*m.exact) : float_number(m.value); }

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) fail(ErrorKind::Parse, "graph JSON needs an \"n\" field");
    if (!j["n"].is_number_integer()) fail(ErrorKind::Parse, "\"n\" must be an integer");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(ErrorKind::Parse, "\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(ErrorKind::Parse, "edge must be a pair of integers, got " + e.dump());
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Graph(j["n"].get<int>(), edges);
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"n", g.n()}, {"edges", edges}};
}

json vertex_set_to_json(VertexSet s) { return s.members(); }

SpaceDescriptor space_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorKind::Parse, "space descriptor must be a JSON object");
    const json& gj = j.contains("graph") ? j["graph"] : j;
    Field field = Field::Real;
    if (j.contains("field")) {
        const auto f = j["field"].get<std::string>();
        if (f == "real")
            field = Field::Real;
        else if (f == "complex")
            field = Field::Complex;
        else
            fail(ErrorKind::Parse, "field must be \"real\" or \"complex\", got \"" + f + "\"");
    }
    return {graph_from_json(gj), field};
}

json space_to_json(const CLSpace& s) {
    json j = graph_to_json(s.graph());
    j["field"] = to_string(s.field());
    return j;
}

ExactVector vector_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::Parse, "vector must be a JSON array");
    ExactVector v;
    for (const auto& e : j) v.push_back(complex_from_json(e));
    return v;
}

json vector_to_json(const ExactVector& v) {
    json out = json::array();
    bool real = true;
    for (const auto& z : v) real = real && z.is_real();
    for (const auto& z : v) out.push_back(real ? rational_to_json(z.re) : complex_to_json(z));
    return out;
}

json float_vector_to_json(const FloatVector& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back({z.real(), z.imag()});
    return out;
}

HomPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m"))
        fail(ErrorKind::Parse, "polynomial JSON needs \"n\" and \"m\"");
    HomPoly p(j["n"].get<int>(), j["m"].get<int>());
    if (j.contains("terms")) {
        for (const auto& t : j["terms"]) {
            if (!t.contains("alpha") || !t.contains("coeff")) fail(ErrorKind::Parse, "term needs alpha and coeff");
            p.add_term(t["alpha"].get<MultiIndex>(), complex_from_json(t["coeff"]));
        }
    }
    return p;
}

json poly_to_json(const HomPoly& p) {
    json terms = json::array();
    for (const auto& [alpha, c] : p.terms()) terms.push_back({{"alpha", alpha}, {"coeff", complex_to_json(c)}});
    return {{"n", p.n()}, {"m", p.degree()}, {"terms", terms}};
}

std::vector<HomPoly> poly_vector_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::Parse, "vector polynomial must be a JSON array of polynomials");
    std::vector<HomPoly> out;
    for (const auto& e : j) out.push_back(poly_from_json(e));
    return out;
}

json signed_support_to_json(const SignedSupport& s, int n) {
    return {{"support", vertex_set_to_json(s.support)},
            {"signs", s.signs},
            {"unimodular_orbit", s.orbit},
            {"vector", vector_to_json(s.to_vector(n))}};
}

json perfectness_to_json(const PerfectnessVerdict& v) {
    json j = {{"perfect", v.perfect}};
    if (v.witness) {
        j["witness"] = vertex_set_to_json(*v.witness);
        j["witness_clique_number"] = v.witness_clique_number;
        j["witness_chromatic_number"] = v.witness_chromatic_number;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json cl_report_to_json(const CLReport& r) {
    json j = {{"pass", r.passes()},
              {"is_perfect", perfectness_to_json(r.perfectness)},
              {"intersection_ok", r.intersection_ok}};
    if (r.violating_pair) {
        j["violating_pair"] = {{"clique", vertex_set_to_json(r.violating_pair->clique)},
                               {"stable_set", vertex_set_to_json(r.violating_pair->stable_set)},
                               {"intersection_size", r.violating_pair->intersection_size}};
    } else {
        j["violating_pair"] = nullptr;
    }
    return j;
}

json prediction_to_json(const AttainmentPrediction& p) {
    json cliques = json::array();
    for (const auto& h : p.per_clique) {
        json mult = json::array();
        for (auto [v, k] : h.multiplicities) mult.push_back({{"vertex", v}, {"multiplicity", k}});
        cliques.push_back({{"clique", vertex_set_to_json(h.clique)}, {"hits", h.hits}, {"multiplicities", mult}});
    }
    return {{"point", vector_to_json(p.point)},
            {"predicted_norm", exact_number(p.predicted_norm)},
            {"per_clique", cliques}};
}

json options_to_json(const MaximizeOptions& o) {
    return {{"seed", o.seed},
            {"restarts", o.restarts},
            {"iterations", o.iterations},
            {"initial_step", o.initial_step},
            {"step_decay", o.step_decay}};
}

json attainment_report_to_json(const AttainmentReport& r) {
    return {{"polynomial_id", r.polynomial_id},
            {"claimed_point", vector_to_json(r.claimed_point)},
            {"claimed_norm", exact_number(r.claimed_norm)},
            {"value_at_point", {{"value", complex_to_json(r.value_at_point)}, {"exact", true}}},
            {"precondition_ok", r.precondition_ok},
            {"best_sampled_value", float_number(r.best_value)},
            {"max_excess", float_number(r.max_excess)},
            {"cluster_distance", float_number(r.cluster_distance)},
            {"near_max_restarts", r.near_max_restarts},
            {"tol_value", r.tol_value},
            {"tol_point", r.tol_point},
            {"search", options_to_json(r.options)},
            {"verdict", r.pass ? "pass" : "fail"},
            {"reason", r.reason}};
}

json combination_to_json(const ConvexCombination& c) {
    json terms = json::array();
    for (std::size_t k = 0; k < c.weights.size(); ++k) {
        json g = json::array();
        for (const auto& q : c.generators[k]) g.push_back(rational_to_json(q));
        terms.push_back({{"generator_index", c.generator_indices[k]},
                         {"generator", g},
                         {"weight", exact_number(c.weights[k])}});
    }
    return terms;
}

json extreme_test_to_json(const ExtremeTestResult& r) {
    json mod = json::array();
    for (const auto& q : r.moduli) mod.push_back(rational_to_json(q));
    return {{"label", r.label},
            {"moduli", mod},
            {"member", r.member},
            {"exact", true},
            {"combination", r.combination ? combination_to_json(*r.combination) : json(nullptr)}};
}

json classification_to_json(const IndexClassification& c) {
    json j = {{"verdict", to_string(c.verdict)}};
    if (c.witness) {
        const auto& w = *c.witness;
        const int n = static_cast<int>(w.x.size());
        j["witness"] = {{"x", vector_to_json(w.x)},
                        {"y", vector_to_json(w.y)},
                        {"clique", vertex_set_to_json(w.clique)},
                        {"flipped_vertex", w.flipped_vertex},
                        {"other_vertex", w.other_vertex},
                        {"functional", signed_support_to_json(w.functional, n)},
                        {"value", exact_number(w.value)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json lee_violations_to_json(const std::vector<LeeViolation>& v) {
    json out = json::array();
    for (const auto& e : v) {
        const int n = static_cast<int>(e.point.size());
        out.push_back({{"point_index", e.point_index},
                       {"point", vector_to_json(e.point)},
                       {"functional", signed_support_to_json(e.functional, n)},
                       {"abs_pairing", exact_number(e.value)}});
    }
    return out;
}

json radius_bound_to_json(const NumericalRadiusBound& b) {
    return {{"lower_bound", float_number(b.value)},
            {"clique", vertex_set_to_json(b.clique)},
            {"state_pair",
             {{"x", float_vector_to_json(b.pair.x)},
              {"f", float_vector_to_json(b.pair.f)},
              {"pairing", {{"value", {b.pair.pairing.real(), b.pair.pairing.imag()}}, {"exact", false}}}}},
            {"kind", "certified lower bound"}};
}

json perturbation_to_json(const PerturbationReport& r) {
    return {{"g", poly_to_json(r.g)},
            {"direction", {{"value", complex_to_json(r.direction)}, {"exact", true}}},
            {"eps", exact_number(r.eps)},
            {"exclusion_radius", exact_number(r.exclusion_radius)},
            {"abs_f_minus_h_at_w", exact_number(r.fh_at_w)},
            {"abs_f_minus_g_at_w", exact_number(r.fg_at_w)},
            {"g_minus_h_norm_bound", exact_number(r.g_minus_h_bound)},
            {"sampled_sup_away_from_w", float_number(r.sampled_sup)},
            {"margin", float_number(r.margin)},
            {"sharp", r.sharp},
            {"f_minus_h_norm_estimate", float_number(r.fh_norm_estimate)},
            {"w_near_norming", r.w_near_norming}};
}

json frechet_to_json(const FrechetTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"delta", r.delta},
                        {"max_quotient", float_number(r.max_quotient)},
                        {"mean_quotient", float_number(r.mean_quotient)}});
    return {{"label", "HEURISTIC"},
            {"norm_estimate", float_number(t.norm_estimate)},
            {"rows", rows},
            {"decreasing_trend", t.decreasing_trend}};
}

} // namespace reisner::json_io
