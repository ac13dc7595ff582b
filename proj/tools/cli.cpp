#include "cli.hpp"

#include "reisner/analysis.hpp"
#include "reisner/error.hpp"
#include "reisner/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace reisner::cli {

namespace {

using json_io::json;

struct RunConfig {
    std::uint64_t seed = 0;
    int restarts = 64;
    int iterations = 200;
    double tol_value = 1e-6;
    double tol_point = 5e-2;
    std::string mode = "exact";
    int k = 2;
    int m = 2;
    std::size_t cap = 1000;
    std::vector<double> ladder{1e-1, 1e-2, 1e-3};
    int directions = 8;

    MaximizeOptions options() const {
        MaximizeOptions o;
        o.seed = seed;
        o.restarts = restarts;
        o.iterations = iterations;
        return o;
    }

    json to_json() const {
        return {{"seed", seed},     {"restarts", restarts}, {"iterations", iterations}, {"tol_value", tol_value},
                {"tol_point", tol_point}, {"mode", mode}, {"k", k}, {"m", m}, {"cap", cap},
                {"ladder", ladder}, {"directions", directions}};
    }
};

// Inline JSON when the argument starts with '[' or '{', otherwise a file path.
json read_json(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) fail(ErrorKind::Parse, "cannot open input file \"" + arg + "\"");
    return json::parse(in);
}

Field parse_field(const std::string& f) {
    if (f == "real") return Field::Real;
    if (f == "complex") return Field::Complex;
    fail(ErrorKind::InvalidArgument, "field must be real or complex");
}

CLSpace load_space(const std::string& input, const std::string& field_override) {
    auto desc = json_io::space_from_json(read_json(input));
    const Field field = field_override.empty() ? desc.field : parse_field(field_override);
    return space_from_graph(desc.graph, field);
}

std::vector<ExactVector> read_vectors(const std::string& arg) {
    const json j = read_json(arg);
    if (!j.is_array()) fail(ErrorKind::Parse, "expected a JSON array of vectors");
    std::vector<ExactVector> out;
    for (const auto& e : j) out.push_back(json_io::vector_from_json(e));
    return out;
}

json graph_info(const Graph& g) {
    json cliques = json::array();
    for (VertexSet c : maximal_cliques(g)) cliques.push_back(json_io::vertex_set_to_json(c));
    json stables = json::array();
    for (VertexSet c : maximal_stable_sets(g)) stables.push_back(json_io::vertex_set_to_json(c));
    json j = json_io::graph_to_json(g);
    j["maximal_cliques"] = cliques;
    j["maximal_stable_sets"] = stables;
    j["clique_number"] = clique_number(g);
    j["chromatic_number"] = chromatic_number(g);
    j["perfectness"] = g.n() <= kMaxPerfectVertices ? json_io::perfectness_to_json(is_perfect(g)) : json(nullptr);
    return j;
}

// Every graph on n vertices in edge-mask order; bit b of the mask is the b-th
// pair (i, j), i < j, in lexicographic order.
Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> edges;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Perfect-graph norms, CL-spaces and norm-attaining polynomials"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunConfig cfg;
    std::string input;
    std::string field;
    std::string vector_arg, ys_arg, poly_arg, f_arg, h_arg, eps_arg = "1/10";
    bool dual = false;
    int w = 0;
    int n_ball = 2;
    int n_enum = 3;

    auto add_search = [&](CLI::App* c) {
        c->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        c->add_option("--restarts", cfg.restarts, "Multi-start restarts")->capture_default_str();
        c->add_option("--iterations", cfg.iterations, "Iterations per restart")->capture_default_str();
    };
    auto add_space = [&](CLI::App* c) {
        c->add_option("space", input, "Space descriptor (JSON file or inline JSON)")->required();
        c->add_option("--field", field, "Override the scalar field (real|complex)");
    };

    auto* c_info = app.add_subcommand("graph-info", "Cliques, stable sets, clique and chromatic numbers");
    c_info->add_option("graph", input, "Graph JSON")->required();

    auto* c_check = app.add_subcommand("check-cl", "Check whether a graph is the graph of a CL-space");
    c_check->add_option("graph", input, "Graph JSON")->required();

    auto* c_norm = app.add_subcommand("norm", "Norm (or dual norm) of a vector");
    add_space(c_norm);
    c_norm->add_option("--vector", vector_arg, "Vector JSON")->required();
    c_norm->add_flag("--dual", dual, "Evaluate the dual norm");
    c_norm->add_option("--mode", cfg.mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));

    auto* c_ext = app.add_subcommand("extremes", "Extreme points of the unit ball (or dual ball)");
    add_space(c_ext);
    c_ext->add_flag("--dual", dual, "Dual ball");

    auto* c_build = app.add_subcommand("build-q", "Construct the peak polynomial for a tuple of extreme points");
    add_space(c_build);
    c_build->add_option("--ys", ys_arg, "JSON array of 0/1 stable-set indicators")->required();

    auto* c_verify = app.add_subcommand("verify-attainment", "Construct Q and verify its norm numerically");
    add_space(c_verify);
    c_verify->add_option("--ys", ys_arg, "JSON array of 0/1 stable-set indicators")->required();
    c_verify->add_option("--tol-value", cfg.tol_value)->capture_default_str();
    c_verify->add_option("--tol-point", cfg.tol_point)->capture_default_str();
    add_search(c_verify);

    auto* c_att = app.add_subcommand("attaining-points", "Certified strongly norm-attaining points");
    add_space(c_att);
    c_att->add_option("--m", cfg.m, "Degree")->capture_default_str();
    c_att->add_option("--cap", cfg.cap, "Maximum number of points")->capture_default_str();

    auto* c_cext = app.add_subcommand("complex-extreme",
                                      "Complex extreme point test (upper monotonicity in real spaces)");
    add_space(c_cext);
    c_cext->add_option("--vector", vector_arg, "Vector JSON")->required();

    auto* c_index = app.add_subcommand("classify-index", "Decide whether the polynomial numerical index is one");
    add_space(c_index);
    c_index->add_option("--k", cfg.k, "Degree")->capture_default_str();

    auto* c_lee = app.add_subcommand("lee-check", "Check |<f, x>| = 1 on the certified attaining points");
    add_space(c_lee);
    c_lee->add_option("--m", cfg.m, "Degree of the attaining point set")->capture_default_str();
    c_lee->add_option("--k", cfg.k, "Polynomial degree")->capture_default_str();
    c_lee->add_option("--cap", cfg.cap)->capture_default_str();

    auto* c_radius = app.add_subcommand("numerical-radius", "Lower bound on the numerical radius of P");
    add_space(c_radius);
    c_radius->add_option("--poly", poly_arg, "JSON array of component polynomials")->required();
    add_search(c_radius);

    auto* c_perturb = app.add_subcommand("perturb", "One perturbation step on l1^n");
    c_perturb->add_option("--f-poly", f_arg, "Polynomial JSON")->required();
    c_perturb->add_option("--h-poly", h_arg, "Polynomial JSON")->required();
    c_perturb->add_option("--w", w, "Basis index")->capture_default_str();
    c_perturb->add_option("--eps", eps_arg, "Perturbation size (rational)")->capture_default_str();
    c_perturb->add_option("--n-ball", n_ball, "Exclusion parameter")->capture_default_str();
    c_perturb->add_option("--k", cfg.k, "Degree; must match f and h");
    add_search(c_perturb);

    auto* c_frechet = app.add_subcommand("frechet-probe", "Heuristic smoothness probe of the norm at P");
    add_space(c_frechet);
    c_frechet->add_option("--poly", poly_arg, "Polynomial JSON")->required();
    c_frechet->add_option("--ladder", cfg.ladder, "Comma-separated step sizes")->delimiter(',');
    c_frechet->add_option("--directions", cfg.directions)->capture_default_str();
    add_search(c_frechet);

    auto* c_enum = app.add_subcommand("enumerate-reisner", "All CL-space graphs on n <= 5 vertices");
    c_enum->add_option("--n", n_enum, "Number of vertices")->capture_default_str();
    c_enum->add_option("--field", field, "real|complex (default complex)");
    c_enum->add_option("--k", cfg.k)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage", e.what()).dump(2) << '\n';
        return kUsage;
    }

    try {
        if (cfg.restarts < 1) fail(ErrorKind::InvalidArgument, "--restarts must be >= 1");
        if (!(cfg.tol_value > 0) || !(cfg.tol_point > 0)) fail(ErrorKind::InvalidArgument, "tolerances must be positive");

        CLI::App* cmd = app.get_subcommands().front();
        json report = {{"command", cmd->get_name()}, {"config", cfg.to_json()}};
        int code = kPass;

        if (cmd == c_info) {
            report["result"] = graph_info(json_io::graph_from_json(read_json(input)));
        } else if (cmd == c_check) {
            const CLReport r = reisner_check(json_io::graph_from_json(read_json(input)));
            report["result"] = json_io::cl_report_to_json(r);
            code = r.passes() ? kPass : kFail;
        } else if (cmd == c_norm) {
            const CLSpace s = load_space(input, field);
            const ExactVector x = json_io::vector_from_json(read_json(vector_arg));
            json value;
            if (cfg.mode == "float") {
                const FloatVector xf = to_float(x);
                if (s.field() == Field::Real)
                    for (const auto& z : x)
                        if (!z.is_real()) fail(ErrorKind::InvalidArgument, "complex vector in a real space");
                if (static_cast<int>(xf.size()) != s.dim())
                    fail(ErrorKind::DimensionMismatch, "vector length does not match the space");
                value = json_io::float_number(dual ? dual_norm(s, xf) : norm(s, xf));
            } else {
                value = json_io::measured(dual ? dual_norm(s, Vector(x)) : norm(s, Vector(x)));
            }
            report["result"] = {{"space", json_io::space_to_json(s)}, {"dual", dual}, {"norm", value}};
        } else if (cmd == c_ext) {
            const CLSpace s = load_space(input, field);
            json pts = json::array();
            for (const auto& p : dual ? dual_extreme_points(s) : extreme_points(s))
                pts.push_back(json_io::signed_support_to_json(p, s.dim()));
            report["result"] = {{"space", json_io::space_to_json(s)}, {"dual", dual}, {"extreme_points", pts}};
        } else if (cmd == c_build) {
            const CLSpace s = load_space(input, field);
            const BuiltQ b = build_q(s, read_vectors(ys_arg));
            const ComplexQ at = b.q.eval(b.prediction.point);
            const bool identity = at == ComplexQ(b.prediction.predicted_norm);
            report["result"] = {{"space", json_io::space_to_json(s)},
                                {"q", json_io::poly_to_json(b.q)},
                                {"prediction", json_io::prediction_to_json(b.prediction)},
                                {"value_at_point", {{"value", json_io::complex_to_json(at)}, {"exact", true}}},
                                {"identity_holds", identity}};
            code = identity ? kPass : kFail;
        } else if (cmd == c_verify) {
            const CLSpace s = load_space(input, field);
            const BuiltQ b = build_q(s, read_vectors(ys_arg));
            const AttainmentReport r =
                verify_attainment(s, b.q, b.prediction, cfg.tol_value, cfg.tol_point, cfg.options());
            report["result"] = {{"space", json_io::space_to_json(s)},
                                {"q", json_io::poly_to_json(b.q)},
                                {"prediction", json_io::prediction_to_json(b.prediction)},
                                {"report", json_io::attainment_report_to_json(r)}};
            code = r.pass ? kPass : kFail;
        } else if (cmd == c_att) {
            const CLSpace s = load_space(input, field);
            const AttainingPoints a = strongly_attaining_points(s, cfg.m, cfg.cap);
            json pts = json::array();
            for (const auto& p : a.points) pts.push_back(json_io::vector_to_json(p));
            report["result"] = {{"space", json_io::space_to_json(s)}, {"points", pts}, {"truncated", a.truncated}};
        } else if (cmd == c_cext) {
            const CLSpace s = load_space(input, field);
            const ExactVector a = json_io::vector_from_json(read_json(vector_arg));
            const ExtremeTestResult r =
                s.field() == Field::Complex ? complex_extreme_test(s, a) : upper_monotonicity_test(s, a);
            report["result"] = {{"space", json_io::space_to_json(s)}, {"test", json_io::extreme_test_to_json(r)}};
            code = r.member ? kPass : kFail;
        } else if (cmd == c_index) {
            const CLSpace s = load_space(input, field);
            const IndexClassification c = index_one_classify(s, cfg.k);
            report["result"] = {{"space", json_io::space_to_json(s)},
                                {"classification", json_io::classification_to_json(c)}};
            code = c.verdict == IndexClassification::Verdict::IndexOneEllInfty ? kPass : kFail;
        } else if (cmd == c_lee) {
            const CLSpace s = load_space(input, field);
            const AttainingPoints a = strongly_attaining_points(s, cfg.m, cfg.cap);
            const auto v = lee_condition_check(s, a.points, cfg.k);
            report["result"] = {{"space", json_io::space_to_json(s)},
                                {"points_checked", a.points.size()},
                                {"truncated", a.truncated},
                                {"violations", json_io::lee_violations_to_json(v)}};
            code = v.empty() ? kPass : kFail;
        } else if (cmd == c_radius) {
            const CLSpace s = load_space(input, field);
            const auto p = json_io::poly_vector_from_json(read_json(poly_arg));
            const NumericalRadiusBound b = numerical_radius_lower(s, p, cfg.options());
            const double pn = estimate_vector_poly_norm(s, p, cfg.options());
            report["result"] = {{"space", json_io::space_to_json(s)},
                                {"numerical_radius", json_io::radius_bound_to_json(b)},
                                {"poly_norm_estimate", json_io::float_number(pn)}};
        } else if (cmd == c_perturb) {
            const HomPoly f = json_io::poly_from_json(read_json(f_arg));
            const HomPoly h = json_io::poly_from_json(read_json(h_arg));
            const int k = c_perturb->count("--k") ? cfg.k : f.degree();
            const PerturbationReport r =
                perturbation_step(f, h, w, parse_rational(eps_arg), k, n_ball, cfg.options());
            report["result"] = json_io::perturbation_to_json(r);
            code = r.sharp ? kPass : kFail;
        } else if (cmd == c_frechet) {
            const CLSpace s = load_space(input, field);
            const HomPoly p = json_io::poly_from_json(read_json(poly_arg));
            const FrechetTable t = frechet_probe(s, p, cfg.ladder, cfg.directions, cfg.options());
            report["result"] = {{"space", json_io::space_to_json(s)}, {"probe", json_io::frechet_to_json(t)}};
        } else if (cmd == c_enum) {
            if (n_enum < 1 || n_enum > 5) fail(ErrorKind::SizeLimit, "enumerate-reisner supports 1 <= n <= 5");
            const Field fd = field.empty() ? Field::Complex : parse_field(field);
            const int pairs = n_enum * (n_enum - 1) / 2;
            json graphs = json::array();
            for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
                const Graph g = graph_from_mask(n_enum, mask);
                if (!reisner_check(g).passes()) continue;
                json e = {{"edge_mask", mask}, {"graph", json_io::graph_to_json(g)}};
                if (fd == Field::Complex)
                    e["classification"] = json_io::classification_to_json(index_one_classify(space_from_graph(g, fd), cfg.k));
                else
                    e["classification"] = nullptr;
                graphs.push_back(e);
            }
            report["result"] = {{"n", n_enum}, {"field", to_string(fd)}, {"count", graphs.size()}, {"graphs", graphs}};
        }

        report["verdict"] = code == kPass ? "pass" : "fail";
        out << report.dump(2) << '\n';
        return code;
    } catch (const Error& e) {
        out << error_json(to_string(e.kind()), e.what()).dump(2) << '\n';
    } catch (const json::exception& e) {
        out << error_json("parse_error", e.what()).dump(2) << '\n';
    }
    return kUsage;
}

} // namespace reisner::cli
