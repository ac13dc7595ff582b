#include "reisner/analysis.hpp"

#include "reisner/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace reisner {

const char* to_string(IndexClassification::Verdict v) {
    return v == IndexClassification::Verdict::IndexOneEllInfty ? "IndexOne_ellInfty" : "NotIndexOne";
}

AttainingPoints strongly_attaining_points(const CLSpace& s, int m, std::size_t cap) {
    if (m < 2) fail(ErrorKind::InvalidArgument, "strongly attaining points need degree m >= 2");
    const auto gens = nonnegative_extreme_points(s);
    const int g = static_cast<int>(gens.size());
    const int n = s.dim();
    AttainingPoints out;
    std::set<std::vector<Rational>> seen;
    // Nondecreasing index tuples enumerate multisets.
    std::vector<int> idx(m, 0);
    while (true) {
        std::vector<Rational> p(n);
        for (int k : idx)
            for (int j = 0; j < n; ++j) p[j] += gens[k][j].re;
        for (auto& v : p) v /= m;
        if (seen.insert(p).second) {
            if (out.points.size() == cap) {
                out.truncated = true;
                break;
            }
            out.points.push_back(real_vector(p));
        }
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == g - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < m; ++q) idx[q] = idx[pos];
    }
    return out;
}

double orbit_distance(const CLSpace& s, const FloatVector& p, const FloatVector& x) {
    FloatVector diff(p.size());
    if (s.field() == Field::Real) {
        double best = std::numeric_limits<double>::infinity();
        for (double c : {1.0, -1.0}) {
            for (std::size_t j = 0; j < p.size(); ++j) diff[j] = x[j] - c * p[j];
            best = std::min(best, norm(s, diff));
        }
        return best;
    }
    std::complex<double> inner = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) inner += std::conj(p[j]) * x[j];
    const std::complex<double> c = std::abs(inner) > 0.0 ? inner / std::abs(inner) : 1.0;
    for (std::size_t j = 0; j < p.size(); ++j) diff[j] = x[j] - c * p[j];
    return norm(s, diff);
}

AttainmentReport verify_attainment(const CLSpace& s, const HomPoly& q, const AttainmentPrediction& pred,
                                   double tol_value, double tol_point, const MaximizeOptions& options,
                                   std::string polynomial_id) {
    if (q.n() != s.dim() || static_cast<int>(pred.point.size()) != s.dim())
        fail(ErrorKind::DimensionMismatch, "polynomial, point and space dimensions differ");
    if (!(tol_value > 0.0) || !(tol_point > 0.0)) fail(ErrorKind::InvalidArgument, "tolerances must be positive");
    AttainmentReport rep;
    rep.polynomial_id = std::move(polynomial_id);
    rep.claimed_point = pred.point;
    rep.claimed_norm = pred.predicted_norm;
    rep.tol_value = tol_value;
    rep.tol_point = tol_point;
    rep.options = options;
    rep.value_at_point = q.eval(pred.point);
    rep.precondition_ok = rep.value_at_point == ComplexQ(pred.predicted_norm);
    if (!rep.precondition_ok) {
        rep.reason = "Q(point) = " + to_string(rep.value_at_point) + " differs from the claimed norm " +
                     to_string(pred.predicted_norm);
        return rep;
    }
    const Measured point_norm = norm(s, Vector(pred.point));
    if (point_norm.value > 1.0 + 1e-12) {
        rep.precondition_ok = false;
        rep.reason = "claimed point lies outside the unit ball";
        return rep;
    }

    const FloatPoly fq(q);
    const auto result = maximize([&](const FloatVector& x) { return std::abs(fq(x)); }, Domain::ball(s), options);
    const double claim = pred.predicted_norm.get_d();
    rep.best_value = result.value;
    rep.max_excess = result.value - claim;
    const FloatVector p = to_float(pred.point);
    for (std::size_t r = 0; r < result.trace.size(); ++r) {
        if (result.trace[r] < claim - tol_value) continue;
        ++rep.near_max_restarts;
        rep.cluster_distance = std::max(rep.cluster_distance, orbit_distance(s, p, result.restart_points[r]));
    }
    rep.pass = rep.max_excess <= tol_value && rep.cluster_distance <= tol_point;
    if (rep.max_excess > tol_value)
        rep.reason = "sampled value exceeds the claimed norm";
    else if (rep.cluster_distance > tol_point)
        rep.reason = "a near-maximizer lies away from the orbit of the claimed point";
    return rep;
}

namespace {

ExtremeTestResult hull_test(const CLSpace& s, const ExactVector& a, std::string label) {
    if (static_cast<int>(a.size()) != s.dim()) fail(ErrorKind::DimensionMismatch, "vector length differs from dimension");
    auto moduli = exact_moduli(a);
    if (!moduli) fail(ErrorKind::InvalidArgument, "coordinate moduli are not rational");
    if (norm_of_moduli(s, *moduli) != 1) fail(ErrorKind::InvalidArgument, "point does not have norm exactly 1");
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : nonnegative_extreme_points(s)) {
        std::vector<Rational> row;
        for (const auto& z : g) row.push_back(z.re);
        gens.push_back(std::move(row));
    }
    auto m = conv_membership(*moduli, gens);
    return ExtremeTestResult{std::move(label), std::move(*moduli), m.member, std::move(m.combination)};
}

} // namespace

ExtremeTestResult complex_extreme_test(const CLSpace& s, const ExactVector& a) {
    if (s.field() != Field::Complex) fail(ErrorKind::InvalidArgument, "complex extreme test needs a complex space");
    return hull_test(s, a, "complex_extreme_point");
}

ExtremeTestResult upper_monotonicity_test(const CLSpace& s, const ExactVector& a) {
    if (s.field() != Field::Real) fail(ErrorKind::InvalidArgument, "upper monotonicity test needs a real space");
    for (const auto& z : a)
        if (!z.is_real()) fail(ErrorKind::InvalidArgument, "complex coordinates in a real space");
    return hull_test(s, a, "upper_monotonicity_point");
}

IndexClassification index_one_classify(const CLSpace& s, int k) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "polynomial index classification needs k >= 2");
    if (s.field() != Field::Complex) fail(ErrorKind::InvalidArgument, "index classification needs a complex space");
    IndexClassification out;
    auto stables = s.max_stables();
    if (stables.size() == 1) {
        out.verdict = IndexClassification::Verdict::IndexOneEllInfty;
        return out;
    }
    // Lexicographic order on the sorted member lists.
    std::sort(stables.begin(), stables.end(), [](VertexSet a, VertexSet b) {
        const auto ma = a.members();
        const auto mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    });
    const VertexSet sx = stables[0];
    const VertexSet sy = stables[1];
    const int v = (sx - sy).front();
    VertexSet tau = VertexSet::of({v});
    for (int u = 0; u < s.dim(); ++u)
        if (!tau.contains(u) && tau.subset_of(s.graph().neighbors(u))) tau.insert(u);
    const VertexSet meet_y = tau & sy;
    if (meet_y.size() != 1) fail(ErrorKind::NotCLSpace, "clique does not meet the stable set in one vertex");

    IndexWitness w;
    w.x = indicator(sx, s.dim());
    w.y = indicator(sy, s.dim());
    w.clique = tau;
    w.flipped_vertex = v;
    w.other_vertex = meet_y.front();
    w.functional.support = tau;
    for (int u : tau.members()) w.functional.signs.push_back(u == v ? -1 : 1);
    const ExactVector f = w.functional.to_vector(s.dim());
    ExactVector mid(s.dim());
    for (int j = 0; j < s.dim(); ++j) mid[j] = (w.x[j] + w.y[j]) / Rational(2);
    w.value = pairing(f, mid).re;
    out.verdict = IndexClassification::Verdict::NotIndexOne;
    out.witness = std::move(w);
    return out;
}

std::vector<LeeViolation> lee_condition_check(const CLSpace& s, const std::vector<ExactVector>& points, int k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "degree must be >= 1");
    std::vector<LeeViolation> out;
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        const auto& x = points[pi];
        if (static_cast<int>(x.size()) != s.dim()) fail(ErrorKind::DimensionMismatch, "point length differs");
        for (const auto& z : x)
            if (!z.is_real() || sgn(z.re) < 0)
                fail(ErrorKind::InvalidArgument, "Lee condition check expects nonnegative real points");
        for (VertexSet clique : s.max_cliques()) {
            const auto patterns = sign_patterns(clique);
            std::size_t arg_max = 0, arg_min = 0;
            Rational best_max = -1, best_min = -1;
            for (std::size_t p = 0; p < patterns.size(); ++p) {
                Rational v = abs(pairing(patterns[p].to_vector(s.dim()), x).re);
                if (p == 0 || v > best_max) {
                    best_max = v;
                    arg_max = p;
                }
                if (p == 0 || v < best_min) {
                    best_min = v;
                    arg_min = p;
                }
            }
            if (best_max != 1) out.push_back({pi, x, patterns[arg_max], best_max});
            if (best_min != 1 && arg_min != arg_max) out.push_back({pi, x, patterns[arg_min], best_min});
        }
    }
    return out;
}

namespace {

void check_components(const CLSpace& s, const std::vector<HomPoly>& components) {
    if (static_cast<int>(components.size()) != s.dim())
        fail(ErrorKind::DimensionMismatch, "vector polynomial needs one component per coordinate");
    for (const auto& c : components) {
        if (c.n() != s.dim()) fail(ErrorKind::DimensionMismatch, "component in the wrong number of variables");
        if (c.degree() != components.front().degree())
            fail(ErrorKind::InvalidArgument, "components of different degrees");
    }
}

std::complex<double> unit_phase(std::complex<double> z) {
    const double a = std::abs(z);
    return a > 0.0 ? z / a : std::complex<double>(1.0, 0.0);
}

constexpr double kZeroCoordinate = 1e-12;

// Best dual functional supported on `clique` for the point x: phases fixed by
// x where x is nonzero, aligned with P(x) elsewhere.
FloatVector aligned_functional(const CLSpace& s, VertexSet clique, const FloatVector& x, const FloatVector& px) {
    FloatVector f(s.dim(), 0.0);
    std::complex<double> fixed = 0.0;
    for (int j : clique.members()) {
        if (std::abs(x[j]) > kZeroCoordinate) {
            f[j] = std::conj(unit_phase(x[j]));
            if (s.field() == Field::Real) f[j] = x[j].real() > 0 ? 1.0 : -1.0;
            fixed += f[j] * px[j];
        }
    }
    const std::complex<double> lead = unit_phase(fixed);
    for (int j : clique.members()) {
        if (std::abs(x[j]) > kZeroCoordinate) continue;
        if (s.field() == Field::Real) {
            const double sl = lead.real() >= 0 ? 1.0 : -1.0;
            const double sp = px[j].real() >= 0 ? 1.0 : -1.0;
            f[j] = sl * sp;
        } else {
            f[j] = lead * std::conj(unit_phase(px[j]));
        }
    }
    return f;
}

FloatVector evaluate_components(const std::vector<FloatPoly>& comps, const FloatVector& x) {
    FloatVector y(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) y[i] = comps[i](x);
    return y;
}

MaximizeOptions reseeded(const MaximizeOptions& o, std::uint64_t salt) {
    MaximizeOptions r = o;
    r.seed = o.seed ^ (0x9E3779B97F4A7C15ull * (salt + 1));
    return r;
}

} // namespace

NumericalRadiusBound numerical_radius_lower(const CLSpace& s, const std::vector<HomPoly>& components,
                                            const MaximizeOptions& options) {
    check_components(s, components);
    std::vector<FloatPoly> comps(components.begin(), components.end());
    NumericalRadiusBound best;
    best.value = -1.0;
    const auto& cliques = s.max_cliques();
    for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
        const VertexSet clique = cliques[ci];
        auto objective = [&](const FloatVector& x) {
            const FloatVector px = evaluate_components(comps, x);
            return std::abs(pairing(aligned_functional(s, clique, x, px), px));
        };
        const auto r = maximize(objective, Domain::clique_face(s, clique), reseeded(options, ci));
        if (r.value > best.value) {
            const FloatVector px = evaluate_components(comps, r.argmax);
            const FloatVector f = aligned_functional(s, clique, r.argmax, px);
            best.value = r.value;
            best.clique = clique;
            best.pair = StatePair{r.argmax, f, pairing(f, r.argmax)};
        }
    }
    return best;
}

double estimate_vector_poly_norm(const CLSpace& s, const std::vector<HomPoly>& components,
                                 const MaximizeOptions& options) {
    check_components(s, components);
    std::vector<FloatPoly> comps(components.begin(), components.end());
    return maximize([&](const FloatVector& x) { return norm(s, evaluate_components(comps, x)); }, Domain::ball(s), options).value;
}

double estimate_poly_norm(const CLSpace& s, const HomPoly& p, const MaximizeOptions& options) {
    if (p.n() != s.dim()) fail(ErrorKind::DimensionMismatch, "polynomial in the wrong number of variables");
    const FloatPoly fp(p);
    return maximize([&](const FloatVector& x) { return std::abs(fp(x)); }, Domain::ball(s), options).value;
}

PerturbationReport perturbation_step(const HomPoly& f, const HomPoly& h, int w_index, const Rational& eps, int k,
                                     int n_ball, const MaximizeOptions& options) {
    if (f.degree() != k || h.degree() != k) fail(ErrorKind::InvalidArgument, "f and h must both have degree k");
    if (f.n() != h.n()) fail(ErrorKind::DimensionMismatch, "f and h in different numbers of variables");
    const int n = f.n();
    if (w_index < 0 || w_index >= n) fail(ErrorKind::InvalidArgument, "basis index out of range");
    if (sgn(eps) <= 0) fail(ErrorKind::InvalidArgument, "eps must be positive");
    if (n_ball < 1) fail(ErrorKind::InvalidArgument, "n_ball must be >= 1");

    MultiIndex wk(n, 0);
    wk[w_index] = k;
    const HomPoly fh = subtract(f, h);
    const ComplexQ d = fh.coeff(wk); // (f-h)(e_w)
    if (d.is_zero()) fail(ErrorKind::InvalidArgument, "(f-h)(w) = 0, perturbation direction undefined");
    const auto dmod = exact_modulus(d);
    if (!dmod) fail(ErrorKind::InvalidArgument, "|(f-h)(w)| is irrational");

    PerturbationReport rep{HomPoly(n, k)};
    rep.direction = d / *dmod;
    rep.fh_at_w = *dmod;
    rep.eps = eps;
    rep.exclusion_radius = make_rational(1, n_ball);
    rep.g = subtract(h, HomPoly::monomial(wk, rep.direction * ComplexQ(eps)));

    const HomPoly fg = subtract(f, rep.g);
    rep.fg_at_w = *exact_modulus(fg.coeff(wk));
    rep.g_minus_h_bound = *l1_coefficient_bound(subtract(rep.g, h));

    bool real = true;
    for (const auto* p : {&f, &h})
        for (const auto& [alpha, c] : p->terms()) real = real && c.is_real();
    const CLSpace l1 = space_from_graph(complete_graph(n), real ? Field::Real : Field::Complex);

    const FloatPoly ffg(fg);
    const double radius = rep.exclusion_radius.get_d();
    auto away = [&](const FloatVector& x) {
        // inf over |c| = 1 of ||x - c e_w||_1
        double dist = 1.0 - std::abs(x[w_index]);
        for (int j = 0; j < n; ++j)
            if (j != w_index) dist += std::abs(x[j]);
        return dist > radius ? std::abs(ffg(x)) : -std::numeric_limits<double>::infinity();
    };
    rep.sampled_sup = maximize(away, Domain::ball(l1), options).value;
    rep.margin = rep.fg_at_w.get_d() - rep.sampled_sup;
    rep.sharp = rep.margin > 0.0;

    rep.fh_norm_estimate = estimate_poly_norm(l1, fh, reseeded(options, 1));
    rep.w_near_norming = rep.fh_at_w.get_d() > rep.fh_norm_estimate - eps.get_d() * radius / 2.0;
    return rep;
}

namespace {

// All exponent vectors of total degree m in n variables, lexicographic.
void compositions(int n, int m, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = m;
        out.push_back(cur);
        return;
    }
    for (int a = m; a >= 0; --a) {
        cur[pos] = a;
        compositions(n, m - a, cur, pos + 1, out);
    }
}

} // namespace

FrechetTable frechet_probe(const CLSpace& s, const HomPoly& p, const std::vector<double>& delta_ladder,
                           int direction_samples, const MaximizeOptions& options) {
    if (delta_ladder.empty()) fail(ErrorKind::InvalidArgument, "empty delta ladder");
    if (direction_samples < 1) fail(ErrorKind::InvalidArgument, "need at least one direction sample");
    if (p.is_zero()) fail(ErrorKind::InvalidArgument, "Frechet probe of the zero polynomial");
    if (p.n() != s.dim()) fail(ErrorKind::DimensionMismatch, "polynomial in the wrong number of variables");
    for (double d : delta_ladder)
        if (!(d > 0.0)) fail(ErrorKind::InvalidArgument, "ladder entries must be positive");

    const int n = s.dim();
    const int m = p.degree();
    const FloatPoly fp(p);
    std::vector<MultiIndex> monomials;
    MultiIndex cur(n, 0);
    compositions(n, m, cur, 0, monomials);

    FrechetTable table;
    table.norm_estimate = estimate_poly_norm(s, p, options);

    // Random unit-norm directions D.
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    struct Direction {
        std::vector<std::complex<double>> coeffs;
        double scale;
    };
    std::vector<Direction> dirs;
    auto eval_dir = [&](const Direction& d, const FloatVector& x) {
        std::complex<double> sum = 0.0;
        for (std::size_t t = 0; t < monomials.size(); ++t) {
            std::complex<double> term = d.coeffs[t];
            for (int j = 0; j < n; ++j)
                for (int e = 0; e < monomials[t][j]; ++e) term *= x[j];
            sum += term;
        }
        return sum * d.scale;
    };
    for (int i = 0; i < direction_samples; ++i) {
        Direction d{{}, 1.0};
        for (std::size_t t = 0; t < monomials.size(); ++t) {
            const double re = unit(rng);
            const double im = s.field() == Field::Complex ? unit(rng) : 0.0;
            d.coeffs.emplace_back(re, im);
        }
        const double dn = maximize([&](const FloatVector& x) { return std::abs(eval_dir(d, x)); }, Domain::ball(s),
                                   reseeded(options, 1000 + i))
                              .value;
        d.scale = dn > 0.0 ? 1.0 / dn : 0.0;
        dirs.push_back(std::move(d));
    }

    for (std::size_t li = 0; li < delta_ladder.size(); ++li) {
        const double delta = delta_ladder[li];
        FrechetRow row{delta, -std::numeric_limits<double>::infinity(), 0.0};
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const auto& d = dirs[i];
            const auto salt = 2000 + 2 * (li * dirs.size() + i);
            const double plus = maximize([&](const FloatVector& x) { return std::abs(fp(x) + delta * eval_dir(d, x)); },
                                         Domain::ball(s), reseeded(options, salt))
                                    .value;
            const double minus =
                maximize([&](const FloatVector& x) { return std::abs(fp(x) - delta * eval_dir(d, x)); },
                         Domain::ball(s), reseeded(options, salt + 1))
                    .value;
            const double q = (plus + minus - 2.0 * table.norm_estimate) / delta;
            row.max_quotient = std::max(row.max_quotient, q);
            row.mean_quotient += q / static_cast<double>(dirs.size());
        }
        table.rows.push_back(row);
    }

    std::vector<FrechetRow> sorted = table.rows;
    std::sort(sorted.begin(), sorted.end(), [](const FrechetRow& a, const FrechetRow& b) { return a.delta > b.delta; });
    table.decreasing_trend = true;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].max_quotient > sorted[i - 1].max_quotient + 1e-9) table.decreasing_trend = false;
    return table;
}

} // namespace reisner
