#include "reisner/analysis.hpp"
#include "reisner/error.hpp"

#include <gtest/gtest.h>

using namespace reisner;

namespace {

const Rational kHalf = make_rational(1, 2);

MaximizeOptions quick(int restarts = 16, int iterations = 120) {
    MaximizeOptions o;
    o.restarts = restarts;
    o.iterations = iterations;
    return o;
}

HomPoly mono(std::initializer_list<int> alpha, const ComplexQ& c = ComplexQ(1)) {
    return HomPoly::monomial(MultiIndex(alpha), c);
}

} // namespace

TEST(AttainingPoints, PathAndCap) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    const auto pts = strongly_attaining_points(p3, 2, 100);
    EXPECT_FALSE(pts.truncated);
    ASSERT_EQ(pts.points.size(), 3u);
    EXPECT_EQ(pts.points[0], real_vector({0, 1, 0}));
    EXPECT_EQ(pts.points[1], real_vector({kHalf, kHalf, kHalf}));
    EXPECT_EQ(pts.points[2], real_vector({1, 0, 1}));
    const auto capped = strongly_attaining_points(p3, 3, 2);
    EXPECT_TRUE(capped.truncated);
    EXPECT_EQ(capped.points.size(), 2u);
    EXPECT_THROW(strongly_attaining_points(p3, 1, 10), Error);
    for (const auto& x : strongly_attaining_points(p3, 3, 100).points) EXPECT_EQ(*norm(p3, Vector(x)).exact, 1);
}

TEST(OrbitDistance, RealAndComplex) {
    const CLSpace l1r = space_from_graph(complete_graph(2), Field::Real);
    const CLSpace l1c = space_from_graph(complete_graph(2), Field::Complex);
    const FloatVector p{0.5, 0.5};
    EXPECT_NEAR(orbit_distance(l1r, p, FloatVector{-0.5, -0.5}), 0.0, 1e-15);
    EXPECT_NEAR(orbit_distance(l1r, p, FloatVector{0.5, -0.5}), 1.0, 1e-15);
    const std::complex<double> i(0.0, 1.0);
    EXPECT_NEAR(orbit_distance(l1c, p, FloatVector{0.5 * i, 0.5 * i}), 0.0, 1e-15);
    EXPECT_NEAR(orbit_distance(l1c, p, FloatVector{1.0, 0.0}), 1.0, 1e-12);
}

TEST(VerifyAttainment, PassesOnConstructedPolynomials) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    const BuiltQ b = build_q(p3, {real_vector({1, 0, 1}), real_vector({0, 1, 0})});
    const auto rep = verify_attainment(p3, b.q, b.prediction, 1e-6, 5e-2, quick(32, 200));
    EXPECT_TRUE(rep.precondition_ok);
    EXPECT_TRUE(rep.pass) << rep.reason;
    EXPECT_LE(rep.max_excess, 1e-6);
    EXPECT_GE(rep.near_max_restarts, 1);
    EXPECT_TRUE(rep.reason.empty());

    const CLSpace l1 = space_from_graph(complete_graph(3), Field::Complex);
    const BuiltQ a = build_q(l1, {real_vector({1, 0, 0}), real_vector({0, 1, 0})});
    EXPECT_TRUE(verify_attainment(l1, a.q, a.prediction, 1e-6, 5e-2, quick(32, 200)).pass);
}

TEST(VerifyAttainment, RejectsWrongClaims) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    const BuiltQ b = build_q(p3, {real_vector({1, 0, 1}), real_vector({0, 1, 0})});
    // Mismatched polynomial: the exact precondition fails before any search.
    const auto bad = verify_attainment(p3, mono({2, 0, 0}), b.prediction, 1e-6, 5e-2, quick());
    EXPECT_FALSE(bad.precondition_ok);
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.reason.empty());

    const CLSpace l1 = space_from_graph(complete_graph(2), Field::Real);
    // x0^2 + x1^2 is 1/2 at (1/2, 1/2) but 1 at e_0.
    const AttainmentPrediction low{real_vector({kHalf, kHalf}), kHalf, {}};
    const auto excess = verify_attainment(l1, add(mono({2, 0}), mono({0, 2})), low, 1e-6, 5e-2, quick());
    EXPECT_TRUE(excess.precondition_ok);
    EXPECT_FALSE(excess.pass);
    EXPECT_NEAR(excess.max_excess, 0.5, 1e-6);
    // x0 x1 peaks at (1/2, 1/2) and at (1/2, -1/2), which is off the real orbit.
    const AttainmentPrediction twin{real_vector({kHalf, kHalf}), make_rational(1, 4), {}};
    const auto split = verify_attainment(l1, mono({1, 1}), twin, 1e-6, 5e-2, quick(32));
    EXPECT_FALSE(split.pass);
    EXPECT_GT(split.cluster_distance, 0.5);

    EXPECT_THROW(verify_attainment(p3, b.q, b.prediction, 0.0, 5e-2, quick()), Error);
    EXPECT_THROW(verify_attainment(l1, b.q, b.prediction, 1e-6, 5e-2, quick()), Error);
}

TEST(ExtremeTests, ComplexAndUpperMonotone) {
    const CLSpace p3c = space_from_graph(path_graph(3), Field::Complex);
    const auto half = complex_extreme_test(p3c, real_vector({kHalf, kHalf, kHalf}));
    EXPECT_TRUE(half.member);
    ASSERT_TRUE(half.combination.has_value());
    EXPECT_EQ(half.combination->weights, (std::vector<Rational>{kHalf, kHalf}));
    // (1, 0, 0) has norm 1 but its modulus vector is not a hull point.
    EXPECT_FALSE(complex_extreme_test(p3c, real_vector({1, 0, 0})).member);
    // Phases do not matter: 3/5 + 4/5 i has modulus 1.
    const ComplexQ u(make_rational(3, 5), make_rational(4, 5));
    EXPECT_TRUE(complex_extreme_test(p3c, ExactVector{u, ComplexQ(0), ComplexQ(-1)}).member);
    EXPECT_THROW(complex_extreme_test(p3c, real_vector({kHalf, 0, 0})), Error);

    const CLSpace p3r = space_from_graph(path_graph(3), Field::Real);
    EXPECT_THROW(complex_extreme_test(p3r, real_vector({0, 1, 0})), Error);
    EXPECT_TRUE(upper_monotonicity_test(p3r, real_vector({-1, 0, 1})).member);
    EXPECT_THROW(upper_monotonicity_test(p3r, real_vector({0, kHalf, 0})), Error);
    EXPECT_THROW(upper_monotonicity_test(p3c, real_vector({0, 1, 0})), Error);
}

TEST(ExtremeTests, L1AndLinfConsistency) {
    const CLSpace l1 = space_from_graph(complete_graph(3), Field::Complex);
    EXPECT_TRUE(complex_extreme_test(l1, real_vector({make_rational(1, 3), kHalf, make_rational(1, 6)})).member);
    const CLSpace linf = space_from_graph(edgeless_graph(3), Field::Complex);
    EXPECT_TRUE(complex_extreme_test(linf, real_vector({1, -1, 1})).member);
    EXPECT_FALSE(complex_extreme_test(linf, real_vector({1, kHalf, 1})).member);
}

TEST(IndexClassify, PathWitness) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Complex);
    const auto c = index_one_classify(p3, 2);
    EXPECT_EQ(c.verdict, IndexClassification::Verdict::NotIndexOne);
    ASSERT_TRUE(c.witness.has_value());
    const auto& w = *c.witness;
    EXPECT_EQ(w.x, real_vector({1, 0, 1}));
    EXPECT_EQ(w.y, real_vector({0, 1, 0}));
    EXPECT_EQ(w.clique, VertexSet::of({0, 1}));
    EXPECT_EQ(w.flipped_vertex, 0);
    EXPECT_EQ(w.other_vertex, 1);
    EXPECT_EQ(w.functional.to_vector(3), real_vector({-1, 1, 0}));
    EXPECT_EQ(w.value, 0);
    EXPECT_STREQ(to_string(c.verdict), "NotIndexOne");
}

TEST(IndexClassify, EdgelessIsIndexOne) {
    for (int n = 1; n <= 4; ++n) {
        const auto c = index_one_classify(space_from_graph(edgeless_graph(n), Field::Complex), 3);
        EXPECT_EQ(c.verdict, IndexClassification::Verdict::IndexOneEllInfty);
        EXPECT_FALSE(c.witness.has_value());
    }
    const CLSpace real = space_from_graph(edgeless_graph(2), Field::Real);
    EXPECT_THROW(index_one_classify(real, 2), Error);
    EXPECT_THROW(index_one_classify(space_from_graph(edgeless_graph(2), Field::Complex), 1), Error);
}

TEST(LeeCheck, PathHasViolationsAndLinfHasNone) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Complex);
    const auto pts = strongly_attaining_points(p3, 2, 100).points;
    const auto v = lee_condition_check(p3, pts, 2);
    ASSERT_FALSE(v.empty());
    for (const auto& e : v) {
        EXPECT_EQ(e.point, pts[1]);
        EXPECT_NE(e.value, 1);
    }
    EXPECT_EQ(v.front().value, 0);

    const CLSpace linf = space_from_graph(edgeless_graph(3), Field::Complex);
    EXPECT_TRUE(lee_condition_check(linf, strongly_attaining_points(linf, 2, 100).points, 2).empty());
    EXPECT_THROW(lee_condition_check(p3, {real_vector({-1, 0, 1})}, 2), Error);
}

TEST(NumericalRadius, LinfMatchesNorm) {
    const CLSpace linf = space_from_graph(edgeless_graph(2), Field::Complex);
    const std::vector<HomPoly> comps{add(mono({2, 0}), mono({1, 1})), scale(mono({0, 2}), ComplexQ(kHalf))};
    const auto r = numerical_radius_lower(linf, comps, quick());
    EXPECT_NEAR(r.value, 2.0, 1e-6);
    EXPECT_LE(r.value, 2.0 + 1e-12);
    // The reported pair is a state: x*(x) = 1, and |x*(P(x))| is the bound.
    EXPECT_NEAR(std::abs(r.pair.pairing - 1.0), 0.0, 1e-9);
    FloatVector px;
    for (const auto& c : comps) px.push_back(FloatPoly(c)(r.pair.x));
    EXPECT_NEAR(std::abs(pairing(r.pair.f, px)), r.value, 1e-9);
    EXPECT_NEAR(estimate_vector_poly_norm(linf, comps, quick()), 2.0, 1e-6);
    EXPECT_THROW(numerical_radius_lower(linf, {comps[0]}, quick()), Error);
}

TEST(NumericalRadius, PathIsLowerBounded) {
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Complex);
    const std::vector<HomPoly> comps{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 0, 2})};
    const auto r = numerical_radius_lower(p3, comps, quick());
    EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(Perturbation, SharpOnL1) {
    const HomPoly f = add(mono({2, 0}), scale(mono({1, 1}), ComplexQ(kHalf)));
    const HomPoly h = mono({0, 2});
    const auto rep = perturbation_step(f, h, 0, make_rational(1, 10), 2, 2, quick());
    EXPECT_EQ(rep.fh_at_w, 1);
    EXPECT_EQ(rep.fg_at_w, make_rational(11, 10));
    EXPECT_EQ(rep.g_minus_h_bound, make_rational(1, 10));
    EXPECT_EQ(rep.direction, ComplexQ(1));
    EXPECT_EQ(rep.g, subtract(h, scale(mono({2, 0}), ComplexQ(make_rational(1, 10)))));
    EXPECT_TRUE(rep.sharp);
    EXPECT_GT(rep.margin, 0.0);
    EXPECT_THROW(perturbation_step(f, f, 0, make_rational(1, 10), 2, 2, quick()), Error);
    EXPECT_THROW(perturbation_step(f, h, 0, Rational(0), 2, 2, quick()), Error);
    EXPECT_THROW(perturbation_step(f, h, 0, kHalf, 3, 2, quick()), Error);
}

TEST(Frechet, ProbeProducesOneRowPerDelta) {
    const CLSpace l1 = space_from_graph(complete_graph(2), Field::Real);
    const auto t = frechet_probe(l1, q_lemma(2, {0, 1}), {1e-1, 1e-2}, 4, quick(8, 80));
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_NEAR(t.norm_estimate, 1.25, 1e-6);
    for (const auto& row : t.rows) {
        EXPECT_GE(row.max_quotient, row.mean_quotient);
        EXPECT_GE(row.mean_quotient, 0.0);
    }
    EXPECT_THROW(frechet_probe(l1, q_lemma(2, {0, 1}), {}, 4, quick()), Error);
    EXPECT_THROW(frechet_probe(l1, HomPoly(2, 2), {0.1}, 4, quick()), Error);
}
