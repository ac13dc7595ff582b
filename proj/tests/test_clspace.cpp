#include "oracles.hpp"

#include "reisner/clspace.hpp"
#include "reisner/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace reisner;

namespace {

std::vector<Graph> reisner_graphs(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            if (reisner_check(g).passes()) out.push_back(g);
        }
    return out;
}

ExactVector random_vector(std::mt19937_64& rng, int n, bool complex_axis) {
    ExactVector x;
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j < n; ++j) {
        const Rational q = oracle::random_rational(rng, 9, 7);
        // Pure imaginary coordinates keep moduli rational.
        x.push_back(complex_axis && coin(rng) ? ComplexQ(Rational(0), q) : ComplexQ(q));
    }
    return x;
}

// max over maximal cliques of the l1 sum of moduli, cliques from a subset scan.
Rational clique_sum_oracle(const Graph& g, const std::vector<Rational>& moduli, bool over_cliques) {
    Rational best = 0;
    for (std::uint32_t c : oracle::naive_maximal(g, over_cliques)) {
        Rational sum = 0;
        for (int j = 0; j < g.n(); ++j)
            if (c >> j & 1u) sum += moduli[j];
        if (sum > best) best = sum;
    }
    return best;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace

TEST(ReisnerCheck, Examples) {
    EXPECT_TRUE(reisner_check(complete_graph(4)).passes());
    EXPECT_TRUE(reisner_check(edgeless_graph(4)).passes());
    EXPECT_TRUE(reisner_check(path_graph(3)).passes());
    // P4 is perfect, but the clique {1,2} misses the maximal stable set {0,3}.
    const CLReport p4 = reisner_check(path_graph(4));
    EXPECT_TRUE(p4.perfectness.perfect);
    EXPECT_FALSE(p4.intersection_ok);
    ASSERT_TRUE(p4.violating_pair.has_value());
    EXPECT_EQ(p4.violating_pair->intersection_size, 0);
    const CLReport c5 = reisner_check(cycle_graph(5));
    EXPECT_FALSE(c5.passes());
    EXPECT_FALSE(c5.perfectness.perfect);
}

TEST(ReisnerCheck, MatchesIntersectionScan) {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask) {
            const Graph g = oracle::graph_from_mask(n, mask);
            bool ok = !oracle::naive_imperfect_witness(g).has_value();
            for (std::uint32_t c : oracle::naive_maximal(g, true))
                for (std::uint32_t s : oracle::naive_maximal(g, false))
                    if (__builtin_popcount(c & s) != 1) ok = false;
            ASSERT_EQ(reisner_check(g).passes(), ok) << "mask=" << mask;
        }
}

TEST(CLSpace, ConstructionAndRejection) {
    const CLSpace s = space_from_graph(path_graph(3), Field::Real);
    EXPECT_EQ(s.dim(), 3);
    EXPECT_EQ(s.max_cliques(), maximal_cliques(path_graph(3)));
    EXPECT_EQ(s.max_stables(), maximal_stable_sets(path_graph(3)));
    try {
        space_from_graph(cycle_graph(5), Field::Real);
        FAIL();
    } catch (const NotCLSpaceError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCLSpace);
        ASSERT_TRUE(e.report().perfectness.witness.has_value());
        EXPECT_EQ(e.report().perfectness.witness->bits(), 0x1Fu);
    }
}

TEST(Norm, Examples) {
    const CLSpace l1 = space_from_graph(complete_graph(2), Field::Real);
    const CLSpace linf = space_from_graph(edgeless_graph(2), Field::Complex);
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    EXPECT_EQ(*norm(l1, Vector(real_vector({1, 1}))).exact, Rational(2));
    EXPECT_EQ(*norm(linf, Vector(real_vector({1, 1}))).exact, Rational(1));
    EXPECT_EQ(*norm(p3, Vector(real_vector({1, 1, 1}))).exact, Rational(2));
    EXPECT_EQ(*dual_norm(l1, Vector(real_vector({1, 1}))).exact, Rational(1));
    EXPECT_EQ(*dual_norm(linf, Vector(real_vector({1, 1}))).exact, Rational(2));
    EXPECT_EQ(*dual_norm(p3, Vector(real_vector({1, 0, 1}))).exact, Rational(2));
    EXPECT_DOUBLE_EQ(norm(p3, FloatVector{1.0, -2.0, 0.5}), 3.0);
}

TEST(Norm, ErrorsAndFloatFallback) {
    const CLSpace real = space_from_graph(path_graph(3), Field::Real);
    const CLSpace cx = space_from_graph(path_graph(3), Field::Complex);
    try {
        norm(real, Vector(real_vector({1, 1})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    const ExactVector z{ComplexQ(1, 1), ComplexQ(0), ComplexQ(0)};
    EXPECT_THROW(norm(real, Vector(z)), Error);
    const Measured m = norm(cx, Vector(z));
    EXPECT_FALSE(m.is_exact());
    EXPECT_NEAR(m.value, std::sqrt(2.0), 1e-12);
    const ExactVector w{ComplexQ(make_rational(3, 5), make_rational(4, 5)), ComplexQ(1), ComplexQ(0)};
    EXPECT_EQ(*norm(cx, Vector(w)).exact, Rational(2));
}

TEST(Norm, MatchesCliqueScanAndDualExtremes) {
    std::mt19937_64 rng(21);
    for (const Graph& g : reisner_graphs(5)) {
        for (Field f : {Field::Real, Field::Complex}) {
            const CLSpace s = space_from_graph(g, f);
            const auto duals = dual_extreme_points(s);
            const auto prims = extreme_points(s);
            for (int t = 0; t < 3; ++t) {
                const ExactVector x = random_vector(rng, g.n(), f == Field::Complex);
                const auto mod = *exact_moduli(x);
                const Rational nx = *norm(s, Vector(x)).exact;
                ASSERT_EQ(nx, clique_sum_oracle(g, mod, true));
                ASSERT_EQ(*dual_norm(s, Vector(x)).exact, clique_sum_oracle(g, mod, false));
                ASSERT_EQ(nx, norm_of_moduli(s, mod));
                if (f == Field::Real) {
                    // Both formulas as a max of pairings over the dual (primal) extreme points.
                    Rational best = 0, best_dual = 0;
                    for (const auto& d : duals) best = std::max(best, abs_q(pairing(d.to_vector(g.n()), x).re));
                    for (const auto& p : prims)
                        best_dual = std::max(best_dual, abs_q(pairing(p.to_vector(g.n()), x).re));
                    ASSERT_EQ(nx, best);
                    ASSERT_EQ(*dual_norm(s, Vector(x)).exact, best_dual);
                }
            }
        }
    }
}

TEST(Norm, AbsoluteMonotoneAndUnitBasis) {
    std::mt19937_64 rng(22);
    for (const Graph& g : reisner_graphs(5)) {
        const CLSpace s = space_from_graph(g, Field::Real);
        const int n = g.n();
        for (int j = 0; j < n; ++j) {
            ExactVector e(n, ComplexQ(0));
            e[j] = ComplexQ(1);
            ASSERT_EQ(*norm(s, Vector(e)).exact, Rational(1));
            for (int i = j + 1; i < n; ++i) {
                ExactVector eij = e;
                eij[i] = ComplexQ(1);
                ASSERT_EQ(*norm(s, Vector(eij)).exact, Rational(g.adjacent(i, j) ? 2 : 1));
            }
        }
        ExactVector x = random_vector(rng, n, false);
        ExactVector ax;
        for (const auto& c : x) ax.push_back(ComplexQ(abs_q(c.re)));
        ASSERT_EQ(*norm(s, Vector(x)).exact, *norm(s, Vector(ax)).exact);
        ExactVector bigger = ax;
        bigger[rng() % n] += ComplexQ(make_rational(1, 3));
        ASSERT_GE(*norm(s, Vector(bigger)).exact, *norm(s, Vector(ax)).exact);
    }
}

TEST(GraphOfNorm, SpecializationsAndRoundtrip) {
    auto l1 = [](const ExactVector& x) {
        Rational s = 0;
        for (const auto& c : x) s += abs_q(c.re);
        return s;
    };
    auto linf = [](const ExactVector& x) {
        Rational s = 0;
        for (const auto& c : x) s = std::max(s, abs_q(c.re));
        return s;
    };
    EXPECT_EQ(graph_of_norm(std::function<Rational(const ExactVector&)>(l1), 3), complete_graph(3));
    EXPECT_EQ(graph_of_norm(std::function<Rational(const ExactVector&)>(linf), 3), edgeless_graph(3));
    for (const Graph& g : reisner_graphs(5)) {
        const CLSpace s = space_from_graph(g, Field::Real);
        auto exact = [&](const ExactVector& x) { return *norm(s, Vector(x)).exact; };
        auto fl = [&](const FloatVector& x) { return norm(s, x); };
        ASSERT_EQ(graph_of_norm(std::function<Rational(const ExactVector&)>(exact), g.n()), g);
        ASSERT_EQ(graph_of_norm(std::function<double(const FloatVector&)>(fl), g.n()), g);
    }
}

TEST(ExtremePoints, Examples) {
    const CLSpace l1 = space_from_graph(complete_graph(3), Field::Real);
    EXPECT_EQ(extreme_points(l1).size(), 6u);
    const CLSpace linf = space_from_graph(edgeless_graph(2), Field::Real);
    EXPECT_EQ(extreme_points(linf).size(), 4u);
    EXPECT_EQ(dual_extreme_points(linf).size(), 4u);
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    const auto ext = extreme_points(p3);
    ASSERT_EQ(ext.size(), 6u);
    // Stable sets {1} then {0,2}; binary-counting sign order.
    EXPECT_EQ(ext[0].to_vector(3), real_vector({0, 1, 0}));
    EXPECT_EQ(ext[1].to_vector(3), real_vector({0, -1, 0}));
    EXPECT_EQ(ext[2].to_vector(3), real_vector({1, 0, 1}));
    EXPECT_EQ(ext[3].to_vector(3), real_vector({-1, 0, 1}));
    EXPECT_EQ(ext[5].to_vector(3), real_vector({-1, 0, -1}));
    EXPECT_EQ(dual_extreme_points(p3).size(), 8u);
    const CLSpace p3c = space_from_graph(path_graph(3), Field::Complex);
    const auto cext = extreme_points(p3c);
    ASSERT_EQ(cext.size(), 2u);
    EXPECT_TRUE(cext[0].orbit);
}

TEST(ExtremePoints, IsExtreme) {
    const CLSpace l1 = space_from_graph(complete_graph(3), Field::Real);
    EXPECT_TRUE(is_extreme(l1, Vector(real_vector({1, 0, 0}))));
    EXPECT_FALSE(is_extreme(l1, Vector(real_vector({make_rational(1, 2), make_rational(1, 2), 0}))));
    const CLSpace p3 = space_from_graph(path_graph(3), Field::Real);
    EXPECT_FALSE(is_extreme(p3, Vector(real_vector({1, 1, 0}))));
    EXPECT_FALSE(is_extreme(p3, Vector(real_vector({1, 0, 0}))));
    EXPECT_TRUE(is_extreme(p3, Vector(real_vector({-1, 0, 1}))));
    const CLSpace p3c = space_from_graph(path_graph(3), Field::Complex);
    EXPECT_TRUE(is_extreme(p3c, Vector(ExactVector{ComplexQ(make_rational(3, 5), make_rational(4, 5)), 0,
                                                    ComplexQ(Rational(0), Rational(-1))})));
    EXPECT_TRUE(is_extreme(p3c, Vector(FloatVector{std::polar(1.0, 0.3), 0.0, std::polar(1.0, 2.0)})));
}

TEST(ExtremePoints, DualityPairingIsUnimodular) {
    for (const Graph& g : reisner_graphs(5)) {
        const CLSpace s = space_from_graph(g, Field::Real);
        for (const auto& x : extreme_points(s))
            for (const auto& f : dual_extreme_points(s)) {
                const Rational v = pairing(f.to_vector(g.n()), x.to_vector(g.n())).re;
                ASSERT_EQ(abs_q(v), Rational(1));
            }
    }
}

TEST(SignPatterns, BinaryCountingOrder) {
    const auto pats = sign_patterns(VertexSet::of({1, 3}));
    ASSERT_EQ(pats.size(), 4u);
    EXPECT_EQ(pats[0].signs, (std::vector<int>{1, 1}));
    EXPECT_EQ(pats[1].signs, (std::vector<int>{-1, 1}));
    EXPECT_EQ(pats[2].signs, (std::vector<int>{1, -1}));
    EXPECT_EQ(pats[3].signs, (std::vector<int>{-1, -1}));
}
