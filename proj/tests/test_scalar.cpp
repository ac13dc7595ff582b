#include "reisner/error.hpp"
#include "reisner/scalar.hpp"

#include <gtest/gtest.h>

using namespace reisner;

TEST(Rational, ParsesExactly) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-2/7"), make_rational(-2, 7));
    EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
    EXPECT_EQ(parse_rational("0.125"), make_rational(1, 8));
    EXPECT_EQ(parse_rational("-1.5"), make_rational(-3, 2));
    EXPECT_EQ(parse_rational("1e-3"), make_rational(1, 1000));
    EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
    EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
}

TEST(Rational, RejectsGarbage) {
    for (const char* bad : {"", "abc", "1/0", "1/", "--1", "1.2.3", "3x"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << "accepted " << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
        }
    }
}

TEST(Rational, ToStringRoundTrips) {
    for (const Rational& q : {make_rational(5, 4), make_rational(-7, 3), Rational(0), Rational(12)})
        EXPECT_EQ(parse_rational(to_string(q)), q);
    EXPECT_EQ(to_string(make_rational(5, 4)), "5/4");
}

TEST(ComplexQ, Arithmetic) {
    const ComplexQ i(Rational(0), Rational(1));
    EXPECT_EQ(i * i, ComplexQ(-1));
    EXPECT_EQ(pow(i, 4), ComplexQ(1));
    EXPECT_EQ(pow(ComplexQ(make_rational(1, 2)), 3), ComplexQ(make_rational(1, 8)));
    EXPECT_EQ(pow(ComplexQ(5), 0), ComplexQ(1));
    const ComplexQ z(make_rational(3, 5), make_rational(4, 5));
    EXPECT_EQ(z.norm_squared(), Rational(1));
    EXPECT_EQ(z * z.conj(), ComplexQ(1));
    EXPECT_TRUE(ComplexQ(2).is_real());
    EXPECT_TRUE(ComplexQ().is_zero());
}

TEST(ComplexQ, ExactModulus) {
    EXPECT_EQ(exact_modulus(ComplexQ(make_rational(-3, 2))), make_rational(3, 2));
    EXPECT_EQ(exact_modulus(ComplexQ(Rational(0), make_rational(-1, 3))), make_rational(1, 3));
    EXPECT_EQ(exact_modulus(ComplexQ(make_rational(3, 5), make_rational(4, 5))), Rational(1));
    EXPECT_FALSE(exact_modulus(ComplexQ(1, 1)).has_value());
    EXPECT_EQ(rational_sqrt(make_rational(9, 16)), make_rational(3, 4));
    EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
}

TEST(Vector, Variants) {
    const Vector e = real_vector({Rational(1), make_rational(-1, 2)});
    EXPECT_TRUE(e.is_exact());
    EXPECT_TRUE(e.is_real());
    EXPECT_EQ(e.size(), 2u);
    EXPECT_DOUBLE_EQ(e.to_float()[1].real(), -0.5);
    const Vector f(FloatVector{{1.0, 0.0}, {0.0, 1.0}});
    EXPECT_FALSE(f.is_exact());
    EXPECT_FALSE(f.is_real());
    const auto mod = exact_moduli(ExactVector{ComplexQ(-2), ComplexQ(Rational(0), Rational(3))});
    ASSERT_TRUE(mod.has_value());
    EXPECT_EQ(*mod, (std::vector<Rational>{2, 3}));
}
