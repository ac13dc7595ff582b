#pragma once

// Scalars and coordinate vectors. Exact values are GMP rationals (complex
// numbers as a rational real/imaginary pair); float values are
// std::complex<double>. A Vector carries one or the other and says which.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace reisner {

using Rational = mpq_class;

// num/den in canonical form (GMP arithmetic requires canonical operands).
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

struct ComplexQ {
    Rational re;
    Rational im;

    ComplexQ() = default;
    ComplexQ(Rational r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexQ(int r) : re(r), im(0) {} // NOLINT(google-explicit-constructor)

    bool is_real() const { return sgn(im) == 0; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Rational norm_squared() const { return re * re + im * im; }
    ComplexQ conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
    friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexQ operator/(const ComplexQ& a, const Rational& d) { return {a.re / d, a.im / d}; }
    ComplexQ& operator+=(const ComplexQ& b) { return *this = *this + b; }
    ComplexQ& operator*=(const ComplexQ& b) { return *this = *this * b; }
    friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re == b.re && a.im == b.im; }
};

ComplexQ pow(const ComplexQ& base, int exponent);

// Square root of a nonnegative rational when it is itself rational.
std::optional<Rational> rational_sqrt(const Rational& q);

// |z| when it is rational (e.g. real or purely imaginary z, or 3/5 + 4/5 i).
std::optional<Rational> exact_modulus(const ComplexQ& z);

// Parses "3", "-2/7", "0.125", "1e-3" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const ComplexQ& z);

using ExactVector = std::vector<ComplexQ>;
using FloatVector = std::vector<std::complex<double>>;

FloatVector to_float(const ExactVector& v);
ExactVector real_vector(const std::vector<Rational>& coords);
// Coordinatewise modulus; nullopt if any modulus is irrational.
std::optional<std::vector<Rational>> exact_moduli(const ExactVector& v);

class Vector {
  public:
    Vector(ExactVector v) : data_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    Vector(FloatVector v) : data_(std::move(v)) {} // NOLINT(google-explicit-constructor)

    bool is_exact() const { return std::holds_alternative<ExactVector>(data_); }
    std::size_t size() const;
    const ExactVector& exact() const { return std::get<ExactVector>(data_); }
    const FloatVector& floats() const { return std::get<FloatVector>(data_); }
    FloatVector to_float() const;
    bool is_real() const;

  private:
    std::variant<ExactVector, FloatVector> data_;
};

// A measured quantity: always has a double value; `exact` is present when the
// value was computed in rational arithmetic.
struct Measured {
    double value = 0.0;
    std::optional<Rational> exact;

    static Measured of(const Rational& q) { return {q.get_d(), q}; }
    static Measured approx(double v) { return {v, std::nullopt}; }
    bool is_exact() const { return exact.has_value(); }
};

} // namespace reisner
