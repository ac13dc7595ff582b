#include "reisner/scalar.hpp"

#include "reisner/error.hpp"

#include <cctype>

namespace reisner {

ComplexQ pow(const ComplexQ& base, int exponent) {
    ComplexQ result(1);
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}

std::optional<Rational> exact_modulus(const ComplexQ& z) {
    if (z.is_real()) return abs(z.re);
    if (sgn(z.re) == 0) return abs(z.im);
    return rational_sqrt(z.norm_squared());
}

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) fail(ErrorKind::Parse, "empty rational literal");
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            mpz_class num(text.substr(0, slash), 10);
            mpz_class den(text.substr(slash + 1), 10);
            if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + raw + "'");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
        std::size_t pos = 0;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
        std::string digits;
        int scale = 0;
        bool seen_dot = false;
        bool any_digit = false;
        for (; pos < text.size(); ++pos) {
            const char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                any_digit = true;
                if (seen_dot) --scale;
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
            } else {
                break;
            }
        }
        if (!any_digit) fail(ErrorKind::Parse, "malformed rational '" + raw + "'");
        if (pos < text.size()) {
            if (text[pos] != 'e' && text[pos] != 'E') fail(ErrorKind::Parse, "malformed rational '" + raw + "'");
            const std::string exp_text = text.substr(pos + 1);
            std::size_t used = 0;
            const int e = std::stoi(exp_text, &used);
            if (used != exp_text.size()) fail(ErrorKind::Parse, "malformed exponent in '" + raw + "'");
            scale += e;
        }
        mpz_class num(digits, 10);
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
        Rational q = scale < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "malformed rational '" + raw + "'");
    } catch (const std::out_of_range&) {
        fail(ErrorKind::Parse, "exponent out of range in '" + raw + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const ComplexQ& z) {
    if (z.is_real()) return to_string(z.re);
    return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + to_string(Rational(abs(z.im))) + "i";
}

FloatVector to_float(const ExactVector& v) {
    FloatVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.to_complex());
    return out;
}

ExactVector real_vector(const std::vector<Rational>& coords) {
    return ExactVector(coords.begin(), coords.end());
}

std::optional<std::vector<Rational>> exact_moduli(const ExactVector& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& z : v) {
        auto m = exact_modulus(z);
        if (!m) return std::nullopt;
        out.push_back(*m);
    }
    return out;
}

std::size_t Vector::size() const {
    return std::visit([](const auto& v) { return v.size(); }, data_);
}

FloatVector Vector::to_float() const { return is_exact() ? reisner::to_float(exact()) : floats(); }

bool Vector::is_real() const {
    if (is_exact()) {
        for (const auto& z : exact())
            if (!z.is_real()) return false;
        return true;
    }
    for (const auto& z : floats())
        if (z.imag() != 0.0) return false;
    return true;
}

} // namespace reisner
