#include "reisner/poly.hpp"

#include "reisner/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace reisner {

HomPoly::HomPoly(int n, int m) : n_(n), m_(m) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "polynomial needs at least one variable");
    if (m < 1) fail(ErrorKind::InvalidArgument, "homogeneous degree must be >= 1");
}

HomPoly HomPoly::monomial(const MultiIndex& alpha, const ComplexQ& coeff) {
    const int m = std::accumulate(alpha.begin(), alpha.end(), 0);
    HomPoly p(static_cast<int>(alpha.size()), m);
    p.add_term(alpha, coeff);
    return p;
}

HomPoly HomPoly::linear_form(const ExactVector& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    HomPoly p(n, 1);
    for (int j = 0; j < n; ++j) {
        MultiIndex alpha(n, 0);
        alpha[j] = 1;
        p.add_term(alpha, coeffs[j]);
    }
    return p;
}

ComplexQ HomPoly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? ComplexQ(0) : it->second;
}

void HomPoly::add_term(const MultiIndex& alpha, const ComplexQ& c) {
    if (static_cast<int>(alpha.size()) != n_)
        fail(ErrorKind::DimensionMismatch, "multi-index length " + std::to_string(alpha.size()) +
                                               " in a polynomial of " + std::to_string(n_) + " variables");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) fail(ErrorKind::InvalidArgument, "negative exponent in multi-index");
        total += a;
    }
    if (total != m_)
        fail(ErrorKind::InvalidArgument,
             "multi-index of degree " + std::to_string(total) + " in a degree-" + std::to_string(m_) + " polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ComplexQ HomPoly::eval(const ExactVector& x) const {
    if (static_cast<int>(x.size()) != n_) fail(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
    ComplexQ sum(0);
    for (const auto& [alpha, c] : terms_) {
        ComplexQ term = c;
        for (int j = 0; j < n_; ++j)
            if (alpha[j] > 0) term *= pow(x[j], alpha[j]);
        sum += term;
    }
    return sum;
}

std::complex<double> HomPoly::eval(const FloatVector& x) const { return FloatPoly(*this)(x); }

namespace {

void require_same_shape(const HomPoly& p, const HomPoly& q) {
    if (p.n() != q.n()) fail(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
    if (p.degree() != q.degree())
        fail(ErrorKind::InvalidArgument, "degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                             std::to_string(q.degree()));
}

} // namespace

HomPoly add(const HomPoly& p, const HomPoly& q) {
    require_same_shape(p, q);
    HomPoly out = p;
    for (const auto& [alpha, c] : q.terms()) out.add_term(alpha, c);
    return out;
}

HomPoly subtract(const HomPoly& p, const HomPoly& q) { return add(p, scale(q, ComplexQ(-1))); }

HomPoly scale(const HomPoly& p, const ComplexQ& c) {
    HomPoly out(p.n(), p.degree());
    for (const auto& [alpha, a] : p.terms()) out.add_term(alpha, a * c);
    return out;
}

HomPoly multiply(const HomPoly& p, const HomPoly& q) {
    if (p.n() != q.n()) fail(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
    HomPoly out(p.n(), p.degree() + q.degree());
    MultiIndex alpha(p.n());
    for (const auto& [a, ca] : p.terms()) {
        for (const auto& [b, cb] : q.terms()) {
            for (int j = 0; j < p.n(); ++j) alpha[j] = a[j] + b[j];
            out.add_term(alpha, ca * cb);
        }
    }
    return out;
}

HomPoly power(const HomPoly& p, int e) {
    if (e < 1) fail(ErrorKind::InvalidArgument, "power exponent must be >= 1");
    HomPoly out = p;
    for (int k = 1; k < e; ++k) out = multiply(out, p);
    return out;
}

FloatPoly::FloatPoly(const HomPoly& p) : n_(p.n()), m_(p.degree()) {
    terms_.reserve(p.terms().size());
    for (const auto& [alpha, c] : p.terms()) {
        Term t{c.to_complex(), {}};
        for (int j = 0; j < n_; ++j)
            if (alpha[j] > 0) t.factors.emplace_back(j, alpha[j]);
        terms_.push_back(std::move(t));
    }
}

std::complex<double> FloatPoly::operator()(const FloatVector& x) const {
    if (static_cast<int>(x.size()) != n_) fail(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
    std::complex<double> sum = 0.0;
    for (const auto& t : terms_) {
        std::complex<double> term = t.coeff;
        for (auto [j, e] : t.factors)
            for (int k = 0; k < e; ++k) term *= x[j];
        sum += term;
    }
    return sum;
}

std::optional<Rational> l1_coefficient_bound(const HomPoly& p) {
    Rational total = 0;
    for (const auto& [alpha, c] : p.terms()) {
        auto m = exact_modulus(c);
        if (!m) return std::nullopt;
        total += *m;
    }
    return total;
}

namespace {

std::vector<std::pair<int, int>> multiplicities_of(const std::vector<int>& indices) {
    std::map<int, int> counts;
    for (int j : indices) ++counts[j];
    return {counts.begin(), counts.end()};
}

// prod_j (m_j / m)^{m_j}
Rational product_peak(const std::vector<std::pair<int, int>>& mult, int m) {
    Rational out = 1;
    for (auto [j, mj] : mult) {
        const Rational base = make_rational(mj, m);
        for (int k = 0; k < mj; ++k) out *= base;
    }
    return out;
}

} // namespace

HomPoly q_lemma(int dim, const std::vector<int>& indices) {
    const int m = static_cast<int>(indices.size());
    if (m < 1) fail(ErrorKind::InvalidArgument, "q_lemma needs at least one index");
    for (int j : indices)
        if (j < 0 || j >= dim)
            fail(ErrorKind::InvalidArgument,
                 "index " + std::to_string(j) + " out of range for dimension " + std::to_string(dim));
    MultiIndex prod(dim, 0);
    for (int j : indices) ++prod[j];
    HomPoly out = HomPoly::monomial(prod, ComplexQ(1));
    ExactVector sum_coeffs(dim, ComplexQ(0));
    for (auto [j, mj] : multiplicities_of(indices)) sum_coeffs[j] = ComplexQ(1);
    return add(out, power(HomPoly::linear_form(sum_coeffs), m));
}

AttainmentPrediction lemma_prediction(int dim, const std::vector<int>& indices) {
    (void)q_lemma(dim, indices); // validates
    const int m = static_cast<int>(indices.size());
    AttainmentPrediction pred;
    pred.point.assign(dim, ComplexQ(0));
    const auto mult = multiplicities_of(indices);
    for (auto [j, mj] : mult) pred.point[j] = ComplexQ(make_rational(mj, m));
    pred.predicted_norm = product_peak(mult, m) + 1;
    pred.per_clique.push_back(CliqueHits{VertexSet::full(dim), indices, mult});
    return pred;
}

Rational predicted_q_norm(const std::vector<CliqueHits>& per_clique, int m) {
    Rational total = 0;
    for (const auto& h : per_clique) total += 1 + product_peak(h.multiplicities, m);
    Rational cliques(static_cast<long>(per_clique.size()));
    Rational lin = 1;
    for (int k = 0; k < m; ++k) lin *= cliques;
    return total + lin;
}

BuiltQ build_q(const CLSpace& s, const std::vector<ExactVector>& ys) {
    const int m = static_cast<int>(ys.size());
    const int n = s.dim();
    if (m < 2) fail(ErrorKind::InvalidArgument, "build_q requires degree m >= 2 (got " + std::to_string(m) + ")");
    std::vector<VertexSet> supports;
    for (const auto& y : ys) {
        if (static_cast<int>(y.size()) != n)
            fail(ErrorKind::DimensionMismatch, "extreme point of length " + std::to_string(y.size()) +
                                                   " in a space of dimension " + std::to_string(n));
        VertexSet supp;
        for (int j = 0; j < n; ++j) {
            if (y[j] == ComplexQ(1))
                supp.insert(j);
            else if (!y[j].is_zero())
                fail(ErrorKind::InvalidArgument, "y is not a nonnegative extreme point (coordinate " +
                                                     to_string(y[j]) + ")");
        }
        if (!std::binary_search(s.max_stables().begin(), s.max_stables().end(), supp))
            fail(ErrorKind::InvalidArgument, "support of y is not a maximal stable set");
        supports.push_back(supp);
    }

    BuiltQ out{HomPoly(n, m), {}};
    ExactVector lsum(n, ComplexQ(0));
    for (VertexSet clique : s.max_cliques()) {
        CliqueHits hits{clique, {}, {}};
        for (VertexSet supp : supports) {
            const VertexSet meet = clique & supp;
            // Guaranteed by the unique-intersection property of a Reisner graph.
            if (meet.size() != 1) fail(ErrorKind::NotCLSpace, "clique/stable-set intersection is not a singleton");
            hits.hits.push_back(meet.front());
        }
        hits.multiplicities = multiplicities_of(hits.hits);
        out.q = add(out.q, q_lemma(n, hits.hits));
        for (auto [j, mj] : hits.multiplicities) lsum[j] += ComplexQ(1);
        out.prediction.per_clique.push_back(std::move(hits));
    }
    out.q = add(out.q, power(HomPoly::linear_form(lsum), m));

    out.prediction.point.assign(n, ComplexQ(0));
    for (const auto& y : ys)
        for (int j = 0; j < n; ++j) out.prediction.point[j] += y[j];
    for (auto& z : out.prediction.point) z = z / Rational(m);
    out.prediction.predicted_norm = predicted_q_norm(out.prediction.per_clique, m);
    return out;
}

} // namespace reisner
