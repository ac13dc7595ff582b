#pragma once

// Sparse homogeneous polynomials in n variables with exact complex-rational
// coefficients, stored as exponent vector -> coefficient. Also the two
// explicit constructions of strongly norm-attaining polynomials: the l1 block
// polynomial Q_{j_1..j_m} and its assembly over the maximal cliques of a
// CL-space.

#include "reisner/clspace.hpp"
#include "reisner/scalar.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace reisner {

using MultiIndex = std::vector<int>;

class HomPoly {
  public:
    // The zero polynomial of degree m in n variables (n >= 1, m >= 1).
    HomPoly(int n, int m);

    static HomPoly monomial(const MultiIndex& alpha, const ComplexQ& coeff);
    static HomPoly linear_form(const ExactVector& coeffs);

    int n() const { return n_; }
    int degree() const { return m_; }
    const std::map<MultiIndex, ComplexQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Coefficient of x^alpha (zero if absent).
    ComplexQ coeff(const MultiIndex& alpha) const;

    // Accumulates c into the coefficient of x^alpha, dropping it if it cancels.
    void add_term(const MultiIndex& alpha, const ComplexQ& c);

    ComplexQ eval(const ExactVector& x) const;
    std::complex<double> eval(const FloatVector& x) const;

    friend bool operator==(const HomPoly&, const HomPoly&) = default;

  private:
    int n_;
    int m_;
    std::map<MultiIndex, ComplexQ> terms_;
};

HomPoly add(const HomPoly& p, const HomPoly& q);
HomPoly subtract(const HomPoly& p, const HomPoly& q);
HomPoly scale(const HomPoly& p, const ComplexQ& c);
HomPoly multiply(const HomPoly& p, const HomPoly& q);
HomPoly power(const HomPoly& p, int e);

// Precomputed double-precision evaluator for hot loops.
class FloatPoly {
  public:
    explicit FloatPoly(const HomPoly& p);
    std::complex<double> operator()(const FloatVector& x) const;
    int degree() const { return m_; }

  private:
    struct Term {
        std::complex<double> coeff;
        std::vector<std::pair<int, int>> factors; // (variable, exponent)
    };
    int n_;
    int m_;
    std::vector<Term> terms_;
};

// Sum of coefficient moduli: an upper bound for the sup norm over the l1 ball
// (every monomial has sup 1 there). nullopt if some modulus is irrational.
std::optional<Rational> l1_coefficient_bound(const HomPoly& p);

struct CliqueHits {
    VertexSet clique;
    // hits[k] is the vertex where the clique meets the support of y_k.
    std::vector<int> hits;
    // (vertex, multiplicity) over the distinct hit vertices, ascending.
    std::vector<std::pair<int, int>> multiplicities;
};

struct AttainmentPrediction {
    ExactVector point;
    Rational predicted_norm;
    std::vector<CliqueHits> per_clique;
};

// prod_k x_{j_k} + (sum over the distinct j in {j_1..j_m} of x_j)^m.
HomPoly q_lemma(int dim, const std::vector<int>& indices);

// Maximizer (1/m) sum_k e_{j_k} of q_lemma on l1^dim and the value there,
// prod_j (m_j/m)^{m_j} + 1.
AttainmentPrediction lemma_prediction(int dim, const std::vector<int>& indices);

struct BuiltQ {
    HomPoly q;
    AttainmentPrediction prediction;
};

// Q = sum_J Q_J + (sum_J L_J)^m over the maximal cliques J of s, where Q_J is
// q_lemma on the vertices where J meets the supports of ys. Each y must be the
// 0/1 indicator of a maximal stable set; requires m = ys.size() >= 2.
BuiltQ build_q(const CLSpace& s, const std::vector<ExactVector>& ys);

// The exact value sum_J (1 + prod_j (m_j/m)^{m_j}) + |M(G)|^m.
Rational predicted_q_norm(const std::vector<CliqueHits>& per_clique, int m);

} // namespace reisner
