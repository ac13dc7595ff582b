#pragma once

// Finite-dimensional CL-spaces with an absolute norm, built from their
// Reisner graph: edge (i, j) exactly when ||e_i + e_j|| > 1. A graph qualifies
// when it is perfect and every maximal clique meets every maximal stable set in
// exactly one vertex.
//
// The norm is max over maximal cliques J of sum_{j in J} |x_j| (the dual ball is
// the absolute convex hull of the clique sign patterns); the dual norm is the
// same expression over maximal stable sets.

#include "reisner/error.hpp"
#include "reisner/graph.hpp"
#include "reisner/scalar.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace reisner {

enum class Field { Real, Complex };

const char* to_string(Field f);

struct IntersectionViolation {
    VertexSet clique;
    VertexSet stable_set;
    int intersection_size = 0;
};

struct CLReport {
    PerfectnessVerdict perfectness;
    bool intersection_ok = true;
    std::optional<IntersectionViolation> violating_pair;

    bool passes() const { return perfectness.perfect && intersection_ok; }
};

// Requires n <= 12 (perfectness limit).
CLReport reisner_check(const Graph& g);

class NotCLSpaceError : public Error {
  public:
    explicit NotCLSpaceError(CLReport report);
    const CLReport& report() const { return report_; }

  private:
    CLReport report_;
};

class CLSpace {
  public:
    const Graph& graph() const { return graph_; }
    Field field() const { return field_; }
    int dim() const { return graph_.n(); }
    const std::vector<VertexSet>& max_cliques() const { return max_cliques_; }
    const std::vector<VertexSet>& max_stables() const { return max_stables_; }

  private:
    CLSpace(Graph g, Field f);
    friend CLSpace space_from_graph(const Graph& g, Field field);

    Graph graph_;
    Field field_;
    std::vector<VertexSet> max_cliques_;
    std::vector<VertexSet> max_stables_;
};

// Throws NotCLSpaceError when reisner_check fails.
CLSpace space_from_graph(const Graph& g, Field field);

// Exact whenever every coordinate of an exact vector has rational modulus;
// otherwise computed in doubles (Measured::exact is empty). Real spaces reject
// vectors with nonzero imaginary parts.
Measured norm(const CLSpace& s, const Vector& x);
Measured dual_norm(const CLSpace& s, const Vector& f);
double norm(const CLSpace& s, const FloatVector& x);
double dual_norm(const CLSpace& s, const FloatVector& f);
Rational norm_of_moduli(const CLSpace& s, const std::vector<Rational>& moduli);

// Comparison tolerance for float oracles in graph_of_norm.
inline constexpr double kGraphOfNormTolerance = 1e-9;

Graph graph_of_norm(const std::function<Rational(const ExactVector&)>& norm_oracle, int n);
Graph graph_of_norm(const std::function<double(const FloatVector&)>& norm_oracle, int n);

// A 0/unimodular pattern: support plus a sign per support vertex (ascending
// vertex order). `orbit` marks a complex-mode representative standing for
// all coordinatewise unimodular rotations of the pattern.
struct SignedSupport {
    VertexSet support;
    std::vector<int> signs;
    bool orbit = false;

    ExactVector to_vector(int n) const;
    friend bool operator==(const SignedSupport&, const SignedSupport&) = default;
};

// All sign patterns on `support`, enumerated by binary counting where bit k
// set flips the k-th support vertex to -1 (so the all-plus pattern is first).
std::vector<SignedSupport> sign_patterns(VertexSet support);

// Real: every +-1 pattern on every maximal stable set. Complex: the 0/1
// indicators of maximal stable sets with orbit = true.
std::vector<SignedSupport> extreme_points(const CLSpace& s);
// Same over maximal cliques.
std::vector<SignedSupport> dual_extreme_points(const CLSpace& s);

// Nonnegative 0/1 indicators of the maximal stable sets.
std::vector<ExactVector> nonnegative_extreme_points(const CLSpace& s);

// Exact for exact vectors (|x_j| in {0, 1} is decided via |x_j|^2); float
// vectors use a 1e-12 tolerance.
bool is_extreme(const CLSpace& s, const Vector& x);

ExactVector indicator(VertexSet s, int n);
ComplexQ pairing(const ExactVector& f, const ExactVector& x);
std::complex<double> pairing(const FloatVector& f, const FloatVector& x);

} // namespace reisner
