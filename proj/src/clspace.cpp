#include "reisner/clspace.hpp"

#include "reisner/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace reisner {

const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

CLReport reisner_check(const Graph& g) {
    CLReport report;
    report.perfectness = is_perfect(g);
    const auto cliques = maximal_cliques(g);
    const auto stables = maximal_stable_sets(g);
    for (VertexSet j : cliques) {
        for (VertexSet s : stables) {
            const int k = (j & s).size();
            if (k != 1) {
                report.intersection_ok = false;
                report.violating_pair = IntersectionViolation{j, s, k};
                return report;
            }
        }
    }
    return report;
}

namespace {

std::string describe_failure(const CLReport& r) {
    if (!r.perfectness.perfect) return "graph is not perfect";
    return "a maximal clique and a maximal stable set meet in " +
           std::to_string(r.violating_pair ? r.violating_pair->intersection_size : -1) + " vertices";
}

void check_dim(const CLSpace& s, std::size_t size) {
    if (static_cast<int>(size) != s.dim())
        fail(ErrorKind::DimensionMismatch,
             "vector of length " + std::to_string(size) + " in a space of dimension " + std::to_string(s.dim()));
}

void check_field(const CLSpace& s, const Vector& x) {
    if (s.field() == Field::Real && !x.is_real())
        fail(ErrorKind::InvalidArgument, "complex coordinates in a real space");
}

Rational max_block_sum(const std::vector<VertexSet>& blocks, const std::vector<Rational>& moduli) {
    Rational best = 0;
    for (VertexSet b : blocks) {
        Rational sum = 0;
        for (int j : b.members()) sum += moduli[j];
        if (sum > best) best = sum;
    }
    return best;
}

double max_block_sum(const std::vector<VertexSet>& blocks, const FloatVector& x) {
    double best = 0.0;
    for (VertexSet b : blocks) {
        double sum = 0.0;
        for (int j : b.members()) sum += std::abs(x[j]);
        best = std::max(best, sum);
    }
    return best;
}

Measured block_norm(const CLSpace& s, const std::vector<VertexSet>& blocks, const Vector& x) {
    check_dim(s, x.size());
    check_field(s, x);
    if (x.is_exact()) {
        if (auto moduli = exact_moduli(x.exact())) return Measured::of(max_block_sum(blocks, *moduli));
    }
    return Measured::approx(max_block_sum(blocks, x.to_float()));
}

} // namespace

NotCLSpaceError::NotCLSpaceError(CLReport report)
    : Error(ErrorKind::NotCLSpace, describe_failure(report)), report_(std::move(report)) {}

CLSpace::CLSpace(Graph g, Field f)
    : graph_(std::move(g)), field_(f), max_cliques_(maximal_cliques(graph_)),
      max_stables_(maximal_stable_sets(graph_)) {}

CLSpace space_from_graph(const Graph& g, Field field) {
    CLReport report = reisner_check(g);
    if (!report.passes()) throw NotCLSpaceError(std::move(report));
    return CLSpace(g, field);
}

Measured norm(const CLSpace& s, const Vector& x) { return block_norm(s, s.max_cliques(), x); }

Measured dual_norm(const CLSpace& s, const Vector& f) { return block_norm(s, s.max_stables(), f); }

double norm(const CLSpace& s, const FloatVector& x) {
    check_dim(s, x.size());
    return max_block_sum(s.max_cliques(), x);
}

double dual_norm(const CLSpace& s, const FloatVector& f) {
    check_dim(s, f.size());
    return max_block_sum(s.max_stables(), f);
}

Rational norm_of_moduli(const CLSpace& s, const std::vector<Rational>& moduli) {
    check_dim(s, moduli.size());
    return max_block_sum(s.max_cliques(), moduli);
}

Graph graph_of_norm(const std::function<Rational(const ExactVector&)>& norm_oracle, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ExactVector v(n, ComplexQ(0));
            v[i] = ComplexQ(1);
            v[j] = ComplexQ(1);
            if (norm_oracle(v) > 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph graph_of_norm(const std::function<double(const FloatVector&)>& norm_oracle, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            FloatVector v(n, 0.0);
            v[i] = 1.0;
            v[j] = 1.0;
            if (norm_oracle(v) > 1.0 + kGraphOfNormTolerance) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

ExactVector SignedSupport::to_vector(int n) const {
    ExactVector v(n, ComplexQ(0));
    const auto members = support.members();
    for (std::size_t k = 0; k < members.size(); ++k) v[members[k]] = ComplexQ(signs[k]);
    return v;
}

std::vector<SignedSupport> sign_patterns(VertexSet support) {
    const int k = support.size();
    std::vector<SignedSupport> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t flips = 0; flips < (1u << k); ++flips) {
        SignedSupport p{support, std::vector<int>(k, 1), false};
        for (int b = 0; b < k; ++b)
            if ((flips >> b) & 1u) p.signs[b] = -1;
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<SignedSupport> patterns_over(const std::vector<VertexSet>& blocks, Field field) {
    std::vector<SignedSupport> out;
    for (VertexSet b : blocks) {
        if (field == Field::Complex) {
            out.push_back(SignedSupport{b, std::vector<int>(b.size(), 1), true});
        } else {
            auto pats = sign_patterns(b);
            out.insert(out.end(), pats.begin(), pats.end());
        }
    }
    return out;
}

} // namespace

std::vector<SignedSupport> extreme_points(const CLSpace& s) { return patterns_over(s.max_stables(), s.field()); }

std::vector<SignedSupport> dual_extreme_points(const CLSpace& s) {
    return patterns_over(s.max_cliques(), s.field());
}

ExactVector indicator(VertexSet s, int n) {
    ExactVector v(n, ComplexQ(0));
    for (int j : s.members()) v[j] = ComplexQ(1);
    return v;
}

std::vector<ExactVector> nonnegative_extreme_points(const CLSpace& s) {
    std::vector<ExactVector> out;
    for (VertexSet st : s.max_stables()) out.push_back(indicator(st, s.dim()));
    return out;
}

bool is_extreme(const CLSpace& s, const Vector& x) {
    check_dim(s, x.size());
    check_field(s, x);
    VertexSet support;
    if (x.is_exact()) {
        const auto& v = x.exact();
        for (int j = 0; j < s.dim(); ++j) {
            const Rational m2 = v[j].norm_squared();
            if (m2 == 1)
                support.insert(j);
            else if (sgn(m2) != 0)
                return false;
        }
    } else {
        const auto& v = x.floats();
        for (int j = 0; j < s.dim(); ++j) {
            const double m = std::abs(v[j]);
            if (std::abs(m - 1.0) <= 1e-12)
                support.insert(j);
            else if (m > 1e-12)
                return false;
        }
    }
    const auto& st = s.max_stables();
    return std::binary_search(st.begin(), st.end(), support);
}

ComplexQ pairing(const ExactVector& f, const ExactVector& x) {
    if (f.size() != x.size()) fail(ErrorKind::DimensionMismatch, "pairing of vectors with different lengths");
    ComplexQ sum(0);
    for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * x[j];
    return sum;
}

std::complex<double> pairing(const FloatVector& f, const FloatVector& x) {
    if (f.size() != x.size()) fail(ErrorKind::DimensionMismatch, "pairing of vectors with different lengths");
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * x[j];
    return sum;
}

} // namespace reisner
