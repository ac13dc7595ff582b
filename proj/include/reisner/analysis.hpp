#pragma once

// Executable checks on CL-spaces: certified strongly norm-attaining points,
// numerical verification of norm attainment, complex extreme points and
// points of upper monotonicity, the index-one classification with its
// explicit witness, numerical-radius lower bounds, one perturbation step of
// the variational argument on l1^n, and a heuristic Frechet-smoothness probe.

#include "reisner/clspace.hpp"
#include "reisner/numerics.hpp"
#include "reisner/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reisner {

struct AttainingPoints {
    std::vector<ExactVector> points;
    bool truncated = false;
};

// All (1/m) sum_k y_k over multisets {y_1..y_m} of nonnegative extreme points,
// deduplicated, in multiset-generation order, capped at `cap` points.
AttainingPoints strongly_attaining_points(const CLSpace& s, int m, std::size_t cap);

struct AttainmentReport {
    std::string polynomial_id;
    ExactVector claimed_point;
    Rational claimed_norm;
    ComplexQ value_at_point; // exact
    bool precondition_ok = false;
    double best_value = 0.0;
    double max_excess = 0.0;
    // Largest orbit distance among restarts that came within tol_value of the
    // claimed norm; 0 when no restart did.
    double cluster_distance = 0.0;
    int near_max_restarts = 0;
    double tol_value = 0.0;
    double tol_point = 0.0;
    MaximizeOptions options;
    bool pass = false;
    std::string reason;
};

// Distance (in the space norm) from x to the orbit { c * p : |c| = 1 } after
// aligning c with <p, x>; real spaces use c = +-1.
double orbit_distance(const CLSpace& s, const FloatVector& p, const FloatVector& x);

AttainmentReport verify_attainment(const CLSpace& s, const HomPoly& q, const AttainmentPrediction& pred,
                                   double tol_value, double tol_point, const MaximizeOptions& options,
                                   std::string polynomial_id = "Q");

struct ExtremeTestResult {
    std::string label;
    std::vector<Rational> moduli;
    bool member = false;
    std::optional<ConvexCombination> combination;
};

// |a| in conv(nonnegative extreme points). Requires ||a|| = 1 exactly and
// rational coordinate moduli. complex_extreme_test needs a complex space,
// upper_monotonicity_test a real one.
ExtremeTestResult complex_extreme_test(const CLSpace& s, const ExactVector& a);
ExtremeTestResult upper_monotonicity_test(const CLSpace& s, const ExactVector& a);

struct IndexWitness {
    ExactVector x;
    ExactVector y;
    VertexSet clique;
    int flipped_vertex = -1; // clique meets supp(x) here; functional is -1 there
    int other_vertex = -1;   // clique meets supp(y) here
    SignedSupport functional;
    Rational value; // functional((x + y) / 2)
};

struct IndexClassification {
    enum class Verdict { IndexOneEllInfty, NotIndexOne };
    Verdict verdict = Verdict::NotIndexOne;
    std::optional<IndexWitness> witness;
};

const char* to_string(IndexClassification::Verdict v);

IndexClassification index_one_classify(const CLSpace& s, int k);

struct LeeViolation {
    std::size_t point_index = 0;
    ExactVector point;
    SignedSupport functional;
    Rational value; // |<functional, point>|
};

// Pairs (point, +-1 pattern on a maximal clique) with |<f, x>| != 1, taking
// per clique the maximizing and then the minimizing sign pattern. Points must
// be nonnegative real.
std::vector<LeeViolation> lee_condition_check(const CLSpace& s, const std::vector<ExactVector>& points, int k);

struct StatePair {
    FloatVector x;
    FloatVector f;
    std::complex<double> pairing;
};

struct NumericalRadiusBound {
    double value = 0.0;
    StatePair pair;
    VertexSet clique;
};

// Lower bound on v(P) for P = (P_0, .., P_{n-1}), each k-homogeneous.
NumericalRadiusBound numerical_radius_lower(const CLSpace& s, const std::vector<HomPoly>& components,
                                            const MaximizeOptions& options);

// Sup over the ball of ||P(x)||, estimated (lower bound).
double estimate_vector_poly_norm(const CLSpace& s, const std::vector<HomPoly>& components,
                                 const MaximizeOptions& options);
double estimate_poly_norm(const CLSpace& s, const HomPoly& p, const MaximizeOptions& options);

struct PerturbationReport {
    HomPoly g;
    ComplexQ direction{};        // (f-h)(w) / |(f-h)(w)|
    Rational fh_at_w{};          // |(f-h)(w)|
    Rational fg_at_w{};          // |(f-g)(w)| = |(f-h)(w)| + eps
    Rational g_minus_h_bound{};  // sum of coefficient moduli of g-h; equals eps
    Rational eps{};
    Rational exclusion_radius{}; // 1/n_ball
    double sampled_sup = 0.0;  // sup of |(f-g)(x)| away from the orbit of w
    double margin = 0.0;
    bool sharp = false;
    double fh_norm_estimate = 0.0;
    bool w_near_norming = false; // |(f-h)(w)| > ||f-h||_est - eps/(2 n_ball)
};

// g = h - eps * (e*_w)^k * (f-h)(w)/|(f-h)(w)| on l1^n with n = f.n().
PerturbationReport perturbation_step(const HomPoly& f, const HomPoly& h, int w_index, const Rational& eps, int k,
                                     int n_ball, const MaximizeOptions& options);

struct FrechetRow {
    double delta = 0.0;
    double max_quotient = 0.0;
    double mean_quotient = 0.0;
};

struct FrechetTable {
    double norm_estimate = 0.0;
    std::vector<FrechetRow> rows;
    // max_quotient is nonincreasing as delta decreases.
    bool decreasing_trend = false;
};

FrechetTable frechet_probe(const CLSpace& s, const HomPoly& p, const std::vector<double>& delta_ladder,
                           int direction_samples, const MaximizeOptions& options);

} // namespace reisner
