#pragma once

// The two computational engines behind the analyses:
//  * exact convex-hull membership, decided by a phase-one simplex over GMP
//    rationals with Bland's anti-cycling rule;
//  * seeded multi-start projected ascent for sup-type quantities (polynomial
//    norms, numerical radii). Its value is always attained at a feasible
//    point, so it is a lower bound on the supremum and nothing more.

#include "reisner/clspace.hpp"
#include "reisner/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace reisner {

// ---------------------------------------------------------------------------
// Exact linear programming

// Feasibility of { x >= 0 : A x = b }. A is row-major with rows.size() ==
// b.size(). Returns a basic feasible solution or nullopt.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& rhs);

struct ConvexCombination {
    // Indices into the generator list, each with a positive weight.
    std::vector<std::size_t> generator_indices;
    std::vector<std::vector<Rational>> generators;
    std::vector<Rational> weights;
};

struct MembershipResult {
    bool member = false;
    std::optional<ConvexCombination> combination;
};

MembershipResult conv_membership(const std::vector<Rational>& point,
                                 const std::vector<std::vector<Rational>>& generators);
// Vector front end: rejects float or non-real input with Error{InvalidArgument}.
MembershipResult conv_membership(const Vector& point, const std::vector<Vector>& generators);

// ---------------------------------------------------------------------------
// Multi-start maximization

class Domain {
  public:
    enum class Kind {
        Ball,            // unit ball of the space
        NonnegativeFace, // unit ball intersected with the nonnegative orthant
        Slice,           // { x in ball : <f, x> = 1 } for a fixed functional f
        CliqueFace,      // { x in ball : sum_{j in clique} |x_j| = 1 }
    };

    static Domain ball(const CLSpace& s);
    static Domain nonnegative_face(const CLSpace& s);
    // f must be unimodular on a clique and zero elsewhere; throws
    // Error{EmptyDomain} when the slice is empty (dual norm of f below 1).
    static Domain slice(const CLSpace& s, const FloatVector& functional);
    static Domain clique_face(const CLSpace& s, VertexSet clique);

    Kind kind() const { return kind_; }
    const CLSpace& space() const { return *space_; }
    const FloatVector& functional() const { return functional_; }
    VertexSet clique() const { return clique_; }

    // Number of real parameters and the parameter -> point feasibility map.
    int parameter_count() const;
    FloatVector to_point(const std::vector<double>& params) const;
    std::vector<double> to_params(const FloatVector& x) const;
    bool complex_params() const;

  private:
    Domain(Kind k, const CLSpace& s) : kind_(k), space_(&s) {}
    FloatVector face_point(const std::vector<double>& params, bool pin_phases) const;

    Kind kind_;
    const CLSpace* space_;
    FloatVector functional_;
    VertexSet clique_;
};

struct MaximizeOptions {
    std::uint64_t seed = 0;
    int restarts = 64;
    int iterations = 200;
    double initial_step = 0.1;
    double step_decay = 0.9;
};

struct MaximizeResult {
    double value = 0.0;
    FloatVector argmax;
    // Best value and final point of each restart, in restart order.
    std::vector<double> trace;
    std::vector<FloatVector> restart_points;
};

using Objective = std::function<double(const FloatVector&)>;

// Deterministic in (seed, restarts): restart r draws its start from a
// generator seeded with (seed, r), so increasing `restarts` only appends to the
// trace. Each restart alternates a normalized finite-difference gradient step
// with a coordinate sweep; the step 0.1 * 0.9^k shrinks after every
// iteration that fails to improve (k counts failures).
MaximizeResult maximize(const Objective& objective, const Domain& domain, const MaximizeOptions& options);

} // namespace reisner
