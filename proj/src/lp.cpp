#include "reisner/error.hpp"
#include "reisner/numerics.hpp"

#include <string>

namespace reisner {

namespace {

// Dense tableau for min sum(artificials) s.t. [A | I] (x, a) = b, (x, a) >= 0.
class PhaseOneTableau {
  public:
    PhaseOneTableau(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs)
        : m_(rows.size()), n_(rows.empty() ? 0 : rows.front().size()), cols_(n_ + m_),
          t_(m_, std::vector<Rational>(cols_ + 1)), basis_(m_), cost_(cols_ + 1) {
        for (std::size_t r = 0; r < m_; ++r) {
            if (rows[r].size() != n_) fail(ErrorKind::DimensionMismatch, "ragged constraint matrix");
            const bool flip = sgn(rhs[r]) < 0;
            for (std::size_t c = 0; c < n_; ++c) t_[r][c] = flip ? Rational(-rows[r][c]) : rows[r][c];
            t_[r][n_ + r] = 1;
            t_[r][cols_] = flip ? Rational(-rhs[r]) : rhs[r];
            basis_[r] = n_ + r;
        }
        // Reduced costs of the phase-one objective: artificial columns are
        // basic (cost 0); structural column c has -sum_r t[r][c].
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t r = 0; r < m_; ++r) cost_[c] -= t_[r][c];
        for (std::size_t r = 0; r < m_; ++r) cost_[cols_] -= t_[r][cols_];
    }

    void solve() {
        while (true) {
            // Bland: lowest-index column with negative reduced cost.
            std::size_t enter = cols_;
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(cost_[c]) < 0) {
                    enter = c;
                    break;
                }
            if (enter == cols_) return;
            // Ratio test; ties go to the lowest basic variable index.
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t r = 0; r < m_; ++r) {
                if (sgn(t_[r][enter]) <= 0) continue;
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            // Phase one is bounded below by 0, so a pivot row always exists.
            if (leave == m_) return;
            pivot(leave, enter);
        }
    }

    // Objective value = sum of artificial variables at the current basis.
    Rational infeasibility() const { return -cost_[cols_]; }

    std::vector<Rational> structural_solution() const {
        std::vector<Rational> x(n_);
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) x[basis_[r]] = t_[r][cols_];
        return x;
    }

  private:
    void pivot(std::size_t row, std::size_t col) {
        const Rational p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || sgn(t_[r][col]) == 0) continue;
            const Rational f = t_[r][col];
            for (std::size_t c = 0; c <= cols_; ++c) t_[r][c] -= f * t_[row][c];
        }
        if (sgn(cost_[col]) != 0) {
            const Rational f = cost_[col];
            for (std::size_t c = 0; c <= cols_; ++c) cost_[c] -= f * t_[row][c];
        }
        basis_[row] = col;
    }

    std::size_t m_, n_, cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
};

} // namespace

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& rhs) {
    if (rows.size() != rhs.size()) fail(ErrorKind::DimensionMismatch, "constraint rows and right-hand side differ");
    PhaseOneTableau tableau(rows, rhs);
    tableau.solve();
    if (sgn(tableau.infeasibility()) != 0) return std::nullopt;
    return tableau.structural_solution();
}

MembershipResult conv_membership(const std::vector<Rational>& point,
                                 const std::vector<std::vector<Rational>>& generators) {
    if (generators.empty()) fail(ErrorKind::InvalidArgument, "convex hull of an empty generator set");
    const std::size_t n = point.size();
    for (const auto& g : generators)
        if (g.size() != n)
            fail(ErrorKind::DimensionMismatch, "generator of length " + std::to_string(g.size()) +
                                                   " for a point of length " + std::to_string(n));
    // Rows: one per coordinate, plus sum(lambda) = 1.
    std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(generators.size()));
    std::vector<Rational> rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < generators.size(); ++k) rows[i][k] = generators[k][i];
        rhs[i] = point[i];
    }
    for (std::size_t k = 0; k < generators.size(); ++k) rows[n][k] = 1;
    rhs[n] = 1;

    auto lambda = feasible_point(rows, rhs);
    if (!lambda) return {};
    ConvexCombination cc;
    for (std::size_t k = 0; k < lambda->size(); ++k) {
        if (sgn((*lambda)[k]) == 0) continue;
        cc.generator_indices.push_back(k);
        cc.generators.push_back(generators[k]);
        cc.weights.push_back((*lambda)[k]);
    }
    return {true, std::move(cc)};
}

MembershipResult conv_membership(const Vector& point, const std::vector<Vector>& generators) {
    auto real_coords = [](const Vector& v, const char* what) {
        if (!v.is_exact()) fail(ErrorKind::InvalidArgument, std::string(what) + " is not exact rational");
        if (!v.is_real()) fail(ErrorKind::InvalidArgument, std::string(what) + " has imaginary parts");
        std::vector<Rational> out;
        for (const auto& z : v.exact()) out.push_back(z.re);
        return out;
    };
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : generators) gens.push_back(real_coords(g, "generator"));
    return conv_membership(real_coords(point, "point"), gens);
}

} // namespace reisner
