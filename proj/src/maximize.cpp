#include "reisner/error.hpp"
#include "reisner/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace reisner {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kFiniteDifference = 1e-7;
constexpr int kMaxExpansions = 20;
constexpr int kMaxHalvings = 40;

double safe_eval(const Objective& f, const FloatVector& x) {
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
}

} // namespace

Domain Domain::ball(const CLSpace& s) { return Domain(Kind::Ball, s); }

Domain Domain::nonnegative_face(const CLSpace& s) { return Domain(Kind::NonnegativeFace, s); }

Domain Domain::slice(const CLSpace& s, const FloatVector& functional) {
    if (static_cast<int>(functional.size()) != s.dim())
        fail(ErrorKind::DimensionMismatch, "slice functional has wrong length");
    if (dual_norm(s, functional) < 1.0 - kUnitTolerance)
        fail(ErrorKind::EmptyDomain, "slice <f, x> = 1 misses the unit ball (dual norm of f below 1)");
    VertexSet support;
    for (int j = 0; j < s.dim(); ++j) {
        const double m = std::abs(functional[j]);
        if (std::abs(m - 1.0) <= kUnitTolerance)
            support.insert(j);
        else if (m > kUnitTolerance)
            fail(ErrorKind::InvalidArgument, "slice functional must have coordinates of modulus 0 or 1");
        if (s.field() == Field::Real && functional[j].imag() != 0.0)
            fail(ErrorKind::InvalidArgument, "complex slice functional in a real space");
    }
    if (!is_clique(s.graph(), support))
        fail(ErrorKind::InvalidArgument, "slice functional must be supported on a clique");
    Domain d(Kind::Slice, s);
    d.functional_ = functional;
    d.clique_ = support;
    return d;
}

Domain Domain::clique_face(const CLSpace& s, VertexSet clique) {
    if (clique.empty() || !clique.subset_of(s.graph().vertices()) || !is_clique(s.graph(), clique))
        fail(ErrorKind::InvalidArgument, "clique face needs a nonempty clique of the graph");
    Domain d(Kind::CliqueFace, s);
    d.clique_ = clique;
    return d;
}

bool Domain::complex_params() const {
    return kind_ != Kind::NonnegativeFace && space_->field() == Field::Complex;
}

int Domain::parameter_count() const { return complex_params() ? 2 * space_->dim() : space_->dim(); }

FloatVector Domain::face_point(const std::vector<double>& params, bool pin_phases) const {
    const int n = space_->dim();
    const bool cx = complex_params();
    auto raw = [&](int j) -> std::complex<double> {
        return cx ? std::polar(1.0, params[2 * j + 1]) * params[2 * j] : std::complex<double>(params[j], 0.0);
    };
    FloatVector x(n);
    double total = 0.0;
    for (int j : clique_.members()) total += std::abs(raw(j));
    for (int j : clique_.members()) {
        std::complex<double> v = raw(j);
        double r = std::abs(v);
        if (total < 1e-300) {
            r = 1.0 / clique_.size();
            v = r;
        } else {
            r /= total;
            v /= total;
        }
        x[j] = pin_phases ? std::conj(functional_[j]) * r : v;
    }
    double t = 1.0;
    for (VertexSet block : space_->max_cliques()) {
        double inside = 0.0;
        double outside = 0.0;
        for (int j : block.members()) {
            if (clique_.contains(j))
                inside += std::abs(x[j]);
            else
                outside += std::abs(raw(j));
        }
        if (outside > 0.0) t = std::min(t, (1.0 - inside) / outside);
    }
    t = std::max(t, 0.0);
    for (int j = 0; j < n; ++j)
        if (!clique_.contains(j)) x[j] = t * raw(j);
    return x;
}

FloatVector Domain::to_point(const std::vector<double>& params) const {
    const int n = space_->dim();
    switch (kind_) {
    case Kind::Slice: return face_point(params, true);
    case Kind::CliqueFace: return face_point(params, false);
    case Kind::Ball:
    case Kind::NonnegativeFace: {
        FloatVector x(n);
        for (int j = 0; j < n; ++j) {
            if (kind_ == Kind::NonnegativeFace)
                x[j] = std::max(params[j], 0.0);
            else
                x[j] = complex_params() ? std::polar(1.0, params[2 * j + 1]) * params[2 * j]
                                        : std::complex<double>(params[j], 0.0);
        }
        const double nx = norm(*space_, x);
        if (nx > 1.0)
            for (auto& v : x) v /= nx;
        return x;
    }
    }
    return {};
}

std::vector<double> Domain::to_params(const FloatVector& x) const {
    std::vector<double> p;
    p.reserve(parameter_count());
    for (const auto& v : x) {
        if (complex_params()) {
            p.push_back(std::abs(v));
            p.push_back(std::arg(v));
        } else {
            p.push_back(v.real());
        }
    }
    return p;
}

MaximizeResult maximize(const Objective& objective, const Domain& domain, const MaximizeOptions& options) {
    if (options.restarts < 1) fail(ErrorKind::InvalidArgument, "restarts must be >= 1");
    if (options.iterations < 0) fail(ErrorKind::InvalidArgument, "iterations must be >= 0");
    const int np = domain.parameter_count();
    const bool cx = domain.complex_params();
    const bool radial = domain.kind() == Domain::Kind::Ball || domain.kind() == Domain::Kind::NonnegativeFace;

    MaximizeResult result;
    result.value = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < options.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

        std::vector<double> params(np);
        for (int i = 0; i < np; ++i) params[i] = (cx && i % 2 == 1) ? angle(rng) : unit(rng);
        FloatVector x = domain.to_point(params);
        if (domain.kind() == Domain::Kind::Ball || domain.kind() == Domain::Kind::NonnegativeFace) {
            // Start on the sphere.
            const double nx = norm(domain.space(), x);
            if (nx > 0.0)
                for (auto& v : x) v /= nx;
        }
        params = domain.to_params(x);
        double value = safe_eval(objective, x);

        double step = options.initial_step;
        std::vector<double> grad(np), trial(np), dir(np);
        // Candidate point for params t. With `sphere`, the point is rescaled
        // onto the unit sphere instead of only being pulled back into the ball.
        auto point = [&](const std::vector<double>& t, bool sphere) {
            FloatVector y = domain.to_point(t);
            if (sphere) {
                const double ny = norm(domain.space(), y);
                if (ny > 0.0)
                    for (auto& v : y) v /= ny;
            }
            return y;
        };
        // Moves params along d by len. If that improves, keeps doubling len
        // while the objective improves; otherwise halves len until it does and
        // then keeps halving while that improves further. Returns whether any
        // move improved.
        auto line_search = [&](const std::vector<double>& d, double len, bool sphere) {
            auto eval_at = [&](double l, FloatVector& cand) {
                for (int i = 0; i < np; ++i) trial[i] = params[i] + l * d[i];
                cand = point(trial, sphere);
                return safe_eval(objective, cand);
            };
            FloatVector cand;
            double v = eval_at(len, cand);
            const bool grow = v > value;
            int tries = 0;
            while (!grow && !(v > value) && ++tries < kMaxHalvings) {
                len *= 0.5;
                v = eval_at(len, cand);
            }
            if (!(v > value)) return false;
            for (int k = 0; k < kMaxExpansions && v > value; ++k) {
                value = v;
                x = cand;
                len = grow ? 2.0 * len : 0.5 * len;
                v = eval_at(len, cand);
            }
            return true;
        };
        for (int it = 0; it < options.iterations; ++it) {
            bool improved = false;
            // On the sphere, differentiate along the sphere: the inward half of
            // a central difference would otherwise dominate.
            const bool on_sphere = radial && norm(domain.space(), x) >= 1.0 - kUnitTolerance;
            double gnorm = 0.0;
            for (int i = 0; i < np; ++i) {
                trial = params;
                trial[i] += kFiniteDifference;
                const double up = safe_eval(objective, point(trial, on_sphere));
                trial[i] -= 2 * kFiniteDifference;
                const double down = safe_eval(objective, point(trial, on_sphere));
                grad[i] = std::isfinite(up) && std::isfinite(down) ? (up - down) / (2 * kFiniteDifference) : 0.0;
                gnorm += grad[i] * grad[i];
            }
            gnorm = std::sqrt(gnorm);
            if (gnorm > 0.0) {
                for (int i = 0; i < np; ++i) dir[i] = grad[i] / gnorm;
                improved = line_search(dir, step, on_sphere);
            }
            // Coordinate sweep when the gradient step fails: take the best of
            // all single-coordinate moves. A move that would carry a modulus or
            // real coordinate across zero stops at zero.
            if (!improved) {
                int best_i = -1;
                double best_v = value, best_len = 0.0;
                bool best_sphere = false;
                for (int i = 0; i < np; ++i) {
                    const bool modulus = !cx || i % 2 == 0;
                    for (double sign : {1.0, -1.0}) {
                        double len = sign * step;
                        if (modulus && params[i] != 0.0 && (params[i] > 0) != (sign > 0) &&
                            std::abs(params[i]) < step)
                            len = -params[i];
                        trial = params;
                        trial[i] += len;
                        for (bool sphere : {false, true}) {
                            if (sphere && !on_sphere) continue;
                            const double v = safe_eval(objective, point(trial, sphere));
                            if (v > best_v) {
                                best_v = v;
                                best_i = i;
                                best_len = len;
                                best_sphere = sphere;
                            }
                        }
                    }
                }
                if (best_i >= 0) {
                    std::fill(dir.begin(), dir.end(), 0.0);
                    dir[best_i] = best_len < 0 ? -1.0 : 1.0;
                    improved = line_search(dir, std::abs(best_len), best_sphere);
                }
            }
            if (!improved) {
                step *= options.step_decay;
                continue;
            }
            // Pattern move: extrapolate along the displacement just taken, which
            // follows ridges that single-coordinate moves zig-zag across.
            std::vector<double> previous = params;
            params = domain.to_params(x);
            double dnorm = 0.0;
            for (int i = 0; i < np; ++i) {
                dir[i] = params[i] - previous[i];
                dnorm += dir[i] * dir[i];
            }
            dnorm = std::sqrt(dnorm);
            if (dnorm > 0.0) {
                for (auto& d : dir) d /= dnorm;
                const bool sphere = radial && norm(domain.space(), x) >= 1.0 - kUnitTolerance;
                if (line_search(dir, dnorm, sphere)) params = domain.to_params(x);
            }
        }
        result.trace.push_back(value);
        result.restart_points.push_back(x);
        if (value > result.value) {
            result.value = value;
            result.argmax = x;
        }
    }
    return result;
}

} // namespace reisner
