#ifndef LERCHKIT_QUAD_HPP
#define LERCHKIT_QUAD_HPP

// Double-exponential quadrature on [0, inf) for integrands with exponential
// decay, plus Richardson extrapolation of one-sided limits.
//
// The transformation is the exponentially-decaying-integrand DE map
//     x(u) = exp(u - exp(-u)) / lambda,   u in (-inf, inf),
// under which the trapezoid rule converges super-algebraically.  Endpoint
// singularities of algebraic or logarithmic type at x = 0 are harmless
// because the nodes approach 0 double-exponentially fast and never hit it.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <vector>

#include "lerchkit/errors.hpp"

namespace lerchkit {

using cplx = std::complex<double>;

enum class SingularityAtZero { None, Logarithmic };

// One left-hand-side integrand over (0, inf).  decay_rate is a lower bound
// on the asymptotic exponential decay exponent: |eval(x)| <= K*exp(-decay_rate*x)
// for large x.  The engine checks the bound empirically before integrating.
struct Integrand {
    std::function<cplx(double)> eval;
    double decay_rate = 1.0;
    SingularityAtZero singularity_at_zero = SingularityAtZero::None;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0; // difference between the last two refinement levels
    long evaluations = 0;
};

enum class LimitDirection { FromAbove };

namespace detail {

// Level cap; LERCHKIT_MAX_LEVEL in the environment may lower it.
inline int quad_max_level() {
    static const int cap = [] {
        int level = 12;
        if (const char* env = std::getenv("LERCHKIT_MAX_LEVEL")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 3 && v < 12) level = static_cast<int>(v);
        }
        return level;
    }();
    return cap;
}

// Node budget: 8 * 2^12 intervals at the deepest level.
inline constexpr double kQuadULo = -4.5;
inline constexpr double kQuadUHi = 5.3;
inline constexpr int kQuadBaseIntervals = 8;

struct QuadState {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0}; // Kahan compensation, keeps summation order-exact
};

inline void kahan_add(QuadState& st, cplx term) {
    const cplx y = term - st.comp;
    const cplx t = st.sum + y;
    st.comp = (t - st.sum) - y;
    st.sum = t;
}

} // namespace detail

// Integrates f over [0, inf) by level-doubled DE trapezoid sums until two
// consecutive levels agree within tol (relative, with a 1e-14 absolute
// floor).  Throws ConvergenceError when the level budget is exhausted and
// SingularityError when f returns a non-finite value at a node.
inline QuadResult integrate_semi_infinite(const Integrand& f, double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-4))
        throw DomainError("integrate_semi_infinite: tol must lie in [1e-13, 1e-4]");
    if (!(f.decay_rate > 0.0) || !std::isfinite(f.decay_rate))
        throw DomainError("integrate_semi_infinite: decay_rate must be positive");

    const double lambda = f.decay_rate;
    long evaluations = 0;

    auto transformed = [&](double u) -> cplx {
        const double emu = std::exp(-u);
        const double x = std::exp(u - emu) / lambda;
        const cplx fx = f.eval(x);
        if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
            throw SingularityError("integrate_semi_infinite: non-finite integrand at x = " + std::to_string(x));
        ++evaluations;
        return fx * (x * (1.0 + emu));
    };

    // Empirical decay check at x = 20/rate and 40/rate.
    {
        const cplx f1 = f.eval(20.0 / lambda);
        const cplx f2 = f.eval(40.0 / lambda);
        evaluations += 2;
        const double a1 = std::abs(f1), a2 = std::abs(f2);
        if (a1 > 1e-280 && a2 > a1 * std::exp(-20.0) * 1e6)
            throw DomainError("integrate_semi_infinite: integrand decays slower than the declared decay_rate");
    }

    const double span = detail::kQuadUHi - detail::kQuadULo;
    double h = span / detail::kQuadBaseIntervals;

    // Level 0: full trapezoid sum (endpoint weights are irrelevant at the
    // truncation points, where the transformed integrand is ~1e-40).
    detail::QuadState state;
    for (int j = 0; j <= detail::kQuadBaseIntervals; ++j)
        detail::kahan_add(state, transformed(detail::kQuadULo + j * h));
    cplx previous = state.sum * h;

    const int max_level = detail::quad_max_level();
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // New nodes sit halfway between the old ones; old function values are
        // reused through the running Kahan state.
        const long n_new = detail::kQuadBaseIntervals * (1L << (level - 1));
        for (long j = 0; j < n_new; ++j)
            detail::kahan_add(state, transformed(detail::kQuadULo + (2 * j + 1) * h));
        const cplx current = state.sum * h;
        const double err = std::abs(current - previous);
        if (err <= std::max(tol * std::abs(current), 1e-14) && level >= 2)
            return QuadResult{current, err, evaluations};
        previous = current;
    }
    throw ConvergenceError("integrate_semi_infinite: no level agreement within budget (max level " +
                           std::to_string(max_level) + ")");
}

// Richardson (Neville polynomial, evaluated at h = 0) extrapolation of
// g(h0 / 2^i), i = 0..6, for a limit taken from above.  The last two
// extrapolants must agree within tol.
inline cplx limit_extrapolate(const std::function<cplx(double)>& g,
                              LimitDirection /*direction*/, double tol,
                              double h0 = 0.5) {
    if (!(tol >= 1e-10))
        throw DomainError("limit_extrapolate: tol must be >= 1e-10");
    constexpr int n = 7;
    double h[n];
    cplx tableau[n];
    cplx prev_diag{0.0, 0.0};
    double consistency = 0.0;
    for (int i = 0; i < n; ++i) {
        h[i] = h0 / static_cast<double>(1 << i);
        tableau[i] = g(h[i]);
        for (int j = i - 1; j >= 0; --j)
            tableau[j] = tableau[j + 1] + (tableau[j + 1] - tableau[j]) * (h[i] / (h[j] - h[i]));
        if (i > 0) consistency = std::abs(tableau[0] - prev_diag);
        prev_diag = tableau[0];
    }
    if (!(consistency <= std::max(tol, tol * std::abs(prev_diag))))
        throw ConvergenceError("limit_extrapolate: successive extrapolants disagree beyond tol");
    return prev_diag;
}

} // namespace lerchkit

#endif // LERCHKIT_QUAD_HPP
