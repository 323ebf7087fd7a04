#ifndef LERCHKIT_SPECIAL_HPP
#define LERCHKIT_SPECIAL_HPP

// Complex-valued special functions in double precision: Lerch transcendent,
// Hurwitz zeta, polygamma, log-gamma, digamma, non-integer harmonic numbers,
// and Catalan's constant.  All functions are pure; poles and unsupported
// parameter regions raise structured errors instead of returning infinities.

#include <cmath>
#include <complex>
#include <string>

#include "lerchkit/errors.hpp"
#include "lerchkit/quad.hpp"

namespace lerchkit {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 6.28318530717958647692528676656;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008;

// Catalan's constant; the test suite re-verifies the digits against the
// alternating series sum with its remainder bound.
inline double catalan() { return 0.91596559417721901505460351493; }

namespace detail {

// B_2, B_4, ..., B_16
inline constexpr double kBernoulli2n[8] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

// B_0 .. B_16 (odd indices vanish except B_1)
inline constexpr double kBernoulli[17] = {
    1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0, -1.0 / 30.0,
    0.0, 5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0, 0.0, -3617.0 / 510.0};

// (2n)! for n = 1..8
inline constexpr double kEvenFactorial[8] = {
    2.0, 24.0, 720.0, 40320.0, 3628800.0, 479001600.0,
    87178291200.0, 20922789888000.0};

inline bool is_nonpositive_integer(const cplx& x, double tol = 1e-12) {
    if (x.imag() != 0.0) return false;
    const double r = std::round(x.real());
    return r <= 0.5 && std::abs(x.real() - r) <= tol;
}

inline cplx pow_int(cplx base, int n) {
    cplx r{1.0, 0.0};
    while (n-- > 0) r *= base;
    return r;
}

} // namespace detail

// Principal-branch log-gamma, Lanczos approximation (g = 607/128, 15 terms)
// with reflection for Re(x) < 1/2.
inline cplx log_gamma(cplx x) {
    if (detail::is_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(x.real()));
    if (x.real() < 0.5) {
        // log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x)
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    static constexpr double g = 4.7421875; // 607/128
    static constexpr double c[15] = {
        0.99999999999999709182,
        57.156235665862923517,     -59.597960355475491248,
        14.136097974741747174,     -0.49191381609762019978,
        0.33994649984811888699e-4, 0.46523628927048575665e-4,
        -0.98374475304879564677e-4, 0.15808870322491248884e-3,
        -0.21026444172410488319e-3, 0.21743961811521264320e-3,
        -0.16431810653676389022e-3, 0.84418223983852743293e-4,
        -0.26190838401581408670e-4, 0.36899182659531622704e-5};
    cplx series{c[0], 0.0};
    for (int k = 1; k < 15; ++k) series += c[k] / (x + static_cast<double>(k - 1));
    const cplx t = x + (g - 0.5);
    return 0.5 * std::log(kTwoPi) + (x - 0.5) * std::log(t) - t + std::log(series);
}

namespace detail {
inline cplx gamma_fn(const cplx& x) { return std::exp(log_gamma(x)); }
} // namespace detail

// Digamma psi(x): reflection into Re(x) >= 1/2, upward recurrence to
// Re(x) >= 10, then the Bernoulli asymptotic series.
inline cplx digamma(cplx x) {
    if (detail::is_nonpositive_integer(x))
        throw PoleError("digamma: pole at non-positive integer " + std::to_string(x.real()));
    cplx acc{0.0, 0.0};
    if (x.real() < 0.5) {
        acc -= kPi / std::tan(kPi * x);
        x = 1.0 - x;
    }
    while (x.real() < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const cplx inv2 = 1.0 / (x * x);
    cplx asym = std::log(x) - 0.5 / x;
    cplx p = inv2;
    for (int j = 0; j < 8; ++j) {
        asym -= detail::kBernoulli2n[j] / (2.0 * (j + 1)) * p;
        p *= inv2;
    }
    return acc + asym;
}

namespace detail {

// B_n(v) for n <= 16
inline cplx bernoulli_poly(int n, const cplx& v) {
    cplx acc{0.0, 0.0};
    double binom = 1.0;
    cplx vp{1.0, 0.0};
    // sum_j C(n,j) B_{n-j} v^j, accumulated from j = 0 upward
    for (int j = 0; j <= n; ++j) {
        acc += binom * kBernoulli[n - j] * vp;
        binom = binom * (n - j) / (j + 1.0);
        vp *= v;
    }
    return acc;
}

// Functional-equation series (valid Re(s) < 0, real v > 0):
//   zeta(s, q) = 2 (2 pi)^(s-1) Gamma(1-s) sum_{n>=1} n^(s-1) sin(2 pi n q + pi s/2)
// after reducing v into (0, 1] by the forward recurrence.  The oscillation
// keeps the tail at O(n^(Re s - 1) / sin(pi q)).
inline cplx hurwitz_zeta_functional(const cplx& s, double v);

} // namespace detail

// Hurwitz zeta.  Three routes, by parameter region:
//  - s a non-positive integer:  zeta(-n, v) = -B_{n+1}(v)/(n+1), exact;
//  - Re(s) < -2 with real v:    functional-equation series (the shifted
//    Euler-Maclaurin sum cancels catastrophically there);
//  - otherwise:                 Euler-Maclaurin with an N-term shift and 8
//    Bernoulli correction terms, N reduced for Re(s) < 0 to limit the
//    w^(1-s) cancellation scale.
inline cplx hurwitz_zeta(const cplx& s, const cplx& v) {
    if (std::abs(s - 1.0) < 1e-12)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    if (detail::is_nonpositive_integer(v))
        throw DomainError("hurwitz_zeta: v must not be a non-positive integer");

    if (detail::is_nonpositive_integer(s) && s.real() > -15.5) {
        const int n = static_cast<int>(-std::round(s.real()));
        return -detail::bernoulli_poly(n + 1, v) / static_cast<double>(n + 1);
    }
    if (s.real() < -2.0 && v.imag() == 0.0 && v.real() > 0.0)
        return detail::hurwitz_zeta_functional(s, v.real());

    int n_shift;
    if (s.real() >= 0.0)
        n_shift = std::max({10, static_cast<int>(std::ceil(std::abs(s))) + 10,
                            static_cast<int>(std::ceil(12.0 - v.real()))});
    else
        n_shift = std::max({8, static_cast<int>(std::ceil(std::abs(s.imag()))) + 8,
                            static_cast<int>(std::ceil(8.0 - v.real()))});

    cplx direct{0.0, 0.0};
    for (int n = 0; n < n_shift; ++n)
        direct += std::pow(v + static_cast<double>(n), -s);

    const cplx w = v + static_cast<double>(n_shift);
    cplx result = direct + std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);

    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^{-(s+2j-1)}
    cplx poch = s;
    cplx wpow = std::pow(w, -s - 1.0);
    const cplx winv2 = 1.0 / (w * w);
    for (int j = 1; j <= 8; ++j) {
        result += detail::kBernoulli2n[j - 1] / detail::kEvenFactorial[j - 1] * poch * wpow;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        wpow *= winv2;
    }
    return result;
}

namespace detail {

inline cplx hurwitz_zeta_functional(const cplx& s, double v) {
    double shift = std::floor(v);
    double q = v - shift;
    if (q == 0.0) {
        q = 1.0;
        shift -= 1.0;
    }
    cplx correction{0.0, 0.0};
    for (long j = 0; j < static_cast<long>(shift); ++j)
        correction += std::pow(cplx{q + static_cast<double>(j), 0.0}, -s);

    const double sigma = s.real();
    const double envelope = std::max(std::abs(std::sin(kPi * q)), 1e-8);
    const long n_max =
        static_cast<long>(std::ceil(std::pow(1e16 / envelope, 1.0 / (1.0 - sigma)))) + 8;

    cplx sum{0.0, 0.0};
    if (s.imag() == 0.0) {
        const double omega = kTwoPi * q;
        const double phase = kPi * sigma / 2.0;
        double acc = 0.0;
        for (long n = n_max; n >= 1; --n)
            acc += std::pow(static_cast<double>(n), sigma - 1.0) * std::sin(omega * n + phase);
        sum = cplx{acc, 0.0};
    } else {
        const cplx phase = kPi * s / 2.0;
        for (long n = n_max; n >= 1; --n) {
            const double dn = static_cast<double>(n);
            sum += std::pow(dn, s - 1.0) * std::sin(kTwoPi * q * dn + phase);
        }
    }
    const cplx value = 2.0 * std::pow(kTwoPi, s - 1.0) * std::exp(log_gamma(1.0 - s)) * sum;
    return value - correction;
}

} // namespace detail

// psi^(n).  Order 0 is the digamma; n >= 1 uses
// psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x).
inline cplx polygamma(int n, const cplx& x) {
    if (n < 0) throw DomainError("polygamma: order must be >= 0");
    if (n == 0) return digamma(x);
    if (detail::is_nonpositive_integer(x))
        throw PoleError("polygamma: pole at non-positive integer " + std::to_string(x.real()));
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign * std::tgamma(static_cast<double>(n) + 1.0) *
           hurwitz_zeta(cplx(static_cast<double>(n) + 1.0, 0.0), x);
}

// Harmonic number H_x = psi(x + 1) + gamma, extended to non-integer x.
inline cplx harmonic(const cplx& x) {
    if (detail::is_nonpositive_integer(x + 1.0))
        throw PoleError("harmonic: pole at negative integer " + std::to_string(x.real()));
    return digamma(x + 1.0) + kEulerGamma;
}

// ---------------------------------------------------------------------------
// Lerch transcendent Phi(z, s, v)
// ---------------------------------------------------------------------------

enum class LerchRegime { SeriesConvergent, IntegralContinuable, NegativeIntegerS, UnitZ };

// Which of the two (algebraically equal) integral representations to use.
// ExpMinusZ keeps the denominator e^t - z, bounded away from zero on the
// closed unit disk minus {1}; it is the default.
enum class LerchIntegralForm { OneMinusZExp, ExpMinusZ };

struct LerchArgs {
    cplx z, s, v;
    LerchRegime regime;

    static LerchArgs classify(const cplx& z, const cplx& s, const cplx& v) {
        if (z == cplx{0.0, 0.0}) return {z, s, v, LerchRegime::SeriesConvergent};
        if (z == cplx{1.0, 0.0}) return {z, s, v, LerchRegime::UnitZ};
        if (detail::is_nonpositive_integer(s)) return {z, s, v, LerchRegime::NegativeIntegerS};
        const double r = std::abs(z);
        // the series needs ~35/(1-|z|) terms, so hand near-unit z to the
        // integral representation whenever it applies
        if (r <= 0.9999) return {z, s, v, LerchRegime::SeriesConvergent};
        if (r <= 1.0 + 1e-12 && s.real() > 0.0 && v.real() > 0.0)
            return {z, s, v, LerchRegime::IntegralContinuable};
        if (r < 1.0) return {z, s, v, LerchRegime::SeriesConvergent};
        throw DomainError("lerch_phi: no evaluation regime for |z| = " + std::to_string(r) +
                          ", Re(s) = " + std::to_string(s.real()));
    }
};

namespace detail {

// Direct summation of sum_n (v+n)^(-s) z^n for |z| < 1.  Stops once two
// consecutive terms fall below tol * |partial sum|; capped at 1e6 terms.
inline cplx lerch_series(const cplx& z, const cplx& s, const cplx& v) {
    if (is_nonpositive_integer(v))
        throw PoleError("lerch_phi: series regime requires v not a non-positive integer");
    constexpr double tol = 5e-16;
    constexpr long cap = 1000000;
    cplx sum{0.0, 0.0}, zp{1.0, 0.0};
    double prev_mag = 0.0;
    for (long n = 0; n < cap; ++n) {
        const cplx term = zp * std::pow(v + static_cast<double>(n), -s);
        sum += term;
        const double mag = std::abs(term);
        if (n >= 1 && mag <= tol * std::abs(sum) && prev_mag <= tol * std::abs(sum))
            return sum;
        prev_mag = mag;
        zp *= z;
        if (z == cplx{0.0, 0.0}) return sum; // only the n = 0 term survives
    }
    throw ConvergenceError("lerch_phi: series did not converge within 1e6 terms");
}

// Integral representation
//   Phi(z,s,v) = 1/Gamma(s) * int_0^inf t^(s-1) e^(-(v-1)t) / (e^t - z) dt,
// valid for Re(v) > 0 with (|z| <= 1, z != 1, Re(s) > 0) or (z = 1, Re(s) > 1).
// The OneMinusZExp form carries the same integrand scaled by e^(-t).
inline cplx lerch_integral(const cplx& z, const cplx& s, const cplx& v,
                           LerchIntegralForm form = LerchIntegralForm::ExpMinusZ) {
    if (!(v.real() > 0.0))
        throw DomainError("lerch_phi: integral regime requires Re(v) > 0");
    const bool unit = (z == cplx{1.0, 0.0});
    if (unit ? !(s.real() > 1.0) : !(std::abs(z) <= 1.0 + 1e-12 && s.real() > 0.0))
        throw DomainError("lerch_phi: integral regime conditions violated");

    Integrand f;
    f.decay_rate = v.real();
    f.singularity_at_zero = SingularityAtZero::None;
    if (form == LerchIntegralForm::ExpMinusZ) {
        f.eval = [z, s, v](double t) -> cplx {
            if (t < 30.0)
                return std::pow(t, s - 1.0) * std::exp(-(v - 1.0) * t) / (std::exp(t) - z);
            // same expression, numerator and denominator scaled by e^(-t)
            return std::pow(t, s - 1.0) * std::exp(-v * t) / (1.0 - z * std::exp(-t));
        };
    } else {
        f.eval = [z, s, v](double t) -> cplx {
            return std::pow(t, s - 1.0) * std::exp(-v * t) / (1.0 - z * std::exp(-t));
        };
    }
    const QuadResult q = integrate_semi_infinite(f, 1e-12);
    return q.value / gamma_fn(s);
}

// Phi(z, -k, v) for integer k >= 0 and z != 1 is a rational function of z:
// expanding (v+n)^k binomially reduces the sum to the geometric moments
//   A_j(z) = sum_n n^j z^n = sum_i S2(j,i) i! z^i / (1-z)^(i+1),
// with S2 the Stirling numbers of the second kind.  Exact and pole-free for
// every z on the unit circle except z = 1.
inline cplx lerch_rational(const cplx& z, int k, const cplx& v) {
    if (z == cplx{1.0, 0.0})
        throw DomainError("lerch_phi: rational form requires z != 1");
    if (k < 0 || k > 64)
        throw DomainError("lerch_phi: rational form supports 0 <= k <= 64");

    // Stirling numbers of the second kind, S[j][i] for j,i <= k.
    std::vector<std::vector<double>> S(k + 1, std::vector<double>(k + 1, 0.0));
    S[0][0] = 1.0;
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= j; ++i)
            S[j][i] = i * S[j - 1][i] + S[j - 1][i - 1];

    const cplx om = 1.0 - z;
    std::vector<cplx> geom(k + 1); // A_j(z)
    for (int j = 0; j <= k; ++j) {
        cplx a{0.0, 0.0};
        double fact = 1.0;
        cplx zp{1.0, 0.0};
        cplx ompow = 1.0 / om;
        for (int i = 0; i <= j; ++i) {
            if (i > 0) {
                fact *= i;
                zp *= z;
                ompow /= om;
            }
            a += S[j][i] * fact * zp * ompow;
        }
        geom[j] = a;
    }
    cplx total{0.0, 0.0};
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        total += binom * pow_int(v, k - j) * geom[j];
        binom = binom * (k - j) / (j + 1.0);
    }
    return total;
}

} // namespace detail

// Evaluates Phi(z, s, v) in the regime recorded in args.
inline cplx lerch_phi(const LerchArgs& args) {
    switch (args.regime) {
        case LerchRegime::SeriesConvergent:
            if (!(std::abs(args.z) < 1.0))
                throw DomainError("lerch_phi: series regime requires |z| < 1");
            return detail::lerch_series(args.z, args.s, args.v);
        case LerchRegime::IntegralContinuable:
            return detail::lerch_integral(args.z, args.s, args.v);
        case LerchRegime::NegativeIntegerS: {
            if (!detail::is_nonpositive_integer(args.s))
                throw DomainError("lerch_phi: s is not a non-positive integer");
            if (args.z == cplx{1.0, 0.0}) return hurwitz_zeta(args.s, args.v);
            return detail::lerch_rational(args.z, static_cast<int>(-std::round(args.s.real())), args.v);
        }
        case LerchRegime::UnitZ:
            if (detail::is_nonpositive_integer(args.v))
                throw PoleError("lerch_phi: v must not be a non-positive integer at z = 1");
            return hurwitz_zeta(args.s, args.v);
    }
    throw DomainError("lerch_phi: unknown regime");
}

// Classifies and evaluates.
inline cplx lerch_phi(const cplx& z, const cplx& s, const cplx& v) {
    return lerch_phi(LerchArgs::classify(z, s, v));
}

} // namespace lerchkit

#endif // LERCHKIT_SPECIAL_HPP
