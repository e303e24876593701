#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "maasskit/errors.hpp"
#include "maasskit/precision.hpp"

namespace maasskit {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Spectral parameter nu with eigenvalue 1/4 - nu^2 > 0: either real with
// |nu| < 1/2 or purely imaginary.
struct SpectralParam {
    enum class Mode { real, imaginary };

    cplx nu;
    Mode mode;

    explicit SpectralParam(cplx v) : nu(v) {
        const double re = v.real(), im = v.imag();
        if (std::abs(im) < 1e-14) {
            if (!(std::abs(re) < 0.5))
                throw ParameterError("real spectral parameter must satisfy |nu| < 1/2");
            nu = cplx(re, 0.0);
            mode = Mode::real;
        } else if (std::abs(re) < 1e-14) {
            nu = cplx(0.0, im);
            mode = Mode::imaginary;
        } else {
            throw ParameterError("spectral parameter must be real in (-1/2,1/2) or purely imaginary");
        }
    }

    bool is_zero() const { return std::abs(nu) == 0.0; }
};

namespace detail {

// Godfrey's Lanczos coefficients, g = 10.900511. Relative error ~1e-15 on the
// right half plane.
inline constexpr double kLanczosG = 10.900511;
inline constexpr double kLanczos[] = {
    2.48574089138753565546e-5,  1.05142378581721974210e+0, -3.45687097222016235469e+0,
    4.51227709466894823700e+0,  -2.98285225323576655721e+0, 1.05639711577126713077e+0,
    -1.95428773191645869583e-1, 1.70970543404441224307e-2,  -5.71926117404305781283e-4,
    4.63399473359905636708e-6,  -2.71994908488607703910e-9,
};

inline cplx lanczos_sum(cplx z) {
    // z is shifted so the series is evaluated at z, z+1, ...
    cplx s = kLanczos[0];
    for (int k = 1; k <= 10; ++k) s += kLanczos[k] / (z + static_cast<double>(k - 1));
    return s;
}

inline bool near_nonpositive_integer(cplx z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

inline bool near_integer(cplx z, double tol = 1e-10) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

}  // namespace detail

// Complex gamma function (Lanczos; reflection for Re z < 1/2).
inline cplx cgamma(cplx z) {
    if (detail::near_nonpositive_integer(z))
        throw PoleError(std::round(z.real()), "gamma pole");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
    }
    const double e = std::numbers::e;
    cplx base = z - 0.5 + detail::kLanczosG;
    return 2.0 * std::sqrt(e / kPi) * std::pow(base / e, z - 0.5) * detail::lanczos_sum(z);
}

// 1/Gamma, zero at the poles.
inline cplx rgamma(cplx z) {
    if (detail::near_nonpositive_integer(z)) return 0.0;
    return 1.0 / cgamma(z);
}

inline cplx clgamma(cplx z) {
    if (detail::near_nonpositive_integer(z))
        throw PoleError(std::round(z.real()), "gamma pole");
    if (z.real() < 0.5)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - clgamma(1.0 - z);
    const double e = std::numbers::e;
    cplx base = z - 0.5 + detail::kLanczosG;
    return std::log(2.0 * std::sqrt(e / kPi)) + (z - 0.5) * (std::log(base) - 1.0) +
           std::log(detail::lanczos_sum(z));
}

// Archimedean zeta factor pi^{-s/2} Gamma(s/2).
inline cplx gamma_r(cplx s) {
    if (detail::near_nonpositive_integer(0.5 * s))
        throw PoleError(2.0 * std::round(0.5 * s.real()), "gamma_r pole");
    return std::pow(kPi, -0.5 * s) * cgamma(0.5 * s);
}

// Rising factorial x(x+1)...(x+n-1).
inline cplx pochhammer(cplx x, std::size_t n) {
    cplx p = 1.0;
    for (std::size_t k = 0; k < n; ++k) p *= x + static_cast<double>(k);
    return p;
}

namespace detail {

// K_nu(u) by trapezoidal quadrature of the symmetrised integral
//   K_nu(u) = int_0^inf exp(-u cosh x) cosh(nu x) dx
// with the doubly-exponential substitution x = sinh(theta).
inline cplx bessel_k_quadrature(cplx nu, double u, const Precision& prec) {
    // Cut off where exp(-u cosh x) has fully underflowed.
    const double arg_limit = 745.0 + 40.0;
    double xmax = std::acosh(std::max(3.0, arg_limit / u));
    double theta_max = std::asinh(xmax) + 0.5;

    auto integrand = [&](double theta) -> cplx {
        double x = std::sinh(theta);
        double e = -u * std::cosh(x);
        if (e < -745.0) return 0.0;
        return std::exp(e) * std::cosh(nu * x) * std::cosh(theta);
    };

    std::size_t n = 32;
    cplx prev = 0.0;
    for (std::size_t level = 0;; ++level) {
        double h = theta_max / static_cast<double>(n);
        cplx sum = 0.5 * integrand(0.0);
        for (std::size_t k = 1; k <= n; ++k) sum += integrand(h * static_cast<double>(k));
        cplx val = h * sum;
        if (level > 1 && std::abs(val - prev) <= prec.rel_tol * std::abs(val) + 1e-300)
            return val;
        if (level + 1 >= prec.quad_levels)
            throw QuadratureError("K-Bessel quadrature did not converge");
        prev = val;
        n *= 2;
    }
}

// Large-argument expansion, truncated at its smallest term.
inline cplx bessel_k_asymptotic(cplx nu, double u) {
    cplx nu2 = 4.0 * nu * nu;
    cplx term = 1.0, sum = 1.0;
    double best = 1.0;
    for (int k = 1; k <= 60; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= (nu2 - odd * odd) / (8.0 * k * u);
        if (std::abs(term) >= best) break;
        best = std::abs(term);
        sum += term;
        if (best < 1e-17) break;
    }
    return std::sqrt(kPi / (2.0 * u)) * std::exp(-u) * sum;
}

}  // namespace detail

// Modified Bessel function of complex order and positive real argument.
inline cplx bessel_k(cplx nu, double u, const Precision& prec = Precision{}) {
    if (!(u > 0.0)) throw DomainError("bessel_k requires u > 0");
    if (u > 30.0) return detail::bessel_k_asymptotic(nu, u);
    return detail::bessel_k_quadrature(nu, u, prec);
}

namespace detail {

// K via the I-series, K_nu = pi/2 (I_{-nu} - I_nu)/sin(pi nu). Loses about
// e^u * eps_machine in absolute terms, fine for u up to ~10 where K itself has
// decayed to 5e-5.
inline cplx bessel_k_iseries(cplx nu, double u) {
    auto bessel_i = [&](cplx order) -> cplx {
        cplx term = std::pow(0.5 * u, order) * rgamma(order + 1.0);
        cplx sum = term;
        double q = 0.25 * u * u;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * (order + static_cast<double>(k)));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    };
    return 0.5 * kPi * (bessel_i(-nu) - bessel_i(nu)) / std::sin(kPi * nu);
}

}  // namespace detail

// Fast evaluator for the long Whittaker sums: series for small u, asymptotic
// beyond, quadrature fallback when the order is too close to an integer for
// the reflection in the series path.
inline cplx bessel_k_fast(cplx nu, double u) {
    if (!(u > 0.0)) throw DomainError("bessel_k requires u > 0");
    if (u > 10.0) return detail::bessel_k_asymptotic(nu, u);
    if (std::abs(std::sin(kPi * nu)) < 0.1)
        return detail::bessel_k_quadrature(nu, u, quadrature_precision());
    return detail::bessel_k_iseries(nu, u);
}

inline cplx whittaker_w_fast(cplx nu, double u) {
    double au = std::abs(u);
    return 4.0 * std::sqrt(au) * bessel_k_fast(nu, 2.0 * kPi * au);
}

// Whittaker factor W_nu(u) = 4 sqrt|u| K_nu(2 pi |u|), even in u.
inline cplx whittaker_w(cplx nu, double u, const Precision& prec = Precision{}) {
    if (u == 0.0) throw DomainError("whittaker_w undefined at u = 0");
    double au = std::abs(u);
    return 4.0 * std::sqrt(au) * bessel_k(nu, 2.0 * kPi * au, prec);
}

namespace detail {

inline bool is_nonpositive_int(cplx z) { return near_nonpositive_integer(z, 1e-12); }

inline cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
    cplx term = 1.0, sum = 1.0;
    for (std::size_t n = 0; n < prec.max_terms; ++n) {
        double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= prec.rel_tol * 0.01 * std::abs(sum) + 1e-300) return sum;
    }
    throw ConvergenceError("2F1 power series did not converge");
}

inline cplx hyp2f1_terminating(cplx a, cplx b, cplx c, cplx z) {
    // a or b a nonpositive integer: polynomial, valid everywhere.
    long n = 0;
    if (is_nonpositive_int(a)) n = static_cast<long>(-std::round(a.real()));
    if (is_nonpositive_int(b)) {
        long m = static_cast<long>(-std::round(b.real()));
        if (!is_nonpositive_int(a) || m < n) n = m;
    }
    cplx term = 1.0, sum = 1.0;
    for (long k = 0; k < n; ++k) {
        double dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
        sum += term;
    }
    return sum;
}

// |z| > 1 continuation, valid for a - b not an integer and z off (1, inf).
inline cplx hyp2f1_continuation(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
    auto branch_sum = [&](cplx p, cplx q) -> cplx {
        // prefactor Gamma(q-p)Gamma(c) / (Gamma(q)Gamma(c-p)) * (-z)^{-p},
        // series sum_k (p)_k (p-c+1)_k / (k! (p-q+1)_k) z^{-k}
        cplx pref = cgamma(q - p) * cgamma(c) * rgamma(q) * rgamma(c - p);
        if (pref == 0.0) return 0.0;
        pref *= std::pow(-z, -p);
        cplx term = 1.0, sum = 1.0;
        cplx zi = 1.0 / z;
        for (std::size_t k = 0; k < prec.max_terms; ++k) {
            double dk = static_cast<double>(k);
            term *= (p + dk) * (p - c + 1.0 + dk) / ((dk + 1.0) * (p - q + 1.0 + dk)) * zi;
            sum += term;
            if (std::abs(term) <= prec.rel_tol * 0.01 * std::abs(sum) + 1e-300) break;
        }
        return pref * sum;
    };
    return branch_sum(a, b) + branch_sum(b, a);
}

}  // namespace detail

// Gauss hypergeometric function, dispatching by region: power series inside
// the disk, the z -> z/(z-1) transform near the left half, and the inverse
// power series continuation outside the disk. The regions overlap and agree.
inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const Precision& prec = Precision{}) {
    if (detail::is_nonpositive_int(c))
        throw ParameterError("2F1 undefined for c a nonpositive integer");
    if (z == 0.0) return 1.0;
    if (detail::is_nonpositive_int(a) || detail::is_nonpositive_int(b))
        return detail::hyp2f1_terminating(a, b, c, z);

    const double az = std::abs(z);
    if (az <= 0.75) return detail::hyp2f1_series(a, b, c, z, prec);

    const bool on_cut = std::abs(z.imag()) < 1e-14 && z.real() > 1.0;
    cplx zp = z / (z - 1.0);
    if (!on_cut && std::abs(zp) <= 0.75)
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, zp, prec);

    if (az > 1.0) {
        if (on_cut) throw DomainError("2F1 on the branch cut (1, infinity)");
        if (detail::near_integer(a - b))
            throw ContinuationError("|z|>1 continuation needs a-b not an integer");
        return detail::hyp2f1_continuation(a, b, c, z, prec);
    }
    if (az < 1.0) return detail::hyp2f1_series(a, b, c, z, prec);
    if (std::abs(zp) < 1.0)
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, zp, prec);
    throw DomainError("2F1 argument on the unit circle at z = 1");
}

namespace detail {

// B_2, B_4, ..., B_24.
inline constexpr double kBernoulli[] = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,  7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
};

}  // namespace detail

// Hurwitz zeta by Euler-Maclaurin, 12 Bernoulli terms, summation start pushed
// past 2|s| so the asymptotic tail is accurate for |Im s| up to ~50.
inline cplx hurwitz_zeta(cplx s, double a, const Precision& prec = Precision{}) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta requires a in (0,1]");
    if (std::abs(s - 1.0) < 1e-12) throw PoleError(1.0, "hurwitz_zeta pole at s = 1");
    (void)prec;

    std::size_t m = static_cast<std::size_t>(std::max(24.0, 2.0 * std::abs(s) + 8.0));
    cplx sum = 0.0;
    for (std::size_t n = 0; n < m; ++n)
        sum += std::pow(static_cast<double>(n) + a, -s);
    const double x = static_cast<double>(m) + a;
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);

    cplx xe = std::pow(x, -s - 1.0);
    cplx poch = s;  // (s)_{2k-1}
    double fact = 2.0;  // (2k)!
    for (int k = 1; k <= 12; ++k) {
        sum += detail::kBernoulli[k - 1] / fact * poch * xe;
        // advance to (s)_{2k+1} and (2k+2)!
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        xe /= x * x;
    }
    return sum;
}

inline cplx riemann_zeta(cplx s, const Precision& prec = Precision{}) {
    return hurwitz_zeta(s, 1.0, prec);
}

// Digamma for positive real argument: recurrence up to x >= 12, then the
// asymptotic series log x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
inline double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma requires x > 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv2 = 1.0 / (x * x);
    double term = inv2;
    double series = 0.0;
    for (int k = 1; k <= 8; ++k) {
        series += detail::kBernoulli[k - 1] / (2.0 * k) * term;
        term *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace maasskit
