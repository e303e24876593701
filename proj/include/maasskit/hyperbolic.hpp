#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maasskit/errors.hpp"
#include "maasskit/rational.hpp"
#include "maasskit/specfun.hpp"

namespace maasskit {

// Real 2x2 matrix with positive determinant acting on the upper half-plane.
struct Moebius {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Moebius() = default;
    Moebius(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        if (!(det() > 0.0)) throw ParameterError("Moebius matrix needs positive determinant");
    }

    friend Moebius operator*(const Moebius& m, const Moebius& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    Moebius inverse() const {
        double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

inline Moebius translation(double r) { return {1, r, 0, 1}; }
// (0, 1; -N, 0), acting as z -> -1/(Nz)
inline Moebius fricke(double n) { return {0, 1, -n, 0}; }

inline cplx act(const Moebius& m, cplx z) {
    if (!(z.imag() > 0.0)) throw DomainError("point must lie in the upper half-plane");
    return (m.a * z + m.b) / (m.c * z + m.d);
}

// Exact-arithmetic version of the paper's matrix; kept rational so the
// determinant and trace identities can be asserted without rounding.
struct RatMoebius {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }
    Moebius approx() const { return {a.value(), b.value(), c.value(), d.value()}; }
};

// M(q,s,r) = (1, 2r/q; -2N rtilde/s, -3 + 4/(qs)), defined when qs = 1 + r rtilde N.
inline RatMoebius build_m_exact(long q, long s, const Rat& r, const Rat& rtilde, long n) {
    if (Rat(q) * Rat(s) != Rat(1) + r * rtilde * Rat(n))
        throw RelationError("build_m requires qs = 1 + r*rtilde*N");
    return {Rat(1), Rat(2) * r / Rat(q), -Rat(2 * n) * rtilde / Rat(s),
            Rat(-3) + Rat(4) / (Rat(q) * Rat(s))};
}

inline Moebius build_m(long q, long s, const Rat& r, const Rat& rtilde, long n) {
    return build_m_exact(q, s, r, rtilde, n).approx();
}

// Fixed point in the upper half-plane of an elliptic matrix: the root of
// c z^2 + (d-a) z - b with positive imaginary part.
inline cplx fixed_point(const Moebius& m) {
    if (std::abs(m.c) < 1e-300) throw DomainError("matrix fixes infinity, not elliptic");
    cplx disc = cplx((m.d - m.a) * (m.d - m.a) + 4.0 * m.b * m.c, 0.0);
    cplx root = std::sqrt(disc);
    cplx z = ((m.a - m.d) + root) / (2.0 * m.c);
    if (z.imag() <= 0.0) z = ((m.a - m.d) - root) / (2.0 * m.c);
    if (z.imag() <= 0.0) throw DomainError("no fixed point in the upper half-plane");
    return z;
}

struct EllipticCertificate {
    Moebius matrix;
    double trace = 0.0;
    cplx fixed_pt;
    double rotation_angle = 0.0;  // in (0, pi), cos(angle) = tr/(2 sqrt det)
    bool infinite_order = false;
    std::string order_rationale;
};

struct ClassifyResult {
    std::string type;  // "elliptic", "parabolic", "hyperbolic"
    std::optional<EllipticCertificate> certificate;
};

namespace detail {

// Continued-fraction test: is x (here theta/pi) close to a rational with
// denominator up to max_den? Numerically undecidable in principle; this is
// the desk-scale surrogate for "not a root of unity".
// x counts as rational when its continued fraction terminates (fractional
// part below 1e-10) before the convergent denominator exceeds max_den. A
// closeness criterion would be wrong here: generic irrationals have
// convergents within 1/q^2 of x, which beats any fixed tolerance for large q.
inline bool near_rational(double x, long long max_den) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // convergent recurrence seeds
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > max_den) return false;
        double frac = v - fl;
        if (frac < 1e-10) return true;
        v = 1.0 / frac;
    }
    return false;
}

}  // namespace detail

inline ClassifyResult classify(const Moebius& m) {
    double t = std::abs(m.trace()) / std::sqrt(m.det());
    if (t >= 2.0 - 1e-12) {
        return {t < 2.0 + 1e-12 ? "parabolic" : "hyperbolic", std::nullopt};
    }
    EllipticCertificate cert;
    cert.matrix = m;
    cert.trace = m.trace();
    cert.fixed_pt = fixed_point(m);
    cert.rotation_angle = std::acos(m.trace() / (2.0 * std::sqrt(m.det())));
    bool rational = detail::near_rational(cert.rotation_angle / kPi, 1000000);
    cert.infinite_order = !rational;
    cert.order_rationale = rational
        ? "rotation angle / pi admits a rational approximation with denominator <= 1e6"
        : "numerically irrational: no rational approximation of theta/pi with denominator <= 1e6";
    return {"elliptic", cert};
}

// Cayley transform K(z) = (z - z0)/(z - conj z0): upper half-plane to unit
// disk, z0 to 0.
struct CayleyMap {
    cplx z0;
    explicit CayleyMap(cplx center) : z0(center) {
        if (!(z0.imag() > 0.0)) throw DomainError("Cayley center must be in the upper half-plane");
    }
    cplx operator()(cplx z) const { return (z - z0) / (z - std::conj(z0)); }
    cplx inverse(cplx w) const { return (z0 - std::conj(z0) * w) / (1.0 - w); }
};

inline CayleyMap cayley(cplx z0) { return CayleyMap(z0); }

inline double hyp_distance(cplx z1, cplx z2) {
    if (!(z1.imag() > 0.0 && z2.imag() > 0.0))
        throw DomainError("hyperbolic distance needs upper half-plane points");
    double t = 1.0 + std::norm(z1 - z2) / (2.0 * z1.imag() * z2.imag());
    return std::acosh(t);
}

// Largest angular gap (radians) left on the Cayley circle by the orbit
// z, Mz, M^2 z, ... around the elliptic fixed point. An infinite-order
// rotation equidistributes, so the gap shrinks toward 2 pi / iterates.
inline double orbit_angle_gap(const EllipticCertificate& cert, int iterates, cplx seed) {
    if (iterates < 2) throw ParameterError("need at least 2 iterates");
    CayleyMap k(cert.fixed_pt);
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(iterates));
    cplx z = seed;
    for (int i = 0; i < iterates; ++i) {
        angles.push_back(std::arg(k(z)));
        z = act(cert.matrix, z);
    }
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * kPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        gap = std::max(gap, angles[i] - angles[i - 1]);
    return gap;
}

struct TwoCirclesVerdict {
    double defect1 = 0.0;   // sup |h(M1 z) - h(z)| over the grid
    double defect2 = 0.0;
    double spread = 0.0;    // sup |h - mean| over the grid
    double eps = 0.0;
    double spread_allowance = 0.0;  // C_grid * eps
    std::string verdict;
};

// Default grid: n x n polar samples of the hyperbolic disk of radius
// hyp_radius around the geodesic midpoint of the two fixed points.
inline std::vector<cplx> two_circles_grid(cplx z1, cplx z2, int n = 40, double hyp_radius = 2.0) {
    CayleyMap k1(z1);
    cplx w2 = k1(z2);
    double d = hyp_distance(z1, z2);
    double rmid = std::tanh(d / 4.0);  // hyperbolic midpoint in disk coordinates
    cplx mid = k1.inverse(std::abs(w2) > 0 ? rmid * w2 / std::abs(w2) : cplx(0.0));
    CayleyMap km(mid);
    double rho_max = std::tanh(hyp_radius / 2.0);
    std::vector<cplx> grid;
    grid.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        double rho = rho_max * (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            double phi = 2.0 * kPi * j / n;
            grid.push_back(km.inverse(rho * cplx(std::cos(phi), std::sin(phi))));
        }
    }
    return grid;
}

// Finite surrogate for the two-circles constancy theorem: if h is invariant
// under both rotations (defects < eps) its spread on the grid must be below
// the declared Lipschitz allowance C_grid * eps.
inline TwoCirclesVerdict two_circles_test(const std::function<cplx(cplx)>& h,
                                          const EllipticCertificate& m1,
                                          const EllipticCertificate& m2,
                                          const std::vector<cplx>& grid, double eps,
                                          double c_grid = 1e3) {
    if (std::abs(m1.fixed_pt - m2.fixed_pt) <= 1e-6)
        throw DegenerateFixedPoints("elliptic fixed points coincide");
    TwoCirclesVerdict v;
    v.eps = eps;
    v.spread_allowance = c_grid * eps;
    cplx mean = 0.0;
    std::vector<cplx> vals;
    vals.reserve(grid.size());
    for (cplx z : grid) {
        cplx hz = h(z);
        vals.push_back(hz);
        mean += hz;
        v.defect1 = std::max(v.defect1, std::abs(h(act(m1.matrix, z)) - hz));
        v.defect2 = std::max(v.defect2, std::abs(h(act(m2.matrix, z)) - hz));
    }
    mean /= static_cast<double>(grid.size());
    for (cplx hz : vals) v.spread = std::max(v.spread, std::abs(hz - mean));

    if (v.defect1 >= eps && v.defect2 >= eps) v.verdict = "not invariant";
    else if (v.defect1 >= eps) v.verdict = "not invariant under m1";
    else if (v.defect2 >= eps) v.verdict = "not invariant under m2";
    else if (v.spread < v.spread_allowance) v.verdict = "consistent with constant";
    else v.verdict = "invariance defects below eps but spread exceeds allowance";
    return v;
}

}  // namespace maasskit
