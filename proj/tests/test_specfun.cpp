#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "maasskit/specfun.hpp"

using namespace maasskit;

namespace {
double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("spectral parameter admits real window and imaginary axis") {
    CHECK(SpectralParam(cplx(0.25, 0.0)).mode == SpectralParam::Mode::real);
    CHECK(SpectralParam(cplx(0.0, 0.4)).mode == SpectralParam::Mode::imaginary);
    CHECK(SpectralParam(cplx(0.0, 0.0)).is_zero());
    CHECK_THROWS_AS(SpectralParam(cplx(0.5, 0.0)), ParameterError);
    CHECK_THROWS_AS(SpectralParam(cplx(0.3, 0.3)), ParameterError);
}

TEST_CASE("gamma matches reference values") {
    // reference values computed with mpmath at 22 digits
    CHECK(rel_err(cgamma(cplx(0.75, 0.0)), cplx(1.2254167024651776, 0.0)) < 1e-13);
    CHECK(rel_err(cgamma(cplx(4.0, 0.0)), cplx(6.0, 0.0)) < 1e-13);
    CHECK(rel_err(cgamma(cplx(0.5, 0.0)), cplx(1.7724538509055160, 0.0)) < 1e-13);
    CHECK(rel_err(cgamma(cplx(2.5, 3.0)), cplx(-0.21811897108112290, 0.072034763407175034)) < 1e-13);
    CHECK(rel_err(cgamma(cplx(-1.5, 0.5)), cplx(0.93791666278788505, 0.34920566814780487)) < 1e-12);
    CHECK(rel_err(cgamma(cplx(0.1, 5.0)), cplx(-0.00038086069138120569, 0.00034111701244926533)) < 1e-12);
}

TEST_CASE("gamma poles raise, reciprocal gamma vanishes there") {
    CHECK_THROWS_AS(cgamma(cplx(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(cgamma(cplx(-3.0, 0.0)), PoleError);
    CHECK(rgamma(cplx(-2.0, 0.0)) == cplx(0.0));
    CHECK_THROWS_AS(gamma_r(cplx(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(gamma_r(cplx(-2.0, 0.0)), PoleError);
}

TEST_CASE("log-gamma is consistent with gamma") {
    cplx z(10.0, 10.0);
    CHECK(rel_err(clgamma(z), cplx(8.2361317504487178, 23.948703413782037)) < 1e-12);
    CHECK(rel_err(std::exp(clgamma(cplx(3.3, -1.1))), cgamma(cplx(3.3, -1.1))) < 1e-12);
}

TEST_CASE("pochhammer is the rising factorial") {
    CHECK(pochhammer(cplx(3.0), 0) == cplx(1.0));
    CHECK(pochhammer(cplx(3.0), 4) == cplx(3.0 * 4.0 * 5.0 * 6.0));
    CHECK(rel_err(pochhammer(cplx(0.5, 0.5), 3),
                  cplx(0.5, 0.5) * cplx(1.5, 0.5) * cplx(2.5, 0.5)) < 1e-15);
}

TEST_CASE("K-Bessel matches reference values across regimes") {
    CHECK(rel_err(bessel_k(cplx(0.25), 1.0), cplx(0.43073977444858552)) < 1e-12);
    CHECK(rel_err(bessel_k(cplx(0.0, 0.7), 2.0), cplx(0.10284426561935261)) < 1e-12);
    CHECK(rel_err(bessel_k(cplx(0.3), 5.0), cplx(0.0037216693288734255)) < 1e-12);
    CHECK(rel_err(bessel_k(cplx(0.0, 1.2), 0.5), cplx(0.35292714096159410)) < 1e-12);
    CHECK(rel_err(bessel_k(cplx(0.0), 3.0), cplx(0.034739504386279248)) < 1e-12);
    // asymptotic branch
    CHECK(rel_err(bessel_k(cplx(0.25), 2.0 * kPi * 10.0), cplx(8.1432918604323104e-29)) < 1e-12);
    CHECK_THROWS_AS(bessel_k(cplx(0.25), 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(cplx(0.25), -1.0), DomainError);
}

TEST_CASE("half-integer order K has an elementary closed form") {
    // K_{1/2}(u) = sqrt(pi/(2u)) e^{-u}
    for (int i = 0; i < 50; ++i) {
        double u = 0.1 + (20.0 - 0.1) * i / 49.0;
        double closed = std::sqrt(kPi / (2.0 * u)) * std::exp(-u);
        CHECK(rel_err(bessel_k(cplx(0.5), u), cplx(closed)) < 1e-10);
    }
}

TEST_CASE("K is even in the order") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> du(0.2, 12.0), dn(-0.45, 0.45);
    for (int i = 0; i < 100; ++i) {
        double u = du(rng);
        cplx nu = (i % 2 == 0) ? cplx(dn(rng), 0.0) : cplx(0.0, 2.0 * dn(rng));
        CHECK(rel_err(bessel_k(nu, u), bessel_k(-nu, u)) < 1e-10);
    }
}

TEST_CASE("fast K agrees with the quadrature evaluator") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> du(0.05, 25.0), dn(-0.49, 0.49);
    for (int i = 0; i < 200; ++i) {
        double u = du(rng);
        cplx nu = (i % 2 == 0) ? cplx(dn(rng), 0.0) : cplx(0.0, dn(rng));
        CHECK(std::abs(bessel_k_fast(nu, u) - bessel_k(nu, u)) <
              1e-11 * (1.0 + std::abs(bessel_k(nu, u))));
    }
    // near-integer order path (reflection unusable)
    CHECK(rel_err(bessel_k_fast(cplx(0.0), 3.0), cplx(0.034739504386279248)) < 1e-10);
    CHECK(rel_err(bessel_k_fast(cplx(0.02), 1.0), bessel_k(cplx(0.02), 1.0)) < 1e-10);
}

TEST_CASE("Whittaker factor is even in u and scales K") {
    cplx nu(0.25, 0.0);
    CHECK(rel_err(whittaker_w(nu, 0.5), 4.0 * std::sqrt(0.5) * bessel_k(nu, kPi)) < 1e-14);
    CHECK(whittaker_w(nu, -0.5) == whittaker_w(nu, 0.5));
    CHECK_THROWS_AS(whittaker_w(nu, 0.0), DomainError);
    CHECK(rel_err(whittaker_w_fast(nu, 0.5), whittaker_w(nu, 0.5)) < 1e-11);
}

TEST_CASE("2F1 matches reference values") {
    CHECK(rel_err(hyp2f1(cplx(0.5), cplx(0.75), cplx(1.25), cplx(-0.25)),
                  cplx(0.93431894681470260)) < 1e-12);
    CHECK(rel_err(hyp2f1(cplx(0.3), cplx(0.7), cplx(1.1), cplx(-4.0)),
                  cplx(0.71173015832768531)) < 1e-11);
    CHECK(rel_err(hyp2f1(cplx(0.6, 0.2), cplx(1.1, -0.3), cplx(1.4, 0.1), cplx(-0.35, 0.15)),
                  cplx(0.85090714077381203, 0.050576912509234420)) < 1e-12);
    CHECK(rel_err(hyp2f1(cplx(-3.0), cplx(2.2), cplx(0.7), cplx(0.4)),
                  cplx(-0.52073202614379091)) < 1e-12);
    CHECK(hyp2f1(cplx(0.3), cplx(0.7), cplx(1.1), cplx(0.0)) == cplx(1.0));
}

TEST_CASE("2F1 degenerate parameter rules") {
    CHECK_THROWS_AS(hyp2f1(cplx(0.3), cplx(0.7), cplx(-1.0), cplx(0.2)), ParameterError);
    CHECK_THROWS_AS(hyp2f1(cplx(0.3), cplx(0.7), cplx(1.1), cplx(2.0)), DomainError);
    // elementary special cases used downstream
    double w = 0.6;
    cplx nu(0.25, 0.0);
    CHECK(rel_err(hyp2f1(0.5 + nu, cplx(0.5), cplx(0.5), cplx(-w * w)),
                  std::pow(cplx(1.0 + w * w), -0.5 - nu)) < 1e-12);
    CHECK(hyp2f1(nu, cplx(0.0), cplx(0.5), cplx(-w * w)) == cplx(1.0));
}

TEST_CASE("2F1 Euler identity on random draws inside the disk") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dp(-1.5, 1.5), dz(-0.8, 0.8);
    int done = 0;
    while (done < 100) {
        cplx a(dp(rng), dp(rng)), b(dp(rng), dp(rng)), c(2.0 + std::abs(dp(rng)), dp(rng));
        cplx z(dz(rng), dz(rng));
        if (std::abs(z) > 0.8) continue;
        cplx lhs = hyp2f1(a, b, c, z);
        cplx rhs = std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) < 1e-10);
        ++done;
    }
}

TEST_CASE("2F1 continuation agrees with the Pfaff transform outside the disk") {
    cplx a(0.45, 0.1), b(0.95, -0.1), c(1.3, 0.0);
    for (int i = 0; i < 20; ++i) {
        double w = 1.05 + (5.0 - 1.05) * i / 19.0;
        cplx z(-w * w, 0.0);
        cplx direct = hyp2f1(a, b, c, z);
        cplx pfaff = std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
        CHECK(std::abs(direct - pfaff) / (1.0 + std::abs(pfaff)) < 1e-8);
    }
    CHECK_THROWS_AS(hyp2f1(cplx(0.5), cplx(0.5), cplx(1.3), cplx(-4.0)), ContinuationError);
}

TEST_CASE("Hurwitz zeta matches reference values") {
    CHECK(rel_err(riemann_zeta(cplx(2.0)), cplx(1.6449340668482264)) < 1e-13);
    CHECK(rel_err(riemann_zeta(cplx(3.0)), cplx(1.2020569031595943)) < 1e-13);
    CHECK(rel_err(riemann_zeta(cplx(0.5)), cplx(-1.4603545088095868)) < 1e-13);
    CHECK(rel_err(riemann_zeta(cplx(-1.0)), cplx(-1.0 / 12.0)) < 1e-12);
    CHECK(rel_err(hurwitz_zeta(cplx(2.0), 0.25), cplx(17.197329154507111)) < 1e-13);
    CHECK(rel_err(hurwitz_zeta(cplx(0.5, 3.0), 0.4),
                  cplx(-1.4449600704140601, 0.14353665936498918)) < 1e-12);
    CHECK(std::abs(riemann_zeta(cplx(0.5, 14.134725))) < 2e-7);  // near the first zero
    CHECK_THROWS_AS(riemann_zeta(cplx(1.0)), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0), 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0), 1.5), DomainError);
}

TEST_CASE("precision records validate") {
    Precision p;
    CHECK_NOTHROW(p.validate());
    p.rel_tol = -1.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
}
