#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maasskit/corpus.hpp"
#include "maasskit/lseries.hpp"

using namespace maasskit;

namespace {
double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

CoeffSeq ones(std::size_t n) {
    std::vector<cplx> v(n, 1.0);
    return {v, 1.0, 0.0};
}

// Precision with the absolute tolerance relaxed to what a given truncated
// coefficient store can certify.
Precision loose(double abs_tol) {
    Precision p;
    p.abs_tol = abs_tol;
    p.rel_tol = 1e-10;
    return p;
}
}  // namespace

TEST_CASE("cosine derivative cycle") {
    double x = 0.37;
    CHECK(cosk(0, x) == std::cos(x));
    CHECK(cosk(1, x) == -std::sin(x));
    CHECK(cosk(2, x) == -std::cos(x));
    CHECK(cosk(3, x) == std::sin(x));
    CHECK(cosk(4, x) == std::cos(x));
    CHECK(cosk(-1, x) == std::sin(x));
}

TEST_CASE("coefficient validation enforces the declared growth bound") {
    CoeffSeq good{{cplx(1.0), cplx(2.0)}, 1.0, 1.0};
    CHECK_NOTHROW(good.validate());
    CoeffSeq bad{{cplx(1.0), cplx(3.0)}, 1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), SanityBoundViolation);
    CoeffSeq empty{{}, 1.0, 0.0};
    CHECK_THROWS_AS(empty.validate(), ParameterError);
}

TEST_CASE("dirichlet_sum reproduces zeta with a certified tail") {
    auto c = ones(4000);
    auto v = dirichlet_sum(c, Twist::none(), cplx(2.5), loose(1e-5));
    CHECK(rel_err(v.value, riemann_zeta(cplx(2.5))) < 1e-4);
    CHECK(std::abs(v.value - riemann_zeta(cplx(2.5))) < v.tail_bound);
    // outside the certified region
    CHECK_THROWS_AS(dirichlet_sum(c, Twist::none(), cplx(1.1)), ConvergenceError);
    // too few coefficients for the requested accuracy
    auto few = ones(5);
    CHECK_THROWS_AS(dirichlet_sum(few, Twist::none(), cplx(1.3)), InsufficientCoefficients);
    try {
        dirichlet_sum(ones(10), Twist::none(), cplx(2.0));
        FAIL("expected InsufficientCoefficients");
    } catch (const InsufficientCoefficients& e) {
        CHECK(e.required > 10);
    }
}

TEST_CASE("Eisenstein Dirichlet series factors through two zeta values") {
    for (cplx nu_val : {cplx(0.25, 0.0), cplx(0.0, 0.4)}) {
        SpectralParam nu(nu_val);
        auto vals = eisenstein_coeffs(nu, 5000);
        CoeffSeq c{vals, 2.5, 0.3};
        for (double sr : {2.0, 2.5, 3.0}) {
            cplx s(sr, 0.0);
            auto v = dirichlet_sum(c, Twist::none(), s, loose(2e-2));
            cplx want = riemann_zeta(s + nu.nu) * riemann_zeta(s - nu.nu);
            CHECK(std::abs(v.value - want) < 2.0 * v.tail_bound + 1e-9);
        }
    }
}

TEST_CASE("multiplicative and additive twists weight the sum correctly") {
    auto chars = character_group(5);
    const auto& psi = chars[1];
    auto c = ones(2000);
    cplx s(3.0, 0.0);
    auto tw = dirichlet_sum(c, Twist::mult(psi), s, loose(1e-6)).value;
    cplx direct = 0.0;
    for (long n = 1; n <= 2000; ++n)
        direct += psi.value(n) * std::pow(static_cast<double>(n), -3.0);
    CHECK(std::abs(tw - direct) < 1e-14);

    auto add = dirichlet_sum(c, Twist::additive(Rat(1, 5), 1), s, loose(1e-6)).value;
    cplx directa = 0.0;
    for (long n = 1; n <= 2000; ++n)
        directa += cosk(1, 2.0 * kPi * n / 5.0) * std::pow(static_cast<double>(n), -3.0);
    CHECK(std::abs(add - directa) < 1e-14);

    CHECK(Twist::none().parity_index() == 0);
    CHECK(Twist::mult(psi).parity_index() == psi.parity());
    CHECK(Twist::additive(Rat(1, 5), 3).parity_index() == 3);
}

TEST_CASE("gamma factor evaluates and rejects bad shifts and poles") {
    SpectralParam nu(cplx(0.25, 0.0));
    GammaFactor gf(0, nu);
    cplx s(2.0, 1.0);
    CHECK(rel_err(gamma_factor(gf, s), gamma_r(s + 0.25) * gamma_r(s - 0.25)) < 1e-15);
    CHECK_THROWS_AS(GammaFactor(2, nu), ParameterError);
    CHECK_THROWS_AS(gamma_factor(gf, cplx(0.25, 0.0)), PoleError);  // s - nu = 0
}

TEST_CASE("completed lambda agrees with continued lambda in the overlap") {
    SpectralParam nu(cplx(0.25, 0.0));
    auto vals = eisenstein_coeffs(nu, 6000);
    CoeffSeq c{vals, 2.5, 0.3};
    auto trivial = character_group(1).front();
    cplx s(3.0, 0.5);
    cplx direct = completed_lambda(c, Twist::none(), 0, nu, s, loose(1e-5));
    cplx cont = continued_lambda_eisenstein(trivial, nu, s);
    CHECK(std::abs(direct - cont) < 1e-5 * (1.0 + std::abs(cont)));

    // primitive twist overlap
    auto chars5 = character_group(5);
    const auto& psi = chars5[1];
    cplx tw_direct = completed_lambda(c, Twist::mult(psi), 0, nu, s, loose(1e-5));
    cplx tw_cont = continued_lambda_eisenstein(psi, nu, s);
    CHECK(std::abs(tw_direct - tw_cont) < 1e-5 * (1.0 + std::abs(tw_cont)));
}

TEST_CASE("continued Eisenstein lambda flags its poles and strips Euler factors") {
    SpectralParam nu(cplx(0.25, 0.0));
    auto trivial = character_group(1).front();
    CHECK_THROWS_AS(continued_lambda_eisenstein(trivial, nu, cplx(1.25, 0.0)), PoleError);
    CHECK_THROWS_AS(continued_lambda_eisenstein(trivial, nu, cplx(0.25, 0.0)), PoleError);
    CHECK_THROWS_AS(continued_lambda_eisenstein(trivial, nu, cplx(-0.25, 0.0)), PoleError);

    // principal character mod 5 = trivial with the p = 5 Euler factors removed
    auto chars5 = character_group(5);
    const auto& psi0 = chars5.front();
    cplx s(2.2, 0.7);
    cplx lhs = continued_lambda_eisenstein(psi0, nu, s);
    cplx strip = (1.0 - std::pow(5.0, -s - 0.25)) * (1.0 - std::pow(5.0, -s + 0.25));
    CHECK(rel_err(lhs, strip * continued_lambda_eisenstein(trivial, nu, s)) < 1e-13);

    // non-principal imprimitive twist is refused
    auto chars9 = character_group(9);
    for (const auto& chi : chars9)
        if (!chi.is_principal() && !chi.is_primitive())
            CHECK_THROWS_AS(continued_lambda_eisenstein(chi, nu, s), ParameterError);
}

TEST_CASE("character-sum assembly matches the direct additive completion") {
    SpectralParam nu(cplx(0.25, 0.0));
    auto vals = eisenstein_coeffs(nu, 6000);
    CoeffSeq c{vals, 2.5, 0.3};
    cplx s(2.5, 0.0);
    Precision p = loose(1e-3);
    for (long k : {0L, 1L}) {
        cplx direct = completed_lambda(c, Twist::additive(Rat(1, 5), k), 0, nu, s, p);
        cplx assembled = additive_completion_assembled(c, 1, 5, k, 0, nu, s, p);
        CHECK(std::abs(direct - assembled) < 1e-8 * (1.0 + std::abs(direct)));
    }
    CHECK_THROWS_AS(additive_completion_assembled(c, 1, 4, 0, 0, nu, s, p), ParameterError);
}

TEST_CASE("dirichlet_l reduces to zeta and to finite character sums") {
    auto trivial = character_group(1).front();
    CHECK(rel_err(dirichlet_l(trivial, cplx(2.0)), cplx(1.6449340668482264)) < 1e-12);
    // quadratic character mod 5: L(1) = 2 log phi / sqrt 5
    auto chars5 = character_group(5);
    for (const auto& chi : chars5) {
        bool quadratic = !chi.is_principal();
        for (long n = 1; n < 5 && quadratic; ++n)
            if (std::abs(chi.value(n).imag()) > 1e-12) quadratic = false;
        if (!quadratic || chi.is_principal()) continue;
        CHECK(rel_err(dirichlet_l(chi, cplx(1.0)), cplx(0.43040894096400404)) < 1e-12);
    }
}

TEST_CASE("K-cosine Mellin closed form agrees with direct quadrature") {
    struct Pt { cplx nu; long k; double w; cplx s; };
    std::vector<Pt> pts = {
        {cplx(0.25, 0.0), 0, 0.5, cplx(2.5, 0.5)},
        {cplx(0.25, 0.0), 1, 0.5, cplx(2.5, 0.5)},
        {cplx(0.0, 0.4), 2, 1.2, cplx(1.8, -0.6)},
        {cplx(0.0, 0.4), 3, 0.8, cplx(2.1, 0.0)},
        {cplx(0.3, 0.0), 4, 0.2, cplx(3.0, 1.0)},
    };
    for (const auto& pt : pts) {
        SpectralParam nu(pt.nu);
        cplx closed = mellin_kcos(nu, 0, pt.k, pt.w, pt.s);
        cplx quad = mellin_kcos_quadrature(nu, pt.k, pt.w, pt.s);
        CHECK(std::abs(closed - quad) / (1.0 + std::abs(quad)) < 1e-7);
    }
    // degenerate values
    SpectralParam nu(cplx(0.25, 0.0));
    CHECK(mellin_kcos(nu, 0, 1, 0.0, cplx(2.5, 0.0)) == cplx(0.0));
    cplx s(2.5, 0.0);
    cplx k0w0 = mellin_kcos(nu, 0, 0, 0.0, s);
    CHECK(rel_err(k0w0, std::pow(kPi, s) * gamma_r(s + 0.25) * gamma_r(s - 0.25)) < 1e-13);
    CHECK_THROWS_AS(mellin_kcos(nu, 2, 0, 0.5, s), ParameterError);
    CHECK_THROWS_AS(mellin_kcos_quadrature(nu, 0, 0.5, cplx(0.2, 0.0)), DomainError);
}

TEST_CASE("Eisenstein twisted functional equation holds at spot checks") {
    SpectralParam nu(cplx(0.25, 0.0));
    for (long q : {5L, 7L}) {
        auto chars = character_group(q);
        auto rep = fe_eisenstein_residual(chars[1], nu, cplx(0.5, 2.0));
        CHECK(rep.pass);
        CHECK(rep.max_rel_residual < 1e-10);
    }
    auto principal5 = character_group(5).front();
    CHECK_THROWS_AS(fe_eisenstein_residual(principal5, nu, cplx(0.5, 2.0)), PreconditionError);
}

TEST_CASE("additive functional equation holds for both parities") {
    SpectralParam nu(cplx(0.25, 0.0));
    for (long k : {0L, 1L}) {
        auto rep = additive_fe_residual(2, 5, k, nu, cplx(0.5, 1.5));
        CHECK(rep.pass);
        CHECK(rep.max_rel_residual < 1e-10);
    }
    CHECK_THROWS_AS(additive_fe_residual(2, 6, 0, nu, cplx(0.5, 1.5)), ParameterError);
    CHECK_THROWS_AS(additive_fe_residual(5, 5, 0, nu, cplx(0.5, 1.5)), ParameterError);
}

TEST_CASE("Vandermonde coefficients reproduce the delta pattern") {
    std::vector<Rat> lams = {Rat(1), Rat(2), Rat(3), Rat(5, 2), Rat(7, 3), Rat(4)};
    auto sys = vandermonde_coeffs(lams, 1, 2);
    CHECK(sys.max_row_residual < 1e-10);
    for (std::size_t t = 0; t < 4; ++t) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < lams.size(); ++j)
            acc += sys.coefficients[j] * std::pow(lams[j].value(), -static_cast<double>(t));
        CHECK(std::abs(acc - (t == 1 ? cplx(1.0) : cplx(0.0))) < 1e-10);
    }
    CHECK_THROWS_AS(vandermonde_coeffs({Rat(1), Rat(2)}, 0, 2), ParameterError);
    CHECK_THROWS_AS(vandermonde_coeffs({Rat(1), Rat(2), Rat(2), Rat(3)}, 0, 2), SingularSystem);
    CHECK_THROWS_AS(vandermonde_coeffs({Rat(-1), Rat(2), Rat(3), Rat(4)}, 0, 2), ParameterError);
}
