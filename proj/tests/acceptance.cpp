// Acceptance gate: one line per criterion, exit nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "maasskit/characters.hpp"
#include "maasskit/corpus.hpp"
#include "maasskit/hyperbolic.hpp"
#include "maasskit/io.hpp"
#include "maasskit/lseries.hpp"
#include "maasskit/maassform.hpp"
#include "maasskit/quotient.hpp"
#include "maasskit/specfun.hpp"

using namespace maasskit;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_s;  // 0 = no budget
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("%-5s %s  (%.2fs)%s%s\n", c.name, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

int main() {
    // SF-1: Euler identity for 2F1, 100 draws with |z| <= 0.8, residual < 1e-10.
    run({"SF-1", 5.0}, [](std::string& d) {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> dp(-1.5, 1.5), dz(-0.8, 0.8);
        double worst = 0.0;
        int done = 0;
        while (done < 100) {
            cplx a(dp(rng), dp(rng)), b(dp(rng), dp(rng)), c(2.0 + std::abs(dp(rng)), dp(rng));
            cplx z(dz(rng), dz(rng));
            if (std::abs(z) > 0.8) continue;
            cplx lhs = hyp2f1(a, b, c, z);
            cplx rhs = std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
            ++done;
        }
        d = "max residual " + sci(worst);
        return worst < 1e-10;
    });

    // SF-2: continuation vs Pfaff on z = -w^2, w in [1.05, 5], 20 points, < 1e-8.
    run({"SF-2", 5.0}, [](std::string& d) {
        cplx a(0.45, 0.1), b(0.95, -0.1), c(1.3, 0.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double w = 1.05 + (5.0 - 1.05) * i / 19.0;
            cplx z(-w * w, 0.0);
            cplx direct = hyp2f1(a, b, c, z);
            cplx pfaff = std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
            worst = std::max(worst, std::abs(direct - pfaff) / (1.0 + std::abs(pfaff)));
        }
        d = "max residual " + sci(worst);
        return worst < 1e-8;
    });

    // SF-3: K_{1/2} closed form on 50 points of [0.1, 20] < 1e-10, and
    // evenness K_nu = K_{-nu} on 100 random draws.
    run({"SF-3", 0.0}, [](std::string& d) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            double u = 0.1 + (20.0 - 0.1) * i / 49.0;
            double closed = std::sqrt(kPi / (2.0 * u)) * std::exp(-u);
            worst = std::max(worst, rel(bessel_k(cplx(0.5), u), cplx(closed)));
        }
        bool half = worst < 1e-10;
        std::mt19937_64 rng(103);
        std::uniform_real_distribution<double> du(0.2, 12.0), dn(-0.45, 0.45);
        double weven = 0.0;
        for (int i = 0; i < 100; ++i) {
            double u = du(rng);
            cplx nu = (i % 2 == 0) ? cplx(dn(rng), 0.0) : cplx(0.0, 2.0 * dn(rng));
            weven = std::max(weven, rel(bessel_k(nu, u), bessel_k(-nu, u)));
        }
        d = "closed-form " + sci(worst) + ", evenness " + sci(weven);
        return half && weven < 1e-10;
    });

    // CH-1: |tau(psi)| = sqrt q for every primitive psi with q <= 50 (1e-10),
    // and the trig decompositions exact to 1e-12 for q in {3,5,7,11,13}, n <= 200.
    run({"CH-1", 0.0}, [](std::string& d) {
        double wg = 0.0;
        for (long q = 2; q <= 50; ++q)
            for (const auto& psi : character_group(q)) {
                if (!psi.is_primitive()) continue;
                wg = std::max(wg, std::abs(std::abs(gauss_sum(psi)) -
                                           std::sqrt(static_cast<double>(q))));
            }
        double wd = 0.0;
        for (long q : {3L, 5L, 7L, 11L, 13L})
            for (long a = 1; a < q; ++a)
                for (long n = 1; n <= 200; ++n) {
                    wd = std::max(wd, cos_sin_decomposition_residual(n, a, q, TrigKind::cos));
                    wd = std::max(wd, cos_sin_decomposition_residual(n, a, q, TrigKind::sin));
                }
        d = "gauss " + sci(wg) + ", decomposition " + sci(wd);
        return wg < 1e-10 && wd < 1e-12;
    });

    // ML-1: Mellin identity residual < 1e-6 for the 2000-coefficient
    // Eisenstein family at nu = 0.25, (w, alpha) in {0, 0.5} x {0, 1/5},
    // Re s = 2.5, |Im s| <= 5 on 11 points.
    run({"ML-1", 60.0}, [](std::string& d) {
        auto spec = eisenstein_spec(SpectralParam(cplx(0.25, 0.0)), 2000);
        double worst = 0.0;
        for (double w : {0.0, 0.5})
            for (Rat alpha : {Rat(0, 1), Rat(1, 5)}) {
                MellinTransform mt(spec, Side::f, w, alpha);
                for (int i = 0; i <= 10; ++i) {
                    cplx s(2.5, -5.0 + i);
                    cplx lhs = mt.lhs(s);
                    cplx rhs = mt.rhs(s);
                    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
                }
            }
        d = "max residual " + sci(worst);
        return worst < 1e-6;
    });

    // ML-2: closed form vs quadrature on 20 random admissible (nu,eps,k,w,s), < 1e-7.
    run({"ML-2", 0.0}, [](std::string& d) {
        std::mt19937_64 rng(107);
        std::uniform_real_distribution<double> dn(-0.45, 0.45), dw(0.1, 1.5),
            dsr(1.5, 3.0), dsi(-1.0, 1.0);
        std::uniform_int_distribution<int> dk(0, 4), de(0, 1);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            cplx nv = (i % 2 == 0) ? cplx(dn(rng), 0.0) : cplx(0.0, dn(rng));
            SpectralParam nu(nv);
            int eps = de(rng);
            long k = dk(rng);
            double w = dw(rng);
            cplx s(dsr(rng), dsi(rng));
            cplx closed = mellin_kcos(nu, eps, k, w, s);
            cplx quad = mellin_kcos_quadrature(nu, k, w, s);
            worst = std::max(worst, std::abs(closed - quad) / (1.0 + std::abs(quad)));
        }
        d = "max residual " + sci(worst);
        return worst < 1e-7;
    });

    // TR-1: involution residual < 1e-7 for nu in {0.25, 0.4i} at 10 points
    // with Im z >= 0.5.
    run({"TR-1", 30.0}, [](std::string& d) {
        double worst = 0.0;
        std::mt19937_64 rng(109);
        std::uniform_real_distribution<double> dx(-1.0, 1.0), dy(0.5, 2.5);
        for (cplx nv : {cplx(0.25, 0.0), cplx(0.0, 0.4)}) {
            auto spec = eisenstein_spec(SpectralParam(nv), 2000);
            for (int i = 0; i < 10; ++i) {
                cplx z(dx(rng), dy(rng));
                worst = std::max(worst, involution_residual(spec, z).max_rel_residual);
            }
        }
        d = "max residual " + sci(worst);
        return worst < 1e-7;
    });

    // TR-2: twist transform for q in {5, 7}, every non-principal psi, 3 points
    // each (< 1e-6), plus the difference identity on the same data.
    run({"TR-2", 180.0}, [](std::string& d) {
        auto spec = eisenstein_spec(SpectralParam(cplx(0.25, 0.0)), 2000);
        std::vector<cplx> pts = {cplx(0.05, 0.90), cplx(0.10, 0.95), cplx(-0.08, 0.88)};
        double wt = 0.0, wd = 0.0;
        for (long q : {5L, 7L}) {
            for (const auto& psi : character_group(q)) {
                if (psi.is_principal()) continue;
                for (cplx z : pts)
                    wt = std::max(wt,
                                  twist_transform_residual(spec, psi, z).max_rel_residual);
            }
            for (cplx z : pts)
                wd = std::max(
                    wd, difference_identity_residual(spec, q, 1, 2, z).max_rel_residual);
        }
        d = "twist " + sci(wt) + ", difference " + sci(wd);
        return wt < 1e-6 && wd < 1e-6;
    });

    // FE-1: twisted functional equation for a primitive psi mod 5 and mod 7
    // on Re s = 1/2, |Im s| <= 10 (21 points), residual < 1e-7.
    run({"FE-1", 0.0}, [](std::string& d) {
        SpectralParam nu(cplx(0.25, 0.0));
        double worst = 0.0;
        for (long q : {5L, 7L}) {
            const auto psi = character_group(q)[1];
            for (int i = 0; i <= 20; ++i) {
                cplx s(0.5, -10.0 + i);
                worst = std::max(worst, fe_eisenstein_residual(psi, nu, s).max_rel_residual);
            }
        }
        d = "max residual " + sci(worst);
        return worst < 1e-7;
    });

    // CI-1: circle integral residual < 1e-7 at z in {i, 2i, 1/2 + i}, nu = 0.25.
    run({"CI-1", 0.0}, [](std::string& d) {
        auto spec = eisenstein_spec(SpectralParam(cplx(0.25, 0.0)), 2000);
        double worst = 0.0;
        for (cplx z : {cplx(0.0, 1.0), cplx(0.0, 2.0), cplx(0.5, 1.0)})
            worst = std::max(worst, circle_integral_residual(spec, z).max_rel_residual);
        d = "max residual " + sci(worst);
        return worst < 1e-7;
    });

    // HY-1: 100 random admissible (q, s, r, rtilde, N): det = 1 and |trace| < 2
    // in exact rational arithmetic, M z = z at the fixed point to 1e-12, and
    // pairwise distinct fixed-point real parts.
    run({"HY-1", 0.0}, [](std::string& d) {
        std::mt19937_64 rng(113);
        std::uniform_int_distribution<long> dq(1, 6), dnum(1, 9), dN(1, 4);
        double wfix = 0.0;
        std::vector<double> reals;
        int made = 0, attempts = 0;
        while (made < 100 && attempts < 10000) {
            ++attempts;
            long q = dq(rng), s = dq(rng), n = dN(rng);
            if (q * s < 2) continue;
            Rat r(dnum(rng), dnum(rng));
            Rat rtilde = (Rat(q * s) - Rat(1)) / (r * Rat(n));
            auto em = build_m_exact(q, s, r, rtilde, n);
            if (!(em.det() == Rat(1))) return false;
            Rat tr = em.trace();
            if (!(Rat(-2) < tr && tr < Rat(2))) return false;
            Moebius m = em.approx();
            cplx fp = fixed_point(m);
            double re = fp.real();
            bool dup = false;
            for (double x : reals)
                if (std::abs(x - re) < 1e-9) dup = true;
            if (dup) continue;  // redraw: same matrix sampled twice
            reals.push_back(re);
            wfix = std::max(wfix, std::abs(act(m, fp) - fp));
            ++made;
        }
        d = "samples " + std::to_string(made) + ", fixed-point residual " + sci(wfix);
        return made == 100 && wfix < 1e-12;
    });

    // HY-2: two-circles verdicts (constant accepted, radial flagged as not
    // invariant under m2), and the orbit of M(3,5,2) leaves a gap < 0.01 rad
    // after 1e4 iterates.
    run({"HY-2", 20.0}, [](std::string& d) {
        auto c1 = classify(build_m(3, 3, Rat(2), Rat(2), 2));
        auto c2 = classify(build_m(5, 5, Rat(2), Rat(3), 4));
        if (c1.type != "elliptic" || c2.type != "elliptic") return false;
        auto grid = two_circles_grid(c1.certificate->fixed_pt, c2.certificate->fixed_pt);
        auto constant = [](cplx) { return cplx(1.5, 0.5); };
        auto v1 = two_circles_test(constant, *c1.certificate, *c2.certificate, grid, 1e-9);
        cplx f1 = c1.certificate->fixed_pt;
        auto radial = [f1](cplx z) { return cplx(hyp_distance(z, f1), 0.0); };
        auto v2 = two_circles_test(radial, *c1.certificate, *c2.certificate, grid, 1e-9);
        auto c3 = classify(build_m(3, 5, Rat(2), Rat(7), 1));
        if (c3.type != "elliptic" || !c3.certificate->infinite_order) return false;
        double gap = orbit_angle_gap(*c3.certificate, 10000, cplx(0.0, 1.0));
        d = "verdicts '" + v1.verdict + "' / '" + v2.verdict + "', gap " + sci(gap);
        return v1.verdict == "consistent with constant" &&
               v2.verdict == "not invariant under m2" && gap < 0.01;
    });

    // QT-1: Moebius deconvolution exact to n = 1000 (roundtrip, sigma -> id,
    // 1 -> delta), and the epsilon-factor identity < 1e-12 for q in {5, 7},
    // both parities, 5 s-values.
    run({"QT-1", 0.0}, [](std::string& d) {
        std::vector<cplx> ones(1000, 1.0), id(1000);
        for (std::size_t n = 1; n <= 1000; ++n) id[n - 1] = static_cast<double>(n);
        CoeffSeq sigma{dirichlet_convolve(ones, id), 2.0, 1.1};
        auto back = moebius_deconvolve(sigma);
        for (std::size_t n = 1; n <= 1000; ++n)
            if (std::abs(back.at(n) - cplx(static_cast<double>(n))) > 1e-9) return false;
        CoeffSeq all_ones{ones, 1.0, 0.0};
        auto delta = moebius_deconvolve(all_ones);
        if (delta.at(1) != cplx(1.0)) return false;
        for (std::size_t n = 2; n <= 1000; ++n)
            if (delta.at(n) != cplx(0.0)) return false;
        std::mt19937_64 rng(127);
        std::uniform_int_distribution<int> di(-5, 5);
        std::vector<cplx> cv(1000);
        for (auto& x : cv) x = static_cast<double>(di(rng));
        double bc = 6.0;
        auto a = moebius_deconvolve(CoeffSeq{cv, bc, 0.0});
        auto round = dirichlet_convolve(a.values, ones);
        for (std::size_t n = 1; n <= 1000; ++n)
            if (std::abs(round[n - 1] - cv[n - 1]) > 1e-9) return false;

        double worst = 0.0;
        bool saw_even = false, saw_odd = false;
        for (long q : {5L, 7L})
            for (const auto& psi : character_group(q)) {
                if (!psi.is_primitive()) continue;
                (psi.parity() == 0 ? saw_even : saw_odd) = true;
                for (cplx s : {cplx(0.5, 0.0), cplx(0.3, 1.0), cplx(1.2, -0.5),
                               cplx(0.5, 5.0), cplx(0.9, 0.0)})
                    worst = std::max(worst,
                                     quotient_fe_epsilon_residual(psi, 1, s).max_abs_residual);
            }
        d = "epsilon residual " + sci(worst);
        return saw_even && saw_odd && worst < 1e-12;
    });

    // QT-2: gamma-factor quotient s-independent to 1e-10 over an 11-point
    // grid for both parities; the eps = 0 constant is exactly 1.
    run({"QT-2", 0.0}, [](std::string& d) {
        SpectralParam nu(cplx(0.0, 0.4));
        std::vector<cplx> grid;
        for (int i = 0; i <= 10; ++i) grid.emplace_back(0.5, -10.0 + 2.0 * i);
        auto rep0 = quotient_gamma_residual(0, nu, grid);
        auto rep1 = quotient_gamma_residual(1, nu, grid);
        bool const0 = rep0.params.at("constant_re").get<double>() == 1.0 &&
                      rep0.params.at("constant_im").get<double>() == 0.0;
        d = "residuals " + sci(rep0.max_abs_residual) + " / " +
            sci(rep1.max_abs_residual);
        return rep0.pass && rep1.pass && const0 && rep0.max_abs_residual < 1e-10 &&
               rep1.max_abs_residual < 1e-10;
    });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
