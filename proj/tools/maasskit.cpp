// maasskit command-line harness: corpus generation, identity checks, and
// JSON report plumbing. Exit codes: 0 all checks pass, 1 check failure,
// 2 validation error, 3 numerical error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maasskit/characters.hpp"
#include "maasskit/corpus.hpp"
#include "maasskit/hyperbolic.hpp"
#include "maasskit/io.hpp"
#include "maasskit/lseries.hpp"
#include "maasskit/maassform.hpp"
#include "maasskit/parallel.hpp"
#include "maasskit/quotient.hpp"
#include "maasskit/specfun.hpp"

using namespace maasskit;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stol(text));
        return Rat(std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw FormatError("cannot parse rational: " + text);
    }
}

// "x:y;x:y;..." -> points x + iy
std::vector<cplx> parse_points(const std::string& text) {
    std::vector<cplx> pts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw FormatError("point must be re:im, got " + item);
        try {
            pts.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw FormatError("cannot parse point: " + item);
        }
    }
    if (pts.empty()) throw FormatError("empty point list");
    return pts;
}

// "re:im_start:im_end:count" -> count points on the vertical line Re s = re
std::vector<cplx> parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string f1, f2, f3, f4;
    if (!std::getline(in, f1, ':') || !std::getline(in, f2, ':') ||
        !std::getline(in, f3, ':') || !std::getline(in, f4))
        throw FormatError("grid must be re:im_start:im_end:count, got " + text);
    double re, i0, i1;
    long count;
    try {
        re = std::stod(f1);
        i0 = std::stod(f2);
        i1 = std::stod(f3);
        count = std::stol(f4);
    } catch (const std::exception&) {
        throw FormatError("cannot parse grid: " + text);
    }
    if (count < 1) throw ParameterError("grid count must be >= 1");
    std::vector<cplx> grid;
    for (long i = 0; i < count; ++i) {
        double im = count == 1 ? i0 : i0 + (i1 - i0) * static_cast<double>(i) / (count - 1);
        grid.emplace_back(re, im);
    }
    return grid;
}

SpectralParam parse_nu(double re, double im) { return SpectralParam(cplx(re, im)); }

struct Output {
    std::string path;  // empty = stdout
    long seed = 0;

    int emit(const std::vector<CheckReport>& reports) const {
        bool all_pass = true;
        json arr = json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            arr.push_back(r.to_json());
        }
        json doc{{"pass", all_pass}, {"seed", seed}, {"reports", arr}};
        if (path.empty()) {
            std::cout << doc.dump(2) << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw FormatError("cannot write " + path);
            out << doc.dump(2) << '\n';
        }
        return all_pass ? kExitPass : kExitCheckFailure;
    }
};

// Run the grid in the worker pool; reports are assembled in order afterwards.
std::vector<CheckReport> over_grid(const std::vector<cplx>& grid,
                                   const std::function<CheckReport(cplx)>& one) {
    std::vector<CheckReport> reps(grid.size());
    std::vector<std::exception_ptr> errs(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            reps[i] = one(grid[i]);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    });
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return reps;
}

CheckReport specfun_selftest() {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "specfun-selftest";
    rep.paper_anchor = "special-function building blocks (gamma, K-Bessel, 2F1, Hurwitz zeta)";
    rep.tolerance = 1e-10;
    auto probe = [&rep](const std::string& name, cplx got, cplx want) {
        double r = std::abs(got - want) / std::max(1e-300, std::abs(want));
        rep.record(std::abs(got - want), r);
        rep.grid.push_back({{"probe", name}, {"rel_residual", r}});
    };
    probe("gamma(0.75)", cgamma(cplx(0.75, 0.0)), cplx(1.2254167024651776, 0.0));
    probe("gamma(2.5+3i)", cgamma(cplx(2.5, 3.0)),
          cplx(-0.21811897108112290, 0.072034763407175034));
    probe("K(1/4, 1)", bessel_k(cplx(0.25, 0.0), 1.0), cplx(0.43073977444858552, 0.0));
    probe("K(0.7i, 2)", bessel_k(cplx(0.0, 0.7), 2.0), cplx(0.10284426561935261, 0.0));
    probe("2F1(.5,.75;1.25;-.25)", hyp2f1(cplx(0.5), cplx(0.75), cplx(1.25), cplx(-0.25)),
          cplx(0.93431894681470260, 0.0));
    probe("2F1(.3,.7;1.1;-4)", hyp2f1(cplx(0.3), cplx(0.7), cplx(1.1), cplx(-4.0)),
          cplx(0.71173015832768531, 0.0));
    probe("zeta(2)", riemann_zeta(cplx(2.0, 0.0)), cplx(1.6449340668482264, 0.0));
    probe("zeta(0.5)", riemann_zeta(cplx(0.5, 0.0)), cplx(-1.4603545088095868, 0.0));
    probe("hurwitz(2, 1/4)", hurwitz_zeta(cplx(2.0, 0.0), 0.25), cplx(17.197329154507111, 0.0));
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale verification of Maass-form L-function identities"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the JSON report here instead of stdout");
    app.add_option("--seed", out.seed, "seed for randomized suites; recorded in the report");

    // ---- corpus --------------------------------------------------------
    auto* corpus = app.add_subcommand("corpus", "generate or ingest coefficient data");
    corpus->require_subcommand(1);

    double nu_re = 0.25, nu_im = 0.0;
    std::size_t n_max = 2000;
    std::string out_dir = "eis";
    auto* gen = corpus->add_subcommand("gen-eisenstein", "generate the Eisenstein spec");
    gen->add_option("--nu", nu_re, "real part of the spectral parameter");
    gen->add_option("--nu-im", nu_im, "imaginary part of the spectral parameter");
    gen->add_option("--n-max", n_max, "number of coefficients");
    gen->add_option("--out-dir", out_dir, "output directory for spec.json + coeffs.csv");

    std::string hecke_path, csv_out = "sym2.csv", csv_in;
    long level = 1;
    auto* lh = corpus->add_subcommand("load-hecke", "validate a Hecke eigenvalue CSV");
    lh->add_option("--in", hecke_path, "CSV with header p,lambda_re,lambda_im")->required();
    lh->add_option("--level", level, "level of the source form");

    auto* sy = corpus->add_subcommand("sym2", "symmetric-square coefficients from Hecke data");
    sy->add_option("--hecke", hecke_path, "Hecke eigenvalue CSV")->required();
    sy->add_option("--n-max", n_max, "number of coefficients");
    sy->add_option("--csv-out", csv_out, "output coefficient CSV");
    sy->add_option("--level", level, "level of the source form");

    auto* de = corpus->add_subcommand("deconvolve", "divide a coefficient series by zeta");
    de->add_option("--in", csv_in, "input coefficient CSV")->required();
    de->add_option("--csv-out", csv_out, "output coefficient CSV");

    // ---- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "verify one identity");
    check->require_subcommand(1);

    std::string spec_path, points_text = "default", grid_text = "0.5:-10:10:21";
    double tol = 0.0, w_shift = 0.0, radius = 1.25, eps_grid = 1e-9;
    std::string alpha_text = "0", family = "constant";
    long q = 5, shift_a = 1, shift_b = 2, cos_k = 0, conductor_m = 1;
    int eps_psi = 0;
    long hy_q = 3, hy_s = 5, hy_n = 1;
    std::string hy_r = "2", hy_rt = "7";
    long iterates = 10000;

    auto add_spec = [&](CLI::App* c) {
        c->add_option("--spec", spec_path, "MaassSpec JSON path")->required();
    };

    auto* inv = check->add_subcommand("involution", "f(z) = g(-1/Nz)");
    add_spec(inv);
    inv->add_option("--points", points_text, "z points re:im;re:im or 'default'");
    inv->add_option("--tol", tol, "override tolerance");

    auto* twt = check->add_subcommand("twist-transform", "character-twisted transformation");
    add_spec(twt);
    twt->add_option("--q", q, "character modulus");
    twt->add_option("--points", points_text, "z points or 'default'");
    twt->add_option("--tol", tol, "override tolerance");

    auto* dif = check->add_subcommand("difference", "additive shift difference identity");
    add_spec(dif);
    dif->add_option("--q", q, "odd prime shift denominator");
    dif->add_option("--a", shift_a, "first shift numerator");
    dif->add_option("--b", shift_b, "second shift numerator");
    dif->add_option("--points", points_text, "z points or 'default'");
    dif->add_option("--tol", tol, "override tolerance");

    auto* mel = check->add_subcommand("mellin", "Mellin transform of the shifted series");
    add_spec(mel);
    mel->add_option("--w", w_shift, "slope of the evaluation ray");
    mel->add_option("--alpha", alpha_text, "rational shift p/q");
    mel->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");
    mel->add_option("--tol", tol, "override tolerance");

    auto* cir = check->add_subcommand("circle-integral", "contour integral of Lambda");
    add_spec(cir);
    cir->add_option("--points", points_text, "z points or 'default'");
    cir->add_option("--radius", radius, "contour radius around s = 1/2");
    cir->add_option("--tol", tol, "override tolerance");

    auto* afe = check->add_subcommand("additive-fe", "functional equation of additive twists");
    afe->add_option("--a", shift_a, "shift numerator");
    afe->add_option("--q", q, "odd prime shift denominator");
    afe->add_option("--k", cos_k, "derivative index of the cosine twist");
    afe->add_option("--nu", nu_re, "real part of the spectral parameter");
    afe->add_option("--nu-im", nu_im, "imaginary part of the spectral parameter");
    afe->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");

    auto* fee = check->add_subcommand("fe-eisenstein", "twisted functional equation");
    fee->add_option("--q", q, "character modulus (all primitive characters run)");
    fee->add_option("--nu", nu_re, "real part of the spectral parameter");
    fee->add_option("--nu-im", nu_im, "imaginary part of the spectral parameter");
    fee->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");

    auto* dfe = check->add_subcommand("dirichlet-fe", "completed Dirichlet functional equation");
    dfe->add_option("--q", q, "character modulus (all primitive characters run)");
    dfe->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");

    auto* qga = check->add_subcommand("quotient-gamma", "gamma-factor quotient constancy");
    qga->add_option("--eps", eps_psi, "character parity 0 or 1");
    qga->add_option("--nu", nu_re, "real part of the spectral parameter");
    qga->add_option("--nu-im", nu_im, "imaginary part of the spectral parameter");
    qga->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");

    auto* qep = check->add_subcommand("quotient-epsilon", "epsilon-factor identity");
    qep->add_option("--q", q, "character modulus (all primitive characters run)");
    qep->add_option("--m", conductor_m, "coprime conductor factor M");
    qep->add_option("--grid", grid_text, "s grid re:im_start:im_end:count");

    auto* two = check->add_subcommand("two-circles", "two-rotation constancy surrogate");
    two->add_option("--family", family, "test function family: constant or radial");
    two->add_option("--eps", eps_grid, "invariance-defect threshold");

    auto* ell = check->add_subcommand("ellipticity", "family matrix classification and orbit");
    ell->add_option("--q", hy_q, "first parameter");
    ell->add_option("--s", hy_s, "second parameter");
    ell->add_option("--r", hy_r, "rational r (p/q)");
    ell->add_option("--rtilde", hy_rt, "rational rtilde (p/q)");
    ell->add_option("--n", hy_n, "level N");
    ell->add_option("--iterates", iterates, "orbit length for the density gap");

    // ---- specfun / report ---------------------------------------------
    auto* specfun = app.add_subcommand("specfun", "special-function utilities");
    specfun->require_subcommand(1);
    specfun->add_subcommand("selftest", "frozen-oracle self test");

    auto* report = app.add_subcommand("report", "report utilities");
    report->require_subcommand(1);
    std::vector<std::string> merge_inputs;
    auto* merge = report->add_subcommand("merge", "merge report files");
    merge->add_option("inputs", merge_inputs, "report JSON files")->required();

    // let the global --out / --seed appear after any subcommand
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            allow_globals(sub);
        }
    };
    allow_globals(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        // corpus ---------------------------------------------------------
        if (gen->parsed()) {
            auto spec = eisenstein_spec(parse_nu(nu_re, nu_im), n_max);
            save_spec(spec, out_dir + "/spec.json", "coeffs.csv");
            std::cout << "wrote " << out_dir << "/spec.json and " << out_dir << "/coeffs.csv\n";
            return kExitPass;
        }
        if (lh->parsed()) {
            auto h = load_hecke(hecke_path, level);
            json doc{{"source", h.source},
                     {"level", h.level},
                     {"primes", h.primes.size()},
                     {"first_prime", h.primes.front()},
                     {"last_prime", h.primes.back()},
                     {"checksum", h.checksum}};
            std::cout << doc.dump(2) << '\n';
            return kExitPass;
        }
        if (sy->parsed()) {
            auto h = load_hecke(hecke_path, level);
            auto c = sym2_coeffs(h, n_max);
            write_coeff_csv(csv_out, c.values);
            std::cout << "wrote " << csv_out << " (" << c.size() << " coefficients)\n";
            return kExitPass;
        }
        if (de->parsed()) {
            auto values = read_coeff_csv(csv_in);
            double bc = 1.0;
            for (const auto& v : values) bc = std::max(bc, std::abs(v));
            auto a = moebius_deconvolve(CoeffSeq{values, bc, 0.0});
            write_coeff_csv(csv_out, a.values);
            std::cout << "wrote " << csv_out << " (" << a.size() << " coefficients)\n";
            return kExitPass;
        }

        // check ----------------------------------------------------------
        if (inv->parsed()) {
            auto spec = load_spec(spec_path);
            auto pts = points_text == "default"
                           ? std::vector<cplx>{{0.0, 1.0}, {0.3, 0.8}, {-1.1, 2.0}}
                           : parse_points(points_text);
            auto reps = over_grid(pts, [&](cplx z) {
                auto r = involution_residual(spec, z);
                if (tol > 0.0) { r.tolerance = tol; r.finalize(); }
                return r;
            });
            return out.emit(reps);
        }
        if (twt->parsed()) {
            auto spec = load_spec(spec_path);
            auto pts = points_text == "default"
                           ? std::vector<cplx>{{0.05, 0.9}, {0.1, 0.95}, {-0.08, 0.88}}
                           : parse_points(points_text);
            std::vector<CheckReport> reps;
            for (const auto& psi : character_group(q)) {
                if (psi.is_principal()) continue;
                for (cplx z : pts) {
                    auto r = twist_transform_residual(spec, psi, z);
                    if (tol > 0.0) { r.tolerance = tol; r.finalize(); }
                    r.params["psi_exponents"] = psi.exps;
                    reps.push_back(std::move(r));
                }
            }
            return out.emit(reps);
        }
        if (dif->parsed()) {
            auto spec = load_spec(spec_path);
            auto pts = points_text == "default"
                           ? std::vector<cplx>{{0.0, 1.0}, {0.05, 0.9}, {-0.08, 0.88}}
                           : parse_points(points_text);
            auto reps = over_grid(pts, [&](cplx z) {
                auto r = difference_identity_residual(spec, q, shift_a, shift_b, z);
                if (tol > 0.0) { r.tolerance = tol; r.finalize(); }
                return r;
            });
            return out.emit(reps);
        }
        if (mel->parsed()) {
            auto spec = load_spec(spec_path);
            Rat alpha = parse_rat(alpha_text);
            auto grid = parse_grid(grid_text);
            // one transform shared across the grid so node values are reused
            std::vector<CheckReport> reps;
            for (cplx s : grid) {
                auto r = mellin_identity_residual(spec, w_shift, alpha, s);
                if (tol > 0.0) { r.tolerance = tol; r.finalize(); }
                reps.push_back(std::move(r));
            }
            return out.emit(reps);
        }
        if (cir->parsed()) {
            auto spec = load_spec(spec_path);
            auto pts = points_text == "default"
                           ? std::vector<cplx>{{0.0, 1.0}, {0.0, 2.0}, {0.5, 1.0}}
                           : parse_points(points_text);
            auto reps = over_grid(pts, [&](cplx z) {
                auto r = circle_integral_residual(spec, z, radius);
                if (tol > 0.0) { r.tolerance = tol; r.finalize(); }
                return r;
            });
            return out.emit(reps);
        }
        if (afe->parsed()) {
            SpectralParam nu = parse_nu(nu_re, nu_im);
            auto reps = over_grid(parse_grid(grid_text), [&](cplx s) {
                return additive_fe_residual(shift_a, q, cos_k, nu, s);
            });
            return out.emit(reps);
        }
        if (fee->parsed()) {
            SpectralParam nu = parse_nu(nu_re, nu_im);
            auto grid = parse_grid(grid_text);
            std::vector<CheckReport> reps;
            for (const auto& psi : character_group(q)) {
                if (!psi.is_primitive() || psi.modulus() == 1) continue;
                auto part = over_grid(grid, [&](cplx s) {
                    auto r = fe_eisenstein_residual(psi, nu, s);
                    r.params["psi_exponents"] = psi.exps;
                    return r;
                });
                reps.insert(reps.end(), part.begin(), part.end());
            }
            if (reps.empty()) throw PreconditionError("no primitive characters mod " +
                                                      std::to_string(q));
            return out.emit(reps);
        }
        if (dfe->parsed()) {
            auto grid = parse_grid(grid_text);
            std::vector<CheckReport> reps;
            for (const auto& psi : character_group(q)) {
                if (!psi.is_primitive() || psi.modulus() == 1) continue;
                auto part = over_grid(grid, [&](cplx s) {
                    auto r = dirichlet_fe_residual(psi, s);
                    r.params["psi_exponents"] = psi.exps;
                    return r;
                });
                reps.insert(reps.end(), part.begin(), part.end());
            }
            if (reps.empty()) throw PreconditionError("no primitive characters mod " +
                                                      std::to_string(q));
            return out.emit(reps);
        }
        if (qga->parsed()) {
            SpectralParam nu = parse_nu(nu_re, nu_im);
            return out.emit({quotient_gamma_residual(eps_psi, nu, parse_grid(grid_text))});
        }
        if (qep->parsed()) {
            auto grid = parse_grid(grid_text);
            std::vector<CheckReport> reps;
            for (const auto& psi : character_group(q)) {
                if (!psi.is_primitive() || psi.modulus() == 1) continue;
                for (cplx s : grid) {
                    auto r = quotient_fe_epsilon_residual(psi, conductor_m, s);
                    r.params["psi_exponents"] = psi.exps;
                    reps.push_back(std::move(r));
                }
            }
            if (reps.empty()) throw PreconditionError("no primitive characters mod " +
                                                      std::to_string(q));
            return out.emit(reps);
        }
        if (two->parsed()) {
            auto c1 = classify(build_m(3, 3, Rat(2), Rat(2), 2));
            auto c2 = classify(build_m(5, 5, Rat(2), Rat(3), 4));
            auto grid = two_circles_grid(c1.certificate->fixed_pt, c2.certificate->fixed_pt);
            std::function<cplx(cplx)> h;
            if (family == "constant") {
                h = [](cplx) { return cplx(1.5, 0.5); };
            } else if (family == "radial") {
                cplx f1 = c1.certificate->fixed_pt;
                h = [f1](cplx z) { return cplx(hyp_distance(z, f1), 0.0); };
            } else {
                throw ParameterError("family must be 'constant' or 'radial'");
            }
            Stopwatch sw;
            auto v = two_circles_test(h, *c1.certificate, *c2.certificate, grid, eps_grid);
            CheckReport rep;
            rep.check_name = "two-circles";
            rep.paper_anchor = "two elliptic rotations force constancy";
            rep.tolerance = eps_grid;
            rep.record(std::max(v.defect1, v.defect2), std::max(v.defect1, v.defect2));
            rep.params = {{"family", family},
                          {"verdict", v.verdict},
                          {"defect1", v.defect1},
                          {"defect2", v.defect2},
                          {"spread", v.spread},
                          {"spread_allowance", v.spread_allowance}};
            // the check passes when the verdict matches the family
            rep.pass = (family == "constant" && v.verdict == "consistent with constant") ||
                       (family == "radial" && v.verdict == "not invariant under m2");
            rep.runtime_ms = sw.ms();
            return out.emit({rep});
        }
        if (ell->parsed()) {
            Stopwatch sw;
            auto em = build_m_exact(hy_q, hy_s, parse_rat(hy_r), parse_rat(hy_rt), hy_n);
            auto res = classify(em.approx());
            CheckReport rep;
            rep.check_name = "ellipticity";
            rep.paper_anchor = "elliptic family matrices and orbit density";
            rep.tolerance = 1e-12;
            rep.params = {{"q", hy_q}, {"s", hy_s}, {"r", parse_rat(hy_r).str()},
                          {"rtilde", parse_rat(hy_rt).str()}, {"N", hy_n},
                          {"det", em.det().str()}, {"trace", em.trace().str()},
                          {"type", res.type}};
            if (res.certificate) {
                const auto& cert = *res.certificate;
                double fixres = std::abs(act(cert.matrix, cert.fixed_pt) - cert.fixed_pt);
                rep.record(fixres, fixres);
                rep.params["rotation_angle"] = cert.rotation_angle;
                rep.params["infinite_order"] = cert.infinite_order;
                rep.params["order_rationale"] = cert.order_rationale;
                if (cert.infinite_order && iterates >= 2)
                    rep.params["orbit_angle_gap"] =
                        orbit_angle_gap(cert, static_cast<int>(iterates), cplx(0.0, 1.0));
            }
            rep.finalize();
            rep.pass = rep.pass && res.type == "elliptic";
            rep.runtime_ms = sw.ms();
            return out.emit({rep});
        }

        // specfun / report ----------------------------------------------
        if (specfun->parsed()) {
            return out.emit({specfun_selftest()});
        }
        if (merge->parsed()) {
            json all = json::array();
            bool pass = true;
            for (const auto& p : merge_inputs) {
                std::ifstream in(p);
                if (!in) throw FormatError("cannot open " + p);
                json doc;
                try {
                    in >> doc;
                } catch (const json::exception& e) {
                    throw FormatError(std::string("bad report JSON in ") + p + ": " + e.what());
                }
                if (!doc.contains("reports") || !doc.contains("pass"))
                    throw FormatError("not a maasskit report: " + p);
                pass = pass && doc.at("pass").get<bool>();
                for (auto& r : doc.at("reports")) all.push_back(r);
            }
            json doc{{"pass", pass}, {"seed", out.seed}, {"reports", all}};
            if (out.path.empty()) {
                std::cout << doc.dump(2) << '\n';
            } else {
                std::ofstream o(out.path);
                if (!o) throw FormatError("cannot write " + out.path);
                o << doc.dump(2) << '\n';
            }
            return pass ? kExitPass : kExitCheckFailure;
        }
    } catch (const ParameterError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const FormatError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const PreconditionError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SanityBoundViolation& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const RelationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const BadPrimeUnsupported& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const MissingEigenvalue& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        // quadrature / convergence / continuation / pole / singular-system
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    std::cerr << "no subcommand executed\n";
    return kExitValidation;
}
