#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <unordered_map>
#include <vector>

#include "maasskit/characters.hpp"
#include "maasskit/errors.hpp"
#include "maasskit/hyperbolic.hpp"
#include "maasskit/lseries.hpp"
#include "maasskit/report.hpp"
#include "maasskit/specfun.hpp"

namespace maasskit {

// cos^(k) at the exact rational angle 2 pi x, reduced mod 1 before the trig
// call so large numerators stay accurate.
inline double cosk_angle(long k, long n, const Rat& x) {
    long long num = static_cast<long long>(n) * x.num % x.den;
    return cosk(k, 2.0 * kPi * static_cast<double>(num) / static_cast<double>(x.den));
}

// Residues of the completed L-functions; for nu = 0 the four slots hold
// (Res_{s=0} Lambda_f, Res_{s=0} s Lambda_f, Res_{s=0} Lambda_g,
//  Res_{s=0} s Lambda_g) instead.
struct ResidueData {
    cplx f_minus_nu, f_plus_nu, g_one_plus_nu, g_one_minus_nu;
};

// The Fourier-Whittaker object (f, g) of the converse theorem.
struct MaassSpec {
    long level = 1;
    int parity = 0;  // eps
    SpectralParam nu;
    DirichletCharacter chi;
    CoeffSeq a, b;
    ResidueData residues;

    MaassSpec(long n, int eps, SpectralParam v, DirichletCharacter neben, CoeffSeq aa,
              CoeffSeq bb, ResidueData res)
        : level(n), parity(eps), nu(v), chi(std::move(neben)), a(std::move(aa)),
          b(std::move(bb)), residues(res) {
        if (level < 1) throw ParameterError("level must be positive");
        if (parity != 0 && parity != 1) throw ParameterError("parity must be 0 or 1");
        if (chi.modulus() != level) throw ParameterError("nebentypus modulus must equal level");
        if (chi.parity() != 0) throw ParameterError("nebentypus must be even in weight 0");
        a.validate();
        b.validate();
    }
};

enum class Side { f, g };

inline const CoeffSeq& coeffs_of(const MaassSpec& spec, Side side) {
    return side == Side::f ? spec.a : spec.b;
}

inline cplx constant_term(const MaassSpec& spec, Side side, double y) {
    if (!(y > 0.0)) throw DomainError("constant term needs y > 0");
    if (spec.parity == 1) return 0.0;
    const auto& r = spec.residues;
    cplx v = spec.nu.nu;
    if (spec.nu.is_zero()) {
        cplx res = side == Side::f ? r.f_minus_nu : r.g_one_plus_nu;
        cplx res_s = side == Side::f ? r.f_plus_nu : r.g_one_minus_nu;
        return std::sqrt(y) * (-res + res_s * std::log(y));
    }
    cplx yp = std::pow(y, 0.5 + v), ym = std::pow(y, 0.5 - v);
    if (side == Side::f) return -r.f_minus_nu * yp - r.f_plus_nu * ym;
    double n = static_cast<double>(spec.level);
    return std::pow(n, 0.5 + v) * r.g_one_plus_nu * yp +
           std::pow(n, 0.5 - v) * r.g_one_minus_nu * ym;
}

struct TruncationPlan {
    std::size_t n_max = 0;
    double tail_bound = 0.0;
};

// Evaluation points below this height are refused: the certified truncation
// cost explodes as y -> 0.
inline constexpr double kMinHeight = 0.02;

// Tail bound from |a_n| <= C n^sigma and the Whittaker envelope
// |W_nu(u)| <= 2 e^{-2 pi u} (valid for |Re nu| <= 1/2, 2 pi u >= 1/2):
// each term is at most 2 C n^{sigma - 1/2} e^{-2 pi n y}, summed by a
// geometric comparison.
inline TruncationPlan plan_truncation(double c, double sigma, double y, double abs_tol) {
    if (!(y >= kMinHeight))
        throw PreconditionError("evaluation height below refusal threshold 0.02");
    double p = std::max(sigma - 0.5, 0.0);
    std::size_t n = std::max<std::size_t>(8, static_cast<std::size_t>(1.0 / y));
    for (; n < 20000000; n = n + 1 + n / 8) {
        double dn = static_cast<double>(n);
        double rho = std::pow(1.0 + 1.0 / dn, p) * std::exp(-2.0 * kPi * y);
        if (rho >= 1.0) continue;
        double first = 2.1 * c * std::pow(dn + 1.0, sigma - 0.5) *
                       std::exp(-2.0 * kPi * (dn + 1.0) * y);
        double bound = first / (1.0 - rho);
        if (bound < abs_tol) return {n, bound};
    }
    throw PreconditionError("truncation plan does not certify at this height/tolerance");
}

// Whittaker part of f or g: (-i)^eps sum a_n/sqrt(n) W_nu(n y) cos^(eps)(2 pi n x).
inline cplx eval_whittaker(const MaassSpec& spec, Side side, cplx z,
                           const Precision& tol = Precision{}) {
    double y = z.imag(), x = z.real();
    const CoeffSeq& cs = coeffs_of(spec, side);
    TruncationPlan plan = plan_truncation(cs.bound_constant, cs.growth_exponent, y, tol.abs_tol);
    if (plan.n_max > cs.size()) throw InsufficientCoefficients(plan.n_max);
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= plan.n_max; ++n) {
        double dn = static_cast<double>(n);
        sum += cs.at(n) / std::sqrt(dn) * whittaker_w_fast(spec.nu.nu, dn * y) *
               cosk(spec.parity, 2.0 * kPi * dn * x);
    }
    cplx phase = spec.parity == 0 ? cplx(1.0) : cplx(0.0, -1.0);
    return phase * sum;
}

inline cplx eval(const MaassSpec& spec, Side side, cplx z, const Precision& tol = Precision{}) {
    if (!(z.imag() > 0.0)) throw DomainError("evaluation point must be in the upper half-plane");
    return constant_term(spec, side, z.imag()) + eval_whittaker(spec, side, z, tol);
}

// psi-twisted series f_psi(z) = sum_{n != 0} psi(n) a_n / (2 sqrt|n|) W_nu(n y) e(n x),
// folded over +-n using a_{-n} = (-1)^eps a_n and psi(-n) = psi(-1) psi(n).
inline cplx eval_twisted(const MaassSpec& spec, Side side, const DirichletCharacter& psi,
                         cplx z, const Precision& tol = Precision{}) {
    double y = z.imag(), x = z.real();
    if (!(y > 0.0)) throw DomainError("evaluation point must be in the upper half-plane");
    const CoeffSeq& cs = coeffs_of(spec, side);
    TruncationPlan plan = plan_truncation(cs.bound_constant, cs.growth_exponent, y, tol.abs_tol);
    if (plan.n_max > cs.size()) throw InsufficientCoefficients(plan.n_max);
    double sign = psi.value(-1).real() * (spec.parity == 0 ? 1.0 : -1.0);
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= plan.n_max; ++n) {
        long ln = static_cast<long>(n);
        if (!psi.defined_at(ln)) continue;
        double dn = static_cast<double>(n);
        double t = 2.0 * kPi * dn * x;
        cplx osc = cplx(std::cos(t), std::sin(t)) + sign * cplx(std::cos(t), -std::sin(t));
        sum += psi.value(ln) * cs.at(n) / (2.0 * std::sqrt(dn)) *
               whittaker_w_fast(spec.nu.nu, dn * y) * osc;
    }
    return sum;
}

inline cplx slash(const Moebius& gamma, const std::function<cplx(cplx)>& fn, cplx z) {
    return fn(act(gamma, z));
}

// |f(z) - g(-1/Nz)|, normalized.
inline CheckReport involution_residual(const MaassSpec& spec, cplx z,
                                       const Precision& tol = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "involution";
    rep.paper_anchor = "fricke involution f(z) = g(-1/Nz)";
    rep.tolerance = 1e-7;
    cplx zg = -1.0 / (static_cast<double>(spec.level) * z);
    cplx lhs = eval(spec, Side::f, z, tol);
    cplx rhs = eval(spec, Side::g, zg, tol);
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"z_re", z.real()}, {"z_im", z.imag()}, {"level", spec.level}};
    rep.grid.push_back({{"lhs_re", lhs.real()}, {"lhs_im", lhs.imag()},
                        {"rhs_re", rhs.real()}, {"rhs_im", rhs.imag()}});
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// f_psi(z) = chi(q) psi(-N) (tau(psi)/tau(conj psi)) g_{conj psi}(-1/(N q^2 z)).
inline CheckReport twist_transform_residual(const MaassSpec& spec, const DirichletCharacter& psi,
                                            cplx z, const Precision& tol = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "twist-transform";
    rep.paper_anchor = "character-twisted fricke transformation";
    rep.tolerance = 1e-6;
    long q = psi.modulus();
    if (psi.is_principal()) throw PreconditionError("twist transform needs a non-principal character");
    if (std::gcd(q, spec.level) != 1) throw PreconditionError("modulus must be coprime to the level");
    double nq2 = static_cast<double>(spec.level) * q * q;
    cplx zg = -1.0 / (nq2 * z);
    cplx lhs = eval_twisted(spec, Side::f, psi, z, tol);
    auto psibar = psi.conj();
    cplx factor = spec.chi.value(q) * psi.value(-spec.level) * gauss_sum(psi) / gauss_sum(psibar);
    cplx rhs = factor * eval_twisted(spec, Side::g, psibar, zg, tol);
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"q", q}, {"z_re", z.real()}, {"z_im", z.imag()}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// f(z + a/q) - f(z + b/q) = chi(q)/(q-1) sum_{psi != psi0} psi(-N)
//   (psi(a) - psi(b)) tau(psi) g_{conj psi}(-1/(N q^2 z)).
inline CheckReport difference_identity_residual(const MaassSpec& spec, long q, long a, long b,
                                                cplx z, const Precision& tol = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "difference";
    rep.paper_anchor = "additive shift difference identity";
    rep.tolerance = 1e-6;
    if (!is_prime(q) || q % 2 == 0 || std::gcd(q, spec.level) != 1)
        throw PreconditionError("q must be an odd prime coprime to the level");
    if (std::gcd(a * b, q) != 1) throw PreconditionError("need gcd(ab, q) = 1");
    double dq = static_cast<double>(q);
    cplx lhs = eval(spec, Side::f, z + 1.0 / dq * static_cast<double>(a), tol) -
               eval(spec, Side::f, z + 1.0 / dq * static_cast<double>(b), tol);
    cplx zg = -1.0 / (static_cast<double>(spec.level) * dq * dq * z);
    cplx sum = 0.0;
    for (const auto& psi : character_group(q)) {
        if (psi.is_principal()) continue;
        cplx coeff = psi.value(-spec.level) * (psi.value(a) - psi.value(b)) * gauss_sum(psi);
        if (coeff == 0.0) continue;
        sum += coeff * eval_twisted(spec, Side::g, psi.conj(), zg, tol);
    }
    cplx rhs = spec.chi.value(q) / (dq - 1.0) * sum;
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"q", q}, {"a", a}, {"b", b}, {"z_re", z.real()}, {"z_im", z.imag()}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// ---- Mellin-transform identity ------------------------------------------

// Left-hand side of the Mellin identity for the truncated Whittaker sum h:
// int_0^inf h(iy + wy + alpha) y^{s - 1/2} dy/y, computed as a trapezoid in
// t = log y. Node values of h are cached so a whole s-grid reuses them.
class MellinTransform {
public:
    MellinTransform(const MaassSpec& spec, Side side, double w, Rat alpha)
        : spec_(spec), side_(side), w_(w), alpha_(alpha) {}

    cplx lhs(cplx s, const Precision& prec = quadrature_precision()) {
        const CoeffSeq& cs = coeffs_of(spec_, side_);
        double abs_nu = std::abs(spec_.nu.nu.real());
        double decay0 = s.real() - abs_nu;
        if (!(decay0 > 0.1)) throw DomainError("Mellin integral outside convergence strip");
        double coeff_mass = 1.0;
        for (std::size_t n = 1; n <= cs.size(); ++n) coeff_mass += std::abs(cs.at(n));
        // bounds depend on Re s only, so one node cache serves a whole
        // fixed-Re grid; a change of bounds invalidates the cache
        double t_lo = -(40.0 + std::log(coeff_mass)) / std::min(decay0, 1.0);
        double t_hi = std::log(12.0 + std::abs(s.real()));
        if (t_lo != t_lo_ || t_hi != t_hi_) {
            cache_.clear();
            t_lo_ = t_lo;
            t_hi_ = t_hi;
        }

        std::size_t n = 128;
        const std::size_t n_fine = 128u << 9;  // finest cache resolution
        cplx prev = 0.0;
        for (std::size_t level = 0;; ++level) {
            double h = (t_hi - t_lo) / static_cast<double>(n);
            cplx sum = 0.5 * (sample(0, n_fine, t_lo, t_hi) * std::exp(t_lo * (s - 0.5)) +
                              sample(n_fine, n_fine, t_lo, t_hi) * std::exp(t_hi * (s - 0.5)));
            for (std::size_t i = 1; i < n; ++i) {
                double t = t_lo + h * static_cast<double>(i);
                sum += sample(i * (n_fine / n), n_fine, t_lo, t_hi) * std::exp(t * (s - 0.5));
            }
            cplx val = h * sum;
            if (level > 1 && std::abs(val - prev) <= prec.rel_tol * std::abs(val) + prec.abs_tol)
                return val;
            if (n >= n_fine) throw QuadratureError("Mellin integral stalled");
            prev = val;
            n *= 2;
        }
    }

    // Right-hand side: the two-term hypergeometric-weighted sum over j,
    // evaluated with the same truncated coefficient set.
    cplx rhs(cplx s, const Precision& prec = Precision{}) const {
        const CoeffSeq& cs = coeffs_of(spec_, side_);
        cplx v = spec_.nu.nu;
        cplx total = 0.0;
        for (int j = 0; j < 2; ++j) {
            double shift = static_cast<double>((j + spec_.parity) % 2);
            if (shift == 1.0 && w_ == 0.0) continue;
            cplx lsum = 0.0;
            for (std::size_t n = 1; n <= cs.size(); ++n) {
                double weight = cosk_angle(j, static_cast<long>(n), alpha_);
                if (weight == 0.0) continue;
                lsum += weight * cs.at(n) * std::pow(static_cast<double>(n), -s);
            }
            cplx gamma = gamma_r(s + shift + v) * gamma_r(s + shift - v);
            cplx f = hyp2f1(0.5 * (s + v + shift), 0.5 * (s - v + shift), 0.5 + shift,
                            -w_ * w_, prec);
            // i^{-j} times the odd-term constant i pi of the K-sine Mellin
            // closed form; for j = 1, eps = 0 this collapses to +pi.
            cplx ij = j == 0 ? cplx(1.0) : cplx(0.0, -1.0);
            cplx odd_constant = shift == 1.0 ? cplx(0.0, kPi) : cplx(1.0);
            total += ij * odd_constant * std::pow(2.0 * w_, shift) * gamma * lsum * f;
        }
        return total;
    }

private:
    cplx sample(std::size_t idx, std::size_t n_fine, double t_lo, double t_hi) {
        auto it = cache_.find(idx);
        if (it != cache_.end()) return it->second;
        double t = t_lo + (t_hi - t_lo) * static_cast<double>(idx) / static_cast<double>(n_fine);
        double y = std::exp(t);
        cplx val = h_value(y);
        cache_.emplace(idx, val);
        return val;
    }

    // h(iy + wy + alpha) for the truncated series, with per-height cutoff of
    // fully decayed terms.
    cplx h_value(double y) const {
        const CoeffSeq& cs = coeffs_of(spec_, side_);
        std::size_t cutoff = cs.size();
        double lim = 45.0 / (2.0 * kPi * y);
        if (lim < static_cast<double>(cutoff)) cutoff = static_cast<std::size_t>(lim) + 1;
        cplx sum = 0.0;
        for (std::size_t n = 1; n <= cutoff; ++n) {
            double dn = static_cast<double>(n);
            double angle_shift = 2.0 * kPi * dn * w_ * y;
            // cos^(eps)(2 pi n (w y + alpha)) by the addition law, keeping the
            // rational part of the angle exact
            long long num = static_cast<long long>(n) * alpha_.num % alpha_.den;
            double a = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(alpha_.den);
            double c = spec_.parity == 0
                           ? std::cos(angle_shift + a)
                           : -std::sin(angle_shift + a);
            sum += cs.at(n) / std::sqrt(dn) * whittaker_w_fast(spec_.nu.nu, dn * y) * c;
        }
        cplx phase = spec_.parity == 0 ? cplx(1.0) : cplx(0.0, -1.0);
        return phase * sum;
    }

    const MaassSpec& spec_;
    Side side_;
    double w_;
    Rat alpha_;
    double t_lo_ = 0.0, t_hi_ = 0.0;
    std::unordered_map<std::size_t, cplx> cache_;
};

inline CheckReport mellin_identity_residual(const MaassSpec& spec, double w, const Rat& alpha,
                                            cplx s, const Precision& prec = quadrature_precision()) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "mellin";
    rep.paper_anchor = "mellin transform of shifted whittaker series";
    rep.tolerance = 1e-6;
    MellinTransform mt(spec, Side::f, w, alpha);
    cplx lhs = mt.lhs(s, prec);
    cplx rhs = mt.rhs(s);
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"w", w}, {"alpha", alpha.str()}, {"s_re", s.real()}, {"s_im", s.imag()}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// ---- Circle integral -----------------------------------------------------

// f~(z) - g~(-1/Nz) = (2w)^eps/(2 pi i) \oint Lambda_f(s) 2F1(...; -w^2)
// y^{1/2-s} ds over a circle enclosing the four poles; Eisenstein family only
// (that is the corpus with a continuable Lambda).
inline CheckReport circle_integral_residual(const MaassSpec& spec, cplx z, double radius = 1.25,
                                            const Precision& tol = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "circle-integral";
    rep.paper_anchor = "contour integral of the completed L-function";
    rep.tolerance = 1e-7;
    if (spec.level != 1 || spec.parity != 0)
        throw PreconditionError("circle integral implemented for the level-1 even family");
    double y = z.imag(), w = z.real() / z.imag();
    if (w < 0.0) throw PreconditionError("needs Re z >= 0");
    cplx v = spec.nu.nu;

    std::vector<cplx> poles = {v, -v, 1.0 + v, 1.0 - v};
    int enclosed = 0;
    for (cplx p : poles) {
        double d = std::abs(p - 0.5);
        if (std::abs(d - radius) < 1e-3) throw PoleOnContour(p);
        if (d < radius) ++enclosed;
    }

    cplx lhs = eval_whittaker(spec, Side::f, z, tol) -
               eval_whittaker(spec, Side::g, -1.0 / z, tol);

    auto trivial = character_group(1).front();
    const int nodes = 512;
    cplx acc = 0.0;
    for (int jn = 0; jn < nodes; ++jn) {
        double th = 2.0 * kPi * jn / nodes;
        cplx e(std::cos(th), std::sin(th));
        cplx s = 0.5 + radius * e;
        cplx lam = continued_lambda_eisenstein(trivial, spec.nu, s, tol);
        cplx f = hyp2f1(0.5 * (s + v), 0.5 * (s - v), 0.5, -w * w, tol);
        acc += lam * f * std::pow(y, 0.5 - s) * e;
    }
    cplx rhs = radius / nodes * acc;  // (2w)^0 = 1 for the even family
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"z_re", z.real()}, {"z_im", z.imag()}, {"radius", radius},
                  {"poles_enclosed", enclosed}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace maasskit
