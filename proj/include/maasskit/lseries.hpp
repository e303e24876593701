#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "maasskit/characters.hpp"
#include "maasskit/errors.hpp"
#include "maasskit/precision.hpp"
#include "maasskit/rational.hpp"
#include "maasskit/report.hpp"
#include "maasskit/specfun.hpp"

namespace maasskit {

// k-th derivative of cosine.
inline double cosk(long k, double x) {
    switch (((k % 4) + 4) % 4) {
        case 0: return std::cos(x);
        case 1: return -std::sin(x);
        case 2: return -std::cos(x);
        default: return std::sin(x);
    }
}

// Coefficient sequence a_1, a_2, ... with a stored growth bound |a_n| <= C n^sigma.
struct CoeffSeq {
    std::vector<cplx> values;  // values[0] is a_1
    double bound_constant = 1.0;
    double growth_exponent = 0.0;

    std::size_t size() const { return values.size(); }
    cplx at(std::size_t n) const { return values.at(n - 1); }

    void validate() const {
        if (values.empty()) throw ParameterError("coefficient sequence must be nonempty");
        if (!(bound_constant > 0.0)) throw ParameterError("bound constant must be positive");
        for (std::size_t n = 1; n <= values.size(); ++n)
            if (std::abs(values[n - 1]) >
                bound_constant * std::pow(static_cast<double>(n), growth_exponent) + 1e-12)
                throw SanityBoundViolation("coefficient exceeds declared growth bound at n=" +
                                           std::to_string(n));
    }
};

struct Twist {
    enum class Kind { none, multiplicative, additive } kind = Kind::none;
    std::optional<DirichletCharacter> psi;  // multiplicative
    Rat alpha{0, 1};                        // additive
    long k = 0;                             // additive: cos^(k); parity index

    static Twist none() { return {}; }
    static Twist mult(DirichletCharacter c) {
        Twist t;
        t.kind = Kind::multiplicative;
        t.psi = std::move(c);
        return t;
    }
    static Twist additive(Rat a, long k) {
        Twist t;
        t.kind = Kind::additive;
        t.alpha = a;
        t.k = k;
        return t;
    }

    // parity index entering the gamma-factor shift [eps + k]
    long parity_index() const {
        switch (kind) {
            case Kind::none: return 0;
            case Kind::multiplicative: return psi->parity();
            default: return k;
        }
    }
};

struct GammaFactor {
    int parity_shift;  // [k + eps] in {0, 1}
    SpectralParam nu;

    GammaFactor(int shift, SpectralParam n) : parity_shift(shift), nu(n) {
        if (shift != 0 && shift != 1) throw ParameterError("parity shift must be 0 or 1");
    }
};

inline cplx gamma_factor(const GammaFactor& gf, cplx s) {
    double sh = gf.parity_shift;
    return gamma_r(s + sh + gf.nu.nu) * gamma_r(s + sh - gf.nu.nu);
}

struct DirichletValue {
    cplx value;
    double tail_bound;
};

// Partial Dirichlet sum with certified integral tail bound; only valid in the
// convergence half-plane Re s >= sigma + 1 + margin.
inline DirichletValue dirichlet_sum(const CoeffSeq& coeffs, const Twist& twist, cplx s,
                                    const Precision& prec = Precision{},
                                    double margin = 0.25) {
    double sig = coeffs.growth_exponent;
    if (s.real() < sig + 1.0 + margin)
        throw ConvergenceError("dirichlet_sum outside certified convergence region");
    std::size_t n_stored = coeffs.size();
    double decay = s.real() - sig - 1.0;
    auto tail = [&](double n) {
        return coeffs.bound_constant * std::pow(n, -decay) / decay;
    };
    if (tail(static_cast<double>(n_stored)) > prec.abs_tol) {
        double need = std::pow(coeffs.bound_constant / (prec.abs_tol * decay), 1.0 / decay);
        need = std::min(std::ceil(need), 9.0e18);  // keep the size_t cast well-defined
        throw InsufficientCoefficients(static_cast<std::size_t>(need));
    }
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= n_stored; ++n) {
        cplx weight = 1.0;
        switch (twist.kind) {
            case Twist::Kind::none: break;
            case Twist::Kind::multiplicative:
                weight = twist.psi->value(static_cast<long>(n));
                break;
            case Twist::Kind::additive:
                weight = cosk(twist.k, 2.0 * kPi * static_cast<double>(n) * twist.alpha.value());
                break;
        }
        if (weight == 0.0) continue;
        sum += weight * coeffs.at(n) * std::pow(static_cast<double>(n), -s);
    }
    return {sum, tail(static_cast<double>(n_stored))};
}

// Gamma factor times Dirichlet series; direct evaluation, convergence region only.
inline cplx completed_lambda(const CoeffSeq& coeffs, const Twist& twist, int eps,
                             const SpectralParam& nu, cplx s,
                             const Precision& prec = Precision{}) {
    int shift = static_cast<int>((eps + twist.parity_index()) % 2);
    return gamma_factor(GammaFactor(shift, nu), s) * dirichlet_sum(coeffs, twist, s, prec).value;
}

// Character-sum assembly of the completed additive twist:
//   Lambda_f(s, a/q, cos^(k)) = i^k/(q-1) sum_{psi != psi0, psi(-1)=(-1)^k}
//       tau(conj psi) psi(a) Lambda_f(s, psi)
//     + [k even] (-1)^{k/2} (Lambda_f(s) - q/(q-1) Lambda_f(s, psi0)).
inline cplx additive_completion_assembled(const CoeffSeq& coeffs, long a, long q, long k,
                                          int eps, const SpectralParam& nu, cplx s,
                                          const Precision& prec = Precision{}) {
    if (!is_prime(q) || q % 2 == 0) throw ParameterError("assembly requires odd prime q");
    auto chars = character_group(q);
    cplx sum = 0.0;
    for (const auto& psi : chars) {
        if (psi.is_principal() || psi.parity() != (k % 2)) continue;
        sum += gauss_sum(psi.conj()) * psi.value(a) *
               completed_lambda(coeffs, Twist::mult(psi), eps, nu, s, prec);
    }
    cplx ik = std::pow(cplx(0.0, 1.0), static_cast<double>(k % 4));
    cplx out = ik / (q - 1.0) * sum;
    if (k % 2 == 0) {
        const auto& psi0 = chars.front();  // lexicographically first = principal
        cplx plain = completed_lambda(coeffs, Twist::none(), eps, nu, s, prec);
        cplx principal = completed_lambda(coeffs, Twist::mult(psi0), eps, nu, s, prec);
        double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        out += sign * (plain - static_cast<double>(q) / (q - 1.0) * principal);
    }
    return out;
}

// L(s, psi) continued to the plane through Hurwitz zeta values at a/q.
inline cplx dirichlet_l(const DirichletCharacter& psi, cplx s,
                        const Precision& prec = Precision{}) {
    long q = psi.modulus();
    if (psi.is_principal() && psi.conductor() == 1 && q == 1) {
        return riemann_zeta(s, prec);
    }
    if (std::abs(s - 1.0) < 1e-10) {
        if (psi.is_principal()) throw PoleError(1.0, "principal L-function pole at s = 1");
        // each Hurwitz term has a pole at s = 1 but the character sum kills it:
        // L(1, psi) = -(1/q) sum_a psi(a) digamma(a/q)
        cplx sum1 = 0.0;
        for (long a = 1; a <= q; ++a) {
            if (!psi.defined_at(a)) continue;
            sum1 += psi.value(a) * digamma(static_cast<double>(a) / q);
        }
        return -sum1 / static_cast<double>(q);
    }
    cplx sum = 0.0;
    for (long a = 1; a <= q; ++a) {
        if (!psi.defined_at(a)) continue;
        sum += psi.value(a) * hurwitz_zeta(s, static_cast<double>(a) / q, prec);
    }
    return std::pow(static_cast<double>(q), -s) * sum;
}

// Completed Lambda_f(s, psi) for the Eisenstein coefficient family
// a_n = sigma_{2 nu}(n) n^{-nu} (so L_f(s, psi) = L(s+nu, psi) L(s-nu, psi)),
// valid on the whole plane. psi may be trivial, primitive, or principal mod a
// prime (imprimitive case handled by stripping the Euler factor at q).
inline cplx continued_lambda_eisenstein(const DirichletCharacter& psi, const SpectralParam& nu,
                                        cplx s, const Precision& prec = Precision{}) {
    long q = psi.modulus();
    int shift = psi.parity();  // eps = 0 for the Eisenstein family
    cplx v = nu.nu;
    if (psi.is_principal()) {
        for (cplx pole : {v, -v, 1.0 + v, 1.0 - v})
            if (std::abs(s - pole) < 1e-6) throw PoleError(pole, "Eisenstein Lambda pole");
        cplx val = gamma_r(s + v) * gamma_r(s - v) * riemann_zeta(s + v, prec) *
                   riemann_zeta(s - v, prec);
        if (q > 1) {
            if (!is_prime(q)) throw ParameterError("principal twist supported for prime modulus only");
            double dq = static_cast<double>(q);
            val *= (1.0 - std::pow(dq, -s - v)) * (1.0 - std::pow(dq, -s + v));
        }
        return val;
    }
    if (!psi.is_primitive()) throw ParameterError("non-principal twist must be primitive");
    double sh = static_cast<double>(shift);
    return gamma_r(s + sh + v) * gamma_r(s + sh - v) * dirichlet_l(psi, s + v, prec) *
           dirichlet_l(psi, s - v, prec);
}

// Closed form of the Mellin transform
//   4 int_0^inf K_nu(2y) cos^(k)(2wy) y^s dy/y
//     = i^k (2 i pi w)^{[k]} pi^s Gamma_R(s+[k]+nu) Gamma_R(s+[k]-nu)
//       2F1((s+nu+[k])/2, (s-nu+[k])/2; 1/2+[k]; -w^2).
// The even case is the classical K-cosine table integral; the odd case
// reduces to the K-sine integral, whose constant (2 i pi w)^{[k]} = i pi 2w
// is pinned against direct quadrature (see the paired oracle below).
// The gamma shift is parity-of-k regardless of eps: [k+2eps] = [k].
inline cplx mellin_kcos(const SpectralParam& nu, int eps, long k, double w, cplx s,
                        const Precision& prec = Precision{}) {
    if (eps != 0 && eps != 1) throw ParameterError("eps must be 0 or 1");
    double shift = static_cast<double>(((k % 2) + 2) % 2);
    cplx ik = std::pow(cplx(0.0, 1.0), static_cast<double>(((k % 4) + 4) % 4));
    if (shift == 1.0 && w == 0.0) return 0.0;
    cplx gamma = gamma_r(s + shift + nu.nu) * gamma_r(s + shift - nu.nu);
    cplx f = hyp2f1(0.5 * (s + nu.nu + shift), 0.5 * (s - nu.nu + shift), 0.5 + shift,
                    -w * w, prec);
    cplx odd_constant = shift == 1.0 ? cplx(0.0, kPi) : cplx(1.0);
    return ik * odd_constant * std::pow(2.0 * w, shift) * std::pow(kPi, s) * gamma * f;
}

// Direct quadrature of the same integral (oracle for the closed form);
// requires the convergence strip Re s > |Re nu| - [k].
inline cplx mellin_kcos_quadrature(const SpectralParam& nu, long k, double w, cplx s,
                                   const Precision& prec = quadrature_precision()) {
    double shift = static_cast<double>(((k % 2) + 2) % 2);
    double zero_extra = (w != 0.0) ? shift : 0.0;  // cos^(odd)(2wy) ~ y at 0
    double decay0 = s.real() - std::abs(nu.nu.real()) + zero_extra;
    if (!(decay0 > 0.05)) throw DomainError("Mellin quadrature outside convergence strip");
    // y = e^t; K decays once 2y > ~40; the power-law blow-up at 0 shrinks
    // like e^{decay0 * t}.
    double t_hi = std::log(25.0 + 2.0 * std::abs(s));
    double t_lo = -42.0 / std::min(decay0, 1.0);
    auto integrand = [&](double t) -> cplx {
        double y = std::exp(t);
        double c = cosk(k, 2.0 * w * y);
        if (c == 0.0 && shift == 1.0 && w == 0.0) return 0.0;
        return 4.0 * bessel_k_fast(nu.nu, 2.0 * y) * c * std::exp(t * s);
    };
    std::size_t n = 64;
    cplx prev = 0.0;
    for (std::size_t level = 0;; ++level) {
        double h = (t_hi - t_lo) / static_cast<double>(n);
        cplx sum = 0.5 * (integrand(t_lo) + integrand(t_hi));
        for (std::size_t i = 1; i < n; ++i) sum += integrand(t_lo + h * static_cast<double>(i));
        cplx val = h * sum;
        if (level > 2 && std::abs(val - prev) <= prec.rel_tol * std::abs(val) + prec.abs_tol * 0.01)
            return val;
        if (level + 1 >= prec.quad_levels) throw QuadratureError("Mellin quadrature stalled");
        prev = val;
        n *= 2;
    }
}

// Twisted functional equation specialized to the level-1 Eisenstein family
// (N = 1, trivial nebentypus, eps = 0, g = f):
//   Lambda_f(s, psi) = (tau(psi)/tau(conj psi)) (q^2)^{1/2-s} Lambda_f(1-s, conj psi).
inline CheckReport fe_eisenstein_residual(const DirichletCharacter& psi, const SpectralParam& nu,
                                          cplx s, const Precision& prec = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "fe-eisenstein";
    rep.paper_anchor = "twisted functional equation, Eisenstein specialization";
    rep.tolerance = 1e-7;
    if (psi.modulus() <= 1 || !psi.is_primitive())
        throw PreconditionError("need a primitive character of modulus > 1");
    double q = static_cast<double>(psi.modulus());
    cplx lhs = continued_lambda_eisenstein(psi, nu, s, prec);
    cplx factor = gauss_sum(psi) / gauss_sum(psi.conj()) * std::pow(q * q, 0.5 - s);
    cplx rhs = factor * continued_lambda_eisenstein(psi.conj(), nu, 1.0 - s, prec);
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"q", psi.modulus()}, {"nu_re", nu.nu.real()}, {"nu_im", nu.nu.imag()},
                  {"s_re", s.real()}, {"s_im", s.imag()}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// Functional equation of the completed additive twist for the Eisenstein
// family: the character-sum assembly at s against the reflected character
// sum at 1-s, with the identical k-even correction on both sides.
inline CheckReport additive_fe_residual(long a, long q, long k, const SpectralParam& nu, cplx s,
                                        const Precision& prec = Precision{}) {
    Stopwatch sw;
    CheckReport rep;
    rep.check_name = "additive-fe";
    rep.paper_anchor = "functional equation of the completed additive twists";
    rep.tolerance = 1e-7;
    if (!is_prime(q) || q % 2 == 0) throw ParameterError("q must be an odd prime");
    if (std::gcd(a, q) != 1) throw ParameterError("need gcd(a,q)=1");
    auto chars = character_group(q);
    cplx ik = std::pow(cplx(0.0, 1.0), static_cast<double>(((k % 4) + 4) % 4));
    double dq = static_cast<double>(q);
    cplx lsum = 0.0, rsum = 0.0;
    for (const auto& psi : chars) {
        if (psi.is_principal() || psi.parity() != (k % 2)) continue;
        lsum += gauss_sum(psi.conj()) * psi.value(a) *
                continued_lambda_eisenstein(psi, nu, s, prec);
        rsum += psi.value(a) * gauss_sum(psi) *
                continued_lambda_eisenstein(psi.conj(), nu, 1.0 - s, prec);
    }
    cplx lhs = ik / (dq - 1.0) * lsum;
    cplx rhs = ik * std::pow(dq * dq, 0.5 - s) / (dq - 1.0) * rsum;
    if (k % 2 == 0) {
        auto trivial = character_group(1).front();
        cplx plain = continued_lambda_eisenstein(trivial, nu, s, prec);
        cplx principal = continued_lambda_eisenstein(chars.front(), nu, s, prec);
        double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        cplx corr = sign * (plain - dq / (dq - 1.0) * principal);
        lhs += corr;
        rhs += corr;
    }
    double abs_res = std::abs(lhs - rhs);
    rep.record(abs_res, abs_res / (1.0 + std::abs(rhs)));
    rep.params = {{"a", a}, {"q", q}, {"k", k}, {"s_re", s.real()}, {"s_im", s.imag()}};
    rep.finalize();
    rep.runtime_ms = sw.ms();
    return rep;
}

// ---- Vandermonde utility -------------------------------------------------

struct VandermondeSystem {
    std::vector<Rat> lambdas;
    std::size_t t0 = 0;
    std::size_t ell0 = 1;
    std::vector<cplx> coefficients;
    double max_row_residual = 0.0;
};

namespace detail {

// Solve the SPD system G x = b by Gaussian elimination in long double.
inline std::vector<long double> solve_dense(std::vector<std::vector<long double>> g,
                                            std::vector<long double> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(static_cast<double>(g[r][col])) >
                std::fabs(static_cast<double>(g[piv][col])))
                piv = r;
        std::swap(g[piv], g[col]);
        std::swap(b[piv], b[col]);
        if (g[col][col] == 0.0L) throw SingularSystem("singular Vandermonde system");
        for (std::size_t r = col + 1; r < n; ++r) {
            long double f = g[r][col] / g[col][col];
            for (std::size_t cc = col; cc < n; ++cc) g[r][cc] -= f * g[col][cc];
            b[r] -= f * b[col];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        long double acc = b[ri];
        for (std::size_t cc = ri + 1; cc < n; ++cc) acc -= g[ri][cc] * x[cc];
        x[ri] = acc / g[ri][ri];
    }
    return x;
}

}  // namespace detail

// Coefficients c_lambda with sum_lambda c_lambda lambda^{-t} = delta_{t0}(t)
// for t in {0, ..., 2 ell0 - 1}; least-norm solution when |lambdas| > 2 ell0,
// computed as c = A^T (A A^T)^{-1} e with iterative refinement.
inline VandermondeSystem vandermonde_coeffs(std::vector<Rat> lambdas, std::size_t t0,
                                            std::size_t ell0) {
    std::size_t rows = 2 * ell0, m = lambdas.size();
    if (ell0 == 0 || m < rows || t0 >= rows)
        throw ParameterError("need |lambdas| >= 2*ell0 > t0");
    for (std::size_t i = 0; i < m; ++i) {
        if (!(lambdas[i].num > 0)) throw ParameterError("lambdas must be positive");
        for (std::size_t j = i + 1; j < m; ++j)
            if (lambdas[i] == lambdas[j]) throw SingularSystem("duplicate lambda");
    }
    std::vector<std::vector<long double>> a(rows, std::vector<long double>(m));
    for (std::size_t j = 0; j < m; ++j) {
        long double lam = static_cast<long double>(lambdas[j].num) / lambdas[j].den;
        long double p = 1.0L;
        for (std::size_t t = 0; t < rows; ++t) {
            a[t][j] = p;
            p /= lam;
        }
    }
    std::vector<long double> rhs(rows, 0.0L);
    rhs[t0] = 1.0L;

    std::vector<long double> c(m, 0.0L);
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<long double> resid(rows);
        for (std::size_t t = 0; t < rows; ++t) {
            long double acc = rhs[t];
            for (std::size_t j = 0; j < m; ++j) acc -= a[t][j] * c[j];
            resid[t] = acc;
        }
        std::vector<std::vector<long double>> gram(rows, std::vector<long double>(rows, 0.0L));
        for (std::size_t t = 0; t < rows; ++t)
            for (std::size_t u = 0; u < rows; ++u)
                for (std::size_t j = 0; j < m; ++j) gram[t][u] += a[t][j] * a[u][j];
        auto d = detail::solve_dense(std::move(gram), std::move(resid));
        for (std::size_t j = 0; j < m; ++j) {
            long double acc = 0.0L;
            for (std::size_t t = 0; t < rows; ++t) acc += a[t][j] * d[t];
            c[j] += acc;
        }
    }
    VandermondeSystem sys;
    sys.lambdas = std::move(lambdas);
    sys.t0 = t0;
    sys.ell0 = ell0;
    sys.coefficients.reserve(m);
    for (std::size_t j = 0; j < m; ++j) sys.coefficients.emplace_back(static_cast<double>(c[j]));
    for (std::size_t t = 0; t < rows; ++t) {
        long double acc = -rhs[t];
        for (std::size_t j = 0; j < m; ++j) acc += a[t][j] * c[j];
        sys.max_row_residual =
            std::max(sys.max_row_residual, std::fabs(static_cast<double>(acc)));
    }
    if (sys.max_row_residual > 1e-10)
        throw SingularSystem("Vandermonde residual above 1e-10: system too ill-conditioned");
    return sys;
}

}  // namespace maasskit
