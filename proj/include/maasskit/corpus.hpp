#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "maasskit/characters.hpp"
#include "maasskit/errors.hpp"
#include "maasskit/lseries.hpp"
#include "maasskit/maassform.hpp"
#include "maasskit/specfun.hpp"

namespace maasskit {

// Coefficients a_n = sigma_{2 nu}(n) n^{-nu} of the level-1 real-analytic
// Eisenstein family, chosen so that L(s) = zeta(s + nu) zeta(s - nu).
inline std::vector<cplx> eisenstein_coeffs(const SpectralParam& nu, std::size_t n_max) {
    std::vector<cplx> c(n_max, 0.0);
    // divisor sieve: sigma_{2 nu}(n) = sum_{d | n} d^{2 nu}
    for (std::size_t d = 1; d <= n_max; ++d) {
        cplx dp = std::pow(cplx(static_cast<double>(d)), 2.0 * nu.nu);
        for (std::size_t n = d; n <= n_max; n += d) c[n - 1] += dp;
    }
    for (std::size_t n = 1; n <= n_max; ++n)
        c[n - 1] *= std::pow(cplx(static_cast<double>(n)), -nu.nu);
    return c;
}

// Residue of continued_lambda_eisenstein at `pole` by small-circle quadrature
// (radius 1e-2, 64 nodes).
inline cplx eisenstein_residue(const SpectralParam& nu, cplx pole) {
    auto trivial = character_group(1).front();
    const int nodes = 64;
    const double r = 1e-2;
    cplx acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double th = 2.0 * kPi * j / nodes;
        cplx e(std::cos(th), std::sin(th));
        acc += continued_lambda_eisenstein(trivial, nu, pole + r * e) * e;
    }
    return r / static_cast<double>(nodes) * acc;
}

// Level-1 Eisenstein MaassSpec: N = 1, trivial nebentypus, eps = 0, g = f.
inline MaassSpec eisenstein_spec(const SpectralParam& nu, std::size_t n_max) {
    if (nu.is_zero()) throw ParameterError("Eisenstein family needs nu != 0");
    if (n_max < 16) throw ParameterError("need n_max >= 16");
    if (std::abs(nu.nu.real()) >= 0.35)
        throw ParameterError(
            "corpus refuses |Re nu| >= 0.35: the admissible growth window collapses there");
    std::vector<cplx> vals = eisenstein_coeffs(nu, n_max);
    double abs_re = std::abs(nu.nu.real());
    double sigma = abs_re + 0.3;
    double c = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n)
        c = std::max(c, std::abs(vals[n - 1]) / std::pow(static_cast<double>(n), sigma));
    c *= 1.05;
    CoeffSeq a{vals, c, sigma};
    ResidueData res;
    res.f_minus_nu = eisenstein_residue(nu, -nu.nu);
    res.f_plus_nu = eisenstein_residue(nu, nu.nu);
    res.g_one_plus_nu = eisenstein_residue(nu, 1.0 + nu.nu);
    res.g_one_minus_nu = eisenstein_residue(nu, 1.0 - nu.nu);
    auto trivial = character_group(1).front();
    return {1, 0, nu, trivial, a, a, res};
}

// ---- Hecke eigenvalue ingestion ------------------------------------------

struct HeckeData {
    long level = 1;
    std::vector<long> primes;
    std::vector<cplx> lambda;
    std::string source;
    std::uint64_t checksum = 0;

    cplx at_prime(long p) const {
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (primes[i] == p) return lambda[i];
        throw MissingEigenvalue(p);
    }
};

inline HeckeData load_hecke(const std::string& path, long level = 1) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    HeckeData h;
    h.level = level;
    h.source = path;
    std::string line;
    if (!std::getline(in, line) || line.rfind("p,lambda_re,lambda_im", 0) != 0)
        throw FormatError("expected header p,lambda_re,lambda_im");
    std::uint64_t hash = 1469598103934665603ull;
    auto mix = [&hash](const std::string& s) {
        for (unsigned char ch : s) { hash ^= ch; hash *= 1099511628211ull; }
    };
    mix(line);
    long last_p = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        mix(line);
        std::istringstream row(line);
        std::string f1, f2, f3;
        if (!std::getline(row, f1, ',') || !std::getline(row, f2, ',') || !std::getline(row, f3))
            throw FormatError("malformed row: " + line);
        long p = std::stol(f1);
        if (!is_prime(p)) throw FormatError("row index is not prime: " + f1);
        if (p <= last_p) throw FormatError("primes must be strictly increasing");
        last_p = p;
        cplx lam(std::stod(f2), std::stod(f3));
        double bound = std::sqrt(static_cast<double>(p)) +
                       1.0 / std::sqrt(static_cast<double>(p)) + 1.0;
        if (std::abs(lam) > bound)
            throw SanityBoundViolation("eigenvalue at p=" + f1 + " exceeds the sanity bound");
        h.primes.push_back(p);
        h.lambda.push_back(lam);
    }
    if (h.primes.empty()) throw FormatError("no eigenvalue rows in " + path);
    h.checksum = hash;
    return h;
}

// ---- Symmetric-square coefficients ---------------------------------------

// Coefficients of prod_p (1 - alpha^2 p^-s)^-1 (1 - p^-s)^-1 (1 - beta^2 p^-s)^-1
// with alpha + beta = lambda_p, alpha beta = 1. Locally c_{p^k} satisfies
// c_k = e1 c_{k-1} - e2 c_{k-2} + e3 c_{k-3} with e1 = e2 = lambda^2 - 1,
// e3 = 1 (elementary symmetric functions of alpha^2, 1, beta^2).
inline std::vector<cplx> sym2_local(cplx lambda, std::size_t k_max) {
    std::vector<cplx> c(k_max + 1, 0.0);
    cplx e1 = lambda * lambda - 1.0;
    c[0] = 1.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        cplx v = e1 * c[k - 1];
        if (k >= 2) v -= e1 * c[k - 2];
        if (k >= 3) v += c[k - 3];
        c[k] = v;
    }
    return c;
}

inline CoeffSeq sym2_coeffs(const HeckeData& h, std::size_t n_max) {
    std::vector<cplx> c(n_max, 0.0);
    c[0] = 1.0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        std::size_t m = n;
        cplx v = 1.0;
        for (std::size_t p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            std::size_t k = 0;
            while (m % p == 0) { m /= p; ++k; }
            long lp = static_cast<long>(p);
            if (h.level % lp == 0) throw BadPrimeUnsupported("bad prime " + std::to_string(lp));
            v *= sym2_local(h.at_prime(lp), k)[k];
        }
        if (m > 1) {
            long lp = static_cast<long>(m);
            if (h.level % lp == 0) throw BadPrimeUnsupported("bad prime " + std::to_string(lp));
            v *= sym2_local(h.at_prime(lp), 1)[1];
        }
        c[n - 1] = v;
    }
    double sigma = 0.8;  // |c_n| = O(n^{sigma}) desk-scale envelope
    double bc = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n)
        bc = std::max(bc, std::abs(c[n - 1]) / std::pow(static_cast<double>(n), sigma));
    return {c, 1.05 * bc, sigma};
}

// Dirichlet convolution of two coefficient vectors (index 1-based).
inline std::vector<cplx> dirichlet_convolve(const std::vector<cplx>& a,
                                            const std::vector<cplx>& b) {
    std::size_t n_max = std::min(a.size(), b.size());
    std::vector<cplx> out(n_max, 0.0);
    for (std::size_t d = 1; d <= n_max; ++d)
        for (std::size_t e = 1; d * e <= n_max; ++e)
            out[d * e - 1] += a[d - 1] * b[e - 1];
    return out;
}

// a with sum a_n n^-s = (sum c_n n^-s) / zeta(s): a_n = sum_{d | n} mu(d) c_{n/d}.
inline CoeffSeq moebius_deconvolve(const CoeffSeq& c) {
    std::size_t n_max = c.size();
    std::vector<int> mu(n_max + 1, 1);
    std::vector<bool> composite(n_max + 1, false);
    std::vector<long> primes;
    for (std::size_t i = 2; i <= n_max; ++i) {  // linear sieve for the Moebius function
        if (!composite[i]) { primes.push_back(static_cast<long>(i)); mu[i] = -1; }
        for (long p : primes) {
            std::size_t ip = i * static_cast<std::size_t>(p);
            if (ip > n_max) break;
            composite[ip] = true;
            if (i % static_cast<std::size_t>(p) == 0) { mu[ip] = 0; break; }
            mu[ip] = -mu[i];
        }
    }
    std::vector<cplx> a(n_max, 0.0);
    for (std::size_t d = 1; d <= n_max; ++d) {
        if (mu[d] == 0) continue;
        for (std::size_t e = 1; d * e <= n_max; ++e)
            a[d * e - 1] += static_cast<double>(mu[d]) * c.at(e);
    }
    double sigma = c.growth_exponent + 0.1;
    double bc = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n)
        bc = std::max(bc, std::abs(a[n - 1]) / std::pow(static_cast<double>(n), sigma));
    return {a, 1.05 * bc, sigma};
}

}  // namespace maasskit
