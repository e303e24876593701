#pragma once

#include <algorithm>
#include <complex>
#include <memory>
#include <numeric>
#include <vector>

#include "maasskit/errors.hpp"
#include "maasskit/rational.hpp"
#include "maasskit/specfun.hpp"

namespace maasskit {

namespace detail {

inline long powmod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>(static_cast<__int128>(r) * base % mod);
        base = static_cast<long>(static_cast<__int128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline long primitive_root_mod_prime(long p) {
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

// A primitive root mod p^k for odd p: lift from mod p, nudging by p when the
// lift fails the p^2 test.
inline long primitive_root_mod_prime_power(long p, long pk) {
    long g = primitive_root_mod_prime(p);
    if (pk == p) return g;
    if (powmod(g, p - 1, p * p) == 1) g += p;
    return g % pk;
}

}  // namespace detail

// Generator/discrete-log data of (Z/q)^x, shared by all characters mod q.
struct CharacterGroup {
    long modulus = 1;
    std::vector<long> generators;           // residues mod q
    std::vector<long> orders;               // same length; product = phi(q)
    long phi = 1;
    std::vector<std::vector<long>> dlog;    // dlog[r] = exponent vector, empty if gcd(r,q)>1

    explicit CharacterGroup(long q) : modulus(q) {
        if (q < 1) throw ParameterError("modulus must be positive");
        // cyclic factors: one per odd prime power, plus the {-1} x <3>
        // structure of the 2-power part
        long rem = q;
        long two = 1;
        while (rem % 2 == 0) { rem /= 2; two *= 2; }
        auto add_generator = [&](long g_local, long pk, long order) {
            // CRT lift: equal to g_local mod pk, 1 modulo the complement
            long other = q / pk;
            long g = 0;
            for (long r = 0; r < q; ++r)
                if (r % pk == g_local % pk && (other == 1 || r % other == 1 % other)) { g = r; break; }
            generators.push_back(g);
            orders.push_back(order);
        };
        if (two == 4) add_generator(3, 4, 2);
        if (two >= 8) {
            add_generator(two - 1, two, 2);
            add_generator(3, two, two / 4);
        }
        long m = rem;
        for (long p = 3; p * p <= m; p += 2)
            if (m % p == 0) {
                long pk = 1;
                while (m % p == 0) { m /= p; pk *= p; }
                add_generator(detail::primitive_root_mod_prime_power(p, pk), pk,
                              pk - pk / p);
            }
        if (m > 1) add_generator(detail::primitive_root_mod_prime(m), m, m - 1);

        phi = 1;
        for (long d : orders) phi *= d;

        // discrete logs by full enumeration over exponent tuples
        dlog.assign(static_cast<std::size_t>(q), {});
        std::vector<long> e(generators.size(), 0);
        long r = 1 % q;
        for (long count = 0; count < phi; ++count) {
            dlog[static_cast<std::size_t>(r)] = e;
            std::size_t i = generators.size();
            while (i > 0) {
                --i;
                r = static_cast<long>(static_cast<__int128>(r) * generators[i] % q);
                if (++e[i] < orders[i]) break;
                // wrap this digit: multiply past the full cycle back to e_i = 0
                e[i] = 0;
            }
        }
        if (q == 1) dlog[0] = {};
    }
};

inline std::shared_ptr<const CharacterGroup> shared_group(long q) {
    return std::make_shared<const CharacterGroup>(q);
}

// A Dirichlet character mod q determined by its values on the group
// generators, stored as exact rational angles.
struct DirichletCharacter {
    std::shared_ptr<const CharacterGroup> group;
    std::vector<long> exps;  // chi(g_i) = e(exps[i]/orders[i])

    DirichletCharacter(std::shared_ptr<const CharacterGroup> g, std::vector<long> e)
        : group(std::move(g)), exps(std::move(e)) {
        if (exps.size() != group->orders.size())
            throw ParameterError("exponent vector length mismatch");
        for (std::size_t i = 0; i < exps.size(); ++i)
            exps[i] = ((exps[i] % group->orders[i]) + group->orders[i]) % group->orders[i];
    }

    long modulus() const { return group->modulus; }

    bool defined_at(long n) const {
        long q = modulus();
        if (q == 1) return true;
        long r = ((n % q) + q) % q;
        return std::gcd(r, q) == 1;
    }

    // exact angle of chi(n) in [0,1); precondition gcd(n, q) = 1
    Rat angle(long n) const {
        long q = modulus();
        if (q == 1) return Rat(0);
        long r = ((n % q) + q) % q;
        if (std::gcd(r, q) != 1) throw DomainError("character angle undefined: gcd(n,q)>1");
        const auto& e = group->dlog[static_cast<std::size_t>(r)];
        Rat a(0);
        for (std::size_t i = 0; i < exps.size(); ++i)
            a = a + Rat(exps[i] * e[i], group->orders[i]);
        // reduce mod 1
        long long whole = a.num / a.den;
        if (a.num < 0 && a.num % a.den != 0) --whole;
        return a - Rat(whole);
    }

    cplx value(long n) const {
        if (!defined_at(n)) return 0.0;
        Rat a = angle(n);
        double t = 2.0 * kPi * a.value();
        return {std::cos(t), std::sin(t)};
    }

    bool is_principal() const {
        return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
    }

    int parity() const {  // 0 even, 1 odd
        if (modulus() == 1) return 0;
        Rat a = angle(modulus() - 1);
        return a.num == 0 ? 0 : 1;  // chi(-1) = +-1, angle 0 or 1/2
    }

    DirichletCharacter conj() const {
        std::vector<long> e(exps.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = (group->orders[i] - exps[i]) % group->orders[i];
        return {group, e};
    }

    // smallest d | q such that chi is trivial on {n = 1 mod d, gcd(n,q)=1}
    long conductor() const {
        long q = modulus();
        for (long d = 1; d <= q; ++d) {
            if (q % d != 0) continue;
            bool ok = true;
            for (long n = 1; n <= q && ok; ++n)
                if (n % d == 1 % d && std::gcd(n, q) == 1 && angle(n).num != 0) ok = false;
            if (ok) return d;
        }
        return q;
    }

    bool is_primitive() const { return conductor() == modulus(); }
};

// All phi(q) characters mod q, lexicographic in their exponent vectors.
inline std::vector<DirichletCharacter> character_group(long q) {
    auto g = shared_group(q);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(g->phi));
    std::vector<long> e(g->orders.size(), 0);
    for (long count = 0; count < g->phi; ++count) {
        out.emplace_back(g, e);
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (++e[i] < g->orders[i]) break;
            e[i] = 0;
        }
    }
    return out;
}

inline cplx gauss_sum(const DirichletCharacter& psi) {
    long q = psi.modulus();
    if (q == 1) return 1.0;
    cplx s = 0.0;
    for (long a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        double t = 2.0 * kPi * static_cast<double>(a) / static_cast<double>(q);
        s += psi.value(a) * cplx(std::cos(t), std::sin(t));
    }
    return s;
}

// |LHS - RHS| for the cosine/sine decomposition into multiplicative
// characters mod an odd prime q:
//   cos(2 pi n a/q) = 1 - q/(q-1) psi0(n)
//                     + 1/(q-1) sum_{psi != psi0 even} tau(conj psi) psi(an)
//   sin(2 pi n a/q) = -i/(q-1) sum_{psi odd} tau(conj psi) psi(an)
enum class TrigKind { cos, sin };

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline double cos_sin_decomposition_residual(long n, long a, long q, TrigKind kind) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw ParameterError("q must be an odd prime");
    if (std::gcd(a, q) != 1) throw ParameterError("need gcd(a,q)=1");

    double x = 2.0 * kPi * static_cast<double>(((static_cast<long long>(n) * a) % q + q) % q) /
               static_cast<double>(q);
    auto chars = character_group(q);
    cplx rhs = 0.0;
    if (kind == TrigKind::cos) {
        rhs = 1.0;
        for (const auto& psi : chars) {
            if (psi.is_principal()) {
                rhs -= static_cast<double>(q) / (q - 1.0) * psi.value(n);
            } else if (psi.parity() == 0) {
                rhs += gauss_sum(psi.conj()) * psi.value(static_cast<long>((static_cast<long long>(a) * n) % q)) /
                       (q - 1.0);
            }
        }
        return std::abs(std::cos(x) - rhs);
    }
    for (const auto& psi : chars)
        if (psi.parity() == 1)
            rhs += gauss_sum(psi.conj()) * psi.value(static_cast<long>((static_cast<long long>(a) * n) % q));
    rhs *= cplx(0.0, -1.0) / (q - 1.0);
    return std::abs(std::sin(x) - rhs);
}

}  // namespace maasskit
