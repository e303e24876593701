#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maasskit {

// Exact rational arithmetic on 64-bit numerator/denominator. Enough for the
// matrix entries, character angles and Vandermonde nodes that appear here;
// overflow throws rather than wrapping.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make_checked(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                            static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make_checked(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                            static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make_checked(static_cast<__int128>(a.num) * b.num,
                            static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return make_checked(static_cast<__int128>(a.num) * b.den,
                            static_cast<__int128>(a.den) * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    static Rat make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        std::int64_t g = static_cast<std::int64_t>(gcd128(an, d));
        if (g > 1) { n /= g; d /= g; }
        const __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
};

}  // namespace maasskit
