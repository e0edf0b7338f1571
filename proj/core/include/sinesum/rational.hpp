#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sinesum/errors.hpp"

namespace sinesum {

// Exact rational number over 64-bit integers with 128-bit intermediates.
// Overflow past 63 bits in a reduced result throws; the quantities this type
// carries (polynomial coefficients, modular periods, approximation targets)
// stay far below that in every supported configuration.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw PreconditionViolation("rational with zero denominator");
        if (den < 0) { den = -den; num = -num; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from_i128(__int128 n, __int128 d) {
        if (d == 0) throw PreconditionViolation("rational with zero denominator");
        if (d < 0) { d = -d; n = -n; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        const __int128 lim = (__int128)1 << 62;
        if (n >= lim || n <= -lim || d >= lim)
            throw PreconditionViolation("rational arithmetic overflow");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw PreconditionViolation("rational division by zero");
        return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    friend Rat operator-(const Rat& a) { Rat r; r.num = -a.num; r.den = a.den; return r; }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den <= (__int128)b.num * a.den;
    }

    // Fractional part in [0, 1).
    Rat frac() const {
        long long q = num / den;
        long long r = num % den;
        if (r < 0) r += den;
        (void)q;
        Rat f;
        f.num = r;
        f.den = den;
        return f;
    }
};

} // namespace sinesum
