#pragma once

#include <vector>

#include "sinesum/errors.hpp"
#include "sinesum/rational.hpp"

namespace sinesum {

// Polynomial with exact rational coefficients, indexed by power 0..degree.
struct PolynomialQ {
    std::vector<Rat> coeffs; // coeffs[j] multiplies y^j

    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(Rat(0));
    }

    int degree() const { return (int)coeffs.size() - 1; }
    const Rat& leading() const { return coeffs.back(); }
    bool is_monic() const { return leading() == Rat(1); }
    bool odd_powers_only() const {
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (j % 2 == 0 && !coeffs[j].is_zero()) return false;
        return true;
    }

    // Sum of absolute coefficient values.
    Rat abs_coeff_sum() const {
        Rat s(0);
        for (const Rat& c : coeffs) s = s + (c.num < 0 ? -c : c);
        return s;
    }

    // Minimal positive integer Q with Q*f having integer coefficients
    // (lcm of the reduced denominators).
    long long integerizer() const {
        long long q = 1;
        for (const Rat& c : coeffs) {
            long long g = std::gcd(q, c.den);
            __int128 l = (__int128)(q / g) * c.den;
            if (l > ((__int128)1 << 62))
                throw PreconditionViolation("coefficient denominators too large");
            q = (long long)l;
        }
        return q;
    }

    // Exact evaluation at integer y via Horner in 128-bit; throws on overflow
    // past 2^120 in an intermediate numerator.
    Rat eval(long long y) const {
        __int128 num = 0;
        long long q = integerizer();
        // work with integer coefficients q*coeffs, divide back at the end
        for (int j = degree(); j >= 0; --j) {
            __int128 cj = (__int128)coeffs[j].num * (q / coeffs[j].den);
            num = num * y + cj;
            __int128 a = num < 0 ? -num : num;
            if (a > ((__int128)1 << 120))
                throw PreconditionViolation("polynomial evaluation overflow");
        }
        // num = q*f(y); reduce num/q
        return Rat::from_i128(num, q);
    }

    double eval_double(double y) const {
        double s = 0.0;
        for (int j = degree(); j >= 0; --j) s = s * y + coeffs[j].to_double();
        return s;
    }

    friend PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) c[j] = c[j] + a.coeffs[j];
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[j] = c[j] + b.coeffs[j];
        return PolynomialQ(std::move(c));
    }
    friend PolynomialQ operator-(const PolynomialQ& a, const PolynomialQ& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) c[j] = c[j] + a.coeffs[j];
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[j] = c[j] - b.coeffs[j];
        return PolynomialQ(std::move(c));
    }

    // f(y + s) expanded exactly.
    PolynomialQ shifted(long long s) const;

    // Monomial helper: c * y^j.
    static PolynomialQ monomial(const Rat& c, int j) {
        std::vector<Rat> v((std::size_t)j + 1, Rat(0));
        v[(std::size_t)j] = c;
        return PolynomialQ(std::move(v));
    }
};

// Iterated forward difference with positive integer shifts:
//   step f -> f(y + s) - f(y), applied once per shift in order.
// For deg f = k and k-1 shifts the result is linear with leading coefficient
// k! * (leading of f) * product(shifts); the constant term is returned
// explicitly as part of the polynomial.
PolynomialQ finite_difference(const PolynomialQ& psi, const std::vector<long long>& shifts);

} // namespace sinesum
