#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <mpfr.h>

#include "sinesum/dd.hpp"

namespace sinesum {

// Thin RAII wrapper over an MPFR floating-point number with explicit
// per-object precision.  All arithmetic rounds to nearest; operations that
// combine operands produce a result at the precision passed to the call (or
// the wider operand when unspecified).  This is deliberately a small value
// type, not an expression-template library: every rounding step is visible.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long long x, long prec) { mpfr_init2(v_, prec); mpfr_set_sj(v_, x, MPFR_RNDN); }
    BigFloat(unsigned long long x, long prec) { mpfr_init2(v_, prec); mpfr_set_uj(v_, x, MPFR_RNDN); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long long to_ll() const { return static_cast<long long>(mpfr_get_sj(v_, MPFR_RNDZ)); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Exponent e with |value| in [2^(e-1), 2^e); 0 for a zero value.
    long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    static BigFloat pi(long prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat two_pi(long prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        mpfr_mul_2si(r.v_, r.v_, 1, MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const std::string& s, long prec) {
        BigFloat r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    static BigFloat add(const BigFloat& a, const BigFloat& b, long prec) {
        BigFloat r(prec);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat sub(const BigFloat& a, const BigFloat& b, long prec) {
        BigFloat r(prec);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat mul(const BigFloat& a, const BigFloat& b, long prec) {
        BigFloat r(prec);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat div(const BigFloat& a, const BigFloat& b, long prec) {
        BigFloat r(prec);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat neg(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat abs(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    // k^e for integer k >= 1 (exact when prec covers e*log2(k) bits).
    static BigFloat pow_ui(unsigned long k, unsigned long e, long prec) {
        BigFloat r(prec);
        mpfr_ui_pow_ui(r.v_, k, e, MPFR_RNDN);
        return r;
    }
    // b^e for real exponent.
    static BigFloat pow(const BigFloat& b, const BigFloat& e, long prec) {
        BigFloat r(prec);
        mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat floor(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    static BigFloat sin(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat cos(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat log2(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_log2(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat sqrt(const BigFloat& a, long prec) {
        BigFloat r(prec);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

// Round to a double-double pair: hi is the nearest double, lo the nearest
// double of the remainder.  Relative error is O(2^-106).
inline dd to_dd(const BigFloat& a) {
    double hi = a.to_double();
    long prec = a.precision() < 128 ? 128 : a.precision();
    double lo = BigFloat::sub(a, BigFloat(hi, 64), prec).to_double();
    return dd_detail::quick_two_sum(hi, lo);
}

} // namespace sinesum
