#pragma once

#include <cmath>

namespace sinesum {

// Double-double arithmetic: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving roughly 106 bits of significand.  Used by the bulk summation kernels
// where per-term multiprecision calls would dominate the runtime; error per
// operation is O(2^-105) relative, which the certified paths account for.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    explicit constexpr dd(double h) : hi(h), lo(0.0) {}

    double to_double() const { return hi + lo; }
};

namespace dd_detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    double err = b - (s - a);
    return {s, err};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}
} // namespace dd_detail

inline dd dd_add(dd a, dd b) {
    using namespace dd_detail;
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(dd a, double b) {
    using namespace dd_detail;
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    using namespace dd_detail;
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    using namespace dd_detail;
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = dd_detail::quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

// Fractional part in [0, 1) of a nonnegative dd value.
inline dd dd_frac(dd a) {
    double fh = std::floor(a.hi);
    dd r = dd_add(dd{a.hi - fh, 0.0}, a.lo);
    // lo may carry the value across an integer boundary in either direction.
    if (r.hi < 0.0) r = dd_add(r, 1.0);
    double f2 = std::floor(r.hi);
    if (f2 != 0.0) r = dd_add(r, -f2);
    if (r.hi >= 1.0) r = dd_add(r, -1.0);
    if (r.hi < 0.0) r = dd_add(r, 1.0);
    return r;
}

// Distance from a (any sign) to the nearest integer, in [0, 1/2].
// dd_frac already handles negative inputs via floor semantics.
inline double dd_dist_to_int(dd a) {
    dd f = dd_frac(a);
    double d = f.to_double();
    if (d < 0.0) d = 0.0;
    if (d >= 1.0) d = 0.0;
    return d <= 0.5 ? d : 1.0 - d;
}

} // namespace sinesum
