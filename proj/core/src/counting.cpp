#include "sinesum/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <gmp.h>

#include "sinesum/dd.hpp"
#include "sinesum/errors.hpp"

namespace sinesum {
namespace {

using u64 = unsigned long long;
using i128 = __int128;

// C(a, b) for the small arguments produced by exponent/k combinations.
u64 binom(u64 a, u64 b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    u64 r = 1;
    for (u64 i = 1; i <= b; ++i) {
        // exact: after multiplying, r is C(a-b+i, i) * i and divisible by i
        r = r * (a - b + i) / i;
    }
    return r;
}

} // namespace

unsigned long long tau(int k, unsigned long long lambda) {
    if (k < 1) throw PreconditionViolation("tuple length must be positive");
    if (lambda < 1) throw PreconditionViolation("tau argument must be positive");
    if (lambda > 1000000000000ULL)
        throw FactorizationTooLarge("tau argument exceeds 10^12");
    u64 r = 1;
    u64 rest = lambda;
    for (u64 d = 2; d * d <= rest; ++d) {
        if (rest % d) continue;
        u64 e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        r *= binom(e + (u64)k - 1, (u64)k - 1);
    }
    if (rest > 1) r *= (u64)k; // single prime, exponent 1: C(k, k-1)
    return r;
}

namespace {

// Tuples of `level` coordinates in [1, P]^level with product <= limit
// (integer limit; nested floor-division keeps every comparison exact).
u64 count_rec(long long P, int level, u64 limit) {
    if (limit == 0) return 0;
    if (level == 1) return std::min<u64>((u64)P, limit);
    u64 total = 0;
    u64 jmax = std::min<u64>((u64)P, limit);
    for (u64 j = 1; j <= jmax; ++j) total += count_rec(P, level - 1, limit / j);
    return total;
}

} // namespace

ProductCountReport count_product_le(long long P, int k, double A) {
    if (P < 1 || k < 1) throw PreconditionViolation("P >= 1 and k >= 1 required");
    if (!(A >= 1.0)) throw PreconditionViolation("A >= 1 required");
    double pk = std::pow((double)P, (double)k);
    if (pk / std::max(A, 1.0) > 4e18) throw TupleSpaceTooLarge("P^k / A exceeds 2^62");
    if (std::pow((double)P, (double)(k - 1)) > 1e8)
        throw TupleSpaceTooLarge("P^(k-1) recursion too large");

    ProductCountReport rep;
    rep.threshold = pk / A;
    // snap a threshold that is an integer up to rounding; products are
    // integers, so membership only depends on floor(threshold)
    u64 limit = (u64)std::floor(rep.threshold * (1.0 + 4e-16) + 1e-9);
    rep.count = count_rec(P, k, limit);
    rep.bound = (double)k * pk / std::pow(A, 1.0 / (double)k);
    rep.holds = (double)rep.count <= rep.bound * (1.0 + 1e-12) + 0.5;
    return rep;
}

namespace {

u64 pow_u64_checked(u64 b, int e, u64 cap) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / b) throw TupleSpaceTooLarge("power exceeds enumeration cap");
        r *= b;
    }
    return r;
}

} // namespace

HitSet hit_set(const PrecisionReal& y, unsigned long long P, int n, double eps) {
    if (P < 2 || n < 2) throw PreconditionViolation("P >= 2 and n >= 2 required");
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionViolation("eps in (0,1) required");
    u64 range = pow_u64_checked(P, n - 1, 100000000ULL); // T < P^(n-1)

    HitSet set;
    set.P = P;
    set.n = n;
    set.eps = eps;
    set.threshold = std::pow((double)P, eps - 1.0);

    dd yd = to_dd(y.value);
    for (u64 T = 1; T < range; ++T) {
        double dist = dd_dist_to_int(dd_mul(yd, (double)T));
        double guard = (double)T * (y.err + 1e-28) + set.threshold * 4e-16;
        if (std::fabs(dist - set.threshold) <= guard)
            throw PrecisionExhausted("hit membership within the comparison guard band at T=" +
                                     std::to_string(T));
        if (dist <= set.threshold) {
            set.hits.push_back(T);
            set.weighted += tau(n - 1, T);
        }
    }
    return set;
}

HitStructureReport hit_structure_check(const PrecisionReal& y, unsigned long long P,
                                       int n, double eps) {
    if (!(eps > 0.0 && eps < 1.0 / 6.0))
        throw HypothesisViolation("eps must lie in (0, 1/6)");
    if (P < 8) throw HypothesisViolation("P >= 8 required");
    if (n < 3) throw HypothesisViolation("n >= 3 required");

    long long Mcap = floor_power((long long)P, eps);
    double tol = std::pow((double)P, eps - (double)n);
    auto approx = best_approx_below(y, Mcap, tol);
    if (!approx)
        throw HypothesisViolation("no denominator <= P^eps approximates y to P^(eps-n)");

    HitStructureReport rep;
    rep.approx = *approx;
    rep.set = hit_set(y, P, n, eps);

    u64 M = (u64)rep.approx.M;
    u64 range = pow_u64_checked(P, n - 1, 100000000ULL);
    u64 cap = (range - 1) / M;
    double beta = std::fabs(rep.approx.beta);
    if (beta == 0.0) {
        rep.K_formula = cap;
    } else {
        double kf = rep.set.threshold / ((double)M * beta);
        rep.K_formula = kf >= (double)cap ? cap : (u64)std::floor(kf);
    }

    rep.multiples_only = true;
    for (u64 T : rep.set.hits)
        if (T % M != 0) rep.multiples_only = false;

    rep.progression_exact = rep.set.hits.size() == rep.K_formula;
    for (u64 j = 0; rep.progression_exact && j < rep.set.hits.size(); ++j)
        if (rep.set.hits[j] != (j + 1) * M) rep.progression_exact = false;

    rep.gaps_ok = true;
    for (std::size_t j = 1; j < rep.set.hits.size(); ++j)
        if (rep.set.hits[j] - rep.set.hits[j - 1] < rep.set.hits.front()) rep.gaps_ok = false;

    rep.holds = rep.multiples_only && rep.progression_exact && rep.gaps_ok;
    return rep;
}

HitSet hit_set_exact_dyadic(long long C, long long M, __int128 b, int s,
                            unsigned long long P, int n, double eps) {
    if (M < 1 || s < 0 || s > 100) throw PreconditionViolation("need M >= 1 and 0 <= s <= 100");
    if (P < 2 || n < 2) throw PreconditionViolation("P >= 2 and n >= 2 required");
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionViolation("eps in (0,1) required");
    u64 range = pow_u64_checked(P, n - 1, 100000000ULL);

    // y = C/M + b/2^s = num / D with D = M * 2^s; membership of T is decided
    // from the exact residue r = num * T mod D.
    i128 D = (i128)M << s;
    i128 num = ((i128)C << s) + (i128)b * M;
    num %= D;
    if (num < 0) num += D;
    if (D > ((i128)1 << 110) / (i128)range)
        throw PreconditionViolation("dyadic denominator too large for exact products");

    HitSet set;
    set.P = P;
    set.n = n;
    set.eps = eps;
    set.threshold = std::pow((double)P, eps - 1.0);

    // integer 1/eps enables an exact power comparison
    long q = std::lround(1.0 / eps);
    bool exact_exponent = std::fabs(eps * (double)q - 1.0) <= 1e-12 && q >= 2;

    mpz_t lhs, rhs, tmp;
    mpz_init(lhs);
    mpz_init(rhs);
    mpz_init(tmp);
    auto set_i128 = [](mpz_t out, i128 v) {
        mpz_set_ui(out, (unsigned long)(unsigned long long)(v >> 64));
        mpz_mul_2exp(out, out, 64);
        mpz_add_ui(out, out, (unsigned long)(unsigned long long)v);
    };

    for (u64 T = 1; T < range; ++T) {
        i128 r = (num * (i128)T) % D;
        i128 rmin = r <= D - r ? r : D - r;
        bool hit;
        if (exact_exponent) {
            // dist <= P^((1-q)/q)  <=>  rmin^q * P^(q-1) <= D^q
            set_i128(lhs, rmin);
            mpz_pow_ui(lhs, lhs, (unsigned long)q);
            mpz_ui_pow_ui(tmp, (unsigned long)P, (unsigned long)(q - 1));
            mpz_mul(lhs, lhs, tmp);
            set_i128(rhs, D);
            mpz_pow_ui(rhs, rhs, (unsigned long)q);
            hit = mpz_cmp(lhs, rhs) <= 0;
        } else {
            double dist = (double)rmin / (double)D;
            if (std::fabs(dist - set.threshold) <= 1e-12 * set.threshold) {
                mpz_clear(lhs);
                mpz_clear(rhs);
                mpz_clear(tmp);
                throw PrecisionExhausted("threshold comparison ambiguous at T=" +
                                         std::to_string(T));
            }
            hit = dist <= set.threshold;
        }
        if (hit) {
            set.hits.push_back(T);
            set.weighted += tau(n - 1, T);
        }
    }
    mpz_clear(lhs);
    mpz_clear(rhs);
    mpz_clear(tmp);
    return set;
}

} // namespace sinesum
