#include "sinesum/polynomial.hpp"

namespace sinesum {

PolynomialQ PolynomialQ::shifted(long long s) const {
    // binomial expansion of sum_j c_j (y+s)^j
    const int n = degree();
    std::vector<Rat> out((std::size_t)n + 1, Rat(0));
    // Pascal row for (y+s)^j built incrementally: coeffs of (y+s)^j in y^i is C(j,i) s^(j-i)
    for (int j = 0; j <= n; ++j) {
        if (coeffs[(std::size_t)j].is_zero()) continue;
        // C(j,i) * s^(j-i)
        __int128 binom = 1;
        __int128 spow = 1;
        // iterate i from j down to 0 so s^(j-i) grows as binom updates
        std::vector<__int128> term((std::size_t)j + 1);
        for (int i = j; i >= 0; --i) {
            term[(std::size_t)i] = binom * spow;
            if (i > 0) {
                binom = binom * i / (j - i + 1);
                spow *= s;
                __int128 a = spow < 0 ? -spow : spow;
                if (a > ((__int128)1 << 100))
                    throw PreconditionViolation("shift expansion overflow");
            }
        }
        for (int i = 0; i <= j; ++i) {
            Rat t = coeffs[(std::size_t)j] * Rat::from_i128(term[(std::size_t)i], 1);
            out[(std::size_t)i] = out[(std::size_t)i] + t;
        }
    }
    return PolynomialQ(std::move(out));
}

PolynomialQ finite_difference(const PolynomialQ& psi, const std::vector<long long>& shifts) {
    PolynomialQ g = psi;
    for (long long s : shifts) {
        if (s <= 0) throw PreconditionViolation("difference shifts must be positive");
        g = g.shifted(s) - g;
    }
    return g;
}

} // namespace sinesum
