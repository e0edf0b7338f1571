#include "sinesum/sequences.hpp"

#include <cmath>
#include <cstdio>

namespace sinesum {

const char* declared_class_name(DeclaredClass c) {
    switch (c) {
        case DeclaredClass::Monotone: return "monotone";
        case DeclaredClass::RBVS: return "rbvs";
        case DeclaredClass::GM: return "gm";
        case DeclaredClass::Unverified: return "unverified";
    }
    return "unverified";
}

double CoeffSequence::at(long long k) const {
    if (k < 1) throw PreconditionViolation("sequence index must be >= 1");
    if (id == "inv_k") return 1.0 / (double)k;
    if (id == "inv_klogk") return 1.0 / ((double)k * std::log((double)k + 1.0));
    if (id == "inv_kpow") return std::pow((double)k, -param);
    if (id == "inv_k2logk")
        return 1.0 / ((double)k * (double)k * std::log((double)k + 1.0));
    if (id == "one") return 1.0;
    if (id == "halving_pairs") {
        long long j = (k - 1) / 2;
        return std::ldexp(1.0, (int)-std::min<long long>(j, 1070));
    }
    if (id == "table") {
        if (k > (long long)table.size()) return 0.0;
        return table[(std::size_t)(k - 1)];
    }
    throw PreconditionViolation("unknown sequence id: " + id);
}

std::string CoeffSequence::label() const {
    if (id == "inv_kpow") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "inv_kpow(%g)", param);
        return buf;
    }
    return id;
}

CoeffSequence CoeffSequence::from_id(const std::string& id, double param) {
    CoeffSequence s;
    s.id = id;
    s.param = param;
    s.declared_class = DeclaredClass::Monotone;
    s.class_constant = 1.0;
    if (id == "inv_k") {
        s.sum_finite = false;
        s.ckk_to_zero = false; // c_k * k = 1
    } else if (id == "inv_klogk") {
        s.sum_finite = false;
        s.ckk_to_zero = true;
    } else if (id == "inv_kpow") {
        if (!(param > 1.0)) throw PreconditionViolation("inv_kpow needs p > 1");
        s.sum_finite = true;
        s.ckk_to_zero = true;
    } else if (id == "inv_k2logk") {
        s.sum_finite = true;
        s.ckk_to_zero = true;
    } else if (id == "one") {
        s.sum_finite = false;
        s.ckk_to_zero = false;
    } else if (id == "halving_pairs") {
        s.sum_finite = true;
        s.ckk_to_zero = true;
    } else {
        throw PreconditionViolation("unknown sequence id: " + id);
    }
    return s;
}

CoeffSequence CoeffSequence::from_table(std::vector<double> values) {
    CoeffSequence s;
    s.id = "table";
    s.table = std::move(values);
    s.declared_class = DeclaredClass::Unverified;
    return s;
}

std::vector<std::string> CoeffSequence::catalog_ids() {
    return {"inv_k", "inv_klogk", "inv_kpow", "inv_k2logk", "one", "halving_pairs"};
}

std::vector<CoeffSequence> CoeffSequence::catalog_instances() {
    return {from_id("inv_k"),      from_id("inv_klogk"),    from_id("inv_kpow", 1.5),
            from_id("inv_kpow", 2.0), from_id("inv_k2logk"), from_id("one"),
            from_id("halving_pairs")};
}

ClassCheckReport check_class(const CoeffSequence& seq, long long lo, long long hi) {
    if (lo < 1 || hi < lo) throw PreconditionViolation("bad class-check range");
    ClassCheckReport r;
    r.lo = lo;
    r.hi = hi;
    const std::size_t n = (std::size_t)(hi - lo + 1);
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = seq.at(lo + (long long)i);

    r.monotone = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] < 0.0) r.monotone = false;
        if (i + 1 < n && c[i] < c[i + 1]) r.monotone = false;
    }

    // remainder variation from each m to the end of the range
    std::vector<double> restvar(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;)
        restvar[i] = restvar[i + 1] + std::fabs(c[i] - c[i + 1]);

    double rbvs = 0.0, gm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const long long m = lo + (long long)i;
        if (c[i] == 0.0) {
            if (restvar[i] == 0.0) continue; // flat zero tail: constant 0 works
            throw ZeroCoefficient("c_" + std::to_string(m) + " = 0 in class check");
        }
        rbvs = std::max(rbvs, restvar[i] / c[i]);
        // dyadic-window variation: k in [m, min(2m-1, hi-1)]
        const long long wy_hi = std::min<long long>(2 * m - 1, hi - 1);
        double wv = 0.0;
        if (wy_hi >= m) {
            const std::size_t j = (std::size_t)(wy_hi - lo);
            wv = restvar[i] - restvar[j + 1];
        }
        gm = std::max(gm, wv / c[i]);
    }
    r.rbvs_constant = rbvs;
    r.gm_constant = gm;
    return r;
}

TailStat tail_sup(const CoeffSequence& seq, long long l, unsigned long long Lmax) {
    if (l < 1 || (unsigned long long)l > Lmax)
        throw PreconditionViolation("bad tail range");
    TailStat t;
    t.l = l;
    t.Lmax = Lmax;
    for (unsigned long long k = (unsigned long long)l; k <= Lmax; ++k) {
        const double v = seq.at((long long)k) * (double)k;
        if (v > t.value) {
            t.value = v;
            t.argmax = (long long)k;
        }
    }
    return t;
}

AbelReport abel_transform(const std::vector<double>& c, const std::vector<double>& u) {
    if (c.size() != u.size() || c.empty())
        throw PreconditionViolation("abel_transform needs equal nonempty vectors");
    const std::size_t n = c.size();
    AbelReport r;
    // Kahan-compensated direct sum
    double s = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = c[i] * u[i] - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    r.direct = s;

    double U = 0.0, uc = 0.0;
    double s2 = 0.0, c2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double yu = u[i] - uc;
        const double tu = U + yu;
        uc = (tu - U) - yu;
        U = tu;
        const double w = (i + 1 < n) ? (c[i] - c[i + 1]) * U : c[i] * U;
        const double y2 = w - c2;
        const double t2 = s2 + y2;
        c2 = (t2 - s2) - y2;
        s2 = t2;
    }
    r.transformed = s2;
    r.residual = std::fabs(r.direct - r.transformed) / std::max(1.0, std::fabs(r.direct));
    return r;
}

} // namespace sinesum
