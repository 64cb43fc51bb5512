#include "etaunits/qexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaunits {

QExpansion qexp_one(long terms) {
    QExpansion r;
    r.coef.assign(terms, Cyc{});
    if (terms > 0) r.coef[0] = Cyc(1);
    return r;
}

QExpansion QExpansion::mul(const QExpansion& o) const {
    QExpansion r;
    r.offset = offset + o.offset;
    r.phase = phase * o.phase;
    long n = std::min(terms(), o.terms());
    r.coef.assign(n, Cyc{});
    for (long i = 0; i < n; ++i) {
        if (coef[i].is_zero()) continue;
        for (long j = 0; i + j < n; ++j) {
            if (o.coef[j].is_zero()) continue;
            r.coef[i + j] += coef[i] * o.coef[j];
        }
    }
    return r;
}

QExpansion QExpansion::inverse() const {
    if (terms() == 0 || coef[0].is_zero())
        throw std::invalid_argument("QExpansion::inverse: leading coefficient is zero");
    QExpansion r;
    r.offset = -offset;
    r.phase = phase.inverse();
    long n = terms();
    r.coef.assign(n, Cyc{});
    Cyc lead_inv = cyc_inverse(coef[0]);
    r.coef[0] = lead_inv;
    for (long k = 1; k < n; ++k) {
        Cyc s;
        for (long i = 1; i <= k; ++i) {
            if (coef[i].is_zero()) continue;
            s += coef[i] * r.coef[k - i];
        }
        r.coef[k] = -(lead_inv * s);
    }
    return r;
}

QExpansion QExpansion::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    QExpansion base = *this;
    QExpansion r = qexp_one(terms());
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r.mul(base);
        k >>= 1;
        if (k > 0) base = base.mul(base);
    }
    return r;
}

bool QExpansion::proportional(const QExpansion& o) const {
    if (offset != o.offset) return false;
    long n = std::min(terms(), o.terms());
    if (n == 0) return true;
    // locate first nonzero on each side; they must be at the same index
    long i0 = -1, j0 = -1;
    for (long i = 0; i < n; ++i)
        if (!coef[i].is_zero()) { i0 = i; break; }
    for (long j = 0; j < n; ++j)
        if (!o.coef[j].is_zero()) { j0 = j; break; }
    if (i0 != j0) return false;
    if (i0 < 0) return true;  // both identically zero through known terms
    const Cyc& x0 = coef[i0];
    const Cyc& y0 = o.coef[i0];
    for (long i = i0; i < n; ++i)
        if (!(coef[i] * y0 == o.coef[i] * x0)) return false;
    return true;
}

}  // namespace etaunits
