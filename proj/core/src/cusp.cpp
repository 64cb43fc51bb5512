#include "etaunits/cusp.hpp"

#include <stdexcept>

namespace etaunits {

std::vector<Cusp> cusps(const Level& lv) {
    std::vector<Cusp> out;
    for (long c : lv.divs) {
        long g = gcd_long(c, lv.N / c);
        for (long a = 1; a <= g; ++a)
            if (gcd_long(a, g) == 1) out.push_back(Cusp{c, a});
    }
    return out;
}

long cusp_width(const Level& lv, const Cusp& cu) {
    return lv.N / (cu.c * gcd_long(cu.c, lv.N / cu.c));
}

long cusp_numerator(const Level& lv, const Cusp& cu) {
    long g = gcd_long(cu.c, lv.N / cu.c);
    long a = cu.a;
    while (gcd_long(a, cu.c) != 1) a += g;
    return a;
}

bool cusps_equivalent(long N, long a1, long c1, long a2, long c2) {
    if (c1 < 0) { a1 = -a1; c1 = -c1; }
    if (c2 < 0) { a2 = -a2; c2 = -c2; }
    if (gcd_long(a1, c1) != 1 || gcd_long(a2, c2) != 1)
        throw std::invalid_argument("cusps_equivalent: fractions must be in lowest terms");
    // s_i a_i = 1 mod c_i; for c = 0 (infinity) s = a = +-1
    long d1 = (c1 == 0) ? a1 : (c1 == 1 ? 0 : inv_mod(((a1 % c1) + c1) % c1, c1));
    long d2 = (c2 == 0) ? a2 : (c2 == 1 ? 0 : inv_mod(((a2 % c2) + c2) % c2, c2));
    // g = gcd(c1 c2, N)
    long g = (c1 == 0 || c2 == 0) ? N : gcd_long(((c1 % N) * (c2 % N)) % N, N);
    long lhs = ((d1 % g) * (c2 % g) - (d2 % g) * (c1 % g)) % g;
    return (lhs + g) % g == 0;
}

Cusp canonicalize_cusp(const Level& lv, long a, long c) {
    if (a == 0 && c == 0) throw std::invalid_argument("canonicalize_cusp: 0/0");
    if (c < 0) { a = -a; c = -c; }
    if (c == 0) return Cusp{lv.N, 1};
    long g0 = gcd_long(a, c);
    if (g0 > 1) { a /= g0; c /= g0; }
    long c0 = gcd_long(c, lv.N);
    long g = gcd_long(c0, lv.N / c0);
    for (long r = 1; r <= g; ++r) {
        if (gcd_long(r, g) != 1) continue;
        Cusp cand{c0, r};
        long lifted = cusp_numerator(lv, cand);
        if (cusps_equivalent(lv.N, a, c, lifted, c0)) return cand;
    }
    throw std::logic_error("canonicalize_cusp: no canonical representative found");
}

void CuspidalDivisor::add(const Cusp& cu, const Rat& x) {
    if (x == 0) return;
    auto it = mult.find(cu);
    if (it == mult.end()) {
        mult.emplace(cu, x);
    } else {
        it->second += x;
        if (it->second == 0) mult.erase(it);
    }
}

Rat CuspidalDivisor::coeff(const Cusp& cu) const {
    auto it = mult.find(cu);
    return it == mult.end() ? Rat(0) : it->second;
}

Rat CuspidalDivisor::degree() const {
    Rat s = 0;
    for (const auto& [cu, x] : mult) s += x;
    return s;
}

bool CuspidalDivisor::is_integral() const {
    for (const auto& [cu, x] : mult)
        if (x.get_den() != 1) return false;
    return true;
}

CuspidalDivisor CuspidalDivisor::operator+(const CuspidalDivisor& o) const {
    if (N != o.N) throw std::invalid_argument("CuspidalDivisor: level mismatch");
    CuspidalDivisor r = *this;
    for (const auto& [cu, x] : o.mult) r.add(cu, x);
    return r;
}

CuspidalDivisor CuspidalDivisor::operator-(const CuspidalDivisor& o) const {
    if (N != o.N) throw std::invalid_argument("CuspidalDivisor: level mismatch");
    CuspidalDivisor r = *this;
    for (const auto& [cu, x] : o.mult) r.add(cu, -x);
    return r;
}

CuspidalDivisor CuspidalDivisor::scale(const Rat& x) const {
    CuspidalDivisor r;
    r.N = N;
    if (x == 0) return r;
    for (const auto& [cu, v] : mult) r.mult.emplace(cu, v * x);
    return r;
}

GaloisElement galois_element(const Level& lv, long ell) {
    ell %= 24;
    if (ell < 0) ell += 24;
    if (gcd_long(ell, 24) != 1)
        throw std::invalid_argument("galois_element: ell must be a unit mod 24");
    long lift = ell;
    while (gcd_long(lift, lv.N) != 1) lift += 24;
    GaloisElement s;
    s.N = lv.N;
    s.ell = lift;
    s.ell_inv = (lv.N == 1) ? 1 : inv_mod(lift % lv.N, lv.N);
    return s;
}

Cusp galois_apply(const Level& lv, const GaloisElement& s, const Cusp& cu) {
    if (s.N != lv.N) throw std::invalid_argument("galois_apply: level mismatch");
    long g = gcd_long(cu.c, lv.N / cu.c);
    if (g == 1) return cu;
    long a = (cu.a * (s.ell_inv % g)) % g;
    if (a == 0) a = g;  // residues are stored in [1, g]
    return Cusp{cu.c, a};
}

CuspidalDivisor galois_apply(const Level& lv, const GaloisElement& s,
                             const CuspidalDivisor& D) {
    if (D.N != lv.N) throw std::invalid_argument("galois_apply: level mismatch");
    CuspidalDivisor out;
    out.N = D.N;
    for (const auto& [cu, v] : D.mult) out.add(galois_apply(lv, s, cu), v);
    return out;
}

bool is_rational_divisor(const Level& lv, const CuspidalDivisor& D) {
    static const long units[] = {5, 7, 11, 13, 17, 19, 23};
    for (long ell : units) {
        if (galois_apply(lv, galois_element(lv, ell), D) == D) continue;
        return false;
    }
    return true;
}

}  // namespace etaunits
