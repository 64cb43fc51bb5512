#include "etaunits/eta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace etaunits {

void ExponentVector::add(const EtaLabel& lab, const Int& x) {
    auto it = e.find(lab);
    if (it == e.end()) {
        if (x != 0) e.emplace(lab, x);
        return;
    }
    it->second += x;
    if (it->second == 0) e.erase(it);
}

Int ExponentVector::coeff(const EtaLabel& lab) const {
    auto it = e.find(lab);
    return it == e.end() ? Int(0) : it->second;
}

Int ExponentVector::weight_sum() const {
    Int s = 0;
    for (const auto& [lab, x] : e) s += x;
    return s;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (N != o.N) throw std::invalid_argument("ExponentVector: level mismatch");
    ExponentVector r = *this;
    for (const auto& [lab, x] : o.e) r.add(lab, x);
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (N != o.N) throw std::invalid_argument("ExponentVector: level mismatch");
    ExponentVector r = *this;
    for (const auto& [lab, x] : o.e) r.add(lab, -x);
    return r;
}

ExponentVector ExponentVector::scale(const Int& x) const {
    ExponentVector r;
    r.N = N;
    if (x == 0) return r;
    for (const auto& [lab, y] : e) r.e.emplace(lab, x * y);
    return r;
}

long h_of(const Level& lv, long m) {
    if (m <= 0 || lv.N % m != 0)
        throw std::invalid_argument("h_of: m must divide N");
    long h = 1;
    for (long p : {2L, 3L}) {
        long en = valuation(p, lv.N), em = valuation(p, m);
        long e2 = (en - em) / 2;
        for (long i = 0; i < e2; i++) h *= p;
    }
    return h;
}

bool is_valid_label(const Level& lv, const EtaLabel& lab) {
    if (lab.m <= 0 || lv.N % lab.m != 0) return false;
    long h = h_of(lv, lab.m);
    return lab.k >= 0 && lab.k < h;
}

void validate_label(const Level& lv, const EtaLabel& lab) {
    if (!is_valid_label(lv, lab))
        throw std::invalid_argument("invalid eta label (" + std::to_string(lab.m) +
                                    "," + std::to_string(lab.k) + ") at level " +
                                    std::to_string(lv.N));
}

bool is_canonical_label(const Level& lv, const EtaLabel& lab) {
    return is_valid_label(lv, lab) && lab.k < euler_phi(h_of(lv, lab.m));
}

Rat atom_order(const Level& lv, long m, long h, long j, const Cusp& cu) {
    if (m <= 0 || h <= 0 || lv.N % (m * h * h) != 0)
        throw std::invalid_argument("atom_order: need m h^2 | N");
    if (j < 0 || j >= h) throw std::invalid_argument("atom_order: shift out of range");
    long a = cusp_numerator(lv, cu);
    long c = cu.c;
    // eta(m tau + j/h) near a/c behaves like eta at the cusp (m h a + j c)/(h c)
    long t = m * h * a + j * c;
    long g = gcd_long(t < 0 ? -t : t, h * c);
    long cp = (h * c) / g;
    Rat ord(Int(c) * lv.N, Int(24) * m * cp * cp * gcd_long(c, lv.N / c));
    ord.canonicalize();
    return ord;
}

Rat eta_order_at_cusp(const Level& lv, const EtaLabel& lab, const Cusp& cu) {
    validate_label(lv, lab);
    return atom_order(lv, lab.m, h_of(lv, lab.m), lab.k, cu);
}

CuspidalDivisor eta_divisor(const Level& lv, const EtaLabel& lab) {
    validate_label(lv, lab);
    long h = h_of(lv, lab.m);
    CuspidalDivisor D;
    D.N = lv.N;
    for (const Cusp& cu : cusps(lv)) D.add(cu, atom_order(lv, lab.m, h, lab.k, cu));
    return D;
}

CuspidalDivisor divisor_of(const Level& lv, const ExponentVector& v) {
    if (v.N != lv.N) throw std::invalid_argument("divisor_of: level mismatch");
    CuspidalDivisor D;
    D.N = lv.N;
    for (const auto& [lab, x] : v.e) {
        CuspidalDivisor d1 = eta_divisor(lv, lab);
        for (const auto& [cu, r] : d1.mult) D.add(cu, r * Rat(x));
    }
    return D;
}

namespace {

// normalize to c > 0, or c = 0 with d > 0 (gamma and -gamma act identically)
MatrixSL2 normalize_sl2(const MatrixSL2& g0) {
    if (g0.a * g0.d - g0.b * g0.c != 1)
        throw std::invalid_argument("matrix must have determinant 1");
    MatrixSL2 g = g0;
    if (g.c < 0 || (g.c == 0 && g.d < 0)) {
        g.a = -g.a;
        g.b = -g.b;
        g.c = -g.c;
        g.d = -g.d;
    }
    return g;
}

long mod24(const Int& v) {
    Int r = v % 24;
    if (r < 0) r += 24;
    return r.get_si();
}

}  // namespace

RootOfUnity eta_epsilon(const MatrixSL2& g0) {
    MatrixSL2 g = normalize_sl2(g0);
    if (g.c == 0) throw std::invalid_argument("eta_epsilon: c = 0");
    int sign;
    Int v;
    if (g.c % 2 != 0) {
        Int r = g.d % g.c;
        if (r < 0) r += g.c;
        sign = jacobi(r, g.c);
        v = 6 * ((1 - g.c) / 2) + g.b * g.d * (1 - g.c * g.c) + g.c * (g.a + g.d);
    } else {
        Int dd = g.d < 0 ? Int(-g.d) : g.d;
        sign = jacobi(g.c % dd, dd);
        v = g.a * g.c * (1 - g.d * g.d) + g.d * (g.b - g.c + 3);
    }
    RootOfUnity eps(mod24(v), 24);
    if (sign < 0) eps = eps * RootOfUnity(1, 2);
    return eps;
}

RootOfUnity eta_multiplier(const Level& lv, const EtaLabel& lab, const MatrixSL2& g0) {
    validate_label(lv, lab);
    if (g0.c % lv.N != 0)
        throw std::invalid_argument("eta_multiplier: matrix not in Gamma_0(N)");
    MatrixSL2 g = normalize_sl2(g0);
    long m = lab.m, k = lab.k;
    long h = h_of(lv, m);
    if (g.c == 0) {
        // g = (1 b; 0 1): eta(m tau + m b + k/h) = e^{2 pi i m b/24} eta_{m,k}
        if (g.a != 1 || g.d != 1) throw std::logic_error("eta_multiplier: bad translation");
        return RootOfUnity(mod24(g.b * m), 24);
    }
    // conjugate by sigma = (m h, k; 0, h): the multiplier of eta_{m,k} at g
    // equals epsilon(sigma g sigma^{-1}), and sigma g sigma^{-1} is integral
    // with positive lower-left entry whenever g is in Gamma_0(N)
    Int t = Int(m) * h * g.a + Int(k) * g.c;
    Int A0 = t * h;
    Int B0 = -t * k + (Int(m) * h * g.b + Int(k) * g.d) * m * h;
    Int C0 = Int(h) * h * g.c;
    Int D0 = -Int(h) * g.c * k + Int(h) * h * g.d * m;
    Int den = Int(m) * h * h;
    if (A0 % den != 0 || B0 % den != 0 || C0 % den != 0 || D0 % den != 0)
        throw std::logic_error("eta_multiplier: conjugated matrix not integral");
    MatrixSL2 cg{A0 / den, B0 / den, C0 / den, D0 / den};
    if (cg.a * cg.d - cg.b * cg.c != 1)
        throw std::logic_error("eta_multiplier: conjugated matrix not unimodular");
    if (cg.c <= 0) throw std::logic_error("eta_multiplier: conjugation lost c > 0");
    return eta_epsilon(cg);
}

RootOfUnity product_multiplier(const Level& lv, const ExponentVector& v,
                               const MatrixSL2& g) {
    if (v.N != lv.N) throw std::invalid_argument("product_multiplier: level mismatch");
    if (v.weight_sum() != 0)
        throw std::invalid_argument("product_multiplier: vector must have weight 0");
    RootOfUnity r;
    for (const auto& [lab, x] : v.e) r = r * eta_multiplier(lv, lab, g).pow(x);
    return r;
}

QExpansion atom_qexp(long m, long h, long j, long terms) {
    if (m <= 0 || h <= 0 || 24 % h != 0 || j < 0 || j >= h)
        throw std::invalid_argument("atom_qexp: bad atom");
    if (terms <= 0) throw std::invalid_argument("atom_qexp: terms must be positive");
    QExpansion f;
    f.offset = Rat(m, 24);
    f.offset.canonicalize();
    f.phase = RootOfUnity(j, 24 * h);
    f.coef.assign(terms, Cyc());
    f.coef[0] = Cyc(1);
    // prod_{l>=1} (1 - zeta_h^{l j} q^{m l})
    for (long l = 1; m * l <= terms - 1; l++) {
        Cyc z = cyc_root(h, (l * j) % h);
        for (long i = terms - 1; i >= m * l; i--) f.coef[i] -= z * f.coef[i - m * l];
    }
    return f;
}

QExpansion eta_qexp(const Level& lv, const EtaLabel& lab, long terms) {
    validate_label(lv, lab);
    return atom_qexp(lab.m, h_of(lv, lab.m), lab.k, terms);
}

QExpansion qexp_of(const Level& lv, const ExponentVector& v, long terms) {
    if (v.N != lv.N) throw std::invalid_argument("qexp_of: level mismatch");
    QExpansion f = qexp_one(terms);
    for (const auto& [lab, x] : v.e) f = f.mul(eta_qexp(lv, lab, terms).pow(x));
    return f;
}

std::vector<EtaLabel> all_labels(const Level& lv) {
    std::vector<EtaLabel> out;
    for (long m : lv.divs) {
        long h = h_of(lv, m);
        for (long k = 0; k < h; k++) out.push_back({m, k});
    }
    return out;
}

std::vector<EtaLabel> canonical_labels(const Level& lv) {
    std::vector<EtaLabel> out;
    for (long m : lv.divs) {
        long p = euler_phi(h_of(lv, m));
        for (long k = 0; k < p; k++) out.push_back({m, k});
    }
    return out;
}

long canonical_pair_count(const Level& lv) {
    long total = 0;
    for (long h = 1; h <= lv.n; h++) {
        if (lv.n % h != 0) continue;
        total += euler_phi(h) * (1L << omega(lv.N / (h * h)));
    }
    return total;
}

namespace {

// atom (m, shift) with the shift kept as an exact rational in [0, 1)
using Atom = std::pair<long, Rat>;

Rat frac_mod1(const Rat& x) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(r, x.get_den());
}

void push_atom(std::vector<std::pair<Atom, Int>>& work, long m, const Rat& s,
               const Int& e) {
    if (e == 0) return;
    work.emplace_back(Atom{m, frac_mod1(s)}, e);
}

}  // namespace

ExponentVector rewrite_to_canonical(const Level& lv, const EtaLabel& lab,
                                    RewriteCheck check) {
    validate_label(lv, lab);
    ExponentVector out;
    out.N = lv.N;

    std::vector<std::pair<Atom, Int>> work;
    {
        long h = h_of(lv, lab.m);
        Rat s(lab.k, h);
        s.canonicalize();
        push_atom(work, lab.m, s, 1);
    }

    long steps = 0;
    while (!work.empty()) {
        if (++steps > 10000) throw std::logic_error("rewrite_to_canonical: no termination");
        auto [atom, e] = work.back();
        work.pop_back();
        auto [m, s] = atom;
        long h = h_of(lv, m);
        Rat t = s * h;
        if (t.get_den() != 1)
            throw std::logic_error("rewrite_to_canonical: non-integral shift");
        long k = t.get_num().get_si();  // s in [0,1) so k in [0,h)
        if (k < euler_phi(h)) {
            out.add({m, k}, e);
            continue;
        }
        Rat third(1, 3), sixth(1, 6), half(1, 2);
        if (h % 2 == 0 && k >= h / 2) {
            // eta(x + 1/2) = eta(2x)^3 / (eta(x) eta(4x))
            Rat sp = s - half;
            push_atom(work, 2 * m, 2 * sp, 3 * e);
            push_atom(work, m, sp, -e);
            push_atom(work, 4 * m, 4 * sp, -e);
        } else if (h == 3 && k == 2) {
            // eta(x + 2/3) = eta(3x)^4 / (eta(x) eta(9x) eta(x + 1/3))
            push_atom(work, 3 * m, Rat(0), 4 * e);
            push_atom(work, m, Rat(0), -e);
            push_atom(work, 9 * m, Rat(0), -e);
            push_atom(work, m, third, -e);
        } else {
            // phi(h) <= k < h/2 with h in {6, 12, 24}: composite of the
            // 1/3- and 1/2-shift identities, lowers the shift by 1/6
            if (h != 6 && h != 12 && h != 24)
                throw std::logic_error("rewrite_to_canonical: unexpected atom");
            push_atom(work, 3 * m, 3 * s - 1, 4 * e);
            push_atom(work, m, s - sixth, e);
            push_atom(work, 4 * m, 4 * s - Rat(2, 3), e);
            push_atom(work, m, s - third, -e);
            push_atom(work, 9 * m, 9 * s - 3, -e);
            push_atom(work, 2 * m, 2 * s - third, -3 * e);
        }
    }

    if (check != RewriteCheck::none) {
        if (!(divisor_of(lv, out) == eta_divisor(lv, lab)))
            throw std::logic_error("rewrite_to_canonical: divisor mismatch");
        for (const auto& [l2, x] : out.e)
            if (!is_canonical_label(lv, l2))
                throw std::logic_error("rewrite_to_canonical: non-canonical output");
        if (check == RewriteCheck::full) {
            ExponentVector lhs;
            lhs.N = lv.N;
            lhs.add(lab, 1);
            if (!qexp_of(lv, lhs, 100).proportional(qexp_of(lv, out, 100)))
                throw std::logic_error("rewrite_to_canonical: q-expansion mismatch");
        }
    }
    return out;
}

ExponentVector rewrite_vector(const Level& lv, const ExponentVector& v,
                              RewriteCheck check) {
    ExponentVector out;
    out.N = lv.N;
    for (const auto& [lab, x] : v.e) {
        if (is_canonical_label(lv, lab)) {
            out.add(lab, x);
            continue;
        }
        ExponentVector r = rewrite_to_canonical(lv, lab, check);
        for (const auto& [l2, y] : r.e) out.add(l2, x * y);
    }
    return out;
}

ExponentVector galois_twist(const Level& lv, const ExponentVector& v, long ell) {
    if (gcd_long(ell, 24) != 1)
        throw std::invalid_argument("galois_twist: ell must be a unit mod 24");
    ExponentVector out;
    out.N = lv.N;
    for (const auto& [lab, x] : v.e) {
        long h = h_of(lv, lab.m);
        long k2 = (long)(((__int128)ell * lab.k) % h);
        if (k2 < 0) k2 += h;
        out.add({lab.m, k2}, x);
    }
    return out;
}

}  // namespace etaunits
