#include "etaunits/class_group.hpp"

#include <stdexcept>

namespace etaunits {

namespace {

Int lcm_int(const Int& a, const Int& b) {
    Int g = gcd(a, b);
    return a / g * b;
}

// galois generators of (Z/24)^* / {1}
const long kGaloisGens[] = {5, 7, 13};

}  // namespace

ClassGroup class_group(const Level& lv) {
    ClassGroup G;
    G.lv = lv;
    G.cs = cusps(lv);
    G.basis = unit_basis(lv);
    long r = (long)G.cs.size() - 1;
    G.R = IntMatrix(r, r);
    for (long j = 0; j < r; j++) {
        CuspidalDivisor D = divisor_of(lv, G.basis.units[j]);
        for (long i = 0; i < r; i++) {
            Rat x = D.coeff(G.cs[i]);
            if (x.get_den() != 1) throw std::logic_error("class_group: non-integral unit divisor");
            G.R.at(i, j) = x.get_num();
        }
    }
    G.S = snf(G.R);
    for (const Int& d : G.S.diag()) {
        if (d == 0) throw std::logic_error("class_group: unit divisor matrix not full rank");
        if (d > 1) G.invariants.push_back(d);
    }
    return G;
}

std::vector<Int> divisor_xcoords(const ClassGroup& G, const CuspidalDivisor& D) {
    if (D.N != G.lv.N) throw std::invalid_argument("divisor_xcoords: level mismatch");
    if (!D.is_integral() || D.degree() != 0)
        throw std::invalid_argument("divisor_xcoords: need an integral degree-0 divisor");
    long r = (long)G.cs.size() - 1;
    std::vector<Int> x(r);
    for (long i = 0; i < r; i++) x[i] = D.coeff(G.cs[i]).get_num();
    return x;
}

std::vector<Int> class_coords(const ClassGroup& G, const CuspidalDivisor& D) {
    std::vector<Int> x = divisor_xcoords(G, D);
    std::vector<Int> w = G.S.u.mul_vec(x);
    std::vector<Int> diag = G.S.diag();
    for (size_t i = 0; i < w.size(); i++) {
        mpz_fdiv_r(w[i].get_mpz_t(), w[i].get_mpz_t(), diag[i].get_mpz_t());
    }
    return w;
}

bool is_principal(const ClassGroup& G, const CuspidalDivisor& D) {
    for (const Int& y : class_coords(G, D))
        if (y != 0) return false;
    return true;
}

Int class_order(const ClassGroup& G, const CuspidalDivisor& D) {
    std::vector<Int> y = class_coords(G, D);
    std::vector<Int> diag = G.S.diag();
    Int ord = 1;
    for (size_t i = 0; i < y.size(); i++)
        ord = lcm_int(ord, diag[i] / gcd(diag[i], y[i]));
    return ord;
}

std::optional<std::vector<Int>> principal_exponents(const ClassGroup& G,
                                                    const CuspidalDivisor& D) {
    std::vector<Int> x = divisor_xcoords(G, D);
    std::vector<Int> w = G.S.u.mul_vec(x);
    std::vector<Int> diag = G.S.diag();
    std::vector<Int> z(w.size());
    for (size_t i = 0; i < w.size(); i++) {
        if (w[i] % diag[i] != 0) return std::nullopt;
        z[i] = w[i] / diag[i];
    }
    return G.S.v.mul_vec(z);
}

namespace {

// invariant factors of L'/L where L = col(B) (square, full rank) and
// L' = col([cols | B])
std::vector<Int> lattice_quotient_invariants(const IntMatrix& cols, const IntMatrix& B) {
    long r = B.nr;
    IntMatrix M(r, cols.nc + r);
    for (long i = 0; i < r; i++) {
        for (long j = 0; j < cols.nc; j++) M.at(i, j) = cols.at(i, j);
        for (long j = 0; j < r; j++) M.at(i, cols.nc + j) = B.at(i, j);
    }
    SnfResult S2 = snf(M);
    std::vector<Int> d2 = S2.diag();
    for (long i = 0; i < r; i++)
        if (d2[i] == 0) throw std::logic_error("lattice quotient: rank drop");
    // basis of L' is uinv * diag; express B in that basis and take its SNF
    IntMatrix X(r, r);
    for (long j = 0; j < r; j++) {
        std::vector<Int> rc(r);
        for (long i = 0; i < r; i++) rc[i] = B.at(i, j);
        std::vector<Int> w = S2.u.mul_vec(rc);
        for (long i = 0; i < r; i++) {
            if (w[i] % d2[i] != 0) throw std::logic_error("lattice quotient: L not inside L'");
            X.at(i, j) = w[i] / d2[i];
        }
    }
    std::vector<Int> inv;
    for (const Int& d : snf(X).diag()) {
        if (d == 0) throw std::logic_error("lattice quotient: quotient not finite");
        if (d > 1) inv.push_back(d);
    }
    return inv;
}

}  // namespace

std::vector<Int> subgroup_invariants(const ClassGroup& G,
                                     const std::vector<CuspidalDivisor>& gens) {
    long r = G.R.nr;
    IntMatrix cols(r, (long)gens.size());
    for (long j = 0; j < (long)gens.size(); j++) {
        std::vector<Int> x = divisor_xcoords(G, gens[j]);
        for (long i = 0; i < r; i++) cols.at(i, j) = x[i];
    }
    return lattice_quotient_invariants(cols, G.R);
}

std::vector<Int> rational_subgroup_invariants(const ClassGroup& G) {
    // orbit of a cusp under the Galois action is its full c-level
    std::vector<long> degs;
    std::vector<CuspidalDivisor> orbits;
    for (long c : G.lv.divs) {
        CuspidalDivisor O;
        O.N = G.lv.N;
        long cnt = 0;
        for (const Cusp& cu : G.cs)
            if (cu.c == c) {
                O.add(cu, 1);
                cnt++;
            }
        degs.push_back(cnt);
        orbits.push_back(O);
    }
    IntMatrix degrow(1, (long)degs.size());
    for (long j = 0; j < (long)degs.size(); j++) degrow.at(0, j) = degs[j];
    std::vector<CuspidalDivisor> gens;
    for (const auto& y : integer_kernel(degrow)) {
        CuspidalDivisor D;
        D.N = G.lv.N;
        for (size_t c = 0; c < orbits.size(); c++) {
            CuspidalDivisor t = orbits[c].scale(Rat(y[c]));
            for (const auto& [cu, x] : t.mult) D.add(cu, x);
        }
        gens.push_back(D);
    }
    return subgroup_invariants(G, gens);
}

namespace {

// spanning set of the preimage lattice of the fixed subgroup, in class
// coordinates (columns, reduced mod d rowwise)
IntMatrix fixed_lattice(const ClassGroup& G) {
    long r = G.R.nr;
    std::vector<Int> d = G.S.diag();
    // work in class coordinates y = U x mod d: the action of sigma on classes
    // is M_sigma = U G_sigma Uinv with G_sigma the cusp permutation in
    // x-coordinates, and all conditions are congruences mod the d_i. Rows
    // with d_i = 1 are vacuous and dropped, which keeps every entry small.
    std::vector<long> live;
    for (long i = 0; i < r; i++)
        if (d[i] != 1) live.push_back(i);
    long q = (long)live.size();

    IntMatrix W(3 * q, r + 3 * q);
    for (long s = 0; s < 3; s++) {
        GaloisElement sig = galois_element(G.lv, kGaloisGens[s]);
        IntMatrix Gs(r, r);
        for (long j = 0; j < r; j++) {
            CuspidalDivisor D;
            D.N = G.lv.N;
            D.add(G.cs[j], 1);
            D.add(G.cs[r], -1);
            std::vector<Int> col = divisor_xcoords(G, galois_apply(G.lv, sig, D));
            for (long i = 0; i < r; i++) Gs.at(i, j) = col[i];
        }
        IntMatrix Ms = G.S.u.mul(Gs).mul(G.S.uinv);
        for (long a = 0; a < q; a++) {
            long i = live[a];
            for (long j = 0; j < r; j++) {
                Int x = Ms.at(i, j) - (i == j ? 1 : 0);
                mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d[i].get_mpz_t());
                W.at(s * q + a, j) = x;
            }
            W.at(s * q + a, r + s * q + a) = -d[i];
        }
    }
    std::vector<std::vector<Int>> ker = integer_kernel(W);
    // project to the y-part and reduce mod d_i rowwise (d_i e_i is fixed)
    IntMatrix F(r, (long)ker.size());
    for (long j = 0; j < (long)ker.size(); j++)
        for (long i = 0; i < r; i++) {
            Int x = ker[j][i];
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d[i].get_mpz_t());
            F.at(i, j) = x;
        }
    return F;
}

}  // namespace

std::vector<Int> fixed_subgroup_invariants(const ClassGroup& G) {
    long r = G.R.nr;
    std::vector<Int> d = G.S.diag();
    IntMatrix F = fixed_lattice(G);
    IntMatrix Dm(r, r);
    for (long i = 0; i < r; i++) Dm.at(i, i) = d[i];
    return lattice_quotient_invariants(F, Dm);
}

std::vector<CuspidalDivisor> fixed_class_representatives(const ClassGroup& G) {
    long r = G.R.nr;
    IntMatrix F = fixed_lattice(G);
    std::vector<CuspidalDivisor> out;
    for (long j = 0; j < F.nc; j++) {
        std::vector<Int> y(r);
        for (long i = 0; i < r; i++) y[i] = F.at(i, j);
        std::vector<Int> x = G.S.uinv.mul_vec(y);
        CuspidalDivisor D;
        D.N = G.lv.N;
        Int deg = 0;
        for (long i = 0; i < r; i++) {
            D.add(G.cs[i], Rat(x[i]));
            deg += x[i];
        }
        D.add(G.cs[r], Rat(-deg));
        out.push_back(D);
    }
    return out;
}

bool rational_equals_fixed(const ClassGroup& G) {
    return rational_subgroup_invariants(G) == fixed_subgroup_invariants(G);
}

namespace {

void companion_atoms(long m, long h0, const Int& mult,
                     std::map<std::pair<long, int>, Int>& acc) {
    if (h0 == 1) {
        acc[{m, 0}] += mult;
        return;
    }
    if (h0 == 2) {
        acc[{m, 1}] += mult;
        return;
    }
    if (h0 % 3 == 0) {
        long hp = h0 / 3;
        companion_atoms(m, hp, 4 * mult, acc);
        companion_atoms(9 * m, hp, mult, acc);
        companion_atoms(3 * m, hp, -4 * mult, acc);
    } else if (h0 % 4 == 0) {
        long hp = h0 / 4;
        companion_atoms(2 * m, hp, 3 * mult, acc);
        companion_atoms(8 * m, hp, 3 * mult, acc);
        companion_atoms(m, hp, -mult, acc);
        companion_atoms(4 * m, hp, -3 * mult, acc);
        companion_atoms(16 * m, hp, -mult, acc);
    } else {
        throw std::logic_error("companion_atoms: bad h");
    }
}

}  // namespace

ExponentVector companion_vector(const Level& lv, const EtaLabel& lab) {
    validate_label(lv, lab);
    if (lab.k == 0) throw std::invalid_argument("companion_vector: k = 0");
    long h = h_of(lv, lab.m);
    long h0 = h / gcd_long(lab.k, h);
    std::map<std::pair<long, int>, Int> acc;
    companion_atoms(lab.m, h0, 1, acc);
    ExponentVector out;
    out.N = lv.N;
    for (const auto& [dk, e] : acc) {
        auto [d, half] = dk;
        long k2 = 0;
        if (half) {
            long hd = h_of(lv, d);
            if (hd % 2 != 0) throw std::logic_error("companion_vector: odd h at half shift");
            k2 = hd / 2;
        }
        out.add({d, k2}, e);
    }
    return out;
}

namespace {

// exponent vector over canonical labels of the unit with divisor r * D
std::vector<Int> unit_exponents(const ClassGroup& G, const CuspidalDivisor& D) {
    auto x = principal_exponents(G, D);
    if (!x) throw std::logic_error("unit_exponents: divisor not principal");
    std::vector<Int> e(G.basis.labels.size());
    for (size_t j = 0; j < x->size(); j++)
        for (size_t i = 0; i < e.size(); i++) e[i] += (*x)[j] * G.basis.rows[j][i];
    return e;
}

ExponentVector correction_unit(long N) {
    ExponentVector g;
    g.N = N;
    g.add({1, 0}, 2);
    g.add({4, 0}, 7);
    g.add({2, 0}, -7);
    g.add({8, 0}, -2);
    return g;
}

RationalizeResult rationalize_fallback(const ClassGroup& G, const CuspidalDivisor& D) {
    // solve R x + O y = x(D) with O the cusp-orbit indicators; then
    // D - div(prod basis^x) is the rational divisor O y
    long r = G.R.nr;
    long t = (long)G.lv.divs.size();
    IntMatrix M(r, r + t);
    for (long i = 0; i < r; i++)
        for (long j = 0; j < r; j++) M.at(i, j) = G.R.at(i, j);
    for (long j = 0; j < t; j++) {
        long c = G.lv.divs[j];
        for (long i = 0; i < r; i++)
            if (G.cs[i].c == c) M.at(i, r + j) = 1;
    }
    auto sol = solve_integer(M, divisor_xcoords(G, D));
    if (!sol) throw std::logic_error("rationalize: fallback system unsolvable");
    RationalizeResult res;
    res.used_fallback = true;
    res.g.N = G.lv.N;
    for (long j = 0; j < r; j++)
        for (size_t i = 0; i < G.basis.labels.size(); i++)
            res.g.add(G.basis.labels[i], (*sol)[j] * G.basis.rows[j][i]);
    res.rational_divisor = D - divisor_of(G.lv, res.g);
    return res;
}

}  // namespace

bool descent_congruence_ok(const Level& lv, const std::map<EtaLabel, Int>& eprime) {
    if (lv.n <= 2) return true;
    // per-h sums s[h][k] of e'_{m,k} over m with h(m) = h
    auto sum = [&](long h, long k) {
        Int s = 0;
        for (const auto& [lab, e] : eprime)
            if (lab.k == k && h_of(lv, lab.m) == h) s += e;
        return s;
    };
    Int lhs;
    long mod;
    switch (lv.n) {
        case 3:
            lhs = sum(3, 1), mod = 3;
            break;
        case 4:
            lhs = sum(4, 1), mod = 2;
            break;
        case 6:
            lhs = -2 * sum(6, 1) + 2 * sum(3, 1), mod = 6;
            break;
        case 8:
            lhs = 6 * sum(8, 1) + 4 * sum(8, 2) + 2 * sum(8, 3) + 4 * sum(4, 1), mod = 8;
            break;
        default: {  // n = 12, 24
            lhs = 0, mod = lv.n;
            for (const auto& [lab, e] : eprime)
                if (lab.k != 0) lhs += 2 * Int(lv.n / h_of(lv, lab.m)) * lab.k * e;
            break;
        }
    }
    return lhs % mod == 0;
}

RationalizeResult rationalize(const ClassGroup& G, const CuspidalDivisor& D) {
    const Level& lv = G.lv;
    if (D.N != lv.N) throw std::invalid_argument("rationalize: level mismatch");
    if (!D.is_integral() || D.degree() != 0)
        throw std::invalid_argument("rationalize: need an integral degree-0 divisor");
    for (long ell : kGaloisGens) {
        GaloisElement sig = galois_element(lv, ell);
        if (!is_principal(G, galois_apply(lv, sig, D) - D))
            throw std::invalid_argument("rationalize: class is not Galois-stable");
    }

    RationalizeResult res;
    res.g.N = lv.N;
    res.class_ord = class_order(G, D);
    if (is_rational_divisor(lv, D)) {
        res.rational_divisor = D;
        return res;
    }

    bool primary_ok = false;
    Int r = res.class_ord;
    std::vector<Int> e = unit_exponents(G, D.scale(Rat(r)));
    std::map<EtaLabel, Int> eprime;
    for (size_t i = 0; i < e.size(); i++) {
        const EtaLabel& lab = G.basis.labels[i];
        if (lab.k == 0) continue;
        if (e[i] % r != 0) res.exponents_divisible = false;
        else if (e[i] != 0) eprime[lab] = e[i] / r;
    }
    if (res.exponents_divisible) {
        res.congruence_ok = descent_congruence_ok(lv, eprime);
        ExponentVector g;
        g.N = lv.N;
        for (const auto& [lab, ep] : eprime) {
            g.add(lab, ep);
            ExponentVector comp = companion_vector(lv, lab).scale(ep);
            g = g - comp;
        }
        CriterionReport rep = check_modularity(lv, g);
        if (!rep.ok() && rep.weight_ok && rep.product_ok && rep.dual_ok &&
            lv.n % 2 == 0 && lv.N % 8 == 0) {
            g = g + correction_unit(lv.N);
            res.used_correction = true;
            rep = check_modularity(lv, g);
        }
        if (rep.ok()) {
            res.g = g;
            res.rational_divisor = D - divisor_of(lv, g);
            primary_ok = is_rational_divisor(lv, res.rational_divisor);
        }
    }
    if (!primary_ok) {
        Int ord = res.class_ord;
        res = rationalize_fallback(G, D);
        res.class_ord = ord;
    }

    if (!is_rational_divisor(lv, res.rational_divisor))
        throw std::logic_error("rationalize: result not rational");
    if (class_coords(G, res.rational_divisor) != class_coords(G, D))
        throw std::logic_error("rationalize: class changed");
    return res;
}

}  // namespace etaunits
