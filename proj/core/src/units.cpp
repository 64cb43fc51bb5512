#include "etaunits/units.hpp"

#include <stdexcept>

namespace etaunits {

namespace {

long shift_coef(const Level& lv, long m, long k) {
    long h = h_of(lv, m);
    if (lv.n % 2 != 0) return k;  // mod 3
    return k * (lv.n / h) + (lv.n / 2) * valuation(2, m);  // mod n
}

std::vector<long> square_primes(const Level& lv) {
    std::vector<long> ps;
    for (auto [p, e] : factorize(lv.N)) {
        (void)e;
        if (lv.n % 2 == 0 && p == 2) continue;
        ps.push_back(p);
    }
    return ps;
}

}  // namespace

CriterionReport check_modularity(const Level& lv, const ExponentVector& v) {
    if (v.N != lv.N) throw std::invalid_argument("check_modularity: level mismatch");
    CriterionReport rep;
    Int weight = 0, product = 0, dual = 0, shift = 0;
    for (const auto& [lab, e] : v.e) {
        validate_label(lv, lab);
        long h = h_of(lv, lab.m);
        long g = gcd_long(h, lab.k);
        weight += e;
        product += e * lab.m;
        dual += e * (lv.N / (lab.m * h * h)) * g * g;
        shift += e * shift_coef(lv, lab.m, lab.k);
    }
    rep.weight_ok = weight == 0;
    rep.product_ok = product % 24 == 0;
    rep.dual_ok = dual % 24 == 0;
    rep.shift_ok = shift % (lv.n % 2 != 0 ? 3 : lv.n) == 0;
    rep.square_ok = true;
    for (long p : square_primes(lv)) {
        Int s = 0;
        for (const auto& [lab, e] : v.e) s += e * valuation(p, lab.m);
        if (s % 2 != 0) rep.square_ok = false;
    }
    return rep;
}

bool is_modular_unit(const Level& lv, const ExponentVector& v) {
    return check_modularity(lv, v).ok();
}

UnitBasis unit_basis(const Level& lv) {
    UnitBasis ub;
    ub.labels = canonical_labels(lv);
    long L = (long)ub.labels.size();

    // congruence rows (coefficients over the labels, modulus; 0 = exact)
    std::vector<std::pair<std::vector<Int>, long>> spec;
    auto coef_row = [&](auto f) {
        std::vector<Int> r(L);
        for (long j = 0; j < L; j++) r[j] = f(ub.labels[j]);
        return r;
    };
    spec.emplace_back(coef_row([&](const EtaLabel&) -> Int { return 1; }), 0);
    spec.emplace_back(coef_row([&](const EtaLabel& lab) -> Int { return lab.m; }), 24);
    spec.emplace_back(coef_row([&](const EtaLabel& lab) -> Int {
                          long h = h_of(lv, lab.m);
                          long g = gcd_long(h, lab.k);
                          return Int(lv.N / (lab.m * h * h)) * g * g;
                      }),
                      24);
    spec.emplace_back(coef_row([&](const EtaLabel& lab) -> Int {
                          return shift_coef(lv, lab.m, lab.k);
                      }),
                      lv.n % 2 != 0 ? 3 : lv.n);
    for (long p : square_primes(lv))
        spec.emplace_back(
            coef_row([&](const EtaLabel& lab) -> Int { return valuation(p, lab.m); }), 2);

    long naux = 0;
    for (auto& [r, mod] : spec)
        if (mod != 0) naux++;
    IntMatrix A((long)spec.size(), L + naux);
    long t = 0;
    for (long i = 0; i < (long)spec.size(); i++) {
        for (long j = 0; j < L; j++) A.at(i, j) = spec[i].first[j];
        if (spec[i].second != 0) A.at(i, L + t++) = -spec[i].second;
    }

    std::vector<std::vector<Int>> ker = integer_kernel(A);
    // the aux part of a kernel vector is determined by its label part, so
    // projecting a kernel basis gives a basis of the criterion lattice
    IntMatrix P(L, (long)ker.size());
    for (long j = 0; j < (long)ker.size(); j++)
        for (long i = 0; i < L; i++) P.at(i, j) = ker[j][i];
    IntMatrix H = hermite_columns(P);
    if (H.nc != (long)ker.size())
        throw std::logic_error("unit_basis: kernel projection dropped rank");
    long expected = (long)cusps(lv).size() - 1;
    if (H.nc != expected) throw std::logic_error("unit_basis: rank != #cusps - 1");

    for (long j = 0; j < H.nc; j++) {
        std::vector<Int> row(L);
        ExponentVector v;
        v.N = lv.N;
        for (long i = 0; i < L; i++) {
            row[i] = H.at(i, j);
            v.add(ub.labels[i], H.at(i, j));
        }
        if (!is_modular_unit(lv, v)) throw std::logic_error("unit_basis: criterion fails");
        if (!divisor_of(lv, v).is_integral())
            throw std::logic_error("unit_basis: non-integral divisor");
        ub.rows.push_back(std::move(row));
        ub.units.push_back(std::move(v));
    }
    return ub;
}

}  // namespace etaunits
