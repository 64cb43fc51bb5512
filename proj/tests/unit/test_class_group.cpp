#include "doctest.h"

#include <random>

#include "etaunits/class_group.hpp"

using namespace etaunits;

namespace {

std::vector<Int> inv_of(long N) { return class_group(make_level(N)).invariants; }

Int group_order(const std::vector<Int>& inv) {
    Int o = 1;
    for (const Int& d : inv) o *= d;
    return o;
}

CuspidalDivisor cusp_minus_infinity(const Level& lv, const Cusp& cu) {
    CuspidalDivisor D;
    D.N = lv.N;
    D.add(cu, 1);
    D.add({lv.N, 1}, -1);
    return D;
}

}  // namespace

TEST_CASE("genus zero levels have trivial class group") {
    for (long N : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L})
        CHECK(inv_of(N).empty());
}

TEST_CASE("frozen invariants") {
    using V = std::vector<Int>;
    CHECK(inv_of(11) == V{5});
    CHECK(inv_of(27) == V{3, 3});
    CHECK(inv_of(36) == V{2, 6});
    CHECK(inv_of(48) == V{2, 4, 8, 8});
    CHECK(inv_of(64) == V{2, 4, 4, 4, 4, 4});
    CHECK(inv_of(72) == V{2, 4, 4, 4, 12, 12});
    CHECK(inv_of(144) == V{2, 2, 2, 4, 8, 8, 8, 8, 24, 24, 24, 24});

    ClassGroup G48 = class_group(make_level(48));
    CHECK(rational_subgroup_invariants(G48) == V{4, 4, 8});
    CHECK(fixed_subgroup_invariants(G48) == V{4, 4, 8});
    ClassGroup G144 = class_group(make_level(144));
    CHECK(rational_subgroup_invariants(G144) == V{4, 4, 4, 24, 24, 24});
    CHECK(fixed_subgroup_invariants(G144) == V{4, 4, 4, 24, 24, 24});
}

TEST_CASE("prime levels: cyclic of order (p-1)/gcd(p-1,12)") {
    for (long p : {11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L}) {
        auto inv = inv_of(p);
        long expected = (p - 1) / gcd_long(p - 1, 12);
        CHECK((long)inv.size() == (expected > 1 ? 1 : 0));
        CHECK(group_order(inv) == expected);
        if (expected > 1) {
            // generated by the class of (0) - (infinity)
            Level lv = make_level(p);
            ClassGroup G = class_group(lv);
            CuspidalDivisor D = cusp_minus_infinity(lv, {1, 1});
            CHECK(class_order(G, D) == expected);
            CHECK(subgroup_invariants(G, {D}) == inv);
        }
    }
}

TEST_CASE("principality and class coordinates") {
    Level lv = make_level(11);
    ClassGroup G = class_group(lv);
    CuspidalDivisor D = cusp_minus_infinity(lv, {1, 1});
    CHECK(!is_principal(G, D));
    CHECK(is_principal(G, D.scale(5)));
    auto x = principal_exponents(G, D.scale(5));
    REQUIRE(x.has_value());
    ExponentVector v;
    v.N = 11;
    for (size_t j = 0; j < x->size(); ++j)
        for (size_t i = 0; i < G.basis.labels.size(); ++i)
            v.add(G.basis.labels[i], (*x)[j] * G.basis.rows[j][i]);
    CHECK(divisor_of(lv, v) == D.scale(5));
    CHECK(!principal_exponents(G, D).has_value());
    CHECK(class_coords(G, D) != class_coords(G, D.scale(2)));
    CHECK(class_coords(G, D.scale(6)) == class_coords(G, D));

    // the zero divisor is principal with empty exponents
    CuspidalDivisor Z;
    Z.N = 11;
    CHECK(is_principal(G, Z));
    CHECK(class_order(G, Z) == 1);
}

TEST_CASE("subgroup invariants of full group as generated group") {
    for (long N : {36L, 48L, 99L}) {
        Level lv = make_level(N);
        ClassGroup G = class_group(lv);
        std::vector<CuspidalDivisor> gens;
        auto cs = cusps(lv);
        for (size_t i = 0; i + 1 < cs.size(); ++i)
            gens.push_back(cusp_minus_infinity(lv, cs[i]));
        CHECK(subgroup_invariants(G, gens) == G.invariants);
    }
}

TEST_CASE("rational equals fixed across small levels") {
    for (long N : valid_levels(150)) {
        Level lv = make_level(N);
        ClassGroup G = class_group(lv);
        CHECK(rational_equals_fixed(G));
    }
}

TEST_CASE("fixed class representatives") {
    for (long N : {36L, 48L, 64L, 99L, 144L}) {
        Level lv = make_level(N);
        ClassGroup G = class_group(lv);
        auto reps = fixed_class_representatives(G);
        CHECK(subgroup_invariants(G, reps) == fixed_subgroup_invariants(G));
        for (const auto& D : reps) {
            CHECK(D.degree() == 0);
            CHECK(D.is_integral());
            for (long ell : {5L, 7L, 13L}) {
                GaloisElement s = galois_element(lv, ell);
                CHECK(is_principal(G, galois_apply(lv, s, D) - D));
            }
        }
    }
}

TEST_CASE("companion products") {
    for (long N : {36L, 48L, 144L, 576L}) {
        Level lv = make_level(N);
        for (const auto& lab : canonical_labels(lv)) {
            if (lab.k == 0) continue;
            ExponentVector comp = companion_vector(lv, lab);
            // same weight as a single eta
            CHECK(comp.weight_sum() == 1);
            // all factors are unshifted or half-shifted: rational divisors
            for (const auto& [l2, e] : comp.e) {
                long h = h_of(lv, l2.m);
                CHECK((l2.k == 0 || 2 * l2.k == h));
            }
            // the ratio eta_{m,k} / companion has integral order at 0 and
            // infinity and satisfies the weight/product/dual conditions
            ExponentVector ratio;
            ratio.N = lv.N;
            ratio.add(lab, 1);
            ratio = ratio - comp;
            auto rep = check_modularity(lv, ratio);
            CHECK(rep.weight_ok);
            CHECK(rep.product_ok);
            CHECK(rep.dual_ok);
            CuspidalDivisor D = divisor_of(lv, ratio);
            CHECK(D.coeff({1, 1}).get_den() == 1);
            CHECK(D.coeff({lv.N, 1}).get_den() == 1);
        }
        CHECK_THROWS_AS(companion_vector(lv, {1, 0}), std::invalid_argument);
    }
}

TEST_CASE("descent congruence") {
    // single eta ratios arising from stable classes satisfy it; simple
    // synthetic counterexamples do not
    Level lv9 = make_level(9);  // n = 3: sum over h(m) = 3 of e'_{m,1} mod 3
    std::map<EtaLabel, Int> e;
    e[{1, 1}] = 1;
    CHECK(!descent_congruence_ok(lv9, e));
    e[{1, 1}] = 3;
    CHECK(descent_congruence_ok(lv9, e));
    Level lv16 = make_level(16);  // n = 4: sum of e'_{m,1} mod 2
    std::map<EtaLabel, Int> e4;
    e4[{1, 1}] = 1;
    CHECK(!descent_congruence_ok(lv16, e4));
    e4[{1, 1}] = 2;
    CHECK(descent_congruence_ok(lv16, e4));
    // n <= 2 has no condition
    CHECK(descent_congruence_ok(make_level(4), e4));
}

TEST_CASE("rationalization round trip") {
    std::mt19937_64 rng(3);
    for (long N : {36L, 48L, 64L, 96L, 144L}) {
        Level lv = make_level(N);
        ClassGroup G = class_group(lv);
        auto reps = fixed_class_representatives(G);
        for (const auto& D : reps) {
            RationalizeResult res = rationalize(G, D);
            CHECK(res.exponents_divisible);
            CHECK(res.congruence_ok);
            CHECK(!res.used_fallback);
            CHECK(is_rational_divisor(lv, res.rational_divisor));
            CHECK(class_coords(G, res.rational_divisor) == class_coords(G, D));
            CHECK(res.class_ord == class_order(G, D));
            if (!res.g.e.empty()) {
                CHECK(is_modular_unit(lv, res.g));
                CHECK(divisor_of(lv, res.g) == D - res.rational_divisor);
            }
        }
        // a non-stable class must be rejected
        auto cs = cusps(lv);
        for (const auto& cu : cs) {
            CuspidalDivisor D = cusp_minus_infinity(lv, cu);
            bool stable = true;
            for (long ell : {5L, 7L, 13L}) {
                GaloisElement s = galois_element(lv, ell);
                if (!is_principal(G, galois_apply(lv, s, D) - D)) stable = false;
            }
            if (!stable) {
                CHECK_THROWS_AS(rationalize(G, D), std::invalid_argument);
                break;
            }
        }
    }
    // corrections are exercised at 64 (recorded behavior, not an assumption)
    Level lv = make_level(64);
    ClassGroup G = class_group(lv);
    int corrections = 0;
    for (const auto& D : fixed_class_representatives(G))
        corrections += rationalize(G, D).used_correction;
    CHECK(corrections > 0);
}

TEST_CASE("rationalizing an already rational divisor is a no-op") {
    Level lv = make_level(48);
    ClassGroup G = class_group(lv);
    CuspidalDivisor D = cusp_minus_infinity(lv, {1, 1});
    REQUIRE(is_rational_divisor(lv, D));
    RationalizeResult res = rationalize(G, D);
    CHECK(res.rational_divisor == D);
    CHECK(res.g.e.empty());
    CHECK(!res.used_correction);
    CHECK(!res.used_fallback);
}
