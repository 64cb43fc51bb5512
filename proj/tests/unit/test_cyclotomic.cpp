#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "etaunits/cyclotomic.hpp"

using namespace etaunits;

namespace {

Cyc random_cyc(std::mt19937_64& rng) {
    Cyc x;
    for (int i = 0; i < 8; ++i) {
        long num = (long)(rng() % 11) - 5;
        long den = 1 + (long)(rng() % 4);
        x.c[i] = Rat(num, den);
        x.c[i].canonicalize();
    }
    return x;
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("zeta24 powers and the minimal polynomial") {
    Cyc z = cyc_zeta_pow(1);
    Cyc p = Cyc(1);
    for (int j = 0; j < 30; ++j) {
        CHECK(p == cyc_zeta_pow(j));
        p = p * z;
    }
    CHECK(cyc_zeta_pow(24) == Cyc(1));
    CHECK(cyc_zeta_pow(12) == -Cyc(1));
    CHECK(cyc_zeta_pow(8) * cyc_zeta_pow(8) * cyc_zeta_pow(8) == Cyc(1));
    // z^8 = z^4 - 1
    CHECK(cyc_zeta_pow(8) == cyc_zeta_pow(4) - Cyc(1));

    for (int j = 0; j < 24; ++j) {
        auto v = cyc_zeta_pow(j).to_complex();
        auto w = std::polar(1.0, 2 * kPi * j / 24);
        CHECK(std::abs(v - w) < 1e-12);
    }
}

TEST_CASE("cyc_root gives h-th roots of unity") {
    for (long h : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 24L})
        for (long j = 0; j < h; ++j) {
            Cyc r = cyc_root(h, j);
            Cyc p = Cyc(1);
            for (long i = 0; i < h; ++i) p = p * r;
            CHECK(p == Cyc(1));
            CHECK(r == cyc_zeta_pow(24 / h * j));
        }
}

TEST_CASE("ring operations") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        Cyc x = random_cyc(rng), y = random_cyc(rng), z = random_cyc(rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x - x == Cyc{});
        CHECK(x.scale(Rat(3, 2)) + x.scale(Rat(-1, 2)) == x);

        // numeric consistency of the product
        auto err = std::abs((x * y).to_complex() - x.to_complex() * y.to_complex());
        CHECK(err < 1e-9);
    }
}

TEST_CASE("galois action on Q(zeta24)") {
    std::mt19937_64 rng(9);
    for (long ell : {1L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        CHECK(cyc_galois(cyc_zeta_pow(1), ell) == cyc_zeta_pow(ell));
        for (int t = 0; t < 25; ++t) {
            Cyc x = random_cyc(rng), y = random_cyc(rng);
            CHECK(cyc_galois(x * y, ell) == cyc_galois(x, ell) * cyc_galois(y, ell));
            CHECK(cyc_galois(x + y, ell) == cyc_galois(x, ell) + cyc_galois(y, ell));
        }
    }
    // sigma_5 has order 2
    Cyc x = random_cyc(rng);
    CHECK(cyc_galois(cyc_galois(x, 5), 5) == x);
}

TEST_CASE("cyclotomic inverse") {
    std::mt19937_64 rng(13);
    int nonzero = 0;
    for (int t = 0; t < 60; ++t) {
        Cyc x = random_cyc(rng);
        if (x.is_zero()) continue;
        nonzero++;
        CHECK(x * cyc_inverse(x) == Cyc(1));
    }
    CHECK(nonzero >= 55);
    CHECK_THROWS(cyc_inverse(Cyc{}));
}

TEST_CASE("roots of unity in mu576") {
    CHECK(RootOfUnity(25, 24) == RootOfUnity(1, 24));
    CHECK(RootOfUnity(-1, 24) == RootOfUnity(23, 24));
    CHECK(RootOfUnity(1, 2) * RootOfUnity(1, 2) == RootOfUnity::one());
    CHECK(RootOfUnity(1, 48).pow(48).is_one());
    CHECK(RootOfUnity(5, 576).inverse() * RootOfUnity(5, 576) == RootOfUnity::one());
    CHECK(RootOfUnity(7, 576).pow(Int(-2)) == RootOfUnity(-14, 576));
    CHECK_THROWS(RootOfUnity(1, 5));

    for (long j = 0; j < 24; ++j) {
        RootOfUnity r(j, 24);
        CHECK(r.in_mu24());
        CHECK(r.as_cyc() == cyc_zeta_pow(j));
    }
    CHECK(!RootOfUnity(1, 48).in_mu24());

    auto v = RootOfUnity(5, 576).to_complex();
    CHECK(std::abs(v - std::polar(1.0, 2 * kPi * 5 / 576)) < 1e-12);
}
