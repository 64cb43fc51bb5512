#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "etaunits/numeric.hpp"

using namespace etaunits;

using cd = std::complex<double>;

TEST_CASE("eta at special points") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    cd i(0.0, 1.0);
    CHECK(std::abs(eta_value(i) - cd(0.7682254223260567, 0.0)) < 1e-13);
    // eta(2i) = eta(i) / 2^{3/8}
    CHECK(std::abs(eta_value(2.0 * i) - eta_value(i) / std::pow(2.0, 0.375)) < 1e-13);
    // eta(tau + 1) = e^{2 pi i / 24} eta(tau)
    cd tau(0.3, 0.9);
    cd expected = std::polar(1.0, 2 * 3.14159265358979323846 / 24) * eta_value(tau);
    CHECK(std::abs(eta_value(tau + 1.0) - expected) < 1e-12);
    // eta(-1/tau) = sqrt(tau / i) eta(tau)
    cd lhs = eta_value(-1.0 / tau);
    cd rhs = std::sqrt(tau / i) * eta_value(tau);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("label and product values agree with q-expansions") {
    std::mt19937_64 rng(12);
    for (long N : {16L, 36L, 48L}) {
        Level lv = make_level(N);
        cd tau(0.137, 1.21);
        for (const auto& lab : canonical_labels(lv)) {
            cd direct = eta_label_value(lv, lab, tau);
            cd series = qexp_value(eta_qexp(lv, lab, 80), tau);
            CHECK(std::abs(direct - series) < 1e-10 * std::abs(direct));
        }
        // a weight-0 product
        auto labs = canonical_labels(lv);
        ExponentVector v;
        v.N = N;
        v.add(labs[0], 2);
        v.add(labs[labs.size() / 2], -1);
        v.add(labs.back(), -1);
        cd direct = product_value(lv, v, tau);
        cd series = qexp_value(qexp_of(lv, v, 120), tau);
        CHECK(std::abs(direct - series) < 1e-9 * std::abs(direct));
    }
}

TEST_CASE("random gamma0 elements") {
    std::mt19937_64 rng(99);
    for (long N : {1L, 11L, 36L, 576L})
        for (int t = 0; t < 50; ++t) {
            MatrixSL2 g = random_gamma0(N, rng);
            CHECK(g.a * g.d - g.b * g.c == 1);
            CHECK(g.c % N == 0);
            CHECK(g.c != 0);
        }
}

TEST_CASE("numeric transformation checks") {
    std::mt19937_64 rng(7);
    MatrixSL2 S{0, -1, 1, 0};
    CHECK(epsilon_numeric_check(S, 10, 1, 1e-12).ok);

    for (long N : {9L, 36L, 48L}) {
        Level lv = make_level(N);
        for (int t = 0; t < 5; ++t) {
            MatrixSL2 g = random_gamma0(N, rng);
            CHECK(epsilon_numeric_check(g, 4, 17 + t, 1e-10).ok);
        }
        ExponentVector v;
        v.N = N;
        v.add({1, 1}, 1);
        v.add({1, 0}, -1);
        auto r = multiplier_numeric_check(lv, v, 30, 5, 1e-9);
        CHECK(r.ok);
        CHECK(r.max_err < 1e-9);
        auto q = qexp_numeric_check(lv, v, 60, 8, 11, 1e-8);
        CHECK(q.ok);
    }
}
