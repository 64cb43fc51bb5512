#include "doctest.h"

#include "etaunits/eta.hpp"

using namespace etaunits;

TEST_CASE("eta q-expansion is the pentagonal number series") {
    // eta(tau) = q^{1/24} prod (1-q^n); coefficients of the product part
    QExpansion f = atom_qexp(1, 1, 0, 32);
    CHECK(f.offset == Rat(1, 24));
    CHECK(f.phase.is_one());
    std::vector<long> expected(32, 0);
    // sum_{j} (-1)^j q^{j(3j-1)/2} over all integers j
    for (long j = -5; j <= 5; ++j) {
        long e = j * (3 * j - 1) / 2;
        if (e >= 0 && e < 32) expected[e] += (j % 2 == 0) ? 1 : -1;
    }
    for (long i = 0; i < 32; ++i) CHECK(f.coef[i] == Cyc(expected[i]));

    // eta(4 tau): same coefficients spread over q^{4i}
    QExpansion g = atom_qexp(4, 1, 0, 32);
    CHECK(g.offset == Rat(4) / 24);
    for (long i = 0; i < 32; ++i)
        CHECK(g.coef[i] == (i % 4 == 0 ? Cyc(expected[i / 4]) : Cyc{}));

    // eta(2 tau + 1/2): phase e^{2 pi i/48}, root of unity in the product
    QExpansion s = atom_qexp(2, 2, 1, 12);
    CHECK(s.offset == Rat(2) / 24);
    CHECK(s.phase == RootOfUnity(1, 48));
    CHECK(s.coef[0] == Cyc(1));
    CHECK(s.coef[2] == Cyc(1));  // -(zeta_2) q^2 = +q^2
}

TEST_CASE("series arithmetic") {
    QExpansion f = atom_qexp(1, 1, 0, 40);
    QExpansion g = atom_qexp(2, 1, 0, 40);

    QExpansion q = f.mul(g.inverse());
    CHECK(q.offset == Rat(-1, 24));
    QExpansion round = q.mul(g);
    CHECK(round.offset == f.offset);
    for (long i = 0; i < round.terms(); ++i) CHECK(round.coef[i] == f.coef[i]);

    QExpansion c = f.pow(3);
    QExpansion c2 = f.mul(f).mul(f);
    CHECK(c.offset == c2.offset);
    for (long i = 0; i < 40; ++i) CHECK(c.coef[i] == c2.coef[i]);

    QExpansion inv3 = f.pow(Int(-3));
    QExpansion one = inv3.mul(c);
    CHECK(one.offset == 0);
    CHECK(one.coef[0] == Cyc(1));
    for (long i = 1; i < one.terms(); ++i) CHECK(one.coef[i] == Cyc{});

    CHECK(qexp_one(5).pow(0).coef[0] == Cyc(1));
    CHECK_THROWS(QExpansion{}.inverse());
}

TEST_CASE("proportionality") {
    QExpansion f = atom_qexp(1, 1, 0, 30);
    CHECK(f.proportional(f));

    QExpansion g = f;
    for (auto& c : g.coef) c = c.scale(Rat(-7, 3));
    g.phase = RootOfUnity(5, 576);  // phases are ignored by design
    CHECK(f.proportional(g));

    QExpansion h = f;
    h.coef[17] += Cyc(1);
    CHECK(!f.proportional(h));

    QExpansion off = f;
    off.offset += 1;
    CHECK(!f.proportional(off));

    // scaling by a cyclotomic unit is still proportional
    QExpansion w = f;
    for (auto& c : w.coef) c = c * cyc_zeta_pow(7);
    CHECK(f.proportional(w));
}
