#include "doctest.h"

#include "etaunits/io.hpp"

using namespace etaunits;

TEST_CASE("divisor json round trip") {
    Level lv = make_level(36);
    CuspidalDivisor D;
    D.N = 36;
    D.add({6, 1}, Rat(5, 3));
    D.add({6, 5}, -2);
    D.add({36, 1}, Rat(1, 3));
    std::string text = divisor_to_json(D);
    CuspidalDivisor back = divisor_from_json(lv, text);
    CHECK(back == D);

    CHECK_THROWS(divisor_from_json(lv, "{"));
    CHECK_THROWS(divisor_from_json(lv, R"({"level":36,"entries":[{"c":5,"a":1,"mult":"1"}]})"));
    CHECK_THROWS(divisor_from_json(lv, R"({"level":48,"entries":[]})"));

    CuspidalDivisor empty;
    empty.N = 36;
    CHECK(divisor_from_json(lv, divisor_to_json(empty)) == empty);
}

TEST_CASE("vector json round trip") {
    Level lv = make_level(48);
    ExponentVector v;
    v.N = 48;
    v.add({1, 1}, 3);
    v.add({3, 2}, Int("-123456789123456789"));
    v.add({48, 0}, 1);
    ExponentVector back = vector_from_json(lv, vector_to_json(v));
    CHECK(back == v);

    CHECK_THROWS(vector_from_json(lv, R"({"level":48,"entries":[{"m":5,"k":0,"e":"1"}]})"));
    CHECK_THROWS(vector_from_json(lv, R"({"level":48,"entries":[{"m":1,"k":9,"e":"1"}]})"));
}

TEST_CASE("pretty printers") {
    Level lv = make_level(36);
    CuspidalDivisor D;
    D.N = 36;
    D.add({1, 1}, 1);
    D.add({36, 1}, Rat(-1, 2));
    std::string s = divisor_pretty(D);
    CHECK(s.find("(1/1)") != std::string::npos);
    CHECK(s.find("-1/2") != std::string::npos);

    ExponentVector v;
    v.N = 36;
    v.add({2, 1}, -3);
    std::string t = vector_pretty(v);
    CHECK(t.find("eta[2,1]") != std::string::npos);
    CHECK(t.find("-3") != std::string::npos);

    CHECK(invariants_pretty({}) == "trivial");
    CHECK(invariants_pretty({Int(2), Int(6)}) == "2 6");

    Cyc z = cyc_zeta_pow(1);
    CHECK(cyc_pretty(z).find("z") != std::string::npos);
    CHECK(cyc_pretty(Cyc(1)) == "1");

    QExpansion f = atom_qexp(1, 1, 0, 5);
    std::string q = qexp_pretty(f);
    CHECK(q.find("q") != std::string::npos);
    CHECK(q.find("O(") != std::string::npos);
}
