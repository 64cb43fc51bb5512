#include "etaunits/io.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace etaunits {

namespace {

using nlohmann::json;

Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    x.canonicalize();
    return x;
}

Int int_from_string(const std::string& s) {
    Int x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
    return x;
}

}  // namespace

std::string divisor_to_json(const CuspidalDivisor& D) {
    json entries = json::array();
    for (const auto& [cu, x] : D.mult)
        entries.push_back({{"c", cu.c}, {"a", cu.a}, {"mult", x.get_str()}});
    json out = {{"level", D.N}, {"entries", entries}};
    return out.dump(2);
}

CuspidalDivisor divisor_from_json(const Level& lv, const std::string& text) {
    json in = json::parse(text);
    CuspidalDivisor D;
    D.N = in.at("level").get<long>();
    if (D.N != lv.N) throw std::invalid_argument("divisor_from_json: level mismatch");
    std::vector<Cusp> cs = cusps(lv);
    for (const auto& e : in.at("entries")) {
        Cusp cu{e.at("c").get<long>(), e.at("a").get<long>()};
        if (!std::binary_search(cs.begin(), cs.end(), cu))
            throw std::invalid_argument("divisor_from_json: not a canonical cusp");
        D.add(cu, rat_from_string(e.at("mult").get<std::string>()));
    }
    return D;
}

std::string vector_to_json(const ExponentVector& v) {
    json entries = json::array();
    for (const auto& [lab, e] : v.e)
        entries.push_back({{"m", lab.m}, {"k", lab.k}, {"e", e.get_str()}});
    json out = {{"level", v.N}, {"entries", entries}};
    return out.dump(2);
}

ExponentVector vector_from_json(const Level& lv, const std::string& text) {
    json in = json::parse(text);
    ExponentVector v;
    v.N = in.at("level").get<long>();
    if (v.N != lv.N) throw std::invalid_argument("vector_from_json: level mismatch");
    for (const auto& e : in.at("entries")) {
        EtaLabel lab{e.at("m").get<long>(), e.at("k").get<long>()};
        validate_label(lv, lab);
        v.add(lab, int_from_string(e.at("e").get<std::string>()));
    }
    return v;
}

std::string divisor_pretty(const CuspidalDivisor& D) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [cu, x] : D.mult) {
        if (!first) os << " + ";
        first = false;
        os << x.get_str() << "*(" << cu.a << "/" << cu.c << ")";
    }
    if (first) os << "0";
    return os.str();
}

std::string vector_pretty(const ExponentVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [lab, e] : v.e) {
        if (!first) os << " * ";
        first = false;
        os << "eta[" << lab.m << "," << lab.k << "]^" << e.get_str();
    }
    if (first) os << "1";
    return os.str();
}

std::string cyc_pretty(const Cyc& x) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; i++) {
        if (x.c[i] == 0) continue;
        Rat v = x.c[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string qexp_pretty(const QExpansion& f) {
    std::ostringstream os;
    if (!f.phase.is_one()) os << "zeta576^" << f.phase.num << " * ";
    if (f.offset != 0) os << "q^(" << f.offset.get_str() << ") * ";
    os << "(";
    bool first = true;
    for (long i = 0; i < f.terms(); i++) {
        if (f.coef[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << cyc_pretty(f.coef[i]) << ")";
        if (i == 1) os << "*q";
        if (i > 1) os << "*q^" << i;
    }
    if (first) os << "0";
    os << " + O(q^" << f.terms() << "))";
    return os.str();
}

std::string invariants_pretty(const std::vector<Int>& inv) {
    if (inv.empty()) return "trivial";
    std::ostringstream os;
    for (size_t i = 0; i < inv.size(); i++) {
        if (i) os << " ";
        os << inv[i].get_str();
    }
    return os.str();
}

}  // namespace etaunits
