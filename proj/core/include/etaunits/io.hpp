#ifndef ETAUNITS_IO_HPP
#define ETAUNITS_IO_HPP

#include <string>

#include "etaunits/class_group.hpp"

namespace etaunits {

// {"level": N, "entries": [{"c":.., "a":.., "mult":"p/q"}, ...]}
std::string divisor_to_json(const CuspidalDivisor& D);
CuspidalDivisor divisor_from_json(const Level& lv, const std::string& text);

// {"level": N, "entries": [{"m":.., "k":.., "e":".."}, ...]}
std::string vector_to_json(const ExponentVector& v);
ExponentVector vector_from_json(const Level& lv, const std::string& text);

std::string divisor_pretty(const CuspidalDivisor& D);
std::string vector_pretty(const ExponentVector& v);
std::string cyc_pretty(const Cyc& x);  // in powers of z = zeta_24
std::string qexp_pretty(const QExpansion& f);

// "d1 d2 ... dk" or "trivial"
std::string invariants_pretty(const std::vector<Int>& inv);

}  // namespace etaunits

#endif
