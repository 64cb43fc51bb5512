#ifndef ETAUNITS_LEVEL_HPP
#define ETAUNITS_LEVEL_HPP

#include <vector>

#include "etaunits/integers.hpp"

namespace etaunits {

// level N = n^2 M with n | 24 and M squarefree; n is chosen largest possible
struct Level {
    long N = 1;
    long n = 1;
    long M = 1;
    long psi = 1;             // [SL2(Z) : Gamma_0(N)]
    std::vector<long> divs;   // divisors of N, increasing
};

// throws std::invalid_argument if N is not of the admissible form
Level make_level(long N);

bool is_valid_level(long N);

// all admissible levels up to and including bound
std::vector<long> valid_levels(long bound);

}  // namespace etaunits

#endif
