#include "etaunits/level.hpp"

#include <stdexcept>
#include <string>

namespace etaunits {

static const long kSquareParts[] = {24, 12, 8, 6, 4, 3, 2, 1};

Level make_level(long N) {
    if (N <= 0) throw std::invalid_argument("make_level: N must be positive");
    for (long n : kSquareParts) {
        if (N % (n * n) != 0) continue;
        long M = N / (n * n);
        if (!is_squarefree(M)) continue;
        Level lv;
        lv.N = N;
        lv.n = n;
        lv.M = M;
        lv.psi = psi_index(N);
        lv.divs = divisors(N);
        return lv;
    }
    throw std::invalid_argument("make_level: N = " + std::to_string(N) +
                                " is not of the form n^2 M with n | 24, M squarefree");
}

bool is_valid_level(long N) {
    if (N <= 0) return false;
    for (long n : kSquareParts) {
        if (N % (n * n) == 0 && is_squarefree(N / (n * n))) return true;
    }
    return false;
}

std::vector<long> valid_levels(long bound) {
    std::vector<long> out;
    for (long N = 1; N <= bound; ++N)
        if (is_valid_level(N)) out.push_back(N);
    return out;
}

}  // namespace etaunits
