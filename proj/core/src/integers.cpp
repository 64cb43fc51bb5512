#include "etaunits/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaunits {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.emplace_back(d, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r -= r / p;
    return r;
}

int moebius_mu(long n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int omega(long n) { return (int)factorize(n).size(); }

bool is_squarefree(long n) { return moebius_mu(n) != 0; }

int valuation(long p, long n) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    if (n < 0) n = -n;
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long psi_index(long N) {
    long r = N;
    for (auto [p, e] : factorize(N)) r = r / p * (p + 1);
    return r;
}

int jacobi(const Int& a, const Int& b) {
    if (b <= 0 || mpz_even_p(b.get_mpz_t()))
        throw std::invalid_argument("jacobi: b must be positive odd");
    return mpz_jacobi(a.get_mpz_t(), b.get_mpz_t());
}

int jacobi(long a, long b) { return jacobi(Int(a), Int(b)); }

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long ext_gcd(long a, long b, long& x, long& y) {
    long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    long r0 = a, r1 = b;
    while (r1) {
        long q = r0 / r1;
        long t;
        t = r0 - q * r1; r0 = r1; r1 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return r0;
}

long inv_mod(long a, long m) {
    long x, y;
    long g = ext_gcd(a, m, x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
    long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace etaunits
