#ifndef ETAUNITS_INTEGERS_HPP
#define ETAUNITS_INTEGERS_HPP

#include <gmpxx.h>
#include <cstdint>
#include <vector>
#include <utility>

namespace etaunits {

typedef mpz_class Int;
typedef mpq_class Rat;

// factorization of n > 0 by trial division, (prime, exponent) pairs in
// increasing prime order
std::vector<std::pair<long, int>> factorize(long n);

std::vector<long> divisors(long n);

long euler_phi(long n);

// Moebius mu; 0 on non-squarefree input
int moebius_mu(long n);

// number of distinct prime factors
int omega(long n);

bool is_squarefree(long n);

// exponent of p in n (n != 0)
int valuation(long p, long n);

// psi(N) = N prod_{p|N} (1 + 1/p), the index [SL2(Z) : Gamma_0(N)]
long psi_index(long N);

// Jacobi symbol (a|b); b must be positive and odd
int jacobi(const Int& a, const Int& b);
int jacobi(long a, long b);

// gcd for longs (nonnegative result)
long gcd_long(long a, long b);

// extended gcd: returns g = gcd(a,b) >= 0 and x, y with a x + b y = g
long ext_gcd(long a, long b, long& x, long& y);

// modular inverse of a mod m (m > 0, gcd(a, m) = 1); result in [0, m)
long inv_mod(long a, long m);

}  // namespace etaunits

#endif
