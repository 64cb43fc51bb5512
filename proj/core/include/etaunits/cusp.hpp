#ifndef ETAUNITS_CUSP_HPP
#define ETAUNITS_CUSP_HPP

#include <map>
#include <utility>
#include <vector>

#include "etaunits/level.hpp"

namespace etaunits {

// cusp of X_0(N) in canonical coordinates: c | N and a is a residue in
// [1, g] coprime to g, where g = gcd(c, N/c). The cusp is the class of the
// fraction a'/c with a' = a (mod g), gcd(a', c) = 1.
struct Cusp {
    long c = 1;
    long a = 1;

    bool operator<(const Cusp& o) const { return c < o.c || (c == o.c && a < o.a); }
    bool operator==(const Cusp& o) const { return c == o.c && a == o.a; }
};

// all cusps, sorted by (c, a). Cusp 0 is (1,1); cusp infinity is (N,1).
std::vector<Cusp> cusps(const Level& lv);

long cusp_width(const Level& lv, const Cusp& cu);

// lift of cu.a coprime to cu.c (adds multiples of g); the fraction a/c then
// represents the cusp
long cusp_numerator(const Level& lv, const Cusp& cu);

// whether the fractions a1/c1 and a2/c2 (gcd(a_i,c_i)=1, c_i >= 0) are
// Gamma_0(N)-equivalent
bool cusps_equivalent(long N, long a1, long c1, long a2, long c2);

// canonical cusp of an arbitrary fraction a/c ((a,c) != (0,0); c may be 0
// for the cusp at infinity)
Cusp canonicalize_cusp(const Level& lv, long a, long c);

// degree-zero arithmetic on formal rational combinations of cusps
struct CuspidalDivisor {
    long N = 1;
    std::map<Cusp, Rat> mult;  // zero entries are dropped

    void add(const Cusp& cu, const Rat& x);
    Rat coeff(const Cusp& cu) const;
    Rat degree() const;
    bool is_integral() const;
    bool is_zero() const { return mult.empty(); }

    CuspidalDivisor operator+(const CuspidalDivisor& o) const;
    CuspidalDivisor operator-(const CuspidalDivisor& o) const;
    CuspidalDivisor scale(const Rat& x) const;
    bool operator==(const CuspidalDivisor& o) const { return N == o.N && mult == o.mult; }
};

// element sigma_ell of Gal(Q(zeta_N)/Q) as it acts on cusps and on the
// cyclotomic coefficients; determined by ell mod n. Stored with a lift
// coprime to N and its inverse mod N.
struct GaloisElement {
    long N = 1;
    long ell = 1;      // lift coprime to N, ell = requested residue mod 24
    long ell_inv = 1;  // ell * ell_inv = 1 mod N
};

// build sigma_ell from a residue ell mod 24 with gcd(ell, 24) = 1; the lift
// coprime to N is chosen automatically
GaloisElement galois_element(const Level& lv, long ell);

// sigma moves the cusp a/c to ell_inv * a / c, i.e. acts on canonical
// residues by a -> ell_inv * a mod g
Cusp galois_apply(const Level& lv, const GaloisElement& s, const Cusp& cu);

// pushforward: (sigma D)(cu) = D(sigma^{-1} cu)
CuspidalDivisor galois_apply(const Level& lv, const GaloisElement& s,
                             const CuspidalDivisor& D);

// fixed by every sigma_ell, ell over units mod 24
bool is_rational_divisor(const Level& lv, const CuspidalDivisor& D);

}  // namespace etaunits

#endif
