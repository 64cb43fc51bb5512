#ifndef ETAUNITS_CYCLOTOMIC_HPP
#define ETAUNITS_CYCLOTOMIC_HPP

#include <array>
#include <complex>

#include "etaunits/integers.hpp"

namespace etaunits {

// element of Q(zeta_24) in the power basis 1, z, ..., z^7 where
// z = e^{2 pi i / 24}; minimal polynomial z^8 = z^4 - 1
struct Cyc {
    std::array<Rat, 8> c{};

    Cyc() = default;
    explicit Cyc(const Rat& x) { c[0] = x; }
    explicit Cyc(long x) { c[0] = x; }

    bool is_zero() const;
    bool operator==(const Cyc& o) const { return c == o.c; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc scale(const Rat& x) const;

    std::complex<double> to_complex() const;
};

// zeta_24^j
Cyc cyc_zeta_pow(long j);

// the root of unity e^{2 pi i j / h} as an element of Q(zeta_24); h | 24
Cyc cyc_root(long h, long j);

// Galois automorphism sigma_ell : zeta -> zeta^ell, gcd(ell, 24) = 1
Cyc cyc_galois(const Cyc& x, long ell);

// multiplicative inverse (throws on zero), via an 8x8 rational solve
Cyc cyc_inverse(const Cyc& x);

// element of mu_576 = the group generated by e^{2 pi i/24} and the phases
// e^{2 pi i k/(24 h)}, h | 24; stored as e^{2 pi i num/576}
struct RootOfUnity {
    long num = 0;  // in [0, 576)

    RootOfUnity() = default;
    // e^{2 pi i p / q}; q must divide 576
    RootOfUnity(long p, long q);

    static RootOfUnity one() { return RootOfUnity(); }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(const Int& e) const;
    bool operator==(const RootOfUnity& o) const { return num == o.num; }
    bool is_one() const { return num == 0; }

    // order divides 24 iff 24 | num
    bool in_mu24() const { return num % 24 == 0; }
    Cyc as_cyc() const;  // requires in_mu24()

    std::complex<double> to_complex() const;
};

}  // namespace etaunits

#endif
