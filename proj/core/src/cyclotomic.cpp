#include "etaunits/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace etaunits {

bool Cyc::is_zero() const {
    for (const Rat& x : c)
        if (x != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
    // convolution up to degree 14, then reduce with z^8 = z^4 - 1
    std::array<Rat, 15> t{};
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 8; ++j)
            if (o.c[j] != 0) t[i + j] += c[i] * o.c[j];
    }
    for (int d = 14; d >= 8; --d) {
        if (t[d] == 0) continue;
        t[d - 4] += t[d];
        t[d - 8] -= t[d];
        t[d] = 0;
    }
    Cyc r;
    for (int i = 0; i < 8; ++i) r.c[i] = t[i];
    return r;
}

Cyc Cyc::scale(const Rat& x) const {
    Cyc r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] * x;
    return r;
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> r = 0;
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        double ang = 2.0 * M_PI * i / 24.0;
        r += c[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return r;
}

Cyc cyc_zeta_pow(long j) {
    j %= 24;
    if (j < 0) j += 24;
    Cyc r(1);
    // multiply by zeta j times: shift with z^8 = z^4 - 1
    for (long t = 0; t < j; ++t) {
        Rat top = r.c[7];
        for (int i = 7; i >= 1; --i) r.c[i] = r.c[i - 1];
        r.c[0] = -top;
        r.c[4] += top;
    }
    return r;
}

Cyc cyc_root(long h, long j) {
    if (h <= 0 || 24 % h != 0) throw std::invalid_argument("cyc_root: h must divide 24");
    return cyc_zeta_pow(j * (24 / h));
}

Cyc cyc_galois(const Cyc& x, long ell) {
    ell %= 24;
    if (ell < 0) ell += 24;
    if (gcd_long(ell, 24) != 1) throw std::invalid_argument("cyc_galois: gcd(ell,24) != 1");
    Cyc r;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i] == 0) continue;
        r += cyc_zeta_pow((i * ell) % 24).scale(x.c[i]);
    }
    return r;
}

Cyc cyc_inverse(const Cyc& x) {
    if (x.is_zero()) throw std::invalid_argument("cyc_inverse: zero");
    // solve M y = e_0 where M is the matrix of multiplication by x
    Rat m[8][9];
    for (int j = 0; j < 8; ++j) {
        Cyc col = x * cyc_zeta_pow(j);
        for (int i = 0; i < 8; ++i) m[i][j] = col.c[i];
    }
    for (int i = 0; i < 8; ++i) m[i][8] = (i == 0) ? 1 : 0;
    // gaussian elimination with partial (first nonzero) pivoting
    for (int col = 0; col < 8; ++col) {
        int piv = -1;
        for (int i = col; i < 8; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::logic_error("cyc_inverse: singular multiplication matrix");
        if (piv != col)
            for (int j = 0; j <= 8; ++j) std::swap(m[piv][j], m[col][j]);
        Rat inv = Rat(1) / m[col][col];
        for (int j = col; j <= 8; ++j) m[col][j] *= inv;
        for (int i = 0; i < 8; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j <= 8; ++j) m[i][j] -= f * m[col][j];
        }
    }
    Cyc y;
    for (int i = 0; i < 8; ++i) y.c[i] = m[i][8];
    return y;
}

RootOfUnity::RootOfUnity(long p, long q) {
    if (q <= 0 || 576 % q != 0)
        throw std::invalid_argument("RootOfUnity: denominator must divide 576");
    num = (p % q) * (576 / q);
    if (num < 0) num += 576;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    RootOfUnity r;
    r.num = (num + o.num) % 576;
    return r;
}

RootOfUnity RootOfUnity::inverse() const {
    RootOfUnity r;
    r.num = (576 - num) % 576;
    return r;
}

RootOfUnity RootOfUnity::pow(const Int& e) const {
    Int t = Int(num) * e;
    t %= 576;
    long v = t.get_si();
    if (v < 0) v += 576;
    RootOfUnity r;
    r.num = v;
    return r;
}

Cyc RootOfUnity::as_cyc() const {
    if (!in_mu24()) throw std::invalid_argument("RootOfUnity::as_cyc: order does not divide 24");
    return cyc_zeta_pow(num / 24);
}

std::complex<double> RootOfUnity::to_complex() const {
    double ang = 2.0 * M_PI * num / 576.0;
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace etaunits
