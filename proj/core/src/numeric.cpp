#include "etaunits/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace etaunits {

namespace {

const double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);

std::complex<double> ipow(std::complex<double> z, long e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    std::complex<double> r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

std::complex<double> mobius(const MatrixSL2& g, std::complex<double> tau) {
    double a = g.a.get_d(), b = g.b.get_d(), c = g.c.get_d(), d = g.d.get_d();
    return (a * tau + b) / (c * tau + d);
}

std::complex<double> random_tau(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-0.45, 0.45), im(0.8, 1.7);
    return {re(rng), im(rng)};
}

MatrixSL2 normalize_for_eval(const MatrixSL2& g0) {
    MatrixSL2 g = g0;
    if (g.c < 0 || (g.c == 0 && g.d < 0)) {
        g.a = -g.a;
        g.b = -g.b;
        g.c = -g.c;
        g.d = -g.d;
    }
    return g;
}

}  // namespace

std::complex<double> eta_value(std::complex<double> z) {
    if (z.imag() <= 0) throw std::invalid_argument("eta_value: need Im z > 0");
    std::complex<double> f = 1.0;
    for (int guard = 0; guard < 10000; guard++) {
        double t = std::round(z.real());
        if (t != 0.0) {
            z -= t;
            f *= std::exp(kI * (kPi * t / 12.0));
        }
        if (std::norm(z) < 1.0 - 1e-12) {
            // eta(-1/z) = sqrt(-i z) eta(z)
            f /= std::sqrt(-kI * z);
            z = -1.0 / z;
            continue;
        }
        break;
    }
    std::complex<double> q = std::exp(2.0 * kPi * kI * z);
    std::complex<double> s = 1.0;
    double sign = -1.0;
    for (long n = 1; n <= 9; n++) {
        s += sign * (ipow(q, n * (3 * n - 1) / 2) + ipow(q, n * (3 * n + 1) / 2));
        sign = -sign;
    }
    return f * std::exp(kI * kPi * z / 12.0) * s;
}

std::complex<double> eta_label_value(const Level& lv, const EtaLabel& lab,
                                     std::complex<double> tau) {
    validate_label(lv, lab);
    long h = h_of(lv, lab.m);
    return eta_value((double)lab.m * tau + (double)lab.k / (double)h);
}

std::complex<double> product_value(const Level& lv, const ExponentVector& v,
                                   std::complex<double> tau) {
    std::complex<double> r = 1.0;
    for (const auto& [lab, e] : v.e) {
        if (!e.fits_slong_p()) throw std::invalid_argument("product_value: exponent too large");
        r *= ipow(eta_label_value(lv, lab, tau), e.get_si());
    }
    return r;
}

std::complex<double> qexp_value(const QExpansion& f, std::complex<double> tau) {
    std::complex<double> val = 0.0;
    std::complex<double> q = std::exp(2.0 * kPi * kI * tau);
    for (long i = f.terms() - 1; i >= 0; i--) val = val * q + f.coef[i].to_complex();
    val *= f.phase.to_complex();
    val *= std::exp(2.0 * kPi * kI * tau * f.offset.get_d());
    return val;
}

MatrixSL2 random_gamma0(long N, std::mt19937_64& rng, long cmax) {
    std::uniform_int_distribution<long> tdist(1, cmax), ddist(1, 40 * cmax),
        coin(0, 1);
    for (int guard = 0; guard < 10000; guard++) {
        long c = N * tdist(rng);
        long d = ddist(rng);
        if (coin(rng)) d = -d;
        if (gcd_long(d, c) != 1) continue;
        long x, y;
        long g = ext_gcd(d, c, x, y);
        if (g != 1) continue;
        // x d + y c = 1, so (a, b; c, d) = (x, -y; c, d) has determinant 1
        MatrixSL2 m{x, -y, c, d};
        if (m.a * m.d - m.b * m.c != 1) throw std::logic_error("random_gamma0: det");
        return m;
    }
    throw std::logic_error("random_gamma0: no matrix found");
}

NumericCheck epsilon_numeric_check(const MatrixSL2& g0, int trials,
                                   unsigned long seed, double tol) {
    MatrixSL2 g = normalize_for_eval(g0);
    std::complex<double> eps = eta_epsilon(g).to_complex();
    std::mt19937_64 rng(seed);
    NumericCheck out;
    for (int i = 0; i < trials; i++) {
        std::complex<double> tau = random_tau(rng);
        std::complex<double> lhs = eta_value(mobius(g, tau));
        std::complex<double> aut =
            std::sqrt((g.c.get_d() * tau + g.d.get_d()) / kI);
        std::complex<double> rhs = eps * aut * eta_value(tau);
        double err = std::abs(lhs - rhs) / std::abs(rhs);
        out.max_err = std::max(out.max_err, err);
        if (err > tol) out.ok = false;
    }
    return out;
}

NumericCheck label_multiplier_numeric_check(const Level& lv, const EtaLabel& lab,
                                            const MatrixSL2& g0, int trials,
                                            unsigned long seed, double tol) {
    MatrixSL2 g = normalize_for_eval(g0);
    std::complex<double> mu = eta_multiplier(lv, lab, g).to_complex();
    std::mt19937_64 rng(seed);
    NumericCheck out;
    for (int i = 0; i < trials; i++) {
        std::complex<double> tau = random_tau(rng);
        std::complex<double> lhs = eta_label_value(lv, lab, mobius(g, tau));
        std::complex<double> aut =
            g.c == 0 ? 1.0 : std::sqrt((g.c.get_d() * tau + g.d.get_d()) / kI);
        std::complex<double> rhs = mu * aut * eta_label_value(lv, lab, tau);
        double err = std::abs(lhs - rhs) / std::abs(rhs);
        out.max_err = std::max(out.max_err, err);
        if (err > tol) out.ok = false;
    }
    return out;
}

NumericCheck multiplier_numeric_check(const Level& lv, const ExponentVector& v,
                                      int trials, unsigned long seed, double tol) {
    std::mt19937_64 rng(seed);
    NumericCheck out;
    for (int i = 0; i < trials; i++) {
        MatrixSL2 g = random_gamma0(lv.N, rng);
        std::complex<double> mu = product_multiplier(lv, v, g).to_complex();
        std::complex<double> tau = random_tau(rng);
        std::complex<double> lhs = product_value(lv, v, mobius(g, tau));
        std::complex<double> rhs = mu * product_value(lv, v, tau);
        double err = std::abs(lhs - rhs) / std::abs(rhs);
        out.max_err = std::max(out.max_err, err);
        if (err > tol) out.ok = false;
    }
    return out;
}

NumericCheck qexp_numeric_check(const Level& lv, const ExponentVector& v,
                                long terms, int trials, unsigned long seed,
                                double tol) {
    QExpansion f = qexp_of(lv, v, terms);
    std::mt19937_64 rng(seed);
    NumericCheck out;
    std::uniform_real_distribution<double> re(-0.45, 0.45), im(1.1, 1.6);
    for (int i = 0; i < trials; i++) {
        std::complex<double> tau(re(rng), im(rng));
        std::complex<double> lhs = qexp_value(f, tau);
        std::complex<double> rhs = product_value(lv, v, tau);
        double err = std::abs(lhs - rhs) / std::abs(rhs);
        out.max_err = std::max(out.max_err, err);
        if (err > tol) out.ok = false;
    }
    return out;
}

}  // namespace etaunits
