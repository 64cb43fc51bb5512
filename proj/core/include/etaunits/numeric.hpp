#ifndef ETAUNITS_NUMERIC_HPP
#define ETAUNITS_NUMERIC_HPP

#include <complex>
#include <random>

#include "etaunits/eta.hpp"

namespace etaunits {

// Dedekind eta at z (Im z > 0), by reduction to the fundamental domain and
// the pentagonal-number series
std::complex<double> eta_value(std::complex<double> z);

std::complex<double> eta_label_value(const Level& lv, const EtaLabel& lab,
                                     std::complex<double> tau);

// value of prod eta_{m,k}^e; exponents must fit in a long
std::complex<double> product_value(const Level& lv, const ExponentVector& v,
                                   std::complex<double> tau);

// numeric value of a truncated q-expansion
std::complex<double> qexp_value(const QExpansion& f, std::complex<double> tau);

// random element of Gamma_0(N): c = N t with 1 <= t <= cmax, random sign
// choices and a random coprime d
MatrixSL2 random_gamma0(long N, std::mt19937_64& rng, long cmax = 6);

struct NumericCheck {
    bool ok = true;
    double max_err = 0.0;
};

// eta(g tau) = eps(g) sqrt((c tau + d)/i) eta(tau) at random tau, against
// the exact root of unity
NumericCheck epsilon_numeric_check(const MatrixSL2& g, int trials,
                                   unsigned long seed, double tol);

// same for the multiplier of a single eta_{m,k} under g in Gamma_0(N)
NumericCheck label_multiplier_numeric_check(const Level& lv, const EtaLabel& lab,
                                            const MatrixSL2& g, int trials,
                                            unsigned long seed, double tol);

// f(g tau) = product_multiplier(v, g) f(tau) for weight-0 v over `trials`
// random (g, tau) pairs
NumericCheck multiplier_numeric_check(const Level& lv, const ExponentVector& v,
                                      int trials, unsigned long seed, double tol);

// q-expansion against direct evaluation at random tau high in the upper
// half plane
NumericCheck qexp_numeric_check(const Level& lv, const ExponentVector& v,
                                long terms, int trials, unsigned long seed,
                                double tol);

}  // namespace etaunits

#endif
