#ifndef ETAUNITS_ETA_HPP
#define ETAUNITS_ETA_HPP

#include <map>

#include "etaunits/cusp.hpp"
#include "etaunits/qexp.hpp"

namespace etaunits {

// generalized eta function eta_{m,k}(tau) = eta(m tau + k / h(m)) where
// h(m) is the largest h with m h^2 | N
struct EtaLabel {
    long m = 1;
    long k = 0;

    bool operator<(const EtaLabel& o) const { return m < o.m || (m == o.m && k < o.k); }
    bool operator==(const EtaLabel& o) const { return m == o.m && k == o.k; }
};

// formal product prod eta_{m,k}^{e_{m,k}}
struct ExponentVector {
    long N = 1;
    std::map<EtaLabel, Int> e;

    void add(const EtaLabel& lab, const Int& x);
    Int coeff(const EtaLabel& lab) const;
    Int weight_sum() const;  // sum of exponents (2 * weight)
    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;
    ExponentVector scale(const Int& x) const;
    bool operator==(const ExponentVector& o) const { return N == o.N && e == o.e; }
};

// element of SL2(Z); kept in exact arithmetic
struct MatrixSL2 {
    Int a = 1, b = 0, c = 0, d = 1;
};

long h_of(const Level& lv, long m);

bool is_valid_label(const Level& lv, const EtaLabel& lab);       // m|N, 0 <= k < h(m)
void validate_label(const Level& lv, const EtaLabel& lab);       // throws
bool is_canonical_label(const Level& lv, const EtaLabel& lab);   // 0 <= k < phi(h(m))

// order of eta(m tau + j/h) at a cusp; requires m h^2 | N and 0 <= j < h
Rat atom_order(const Level& lv, long m, long h, long j, const Cusp& cu);

Rat eta_order_at_cusp(const Level& lv, const EtaLabel& lab, const Cusp& cu);

CuspidalDivisor eta_divisor(const Level& lv, const EtaLabel& lab);

CuspidalDivisor divisor_of(const Level& lv, const ExponentVector& v);

// multiplier epsilon(gamma) of the Dedekind eta function:
// eta(gamma tau) = epsilon * sqrt((c tau + d)/i) * eta(tau), where gamma is
// normalized to c > 0 (gamma and -gamma act identically). Requires c != 0.
RootOfUnity eta_epsilon(const MatrixSL2& g);

// multiplier of eta_{m,k} under gamma in Gamma_0(N), relative to the
// automorphy factor sqrt((c tau + d)/i) of the c>0-normalized gamma
// (or relative to 1 when c = 0)
RootOfUnity eta_multiplier(const Level& lv, const EtaLabel& lab, const MatrixSL2& g);

// product of multipliers of a weight-0 vector: the exact value of
// f(gamma tau)/f(tau) for f = prod eta_{m,k}^e
RootOfUnity product_multiplier(const Level& lv, const ExponentVector& v,
                               const MatrixSL2& g);

// q-expansion of eta(m tau + j/h) with coefficients exact through q^terms
// above the leading exponent
QExpansion atom_qexp(long m, long h, long j, long terms);
QExpansion eta_qexp(const Level& lv, const EtaLabel& lab, long terms);
QExpansion qexp_of(const Level& lv, const ExponentVector& v, long terms);

// label enumeration; deterministic order (m increasing, then k)
std::vector<EtaLabel> all_labels(const Level& lv);
std::vector<EtaLabel> canonical_labels(const Level& lv);

// sum over h | n of phi(h) * 2^omega(N/h^2); equals the number of cusps
long canonical_pair_count(const Level& lv);

// rewrite eta_{m,k} as a product of eta functions with canonical labels
// (equal up to a nonzero scalar). Verification of the result:
//   none     - trust the rules
//   divisor  - exact divisor equality (cheap)
//   full     - divisor equality plus q-expansion proportionality to 100 terms
enum class RewriteCheck { none, divisor, full };

ExponentVector rewrite_to_canonical(const Level& lv, const EtaLabel& lab,
                                    RewriteCheck check = RewriteCheck::full);

// apply the rewrite to every non-canonical label of a full-range vector
ExponentVector rewrite_vector(const Level& lv, const ExponentVector& v,
                              RewriteCheck check = RewriteCheck::divisor);

// Galois twist sigma_ell: eta_{m,k} -> eta_{m, ell k mod h(m)} (labels stay
// in the full range; not canonicalized)
ExponentVector galois_twist(const Level& lv, const ExponentVector& v, long ell);

}  // namespace etaunits

#endif
