#ifndef ETAUNITS_UNITS_HPP
#define ETAUNITS_UNITS_HPP

#include "etaunits/eta.hpp"
#include "etaunits/intmat.hpp"

namespace etaunits {

// the modularity criterion for prod eta_{m,k}^e on Gamma_0(N), split into
// its individual conditions
struct CriterionReport {
    bool weight_ok = false;    // sum e = 0
    bool product_ok = false;   // sum e m = 0 mod 24
    bool dual_ok = false;      // sum e (N / m h^2) gcd(h,k)^2 = 0 mod 24
    bool shift_ok = false;     // congruence on the shifts (depends on n)
    bool square_ok = false;    // prod m^e a square away from the 2,3-part

    bool ok() const { return weight_ok && product_ok && dual_ok && shift_ok && square_ok; }
};

CriterionReport check_modularity(const Level& lv, const ExponentVector& v);

bool is_modular_unit(const Level& lv, const ExponentVector& v);

// basis of the lattice of exponent vectors over canonical labels that
// satisfy the criterion, i.e. of the modular units supported on the
// canonical eta products, modulo constants. rank = #cusps - 1.
struct UnitBasis {
    std::vector<EtaLabel> labels;        // canonical labels, fixed order
    std::vector<std::vector<Int>> rows;  // basis vectors, Hermite-reduced
    std::vector<ExponentVector> units;
};

UnitBasis unit_basis(const Level& lv);

}  // namespace etaunits

#endif
