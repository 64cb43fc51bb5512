#ifndef ETAUNITS_CLASS_GROUP_HPP
#define ETAUNITS_CLASS_GROUP_HPP

#include "etaunits/units.hpp"

namespace etaunits {

// cuspidal divisor class group C(N) = (degree-0 cuspidal divisors) / (divisors
// of modular units). Coordinates of a divisor: multiplicities at all cusps in
// sorted order except the last (the cusp at infinity), which is determined by
// degree 0. R has the unit-basis divisors as columns and full rank, so
// C(N) = Z^(c-1) / R Z^(c-1) with invariant factors from the SNF of R.
struct ClassGroup {
    Level lv;
    std::vector<Cusp> cs;
    UnitBasis basis;
    IntMatrix R;
    SnfResult S;
    std::vector<Int> invariants;  // SNF diagonal entries > 1, divisibility order
};

ClassGroup class_group(const Level& lv);

// multiplicities at cs[0..c-2]; requires an integral divisor of degree 0
std::vector<Int> divisor_xcoords(const ClassGroup& G, const CuspidalDivisor& D);

// residues (U x)_i mod d_i describing the class of D
std::vector<Int> class_coords(const ClassGroup& G, const CuspidalDivisor& D);

bool is_principal(const ClassGroup& G, const CuspidalDivisor& D);

// order of the class of D in C(N)
Int class_order(const ClassGroup& G, const CuspidalDivisor& D);

// exponents x (over basis.units) with div(prod basis_j^{x_j}) = D, if principal
std::optional<std::vector<Int>> principal_exponents(const ClassGroup& G,
                                                    const CuspidalDivisor& D);

// invariant factors (> 1, divisibility order) of the subgroup generated by
// the classes of the given integral degree-0 divisors
std::vector<Int> subgroup_invariants(const ClassGroup& G,
                                     const std::vector<CuspidalDivisor>& gens);

// subgroup generated by the rational cuspidal divisors of degree 0
std::vector<Int> rational_subgroup_invariants(const ClassGroup& G);

// subgroup of classes fixed by Gal(Q(zeta_N)/Q)
std::vector<Int> fixed_subgroup_invariants(const ClassGroup& G);

// divisors whose classes generate the fixed subgroup
std::vector<CuspidalDivisor> fixed_class_representatives(const ClassGroup& G);

// the two subgroups above agree elementwise as lattices: every fixed class
// is generated by rational divisors
bool rational_equals_fixed(const ClassGroup& G);

// companion product of eta_{m,k} (k != 0): a combination of unshifted and
// half-shifted eta functions with matching transformation defect, used to
// move a Galois-stable divisor class into its rational representative
ExponentVector companion_vector(const Level& lv, const EtaLabel& lab);

// congruence forced on the reduced exponents e' = e/r of the k != 0 labels
// (e = exponents of the unit with divisor r*D) by Galois stability of the
// class of D; one relation per n, trivial for n <= 2. Its failure is a bug,
// not a property of the input.
bool descent_congruence_ok(const Level& lv, const std::map<EtaLabel, Int>& eprime);

// rationalization of a Galois-stable class: a modular unit g with
// D' = D - div(g) rational. Throws if the class of D is not fixed by the
// Galois action.
struct RationalizeResult {
    ExponentVector g;
    CuspidalDivisor rational_divisor;
    Int class_ord = 1;
    bool exponents_divisible = true;  // r | e_{m,k} for every k != 0 label
    bool congruence_ok = true;        // descent congruence held for e' = e/r
    bool used_correction = false;     // needed the 2-power correction unit
    bool used_fallback = false;       // direct lattice solve instead of companions
};

RationalizeResult rationalize(const ClassGroup& G, const CuspidalDivisor& D);

}  // namespace etaunits

#endif
