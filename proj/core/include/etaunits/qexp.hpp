#ifndef ETAUNITS_QEXP_HPP
#define ETAUNITS_QEXP_HPP

#include <vector>

#include "etaunits/cyclotomic.hpp"

namespace etaunits {

// truncated expansion  phase * q^offset * (coef[0] + coef[1] q + ... ),
// q = e^{2 pi i tau}; offset rational with denominator dividing 24.
// Terms with index > coef.size()-1 are unknown (truncated), not zero.
struct QExpansion {
    Rat offset = 0;
    RootOfUnity phase;
    std::vector<Cyc> coef;

    long terms() const { return (long)coef.size(); }

    QExpansion mul(const QExpansion& o) const;
    QExpansion inverse() const;
    QExpansion pow(const Int& e) const;

    // whether the two series agree up to one nonzero scalar factor, through
    // all shared known terms (exact test; phases are absorbed into the scalar)
    bool proportional(const QExpansion& o) const;
};

// the constant series 1 with the given number of known terms
QExpansion qexp_one(long terms);

}  // namespace etaunits

#endif
