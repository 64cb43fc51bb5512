#ifndef ETAUNITS_INTMAT_HPP
#define ETAUNITS_INTMAT_HPP

#include <optional>
#include <vector>

#include "etaunits/integers.hpp"

namespace etaunits {

// dense integer matrix, row-major
struct IntMatrix {
    long nr = 0, nc = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(long r, long c) : nr(r), nc(c), a((size_t)r * c) {}

    Int& at(long i, long j) { return a[(size_t)i * nc + j]; }
    const Int& at(long i, long j) const { return a[(size_t)i * nc + j]; }

    static IntMatrix identity(long n);
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> mul_vec(const std::vector<Int>& x) const;
    bool operator==(const IntMatrix& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
};

// Smith normal form u * A * v = d with u, v unimodular; d diagonal with
// nonnegative entries, each dividing the next. uinv is u^{-1} (accumulated
// during the reduction, used to read off representatives cheaply).
struct SnfResult {
    IntMatrix u, uinv, d, v;
    std::vector<Int> diag() const;
    long rank() const;
};

SnfResult snf(const IntMatrix& A);

// primitive basis of { x : A x = 0 }, as columns
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& A);

// one integral solution of A x = b, if any
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                              const std::vector<Int>& b);

// column-style Hermite normal form of A (column ops only): returns the
// canonical basis matrix of the column lattice (zero columns dropped).
// Pivots positive, entries to the right of each pivot reduced mod pivot.
IntMatrix hermite_columns(const IntMatrix& A);

}  // namespace etaunits

#endif
