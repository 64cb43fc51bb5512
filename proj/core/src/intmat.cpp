#include "etaunits/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace etaunits {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (nc != o.nr) throw std::invalid_argument("IntMatrix::mul: shape mismatch");
    IntMatrix r(nr, o.nc);
    for (long i = 0; i < nr; ++i)
        for (long k = 0; k < nc; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.nc; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& x) const {
    if ((long)x.size() != nc) throw std::invalid_argument("IntMatrix::mul_vec: shape mismatch");
    std::vector<Int> r(nr);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * x[j];
    return r;
}

std::vector<Int> SnfResult::diag() const {
    std::vector<Int> out;
    long n = std::min(d.nr, d.nc);
    for (long i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

long SnfResult::rank() const {
    long r = 0;
    for (const Int& x : diag())
        if (x != 0) ++r;
    return r;
}

namespace {

inline int cmpabs(const Int& x, const Int& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

struct SnfWork {
    IntMatrix A, U, Ui, V;

    void row_swap(long i, long j) {
        if (i == j) return;
        for (long x = 0; x < A.nc; ++x) std::swap(A.at(i, x), A.at(j, x));
        for (long x = 0; x < U.nc; ++x) std::swap(U.at(i, x), U.at(j, x));
        for (long x = 0; x < Ui.nr; ++x) std::swap(Ui.at(x, i), Ui.at(x, j));
    }
    void col_swap(long i, long j) {
        if (i == j) return;
        for (long x = 0; x < A.nr; ++x) std::swap(A.at(x, i), A.at(x, j));
        for (long x = 0; x < V.nr; ++x) std::swap(V.at(x, i), V.at(x, j));
    }
    // row_i += t * row_j
    void row_add(long i, long j, const Int& t) {
        for (long x = 0; x < A.nc; ++x) A.at(i, x) += t * A.at(j, x);
        for (long x = 0; x < U.nc; ++x) U.at(i, x) += t * U.at(j, x);
        for (long x = 0; x < Ui.nr; ++x) Ui.at(x, j) -= t * Ui.at(x, i);
    }
    // col_i += t * col_j
    void col_add(long i, long j, const Int& t) {
        for (long x = 0; x < A.nr; ++x) A.at(x, i) += t * A.at(x, j);
        for (long x = 0; x < V.nr; ++x) V.at(x, i) += t * V.at(x, j);
    }
    void row_neg(long i) {
        for (long x = 0; x < A.nc; ++x) A.at(i, x) = -A.at(i, x);
        for (long x = 0; x < U.nc; ++x) U.at(i, x) = -U.at(i, x);
        for (long x = 0; x < Ui.nr; ++x) Ui.at(x, i) = -Ui.at(x, i);
    }
};

}  // namespace

SnfResult snf(const IntMatrix& A0) {
    SnfWork w;
    w.A = A0;
    w.U = IntMatrix::identity(A0.nr);
    w.Ui = IntMatrix::identity(A0.nr);
    w.V = IntMatrix::identity(A0.nc);
    const long nr = A0.nr, nc = A0.nc;

    long t = 0;
    while (t < std::min(nr, nc)) {
        // least-absolute-value nonzero pivot in the lower-right submatrix
        long pi = -1, pj = -1;
        for (long i = t; i < nr; ++i)
            for (long j = t; j < nc; ++j) {
                const Int& x = w.A.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || cmpabs(x, w.A.at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        if (w.A.at(t, t) < 0) w.row_neg(t);

        bool dirty = false;
        for (long i = t + 1; i < nr; ++i) {
            if (w.A.at(i, t) == 0) continue;
            Int q = w.A.at(i, t) / w.A.at(t, t);
            if (q != 0) w.row_add(i, t, -q);
            if (w.A.at(i, t) != 0) dirty = true;
        }
        for (long j = t + 1; j < nc; ++j) {
            if (w.A.at(t, j) == 0) continue;
            Int q = w.A.at(t, j) / w.A.at(t, t);
            if (q != 0) w.col_add(j, t, -q);
            if (w.A.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // pivot must divide every entry of the remaining submatrix
        long bad = -1;
        for (long i = t + 1; i < nr && bad < 0; ++i)
            for (long j = t + 1; j < nc; ++j)
                if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                    bad = i;
                    break;
                }
        if (bad >= 0) {
            w.row_add(t, bad, 1);
            continue;
        }
        ++t;
    }

    SnfResult r;
    r.u = std::move(w.U);
    r.uinv = std::move(w.Ui);
    r.d = std::move(w.A);
    r.v = std::move(w.V);
    return r;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& A) {
    std::vector<std::vector<Int>> ker;
    if (A.nr == 0 || A.nc == 0) {
        for (long j = 0; j < A.nc; ++j) {
            std::vector<Int> e(A.nc);
            e[j] = 1;
            ker.push_back(std::move(e));
        }
        return ker;
    }
    SnfResult s = snf(A);
    std::vector<Int> diag = s.diag();
    for (long j = 0; j < A.nc; ++j) {
        if (j < (long)diag.size() && diag[j] != 0) continue;
        std::vector<Int> col(A.nc);
        for (long i = 0; i < A.nc; ++i) col[i] = s.v.at(i, j);
        ker.push_back(std::move(col));
    }
    return ker;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                              const std::vector<Int>& b) {
    if ((long)b.size() != A.nr) throw std::invalid_argument("solve_integer: shape mismatch");
    if (A.nc == 0) {
        for (const Int& x : b)
            if (x != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    if (A.nr == 0) return std::vector<Int>(A.nc);
    SnfResult s = snf(A);
    std::vector<Int> ub = s.u.mul_vec(b);
    std::vector<Int> diag = s.diag();
    std::vector<Int> wv(A.nc);
    for (long i = 0; i < A.nr; ++i) {
        Int d = (i < (long)diag.size()) ? diag[i] : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            wv[i] = ub[i] / d;
        }
    }
    std::vector<Int> x = s.v.mul_vec(wv);
    // paranoia: verify
    std::vector<Int> chk = A.mul_vec(x);
    for (long i = 0; i < A.nr; ++i)
        if (chk[i] != b[i]) throw std::logic_error("solve_integer: verification failed");
    return x;
}

namespace {

// row-style HNF (upper triangular, pivots positive, entries above a pivot
// reduced into [0, pivot)); zero rows dropped
IntMatrix row_hnf(IntMatrix A) {
    long r = 0;
    for (long c = 0; c < A.nc && r < A.nr; ++c) {
        // gcd-eliminate column c below row r
        while (true) {
            long best = -1;
            for (long i = r; i < A.nr; ++i)
                if (A.at(i, c) != 0 && (best < 0 || cmpabs(A.at(i, c), A.at(best, c)) < 0))
                    best = i;
            if (best < 0) break;
            for (long x = 0; x < A.nc; ++x) std::swap(A.at(r, x), A.at(best, x));
            bool clean = true;
            for (long i = r + 1; i < A.nr; ++i) {
                if (A.at(i, c) == 0) continue;
                Int q = A.at(i, c) / A.at(r, c);
                for (long x = 0; x < A.nc; ++x) A.at(i, x) -= q * A.at(r, x);
                if (A.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (A.at(r, c) == 0) continue;
        if (A.at(r, c) < 0)
            for (long x = 0; x < A.nc; ++x) A.at(r, x) = -A.at(r, x);
        for (long i = 0; i < r; ++i) {
            Int q = A.at(i, c);
            mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), A.at(r, c).get_mpz_t());
            if (q != 0)
                for (long x = 0; x < A.nc; ++x) A.at(i, x) -= q * A.at(r, x);
        }
        ++r;
    }
    IntMatrix out(r, A.nc);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < A.nc; ++j) out.at(i, j) = A.at(i, j);
    return out;
}

IntMatrix transpose(const IntMatrix& A) {
    IntMatrix t(A.nc, A.nr);
    for (long i = 0; i < A.nr; ++i)
        for (long j = 0; j < A.nc; ++j) t.at(j, i) = A.at(i, j);
    return t;
}

}  // namespace

IntMatrix hermite_columns(const IntMatrix& A) {
    return transpose(row_hnf(transpose(A)));
}

}  // namespace etaunits
