#include "doctest.h"

#include <random>

#include "etaunits/intmat.hpp"

using namespace etaunits;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, long nr, long nc, long bound) {
    IntMatrix A(nr, nc);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j)
            A.at(i, j) = (long)(rng() % (2 * bound + 1)) - bound;
    return A;
}

bool is_identity(const IntMatrix& A) {
    if (A.nr != A.nc) return false;
    for (long i = 0; i < A.nr; ++i)
        for (long j = 0; j < A.nc; ++j)
            if (A.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form on fixed examples") {
    {
        IntMatrix A(2, 2);
        A.at(0, 0) = 2;
        A.at(1, 1) = 3;
        auto S = snf(A);
        CHECK(S.diag() == std::vector<Int>{1, 6});
    }
    {
        IntMatrix A(1, 2);
        A.at(0, 0) = 4;
        A.at(0, 1) = 6;
        auto S = snf(A);
        CHECK(S.diag() == std::vector<Int>{2});
        CHECK(S.rank() == 1);
    }
    {
        IntMatrix Z(3, 2);
        auto S = snf(Z);
        CHECK(S.rank() == 0);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 120; ++t) {
        long nr = 1 + (long)(rng() % 6), nc = 1 + (long)(rng() % 6);
        IntMatrix A = random_matrix(rng, nr, nc, 9);
        auto S = snf(A);

        CHECK(is_identity(S.u.mul(S.uinv)));
        IntMatrix uav = S.u.mul(A).mul(S.v);
        CHECK(uav == S.d);
        auto dd = S.diag();
        for (size_t i = 0; i + 1 < dd.size(); ++i) {
            CHECK(dd[i] > 0);
            CHECK(dd[i + 1] % dd[i] == 0);
        }
        for (long i = 0; i < S.d.nr; ++i)
            for (long j = 0; j < S.d.nc; ++j)
                if (i != j) CHECK(S.d.at(i, j) == 0);
    }
}

TEST_CASE("integer kernel") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 80; ++t) {
        long nr = 1 + (long)(rng() % 5), nc = 1 + (long)(rng() % 6);
        IntMatrix A = random_matrix(rng, nr, nc, 7);
        auto K = integer_kernel(A);
        CHECK((long)K.size() == nc - snf(A).rank());
        for (const auto& x : K) {
            auto y = A.mul_vec(x);
            for (const Int& v : y) CHECK(v == 0);
            bool nonzero = false;
            for (const Int& v : x) nonzero |= (v != 0);
            CHECK(nonzero);
        }
    }
}

TEST_CASE("integer solve") {
    std::mt19937_64 rng(29);
    int solvable = 0;
    for (int t = 0; t < 150; ++t) {
        long nr = 1 + (long)(rng() % 5), nc = 1 + (long)(rng() % 5);
        IntMatrix A = random_matrix(rng, nr, nc, 6);
        // build a guaranteed-solvable rhs half the time
        std::vector<Int> b(nr);
        if (t % 2 == 0) {
            std::vector<Int> x(nc);
            for (long j = 0; j < nc; ++j) x[j] = (long)(rng() % 9) - 4;
            b = A.mul_vec(x);
        } else {
            for (long i = 0; i < nr; ++i) b[i] = (long)(rng() % 13) - 6;
        }
        auto sol = solve_integer(A, b);
        if (t % 2 == 0) CHECK(sol.has_value());
        if (sol) {
            solvable++;
            CHECK(A.mul_vec(*sol) == b);
        }
    }
    CHECK(solvable >= 75);
}

TEST_CASE("hermite column form") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
        long nr = 1 + (long)(rng() % 5), nc = 1 + (long)(rng() % 6);
        IntMatrix A = random_matrix(rng, nr, nc, 8);
        IntMatrix H = hermite_columns(A);
        CHECK(H.nc == snf(A).rank());
        // canonical: recomputing on H changes nothing
        CHECK(hermite_columns(H) == H);
        // same column lattice: every column of A solves in H and vice versa
        for (long j = 0; j < A.nc; ++j) {
            std::vector<Int> b(nr);
            for (long i = 0; i < nr; ++i) b[i] = A.at(i, j);
            CHECK(solve_integer(H, b).has_value());
        }
        for (long j = 0; j < H.nc; ++j) {
            std::vector<Int> b(nr);
            for (long i = 0; i < nr; ++i) b[i] = H.at(i, j);
            CHECK(solve_integer(A, b).has_value());
        }
    }
}
