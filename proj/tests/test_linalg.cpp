#include "support.hpp"

#include <doctest.h>

using namespace symhecke;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int range)
{
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Int(rng() % (2 * range + 1)) - range;
    return m;
}

bool unimodular(const IntMat& U)
{
    try {
        to_int(inverse(to_rat(U)));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

TEST_CASE("smith normal form of a fixed matrix")
{
    IntMat A = IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    Smith s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 6);
    CHECK(s.D(2, 2) == 12);
    CHECK(s.rank == 3);
}

TEST_CASE("smith normal form on random matrices")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
        IntMat A = random_matrix(rng, r, c, 4);
        Smith s = smith_normal_form(A);
        REQUIRE(s.U * A * s.V == s.D);
        CHECK(unimodular(s.U));
        CHECK(unimodular(s.V));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (int i = 0; i + 1 < std::min(r, c); ++i)
            if (s.D(i + 1, i + 1) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
        CHECK(s.rank == rank(to_rat(A)));
    }
}

TEST_CASE("integer kernel is a saturated basis of the kernel")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + int(rng() % 3), c = 1 + int(rng() % 5);
        IntMat A = random_matrix(rng, r, c, 3);
        IntMat K = integer_kernel(A);
        CHECK(K.rows() == c - rank(to_rat(A)));
        for (int i = 0; i < K.rows(); ++i) CHECK(is_zero(A * K.row(i)));
        if (K.rows() == 0) continue;
        // saturation: the elementary divisors of K are all 1
        Smith s = smith_normal_form(K);
        for (int i = 0; i < K.rows(); ++i) CHECK((s.D(i, i) == 1 || s.D(i, i) == -1));
    }
}

TEST_CASE("rank mod p agrees with rational rank on small matrices")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        IntMat A = random_matrix(rng, r, c, 5);
        std::vector<std::vector<std::pair<int, Int>>> rows(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (A(i, j)) rows[i].emplace_back(j, A(i, j));
        CHECK(rank_mod_p(rows, c, 2147483647) == rank(to_rat(A)));
    }
}

TEST_CASE("inverse and solve")
{
    RatMat A = to_rat(IntMat::from_rows({{2, 1}, {1, 1}}));
    CHECK(A * inverse(A) == RatMat::identity(2));
    RatVec c;
    REQUIRE(solve(A, {Rat(3), Rat(2)}, c));
    CHECK(c == RatVec{Rat(1), Rat(1)});
    CHECK_THROWS(inverse(to_rat(IntMat::from_rows({{1, 2}, {2, 4}}))));
}
