#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/oracle.hpp"

using namespace tridkit;
using support::Rational;

TEST_CASE("to_dense places the bands and nothing else") {
    auto M = to_dense(support::singular_4x4<Rational>());
    CHECK(M.order() == 4);
    // spot-check the displayed 4x4
    CHECK(M.at(1, 1) == Rational(2));
    CHECK(M.at(1, 2) == Rational(-1));
    CHECK(M.at(2, 1) == Rational(-2));
    CHECK(M.at(3, 4) == Rational(3));
    CHECK(M.at(4, 3) == Rational(-1));
    CHECK(M.at(4, 4) == Rational(-3));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (std::abs(i - j) > 1) CHECK(M.at(i, j) == Rational(0));

    auto one = to_dense(support::make<Rational>({7}, {}, {}));
    CHECK(one.order() == 1);
    CHECK(one.at(1, 1) == Rational(7));

    auto sym = to_dense(support::sym_positive_4x4<Rational>());
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(sym.at(i, j) == sym.at(j, i));
    CHECK(sym.at(2, 3) == Rational(-4));
}

TEST_CASE("dense determinant agrees with cofactor expansion at tiny orders") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        DenseMatrix<Rational> M(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                M.at(i, j) = Rational(support::rand_entry(rng, -4, 4));
        CHECK(dense_determinant(M) == support::cofactor_det(M));
    }
}

TEST_CASE("dense determinant golden values") {
    CHECK(dense_determinant(to_dense(support::singular_4x4<Rational>())) == Rational(0));
    CHECK(dense_determinant(DenseMatrix<Rational>::identity(4)) == Rational(1));
    CHECK(dense_determinant(to_dense(support::sym_positive_4x4<Rational>())) ==
          Rational(576));
}

TEST_CASE("dense determinant handles zero pivots via row swaps") {
    // leading block singular: elimination must pivot, not give up
    DenseMatrix<Rational> M(3);
    M.at(1, 1) = Rational(0);
    M.at(1, 2) = Rational(1);
    M.at(2, 1) = Rational(1);
    M.at(2, 2) = Rational(0);
    M.at(3, 3) = Rational(5);
    CHECK(dense_determinant(M) == Rational(-5));
    CHECK(dense_determinant(M) == support::cofactor_det(M));
}

TEST_CASE("dense inverse round-trips against multiplication") {
    std::mt19937_64 rng(9090);
    int solved = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        DenseMatrix<Rational> M(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                M.at(i, j) = Rational(support::rand_entry(rng, -4, 4));
        if (dense_determinant(M).is_zero()) {
            CHECK_THROWS_AS(dense_inverse(M), SingularMatrixError);
            continue;
        }
        ++solved;
        auto inv = dense_inverse(M);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Rational cell;
                for (int k = 1; k <= n; ++k) cell += M.at(i, k) * inv.at(k, j);
                CHECK(cell == (i == j ? Rational(1) : Rational(0)));
            }
        }
    }
    CHECK(solved > 50); // the suite must actually exercise the inverse path
}

TEST_CASE("dense inverse golden values") {
    auto I = DenseMatrix<Rational>::identity(3);
    auto invI = dense_inverse(I);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(invI.at(i, j) == (i == j ? Rational(1) : Rational(0)));

    auto inv = dense_inverse(to_dense(support::sym_positive_4x4<Rational>()));
    const long long expected[4][4] = {{36, 36, 36, 36},
                                      {36, 100, 100, 100},
                                      {36, 100, 244, 244},
                                      {36, 100, 244, 820}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(inv.at(i, j) == Rational(BigInt(expected[i - 1][j - 1]), BigInt(576)));

    CHECK_THROWS_AS(dense_inverse(to_dense(support::singular_4x4<Rational>())),
                    SingularMatrixError);
}

TEST_CASE("submatrix minors reproduce the minor tables") {
    auto A = support::sym_positive_4x4<Rational>();
    auto dense = to_dense(A);
    CHECK(submatrix_minor(dense, 1, 2) == Rational(244));
    CHECK(submatrix_minor(dense, 2, 2) == Rational(13)); // single diagonal cell
    CHECK(submatrix_minor(to_dense(support::breakdown_5x5<Rational>()), 4, 5) ==
          Rational(0));
    CHECK_THROWS_AS(submatrix_minor(dense, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(submatrix_minor(dense, 3, 5), std::out_of_range);
    CHECK_THROWS_AS(submatrix_minor(dense, 3, 2), std::out_of_range);

    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto B = trial % 3 == 0 && n >= 2
                     ? support::random_zero_minor_matrix(rng, n)
                     : support::random_int_matrix<Rational>(rng, n);
        auto t = minor_tables(B);
        auto D = to_dense(B);
        for (int i = 1; i <= n; ++i) {
            CHECK(submatrix_minor(D, 1, i) == t.leading_minor(i));
            CHECK(submatrix_minor(D, i, n) == t.trailing_minor(i));
        }
    }
}

TEST_CASE("double-mode dense routines work with pivoting") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto A = support::random_dominant_matrix(rng, n);
        auto M = to_dense(A);
        double det = dense_determinant(M);
        CHECK(det != 0.0);
        auto inv = dense_inverse(M);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                double cell = 0;
                for (int k = 1; k <= n; ++k) cell += M.at(i, k) * inv.at(k, j);
                CHECK(cell == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
            }
        }
    }
}
