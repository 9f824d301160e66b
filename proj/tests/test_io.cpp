#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "tridkit/io.hpp"

using namespace tridkit;
using support::Rational;

namespace {

template <class T>
bool same_matrix(const TridiagonalMatrix<T>& a, const TridiagonalMatrix<T>& b) {
    return a.diag_band() == b.diag_band() && a.super_band() == b.super_band() &&
           a.sub_band() == b.sub_band();
}

} // namespace

TEST_CASE("parse the documented band layouts") {
    auto A = parse_tridiag<Rational>("4\n25 13 5 1\n-9 -4 -1\n-9 -4 -1\n");
    CHECK(same_matrix(A, support::sym_positive_4x4<Rational>()));

    auto one = parse_tridiag<Rational>("1\n5\n\n\n");
    CHECK(one.order() == 1);
    CHECK(one.diag(1) == Rational(5));

    // missing trailing blank rows are fine for order 1
    auto one_short = parse_tridiag<Rational>("1\n5\n");
    CHECK(same_matrix(one, one_short));

    auto gap = parse_tridiag<Rational>("3\n1 1 3\n1 2\n1 2\n");
    CHECK(same_matrix(gap, support::gap_forward_3x3<Rational>()));
}

TEST_CASE("comments and spacing are tolerated") {
    auto A = parse_tridiag<Rational>(
        "# header comment\n"
        "4   # the order\n"
        "  25\t13  5 1\n"
        "-9 -4 -1 # super\n"
        "-9 -4 -1\n"
        "# trailing note\n"
        "\n");
    CHECK(same_matrix(A, support::sym_positive_4x4<Rational>()));
}

TEST_CASE("structural errors carry line and column") {
    CHECK_THROWS_AS(parse_tridiag<double>(""), ParseError);
    CHECK_THROWS_AS(parse_tridiag<double>("0\n\n\n\n"), ParseError);
    CHECK_THROWS_AS(parse_tridiag<double>("-3\n1 2 3\n\n\n"), ParseError);
    CHECK_THROWS_AS(parse_tridiag<double>("two\n1 2\n3\n4\n"), ParseError);
    CHECK_THROWS_AS(parse_tridiag<double>("2 2\n1 2\n3\n4\n"), ParseError);
    CHECK_THROWS_AS(parse_tridiag<double>("2\n1 2\n3\n4\n5\n"), ParseError);

    try {
        parse_tridiag<double>("2\n1 2\nx\n4\n");
        FAIL("expected ValueError");
    } catch (const ValueError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("band length errors are DimensionError") {
    CHECK_THROWS_AS(parse_tridiag<double>("3\n1 2\n1 2\n1 2\n"), DimensionError);
    CHECK_THROWS_AS(parse_tridiag<double>("3\n1 2 3\n1\n1 2\n"), DimensionError);
    CHECK_THROWS_AS(parse_tridiag<double>("3\n1 2 3\n1 2\n\n"), DimensionError);
    try {
        parse_tridiag<double>("3\n1 2 3\n1 2 3 4\n1 2\n");
        FAIL("expected DimensionError");
    } catch (const DimensionError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("scalar grammar per mode") {
    CHECK(parse_scalar<double>("-1.5e3") == -1500.0);
    CHECK(parse_scalar<double>("3/4") == 0.75);
    CHECK_THROWS_AS(parse_scalar<double>("12,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<double>("1/0"), std::invalid_argument);

    CHECK(parse_scalar<Rational>("-7") == Rational(-7));
    CHECK(parse_scalar<Rational>("22/7") == Rational(BigInt(22), BigInt(7)));
    CHECK(parse_scalar<Rational>("-22/-7") == Rational(BigInt(22), BigInt(7)));
    CHECK(parse_scalar<Rational>("3.25") == Rational(BigInt(13), BigInt(4)));
    CHECK(parse_scalar<Rational>("1e-3") == Rational(BigInt(1), BigInt(1000)));
    CHECK(parse_scalar<Rational>("2.5e2") == Rational(250));
    CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("1.2.3"), std::invalid_argument);

    CHECK(parse_scalar<Scaled>("0.5") == Scaled(0.5));
    CHECK(parse_scalar<Scaled>("1.5*2^100") == Scaled::from_parts(1.5, 100));
    CHECK(parse_scalar<Scaled>("-1.25*2^-20000") == Scaled::from_parts(-1.25, -20000));
    CHECK(parse_scalar<Scaled>("1/4") == Scaled(0.25));
    CHECK_THROWS_AS(parse_scalar<Scaled>("1.5*2^"), std::invalid_argument);
}

TEST_CASE("format/parse round trip is bit-exact per mode") {
    std::mt19937_64 rng(606060);

    // double: awkward values included
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<double> d, a, b;
        for (int i = 0; i < n; ++i) d.push_back(u(rng) / 7.0);
        for (int i = 0; i < n - 1; ++i) {
            a.push_back(u(rng) / 3.0);
            b.push_back(trial % 5 ? u(rng) : 0.1);
        }
        TridiagonalMatrix<double> A(d, a, b);
        CHECK(same_matrix(parse_tridiag<double>(format_tridiag(A)), A));
    }

    // rational: mixed small fractions
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto pick = [&]() {
            long long den = 1 + static_cast<long long>(rng() % 9);
            return Rational(BigInt(support::rand_entry(rng, -50, 50)), BigInt(den));
        };
        std::vector<Rational> d, a, b;
        for (int i = 0; i < n; ++i) d.push_back(pick());
        for (int i = 0; i < n - 1; ++i) {
            a.push_back(pick());
            b.push_back(pick());
        }
        TridiagonalMatrix<Rational> A(d, a, b);
        CHECK(same_matrix(parse_tridiag<Rational>(format_tridiag(A)), A));
    }

    // scaled: exponents far beyond double range
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto pick = [&]() {
            double sig = 1.0 + static_cast<double>(rng() % 1000) / 1000.0;
            std::int64_t e = static_cast<std::int64_t>(rng() % 40000) - 20000;
            return Scaled::from_parts(rng() % 2 ? sig : -sig, e);
        };
        std::vector<Scaled> d, a, b;
        for (int i = 0; i < n; ++i) d.push_back(pick());
        for (int i = 0; i < n - 1; ++i) {
            a.push_back(pick());
            b.push_back(rng() % 7 ? pick() : Scaled{});
        }
        TridiagonalMatrix<Scaled> A(d, a, b);
        CHECK(same_matrix(parse_tridiag<Scaled>(format_tridiag(A)), A));
    }
}

TEST_CASE("order-1 format round trip") {
    auto A = support::make<Rational>({-3}, {}, {});
    CHECK(format_tridiag(A) == "1\n-3\n\n\n");
    CHECK(same_matrix(parse_tridiag<Rational>(format_tridiag(A)), A));
}

TEST_CASE("double formatting is 17-significant-digit round-trip") {
    CHECK(format_scalar(0.1) == "0.10000000000000001");
    CHECK(format_scalar(1.0) == "1");
    CHECK(format_scalar(-0.0) == "-0");
    double v = 1.0 / 3.0;
    CHECK(parse_scalar<double>(format_scalar(v)) == v);
}
