#include <doctest.h>

#include <random>

#include "oa/design.hpp"
#include "oa/error.hpp"

using namespace oa;

TEST_SUITE("design") {

TEST_CASE("points of D(1) and D(2)") {
    auto p1 = enumerate_points(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].coords() == std::vector<int>{-1});
    CHECK(p1[1].coords() == std::vector<int>{1});

    auto p2 = enumerate_points(2);
    REQUIRE(p2.size() == 4);
    CHECK(p2[0].coords() == std::vector<int>{-1, -1});
    CHECK(p2[1].coords() == std::vector<int>{-1, 1});
    CHECK(p2[2].coords() == std::vector<int>{1, -1});
    CHECK(p2[3].coords() == std::vector<int>{1, 1});
}

TEST_CASE("row labels for five factors") {
    auto p = enumerate_points(5);
    REQUIRE(p.size() == 32);
    CHECK(p[0].label() == "-----");
    CHECK(p[1].label() == "----+");
    CHECK(p[2].label() == "---+-");
    CHECK(p[16].label() == "+----");
    CHECK(p[31].label() == "+++++");
    for (std::uint32_t i = 0; i < 32; ++i) CHECK(p[i].index() == i);
}

TEST_CASE("point validation") {
    CHECK_THROWS_AS(enumerate_points(0), SizeLimitError);
    CHECK_THROWS_AS(enumerate_points(17), SizeLimitError);
    CHECK_THROWS_AS(DesignPoint({1, 0, -1}), ParameterError);
    CHECK_THROWS_AS(DesignPoint::from_index(3, 8), DimensionError);
    CHECK(DesignPoint({1, -1, 1}).index() == 0b101u);
    CHECK(DesignPoint::from_index(4, 6).label() == "-++-");
}

TEST_CASE("exponent order") {
    auto e = enumerate_exponents(5, 3);
    REQUIRE(e.size() == 25);
    const char* printed[] = {"00001", "00010", "00011", "00100", "00101", "00110", "00111", "01000", "01001",
                             "01010", "01011", "01100", "01101", "01110", "10000", "10001", "10010", "10011",
                             "10100", "10101", "10110", "11000", "11001", "11010", "11100"};
    for (std::size_t i = 0; i < 25; ++i) CHECK(e[i].to_string() == printed[i]);

    auto e2 = enumerate_exponents(5, 2);
    const char* header[] = {"00001", "00010", "00011", "00100", "00101", "00110", "01000", "01001",
                            "01010", "01100", "10000", "10001", "10010", "10100", "11000"};
    REQUIRE(e2.size() == 15);
    for (std::size_t i = 0; i < 15; ++i) CHECK(e2[i].to_string() == header[i]);

    auto e21 = enumerate_exponents(2, 1);
    REQUIRE(e21.size() == 2);
    CHECK(e21[0].to_string() == "01");
    CHECK(e21[1].to_string() == "10");
}

TEST_CASE("exponent count is a partial binomial sum") {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            long want = 0;
            for (int k = 1; k <= m; ++k) want += binom(n, k);
            CHECK(static_cast<long>(enumerate_exponents(n, m).size()) == want);
        }
    CHECK_THROWS_AS(enumerate_exponents(3, 0), ParameterError);
    CHECK_THROWS_AS(enumerate_exponents(3, 4), ParameterError);
}

TEST_CASE("exponent parsing and weight") {
    auto a = ExponentVector::parse("10110");
    CHECK(a.factors() == 5);
    CHECK(a.weight() == 3);
    CHECK(a.bit(0) == 1);
    CHECK(a.bit(1) == 0);
    CHECK(a.to_string() == "10110");
    CHECK_THROWS_AS(ExponentVector::parse("10x"), ParameterError);
    CHECK_THROWS_AS(ExponentVector(3, 8), DimensionError);
}

TEST_CASE("monomial values") {
    const DesignPoint all_minus({-1, -1, -1, -1, -1});
    CHECK(eval_monomial(ExponentVector::parse("00000"), all_minus) == 1);
    CHECK(eval_monomial(ExponentVector::parse("00001"), all_minus) == -1);
    CHECK(eval_monomial(ExponentVector::parse("00011"), all_minus) == 1);
    CHECK_THROWS_AS(eval_monomial(ExponentVector::parse("001"), all_minus), DimensionError);
}

TEST_CASE("monomial_sign agrees with the coordinate product") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate_points(n))
            for (std::uint32_t alpha = 0; alpha < design_size(n); ++alpha) {
                int prod = 1;
                for (int i = 0; i < n; ++i)
                    if ((alpha >> (n - 1 - i)) & 1u) prod *= a[i];
                CHECK(monomial_sign(alpha, a.index()) == prod);
            }
}

TEST_CASE("monomials are orthogonal, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto N = static_cast<std::uint32_t>(design_size(n));
        bool ok = true;
        for (std::uint32_t x = 0; x < N; ++x)
            for (std::uint32_t y = 0; y < N; ++y) {
                long s = 0;
                for (std::uint32_t a = 0; a < N; ++a) s += monomial_sign(x, a) * monomial_sign(y, a);
                if (s != (x == y ? static_cast<long>(N) : 0)) ok = false;
            }
        CHECK_MESSAGE(ok, "n = " << n);
    }
}

TEST_CASE("monomials multiply by xor") {
    for (int n = 1; n <= 5; ++n) {
        const auto N = static_cast<std::uint32_t>(design_size(n));
        for (std::uint32_t x = 0; x < N; ++x)
            for (std::uint32_t y = 0; y < N; ++y)
                for (std::uint32_t a = 0; a < N; ++a)
                    REQUIRE(monomial_sign(x, a) * monomial_sign(y, a) == monomial_sign(x ^ y, a));
    }
}

TEST_CASE("orderings are deterministic") {
    CHECK(enumerate_points(4) == enumerate_points(4));
    CHECK(enumerate_exponents(6, 3) == enumerate_exponents(6, 3));
}

TEST_CASE("replicate vectors") {
    CHECK_THROWS_AS(ReplicateVector(2, {1, 0, 1}), DimensionError);
    CHECK_THROWS_AS(ReplicateVector(2, {1, -1, 0, 0}), ParameterError);
    ReplicateVector r(3, {0, 2, 0, 1, 1, 0, 3, 0});
    CHECK(r.total() == 7);
    CHECK(r.max_entry() == 3);
    CHECK(r.support_size() == 4);
    CHECK_FALSE(r.is_indicator());
    CHECK_FALSE(r.is_zero());
    CHECK(ReplicateVector(3).is_zero());
    CHECK(ReplicateVector::full_design(3).is_indicator());
    CHECK(ReplicateVector::unit(3, 5)[5] == 1);
    CHECK_THROWS_AS(ReplicateVector::unit(3, 8), DimensionError);

    auto s = r + ReplicateVector::full_design(3);
    CHECK(s.total() == 15);
    CHECK(r.dominated_by(s));
    CHECK_FALSE(s.dominated_by(r));
    CHECK(r.scaled(2).total() == 14);
    CHECK_THROWS_AS(r.scaled(-1), ParameterError);

    ReplicateVector a(1, {0, 1}), b(1, {1, 0});
    CHECK(a < b);
}

TEST_CASE("checked arithmetic") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK(checked_add(2, 3) == 5);
    ReplicateVector r(1, {big, 0});
    CHECK_THROWS_AS(r + r, OverflowError);
}

TEST_CASE("dyadic rationals") {
    CHECK(Dyadic{16, 5}.to_string() == "1/2");
    CHECK(Dyadic{-8, 5}.to_string() == "-1/4");
    CHECK(Dyadic{32, 5}.to_string() == "1");
    CHECK(Dyadic{0, 5}.to_string() == "0");
    CHECK(Dyadic{4, 3} == Dyadic{1, 1});
    CHECK(Dyadic{3, 3} < Dyadic{1, 1});
    CHECK(Dyadic{-1, 0} < Dyadic{1, 5});
    CHECK(Dyadic{6, 2}.is_integer() == false);
    CHECK(Dyadic{8, 2}.is_integer());
}

TEST_CASE("counting coefficients storage") {
    CountingCoefficients b(5);
    b.set(0, 1, 1);
    CHECK(b.scaled(0) == 16);
    CHECK(b.coeff(0) == Dyadic{1, 1});
    b.set(31, -3, 3);
    CHECK(b.scaled(31) == -12);
    CHECK_THROWS_AS(b.set(32, 1, 0), DimensionError);
    CHECK_THROWS_AS(b.set(1, 1, 6), ParameterError);
    CHECK_THROWS_AS(CountingCoefficients(5, std::vector<std::int64_t>(31)), DimensionError);
}

}
