// Exact scalar types and the combinatorial number families: frozen value
// tables, independent brute-force oracles, and the defining recurrences.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "taut/combinatorics.hpp"
#include "taut/partition.hpp"
#include "taut/rational.hpp"

using namespace taut;

TEST_CASE("Int arithmetic and representation") {
    CHECK(Int(12) + Int(-5) == Int(7));
    CHECK(Int(-4) * Int(6) == Int(-24));
    CHECK(Int("123456789012345678901234567890") * Int(1) ==
          Int("123456789012345678901234567890"));
    CHECK(Int(2).pow(100).to_string() == "1267650600228229401496703205376");
    CHECK(Int(-7).abs() == Int(7));
    CHECK(Int(3) < Int(4));
    CHECK(Int(0).is_zero());
    CHECK_THROWS_AS(Int("12x"), std::invalid_argument);
}

TEST_CASE("Rat is always in lowest terms with positive denominator") {
    CHECK(Rat(6, 8).to_string() == "3/4");
    CHECK(Rat(3, -6).to_string() == "-1/2");
    CHECK(Rat(0, 5).to_string() == "0");
    CHECK(Rat(-10, 5).to_string() == "-2");
    CHECK(Rat("-691/2730").numerator() == Int(-691));
    CHECK(Rat("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("Rat arithmetic is exact") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(-2, 3).pow(3) == Rat(-8, 27));
    CHECK(Rat(5, 3).reciprocal() == Rat(3, 5));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).pow(-1), std::domain_error);
}

TEST_CASE("factorial, binomial, double factorial") {
    CHECK(factorial(0) == Int(1));
    CHECK(factorial(10) == Int(3628800));
    CHECK(binomial(10, 3) == Int(120));
    CHECK(binomial(5, 0) == Int(1));
    // Out-of-range convention, relied on by alternating-sum edge terms.
    CHECK(binomial(5, -1) == Int(0));
    CHECK(binomial(5, 6) == Int(0));
    CHECK(double_factorial(-1) == Int(1));
    CHECK(double_factorial(0) == Int(1));
    CHECK(double_factorial(5) == Int(15));
    CHECK(double_factorial(9) == Int(945));
    CHECK(double_factorial(10) == Int(3840));
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("Bernoulli numbers from series division match the frozen table") {
    // t/(e^t - 1) convention: B_1 = -1/2.
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(6) == Rat(1, 42));
    CHECK(bernoulli(8) == Rat(-1, 30));
    CHECK(bernoulli(10) == Rat(5, 66));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli_abs(12) == Rat(691, 2730));

    SECTION("odd Bernoulli numbers vanish") {
        for (long m = 3; m <= 41; m += 2) CHECK(bernoulli(m) == Rat(0));
    }

    SECTION("sign of B_2m alternates") {
        for (long m = 1; m <= 15; ++m) {
            const int expected = (m % 2 == 1) ? 1 : -1;
            CHECK(bernoulli(2 * m).sign() == expected);
        }
    }

    SECTION("defining recurrence sum C(n+1,k) B_k = 0, an independent route") {
        for (long n = 1; n <= 40; ++n) {
            Rat acc;
            for (long k = 0; k <= n; ++k) acc += Rat(binomial(n + 1, k)) * bernoulli(k);
            CHECK(acc == Rat(0));
        }
    }
}

namespace {

// Brute-force oracle: count set partitions of {0..n-1} into exactly l blocks
// by assigning each element to a block in restricted-growth order.
long count_set_partitions(int n, int l) {
    std::vector<int> block(n, 0);
    long count = 0;
    auto recurse = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            count += (used == l) ? 1 : 0;
            return;
        }
        for (int b = 0; b <= used && b < l; ++b) {
            block[i] = b;
            self(self, i + 1, used + (b == used ? 1 : 0));
        }
    };
    recurse(recurse, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == Int(1));
    CHECK(stirling2(4, 2) == Int(7));
    CHECK(stirling2(5, 3) == Int(25));
    CHECK(stirling2(0, 1) == Int(0));
    CHECK(stirling2(3, 0) == Int(0));

    SECTION("equal arguments give 1; one block gives 1") {
        for (long l = 0; l <= 12; ++l) CHECK(stirling2(l, l) == Int(1));
        for (long n = 1; n <= 12; ++n) CHECK(stirling2(n, 1) == Int(1));
    }

    SECTION("alternating-sum route equals brute-force set-partition count") {
        for (int n = 0; n <= 8; ++n)
            for (int l = 0; l <= n + 1; ++l)
                CHECK(stirling2(n, l) == Int(count_set_partitions(n, l)));
    }

    SECTION("alternating-sum route equals the triangle recurrence route") {
        for (long n = 0; n <= 20; ++n)
            for (long l = 0; l <= n; ++l)
                CHECK(stirling2(n, l) == stirling2_by_recurrence(n, l));
    }

    SECTION("recurrence S(n+1,l) = l S(n,l) + S(n,l-1)") {
        for (long n = 0; n <= 15; ++n)
            for (long l = 1; l <= n + 1; ++l)
                CHECK(stirling2(n + 1, l) ==
                      Int(l) * stirling2(n, l) + stirling2(n, l - 1));
    }
}

TEST_CASE("Partition type") {
    const Partition p({1, 3, 1, 2});
    CHECK(p.parts() == std::vector<long>({3, 2, 1, 1}));  // sorted descending
    CHECK(p.size() == 7);
    CHECK(p.length() == 4);
    CHECK(p.aut_order() == Int(2));  // the two 1's commute
    CHECK(Partition({2, 2}).aut_order() == Int(2));
    CHECK(Partition({2, 2, 2}).aut_order() == Int(6));
    CHECK(Partition({5, 3, 1}).aut_order() == Int(1));
    CHECK(Partition().size() == 0);
    CHECK(Partition().length() == 0);
    CHECK(Partition().aut_order() == Int(1));
    CHECK(p.to_string() == "{3,2,1,1}");
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("partitions_of enumeration") {
    const auto all3 = partitions_of(3);
    REQUIRE(all3.size() == 3);
    CHECK(all3[0] == Partition({3}));
    CHECK(all3[1] == Partition({2, 1}));
    CHECK(all3[2] == Partition({1, 1, 1}));

    SECTION("Part(0,0) is the singleton empty partition with aut order 1") {
        const auto zero = partitions_of(0, 0);
        REQUIRE(zero.size() == 1);
        CHECK(zero[0] == Partition());
        CHECK(zero[0].aut_order() == Int(1));
        CHECK(partitions_of(0).size() == 1);
        CHECK(partitions_of(3, 0).empty());
    }

    SECTION("length restriction") {
        const auto p42 = partitions_of(4, 2);
        REQUIRE(p42.size() == 2);
        CHECK(p42[0] == Partition({3, 1}));
        CHECK(p42[1] == Partition({2, 2}));
        CHECK(p42[1].aut_order() == Int(2));
    }

    SECTION("cardinalities reproduce the partition numbers p(n), n <= 30") {
        const long p[31] = {1,    1,    2,    3,    5,    7,    11,   15,
                            22,   30,   42,   56,   77,   101,  135,  176,
                            231,  297,  385,  490,  627,  792,  1002, 1255,
                            1575, 1958, 2436, 3010, 3718, 4565, 5604};
        for (long n = 0; n <= 30; ++n)
            CHECK(static_cast<long>(partitions_of(n).size()) == p[n]);
    }

    SECTION("restricted counts sum to the unrestricted count") {
        for (long n = 0; n <= 14; ++n) {
            size_t total = 0;
            for (int l = 0; l <= n; ++l) total += partitions_of(n, l).size();
            CHECK(total == partitions_of(n).size());
        }
    }

    SECTION("automorphism orders: Bell numbers two ways") {
        // sum over partitions of n of n!/(prod parts! * aut) counts set
        // partitions, as does sum_l S(n, l); the routes are independent.
        for (long n = 0; n <= 12; ++n) {
            Rat via_partitions;
            for (const Partition& q : partitions_of(n)) {
                Int denom = q.aut_order();
                for (long part : q.parts()) denom *= factorial(part);
                via_partitions += Rat(factorial(n), denom);
            }
            Int via_stirling;
            for (long l = 0; l <= n; ++l) via_stirling += stirling2(n, l);
            CHECK(via_partitions == Rat(via_stirling));
        }
        CHECK(Rat(52) == Rat([] {
                  Int b;
                  for (long l = 0; l <= 5; ++l) b += stirling2(5, l);
                  return b;
              }()));
    }
}
