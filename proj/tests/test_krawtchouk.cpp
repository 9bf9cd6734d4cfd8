#include <cstdint>
#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "lrc/field.hpp"
#include "lrc/krawtchouk.hpp"
#include "lrc/util.hpp"

using namespace lrc;

TEST_CASE("degree zero and one have closed forms", "[krawtchouk]") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::int64_t n = 1; n <= 10; ++n) {
            for (std::int64_t x = 0; x <= n; ++x) {
                CHECK(kraw_eval(0, x, n, q) == 1);
                CHECK(kraw_eval(1, x, n, q) == n * (q - 1) - q * x);
            }
        }
    }
}

TEST_CASE("hand sum at degree two", "[krawtchouk]") {
    // K_2(1; 3, 2): j=0 gives C(2,2)*1 = 1, j=1 gives -C(1,1)C(2,1) = -2,
    // j=2 gives 0, so the value is -1.
    CHECK(kraw_eval(2, 1, 3, 2) == -1);
    CHECK(kraw2_quadratic(1, 3, 2) == -1);
}

TEST_CASE("quadratic closed form matches the sum", "[krawtchouk]") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::int64_t s = 2; s <= 12; ++s) {
            for (std::int64_t a = 0; a <= s; ++a) {
                CHECK(kraw2_quadratic(a, s, q) == kraw_eval(2, a, s, q));
            }
        }
    }
}

TEST_CASE("column sums collapse to a delta at zero", "[krawtchouk]") {
    // Summing K_s(a) over all s counts the full character sum over GF(q)^n,
    // which vanishes unless a = 0.
    for (std::int64_t q : {2, 3, 4, 5}) {
        for (std::int64_t n = 1; n <= 8; ++n) {
            for (std::int64_t a = 0; a <= n; ++a) {
                std::int64_t total = 0;
                for (std::int64_t s = 0; s <= n; ++s) total += kraw_eval(s, a, n, q);
                CHECK(total == (a == 0 ? checked_pow(q, static_cast<unsigned>(n)) : 0));
            }
        }
    }
}

TEST_CASE("character sum oracle agrees with the polynomial", "[krawtchouk]") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto [p, e] = prime_power_split(q);
        Field f = Field::make(p, e);
        for (std::int64_t n = 1; n <= 6; ++n) {
            for (std::int64_t wt = 0; wt <= n; ++wt) {
                std::vector<std::uint32_t> x(static_cast<std::size_t>(n), 0);
                for (std::int64_t i = 0; i < wt; ++i) x[static_cast<std::size_t>(i)] = 1;
                for (std::int64_t s = 0; s <= n; ++s) {
                    CHECK(char_sum_oracle(f, x, s) == kraw_eval(s, wt, n, q));
                }
            }
        }
    }
}

TEST_CASE("character sum depends on x only through its weight", "[krawtchouk]") {
    std::mt19937 rng(2024);
    for (std::uint32_t q : {3u, 4u}) {
        auto [p, e] = prime_power_split(q);
        Field f = Field::make(p, e);
        const std::int64_t n = 5;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint32_t> x(n, 0);
            std::int64_t wt = 0;
            for (auto& xi : x) {
                xi = rng() % q;
                if (xi != 0) ++wt;
            }
            for (std::int64_t s = 0; s <= n; ++s) {
                CHECK(char_sum_oracle(f, x, s) == kraw_eval(s, wt, n, q));
            }
        }
    }
}

TEST_CASE("zero x sums the whole sphere", "[krawtchouk]") {
    Field f = Field::make(3, 1);
    for (std::int64_t n = 1; n <= 6; ++n) {
        std::vector<std::uint32_t> x(static_cast<std::size_t>(n), 0);
        for (std::int64_t s = 0; s <= n; ++s) {
            CHECK(char_sum_oracle(f, x, s) ==
                  binomial(n, s) * checked_pow(2, static_cast<unsigned>(s)));
        }
    }
}

TEST_CASE("oracle refuses oversized spheres", "[krawtchouk]") {
    Field f = Field::make(2, 2);
    std::vector<std::uint32_t> x(8, 1);
    CHECK_THROWS_AS(char_sum_oracle(f, x, 4, 100), BudgetExceeded);
    CHECK_NOTHROW(char_sum_oracle(f, x, 4, 100000));
}

TEST_CASE("interior minimum of the quadratic", "[krawtchouk]") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::int64_t s = 3; s <= 12; ++s) {
            Kraw2Min m = kraw2_min(s, q);
            CHECK(m.argmin >= 1);
            CHECK(m.argmin <= s);
            CHECK(m.value < kraw2_quadratic(0, s, q));
            for (std::int64_t a = 0; a <= s; ++a) CHECK(m.value <= kraw2_quadratic(a, s, q));
        }
    }
}

TEST_CASE("scan minimum matches the closed floor expression", "[krawtchouk]") {
    // [(q-1)^2 C(s,2) - min_a K_2(a; s, q)] / q equals
    // floor((2(s-1)(q-1) + q)^2 / (8q)), the quantity the weight-two
    // constructions subtract from q^(m-1).  The floor form evaluates the
    // quadratic at its real vertex a* = u/(2q); rounding a* to an integer
    // costs up to q^2/8, which stays below q (one unit of the quotient)
    // exactly when q <= 7.  For q in {8, 9} the vertex falls on a half
    // integer when s = 1 mod q and the floor form overshoots by one.
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::int64_t s = 3; s <= 12; ++s) {
            std::int64_t lead = (q - 1) * (q - 1) * binomial(s, 2) - kraw2_min(s, q).value;
            REQUIRE(lead % q == 0);
            std::int64_t u = 2 * (s - 1) * (q - 1) + q;
            std::int64_t overshoot = (q >= 8 && (s - 1) % q == 0) ? 1 : 0;
            CHECK(lead / q + overshoot == (u * u) / (8 * q));
        }
    }
}

TEST_CASE("argument validation", "[krawtchouk]") {
    CHECK_THROWS_AS(kraw_eval(3, 0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kraw_eval(0, 3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kraw_eval(0, 0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(kraw2_quadratic(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(kraw2_quadratic(3, 2, 2), std::invalid_argument);
    Field f = Field::make(2, 1);
    CHECK_THROWS_AS(char_sum_oracle(f, {0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(char_sum_oracle(f, {2, 0}, 1), std::invalid_argument);
}
