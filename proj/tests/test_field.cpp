#include "catch2/catch_amalgamated.hpp"

#include <cstdint>
#include <vector>

#include "lrc/field.hpp"

using lrc::ExtField;
using lrc::Field;
using lrc::Poly;

namespace {

// Every prime power up to 64.
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},  {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4},
    {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1},
    {43, 1}, {47, 1}, {7, 2}, {53, 1}, {59, 1}, {61, 1}, {2, 6}};

// Multiplicative order computed by repeated table-free multiplication.
std::uint32_t order_of(const Field& f, std::uint32_t a) {
    std::uint32_t x = a, ord = 1;
    while (x != 1) {
        x = f.mul_no_table(x, a);
        ++ord;
        REQUIRE(ord <= f.q());
    }
    return ord;
}

}  // namespace

TEST_CASE("default moduli are the smallest irreducibles", "[field]") {
    // GF(2): the degree-1 choice is x itself.
    REQUIRE(Field::make(2, 1).modulus() == Poly{0, 1});
    // GF(4): x^2+x+1 is the only irreducible monic quadratic over GF(2).
    REQUIRE(Field::make(2, 2).modulus() == Poly{1, 1, 1});

    // GF(9): search monic quadratics x^2+bx+c over GF(3) by root testing,
    // scanning the constant coefficient first, and compare to the library.
    std::uint32_t expect_c = 9, expect_b = 9;
    for (std::uint32_t c = 0; c < 3 && expect_c == 9; ++c)
        for (std::uint32_t b = 0; b < 3; ++b) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < 3; ++x)
                if ((x * x + b * x + c) % 3 == 0) has_root = true;
            if (!has_root) {
                expect_c = c;
                expect_b = b;
                break;
            }
        }
    REQUIRE(expect_c == 1);
    REQUIRE(expect_b == 0);
    REQUIRE(Field::make(3, 2).modulus() == Poly{expect_c, expect_b, 1});
}

TEST_CASE("arithmetic matches hand-worked values", "[field]") {
    Field f4 = Field::make(2, 2);
    const std::uint32_t a = f4.alpha();
    REQUIRE(a == 2);
    REQUIRE(f4.mul(a, a) == 3);          // alpha^2 = alpha + 1
    REQUIRE(f4.add(a, 3) == 1);          // alpha + (alpha+1) = 1
    REQUIRE(f4.mul(3, 3) == a);          // (alpha+1)^2 = alpha

    Field f5 = Field::make(5, 1);
    REQUIRE(f5.mul(3, 4) == 2);
    REQUIRE(f5.add(3, 4) == 2);
    REQUIRE(f5.neg(2) == 3);

    // Inverse of alpha+1 in GF(4), found by exhaustion.
    std::uint32_t found = 0;
    for (std::uint32_t b = 1; b < 4; ++b)
        if (f4.mul(3, b) == 1) found = b;
    REQUIRE(found == a);
    REQUIRE(f4.inv(3) == a);
    REQUIRE(f4.div(1, 3) == a);
}

TEST_CASE("field axioms hold exhaustively on small fields", "[field]") {
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {3, 1}, {2, 3}, {3, 2}, {13, 1}}) {
        Field f = Field::make(p, e);
        std::uint32_t q = f.q();
        for (std::uint32_t x = 0; x < q; ++x)
            for (std::uint32_t y = 0; y < q; ++y) {
                REQUIRE(f.add(x, y) == f.add(y, x));
                REQUIRE(f.mul(x, y) == f.mul(y, x));
                for (std::uint32_t z = 0; z < q; ++z) {
                    REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                    REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        for (std::uint32_t x = 1; x < q; ++x) {
            REQUIRE(f.mul(x, f.inv(x)) == 1);
            REQUIRE(f.add(x, f.neg(x)) == 0);
        }
    }
}

TEST_CASE("table and polynomial multiplication agree", "[field]") {
    for (auto [p, e] : kSmallFields) {
        Field f = Field::make(p, e);
        for (std::uint32_t x = 0; x < f.q(); ++x)
            for (std::uint32_t y = 0; y < f.q(); ++y)
                REQUIRE(f.mul(x, y) == f.mul_no_table(x, y));
    }
}

TEST_CASE("alpha is the smallest primitive encoding", "[field]") {
    for (auto [p, e] : kSmallFields) {
        Field f = Field::make(p, e);
        std::uint32_t smallest = 0;
        for (std::uint32_t cand = 1; cand < f.q(); ++cand)
            if (order_of(f, cand) == f.q() - 1) {
                smallest = cand;
                break;
            }
        REQUIRE(f.alpha() == smallest);
    }
    REQUIRE(Field::make(3, 2).alpha() == 4);
}

TEST_CASE("trace is additive and lands in the prime field", "[field]") {
    for (auto [p, e] : kSmallFields) {
        Field f = Field::make(p, e);
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            REQUIRE(f.trace_to_prime(x) < p);
            for (std::uint32_t y = 0; y < f.q(); ++y)
                REQUIRE(f.trace_to_prime(f.add(x, y)) ==
                        (f.trace_to_prime(x) + f.trace_to_prime(y)) % p);
        }
    }
    Field f4 = Field::make(2, 2);
    REQUIRE(f4.trace_to_prime(0) == 0);
    REQUIRE(f4.trace_to_prime(1) == 0);
    REQUIRE(f4.trace_to_prime(2) == 1);
    REQUIRE(f4.trace_to_prime(3) == 1);
}

TEST_CASE("trace levels are balanced", "[field]") {
    // For a != 0 the map x -> tr(ax) takes each prime-field value equally
    // often; for a = 0 everything lands on zero.
    for (auto [p, e] : kSmallFields) {
        Field f = Field::make(p, e);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            std::vector<std::uint32_t> counts(p, 0);
            for (std::uint32_t x = 0; x < f.q(); ++x) ++counts[f.trace_to_prime(f.mul(a, x))];
            if (a == 0) {
                REQUIRE(counts[0] == f.q());
            } else {
                for (std::uint32_t c = 0; c < p; ++c) REQUIRE(counts[c] == f.q() / p);
            }
        }
    }
}

TEST_CASE("invalid field construction is rejected", "[field]") {
    REQUIRE_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::make(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    Poly reducible = {1, 0, 1};  // x^2+1 = (x+1)^2 over GF(2)
    REQUIRE_THROWS_AS(Field::make(2, 2, &reducible), std::invalid_argument);
    Poly not_monic = {1, 1, 2};
    REQUIRE_THROWS_AS(Field::make(3, 2, &not_monic), std::invalid_argument);
    Poly ok = {1, 0, 1};  // irreducible over GF(3)
    REQUIRE(Field::make(3, 2, &ok).q() == 9);

    Field f4 = Field::make(2, 2);
    REQUIRE_THROWS_AS(f4.inv(0), std::domain_error);
    REQUIRE_THROWS_AS(f4.div(1, 0), std::domain_error);
    REQUIRE_THROWS_AS(f4.add(4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(f4.mul(1, 100), std::invalid_argument);
}

TEST_CASE("relative trace reproduces known values", "[field]") {
    Field f2 = Field::make(2, 1);
    ExtField f4over2 = ExtField::make(f2, 2);
    REQUIRE(f4over2.modulus() == Poly{1, 1, 1});
    REQUIRE(f4over2.trace_relative(2) == 1);  // tr(alpha) = alpha + alpha^2 = 1

    Field f3 = Field::make(3, 1);
    ExtField f9over3 = ExtField::make(f3, 2);
    REQUIRE(f9over3.trace_relative(1) == 2);
}

TEST_CASE("relative trace is additive, surjective and transitive", "[field]") {
    struct Case {
        std::uint32_t p, e, m;
    };
    for (auto c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{3, 1, 2}, Case{2, 2, 2}, Case{2, 3, 2}, Case{3, 2, 2}}) {
        Field base = Field::make(c.p, c.e);
        ExtField ext = ExtField::make(base, c.m);
        std::vector<std::uint64_t> hits(base.q(), 0);
        for (std::uint64_t a = 0; a < ext.order(); ++a) {
            std::uint32_t t = ext.trace_relative(a);
            ++hits[t];
            // transitivity: base trace of the relative trace is the absolute trace
            REQUIRE(base.trace_to_prime(t) == ext.trace_to_prime(a));
            for (std::uint64_t b = a; b < ext.order(); ++b)
                REQUIRE(ext.trace_relative(ext.add(a, b)) ==
                        base.add(ext.trace_relative(a), ext.trace_relative(b)));
        }
        for (std::uint32_t v = 0; v < base.q(); ++v)
            REQUIRE(hits[v] == ext.order() / base.q());
    }
}

TEST_CASE("relative trace is balanced on multiplicative translates", "[field]") {
    // For fixed x != 0, counting d with tr(x*d) != 0 over all nonzero d gives
    // (q-1)*q^(m-1): the trace realization of a full projective column set.
    struct Case {
        std::uint32_t p, e, m;
    };
    for (auto c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{3, 1, 2}, Case{2, 2, 2}}) {
        Field base = Field::make(c.p, c.e);
        ExtField ext = ExtField::make(base, c.m);
        std::uint64_t expect = static_cast<std::uint64_t>(base.q() - 1) * ext.order() / base.q();
        for (std::uint64_t x = 1; x < ext.order(); ++x) {
            std::uint64_t nonzero = 0;
            for (std::uint64_t d = 1; d < ext.order(); ++d)
                if (ext.trace_relative(ext.mul(x, d)) != 0) ++nonzero;
            REQUIRE(nonzero == expect);
        }
    }
}
