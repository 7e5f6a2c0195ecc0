#include "modsupp/ring/ring.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace modsupp;

namespace {

// Z/m arithmetic must agree with machine integers mod m.
void expect_integer_arithmetic(std::uint64_t m) {
    const Ring R = Ring::zm(m);
    ASSERT_EQ(R.size(), m);
    for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b) {
            ASSERT_EQ(R.add({a}, {b}).code, (a + b) % m);
            ASSERT_EQ(R.mul({a}, {b}).code, (std::uint64_t{a} * b) % m);
            ASSERT_EQ(R.sub({a}, {b}).code, (a + m - b) % m);
        }
        EXPECT_EQ(R.is_unit({a}), (std::gcd<std::uint64_t, std::uint64_t>(a, m) == 1)) << a;
        if (R.is_unit({a})) {
            EXPECT_EQ(R.mul({a}, R.inverse({a})).code, 1u);
        }
    }
}

}  // namespace

TEST(Ring, IntegerArithmeticMatchesModularIntegers) {
    for (const std::uint64_t m : {2, 4, 6, 8, 9, 12, 25, 30}) expect_integer_arithmetic(m);
}

TEST(Ring, ZmFactorsIntoPrimePowers) {
    const Ring R = Ring::zm(12);
    ASSERT_EQ(R.factor_count(), 2u);
    EXPECT_EQ(R.factor(0).size(), 4u);
    EXPECT_EQ(R.factor(0).chain_length(), 2u);
    EXPECT_EQ(R.factor(1).size(), 3u);
    EXPECT_TRUE(R.factor(1).is_field());
    EXPECT_FALSE(R.is_local());
    // CRT residues of 7 are (7 mod 4, 7 mod 3).
    EXPECT_EQ(R.residue({7}, 0), 3u);
    EXPECT_EQ(R.residue({7}, 1), 1u);
    const std::uint32_t res[] = {3, 1};
    EXPECT_EQ(R.from_residues(res).code, 7u);
}

TEST(Ring, IdempotentsSplitOne) {
    for (const std::uint64_t m : {6, 12, 30}) {
        const Ring R = Ring::zm(m);
        RingElem sum = R.zero();
        for (std::size_t i = 0; i < R.factor_count(); ++i) {
            const RingElem e = R.idempotent(i);
            EXPECT_EQ(R.mul(e, e), e);
            for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(R.mul(e, R.idempotent(j)), R.zero());
            sum = R.add(sum, e);
        }
        EXPECT_EQ(sum, R.one());
    }
}

TEST(Ring, Gf4MatchesHandTable) {
    // Modulus 1 + x + x^2; code 2 is x and code 3 is x + 1.
    const Ring F = Ring::field(4);
    ASSERT_EQ(F.size(), 4u);
    ASSERT_TRUE(F.is_field());
    const std::uint32_t mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (std::uint32_t a = 0; a < 4; ++a) {
        for (std::uint32_t b = 0; b < 4; ++b) {
            EXPECT_EQ(F.add({a}, {b}).code, a ^ b);
            EXPECT_EQ(F.mul({a}, {b}).code, mul[a][b]);
        }
    }
}

TEST(Ring, GaloisFieldsHaveInversesAndNoZeroDivisors) {
    for (const std::uint32_t q : {8u, 9u, 16u, 25u, 27u}) {
        const Ring F = Ring::field(q);
        ASSERT_EQ(F.size(), q);
        for (std::uint32_t a = 1; a < q; ++a) {
            ASSERT_TRUE(F.is_unit({a}));
            EXPECT_EQ(F.mul({a}, F.inverse({a})), F.one());
            for (std::uint32_t b = 1; b < q; ++b) ASSERT_NE(F.mul({a}, {b}), F.zero());
        }
        // Frobenius: (a + b)^p = a^p + b^p.
        const std::uint32_t p = F.factor(0).p();
        auto pow = [&](RingElem x) {
            RingElem r = F.one();
            for (std::uint32_t k = 0; k < p; ++k) r = F.mul(r, x);
            return r;
        };
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) ASSERT_EQ(pow(F.add({a}, {b})), F.add(pow({a}), pow({b})));
        }
    }
}

TEST(Ring, ChainFactorValuationAndRadical) {
    const Ring R = Ring::zm(8);
    EXPECT_EQ(R.factor(0).valuation(0), 3u);
    EXPECT_EQ(R.factor(0).valuation(1), 0u);
    EXPECT_EQ(R.factor(0).valuation(4), 2u);
    EXPECT_EQ(R.factor(0).valuation(6), 1u);
    EXPECT_EQ(R.radical_generator().code, 2u);
    EXPECT_TRUE(R.in_radical({6}));
    EXPECT_FALSE(R.in_radical({3}));
}

TEST(Ring, MixedProductUsesResidueTuples) {
    const Ring R = Ring::product({ChainFactor::zpe(2, 2), ChainFactor::gf_default(2, 2)});
    EXPECT_EQ(R.size(), 16u);
    EXPECT_FALSE(R.integer_form());
    const std::uint32_t a[] = {3, 2}, b[] = {2, 3};
    const RingElem x = R.from_residues(a), y = R.from_residues(b);
    const RingElem s = R.add(x, y), p = R.mul(x, y);
    EXPECT_EQ(R.residue(s, 0), 1u);
    EXPECT_EQ(R.residue(s, 1), 1u);
    EXPECT_EQ(R.residue(p, 0), 2u);
    EXPECT_EQ(R.residue(p, 1), 1u);
    EXPECT_THROW(R.from_int(3), ValidationError);
}

TEST(Ring, RejectsBadParameters) {
    EXPECT_THROW(Ring::zm(1), ValidationError);
    EXPECT_THROW(Ring::field(6), ValidationError);
    EXPECT_THROW(ChainFactor::gf(2, 2, {1, 0, 1}), ValidationError);  // x^2 + 1 = (x + 1)^2 over F_2
    EXPECT_THROW(Ring::zm(std::uint64_t{1} << 20), CapExceeded);
}
