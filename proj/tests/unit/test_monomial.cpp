#include "common/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace modsupp;

namespace {

using Coarse = std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>>;

Vector ints(const Ring& R, std::initializer_list<int> xs) {
    Vector v;
    for (const int x : xs) v.push_back(R.from_int(x));
    return v;
}

MonomialIdeal squarefree(std::size_t u, const std::vector<std::vector<std::size_t>>& sets) {
    std::vector<Monomial> gens;
    for (const auto& s : sets) {
        Monomial m(u, 0);
        for (const std::size_t i : s) m[i] = 1;
        gens.push_back(m);
    }
    return MonomialIdeal(u, gens);
}

MonomialIdeal even_weight_ideal() {
    return squarefree(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Stanley-Reisner ideal of the six-vertex real projective plane: the ten
// non-face triples, every pair being an edge.
MonomialIdeal projective_plane_ideal() {
    const std::set<std::set<std::size_t>> facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    std::vector<std::vector<std::size_t>> nonfaces;
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) {
            for (std::size_t c = b + 1; c < 6; ++c) {
                if (!facets.count({a, b, c})) nonfaces.push_back({a, b, c});
            }
        }
    }
    return squarefree(6, nonfaces);
}

void expect_matches_hochster(const MonomialIdeal& I, std::uint64_t characteristic, const std::string& label) {
    const BettiTable t = betti_numbers(I, characteristic);
    const Coarse expected = oracle::hochster_betti(I.generators(), static_cast<long>(characteristic));
    EXPECT_EQ(t.coarse, expected) << label << " char " << characteristic;
}

}  // namespace

TEST(Ideal, KeepsOnlyMinimalGenerators) {
    const MonomialIdeal I(3, {{1, 1, 0}, {2, 1, 0}, {1, 1, 0}, {0, 0, 3}, {0, 0, 4}, {1, 0, 0}});
    EXPECT_EQ(I.size(), 2u);
    EXPECT_EQ(I.to_text(), "x3^3, x1");
    EXPECT_TRUE(I.contains({5, 2, 0}));
    EXPECT_FALSE(I.contains({0, 7, 2}));
    EXPECT_THROW(MonomialIdeal(2, {{0, 0}}), ValidationError);
    EXPECT_THROW(MonomialIdeal(2, {{1, 0, 0}}), ValidationError);
}

TEST(Ideal, ParsesAndPrintsMonomials) {
    EXPECT_EQ(parse_monomial("x1^2*x3", 3), (Monomial{2, 0, 1}));
    EXPECT_EQ(parse_monomial(" x2 * x2 ", 2), (Monomial{0, 2}));
    EXPECT_EQ(parse_monomial("1", 2), (Monomial{0, 0}));
    EXPECT_EQ(to_text(Monomial{0, 3, 1}), "x2^3*x3");
    for (const Monomial& m : {Monomial{1, 0, 0}, Monomial{4, 2, 1}, Monomial{0, 0, 7}}) EXPECT_EQ(parse_monomial(to_text(m), 3), m);
    EXPECT_THROW(parse_monomial("x4", 3), ValidationError);
    EXPECT_THROW(parse_monomial("x0", 3), ValidationError);
    EXPECT_THROW(parse_monomial("y1", 3), ValidationError);
    EXPECT_THROW(parse_monomial("x1^", 3), ValidationError);
    EXPECT_THROW(parse_monomial("x1**x2", 3), ValidationError);
}

TEST(Betti, EvenWeightIdealHasThreeFinalSyzygies) {
    const BettiTable t = betti_numbers(even_weight_ideal());
    const Coarse expected = {{1, {{2, 6}}}, {2, {{3, 8}}}, {3, {{4, 3}}}};
    EXPECT_EQ(t.coarse, expected);
    EXPECT_EQ(t.betti(3, 4), 3u);
    EXPECT_EQ(t.projective_dimension, 3u);
    EXPECT_EQ(t.min_shifts, (std::vector<std::uint64_t>{2, 3, 4}));
    expect_matches_hochster(even_weight_ideal(), 0, "even weight");
    expect_matches_hochster(even_weight_ideal(), 2, "even weight");
    // Taylor ranks are binomial(6, r); degrees 5 and 6 cancel completely.
    const Coarse taylor = {{1, {{2, 6}}}, {2, {{3, 12}, {4, 3}}}, {3, {{3, 4}, {4, 16}}}, {4, {{4, 15}}}, {5, {{4, 6}}}, {6, {{4, 1}}}};
    EXPECT_EQ(t.taylor_coarse, taylor);
}

TEST(Betti, Z6CodeIdealMatchesHochster) {
    const MonomialIdeal I(6, {{0, 0, 0, 0, 0, 1}, {0, 0, 2, 0, 2, 0}, {0, 1, 0, 1, 0, 0}, {2, 0, 0, 0, 0, 0}});
    const BettiTable t = betti_numbers(I);
    const Coarse expected = {{1, {{1, 1}, {2, 2}, {4, 1}}}, {2, {{3, 2}, {4, 1}, {5, 1}, {6, 2}}}, {3, {{5, 1}, {7, 2}, {8, 1}}}, {4, {{9, 1}}}};
    EXPECT_EQ(t.coarse, expected);
    EXPECT_EQ(t.min_shifts, (std::vector<std::uint64_t>{1, 3, 5, 9}));
    expect_matches_hochster(I, 0, "z6");
}

TEST(Betti, ProjectivePlaneDependsOnTheCharacteristic) {
    const MonomialIdeal I = projective_plane_ideal();
    ASSERT_EQ(I.size(), 10u);
    const BettiTable q = betti_numbers(I, 0);
    const BettiTable two = betti_numbers(I, 2);
    const BettiTable three = betti_numbers(I, 3);
    EXPECT_NE(q.coarse, two.coarse);
    EXPECT_EQ(q.coarse, three.coarse);
    // Over F_2 the whole complex carries H_1 and H_2, adding to both top cells.
    EXPECT_EQ(two.betti(3, 6), q.betti(3, 6) + 1);
    EXPECT_EQ(two.betti(4, 6), q.betti(4, 6) + 1);
    expect_matches_hochster(I, 0, "RP2");
    expect_matches_hochster(I, 2, "RP2");
}

TEST(Betti, RandomIdealsMatchHochster) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t u = 2 + trial % 3;
        const std::size_t count = 1 + rng() % 5;
        std::vector<Monomial> gens;
        for (std::size_t g = 0; g < count; ++g) {
            Monomial m(u);
            for (auto& e : m) e = static_cast<std::uint32_t>(rng() % 3);
            if (degree(m) == 0) m[0] = 1;
            gens.push_back(m);
        }
        const MonomialIdeal I(u, gens);
        expect_matches_hochster(I, 0, I.to_text());
        if (trial % 4 == 0) expect_matches_hochster(I, 2, I.to_text());
    }
}

TEST(Betti, LeastShiftsAreStrictlyIncreasing) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Monomial> gens;
        for (int g = 0; g < 4; ++g) {
            Monomial m(4);
            for (auto& e : m) e = static_cast<std::uint32_t>(rng() % 3);
            if (degree(m) == 0) m[1] = 2;
            gens.push_back(m);
        }
        const BettiTable t = betti_numbers(MonomialIdeal(4, gens));
        for (std::size_t r = 1; r < t.min_shifts.size(); ++r) EXPECT_LT(t.min_shifts[r - 1], t.min_shifts[r]);
    }
}

TEST(Betti, RejectsBadCharacteristicAndHonoursCaps) {
    EXPECT_THROW(betti_numbers(even_weight_ideal(), 4), ValidationError);
    Limits few;
    few.taylor_generators = 5;
    EXPECT_THROW(betti_numbers(even_weight_ideal(), 0, few), CapExceeded);
    Limits narrow;
    narrow.strand_entries = 10;
    EXPECT_THROW(betti_numbers(even_weight_ideal(), 0, narrow), CapExceeded);
    EXPECT_EQ(betti_numbers(MonomialIdeal(2, {})).projective_dimension, 0u);
}

TEST(CodeIdeal, GeneratorsAreMinimalSupports) {
    const Ring Z4 = Ring::zm(4);
    const Code C(Z4, 3, {ints(Z4, {1, 1, 0}), ints(Z4, {3, 2, 1})});
    const CodeIdeal I = ideal_of_code(C, Support::lee(Z4, 3));
    EXPECT_EQ(I.ideal.to_text(), "x2*x3, x1*x3, x1*x2");
    ASSERT_EQ(I.representatives.size(), I.ideal.size());
    for (std::size_t g = 0; g < I.ideal.size(); ++g) EXPECT_EQ(Support::lee(Z4, 3).evaluate(I.representatives[g]), I.ideal.generators()[g]);
}

TEST(CodeIdeal, BettiRouteNeedsModularity) {
    const Ring F = Ring::field(2);
    const Support s = Support::table(F, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 1}});
    const Code C = Code::full_space(F, 2);
    EXPECT_THROW(weights_from_betti(C, s), HypothesisError);
    const WeightProfile p = weights_from_betti(C, s, 0, true);
    EXPECT_EQ(p.M, 1u);
    EXPECT_EQ(p.d, (std::vector<std::uint64_t>{1}));
}
