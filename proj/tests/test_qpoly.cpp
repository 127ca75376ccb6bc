#include <gtest/gtest.h>

#include <random>

#include "faces/qpoly.hpp"
#include "support.hpp"

using namespace faces;
using faces::testing::P;

namespace {

/// (z;z)_n as a polynomial.
LaurentPoly z_pochhammer(int n) {
    LaurentPoly r(1);
    for (int t = 1; t <= n; ++t) r = r * (LaurentPoly(1) - LaurentPoly::monomial(t, 1));
    return r;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> ex(-4, 4), co(-3, 3), n(0, 4);
    LaurentPoly p;
    for (int k = n(rng); k > 0; --k) p.add_term(ex(rng), co(rng));
    return p;
}

}  // namespace

TEST(LaurentPoly, NoZeroCoefficientsStored) {
    LaurentPoly p{{1, 2}, {0, 0}};
    EXPECT_EQ(p.size(), 1u);
    p.add_term(1, -2);
    EXPECT_TRUE(p.is_zero());
}

TEST(LaurentPoly, ArithmeticAndRendering) {
    const auto a = P("v+v^-1");
    EXPECT_EQ(to_string(a * a), "q^2+2+q^-2");
    EXPECT_EQ(to_string(P("q^4+q^2")), "q^4+q^2");
    EXPECT_EQ(to_string_ascending(P("1+3z+6z^2"), "z"), "1+3z+6z^2");
    EXPECT_EQ(P("2*v^3 - v"), LaurentPoly({{3, 2}, {1, -1}}));
    EXPECT_EQ(a.shifted(2), P("v^3+v"));
}

TEST(LaurentPoly, OverflowIsAnError) {
    const LaurentPoly big = LaurentPoly::monomial(0, INT64_MAX);
    EXPECT_THROW(big + big, OverflowError);
    EXPECT_THROW(big * LaurentPoly(2), OverflowError);
}

TEST(QuantumInt, Values) {
    EXPECT_EQ(quantum_int(1), LaurentPoly(1));
    EXPECT_EQ(quantum_int(2), P("v+v^-1"));
    EXPECT_EQ(quantum_int(4), P("v^3+v+v^-1+v^-3"));
    EXPECT_THROW(quantum_int(0), DomainError);
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_bar_symmetric(quantum_int(n)));
}

TEST(QuantumFactorial, Values) {
    EXPECT_EQ(quantum_factorial(0), LaurentPoly(1));
    EXPECT_EQ(quantum_factorial(2), P("v+v^-1"));
    EXPECT_EQ(quantum_factorial(3), P("v^3+2v+2v^-1+v^-3"));
}

TEST(GaussBinom, Examples) {
    EXPECT_EQ(gauss_binom(3, 1), P("1+z+z^2"));
    EXPECT_EQ(gauss_binom(5, 0), LaurentPoly(1));
    EXPECT_EQ(gauss_binom(4, 2), P("1+z+2z^2+z^3+z^4"));
    EXPECT_TRUE(gauss_binom(3, 4).is_zero());
    EXPECT_TRUE(gauss_binom(3, -1).is_zero());
}

TEST(GaussBinom, MatchesQuotientFormAndWords) {
    for (int a = 0; a <= 8; ++a)
        for (int j = 0; j <= a; ++j) {
            const auto g = gauss_binom(a, j);
            const auto quotient = exact_divide(exact_divide(z_pochhammer(a), z_pochhammer(j)), z_pochhammer(a - j));
            EXPECT_EQ(g, quotient) << a << " " << j;
            EXPECT_EQ(g, gauss_binom(a, a - j));
            LaurentPoly words, cowords;
            for (const auto& s : binary_words(a, j)) {
                words.add_term(inv(s), 1);
                cowords.add_term(coinv(s), 1);
            }
            EXPECT_EQ(g, words);
            EXPECT_EQ(g, cowords);
            EXPECT_TRUE(is_palindromic(g));
            EXPECT_EQ(g.max_exponent(), j * (a - j));
        }
}

TEST(ExactDivide, RemainderIsAnIntegrityError) {
    EXPECT_EQ(exact_divide(P("v^2+2+v^-2"), P("v+v^-1")), P("v+v^-1"));
    EXPECT_THROW(exact_divide(P("v^2+v"), P("v+v^-1")), IntegrityError);
}

TEST(Bar, InvolutionAndRingHomomorphism) {
    EXPECT_EQ(bar(P("v^2+v^-1")), P("v^-2+v"));
    EXPECT_EQ(bar(LaurentPoly(1)), LaurentPoly(1));
    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(bar(bar(a)), a);
        EXPECT_EQ(bar(a + b), bar(a) + bar(b));
        EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    }
}

TEST(BarSymmetricPart, Examples) {
    auto [b1, r1] = bar_symmetric_part(P("v^-1+2+v^3"));
    EXPECT_EQ(b1, P("v^-1+2+v"));
    EXPECT_EQ(r1, P("v^3-v"));
    auto [b2, r2] = bar_symmetric_part(quantum_int(3));
    EXPECT_EQ(b2, quantum_int(3));
    EXPECT_TRUE(r2.is_zero());
    auto [b3, r3] = bar_symmetric_part(P("v^2"));
    EXPECT_TRUE(b3.is_zero());
    EXPECT_EQ(r3, P("v^2"));
}

TEST(BarSymmetricPart, Properties) {
    std::mt19937 rng(11);
    for (int k = 0; k < 300; ++k) {
        const auto c = random_poly(rng);
        auto [beta, rest] = bar_symmetric_part(c);
        EXPECT_TRUE(is_bar_symmetric(beta));
        EXPECT_EQ(beta + rest, c);
        if (!rest.is_zero()) {
            EXPECT_GE(rest.min_exponent(), 1);
        }
    }
}

TEST(BinaryWord, InversionStatistics) {
    EXPECT_EQ(inv(BinaryWord("10")), 1);
    EXPECT_EQ(inv(BinaryWord("0011")), 0);
    EXPECT_EQ(inv(BinaryWord("1100")), 4);
    EXPECT_EQ(coinv(BinaryWord("0011")), 4);
    EXPECT_EQ(inv_rel(BinaryWord("0111"), BinaryWord("0111")), 0);
    EXPECT_EQ(inv_rel(BinaryWord("0101"), BinaryWord("0111")), 1);
    EXPECT_EQ(inv_rel(BinaryWord("0001"), BinaryWord("1111")), 3);
    EXPECT_THROW(inv_rel(BinaryWord("1000"), BinaryWord("0111")), DomainError);
    EXPECT_THROW(inv_rel(BinaryWord("10"), BinaryWord("111")), DomainError);
}

TEST(BinaryWord, ExclusiveInversions) {
    EXPECT_EQ(inv_excl(BinaryWord("101"), BinaryWord("101"), BinaryWord("100")), 0);
    EXPECT_EQ(inv_excl(BinaryWord("110"), BinaryWord("100"), BinaryWord("000")), -1);
    EXPECT_EQ(inv_excl(BinaryWord("011"), BinaryWord("001"), BinaryWord("000")), 1);
    EXPECT_THROW(inv_excl(BinaryWord("011"), BinaryWord("100"), BinaryWord("000")), DomainError);
}

TEST(BinaryWord, Enumeration) {
    EXPECT_EQ(binary_words(4, 2).size(), 6u);
    EXPECT_TRUE(binary_words(2, 3).empty());
    EXPECT_TRUE(binary_words(2, -1).empty());
    EXPECT_EQ(binary_words(3, 1).front().str(), "001");
    const auto subs = sub_words(BinaryWord("1011"), 2);
    EXPECT_EQ(subs.size(), 3u);
    for (const auto& w : subs) EXPECT_TRUE(w.subset_of(BinaryWord("1011")));
}
