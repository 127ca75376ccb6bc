#include <gtest/gtest.h>

#include <map>

#include "faces/canonical.hpp"
#include "faces/closedform.hpp"
#include "faces/verify.hpp"
#include "worked_examples.hpp"
#include "support.hpp"

using namespace faces;
using namespace faces::testing;

TEST(SValue, Examples) {
    EXPECT_EQ(s_value(2, 1, 0), 1);
    EXPECT_EQ(s_value(2, 1, 1), 1);
    EXPECT_EQ(s_value(4, 2, 2), 2);
    for (int t = 0; t <= 2; ++t) EXPECT_EQ(s_value(3, 1, t), 1);
    EXPECT_EQ(s_value(3, 1, 3), 0);
    EXPECT_EQ(s_value(3, 1, -1), 0);
}

TEST(SValue, SymmetricAndEqualToGaussianCoefficients) {
    for (int a = 1; a <= 9; ++a)
        for (int j = 0; j <= a; ++j)
            for (int t = 0; t <= j * (a - j); ++t) {
                EXPECT_EQ(s_value(a, j, t), s_value(a, a - j, t));
                EXPECT_EQ(s_value(a, j, t), gauss_binom(a, j).coeff(t));
            }
}

TEST(FaceParams, Validation) {
    EXPECT_THROW(FaceParams(weight(2, {1, 1}), 0, 0), DomainError);
    EXPECT_THROW(FaceParams(two_corner_weight(4, 3, 2), 6, 0), DomainError);
    EXPECT_NO_THROW(FaceParams(two_corner_weight(3, 3, 2), 5, 5));
}

TEST(Classify, ExamplePath) {
    const auto L = two_corner_weight(4, 2, 3);
    const auto cls = classify_face_mps(FaceParams(L, 2, 3));
    ASSERT_EQ(cls.size(), 3u);
    EXPECT_EQ(cls[0].w, 0);
    EXPECT_EQ(cls[2].w, 2);
    EXPECT_EQ(cls[1].mu, mp(kG3Leader, example_charge()));
    EXPECT_EQ(to_string(cls[1].path), "2^1 1^2 2^2");
    EXPECT_EQ(cls[1].u, 1);
}

TEST(Classify, SingleString) {
    const auto L = two_corner_weight(4, 2, 3);
    const auto cls = classify_face_mps(FaceParams(L, 0, 2));
    ASSERT_EQ(cls.size(), 1u);
    EXPECT_EQ(cls[0].w, 0);
    EXPECT_EQ(cls[0].mu, mp("[[],[],[1],[1],[]]", L.multicharge()));
}

TEST(Classify, FinalExampleLeaders) {
    const auto L = two_corner_weight(4, 3, 5);
    const auto ch = L.multicharge();
    const auto cls = classify_face_mps(FaceParams(L, 4, 6));
    ASSERT_EQ(cls.size(), 3u);
    std::map<int, std::pair<std::string, int>> want{{1, {kMu1, 3}}, {2, {kMu2, 2}}, {3, {kMu3, 1}}};
    for (const auto& c : cls) {
        EXPECT_EQ(c.mu, mp(want.at(c.w).first, ch));
        EXPECT_EQ(c.u, want.at(c.w).second);
    }
}

TEST(Count, Examples) {
    EXPECT_EQ(count_face_mps(3, 2, 2, 2), 3);
    EXPECT_EQ(count_face_mps(3, 2, 3, 5), 1);
    EXPECT_EQ(count_face_mps(4, 1, 0, 0), 1);
    EXPECT_THROW(count_face_mps(3, 2, 0, 3), DomainError);
}

TEST(Count, MatchesBruteForce) {
    for (int e : {3, 4, 5}) {
        const auto r = sweep_counts(e, 3);
        EXPECT_TRUE(r.passed()) << (r.messages.empty() ? "" : r.messages.front());
    }
}

TEST(TauMp, Examples) {
    const auto L = two_corner_weight(4, 2, 3);
    const auto ch = L.multicharge();
    EXPECT_EQ(tau_mp(L, {BinaryWord("00"), BinaryWord("00"), BinaryWord("000"), BinaryWord("000")}), Multipartition(ch));
    EXPECT_EQ(tau_mp(L, {BinaryWord("10"), BinaryWord("10"), BinaryWord("110"), BinaryWord("000")}),
              mp("[[2],[],[1],[1],[]]", ch));
    EXPECT_EQ(tau_mp(L, {BinaryWord("11"), BinaryWord("10"), BinaryWord("110"), BinaryWord("000")}), mp(kG3Leader, ch));
    EXPECT_THROW(tau_mp(L, {BinaryWord("01"), BinaryWord("10"), BinaryWord("110"), BinaryWord("000")}), DomainError);
    EXPECT_THROW(tau_mp(L, {BinaryWord("11"), BinaryWord("10"), BinaryWord("110"), BinaryWord("001")}), DomainError);
}

TEST(ClosedFock, ExamplePath) {
    const auto L = two_corner_weight(4, 2, 3);
    const auto ch = L.multicharge();
    const auto x = closed_fock(FaceParams(L, 2, 3), 1);
    EXPECT_EQ(x, eval_path(parse_path("2^1 1^2 2^2"), ch));
    CanonicalBasis cb(ch);
    EXPECT_EQ(x, cb.element(mp(kG3Leader, ch)).vector + cb.element(mp("[[2],[2],[1],[],[]]", ch)).vector);
}

TEST(ClosedFock, SingleString) {
    const auto L = two_corner_weight(4, 2, 3);
    for (int k = 0; k <= 3; ++k) {
        FockVector want(L.multicharge());
        for (const auto& s : binary_words(3, k))
            want.add(tau_mp(L, {BinaryWord("00"), BinaryWord("00"), s, BinaryWord("000")}),
                     LaurentPoly::monomial(coinv(s), 1));
        EXPECT_EQ(closed_fock(FaceParams(L, 0, k), 0), want);
    }
}

TEST(ClosedFock, FinalExamplePath) {
    const auto L = two_corner_weight(4, 3, 5);
    EXPECT_EQ(closed_fock(FaceParams(L, 4, 6), 3), eval_path(parse_path("2^3 1^4 2^3"), L.multicharge()));
}

TEST(ClosedFock, RejectsBadU) {
    const auto L = two_corner_weight(4, 2, 3);
    EXPECT_THROW(closed_fock(FaceParams(L, 2, 3), 4), DomainError);
    EXPECT_THROW(closed_fock(FaceParams(L, 2, 1), 2), DomainError);
}

TEST(ClosedFock, AllSmallFacesRankThree) {
    const auto r = sweep_closed_fock(3, 3);
    EXPECT_TRUE(r.passed()) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(ClosedFock, AllSmallFacesRankFive) {
    const auto r = sweep_closed_fock(5, 2);
    EXPECT_TRUE(r.passed()) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(TwoStepShape, Examples) {
    EXPECT_EQ(two_step_shape(2, 3, 1, 2), P("1+2z+3z^2+2z^3+z^4"));
    EXPECT_EQ(two_step_shape(3, 2, 0, 2), gauss_binom(3, 2));
    EXPECT_EQ(two_step_shape(3, 2, 2, 0), LaurentPoly(1));
    EXPECT_THROW(two_step_shape(3, 2, 3, 0), DomainError);
}

TEST(TwoStepShape, MatchesThePathVector) {
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a2 <= 3; ++a2) {
            if (a1 + a2 == 0) continue;
            const auto L = two_corner_weight(4, a1, a2);
            for (int u = 0; u <= a2; ++u)
                for (int j1 = 0; j1 <= a1 + u; ++j1)
                    EXPECT_EQ(shape(eval_path(Path{{2, u}, {1, j1}}, L.multicharge())), two_step_shape(a1, a2, u, j1));
        }
}

TEST(Sectors, WorkedGeneratingFunctions) {
    // Group the terms of G([[2],[1],[1],[1],[]]) by (t, w): t nonempty and w
    // two-box partitions among the 1-corner components.
    const auto ch = example_charge();
    CanonicalBasis cb(ch);
    std::map<std::pair<int, int>, LaurentPoly> h;
    for (const auto& [mu, c] : cb.element(mp(kG3Leader, ch)).vector.terms()) {
        int t = 0, w = 0;
        for (std::size_t k = 0; k < 2; ++k) {
            t += mu[k].empty() ? 0 : 1;
            w += mu[k].size() == 2 ? 1 : 0;
        }
        h[{t, w}] += c;
    }
    EXPECT_EQ(h[std::make_pair(2, 1)], P("1+2z+2z^2+z^3"));
    EXPECT_EQ(h[std::make_pair(2, 0)], P("z^2+z^4"));
    EXPECT_EQ(h[std::make_pair(1, 1)], P("z+3z^2+4z^3+3z^4+z^5"));
    EXPECT_EQ(h[std::make_pair(1, 0)], P("z^3+2z^4+2z^5+z^6"));
}

TEST(Sectors, CanonicalPathShapesArePalindromic) {
    // Paths whose vector is a single canonical basis element have a symmetric shape.
    int single = 0;
    for (int a1 = 1; a1 <= 3; ++a1)
        for (int a2 = 1; a2 <= 3; ++a2) {
            const auto L = two_corner_weight(4, a1, a2);
            CanonicalBasis cb(L.multicharge());
            for (auto [j1, j2] : face_region(a1, a2))
                for (const auto& c : classify_face_mps(FaceParams(L, j1, j2))) {
                    const auto parts = cb.strip(eval_path(c.path, L.multicharge()));
                    if (parts.size() != 1 || parts[0].coef != LaurentPoly(1)) continue;
                    ++single;
                    const auto s = shape(parts[0].element);
                    EXPECT_TRUE(is_palindromic(s)) << to_string(c.path) << " " << to_string_ascending(s, "z");
                }
        }
    EXPECT_GT(single, 0);
}
