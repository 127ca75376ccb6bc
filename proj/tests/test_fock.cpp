#include <gtest/gtest.h>

#include <random>

#include "faces/fock.hpp"
#include "faces/verify.hpp"
#include "support.hpp"

using namespace faces;
using faces::testing::example_charge;
using faces::testing::mp;
using faces::testing::P;
using faces::testing::weight;

namespace {

Multicharge two_ones() { return weight(3, {0, 2, 0}).multicharge(); }

FockVector ket(const std::string& s, const Multicharge& ch, const LaurentPoly& c = LaurentPoly(1)) {
    FockVector x(ch);
    x.add(mp(s, ch), c);
    return x;
}

}  // namespace

TEST(FockVector, ChargeIsChecked) {
    FockVector x(example_charge());
    EXPECT_THROW(x.add(Multipartition(two_ones()), LaurentPoly(1)), DomainError);
}

TEST(FockVector, RenderAndParse) {
    const auto ch = example_charge();
    const auto x = ket("[[],[],[1],[],[]]", ch) + ket("[[],[],[],[1],[]]", ch, P("q")) +
                   ket("[[],[],[],[],[1]]", ch, P("q^4+q^2"));
    const auto s = to_string(x);
    EXPECT_EQ(s, "|[], [], [1], [], []> + q*|[], [], [], [1], []> + (q^4+q^2)*|[], [], [], [], [1]>");
    EXPECT_EQ(parse_fock(s, ch), x);
    EXPECT_EQ(parse_fock("(|[], [], [1], [], []> + q*|[], [], [], [1], []>) + (q^4+q^2)*|[], [], [], [], [1]>", ch), x);
}

TEST(FOperator, Examples) {
    const auto ch = example_charge();
    const auto vac = FockVector::vacuum(ch);
    EXPECT_EQ(f_op(2, vac), ket("[[],[],[1],[],[]]", ch) + ket("[[],[],[],[1],[]]", ch, P("v")) +
                                ket("[[],[],[],[],[1]]", ch, P("v^2")));
    const auto c2 = two_ones();
    const auto v2 = FockVector::vacuum(c2);
    EXPECT_EQ(f_op(1, v2), ket("[[1],[]]", c2) + ket("[[],[1]]", c2, P("v")));
    EXPECT_EQ(f_op(1, f_op(1, v2)), ket("[[1],[1]]", c2, P("v+v^-1")));
}

TEST(EOperator, Examples) {
    const auto c2 = two_ones();
    const auto v2 = FockVector::vacuum(c2);
    EXPECT_TRUE(e_op(1, v2).is_zero());
    EXPECT_EQ(e_op(1, ket("[[1],[]]", c2)), ket("[[],[]]", c2, P("v")));
    // Both terms of f_1|0> come back with v^1: one addable 1-node below, or nothing below and a v from f.
    EXPECT_EQ(e_op(1, f_op(1, v2)).coeff(Multipartition(c2)), P("2v"));
}

TEST(EOperator, AdjointToF) {
    // With both exponents counted away from the node, the entries satisfy
    // <e_i |mu+m>, |mu>> = v^{h_i(mu) - 1} * bar <f_i |mu>, |mu+m>>.
    std::mt19937 rng(4);
    const Multicharge ch(3, {0, 1, 1, 2});
    for (int trial = 0; trial < 60; ++trial) {
        const auto mu = random_multipartition(rng, ch, 6);
        for (int i = 0; i < 3; ++i) {
            const int h = static_cast<int>(addable_nodes(mu, i).size()) -
                          static_cast<int>(removable_nodes(mu, i).size());
            const auto up = f_op(i, FockVector::basis(mu));
            for (const auto& [nu, c] : up.terms()) {
                const auto down = e_op(i, FockVector::basis(nu)).coeff(mu);
                EXPECT_EQ(down, bar(c).shifted(h - 1)) << to_string(mu) << " -> " << to_string(nu);
            }
        }
    }
}

TEST(DiagonalOperators, Examples) {
    const auto c2 = two_ones();
    const auto v2 = FockVector::vacuum(c2);
    EXPECT_EQ(vh_op(1, v2), ket("[[],[]]", c2, P("v^2")));
    EXPECT_EQ(vd_op(v2), v2);
    const Multicharge c0(3, {0, 1});
    EXPECT_EQ(vd_op(ket("[[1,1],[2]]", c0)), ket("[[1,1],[2]]", c0, P("v")));
}

TEST(DiagonalOperators, ExponentIsTheHub) {
    std::mt19937 rng(8);
    const auto L = weight(4, {1, 2, 0, 1});
    for (int trial = 0; trial < 50; ++trial) {
        const auto mu = random_multipartition(rng, L.multicharge(), 7);
        const auto th = hub(WeightPoint(L, content(mu)));
        for (int i = 0; i < 4; ++i) {
            const auto y = vh_op(i, FockVector::basis(mu));
            EXPECT_EQ(y.coeff(mu), LaurentPoly::monomial(th[static_cast<std::size_t>(i)], 1));
        }
    }
}

TEST(DividedPowers, Examples) {
    const auto c2 = two_ones();
    const auto v2 = FockVector::vacuum(c2);
    EXPECT_EQ(divided_f(1, 2, v2), ket("[[1],[1]]", c2));
    EXPECT_EQ(divided_f(1, 0, v2), v2);
    const auto c3 = weight(4, {0, 0, 3, 0}).multicharge();
    EXPECT_EQ(divided_f(2, 3, FockVector::vacuum(c3)), ket("[[1],[1],[1]]", c3));
    EXPECT_THROW(divided_f(1, -1, v2), DomainError);
}

TEST(Path, ParseAndPrint) {
    EXPECT_EQ(parse_path("2^1 1^2 2^2"), (Path{{2, 1}, {1, 2}, {2, 2}}));
    EXPECT_EQ(parse_path("3"), (Path{{3, 1}}));
    EXPECT_EQ(to_string(parse_path("2^1 1^2 2^2")), "2^1 1^2 2^2");
    EXPECT_THROW(parse_path("2^x"), DomainError);
    EXPECT_THROW(parse_path("a"), DomainError);
}

TEST(Path, Evaluation) {
    const auto ch = example_charge();
    EXPECT_EQ(eval_path({}, ch), FockVector::vacuum(ch));
    EXPECT_EQ(eval_path(parse_path("2^1"), ch), f_op(2, FockVector::vacuum(ch)));
    const auto x = eval_path(parse_path("2^1 1^2 2^2"), ch);
    EXPECT_EQ(x, divided_f(2, 2, divided_f(1, 2, f_op(2, FockVector::vacuum(ch)))));
    // The path ends at [[2],[1],[1],[1],[]] in the crystal, but the vector's top term is higher.
    EXPECT_EQ(x.terms().begin()->first, mp("[[2],[2],[1],[],[]]", ch));
    EXPECT_EQ(x.coeff(mp("[[2],[2],[1],[],[]]", ch)), LaurentPoly(1));
    EXPECT_EQ(x.coeff(mp("[[2],[1],[1],[1],[]]", ch)), P("q^2+1"));
    EXPECT_EQ(x.coeff(mp("[[1],[1],[1],[1],[1]]", ch)), P("q^6+q^4+q^2"));
    const auto c = content(mp("[[2],[1],[1],[1],[]]", ch));
    for (const auto& [mu, coef] : x.terms()) EXPECT_EQ(content(mu), c);
}

TEST(Mathas, GeneralizedCoefficientWithRemovableNodes) {
    const auto r = sweep_mathas(300, 21, false);
    EXPECT_TRUE(r.passed()) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(Mathas, LiteralStatementNeedsNoRemovableNodes) {
    // A removable i-node above an addable one lowers the exponent.
    const Multicharge ch(3, {1, 1});
    const auto mu = mp("[[1],[]]", ch);
    const auto y = f_op(1, FockVector::basis(mu));
    EXPECT_EQ(y.coeff(mp("[[1],[1]]", ch)), P("v^-1"));
}
