#pragma once

/**
 * @file closedform.hpp
 * @brief Non-recursive descriptions on the face I0 = {1,2}: the shape
 *        recursion, the classification and count of e-regular
 *        multipartitions, the multipartitions tau(T,W,S,X), and the closed
 *        expansion of F(j1, j2, u) = f_2^(j2-u) f_1^(j1) f_2^(u) |~>.
 *
 * Nothing here calls into canonical.hpp or the Fock operators; those are the
 * oracles these formulas are checked against.
 */

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "faces/errors.hpp"
#include "faces/fock.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"
#include "faces/weights.hpp"

namespace faces {

/// s(a, j, t): coefficient of z^t in the shape of the single-residue element
/// with j nodes among a corners. Zero outside 0 <= t <= j(a-j).
inline long long s_value(int a, int j, int t) {
    if (a < 0 || j < 0 || j > a || t < 0 || t > j * (a - j)) return 0;
    if (a <= 1) return 1;
    static std::map<std::tuple<int, int, int>, long long> memo;
    static std::mutex mu;
    const auto key = std::tuple{a, j, t};
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const long long v = s_value(a - 1, j - 1, t) + s_value(a - 1, j, t - j);
    std::lock_guard lock(mu);
    memo.emplace(key, v);
    return v;
}

/// A content (j1, j2) on the {1,2} face of Lambda (rank e >= 3).
struct FaceParams {
    DominantWeight base;
    int j1 = 0;
    int j2 = 0;

    FaceParams(DominantWeight b, int j1_, int j2_) : base(std::move(b)), j1(j1_), j2(j2_) {
        if (base.e() < 3) throw DomainError("closed forms on the {1,2} face require e >= 3");
        if (!in_face_region(a1(), a2(), j1, j2))
            throw DomainError("content (" + std::to_string(j1) + "," + std::to_string(j2) + ") is outside the face");
    }

    int a1() const { return base[1]; }
    int a2() const { return base[2]; }
    int t() const { return std::min(a1(), j1); }
    int x() const { return std::max(0, j1 - a1()); }
    /// Inclusive w-range of the e-regular multipartitions at this content.
    int w_min() const { return std::max(0, j2 - a2()); }
    int w_max() const { return std::min({t(), j2, a1() + j2 - j1}); }
    std::vector<int> content() const {
        std::vector<int> c(static_cast<std::size_t>(base.e()), 0);
        c[1] = j1;
        c[2] = j2;
        return c;
    }
};

/// Offsets of the 1-corner and 2-corner components in the ascending multicharge.
inline std::size_t first_corner(const DominantWeight& base, int residue) {
    std::size_t k = 0;
    for (int i = 0; i < residue; ++i) k += static_cast<std::size_t>(base[i]);
    return k;
}

/// Multipartition with the given partitions on the 1-corner and 2-corner
/// components and all other components empty.
inline Multipartition face_multipartition(const DominantWeight& base, const std::vector<Partition>& ones,
                                          const std::vector<Partition>& twos) {
    Multicharge ch = base.multicharge();
    std::vector<Partition> comps(ch.level());
    const std::size_t o1 = first_corner(base, 1), o2 = first_corner(base, 2);
    std::copy(ones.begin(), ones.end(), comps.begin() + static_cast<std::ptrdiff_t>(o1));
    std::copy(twos.begin(), twos.end(), comps.begin() + static_cast<std::ptrdiff_t>(o2));
    return Multipartition(std::move(ch), std::move(comps));
}

struct FaceMultipartition {
    int w = 0;            // number of (2) partitions among the 1-corner components
    Multipartition mu;
    int u = 0;            // min(j1 - w, j2 - w)
    Path path;            // 2^u 1^j1 2^(j2-u)
};

/**
 * The e-regular multipartitions at content (j1, j2): t = min(a1, j1),
 * x = max(0, j1 - a1) and one multipartition per w in [w_min, w_max], with
 * 1-corners (2)^w (1)^(t-w) and 2-corners (1,1)^x (1)^(j2-w-x), each reached
 * by the path 2^u 1^j1 2^(j2-u).
 */
inline std::vector<FaceMultipartition> classify_face_mps(const FaceParams& p) {
    std::vector<FaceMultipartition> out;
    const int t = p.t(), x = p.x();
    for (int w = p.w_min(); w <= p.w_max(); ++w) {
        std::vector<Partition> ones(static_cast<std::size_t>(p.a1()));
        std::vector<Partition> twos(static_cast<std::size_t>(p.a2()));
        for (int k = 0; k < w; ++k) ones[static_cast<std::size_t>(k)] = Partition{2};
        for (int k = w; k < t; ++k) ones[static_cast<std::size_t>(k)] = Partition{1};
        for (int k = 0; k < x; ++k) twos[static_cast<std::size_t>(k)] = Partition{1, 1};
        for (int k = x; k < p.j2 - w; ++k) twos[static_cast<std::size_t>(k)] = Partition{1};
        const int u = std::min(p.j1 - w, p.j2 - w);
        out.push_back({w, face_multipartition(p.base, ones, twos), u, Path{{2, u}, {1, p.j1}, {2, p.j2 - u}}});
    }
    return out;
}

/// Number of e-regular multipartitions at (j1, j2) on the {1,2} face.
inline int count_face_mps(int a1, int a2, int j1, int j2) {
    if (!in_face_region(a1, a2, j1, j2)) throw DomainError("count_face_mps: content outside the face");
    const int jb1 = a1 + std::min(a2, j2) - j1;
    const int jb2 = a2 + std::min(a1, j1) - j2;
    if (j2 <= a2) return std::min({j1, j2, a1, jb1}) + 1;
    return std::min({jb2, a2, jb1}) + 1;
}

inline int count_face_mps(const FaceParams& p) { return count_face_mps(p.a1(), p.a2(), p.j1, p.j2); }

/// Binary words choosing 1-corner and 2-corner components: (2) at W,
/// (1) at T - W, (1,1) at X, (1) at S - X.
struct TWSXChoice {
    BinaryWord T, W, S, X;
};

inline Multipartition tau_mp(const DominantWeight& base, const TWSXChoice& c) {
    const auto a1 = static_cast<std::size_t>(base[1]), a2 = static_cast<std::size_t>(base[2]);
    if (c.T.length() != a1 || c.W.length() != a1) throw DomainError("tau_mp: T and W must have length a1");
    if (c.S.length() != a2 || c.X.length() != a2) throw DomainError("tau_mp: S and X must have length a2");
    if (!c.W.subset_of(c.T)) throw DomainError("tau_mp: W must be contained in T");
    if (!c.X.subset_of(c.S)) throw DomainError("tau_mp: X must be contained in S");
    std::vector<Partition> ones(a1), twos(a2);
    for (std::size_t k = 0; k < a1; ++k) {
        if (c.W[k]) ones[k] = Partition{2};
        else if (c.T[k]) ones[k] = Partition{1};
    }
    for (std::size_t k = 0; k < a2; ++k) {
        if (c.X[k]) twos[k] = Partition{1, 1};
        else if (c.S[k]) twos[k] = Partition{1};
    }
    return face_multipartition(base, ones, twos);
}

/**
 * Closed expansion of F(j1, j2, u): the sum over admissible (T, W, S, X) of
 *   v^{E(T,W)} * sum_{X in U in S, #1(U) = u} v^{E(S,U,X)} |tau(T,W,S,X)>
 * with E(T,W) = Inv(T) + Inv(W,T) + (a1-t)(j1-t) + (t-w)(j2-u-w) and
 * E(S,U,X) = Inv(U) + Inv(X,U) + Inv(S,U,X). Words index components top to
 * bottom, so Inv of a single word counts a 0 above a 1 (coinv).
 */
inline FockVector closed_fock(const FaceParams& p, int u) {
    const int a1 = p.a1(), a2 = p.a2(), j1 = p.j1, j2 = p.j2;
    if (u < 0 || u > std::min(a2, j2)) throw DomainError("closed_fock: need 0 <= u <= min(a2, j2)");
    FockVector out(p.base.multicharge());
    for (int t = std::max(0, j1 - u); t <= std::min(a1, j1); ++t) {
        const int x = j1 - t;
        const int ex = (a1 - t) * (j1 - t);
        for (int w = std::max(0, j2 - a2); w <= std::min(t, j2 - u); ++w) {
            const int es = (t - w) * (j2 - u - w);
            for (const auto& T : binary_words(a1, t)) {
                for (const auto& W : sub_words(T, w)) {
                    const int etw = coinv(T) + inv_rel(W, T) + ex + es;
                    for (const auto& S : binary_words(a2, j2 - w)) {
                        for (const auto& X : sub_words(S, x)) {
                            LaurentPoly inner;
                            // U ranges over words between X and S with u ones:
                            // X plus u - x of the positions of S - X.
                            for (const auto& extra : sub_words(S.minus(X), u - x)) {
                                std::vector<std::uint8_t> bits(X.bits());
                                for (std::size_t k = 0; k < bits.size(); ++k) bits[k] |= extra.bits()[k];
                                const BinaryWord U(std::move(bits));
                                inner.add_term(coinv(U) + inv_rel(X, U) + inv_excl(S, U, X), 1);
                            }
                            if (inner.is_zero()) continue;
                            out.add(tau_mp(p.base, {T, W, S, X}), inner.shifted(etw));
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// Shape after the subpath 2^u 1^j1: (a2 choose u)_z * (a1 + u choose j1)_z.
inline LaurentPoly two_step_shape(int a1, int a2, int u, int j1) {
    if (u < 0 || u > a2) throw DomainError("two_step_shape: need 0 <= u <= a2");
    if (j1 < 0 || j1 > a1 + u) throw DomainError("two_step_shape: need 0 <= j1 <= a1 + u");
    return gauss_binom(a2, u) * gauss_binom(a1 + u, j1);
}

}  // namespace faces
