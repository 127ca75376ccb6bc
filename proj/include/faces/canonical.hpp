#pragma once

/**
 * @file canonical.hpp
 * @brief Canonical basis elements G(mu) by the recursive (LLT-style)
 *        algorithm, stripping of bar-invariant vectors, shapes and wedges.
 *
 * A CanonicalBasis instance memoizes G(mu) for one multicharge. It is not
 * internally synchronized; share results, not the engine, across threads.
 */

#include <map>
#include <set>
#include <string>
#include <vector>

#include "faces/errors.hpp"
#include "faces/fock.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"

namespace faces {

struct CanonicalElement {
    Multipartition leader;
    FockVector vector;
    LaurentPoly shape;  // in z
};

/// Substitute 1 for every basis element and z for v. Negative exponents are
/// a DomainError: shapes only exist for vectors in Z[v].
inline LaurentPoly shape(const FockVector& x) {
    LaurentPoly s;
    for (const auto& [mu, c] : x.terms()) {
        if (!c.is_zero() && c.min_exponent() < 0)
            throw DomainError("shape undefined: coefficient " + to_string(c) + " has negative exponents");
        s += c;
    }
    return s;
}

inline const LaurentPoly& shape(const CanonicalElement& g) { return g.shape; }

struct StripTerm {
    LaurentPoly coef;
    CanonicalElement element;
};

class CanonicalBasis {
public:
    explicit CanonicalBasis(Multicharge charge) : charge_(std::move(charge)) {}

    const Multicharge& charge() const noexcept { return charge_; }

    /**
     * First approximation A(mu): peel the longest good-node string of the
     * smallest residue i that has one, recurse, then apply f_i^{(k)}.
     * The coefficient of |mu> must come out as exactly 1.
     */
    FockVector monomial_for(const Multipartition& mu) const {
        check_charge(mu);
        if (mu.empty()) return FockVector::vacuum(charge_);
        for (int i = 0; i < mu.e(); ++i) {
            const int k = epsilon(mu, i);
            if (k == 0) continue;
            Multipartition nu = mu;
            for (int s = 0; s < k; ++s) nu = *e_tilde(nu, i);
            FockVector a = divided_f(i, k, monomial_for(nu));
            if (a.coeff(mu) != LaurentPoly(1))
                throw IntegrityError("leading coefficient of A(" + to_string(mu) + ") is " + to_string(a.coeff(mu)));
            return a;
        }
        throw DomainError(to_string(mu) + " is not e-regular");
    }

    /// G(mu). Throws DomainError when mu is not e-regular.
    const CanonicalElement& element(const Multipartition& mu) {
        check_charge(mu);
        if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
        auto peeled = peel(mu);
        if (!peeled.regular)
            throw DomainError(to_string(mu) + " is not e-regular: peeling good nodes stops at " +
                              to_string(peeled.stuck_at));

        if (!in_progress_.insert(mu).second)
            throw IntegrityError("canonical basis recursion for " + to_string(mu) + " is cyclic");
        struct Done {
            std::set<Multipartition>& s;
            const Multipartition& m;
            ~Done() { s.erase(m); }
        } done{in_progress_, mu};
        FockVector x = seed_for(mu);
        std::set<Multipartition> seen;
        for (const auto& [la, c] : x.terms()) seen.insert(la);
        std::size_t iterations = 0;
        while (true) {
            // Terms iterate in descending lexicographic order, so the first
            // offender is dominance-maximal among offenders.
            const Multipartition* offender = nullptr;
            LaurentPoly beta;
            for (const auto& [la, c] : x.terms()) {
                if (la == mu) continue;
                auto [b, rest] = bar_symmetric_part(c);
                if (!b.is_zero()) {
                    offender = &la;
                    beta = std::move(b);
                    break;
                }
            }
            if (offender == nullptr) break;
            if (++iterations > seen.size())
                throw IntegrityError("canonical basis recursion for " + to_string(mu) + " did not terminate");
            const Multipartition la = *offender;
            if (!is_e_regular(la))
                throw IntegrityError("offender " + to_string(la) + " in G(" + to_string(mu) + ") is not e-regular");
            const FockVector& g = element(la).vector;
            x -= beta * g;
            for (const auto& [nu, c] : g.terms()) seen.insert(nu);
        }
        check_invariants(mu, x);
        CanonicalElement ce{mu, x, shape(x)};
        return memo_.emplace(mu, std::move(ce)).first->second;
    }

    /**
     * Greedy decomposition of a bar-invariant vector into canonical basis
     * elements: repeatedly take the dominance-maximal term, whose coefficient
     * must be bar-symmetric, and subtract coef * G(leader).
     */
    std::vector<StripTerm> strip(FockVector x) {
        std::vector<StripTerm> out;
        std::size_t bound = 1;
        std::set<Multipartition> seen;
        for (const auto& [la, c] : x.terms()) seen.insert(la);
        bound = seen.size();
        while (!x.is_zero()) {
            if (out.size() >= bound) throw IntegrityError("strip did not terminate");
            const auto& [la, c] = *x.terms().begin();
            if (!is_bar_symmetric(c))
                throw IntegrityError("coefficient " + to_string(c) + " of leading term " + to_string(la) +
                                     " is not bar-symmetric");
            if (!is_e_regular(la)) throw IntegrityError("leading term " + to_string(la) + " is not e-regular");
            const LaurentPoly coef = c;
            const CanonicalElement& g = element(la);
            out.push_back({coef, g});
            x -= coef * g.vector;
        }
        return out;
    }

    const std::map<Multipartition, CanonicalElement>& memo() const noexcept { return memo_; }

    /// Seed the memo (e.g. from a cache file). The element is re-validated.
    void insert(const CanonicalElement& g) {
        check_charge(g.leader);
        check_invariants(g.leader, g.vector);
        memo_.insert_or_assign(g.leader, CanonicalElement{g.leader, g.vector, shape(g.vector)});
    }

private:
    /**
     * Same residue choice as monomial_for, but f_i^{(k)} acts on G(nu) rather
     * than on A(nu). Lower terms of A(nu) can also reach mu and spoil the
     * leading coefficient (e = 3, charge (0,1,1), mu = ([2,1],[1],[1])).
     * The seed is bar-invariant and congruent to |mu> modulo canonical basis
     * elements with other leaders, some of which may dominate mu; element()
     * removes those, after which the coefficient of |mu> is 1.
     */
    FockVector seed_for(const Multipartition& mu) {
        if (mu.empty()) return FockVector::vacuum(charge_);
        for (int i = 0; i < mu.e(); ++i) {
            const int k = epsilon(mu, i);
            if (k == 0) continue;
            Multipartition nu = mu;
            for (int s = 0; s < k; ++s) nu = *e_tilde(nu, i);
            return divided_f(i, k, element(nu).vector);
        }
        throw DomainError(to_string(mu) + " is not e-regular");
    }

    void check_charge(const Multipartition& mu) const {
        if (mu.charge() != charge_) throw DomainError("multipartition has a different multicharge");
    }

    static void check_invariants(const Multipartition& mu, const FockVector& x) {
        if (x.coeff(mu) != LaurentPoly(1))
            throw IntegrityError("G(" + to_string(mu) + ") has leading coefficient " + to_string(x.coeff(mu)));
        const auto c_mu = content(mu);
        for (const auto& [la, c] : x.terms()) {
            if (la == mu) continue;
            if (c.min_exponent() < 1)
                throw IntegrityError("G(" + to_string(mu) + ") coefficient " + to_string(c) + " of " + to_string(la) +
                                     " is not in vZ[v]");
            if (!dominance_geq(mu, la))
                throw IntegrityError("G(" + to_string(mu) + ") contains " + to_string(la) + " not dominated by its leader");
            if (content(la) != c_mu) throw IntegrityError("G(" + to_string(mu) + ") is not homogeneous");
        }
    }

    Multicharge charge_;
    std::map<Multipartition, CanonicalElement> memo_;
    std::set<Multipartition> in_progress_;
};

// ---------------------------------------------------------------------------
// Wedge of elements with disjoint, non-adjacent support

/// Residues of the nodes of every term.
inline std::set<int> support(const FockVector& x) {
    std::set<int> s;
    for (const auto& [mu, c] : x.terms()) {
        auto cont = content(mu);
        for (std::size_t i = 0; i < cont.size(); ++i)
            if (cont[i] > 0) s.insert(static_cast<int>(i));
    }
    return s;
}

/// mu on its nonempty components, nu on the rest.
inline Multipartition wedge(const Multipartition& mu, const Multipartition& nu) {
    if (mu.charge() != nu.charge()) throw DomainError("wedge requires equal multicharges");
    std::vector<Partition> comps;
    for (std::size_t k = 0; k < mu.level(); ++k) {
        if (!mu[k].empty() && !nu[k].empty()) throw DomainError("wedge: both multipartitions occupy component " + std::to_string(k));
        comps.push_back(mu[k].empty() ? nu[k] : mu[k]);
    }
    return Multipartition(mu.charge(), std::move(comps));
}

inline CanonicalElement wedge(const CanonicalElement& g1, const CanonicalElement& g2) {
    const int e = g1.leader.e();
    const auto s1 = support(g1.vector), s2 = support(g2.vector);
    for (int i : s1)
        for (int k : s2)
            if (i == k || mod(i - k, e) == 1 || mod(k - i, e) == 1)
                throw DomainError("wedge: supports share or neighbour residues " + std::to_string(i) + " and " +
                                  std::to_string(k));
    FockVector x(g1.vector.charge());
    for (const auto& [m1, c1] : g1.vector.terms())
        for (const auto& [m2, c2] : g2.vector.terms()) x.add(wedge(m1, m2), c1 * c2);
    return {wedge(g1.leader, g2.leader), x, g1.shape * g2.shape};
}

}  // namespace faces
