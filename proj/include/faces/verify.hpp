#pragma once

/**
 * @file verify.hpp
 * @brief Parameter sweeps comparing closed forms with brute force. Shared by
 *        the `verify` subcommand and the acceptance tests.
 */

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "faces/canonical.hpp"
#include "faces/closedform.hpp"
#include "faces/crystal.hpp"
#include "faces/fock.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"
#include "faces/weights.hpp"

namespace faces {

struct SweepReport {
    explicit SweepReport(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;  // first few failures

    bool passed() const { return cases > 0 && failures == 0; }

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        if (messages.size() < 5) messages.push_back(what);
    }
    void merge(const SweepReport& other) {
        cases += other.cases;
        failures += other.failures;
        for (const auto& m : other.messages)
            if (messages.size() < 5) messages.push_back(m);
    }
};

/// Lambda = a1 Lambda_1 + a2 Lambda_2 (and nothing else) at rank e.
inline DominantWeight two_corner_weight(int e, int a1, int a2) {
    IntVec a(static_cast<std::size_t>(e), 0);
    a[1] = a1;
    a[2] = a2;
    return DominantWeight(e, a);
}

/// All lattice points of the {1,2} face region.
inline std::vector<std::pair<int, int>> face_region(int a1, int a2) {
    std::vector<std::pair<int, int>> pts;
    for (int j1 = 0; j1 <= a1 + a2; ++j1)
        for (int j2 = 0; j2 <= a1 + a2; ++j2)
            if (in_face_region(a1, a2, j1, j2)) pts.emplace_back(j1, j2);
    return pts;
}

inline Multipartition apply_tilde_path(const Path& path, const Multicharge& charge) {
    Multipartition mu(charge);
    for (const auto& step : path)
        for (int k = 0; k < step.multiplicity; ++k) {
            auto nu = f_tilde(mu, step.residue);
            if (!nu) throw DomainError("f~_" + std::to_string(step.residue) + " is undefined along " + to_string(path));
            mu = std::move(*nu);
        }
    return mu;
}

/// closed_fock(j1, j2, u) == eval_path(2^u 1^j1 2^(j2-u)) for all a1, a2 <= max_a.
inline SweepReport sweep_closed_fock(int e, int max_a) {
    SweepReport r("closed-fock");
    for (int a1 = 0; a1 <= max_a; ++a1)
        for (int a2 = 0; a2 <= max_a; ++a2) {
            if (a1 + a2 == 0) continue;
            const auto base = two_corner_weight(e, a1, a2);
            for (auto [j1, j2] : face_region(a1, a2)) {
                const FaceParams p(base, j1, j2);
                for (int u = 0; u <= std::min(a2, j2); ++u) {
                    const Path path{{2, u}, {1, j1}, {2, j2 - u}};
                    const bool ok = closed_fock(p, u) == eval_path(path, base.multicharge());
                    std::ostringstream os;
                    os << "e=" << e << " a=(" << a1 << "," << a2 << ") j=(" << j1 << "," << j2 << ") u=" << u;
                    r.check(ok, os.str());
                }
            }
        }
    return r;
}

/**
 * On every {1,2} face with a1, a2 <= max_a: the vertex set is the region,
 * vertex counts match count_face_mps, each classified mu_w is one of the BFS
 * multipartitions at its vertex and is reached by f~ along p(u).
 */
inline SweepReport sweep_counts(int e, int max_a) {
    SweepReport r("counts");
    for (int a1 = 0; a1 <= max_a; ++a1)
        for (int a2 = 0; a2 <= max_a; ++a2) {
            if (a1 + a2 == 0) continue;
            const auto base = two_corner_weight(e, a1, a2);
            const auto g = face(FaceSpec(base, 1, 2), true);
            const auto region = face_region(a1, a2);
            const std::string tag = "e=" + std::to_string(e) + " a=(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
            r.check(g.vertices().size() == region.size(), tag + ": vertex count differs from the region");
            for (auto [j1, j2] : region) {
                const std::string at = tag + " j=(" + std::to_string(j1) + "," + std::to_string(j2) + ")";
                const FaceParams p(base, j1, j2);
                auto idx = g.find(p.content());
                if (!idx) {
                    r.check(false, at + ": missing vertex");
                    continue;
                }
                const auto& v = g.vertices()[*idx];
                r.check(static_cast<int>(v.count) == count_face_mps(p), at + ": count " + std::to_string(v.count));
                const auto cls = classify_face_mps(p);
                r.check(static_cast<int>(cls.size()) == count_face_mps(p), at + ": classification size");
                for (const auto& c : cls) {
                    const bool listed =
                        std::find(v.multipartitions.begin(), v.multipartitions.end(), c.mu) != v.multipartitions.end();
                    r.check(listed && is_e_regular(c.mu), at + ": " + to_string(c.mu) + " not found by BFS");
                    r.check(apply_tilde_path(c.path, base.multicharge()) == c.mu,
                            at + ": path " + to_string(c.path) + " misses " + to_string(c.mu));
                }
            }
        }
    return r;
}

/**
 * tau on one face: maps vertices to vertices, is an involution, swaps Lambda
 * and rho, preserves defect and multiplicity, and reverses edges with the
 * interval reflected; rho_degree is the BFS maximal degree.
 */
inline SweepReport sweep_tau_face(const FaceSpec& spec) {
    SweepReport r("tau");
    const auto g = face(spec);
    std::ostringstream tagos;
    tagos << "e=" << spec.e() << " lambda=" << hub_string(spec.base().a()) << " start=" << spec.start()
          << " t=" << spec.length();
    const std::string tag = tagos.str();
    const int t = spec.length();
    std::vector<std::size_t> image(g.vertices().size());
    for (std::size_t k = 0; k < g.vertices().size(); ++k) {
        const auto& v = g.vertices()[k];
        const WeightPoint p(spec.base(), v.content);
        const WeightPoint q = tau(spec, p);
        auto idx = g.find(q.content);
        if (!idx) {
            r.check(false, tag + ": tau" + hub_string(v.hub) + " is not a vertex");
            continue;
        }
        image[k] = *idx;
        const auto& w = g.vertices()[*idx];
        r.check(w.defect == v.defect, tag + ": defect changes at " + hub_string(v.hub));
        r.check(w.count == v.count, tag + ": multiplicity changes at " + hub_string(v.hub));
        r.check(tau(spec, q).content == v.content, tag + ": tau is not an involution at " + hub_string(v.hub));
    }
    if (r.failures > 0) return r;
    const IntVec zero(static_cast<std::size_t>(spec.e()), 0);
    const auto& rho = g.vertices()[image[*g.find(zero)]];
    r.check(rho.hub == rho_hub(spec), tag + ": tau(Lambda) = " + hub_string(rho.hub));
    r.check(rho.degree == g.max_degree() && rho_degree(spec) == g.max_degree(),
            tag + ": rho degree " + std::to_string(rho_degree(spec)) + " vs BFS " + std::to_string(g.max_degree()));
    for (const auto& ed : g.edges()) {
        int j = 0;
        while (spec.original(j) != ed.residue) ++j;
        const int reflected = spec.original(t + 1 - j);
        r.check(g.has_edge(image[ed.to], image[ed.from], reflected),
                tag + ": edge " + hub_string(g.vertices()[ed.from].hub) + " -" + std::to_string(ed.residue) + "-> " +
                    hub_string(g.vertices()[ed.to].hub) + " has no reflected partner");
    }
    return r;
}

/// Faces starting at 1 with t <= max_t, e in [t+1, max_e], a_j <= max_a on the
/// interval and a_0, a_{t+1} in {0, 1, 2}.
inline SweepReport sweep_tau(int max_t, int max_e, int max_a) {
    SweepReport r("tau");
    for (int t = 1; t <= max_t; ++t)
        for (int e = std::max(3, t + 1); e <= max_e; ++e) {
            const int n_inner = t;
            int total = 1;
            for (int k = 0; k < n_inner; ++k) total *= max_a + 1;
            for (int code = 0; code < total; ++code)
                for (int a0 = 0; a0 <= 2; ++a0)
                    for (int at1 = 0; at1 <= 2; ++at1) {
                        if (mod(t + 1, e) == 0 && at1 != a0) continue;
                        IntVec a(static_cast<std::size_t>(e), 0);
                        a[0] = a0;
                        a[static_cast<std::size_t>(mod(t + 1, e))] = at1;
                        int c = code;
                        for (int k = 1; k <= t; ++k) {
                            a[static_cast<std::size_t>(k)] = c % (max_a + 1);
                            c /= max_a + 1;
                        }
                        if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) continue;
                        r.merge(sweep_tau_face(FaceSpec(DominantWeight(e, a), 1, t)));
                    }
        }
    return r;
}

/// Single-residue faces: shape(G) = (a choose j)_z = sum over B(a,j) of z^inv.
inline SweepReport sweep_shapes(int max_a, int e = 4) {
    SweepReport r("shapes");
    for (int a = 1; a <= max_a; ++a) {
        IntVec coeffs(static_cast<std::size_t>(e), 0);
        coeffs[1] = a;
        const DominantWeight base(e, coeffs);
        CanonicalBasis cb(base.multicharge());
        for (int j = 0; j <= a; ++j) {
            const auto mu = apply_tilde_path(Path{{1, j}}, base.multicharge());
            LaurentPoly by_words;
            for (const auto& s : binary_words(a, j)) by_words.add_term(inv(s), 1);
            const auto gb = gauss_binom(a, j);
            const std::string tag = "a=" + std::to_string(a) + " j=" + std::to_string(j);
            r.check(cb.element(mu).shape == gb, tag + ": shape " + to_string_ascending(cb.element(mu).shape, "z"));
            r.check(by_words == gb, tag + ": inversion count");
            for (int k = 0; k <= j * (a - j); ++k)
                r.check(s_value(a, j, k) == gb.coeff(k), tag + ": s_value at " + std::to_string(k));
        }
    }
    return r;
}

/**
 * Random instances of the coefficient of mu + (t chosen addable i-nodes) in
 * f_i^t |mu>. Each added node picks up v^(unchosen addable above - removable
 * above), times [t]!. When mu has no removable i-nodes the exponent is the
 * number of (unchosen, chosen) pairs read top to bottom, i.e. coinv(S).
 */
struct MathasInstance {
    Multipartition mu;
    int residue = 0;
    BinaryWord choice;  // over addable i-nodes, top to bottom
};

inline Multipartition random_multipartition(std::mt19937& rng, const Multicharge& charge, int max_nodes) {
    Multipartition mu(charge);
    std::uniform_int_distribution<int> size_dist(0, max_nodes);
    const int n = size_dist(rng);
    for (int k = 0; k < n; ++k) {
        const auto spots = addable_nodes(mu);
        std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
        mu = mu.with_added(spots[pick(rng)]);
    }
    return mu;
}

inline LaurentPoly mathas_expected(const MathasInstance& m, bool literal) {
    const auto add = addable_nodes(m.mu, m.residue);
    const int t = static_cast<int>(m.choice.ones());
    int exponent = literal ? coinv(m.choice) : 0;
    if (!literal) {
        const auto rem = removable_nodes(m.mu, m.residue);
        for (std::size_t k = 0; k < add.size(); ++k) {
            if (!m.choice[k]) continue;
            for (std::size_t l = 0; l < k; ++l)
                if (!m.choice[l]) ++exponent;
            for (const auto& n : rem)
                if (above(n, add[k])) --exponent;
        }
    }
    return quantum_factorial(t).shifted(exponent);
}

inline Multipartition mathas_target(const MathasInstance& m) {
    const auto add = addable_nodes(m.mu, m.residue);
    Multipartition la = m.mu;
    for (std::size_t k = 0; k < add.size(); ++k)
        if (m.choice[k]) la = la.with_added(add[k]);
    return la;
}

/// `literal`: only sample mu without removable i-nodes and compare with v^coinv(S)[t]!.
inline SweepReport sweep_mathas(std::size_t samples, unsigned seed, bool literal = true) {
    SweepReport r(literal ? "mathas" : "mathas-general");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> e_dist(2, 5), level_dist(1, 5);
    std::size_t drawn = 0;
    while (drawn < samples) {
        const int e = e_dist(rng);
        std::vector<int> res;
        std::uniform_int_distribution<int> res_dist(0, e - 1);
        const int level = level_dist(rng);
        for (int k = 0; k < level; ++k) res.push_back(res_dist(rng));
        std::sort(res.begin(), res.end());
        const Multicharge charge(e, res);
        const auto mu = random_multipartition(rng, charge, 8);
        const int i = res_dist(rng);
        const auto add = addable_nodes(mu, i);
        if (add.empty()) continue;
        if (literal && !removable_nodes(mu, i).empty()) continue;
        std::uniform_int_distribution<int> t_dist(1, std::min<int>(4, static_cast<int>(add.size())));
        const int t = t_dist(rng);
        std::vector<std::uint8_t> bits(add.size(), 0);
        std::fill(bits.begin(), bits.begin() + t, std::uint8_t{1});
        std::shuffle(bits.begin(), bits.end(), rng);
        const MathasInstance m{mu, i, BinaryWord(bits)};
        FockVector x = FockVector::basis(mu);
        for (int k = 0; k < t; ++k) x = f_op(i, x);
        const auto got = x.coeff(mathas_target(m));
        const auto want = mathas_expected(m, literal);
        r.check(got == want, to_string(mu) + " i=" + std::to_string(i) + " S=" + m.choice.str() + ": got " +
                                 to_string(got) + ", expected " + to_string(want));
        ++drawn;
    }
    return r;
}

}  // namespace faces
