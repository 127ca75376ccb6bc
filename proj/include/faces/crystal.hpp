#pragma once

/**
 * @file crystal.hpp
 * @brief The block-reduced crystal: vertices are weights (keyed by content),
 *        edges record which residues connect them. Faces are the subgraphs
 *        generated from Lambda by f_i for i in a proper cyclic interval.
 */

#include <climits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "faces/errors.hpp"
#include "faces/partitions.hpp"
#include "faces/weights.hpp"

namespace faces {

/// The interval {start, start+1, ..., start+length-1} (mod e) of a face.
class FaceSpec {
public:
    FaceSpec(DominantWeight base, int start, int length) : base_(std::move(base)), start_(start), length_(length) {
        if (length_ < 1 || length_ >= base_.e())
            throw DomainError("face interval must be a nonempty proper subinterval of Z/" + std::to_string(base_.e()));
        start_ = mod(start_, base_.e());
    }

    /// From an explicit residue list, which must be a cyclic run i, i+1, ...
    static FaceSpec from_interval(DominantWeight base, const std::vector<int>& interval) {
        if (interval.empty()) throw DomainError("face interval must be nonempty");
        const int e = base.e();
        for (std::size_t k = 1; k < interval.size(); ++k)
            if (mod(interval[k] - interval[k - 1], e) != 1)
                throw DomainError("face interval must be consecutive residues");
        return FaceSpec(std::move(base), interval.front(), static_cast<int>(interval.size()));
    }

    const DominantWeight& base() const noexcept { return base_; }
    int e() const noexcept { return base_.e(); }
    int start() const noexcept { return start_; }
    int length() const noexcept { return length_; }

    std::vector<int> interval() const {
        std::vector<int> r;
        for (int k = 0; k < length_; ++k) r.push_back(mod(start_ + k, e()));
        return r;
    }
    bool contains(int i) const { return mod(i - start_, e()) < length_; }

    /// Original index of position j in the renumbering that maps start to 1.
    int original(int j) const { return mod(start_ - 1 + j, e()); }

    /// r' = sum of a_j over the interval.
    int local_level() const {
        int r = 0;
        for (int i : interval()) r += base_[i];
        return r;
    }

private:
    DominantWeight base_;
    int start_;
    int length_;
};

struct CrystalVertex {
    IntVec content;
    IntVec hub;
    int defect = 0;
    int degree = 0;
    std::size_t count = 0;                       // e-regular multipartitions at this weight
    std::vector<Multipartition> multipartitions;  // only when requested
};

struct CrystalEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int residue = 0;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

class CrystalGraph {
public:
    CrystalGraph() = default;
    CrystalGraph(DominantWeight base, std::optional<std::vector<int>> interval)
        : base_(std::move(base)), interval_(std::move(interval)) {}

    const DominantWeight& base() const noexcept { return base_; }
    const std::optional<std::vector<int>>& interval() const noexcept { return interval_; }
    const std::vector<CrystalVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }

    std::optional<std::size_t> find(const IntVec& content) const {
        auto it = index_.find(content);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    const CrystalVertex& vertex(const IntVec& content) const {
        auto idx = find(content);
        if (!idx) throw DomainError("no vertex with content " + content_string(content));
        return vertices_[*idx];
    }
    bool has_edge(std::size_t from, std::size_t to, int residue) const {
        return edge_set_.count({from, to, residue}) > 0;
    }
    int max_degree() const {
        int d = 0;
        for (const auto& v : vertices_) d = std::max(d, v.degree);
        return d;
    }

    /// Rebuild a graph from stored vertices and edges (used by deserialization).
    static CrystalGraph assemble(DominantWeight base, std::optional<std::vector<int>> interval,
                                 std::vector<CrystalVertex> vertices, const std::vector<CrystalEdge>& edges) {
        CrystalGraph g(std::move(base), std::move(interval));
        for (auto& v : vertices) {
            if (!g.index_.emplace(v.content, g.vertices_.size()).second)
                throw DomainError("duplicate vertex " + content_string(v.content));
            g.vertices_.push_back(std::move(v));
        }
        for (const auto& ed : edges) {
            if (ed.from >= g.vertices_.size() || ed.to >= g.vertices_.size())
                throw DomainError("edge refers to a missing vertex");
            g.add_edge(ed.from, ed.to, ed.residue);
        }
        return g;
    }

private:
    friend CrystalGraph build_crystal(const DominantWeight&, int, const std::optional<std::vector<int>>&, bool);

    std::size_t intern(const IntVec& content) {
        auto [it, inserted] = index_.try_emplace(content, vertices_.size());
        if (inserted) {
            WeightPoint p(base_, content);
            CrystalVertex v;
            v.content = content;
            v.hub = hub(p);
            v.defect = defect(p);
            v.degree = p.degree();
            vertices_.push_back(std::move(v));
        }
        return it->second;
    }
    void add_edge(std::size_t from, std::size_t to, int residue) {
        if (edge_set_.insert({from, to, residue}).second) edges_.push_back({from, to, residue});
    }

    DominantWeight base_;
    std::optional<std::vector<int>> interval_;
    std::vector<CrystalVertex> vertices_;
    std::vector<CrystalEdge> edges_;
    std::map<IntVec, std::size_t> index_;
    std::set<CrystalEdge> edge_set_;
};

/**
 * Breadth-first search from the empty multipartition using f~_i for i in
 * `restrict_to` (all residues when absent), up to `max_degree` nodes.
 * Multipartitions of equal content share one vertex.
 */
inline CrystalGraph build_crystal(const DominantWeight& base, int max_degree,
                                  const std::optional<std::vector<int>>& restrict_to = std::nullopt,
                                  bool keep_multipartitions = false) {
    if (max_degree < 0) throw DomainError("degree bound must be nonnegative");
    std::vector<int> residues;
    if (restrict_to) {
        for (int i : *restrict_to) residues.push_back(mod(i, base.e()));
    } else {
        for (int i = 0; i < base.e(); ++i) residues.push_back(i);
    }

    CrystalGraph g(base, restrict_to);
    const Multipartition empty(base.multicharge());
    std::set<Multipartition> frontier{empty};
    {
        auto root = g.intern(content(empty));
        g.vertices_[root].count = 1;
        if (keep_multipartitions) g.vertices_[root].multipartitions.push_back(empty);
    }
    for (int d = 0; d < max_degree && !frontier.empty(); ++d) {
        std::set<Multipartition> next;
        for (const auto& mu : frontier) {
            const auto from = *g.find(content(mu));
            for (int i : residues) {
                auto nu = f_tilde(mu, i);
                if (!nu) continue;
                const auto to = g.intern(content(*nu));
                g.add_edge(from, to, i);
                if (next.insert(*nu).second) {
                    ++g.vertices_[to].count;
                    if (keep_multipartitions) g.vertices_[to].multipartitions.push_back(*nu);
                }
            }
        }
        frontier = std::move(next);
    }
    return g;
}

inline CrystalGraph face(const FaceSpec& spec, bool keep_multipartitions = false) {
    return build_crystal(spec.base(), INT_MAX, spec.interval(), keep_multipartitions);
}

// ---------------------------------------------------------------------------
// rho, its degree, and the involution tau

/// Hub of the lowest vertex rho of the face. In the renumbering start -> 1:
/// [a0 + r', -a_t, ..., -a_1, a_{t+1} + r', a_{t+2}, ...]; when e = t + 1 the
/// 0 and t+1 components coincide and both shifts land there.
inline IntVec rho_hub(const FaceSpec& spec) {
    const int e = spec.e(), t = spec.length(), rp = spec.local_level();
    const auto& a = spec.base();
    IntVec h(static_cast<std::size_t>(e));
    for (int j = 0; j < e; ++j) h[static_cast<std::size_t>(spec.original(j))] = a[spec.original(j)];
    h[static_cast<std::size_t>(spec.original(0))] += rp;
    h[static_cast<std::size_t>(spec.original(t + 1))] += rp;
    for (int k = 1; k <= t; ++k) h[static_cast<std::size_t>(spec.original(k))] = -a[spec.original(t + 1 - k)];
    return h;
}

/// Degree of rho, i.e. the length of the longest element of the finite Weyl
/// group weighted by the local coefficients.
inline int rho_degree(const FaceSpec& spec) {
    const int t = spec.length();
    auto a = [&](int k) { return spec.base()[spec.original(k)]; };
    int d = 0;
    for (int k = 1; 2 * k <= t; ++k) d += (a(k) + a(t + 1 - k)) * k * (t + 1 - k);
    if (t % 2 == 1) {
        const int c = (t + 1) / 2;
        d += a(c) * c * c;
    }
    return d;
}

/// Content (supported on the interval) of the face weight with the given hub,
/// by inverting the finite A_t Cartan matrix on the interval components.
/// Returns nullopt when the hub does not come from a nonnegative integral content.
inline std::optional<IntVec> face_content_from_hub(const FaceSpec& spec, const IntVec& h) {
    const int e = spec.e(), t = spec.length();
    IntVec c(static_cast<std::size_t>(e), 0);
    for (int j = 1; j <= t; ++j) {
        long long num = 0;
        for (int k = 1; k <= t; ++k) {
            const int idx = spec.original(k);
            const long long diff = spec.base()[idx] - h[static_cast<std::size_t>(idx)];
            num += static_cast<long long>(std::min(j, k)) * (t + 1 - std::max(j, k)) * diff;
        }
        if (num % (t + 1) != 0 || num < 0) return std::nullopt;
        c[static_cast<std::size_t>(spec.original(j))] = static_cast<int>(num / (t + 1));
    }
    return c;
}

/**
 * The defect-preserving involution of a face. On hubs, in the renumbering
 * start -> 1: [b0, b1, ..., bt, b_{t+1}, tail] maps to
 * [a0 + r' - (b_{t+1} - a_{t+1}), -bt, ..., -b1, a_{t+1} + r' - (b0 - a0), tail].
 * The image is reconstructed from its interval components; for e >= t + 2 the
 * full image hub is checked against the formula.
 */
inline WeightPoint tau(const FaceSpec& spec, const WeightPoint& p) {
    const int e = spec.e(), t = spec.length(), rp = spec.local_level();
    if (!(p.base == spec.base())) throw DomainError("tau: weight belongs to a different Lambda");
    if (p.delta_shift != 0) throw DomainError("tau: face weights have no delta component");
    for (int i = 0; i < e; ++i)
        if (!spec.contains(i) && p.content[static_cast<std::size_t>(i)] != 0)
            throw DomainError("tau: content is not supported on the face interval");

    const IntVec b = hub(p);
    auto B = [&](int j) { return b[static_cast<std::size_t>(spec.original(j))]; };
    auto A = [&](int j) { return spec.base()[spec.original(j)]; };
    IntVec image(b);
    for (int k = 1; k <= t; ++k) image[static_cast<std::size_t>(spec.original(k))] = -B(t + 1 - k);
    if (e >= t + 2) {
        image[static_cast<std::size_t>(spec.original(0))] = A(0) + rp - (B(t + 1) - A(t + 1));
        image[static_cast<std::size_t>(spec.original(t + 1))] = A(t + 1) + rp - (B(0) - A(0));
    }
    auto c = face_content_from_hub(spec, image);
    if (!c) throw DomainError("tau: weight " + hub_string(b) + " is not in the face");
    WeightPoint q(spec.base(), *c);
    if (e >= t + 2 && hub(q) != image)
        throw IntegrityError("tau: reconstructed hub " + hub_string(hub(q)) + " differs from " + hub_string(image));
    return q;
}

// ---------------------------------------------------------------------------
// Export

/// Graphviz: vertices labelled "hub^defect", edges labelled by residue.
inline std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n  node [shape=plaintext];\n";
    for (std::size_t k = 0; k < g.vertices().size(); ++k) {
        const auto& v = g.vertices()[k];
        os << "  v" << k << " [label=\"" << hub_string(v.hub) << '^' << v.defect << "\"];\n";
    }
    for (const auto& ed : g.edges()) os << "  v" << ed.from << " -> v" << ed.to << " [label=\"" << ed.residue << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace faces
