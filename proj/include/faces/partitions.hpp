#pragma once

/**
 * @file partitions.hpp
 * @brief Partitions, multipartitions, node residues, the signature rule and
 *        the crystal operators e~_i / f~_i on multipartitions.
 *
 * Conventions:
 *  - components, rows and columns are 0-based; a node (k, r, c) has residue
 *    charge[k] + c - r (mod e);
 *  - the global node order is component-major, then row. "Above" means
 *    earlier in that order;
 *  - the multicharge is always the ascending corner list 0^{a0} 1^{a1} ...
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faces/errors.hpp"

namespace faces {

inline int mod(int x, int e) {
    int r = x % e;
    return r < 0 ? r + e : r;
}

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// Row length, 0 past the last row.
    int row(std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    friend class Multipartition;
    std::vector<int> parts_;
};

/// Corner residues of the components, ascending, with the rank e.
class Multicharge {
public:
    Multicharge() = default;
    Multicharge(int e, std::vector<int> residues) : e_(e), residues_(std::move(residues)) {
        if (e_ < 2) throw DomainError("rank e must be at least 2");
        for (int& k : residues_) k = mod(k, e_);
    }

    /// a[0] copies of 0, then a[1] copies of 1, ...
    static Multicharge from_weight(int e, const std::vector<int>& a) {
        if (static_cast<int>(a.size()) != e) throw DomainError("weight must have e coefficients");
        std::vector<int> res;
        for (int i = 0; i < e; ++i) {
            if (a[static_cast<std::size_t>(i)] < 0) throw DomainError("weight coefficients must be nonnegative");
            res.insert(res.end(), static_cast<std::size_t>(a[static_cast<std::size_t>(i)]), i);
        }
        return Multicharge(e, std::move(res));
    }

    int e() const noexcept { return e_; }
    std::size_t level() const noexcept { return residues_.size(); }
    const std::vector<int>& residues() const noexcept { return residues_; }
    int operator[](std::size_t k) const { return residues_[k]; }

    friend auto operator<=>(const Multicharge&, const Multicharge&) = default;

private:
    int e_ = 2;
    std::vector<int> residues_;
};

struct Node {
    std::size_t component = 0;
    int row = 0;
    int col = 0;
    int residue = 0;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Global order: component-major, then row.
inline bool above(const Node& a, const Node& b) {
    return a.component != b.component ? a.component < b.component : a.row < b.row;
}

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(Multicharge charge)
        : charge_(std::move(charge)), components_(charge_.level()) {}
    Multipartition(Multicharge charge, std::vector<Partition> components)
        : charge_(std::move(charge)), components_(std::move(components)) {
        if (components_.size() != charge_.level())
            throw DomainError("component count " + std::to_string(components_.size()) +
                              " does not match multicharge level " + std::to_string(charge_.level()));
    }

    const Multicharge& charge() const noexcept { return charge_; }
    int e() const noexcept { return charge_.e(); }
    std::size_t level() const noexcept { return components_.size(); }
    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t k) const { return components_[k]; }

    int size() const {
        int n = 0;
        for (const auto& p : components_) n += p.size();
        return n;
    }
    bool empty() const {
        return std::all_of(components_.begin(), components_.end(), [](const Partition& p) { return p.empty(); });
    }

    int residue(std::size_t comp, int row, int col) const { return mod(charge_[comp] + col - row, e()); }

    /// Add a node at the end of `row` (row may equal the current length).
    Multipartition with_added(std::size_t comp, int row) const {
        Multipartition r = *this;
        auto& parts = r.components_[comp].parts_;
        if (static_cast<std::size_t>(row) == parts.size()) parts.push_back(1);
        else ++parts[static_cast<std::size_t>(row)];
        return r;
    }
    Multipartition with_removed(std::size_t comp, int row) const {
        Multipartition r = *this;
        auto& parts = r.components_[comp].parts_;
        if (--parts[static_cast<std::size_t>(row)] == 0) parts.pop_back();
        return r;
    }
    Multipartition with_added(const Node& n) const { return with_added(n.component, n.row); }
    Multipartition with_removed(const Node& n) const { return with_removed(n.component, n.row); }

    // Ordered by components (lexicographic on part lists), then charge.
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
        if (auto c = a.components_ <=> b.components_; c != 0) return c;
        return a.charge_ <=> b.charge_;
    }
    friend bool operator==(const Multipartition&, const Multipartition&) = default;

private:
    Multicharge charge_;
    std::vector<Partition> components_;
};

// ---------------------------------------------------------------------------
// Addable / removable nodes

/// All addable nodes (any residue) in global order.
inline std::vector<Node> addable_nodes(const Multipartition& mu) {
    std::vector<Node> out;
    for (std::size_t k = 0; k < mu.level(); ++k) {
        const Partition& p = mu[k];
        for (std::size_t r = 0; r <= p.length(); ++r) {
            if (r == 0 || p.row(r - 1) > p.row(r)) {
                int c = p.row(r);
                out.push_back({k, static_cast<int>(r), c, mu.residue(k, static_cast<int>(r), c)});
            }
        }
    }
    return out;
}

inline std::vector<Node> removable_nodes(const Multipartition& mu) {
    std::vector<Node> out;
    for (std::size_t k = 0; k < mu.level(); ++k) {
        const Partition& p = mu[k];
        for (std::size_t r = 0; r < p.length(); ++r) {
            if (p.row(r) > p.row(r + 1)) {
                int c = p.row(r) - 1;
                out.push_back({k, static_cast<int>(r), c, mu.residue(k, static_cast<int>(r), c)});
            }
        }
    }
    return out;
}

inline std::vector<Node> addable_nodes(const Multipartition& mu, int i) {
    auto all = addable_nodes(mu);
    std::erase_if(all, [&](const Node& n) { return n.residue != mod(i, mu.e()); });
    return all;
}

inline std::vector<Node> removable_nodes(const Multipartition& mu, int i) {
    auto all = removable_nodes(mu);
    std::erase_if(all, [&](const Node& n) { return n.residue != mod(i, mu.e()); });
    return all;
}

// ---------------------------------------------------------------------------
// Signature rule

struct SignedNode {
    char sign;  // '+' addable, '-' removable
    Node node;
};

/// i-nodes in global (top to bottom) order, each tagged '+' or '-'.
inline std::vector<SignedNode> signed_nodes(const Multipartition& mu, int i) {
    std::vector<SignedNode> out;
    for (const auto& n : addable_nodes(mu, i)) out.push_back({'+', n});
    for (const auto& n : removable_nodes(mu, i)) out.push_back({'-', n});
    std::sort(out.begin(), out.end(), [](const SignedNode& a, const SignedNode& b) { return above(a.node, b.node); });
    return out;
}

/**
 * Reduced i-signature: signs written bottom to top, with adjacent "-+" pairs
 * cancelled until none remain. The result always has the form +...+-...-.
 */
inline std::vector<SignedNode> signature(const Multipartition& mu, int i) {
    auto nodes = signed_nodes(mu, i);
    std::vector<SignedNode> stack;
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
        if (it->sign == '+' && !stack.empty() && stack.back().sign == '-') stack.pop_back();
        else stack.push_back(*it);
    }
    return stack;
}

inline std::string signature_string(const std::vector<SignedNode>& sig) {
    std::string s;
    for (const auto& x : sig) s += x.sign;
    return s;
}

/// Node of the leftmost '-' in the reduced signature.
inline std::optional<Node> good_node(const Multipartition& mu, int i) {
    for (const auto& x : signature(mu, i))
        if (x.sign == '-') return x.node;
    return std::nullopt;
}

/// Node of the rightmost '+' in the reduced signature.
inline std::optional<Node> cogood_node(const Multipartition& mu, int i) {
    auto sig = signature(mu, i);
    for (auto it = sig.rbegin(); it != sig.rend(); ++it)
        if (it->sign == '+') return it->node;
    return std::nullopt;
}

inline std::optional<Multipartition> f_tilde(const Multipartition& mu, int i) {
    if (auto n = cogood_node(mu, i)) return mu.with_added(*n);
    return std::nullopt;
}

inline std::optional<Multipartition> e_tilde(const Multipartition& mu, int i) {
    if (auto n = good_node(mu, i)) return mu.with_removed(*n);
    return std::nullopt;
}

/// Number of '-' (resp. '+') signs in the reduced signature.
inline int epsilon(const Multipartition& mu, int i) {
    auto sig = signature(mu, i);
    return static_cast<int>(std::count_if(sig.begin(), sig.end(), [](const SignedNode& x) { return x.sign == '-'; }));
}
inline int phi(const Multipartition& mu, int i) {
    auto sig = signature(mu, i);
    return static_cast<int>(std::count_if(sig.begin(), sig.end(), [](const SignedNode& x) { return x.sign == '+'; }));
}

/// Result of peeling good nodes until the empty multipartition or a dead end.
struct PeelResult {
    bool regular = false;
    std::vector<int> residues;  // residues removed, in order
    Multipartition stuck_at;    // where peeling stopped when not regular
};

/// Repeatedly remove the good node of the smallest residue that has one.
inline PeelResult peel(const Multipartition& mu) {
    PeelResult res;
    Multipartition cur = mu;
    while (!cur.empty()) {
        bool moved = false;
        for (int i = 0; i < cur.e(); ++i) {
            if (auto next = e_tilde(cur, i)) {
                res.residues.push_back(i);
                cur = std::move(*next);
                moved = true;
                break;
            }
        }
        if (!moved) {
            res.stuck_at = cur;
            return res;
        }
    }
    res.regular = true;
    res.stuck_at = cur;
    return res;
}

inline bool is_e_regular(const Multipartition& mu) { return peel(mu).regular; }

// ---------------------------------------------------------------------------
// Content and dominance

/// Number of nodes of each residue.
inline std::vector<int> content(const Multipartition& mu) {
    std::vector<int> c(static_cast<std::size_t>(mu.e()), 0);
    for (std::size_t k = 0; k < mu.level(); ++k) {
        const auto& parts = mu[k].parts();
        for (std::size_t r = 0; r < parts.size(); ++r)
            for (int col = 0; col < parts[r]; ++col) ++c[static_cast<std::size_t>(mu.residue(k, static_cast<int>(r), col))];
    }
    return c;
}

/// mu dominates lambda: every cumulative partial sum (earlier components in
/// full, then the first j rows of component k) of mu is at least lambda's.
inline bool dominance_geq(const Multipartition& mu, const Multipartition& lambda) {
    if (mu.charge() != lambda.charge()) throw DomainError("dominance requires equal multicharges");
    int base_mu = 0, base_la = 0;
    for (std::size_t k = 0; k < mu.level(); ++k) {
        const std::size_t rows = std::max(mu[k].length(), lambda[k].length());
        int sm = base_mu, sl = base_la;
        for (std::size_t j = 0; j < rows; ++j) {
            sm += mu[k].row(j);
            sl += lambda[k].row(j);
            if (sm < sl) return false;
        }
        base_mu += mu[k].size();
        base_la += lambda[k].size();
        if (base_mu < base_la) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text format: "[[2],[1],[1,1],[]]"

/// Compact nested-bracket form, e.g. [[2],[1],[],[1,1]].
inline std::string to_string(const Multipartition& mu) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < mu.level(); ++k) {
        if (k) os << ',';
        os << '[';
        const auto& parts = mu[k].parts();
        for (std::size_t r = 0; r < parts.size(); ++r) os << (r ? "," : "") << parts[r];
        os << ']';
    }
    os << ']';
    return os.str();
}

/// The component list as printed inside a Fock ket: "[2], [1], [1, 1], []".
inline std::string to_ket_string(const Multipartition& mu) {
    std::ostringstream os;
    for (std::size_t k = 0; k < mu.level(); ++k) {
        if (k) os << ", ";
        os << '[';
        const auto& parts = mu[k].parts();
        for (std::size_t r = 0; r < parts.size(); ++r) os << (r ? ", " : "") << parts[r];
        os << ']';
    }
    return os.str();
}

/// Parse a list of integer lists. Accepts "[[2],[1],[]]" and the ket form
/// "[2], [1], []" (outer brackets optional). Whitespace is ignored.
inline std::vector<std::vector<int>> parse_nested_lists(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&](const std::string& why) {
        throw DomainError("cannot parse multipartition '" + std::string(text) + "': " + why);
    };
    // Strip one level of outer brackets if the content is itself a list of lists.
    if (s.size() >= 2 && s.front() == '[' && s[1] == '[') {
        if (s.back() != ']') fail("unbalanced brackets");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::vector<int>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '[') fail("expected '['");
        ++i;
        std::vector<int> parts;
        while (i < s.size() && s[i] != ']') {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected a part");
            parts.push_back(std::stoi(s.substr(start, i - start)));
            if (i < s.size() && s[i] == ',') ++i;
        }
        if (i >= s.size()) fail("unbalanced brackets");
        ++i;
        out.push_back(std::move(parts));
        if (i < s.size()) {
            if (s[i] != ',') fail("expected ','");
            ++i;
        }
    }
    return out;
}

inline Multipartition parse_multipartition(std::string_view text, const Multicharge& charge) {
    auto lists = parse_nested_lists(text);
    std::vector<Partition> comps;
    comps.reserve(lists.size());
    for (auto& l : lists) comps.emplace_back(std::move(l));
    return Multipartition(charge, std::move(comps));
}

}  // namespace faces
