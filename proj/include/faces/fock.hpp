#pragma once

/**
 * @file fock.hpp
 * @brief The q-Fock space of a multicharge: finite sums of multipartitions
 *        with Laurent-polynomial coefficients, and the actions of f_i, e_i,
 *        v^{h_i}, v^d and divided powers.
 */

#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "faces/errors.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"

namespace faces {

class FockVector {
public:
    // Descending lexicographic order: a dominance-maximal term comes first.
    using Terms = std::map<Multipartition, LaurentPoly, std::greater<>>;

    FockVector() = default;
    explicit FockVector(Multicharge charge) : charge_(std::move(charge)) {}

    /// |mu> with coefficient 1.
    static FockVector basis(const Multipartition& mu) {
        FockVector x(mu.charge());
        x.add(mu, LaurentPoly(1));
        return x;
    }
    /// The empty multipartition |~>.
    static FockVector vacuum(const Multicharge& charge) { return basis(Multipartition(charge)); }

    const Multicharge& charge() const noexcept { return charge_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentPoly coeff(const Multipartition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add(const Multipartition& mu, const LaurentPoly& c) {
        if (c.is_zero()) return;
        if (mu.charge() != charge_) throw DomainError("multipartition has a different multicharge");
        auto [it, inserted] = terms_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [mu, c] : o.terms_) add(mu, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [mu, c] : o.terms_) add(mu, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    friend FockVector operator*(const LaurentPoly& s, const FockVector& x) {
        FockVector r(x.charge_);
        if (s.is_zero()) return r;
        for (const auto& [mu, c] : x.terms_) r.terms_.emplace(mu, s * c);
        return r;
    }

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.charge_ == b.charge_);
    }

private:
    Multicharge charge_;
    Terms terms_;
};

/// Apply bar to every coefficient (not the bar involution of the Fock space).
inline FockVector bar_coefficients(const FockVector& x) {
    FockVector r(x.charge());
    for (const auto& [mu, c] : x.terms()) r.add(mu, bar(c));
    return r;
}

/// f_i |lambda> = sum over addable i-nodes n of v^{N(n)} |lambda + n>, where
/// N(n) counts addable minus removable i-nodes above n.
inline FockVector f_op(int i, const FockVector& x) {
    FockVector r(x.charge());
    for (const auto& [lambda, c] : x.terms()) {
        int n_above = 0;
        for (const auto& s : signed_nodes(lambda, i)) {
            if (s.sign == '+') {
                r.add(lambda.with_added(s.node), c.shifted(n_above));
                ++n_above;
            } else {
                --n_above;
            }
        }
    }
    return r;
}

/// e_i |mu> = sum over removable i-nodes m of v^{M(m)} |mu - m>, where M(m)
/// counts addable minus removable i-nodes below m.
inline FockVector e_op(int i, const FockVector& x) {
    FockVector r(x.charge());
    for (const auto& [mu, c] : x.terms()) {
        auto nodes = signed_nodes(mu, i);
        int n_below = 0;
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
            if (it->sign == '-') {
                r.add(mu.with_removed(it->node), c.shifted(n_below));
                --n_below;
            } else {
                ++n_below;
            }
        }
    }
    return r;
}

/// v^{h_i}: scale |mu> by v^{#addable - #removable i-nodes}.
inline FockVector vh_op(int i, const FockVector& x) {
    FockVector r(x.charge());
    for (const auto& [mu, c] : x.terms()) {
        int n = static_cast<int>(addable_nodes(mu, i).size()) - static_cast<int>(removable_nodes(mu, i).size());
        r.add(mu, c.shifted(n));
    }
    return r;
}

/// v^d: scale |mu> by v^{number of 0-nodes}.
inline FockVector vd_op(const FockVector& x) {
    FockVector r(x.charge());
    for (const auto& [mu, c] : x.terms()) r.add(mu, c.shifted(content(mu)[0]));
    return r;
}

/// f_i^{(k)} = f_i^k / [k]!, computed as k applications and one exact division.
inline FockVector divided_f(int i, int k, const FockVector& x) {
    if (k < 0) throw DomainError("divided power exponent must be nonnegative");
    FockVector y = x;
    for (int s = 0; s < k; ++s) y = f_op(i, y);
    if (k < 2) return y;
    const LaurentPoly fact = quantum_factorial(k);
    FockVector r(x.charge());
    for (const auto& [mu, c] : y.terms()) r.add(mu, exact_divide(c, fact));
    return r;
}

// ---------------------------------------------------------------------------
// Paths

struct PathStep {
    int residue = 0;
    int multiplicity = 0;
    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Steps in the order they are applied: {2,u},{1,j1},{2,j2-u} is the path
/// 2^u 1^j1 2^(j2-u), i.e. the operator f_2^(j2-u) f_1^(j1) f_2^(u).
using Path = std::vector<PathStep>;

/// Parse "2^1 1^2 2^2" (a bare residue means multiplicity 1).
inline Path parse_path(std::string_view text) {
    Path p;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            PathStep s{std::stoi(tok.substr(0, caret), &used), 1};
            if (used != (caret == std::string::npos ? tok.size() : caret)) throw DomainError("");
            if (caret != std::string::npos) {
                s.multiplicity = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw DomainError("");
            }
            if (s.multiplicity < 0) throw DomainError("");
            p.push_back(s);
        } catch (const std::exception&) {
            throw DomainError("cannot parse path step '" + tok + "'");
        }
    }
    return p;
}

inline std::string to_string(const Path& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k].residue << '^' << p[k].multiplicity;
    return os.str();
}

/// Apply the divided powers of the path, first step first, to |~>.
inline FockVector eval_path(const Path& path, const Multicharge& charge) {
    FockVector x = FockVector::vacuum(charge);
    for (const auto& s : path) x = divided_f(s.residue, s.multiplicity, x);
    return x;
}

// ---------------------------------------------------------------------------
// Text rendering in the style "|[], [1]> + q*|[1], []> + (q^4+q^2)*|...>"

inline std::string coefficient_prefix(const LaurentPoly& c) {
    if (c == LaurentPoly(1)) return "";
    if (c.is_monomial() && (c.coeff(c.min_exponent()) == 1 || c.min_exponent() == 0)) return to_string(c) + "*";
    return "(" + to_string(c) + ")*";
}

inline std::string to_string(const FockVector& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mu, c] : x.terms()) {
        if (!first) s += " + ";
        first = false;
        s += coefficient_prefix(c) + "|" + to_ket_string(mu) + ">";
    }
    return s;
}

/// Inverse of to_string; also accepts extra grouping parentheses around runs
/// of terms as printed by other tools, e.g. "(|a> + q*|b>) + q^2*|c>".
inline FockVector parse_fock(std::string_view text, const Multicharge& charge) {
    FockVector x(charge);
    std::size_t i = 0;
    const std::string s(text);
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&](const std::string& why) {
        throw DomainError("cannot parse Fock vector at offset " + std::to_string(i) + ": " + why);
    };
    while (true) {
        skip_ws();
        while (i < s.size() && (s[i] == '+' || s[i] == ')' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
        if (i >= s.size()) break;
        // A '(' either opens a coefficient "(q^4+q^2)*" or groups terms "(|a> + ...)".
        LaurentPoly coef(1);
        if (s[i] == '(') {
            std::size_t close = s.find(')', i);
            std::size_t bar_pos = s.find('|', i);
            if (close != std::string::npos && (bar_pos == std::string::npos || close < bar_pos)) {
                coef = parse_laurent(std::string_view(s).substr(i + 1, close - i - 1));
                i = close + 1;
                skip_ws();
                if (i >= s.size() || s[i] != '*') fail("expected '*' after coefficient");
                ++i;
            } else {
                ++i;
                continue;
            }
        } else if (s[i] != '|') {
            std::size_t star = s.find('*', i);
            std::size_t bar_pos = s.find('|', i);
            if (star == std::string::npos || bar_pos == std::string::npos || star > bar_pos) fail("expected coefficient");
            coef = parse_laurent(std::string_view(s).substr(i, star - i));
            i = star + 1;
        }
        skip_ws();
        if (i >= s.size() || s[i] != '|') fail("expected '|'");
        std::size_t close = s.find('>', i);
        if (close == std::string::npos) fail("unterminated ket");
        x.add(parse_multipartition(std::string_view(s).substr(i + 1, close - i - 1), charge), coef);
        i = close + 1;
    }
    return x;
}

}  // namespace faces
