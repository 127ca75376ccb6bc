#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact Laurent polynomials in one variable, balanced quantum integers,
 *        Gaussian binomials and the inversion statistics on binary words.
 *
 * The same LaurentPoly type carries Fock-space coefficients (variable v,
 * rendered as "q") and shape generating functions (variable z, nonnegative
 * exponents only). Coefficients are int64 with checked arithmetic.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faces/errors.hpp"

namespace faces {

class LaurentPoly {
public:
    using Terms = std::map<int, std::int64_t>;

    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_[0] = constant;
    }
    LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
        for (auto [e, c] : terms) add_term(e, c);
    }

    /// c * v^e
    static LaurentPoly monomial(int e, std::int64_t c = 1) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    std::int64_t coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    // Only valid on nonzero polynomials.
    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }

    bool is_monomial() const noexcept { return terms_.size() == 1; }

    void add_term(int e, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, detail::checked_sub(0, c));
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_)
                r.add_term(detail::checked_exp_add(ea, eb), detail::checked_mul(ca, cb));
        return r;
    }

    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto [e, c] : terms_) r.terms_.emplace(detail::checked_exp_add(e, k), c);
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Terms terms_;
};

/// Exponent negation v -> v^{-1}.
inline LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly r;
    for (auto [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

inline bool is_bar_symmetric(const LaurentPoly& p) { return bar(p) == p; }

/// Split c = beta + rest with bar(beta) == beta and rest supported on
/// exponents >= 1; beta agrees with c on every exponent <= 0.
inline std::pair<LaurentPoly, LaurentPoly> bar_symmetric_part(const LaurentPoly& c) {
    LaurentPoly beta;
    for (auto [e, k] : c.terms()) {
        if (e > 0) break;
        beta.add_term(e, k);
        if (e < 0) beta.add_term(-e, k);
    }
    return {beta, c - beta};
}

/// Exact quotient num / den. A nonzero remainder is an IntegrityError: every
/// caller divides values that are known to be divisible.
inline LaurentPoly exact_divide(LaurentPoly num, const LaurentPoly& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    LaurentPoly quot;
    const int dhi = den.max_exponent();
    const int dlo = den.min_exponent();
    const std::int64_t lead = den.coeff(dhi);
    while (!num.is_zero()) {
        const int nhi = num.max_exponent();
        if (nhi - dhi < num.min_exponent() - dlo)
            throw IntegrityError("inexact Laurent polynomial division");
        const std::int64_t c = num.coeff(nhi);
        if (c % lead != 0) throw IntegrityError("inexact Laurent polynomial division");
        LaurentPoly step = LaurentPoly::monomial(nhi - dhi, c / lead);
        quot += step;
        num -= step * den;
    }
    return quot;
}

/// Balanced quantum integer [n]_v = v^{n-1} + v^{n-3} + ... + v^{-(n-1)}.
inline LaurentPoly quantum_int(int n) {
    if (n <= 0) throw DomainError("quantum_int requires n >= 1, got " + std::to_string(n));
    LaurentPoly r;
    for (int e = n - 1; e >= -(n - 1); e -= 2) r.add_term(e, 1);
    return r;
}

inline LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw DomainError("quantum_factorial requires n >= 0");
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r *= quantum_int(k);
    return r;
}

/// Gaussian binomial (a choose j)_z as a polynomial in z, via
/// S(a,j) = S(a-1,j-1) + z^j S(a-1,j). Zero when j < 0 or j > a.
inline LaurentPoly gauss_binom(int a, int j) {
    if (a < 0) throw DomainError("gauss_binom requires a >= 0");
    if (j < 0 || j > a) return {};
    if (j == 0 || j == a) return LaurentPoly(1);

    static std::mutex mu;
    static std::map<std::pair<int, int>, LaurentPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({a, j}); it != memo.end()) return it->second;
    }
    LaurentPoly r = gauss_binom(a - 1, j - 1) + gauss_binom(a - 1, j).shifted(j);
    std::lock_guard lock(mu);
    memo.emplace(std::pair{a, j}, r);
    return r;
}

/// Palindromic about the midpoint of its support.
inline bool is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) return true;
    const int lo = p.min_exponent(), hi = p.max_exponent();
    for (auto [e, c] : p.terms())
        if (p.coeff(lo + hi - e) != c) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Rendering and parsing

/**
 * Render with exponents descending, in the style of the fock_space program:
 * "q^4+q^2", "2*q^3-q", "q^-1". The zero polynomial renders as "0".
 */
inline std::string to_string(const LaurentPoly& p, std::string_view var = "q") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [e, c] = *it;
        std::int64_t mag = c < 0 ? -c : c;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

/// Ascending rendering for shape polynomials: "1+3z+6z^2".
inline std::string to_string_ascending(const LaurentPoly& p, std::string_view var = "z") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : p.terms()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

/**
 * Parse a polynomial written in a single variable (any of q, v, z), with
 * optional '*' between coefficient and variable: "q^4+q^2", "v+v^-1",
 * "1+3z+6z^2", "-2*q^-3". Whitespace is ignored.
 */
inline LaurentPoly parse_laurent(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty polynomial");

    LaurentPoly r;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw DomainError(std::string("cannot parse polynomial '") + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::int64_t& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) return false;
        out = std::stoll(s.substr(start, i - start));
        return true;
    };
    auto is_var = [](char ch) { return ch == 'q' || ch == 'v' || ch == 'z'; };

    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-'");
        }
        std::int64_t coef = 1;
        bool have_coef = read_int(coef);
        int exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) fail("dangling '*'");
            ++i;
        }
        if (i < s.size() && is_var(s[i])) {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                std::int64_t ev = 0;
                if (!read_int(ev)) fail("missing exponent");
                exponent = static_cast<int>(esign * ev);
            }
        } else if (!have_coef) {
            fail("expected a coefficient or variable");
        }
        r.add_term(exponent, sign * coef);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Binary words

class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw DomainError("binary word digits must be 0 or 1");
    }
    /// From a digit string such as "0101".
    explicit BinaryWord(std::string_view digits) {
        bits_.reserve(digits.size());
        for (char ch : digits) {
            if (ch != '0' && ch != '1') throw DomainError("binary word digits must be 0 or 1");
            bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    static BinaryWord zeros(std::size_t length) { return BinaryWord(std::vector<std::uint8_t>(length, 0)); }

    std::size_t length() const noexcept { return bits_.size(); }
    std::size_t ones() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }
    bool operator[](std::size_t k) const { return bits_[k] != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    /// Positions of 1-digits are a subset of those of `other`.
    bool subset_of(const BinaryWord& other) const {
        if (length() != other.length()) return false;
        for (std::size_t k = 0; k < length(); ++k)
            if (bits_[k] && !other.bits_[k]) return false;
        return true;
    }

    /// this - other, for other a subset of this.
    BinaryWord minus(const BinaryWord& other) const {
        if (!other.subset_of(*this)) throw DomainError("word difference requires containment");
        std::vector<std::uint8_t> r(bits_);
        for (std::size_t k = 0; k < length(); ++k)
            if (other.bits_[k]) r[k] = 0;
        return BinaryWord(std::move(r));
    }

    std::string str() const {
        std::string s;
        for (auto b : bits_) s += static_cast<char>('0' + b);
        return s;
    }

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// B(a, j): all words of length a with j ones, in increasing lexicographic order.
/// Empty when j < 0 or j > a.
inline std::vector<BinaryWord> binary_words(int a, int j) {
    std::vector<BinaryWord> out;
    if (a < 0 || j < 0 || j > a) return out;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(a - j), 0);
    bits.resize(static_cast<std::size_t>(a), 1);
    do {
        out.emplace_back(bits);
    } while (std::next_permutation(bits.begin(), bits.end()));
    return out;
}

/// Words T with T subset of S and exactly j ones.
inline std::vector<BinaryWord> sub_words(const BinaryWord& s, int j) {
    std::vector<std::size_t> ones;
    for (std::size_t k = 0; k < s.length(); ++k)
        if (s[k]) ones.push_back(k);
    std::vector<BinaryWord> out;
    for (const auto& pick : binary_words(static_cast<int>(ones.size()), j)) {
        std::vector<std::uint8_t> bits(s.length(), 0);
        for (std::size_t k = 0; k < ones.size(); ++k)
            if (pick[k]) bits[ones[k]] = 1;
        out.emplace_back(std::move(bits));
    }
    return out;
}

/// Inversions: pairs i < j with S_i = 1, S_j = 0.
inline int inv(const BinaryWord& s) {
    int total = 0, ones_seen = 0;
    for (std::size_t k = 0; k < s.length(); ++k) {
        if (s[k]) ++ones_seen;
        else total += ones_seen;
    }
    return total;
}

/// Pairs i < j with S_i = 0, S_j = 1; equivalently, the sum over every 1-digit
/// of the 0-digits before it. With words read top to bottom over addable
/// nodes this is the exponent the Fock action contributes.
inline int coinv(const BinaryWord& s) {
    int total = 0, zeros_seen = 0;
    for (std::size_t k = 0; k < s.length(); ++k) {
        if (s[k]) total += zeros_seen;
        else ++zeros_seen;
    }
    return total;
}

/// Relative inversion Inv(T, S): for each 1 of T, the 1-digits of S - T before it.
inline int inv_rel(const BinaryWord& t, const BinaryWord& s) {
    if (t.length() != s.length()) throw DomainError("inv_rel: length mismatch");
    if (!t.subset_of(s)) throw DomainError("inv_rel: T is not contained in S");
    int total = 0, rest_seen = 0;
    for (std::size_t k = 0; k < s.length(); ++k) {
        if (t[k]) total += rest_seen;
        else if (s[k]) ++rest_seen;
    }
    return total;
}

/**
 * Inv(S, U, X) for X within U within S. Positions of X are excluded; each
 * 1-digit of S - U collects +1 for every 0-digit before it and -1 for every
 * 1-digit of U - X before it. The result can be negative.
 */
inline int inv_excl(const BinaryWord& s, const BinaryWord& u, const BinaryWord& x) {
    if (s.length() != u.length() || u.length() != x.length())
        throw DomainError("inv_excl: length mismatch");
    if (!x.subset_of(u) || !u.subset_of(s)) throw DomainError("inv_excl: requires X in U in S");
    int total = 0, zeros_seen = 0, u_only_seen = 0;
    for (std::size_t k = 0; k < s.length(); ++k) {
        if (x[k]) continue;
        if (!s[k]) ++zeros_seen;
        else if (u[k]) ++u_only_seen;
        else total += zeros_seen - u_only_seen;
    }
    return total;
}

}  // namespace faces
