#pragma once

// Weight-lattice arithmetic for affine type A_{e-1}^{(1)}: contents, hubs,
// the symmetric form, defects and Weyl reflections.

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "faces/errors.hpp"
#include "faces/partitions.hpp"

namespace faces {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

inline IntMatrix cartan_matrix(int e) {
    if (e < 2) throw DomainError("cartan_matrix requires e >= 2");
    IntMatrix c(static_cast<std::size_t>(e), IntVec(static_cast<std::size_t>(e), 0));
    if (e == 2) return {{2, -2}, {-2, 2}};
    for (int i = 0; i < e; ++i) {
        auto row = static_cast<std::size_t>(i);
        c[row][row] = 2;
        c[row][static_cast<std::size_t>(mod(i + 1, e))] = -1;
        c[row][static_cast<std::size_t>(mod(i - 1, e))] = -1;
    }
    return c;
}

/// Lambda = sum a_i Lambda_i, with at least one a_i > 0.
class DominantWeight {
public:
    DominantWeight() = default;
    DominantWeight(int e, IntVec a) : e_(e), a_(std::move(a)) {
        if (e_ < 2) throw DomainError("rank e must be at least 2");
        if (static_cast<int>(a_.size()) != e_)
            throw DomainError("dominant weight needs exactly e = " + std::to_string(e_) + " coefficients");
        bool nonzero = false;
        for (int x : a_) {
            if (x < 0) throw DomainError("dominant weight coefficients must be nonnegative");
            nonzero |= x > 0;
        }
        if (!nonzero) throw DomainError("dominant weight must be non-zero");
    }

    int e() const noexcept { return e_; }
    const IntVec& a() const noexcept { return a_; }
    int operator[](int i) const { return a_[static_cast<std::size_t>(mod(i, e_))]; }
    int level() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    Multicharge multicharge() const { return Multicharge::from_weight(e_, a_); }

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    int e_ = 2;
    IntVec a_;
};

/// Lambda - sum c_i alpha_i - t delta.
struct WeightPoint {
    DominantWeight base;
    IntVec content;
    int delta_shift = 0;

    WeightPoint() = default;
    WeightPoint(DominantWeight b, IntVec c, int t = 0) : base(std::move(b)), content(std::move(c)), delta_shift(t) {
        if (static_cast<int>(content.size()) != base.e()) throw DomainError("content must have e entries");
        if (delta_shift < 0) throw DomainError("delta shift must be nonnegative");
    }

    int degree() const { return std::accumulate(content.begin(), content.end(), 0); }

    friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

/// C * c
inline IntVec cartan_apply(int e, const IntVec& c) {
    const auto cm = cartan_matrix(e);
    IntVec r(static_cast<std::size_t>(e), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i] += cm[i][j] * c[j];
    return r;
}

/// theta_i = <h_i, lambda> = a_i - (C c)_i; delta pairs to zero with every h_i.
inline IntVec hub(const WeightPoint& p) {
    IntVec cc = cartan_apply(p.base.e(), p.content);
    IntVec th(p.base.a());
    for (std::size_t i = 0; i < th.size(); ++i) th[i] -= cc[i];
    return th;
}

/// (Lambda | alpha) for alpha = sum c_i alpha_i + t delta.
inline long long pairing_with_lambda(const DominantWeight& base, const IntVec& c, int t = 0) {
    long long s = static_cast<long long>(t) * base.level();
    for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<long long>(base.a()[i]) * c[i];
    return s;
}

/// (alpha | alpha) = c^T C c; delta is isotropic and orthogonal to every alpha_i.
inline long long root_norm(int e, const IntVec& c) {
    IntVec cc = cartan_apply(e, c);
    long long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<long long>(c[i]) * cc[i];
    return s;
}

/// (Lambda|alpha) - (alpha|alpha)/2, without the nonnegativity check.
inline long long raw_defect(const WeightPoint& p) {
    return pairing_with_lambda(p.base, p.content, p.delta_shift) - root_norm(p.base.e(), p.content) / 2;
}

/// Defect of a point of P(Lambda); negative values are an IntegrityError.
inline int defect(const WeightPoint& p) {
    long long d = raw_defect(p);
    if (d < 0)
        throw IntegrityError("negative defect " + std::to_string(d) + " for a weight claimed in P(Lambda)");
    return static_cast<int>(d);
}

/// Defects down an i-string of length w+1 from its top: d + k(w - k).
inline IntVec string_defects(int defect_at_top, int w) {
    if (w < 0) throw DomainError("string length parameter must be nonnegative");
    IntVec out;
    for (int k = 0; k <= w; ++k) out.push_back(defect_at_top + k * (w - k));
    return out;
}

/// Contents (j1, j2) of the face generated by f_1, f_2 from a1 Lambda_1 + a2 Lambda_2:
/// the hexagon with corners (0,0), (a1,0), (0,a2), (a1+a2,a2), (a1,a1+a2), (a1+a2,a1+a2).
inline bool in_face_region(int a1, int a2, int j1, int j2) {
    return j1 >= 0 && j2 >= 0 && j1 <= a1 + j2 && j2 <= a2 + j1 && j1 <= a1 + a2 && j2 <= a1 + a2;
}

/**
 * Defect of content (j1, j2) on the {1,2} face. Inside the box j1 <= a1,
 * j2 <= a2 this is j1(a1-j1) + j2(a2-j2) + j1 j2; descending the 2-string and
 * then the 1-string gives j2(a2-j2) + j1(a1+j2-j1), which is the same
 * polynomial and holds on the whole face.
 */
inline int face_defect(int a1, int a2, int j1, int j2) {
    if (a1 < 0 || a2 < 0) throw DomainError("face_defect: negative coefficient");
    if (!in_face_region(a1, a2, j1, j2))
        throw DomainError("face_defect: content (" + std::to_string(j1) + "," + std::to_string(j2) +
                          ") lies outside the face");
    if (j1 <= a1 && j2 <= a2) return j1 * (a1 - j1) + j2 * (a2 - j2) + j1 * j2;
    return j2 * (a2 - j2) + j1 * (a1 + j2 - j1);
}

/// s_i: subtract theta_i copies of alpha_i (add when theta_i < 0).
inline WeightPoint weyl_reflect(const WeightPoint& p, int i) {
    const int e = p.base.e();
    const auto idx = static_cast<std::size_t>(mod(i, e));
    WeightPoint r = p;
    r.content[idx] += hub(p)[idx];
    if (r.content[idx] < 0) throw DomainError("reflection leaves the positive root cone");
    return r;
}

inline std::string hub_string(const IntVec& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ']';
    return os.str();
}

inline std::string content_string(const IntVec& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

}  // namespace faces
