#pragma once

#include <string>
#include <vector>

#include "faces/fock.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"
#include "faces/weights.hpp"

namespace faces::testing {

inline LaurentPoly P(const std::string& s) { return parse_laurent(s); }

inline DominantWeight weight(int e, std::vector<int> a) { return DominantWeight(e, std::move(a)); }

/// e = 4, Lambda = 2 Lambda_1 + 3 Lambda_2: multicharge (1,1,2,2,2).
inline Multicharge example_charge() { return weight(4, {0, 2, 3, 0}).multicharge(); }

inline Multipartition mp(const std::string& s, const Multicharge& ch) { return parse_multipartition(s, ch); }

}  // namespace faces::testing

namespace faces {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Multipartition& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const FockVector& x, std::ostream* os) { *os << to_string(x); }

}  // namespace faces
