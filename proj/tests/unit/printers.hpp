#pragma once

#include <ostream>

#include "amitsur/group_ring.hpp"
#include "amitsur/quotient_s.hpp"

namespace amitsur {

inline void PrintTo(const SElement& s, std::ostream* os) { *os << s.to_string() << " (n=" << s.order() << ")"; }
inline void PrintTo(const GroupRingElement& p, std::ostream* os) { *os << p.to_string() << " (n=" << p.order() << ")"; }

}  // namespace amitsur
