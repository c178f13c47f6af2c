#pragma once

#include <ostream>

#include "sftgw/fermion.hpp"

namespace sftgw {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const FermionVector& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace sftgw
