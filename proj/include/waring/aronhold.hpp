#ifndef WARING_ARONHOLD_HPP
#define WARING_ARONHOLD_HPP

#include <array>

#include "waring/mpoly.hpp"

namespace waring {

// Classical Aronhold invariants of a ternary cubic, evaluated on the
// coefficient array in graded-lex descending monomial order:
// (3,0,0),(2,1,0),(2,0,1),(1,2,0),(1,1,1),(1,0,2),(0,3,0),(0,2,1),(0,1,2),(0,0,3).
// With this normalization the Hesse cubic x^3+y^3+z^3+6m*xyz has
// S = 1296 (m - m^4), T = 5832 (1 - 20 m^3 - 8 m^6), and T^2 + S^3 vanishes
// exactly on the singular cubics.
GaussRat aronhold_S(const std::array<GaussRat, 10>& c);
GaussRat aronhold_T(const std::array<GaussRat, 10>& c);

std::array<GaussRat, 10> cubic_coefficient_array(const Poly& F);

/// T^2 + S^3: zero iff the cubic is singular.
GaussRat cubic_discriminant(const Poly& F);

}  // namespace waring

#endif
