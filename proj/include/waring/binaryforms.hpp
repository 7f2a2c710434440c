#ifndef WARING_BINARYFORMS_HPP
#define WARING_BINARYFORMS_HPP

#include <cstdint>

#include "waring/binary.hpp"
#include "waring/results.hpp"

namespace waring {

/// Sylvester data of a binary form: F^perp = (g1, g2) with
/// deg g1 + deg g2 = d + 2 and the rank read off the square-freeness of g1.
struct BinaryApolarPair {
    Poly g1{2}, g2{2};
    int d1 = 0, d2 = 0;
    bool g1_squarefree = false;
    int rank = 0;
    int locus_case = 0;  // 1: rank < ceil((d+1)/2); 2: >; 3: ==
};

BinaryApolarPair binary_apolar(const Poly& F);

int binary_rank(const Poly& F);

/// disc(alpha g1 + beta g2) as an exact binary form in (alpha, beta), by
/// interpolation; g1, g2 must have equal degree.
Poly pencil_discriminant(const Poly& g1, const Poly& g2);

/// The four-case Waring locus of a binary form.  Finite loci are exact when
/// they split over Q(i), numeric (flagged) otherwise.
LocusDescription binary_locus(const Poly& F, double tol = 1e-8);

/// Exact membership test for an exact point.
Membership binary_membership(const Poly& F, const ProjPoint& P);

/// A minimal decomposition, via a square-free element of (F^perp)_rank.
std::pair<PointSet, Decomposition> binary_decompose(const Poly& F,
                                                    std::uint64_t seed = 1,
                                                    double tol = 1e-8);

/// Minimal decomposition whose linear forms include the prescribed points;
/// requires rank >= ceil((d+1)/2) and at most rank - ceil((d+1)/2) prescribed
/// points, none forbidden.
Decomposition binary_decompose_greedy(const Poly& F,
                                      const std::vector<ProjPoint>& prescribed,
                                      std::uint64_t seed = 1, double tol = 1e-8);

}  // namespace waring

#endif
