#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"
#include "waring/results.hpp"

namespace waring {

/// Graded piece (F^perp)_k as a kernel basis, in reduced row echelon form.
struct ApolarSlice {
    int k = 0;
    std::vector<Poly> basis;  // dual-variable polynomials annihilating F
    int dim() const { return static_cast<int>(basis.size()); }
};

/// 0 <= k <= d+1; the slice at d+1 is all of T_{d+1}.
ApolarSlice apolar_slice(const Poly& F, int k);

struct EssentialVariables {
    int count = 0;                  // number of essential variables
    std::vector<Poly> linear_slice; // basis of (F^perp)_1
    MatrixXq change;                // x = change * y, exact and invertible
    MatrixXq inverse_change;
    Poly restricted;                // F in the first `count` new variables
};

/// Linear change of coordinates after which F involves only its essential
/// variables; loci computed downstream live in that subspace.
EssentialVariables essential_variables(const Poly& F);

/// Solve F = sum c_i L_{P_i}^d for the scalars.  Exact when every point is
/// exact; complex least squares with a residual report otherwise.  Throws
/// std::domain_error when F is not in the span (pts is not apolar to F).
Decomposition decomposition_from_points(const Poly& F, const PointSet& pts,
                                        double tol = 1e-9);

/// max_k rank of the k-th catalecticant; always a lower bound for the rank.
int rank_lower_bound(const Poly& F);

/// Top-level dispatcher: essential-variable reduction, then split detection,
/// then family detection (quadric / monomial / binary / plane cubic).
/// Unsupported forms come back as lower-bound-only, never as a guess.
RankResult waring_rank(const Poly& F);

/// Locus counterpart of waring_rank; reported in the essential subspace.
LocusDescription waring_locus(const Poly& F);

/// Membership dispatcher for an exact point, in the input coordinates;
/// non-essential directions are forbidden outright.
Membership waring_membership(const Poly& F, const ProjPoint& P);

/// Map a decomposition of the reduced form back to the input coordinates.
Decomposition lift_decomposition(const Decomposition& dec, const EssentialVariables& ev);

}  // namespace waring

#endif
