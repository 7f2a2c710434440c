#ifndef WARING_PLANECUBICS_HPP
#define WARING_PLANECUBICS_HPP

#include "waring/aronhold.hpp"
#include "waring/linalg.hpp"
#include "waring/results.hpp"

namespace waring {

/// Classification of a ternary cubic into the types (1)-(10):
///  (1) triple line          rank 1    (6) line + transversal conic  rank 4
///  (2) three concurrent     rank 2    (7) nodal                     rank 4
///  (3) double line + line   rank 3    (8) cusp                      rank 4
///  (4) Fermat orbit         rank 3    (9) general smooth, S != 0    rank 4
///  (5) three general lines  rank 4   (10) line + tangent conic      rank 5
struct CubicClassification {
    int type = 0;
    int rank = 0;
    bool certified = true;
    int essential = 3;
    GaussRat S, T;
    std::vector<ProjPoint> singular_points;  // input coordinates
    // For a unique singular point: an exact change x = C y placing it at
    // [0:0:1], and the local data F(Cy) = z f2(x,y) + f3(x,y).
    MatrixXq to_singular;
    Poly f2{2}, f3{2};
    std::string note;
};

CubicClassification classify_cubic(const Poly& F);

/// Singular points of a ternary cubic (exact where the coordinates lie in
/// Q(i), numeric fallback flagged through `certified`).
std::vector<ProjPoint> cubic_singular_points(const Poly& F, bool& certified,
                                             double tol = 1e-8);

/// Net of conics (F^perp)_2 of a rank-4 plane cubic, with the cubic of
/// reducible members det(alpha A1 + beta A2 + gamma A3).
struct NetOfConics {
    std::vector<Poly> conics;     // C1, C2, C3 in reduced row echelon order
    std::vector<MatrixXq> mats;   // their symmetric matrices
    Poly delta{3};                // det of the net pencil, in (alpha,beta,gamma)
};

NetOfConics net_of_conics(const Poly& F);

/// det(alpha A1 + beta A2 + gamma A3) for an arbitrary conic basis.
Poly delta_cubic(const std::vector<Poly>& conics);

/// Membership for rank-4 non-cusp cubics (types 6, 7, 9): restrict the net's
/// reducible-conic cubic to the pencil through P and test square-freeness.
Membership membership_rank4(const Poly& F, const ProjPoint& P);

struct ForbiddenEquation {
    Poly reduced{3};         // defining polynomial of F_F, reduced + normalized
    Poly chart_disc{3};      // unreduced chart-1 discriminant (before cleanup)
    int chart_factor_multiplicity = 0;  // times the chart conic was divided out
};

/// Closed-form forbidden locus of a rank-4 non-cusp cubic, by chart
/// discriminants of the restricted pencil cubic, patched across charts.
ForbiddenEquation forbidden_equation_rank4(const Poly& F);

/// Type (10): the forbidden locus is the single point dual to the line
/// component of F.
LocusDescription locus_rank5(const Poly& F);

/// Locus for any classified cubic, dispatching per type.
LocusDescription cubic_locus_by_type(const Poly& F);

/// Membership for any classified cubic with an exact certificate available;
/// throws when the type has no certified test (disguised Fermat orbit).
Membership cubic_membership(const Poly& F, const ProjPoint& P);

}  // namespace waring

#endif
