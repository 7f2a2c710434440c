#ifndef WARING_MONOMIALS_HPP
#define WARING_MONOMIALS_HPP

#include "waring/mpoly.hpp"
#include "waring/results.hpp"

namespace waring {

/// A monomial with all exponents >= 1 (essential variables only), its sorted
/// exponent profile and closed-form rank.
struct MonomialData {
    ExpVec exponents;          // original order
    std::vector<int> perm;     // perm[s] = original index of the s-th smallest
    int min_exponent = 0;
    std::vector<int> min_indices;  // original indices attaining the minimum
    int rank = 0;              // (1/(d_0+1)) prod (d_i+1)
};

MonomialData monomial_data(const Poly& M);

int monomial_rank(const Poly& M);

/// Forbidden locus: the union of the dual hyperplanes of the minimal-exponent
/// variables.
LocusDescription monomial_forbidden(const Poly& M);

Membership monomial_membership(const Poly& M, const ProjPoint& P);

/// The point [1:1:...:1]; never forbidden for a monomial.
ProjPoint all_ones_point(int nvars);

/// The complete-intersection decomposition through P (P not forbidden):
/// hyperplane bundles H_i cut out rank-many points containing P, coefficients
/// solved exactly over Q(i) when every root of unity involved has order <= 4,
/// numerically otherwise.  Throws ForbiddenPointError when P is forbidden.
std::pair<PointSet, Decomposition> monomial_decompose_through_point(
    const Poly& M, const ProjPoint& P, double tol = 1e-9);

/// The H_i hypersurfaces used by the construction (exact, dual variables),
/// for apolarity checks.
std::vector<Poly> monomial_apolar_bundles(const Poly& M, const ProjPoint& P);

}  // namespace waring

#endif
