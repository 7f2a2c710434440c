#ifndef WARING_QUADRICS_HPP
#define WARING_QUADRICS_HPP

#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"
#include "waring/results.hpp"

namespace waring {

/// Symmetric-matrix data of a quadric Q(x) = x A_Q x^t.
struct QuadricData {
    MatrixXq matrix;   // A_Q
    int rank = 0;
    Poly dual_quadric{0};  // normalized X adj(A_Q) X^t; empty unless full rank
    bool full_rank = false;
};

QuadricData quadric_data(const Poly& Q);

/// rk(Q) = rank of A_Q.
int quadric_rank(const Poly& Q);

/// Exact Q = sum a_i l_i^2 with rank-many terms, by symmetric Gaussian
/// (congruence) elimination; everything stays rational.
Decomposition quadric_decompose(const Poly& Q);

/// Forbidden locus of a full-rank quadric: V of the dual quadric
/// X adj(A_Q) X^t.  Throws for rank-deficient input (reduce to essential
/// variables first).
LocusDescription quadric_forbidden(const Poly& Q);

Membership quadric_membership(const Poly& Q, const ProjPoint& P);

}  // namespace waring

#endif
