#include "waring/quadrics.hpp"

namespace waring {

namespace {

MatrixXq symmetric_matrix(const Poly& Q) {
    require_homogeneous(Q, "quadric");
    if (Q.degree() != 2) throw std::invalid_argument("quadric: degree-2 form required");
    int n = Q.nvars();
    MatrixXq A(n, n);
    A.setConstant(GaussRat(0));
    GaussRat half(Rat(1, 2));
    for (const auto& [e, c] : Q.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 2) i = j = k;
            if (e[k] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j) {
            A(i, i) = c;
        } else {
            A(i, j) = c * half;
            A(j, i) = c * half;
        }
    }
    return A;
}

Poly quadric_from_matrix(const MatrixXq& A) {
    int n = static_cast<int>(A.rows());
    Poly q(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ExpVec e(n, 0);
            e[i] += 1;
            e[j] += 1;
            q.add_term(e, i == j ? A(i, i) : A(i, j) + A(j, i));
        }
    return q;
}

}  // namespace

QuadricData quadric_data(const Poly& Q) {
    QuadricData qd;
    qd.matrix = symmetric_matrix(Q);
    qd.rank = rank(qd.matrix);
    qd.full_rank = qd.rank == qd.matrix.rows();
    if (qd.full_rank)
        qd.dual_quadric = normalize_poly(quadric_from_matrix(adjugate(qd.matrix)));
    return qd;
}

int quadric_rank(const Poly& Q) { return quadric_data(Q).rank; }

Decomposition quadric_decompose(const Poly& Q) {
    MatrixXq A = symmetric_matrix(Q);
    int n = static_cast<int>(A.rows());
    Decomposition out;
    out.degree = 2;
    out.exact = true;

    // Lagrange reduction.  With u = A e_k: a nonzero diagonal entry splits off
    // (1/a)(u.x)^2; a zero-diagonal pair (k,l) with c = A_kl != 0 splits off
    // (1/2c)(u.x + v.x)^2 - (1/2c)(u.x - v.x)^2.
    while (true) {
        int diag = -1;
        for (int i = 0; i < n; ++i)
            if (!A(i, i).is_zero()) {
                diag = i;
                break;
            }
        if (diag >= 0) {
            VectorXq u = A.col(diag);
            GaussRat a = A(diag, diag);
            out.terms.push_back({GaussRat(1) / a, u});
            A -= (u * u.transpose()) * (GaussRat(1) / a);
            continue;
        }
        int k = -1, l = -1;
        for (int i = 0; i < n && k < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!A(i, j).is_zero()) {
                    k = i;
                    l = j;
                    break;
                }
        if (k < 0) break;  // A == 0
        GaussRat c = A(k, l);
        VectorXq u = A.col(k), v = A.col(l);
        GaussRat s = GaussRat(1) / (GaussRat(2) * c);
        out.terms.push_back({s, u + v});
        out.terms.push_back({-s, u - v});
        A -= (u * v.transpose() + v * u.transpose()) * (GaussRat(1) / c);
    }
    return out;
}

LocusDescription quadric_forbidden(const Poly& Q) {
    QuadricData qd = quadric_data(Q);
    if (!qd.full_rank)
        throw std::invalid_argument(
            "quadric_forbidden: rank-deficient quadric; reduce to essential variables first");
    auto locus = LocusDescription::hypersurface(LocusDescription::Which::Forbidden,
                                                {qd.dual_quadric});
    locus.note = "dual quadric";
    return locus;
}

Membership quadric_membership(const Poly& Q, const ProjPoint& P) {
    QuadricData qd = quadric_data(Q);
    if (!qd.full_rank)
        throw std::invalid_argument(
            "quadric_membership: rank-deficient quadric; reduce to essential variables first");
    if (!P.exact)
        throw std::invalid_argument("quadric_membership: exact point required");
    std::vector<GaussRat> coords(P.q.data(), P.q.data() + P.q.size());
    GaussRat v = qd.dual_quadric.eval(coords);
    return v.is_zero() ? Membership::Forbidden : Membership::InWaring;
}

}  // namespace waring
