#include "waring/apolarity.hpp"

#include "waring/binaryforms.hpp"
#include "waring/monomials.hpp"
#include "waring/planecubics.hpp"
#include "waring/quadrics.hpp"
#include "waring/splitforms.hpp"

namespace waring {

ApolarSlice apolar_slice(const Poly& F, int k) {
    require_homogeneous(F, "apolar_slice");
    int d = F.degree();
    if (k < 0 || k > d + 1)
        throw std::invalid_argument("apolar_slice: k out of range");
    ApolarSlice s;
    s.k = k;
    if (k == d + 1) {
        for (const auto& e : monomial_basis(F.nvars(), k))
            s.basis.push_back(Poly::monomial(e, GaussRat(1)));
        return s;
    }
    MatrixXq M = catalecticant(F, k);
    s.basis = rows_as_polys(kernel_basis(M), F.nvars(), k);
    return s;
}

EssentialVariables essential_variables(const Poly& F) {
    require_homogeneous(F, "essential_variables");
    int n = F.nvars();
    EssentialVariables ev;
    MatrixXq K = kernel_basis(MatrixXq(catalecticant(F, 1)));
    ev.linear_slice = rows_as_polys(K, n, 1);
    int q = static_cast<int>(K.rows());
    ev.count = n - q;

    // Columns count..n-1 carry the annihilated directions; the leading columns
    // greedily take standard basis vectors that keep the matrix invertible.
    MatrixXq C(n, n);
    C.setConstant(GaussRat(0));
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < n; ++i) C(i, ev.count + j) = K(j, i);
    int placed = 0;
    for (int cand = 0; cand < n && placed < ev.count; ++cand) {
        C(cand, placed) = GaussRat(1);
        MatrixXq probe(n, placed + 1 + q);
        probe.leftCols(placed + 1) = C.leftCols(placed + 1);
        probe.rightCols(q) = C.rightCols(q);
        if (rank(probe) == placed + 1 + q) {
            ++placed;
        } else {
            C(cand, placed) = GaussRat(0);
        }
    }
    if (placed != ev.count)
        throw std::logic_error("essential_variables: completion failed");
    ev.change = C;
    auto inv = inverse(C);
    if (!inv) throw std::logic_error("essential_variables: change not invertible");
    ev.inverse_change = *inv;

    Poly G = compose_linear(F, C);
    Poly R(ev.count);
    for (const auto& [e, c] : G.terms()) {
        for (int i = ev.count; i < n; ++i)
            if (e[i] != 0)
                throw std::logic_error("essential_variables: residual support");
        ExpVec f(e.begin(), e.begin() + ev.count);
        R.add_term(f, c);
    }
    ev.restricted = R;
    return ev;
}

namespace {

VectorXq power_coeffs_exact(const VectorXq& L, int d, const std::vector<ExpVec>& basis) {
    VectorXq v(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        GaussRat t(Rat(multinomial(d, basis[r])));
        for (int i = 0; i < L.size(); ++i)
            for (int j = 0; j < basis[r][i]; ++j) t *= L[i];
        v[static_cast<int>(r)] = t;
    }
    return v;
}

Eigen::VectorXcd power_coeffs_numeric(const Eigen::VectorXcd& L, int d,
                                      const std::vector<ExpVec>& basis) {
    Eigen::VectorXcd v(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        std::complex<double> t(multinomial(d, basis[r]).convert_to<double>(), 0.0);
        for (int i = 0; i < L.size(); ++i)
            for (int j = 0; j < basis[r][i]; ++j) t *= L[i];
        v[static_cast<int>(r)] = t;
    }
    return v;
}

}  // namespace

Decomposition decomposition_from_points(const Poly& F, const PointSet& pts, double tol) {
    require_homogeneous(F, "decomposition_from_points");
    int d = F.degree();
    int n = F.nvars();
    auto basis = monomial_basis(n, d);
    bool exact = true;
    for (const auto& p : pts.points) {
        if (p.dim() != n)
            throw std::invalid_argument("decomposition_from_points: wrong point dimension");
        exact = exact && p.exact;
    }
    for (std::size_t i = 0; i < pts.points.size(); ++i)
        for (std::size_t j = i + 1; j < pts.points.size(); ++j)
            if (pts.points[i].exact && pts.points[j].exact &&
                pts.points[i] == pts.points[j])
                throw std::invalid_argument("decomposition_from_points: repeated point");

    Decomposition out;
    out.degree = d;
    if (exact) {
        MatrixXq A(basis.size(), pts.points.size());
        for (std::size_t c = 0; c < pts.points.size(); ++c)
            A.col(static_cast<int>(c)) = power_coeffs_exact(pts.points[c].q, d, basis);
        VectorXq f = poly_as_vector(F, d);
        auto sol = solve_exact(A, f);
        if (!sol)
            throw std::domain_error(
                "decomposition_from_points: F is not in the span of the powers "
                "(the point set is not apolar to F)");
        out.exact = true;
        out.residual = 0.0;
        for (std::size_t c = 0; c < pts.points.size(); ++c)
            out.terms.push_back({(*sol)[static_cast<int>(c)], pts.points[c].q});
        return out;
    }

    Eigen::MatrixXcd A(basis.size(), pts.points.size());
    for (std::size_t c = 0; c < pts.points.size(); ++c)
        A.col(static_cast<int>(c)) = power_coeffs_numeric(pts.points[c].to_complex(), d, basis);
    Eigen::VectorXcd f(basis.size());
    VectorXq fe = poly_as_vector(F, d);
    for (int i = 0; i < fe.size(); ++i) f[i] = to_complex(fe[i]);
    Eigen::VectorXcd c = A.colPivHouseholderQr().solve(f);
    double res = (A * c - f).norm() / std::max(1.0, f.norm());
    if (res > tol)
        throw std::domain_error(
            "decomposition_from_points: least-squares residual " + std::to_string(res) +
            " exceeds tolerance (the point set is not apolar to F)");
    out.exact = false;
    out.residual = res;
    for (std::size_t k = 0; k < pts.points.size(); ++k)
        out.num_terms.push_back({c[static_cast<int>(k)], pts.points[k].to_complex()});
    return out;
}

int rank_lower_bound(const Poly& F) {
    require_homogeneous(F, "rank_lower_bound");
    int best = 0;
    for (int k = 0; k <= F.degree(); ++k)
        best = std::max(best, rank(MatrixXq(catalecticant(F, k))));
    return best;
}

/// Map a decomposition in reduced coordinates back through x = C y:
/// the linear forms transform by the inverse transpose of C.
Decomposition lift_decomposition(const Decomposition& dec, const EssentialVariables& ev) {
    if (!dec.exact) return dec;
    int n = static_cast<int>(ev.change.rows());
    Decomposition out = dec;
    out.terms.clear();
    for (const auto& t : dec.terms) {
        VectorXq padded(n);
        for (int i = 0; i < n; ++i)
            padded[i] = i < t.L.size() ? t.L[i] : GaussRat(0);
        VectorXq lifted = ev.inverse_change.transpose() * padded;
        out.terms.push_back({t.c, lifted});
    }
    return out;
}

RankResult waring_rank(const Poly& F) {
    require_homogeneous(F, "waring_rank");
    EssentialVariables ev = essential_variables(F);
    const Poly& G = ev.restricted;
    int d = G.degree();
    int lb = rank_lower_bound(G);

    RankResult r;
    r.lower_bound = lb;

    if (ev.count == 1 || d == 1) {
        r.rank = 1;
        r.method = RankMethod::Monomial;
        r.certified = true;
        Decomposition dec;
        dec.degree = d;
        dec.exact = true;
        if (ev.count == 1) {
            VectorXq L(1);
            L << GaussRat(1);
            dec.terms.push_back({G.coeff(ExpVec{d}), L});
        } else {
            VectorXq L(G.nvars());
            for (int i = 0; i < G.nvars(); ++i) {
                ExpVec e(G.nvars(), 0);
                e[i] = 1;
                L[i] = G.coeff(e);
            }
            dec.terms.push_back({GaussRat(1), L});
        }
        r.witness = lift_decomposition(dec, ev);
        return r;
    }

    if (d == 2) {
        r.rank = quadric_rank(G);
        r.method = RankMethod::Quadric;
        r.certified = true;
        r.witness = lift_decomposition(quadric_decompose(G), ev);
        return r;
    }

    SplitDecomposition split = split_detect(G);
    if (split.blocks.size() >= 2) {
        RankResult sr = split_rank_impl(G, split);
        sr.lower_bound = lb;
        if (sr.witness) sr.witness = lift_decomposition(*sr.witness, ev);
        return sr;
    }

    if (G.term_count() == 1) {
        r.rank = monomial_data(G).rank;
        r.method = RankMethod::Monomial;
        r.certified = true;
        auto through = monomial_decompose_through_point(G, all_ones_point(G.nvars()));
        r.witness = lift_decomposition(through.second, ev);
        return r;
    }

    if (ev.count == 2) {
        r.rank = binary_rank(G);
        r.method = RankMethod::Binary;
        r.certified = true;
        return r;
    }

    if (ev.count == 3 && d == 3) {
        CubicClassification cc = classify_cubic(G);
        r.rank = cc.rank;
        r.method = RankMethod::CubicTable;
        r.certified = cc.certified;
        r.note = "plane cubic type (" + std::to_string(cc.type) + ")";
        return r;
    }

    r.rank = lb;
    r.method = RankMethod::LowerBoundOnly;
    r.certified = false;
    r.note = "unsupported family: catalecticant lower bound only";
    return r;
}

LocusDescription waring_locus(const Poly& F) {
    require_homogeneous(F, "waring_locus");
    EssentialVariables ev = essential_variables(F);
    const Poly& G = ev.restricted;
    int d = G.degree();

    if (ev.count == 1) {
        LocusDescription all;
        all.kind = LocusDescription::Kind::All;
        all.which = LocusDescription::Which::Waring;
        all.note = "rank-one form: the decomposition is the form itself";
        return all;
    }

    if (d == 2) return quadric_forbidden(G);

    SplitDecomposition split = split_detect(G);
    if (split.blocks.size() >= 2) return split_locus_impl(G, split);

    if (G.term_count() == 1) return monomial_forbidden(G);
    if (ev.count == 2) return binary_locus(G);
    if (ev.count == 3 && d == 3) return cubic_locus_by_type(G);

    LocusDescription unknown;
    unknown.kind = LocusDescription::Kind::Empty;
    unknown.certified = false;
    unknown.note = "unsupported family: no locus claim";
    return unknown;
}

Membership waring_membership(const Poly& F, const ProjPoint& P) {
    require_homogeneous(F, "waring_membership");
    if (!P.exact)
        throw std::invalid_argument("waring_membership: exact point required");
    if (P.dim() != F.nvars())
        throw std::invalid_argument("waring_membership: wrong point dimension");
    EssentialVariables ev = essential_variables(F);
    VectorXq w = ev.change.transpose() * P.q;
    for (int i = ev.count; i < F.nvars(); ++i)
        if (!w[i].is_zero()) return Membership::Forbidden;
    VectorXq sub(ev.count);
    for (int i = 0; i < ev.count; ++i) sub[i] = w[i];
    ProjPoint Q = ProjPoint::from_exact(std::move(sub));
    const Poly& G = ev.restricted;
    int d = G.degree();

    if (ev.count == 1) return Membership::InWaring;
    if (d == 2) return quadric_membership(G, Q);

    SplitDecomposition split = split_detect(G);
    if (split.blocks.size() >= 2) return split_locus_membership(G, Q);
    if (G.term_count() == 1) return monomial_membership(G, Q);
    if (ev.count == 2) return binary_membership(G, Q);
    if (ev.count == 3 && d == 3) return cubic_membership(G, Q);
    throw std::runtime_error("waring_membership: unsupported family");
}

}  // namespace waring
