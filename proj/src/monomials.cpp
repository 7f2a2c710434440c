#include "waring/monomials.hpp"

#include "waring/apolarity.hpp"

#include <numeric>

namespace waring {

MonomialData monomial_data(const Poly& M) {
    require_homogeneous(M, "monomial");
    if (M.term_count() != 1)
        throw std::invalid_argument("monomial: single-term form required");
    MonomialData md;
    md.exponents = M.terms().begin()->first;
    if (M.degree() == 0) throw std::invalid_argument("monomial: constant input");
    for (int e : md.exponents)
        if (e == 0)
            throw std::invalid_argument(
                "monomial: exponent-0 variable; reduce to essential variables first");
    int n = static_cast<int>(md.exponents.size());
    md.perm.resize(n);
    std::iota(md.perm.begin(), md.perm.end(), 0);
    std::stable_sort(md.perm.begin(), md.perm.end(),
                     [&](int a, int b) { return md.exponents[a] < md.exponents[b]; });
    md.min_exponent = md.exponents[md.perm[0]];
    for (int i = 0; i < n; ++i)
        if (md.exponents[i] == md.min_exponent) md.min_indices.push_back(i);
    Int prod = 1;
    for (int e : md.exponents) prod *= (e + 1);
    prod /= (md.min_exponent + 1);
    md.rank = prod.convert_to<int>();
    return md;
}

int monomial_rank(const Poly& M) { return monomial_data(M).rank; }

LocusDescription monomial_forbidden(const Poly& M) {
    MonomialData md = monomial_data(M);
    LocusDescription d;
    d.kind = LocusDescription::Kind::HyperplaneUnion;
    d.which = LocusDescription::Which::Forbidden;
    d.variable_indices = md.min_indices;
    int n = static_cast<int>(md.exponents.size());
    for (int i : md.min_indices) d.equations.push_back(Poly::variable(n, i));
    return d;
}

Membership monomial_membership(const Poly& M, const ProjPoint& P) {
    MonomialData md = monomial_data(M);
    if (!P.exact) throw std::invalid_argument("monomial_membership: exact point required");
    if (P.dim() != static_cast<int>(md.exponents.size()))
        throw std::invalid_argument("monomial_membership: wrong point dimension");
    for (int i : md.min_indices)
        if (P.q[i].is_zero()) return Membership::Forbidden;
    return Membership::InWaring;
}

ProjPoint all_ones_point(int nvars) {
    VectorXq v(nvars);
    for (int i = 0; i < nvars; ++i) v[i] = GaussRat(1);
    return ProjPoint::from_exact(std::move(v));
}

namespace {

struct PivotedPoint {
    int pivot;                 // minimal-exponent index with nonzero coordinate
    bool exact;
    VectorXq q;                // normalized, pivot coordinate 1 (exact case)
    Eigen::VectorXcd c;        // normalized (numeric case)
};

PivotedPoint normalize_against_pivot(const MonomialData& md, const ProjPoint& P) {
    int n = static_cast<int>(md.exponents.size());
    if (P.dim() != n)
        throw std::invalid_argument("monomial decomposition: wrong point dimension");
    PivotedPoint out;
    out.exact = P.exact;
    if (P.exact) {
        for (int i : md.min_indices)
            if (P.q[i].is_zero())
                throw ForbiddenPointError(
                    P, "X_" + std::to_string(i),
                    "point is forbidden: coordinate " + std::to_string(i) +
                        " attains the minimal exponent and vanishes");
        out.pivot = md.min_indices[0];
        out.q = P.q;
        GaussRat lead = out.q[out.pivot];
        for (int i = 0; i < n; ++i) out.q[i] = out.q[i] / lead;
    } else {
        double mx = 0;
        for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(P.c[i]));
        for (int i : md.min_indices)
            if (std::abs(P.c[i]) <= 1e-12 * mx)
                throw ForbiddenPointError(
                    P, "X_" + std::to_string(i),
                    "point is numerically forbidden: coordinate " + std::to_string(i) +
                        " attains the minimal exponent and vanishes");
        out.pivot = md.min_indices[0];
        out.c = P.to_complex();
        out.c /= out.c[out.pivot];
    }
    return out;
}

bool order_exact_in_qi(int m) { return m == 1 || m == 2 || m == 4; }

std::vector<GaussRat> roots_of_unity_exact(int m) {
    switch (m) {
        case 1: return {GaussRat(1)};
        case 2: return {GaussRat(1), GaussRat(-1)};
        case 4: return {GaussRat(1), GaussRat::i(), GaussRat(-1), -GaussRat::i()};
        default: throw std::logic_error("roots_of_unity_exact: order not in Q(i)");
    }
}

std::vector<std::complex<double>> roots_of_unity_numeric(int m) {
    std::vector<std::complex<double>> out;
    for (int j = 0; j < m; ++j) {
        double a = 2.0 * M_PI * j / m;
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

}  // namespace

std::vector<Poly> monomial_apolar_bundles(const Poly& M, const ProjPoint& P) {
    MonomialData md = monomial_data(M);
    if (!P.exact)
        throw std::invalid_argument("monomial_apolar_bundles: exact point required");
    PivotedPoint pp = normalize_against_pivot(md, P);
    int n = static_cast<int>(md.exponents.size());
    std::vector<Poly> out;
    for (int i = 0; i < n; ++i) {
        if (i == pp.pivot) continue;
        int di = md.exponents[i];
        Poly Xi = Poly::variable(n, i), X0 = Poly::variable(n, pp.pivot);
        if (!pp.q[i].is_zero()) {
            out.push_back(Xi.pow(di + 1) - pow(pp.q[i], di + 1) * X0.pow(di + 1));
        } else {
            out.push_back(Xi.pow(di + 1) - Xi * X0.pow(di));
        }
    }
    return out;
}

std::pair<PointSet, Decomposition> monomial_decompose_through_point(const Poly& M,
                                                                    const ProjPoint& P,
                                                                    double tol) {
    MonomialData md = monomial_data(M);
    PivotedPoint pp = normalize_against_pivot(md, P);
    int n = static_cast<int>(md.exponents.size());

    // Decide whether every coordinate set stays inside Q(i).
    bool exact = pp.exact;
    if (exact) {
        for (int i = 0; i < n && exact; ++i) {
            if (i == pp.pivot) continue;
            int di = md.exponents[i];
            if (!pp.q[i].is_zero())
                exact = order_exact_in_qi(di + 1);
            else
                exact = di == 1 || order_exact_in_qi(di);
        }
    }

    // Per-coordinate value sets; the pivot coordinate is the constant 1.
    PointSet pts;
    pts.exact = exact;
    if (exact) {
        std::vector<std::vector<GaussRat>> values(n);
        for (int i = 0; i < n; ++i) {
            if (i == pp.pivot) {
                values[i] = {GaussRat(1)};
                continue;
            }
            int di = md.exponents[i];
            if (!pp.q[i].is_zero()) {
                for (const auto& xi : roots_of_unity_exact(di + 1))
                    values[i].push_back(xi * pp.q[i]);
            } else {
                if (di == 1) {
                    values[i] = {GaussRat(1), GaussRat(0)};
                } else {
                    values[i] = roots_of_unity_exact(di);
                    values[i].push_back(GaussRat(0));
                }
            }
        }
        std::vector<int> idx(n, 0);
        while (true) {
            VectorXq v(n);
            for (int i = 0; i < n; ++i) v[i] = values[i][idx[i]];
            pts.points.push_back(ProjPoint::from_exact(std::move(v)));
            int c = n - 1;
            while (c >= 0) {
                if (++idx[c] < static_cast<int>(values[c].size())) break;
                idx[c] = 0;
                --c;
            }
            if (c < 0) break;
        }
    } else {
        Eigen::VectorXcd base = pp.exact ? [&] {
            Eigen::VectorXcd v(n);
            for (int i = 0; i < n; ++i) v[i] = to_complex(pp.q[i]);
            return v;
        }()
                                         : pp.c;
        std::vector<std::vector<std::complex<double>>> values(n);
        for (int i = 0; i < n; ++i) {
            if (i == pp.pivot) {
                values[i] = {1.0};
                continue;
            }
            int di = md.exponents[i];
            if (std::abs(base[i]) > 1e-12) {
                for (const auto& xi : roots_of_unity_numeric(di + 1))
                    values[i].push_back(xi * base[i]);
            } else {
                values[i] = roots_of_unity_numeric(di);
                values[i].push_back(0.0);
            }
        }
        std::vector<int> idx(n, 0);
        while (true) {
            Eigen::VectorXcd v(n);
            for (int i = 0; i < n; ++i) v[i] = values[i][idx[i]];
            pts.points.push_back(ProjPoint::from_numeric(std::move(v)));
            int c = n - 1;
            while (c >= 0) {
                if (++idx[c] < static_cast<int>(values[c].size())) break;
                idx[c] = 0;
                --c;
            }
            if (c < 0) break;
        }
    }

    if (static_cast<int>(pts.points.size()) != md.rank)
        throw std::logic_error("monomial decomposition: wrong point count");
    Decomposition dec = decomposition_from_points(M, pts, tol);
    return {std::move(pts), std::move(dec)};
}

}  // namespace waring
