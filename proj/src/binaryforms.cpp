#include "waring/binaryforms.hpp"

#include <random>

#include "waring/apolarity.hpp"

namespace waring {

namespace {

std::vector<Poly> slice_basis(const Poly& F, int k) {
    if (k == F.degree() + 1) {
        std::vector<Poly> all;
        for (const auto& e : monomial_basis(2, k))
            all.push_back(Poly::monomial(e, GaussRat(1)));
        return all;
    }
    return rows_as_polys(kernel_basis(MatrixXq(catalecticant(F, k))), 2, k);
}

GaussRat eval_at(const Poly& g, const ProjPoint& P) {
    return g.eval({P.q[0], P.q[1]});
}

}  // namespace

BinaryApolarPair binary_apolar(const Poly& F) {
    require_binary(F, "binary_apolar");
    int d = F.degree();
    if (d < 1) throw std::invalid_argument("binary_apolar: degree >= 1 required");
    BinaryApolarPair pair;
    for (int k = 1; k <= d + 1; ++k) {
        auto basis = slice_basis(F, k);
        if (basis.empty()) continue;
        pair.d1 = k;
        pair.g1 = basis[0];
        if (basis.size() >= 2) {
            // balanced case: d1 == d2
            pair.d2 = k;
            pair.g2 = basis[1];
            if (2 * k != d + 2)
                throw std::logic_error("binary_apolar: unexpected slice dimension");
        } else {
            pair.d2 = d + 2 - pair.d1;
            // g2 completes (F^perp)_{d2} modulo g1 * T_{d2-d1}
            auto big = slice_basis(F, pair.d2);
            auto mults = monomial_basis(2, pair.d2 - pair.d1);
            MatrixXq M(mults.size(), monomial_space_dim(2, pair.d2));
            for (std::size_t r = 0; r < mults.size(); ++r) {
                Poly m = pair.g1 * Poly::monomial(mults[r], GaussRat(1));
                M.row(static_cast<int>(r)) = poly_as_vector(m, pair.d2).transpose();
            }
            auto pivots = rref_in_place(M);
            std::vector<bool> is_pivot(M.cols(), false);
            for (int c : pivots) is_pivot[c] = true;
            for (const auto& cand : big) {
                VectorXq v = poly_as_vector(cand, pair.d2);
                // reduce against the multiples of g1
                for (std::size_t r = 0; r < pivots.size(); ++r) {
                    GaussRat f = v[pivots[r]];
                    if (f.is_zero()) continue;
                    v -= f * M.row(static_cast<int>(r)).transpose();
                }
                bool zero = true;
                for (int i = 0; i < v.size() && zero; ++i) zero = v[i].is_zero();
                if (!zero) {
                    Poly g2(2);
                    auto basis_d2 = monomial_basis(2, pair.d2);
                    for (std::size_t i = 0; i < basis_d2.size(); ++i)
                        g2.add_term(basis_d2[i], v[static_cast<int>(i)]);
                    pair.g2 = normalize_poly(g2);
                    break;
                }
            }
            if (pair.g2.is_zero())
                throw std::logic_error("binary_apolar: no complementary generator");
        }
        break;
    }
    pair.g1_squarefree = squarefree_binary(pair.g1).squarefree;
    pair.rank = (pair.d1 == pair.d2)  ? pair.d1
                : pair.g1_squarefree ? pair.d1
                                     : pair.d2;
    int c = (d + 2) / 2;  // ceil((d+1)/2)
    pair.locus_case = pair.rank < c ? 1 : pair.rank > c ? 2 : 3;
    return pair;
}

int binary_rank(const Poly& F) { return binary_apolar(F).rank; }

Poly pencil_discriminant(const Poly& g1, const Poly& g2) {
    require_binary(g1, "pencil_discriminant");
    require_binary(g2, "pencil_discriminant");
    int k = g1.degree();
    if (g2.degree() != k)
        throw std::invalid_argument("pencil_discriminant: equal degrees required");
    int m = 2 * (k - 1);  // disc is degree 2(k-1) in the form's coefficients
    // sample D(1, t) at t = 0..m and solve the Vandermonde system exactly
    MatrixXq V(m + 1, m + 1);
    VectorXq rhs(m + 1);
    for (int s = 0; s <= m; ++s) {
        GaussRat t(Rat(static_cast<long>(s)));
        Poly member = g1 + t * g2;
        rhs[s] = member.is_zero() ? GaussRat(0) : discriminant_binary(member);
        GaussRat p(1);
        for (int j = 0; j <= m; ++j) {
            V(s, j) = p;
            p *= t;
        }
    }
    auto sol = solve_exact(V, rhs);
    if (!sol) throw std::logic_error("pencil_discriminant: interpolation failed");
    Poly D(2);
    for (int j = 0; j <= m; ++j) D.add_term({m - j, j}, (*sol)[j]);
    // consistency: the pure-beta value must be disc(g2)
    if (!D.is_zero() && !(D.coeff({0, m}) == discriminant_binary(g2)))
        throw std::logic_error("pencil_discriminant: endpoint check failed");
    return D;
}

namespace {

/// Roots of an exact binary form as a locus point list: exact when they split
/// over Q(i), numeric otherwise.
std::pair<std::vector<ProjPoint>, bool> roots_as_points(const Poly& g, double tol) {
    auto er = roots_binary_exact(g);
    if (er.complete) {
        std::vector<ProjPoint> pts;
        for (auto& [p, m] : er.roots) pts.push_back(p);
        return {pts, true};
    }
    std::vector<ProjPoint> pts;
    for (const auto& rc : roots_binary_numeric(g, tol)) {
        Eigen::VectorXcd v(2);
        if (rc.at_infinity)
            v << 1.0, 0.0;
        else
            v << rc.value, 1.0;
        pts.push_back(ProjPoint::from_numeric(std::move(v)));
    }
    return {pts, false};
}

}  // namespace

LocusDescription binary_locus(const Poly& F, double tol) {
    BinaryApolarPair pair = binary_apolar(F);
    int d = F.degree();
    using W = LocusDescription::Which;

    if (pair.locus_case == 1 || (pair.locus_case == 3 && d % 2 == 1)) {
        auto [pts, exact] = roots_as_points(pair.g1, tol);
        auto loc = LocusDescription::finite(W::Waring, std::move(pts), exact);
        loc.note = pair.locus_case == 1 ? "unique decomposition (rank below the middle)"
                                        : "unique decomposition (odd-degree balanced case)";
        return loc;
    }
    if (pair.locus_case == 2) {
        auto [pts, exact] = roots_as_points(pair.g1, tol);
        auto loc = LocusDescription::finite(W::Forbidden, std::move(pts), exact);
        loc.note = "roots of the minimal apolar generator";
        return loc;
    }

    // balanced even case: the forbidden points are the roots of the finitely
    // many non-square-free members of the pencil <g1, g2>.
    Poly D = pencil_discriminant(pair.g1, pair.g2);
    if (D.is_zero())
        throw std::logic_error("binary_locus: pencil discriminant vanished identically");
    bool generic = squarefree_binary(D).squarefree;
    auto [proots, pexact] = roots_as_points(D, tol);
    std::vector<ProjPoint> forbidden;
    bool exact = pexact;
    for (const auto& pr : proots) {
        Poly member(2);
        if (pr.exact) {
            member = pr.q[0] * pair.g1 + pr.q[1] * pair.g2;
            auto sf = squarefree_binary(member);
            if (sf.squarefree || sf.repeated_part.degree() != 1) generic = false;
            auto [mr, mexact] = roots_as_points(member, tol);
            exact = exact && mexact;
            for (auto& p : mr) forbidden.push_back(p);
        } else {
            exact = false;
            // numeric pencil member
            auto c1 = binary_coeffs(pair.g1), c2 = binary_coeffs(pair.g2);
            std::vector<std::complex<double>> mc(c1.size());
            auto pc = pr.to_complex();
            for (std::size_t i = 0; i < c1.size(); ++i)
                mc[i] = pc[0] * to_complex(c1[i]) + pc[1] * to_complex(c2[i]);
            auto roots = roots_from_coeffs(mc, tol);
            int max_mult = 0, dbl = 0;
            for (const auto& rc : roots) {
                max_mult = std::max(max_mult, rc.multiplicity);
                if (rc.multiplicity >= 2) ++dbl;
                Eigen::VectorXcd v(2);
                if (rc.at_infinity)
                    v << 1.0, 0.0;
                else
                    v << rc.value, 1.0;
                forbidden.push_back(ProjPoint::from_numeric(std::move(v)));
            }
            if (max_mult != 2 || dbl != 1) generic = false;
        }
    }
    // deduplicate exact points
    if (exact) {
        std::vector<ProjPoint> uniq;
        for (auto& p : forbidden) {
            bool seen = false;
            for (auto& q : uniq) seen = seen || (p == q);
            if (!seen) uniq.push_back(p);
        }
        if (uniq.size() != forbidden.size()) generic = false;
        forbidden = std::move(uniq);
    }
    auto loc = LocusDescription::finite(W::Forbidden, std::move(forbidden), exact);
    int h = d / 2;
    loc.note = generic ? "generic balanced case: 2h^2 = " + std::to_string(2 * h * h) +
                             " distinct forbidden points"
                       : "degenerate balanced case: forbidden points from non-reduced "
                         "pencil members (count may be below 2h^2)";
    if (!generic) loc.certified = false;
    return loc;
}

Membership binary_membership(const Poly& F, const ProjPoint& P) {
    if (!P.exact) throw std::invalid_argument("binary_membership: exact point required");
    if (P.dim() != 2) throw std::invalid_argument("binary_membership: P^1 point required");
    BinaryApolarPair pair = binary_apolar(F);
    int d = F.degree();
    bool on_g1 = eval_at(pair.g1, P).is_zero();
    if (pair.locus_case == 1 || (pair.locus_case == 3 && d % 2 == 1))
        return on_g1 ? Membership::InWaring : Membership::Forbidden;
    if (pair.locus_case == 2)
        return on_g1 ? Membership::Forbidden : Membership::InWaring;
    // balanced even: the unique pencil member through P decides by
    // square-freeness
    GaussRat a = eval_at(pair.g1, P), b = eval_at(pair.g2, P);
    if (a.is_zero() && b.is_zero())
        throw std::logic_error("binary_membership: base point in a base-point-free pencil");
    Poly member = b * pair.g1 - a * pair.g2;
    return squarefree_binary(member).squarefree ? Membership::InWaring
                                                : Membership::Forbidden;
}

namespace {

Poly random_combination(const std::vector<Poly>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-10, 10);
    Poly h(2);
    for (const auto& b : basis) h += GaussRat(coef(rng)) * b;
    return h;
}

std::pair<PointSet, Decomposition> decompose_via(const Poly& F, const Poly& h,
                                                 double tol) {
    PointSet pts;
    auto [roots, exact] = roots_as_points(h, tol);
    pts.exact = exact;
    pts.points = std::move(roots);
    Decomposition dec = decomposition_from_points(F, pts, tol);
    return {std::move(pts), std::move(dec)};
}

}  // namespace

std::pair<PointSet, Decomposition> binary_decompose(const Poly& F, std::uint64_t seed,
                                                    double tol) {
    BinaryApolarPair pair = binary_apolar(F);
    if (pair.rank == pair.d1 && pair.g1_squarefree)
        return decompose_via(F, pair.g1, tol);
    auto basis = slice_basis(F, pair.rank);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly h = random_combination(basis, rng);
        if (h.is_zero() || h.degree() != pair.rank) continue;
        if (!discriminant_binary(h).is_zero()) return decompose_via(F, h, tol);
    }
    throw std::runtime_error(
        "binary_decompose: no square-free element found in 200 draws (seed " +
        std::to_string(seed) + ")");
}

Decomposition binary_decompose_greedy(const Poly& F,
                                      const std::vector<ProjPoint>& prescribed,
                                      std::uint64_t seed, double tol) {
    BinaryApolarPair pair = binary_apolar(F);
    int d = F.degree();
    int c = (d + 2) / 2;
    if (pair.rank < c)
        throw std::invalid_argument(
            "binary_decompose_greedy: rank below ceil((d+1)/2); the decomposition "
            "is unique, nothing can be prescribed");
    int smax = pair.rank - c;
    if (static_cast<int>(prescribed.size()) > smax)
        throw std::invalid_argument("binary_decompose_greedy: too many prescribed points (" +
                                    std::to_string(prescribed.size()) + " > " +
                                    std::to_string(smax) + ")");
    for (const auto& p : prescribed) {
        if (!p.exact)
            throw std::invalid_argument("binary_decompose_greedy: exact points required");
        if (binary_membership(F, p) == Membership::Forbidden) {
            std::string cert =
                pair.locus_case == 2 ? "vanishing of the minimal apolar generator g1"
                                     : "non-square-free unique pencil member through the point";
            throw ForbiddenPointError(p, cert,
                                      "prescribed point " + p.to_string() +
                                          " is forbidden (" + cert + ")");
        }
    }
    for (std::size_t i = 0; i < prescribed.size(); ++i)
        for (std::size_t j = i + 1; j < prescribed.size(); ++j)
            if (prescribed[i] == prescribed[j])
                throw std::invalid_argument("binary_decompose_greedy: repeated prescribed point");

    auto basis = slice_basis(F, pair.rank);
    // the subspace of (F^perp)_rank vanishing at every prescribed point
    MatrixXq V(prescribed.size(), basis.size());
    for (std::size_t r = 0; r < prescribed.size(); ++r)
        for (std::size_t cidx = 0; cidx < basis.size(); ++cidx)
            V(static_cast<int>(r), static_cast<int>(cidx)) =
                eval_at(basis[cidx], prescribed[r]);
    MatrixXq N = kernel_basis(V);
    if (N.rows() == 0)
        throw std::logic_error("binary_decompose_greedy: empty constrained subspace");
    std::vector<Poly> sub;
    for (int r = 0; r < N.rows(); ++r) {
        Poly h(2);
        for (std::size_t cidx = 0; cidx < basis.size(); ++cidx)
            h += N(r, static_cast<int>(cidx)) * basis[cidx];
        sub.push_back(h);
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly h = random_combination(sub, rng);
        if (h.is_zero() || h.degree() != pair.rank) continue;
        if (discriminant_binary(h).is_zero()) continue;
        return decompose_via(F, h, tol).second;
    }
    throw std::runtime_error(
        "binary_decompose_greedy: no square-free element found in 200 draws (seed " +
        std::to_string(seed) + ")");
}

}  // namespace waring
