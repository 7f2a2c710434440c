#include "waring/planecubics.hpp"

#include "waring/apolarity.hpp"
#include "waring/binaryforms.hpp"
#include "waring/bivargcd.hpp"
#include "waring/monomials.hpp"
#include "waring/oracle.hpp"
#include "waring/splitforms.hpp"

namespace waring {

namespace {

void require_ternary_cubic(const Poly& F, const char* who) {
    require_homogeneous(F, who);
    if (F.nvars() != 3 || F.degree() != 3)
        throw std::invalid_argument(std::string(who) + ": ternary cubic required");
}

MatrixXq conic_matrix(const Poly& Q) {
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
        if (i == j)
            A(i, i) = c;
        else {
            A(i, j) = c * half;
            A(j, i) = c * half;
        }
    }
    return A;
}

GaussRat det3(const MatrixXq& M) { return det(M); }

/// determinant of a 3x3 matrix with polynomial entries (cofactor expansion)
Poly det3_poly(const std::array<Poly, 9>& m) {
    auto at = [&](int r, int c) -> const Poly& { return m[3 * r + c]; };
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

/// coefficients of det(s M1 + t M2) as a binary cubic (b0 s^3 + ... + b3 t^3),
/// via multilinearity in the columns
template <class Mat, class Scal>
std::array<Scal, 4> pencil_det_coeffs(const Mat& M1, const Mat& M2,
                                      Scal (*det_fn)(const Mat&)) {
    std::array<Scal, 4> b;
    for (int k = 0; k <= 3; ++k) {
        // sum over column choices with k columns from M2
        bool first = true;
        Scal total = det_fn(M1);  // placeholder init; overwritten below
        for (int mask = 0; mask < 8; ++mask) {
            int cnt = ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
            if (cnt != k) continue;
            Mat M = M1;
            for (int c = 0; c < 3; ++c)
                if ((mask >> c) & 1) M.col(c) = M2.col(c);
            Scal d = det_fn(M);
            if (first) {
                total = d;
                first = false;
            } else {
                total = total + d;
            }
        }
        b[k] = total;
    }
    return b;  // det(sM1+tM2) = sum b[k] s^(3-k) t^k
}

/// the pinned degree-3 discriminant formula, over any commutative arguments
template <class T>
T cubic_disc_formula(const T& a, const T& b, const T& c, const T& d) {
    return GaussRat(18) * a * b * c * d - GaussRat(4) * b * b * b * d + b * b * c * c -
           GaussRat(4) * a * c * c * c - GaussRat(27) * a * a * d * d;
}

Poly cubic_disc_formula_poly(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
    return GaussRat(18) * a * b * c * d - GaussRat(4) * b * b * b * d + b * b * c * c -
           GaussRat(4) * a * c * c * c - GaussRat(27) * a * a * d * d;
}

/// complete a nonzero column to an invertible 3x3 matrix, greedily with
/// standard basis vectors; the given vector becomes column `pos`.
MatrixXq complete_to_basis(const VectorXq& v, int pos) {
    int n = static_cast<int>(v.size());
    MatrixXq C(n, n);
    C.setConstant(GaussRat(0));
    C.col(pos) = v;
    int placed = 0;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c)
        if (c != pos) cols.push_back(c);
    for (int cand = 0; cand < n && placed < n - 1; ++cand) {
        C(cand, cols[placed]) = GaussRat(1);
        MatrixXq probe = C;
        if (rank(probe) == placed + 2) {
            ++placed;
        } else {
            C(cand, cols[placed]) = GaussRat(0);
        }
    }
    if (placed != n - 1) throw std::logic_error("complete_to_basis failed");
    return C;
}

}  // namespace

// --- singular points ---------------------------------------------------------

namespace {

/// resultant in y of two bivariate polynomials, as a UPoly in x, via a
/// Sylvester matrix with UPoly entries evaluated by interpolation in x.
UPoly resultant_y(const Poly& a, const Poly& b) {
    XYPoly A = xy_from_poly(a), B = xy_from_poly(b);
    if (xy_zero(A) || xy_zero(B)) return {};
    // treat as polynomials in y with coefficients in x
    auto ydeg = [](const Poly& p) {
        int d = 0;
        for (const auto& [e, c] : p.terms()) d = std::max(d, e[1]);
        return d;
    };
    int m = ydeg(a), n = ydeg(b);
    if (m == 0 && n == 0) return {GaussRat(1)};
    auto xdeg = [](const Poly& p) {
        int d = 0;
        for (const auto& [e, c] : p.terms()) d = std::max(d, e[0]);
        return d;
    };
    int bound = n * xdeg(a) + m * xdeg(b) + 1;
    // sample at x = 0..bound and interpolate
    MatrixXq V(bound + 1, bound + 1);
    VectorXq rhs(bound + 1);
    for (int s = 0; s <= bound; ++s) {
        GaussRat x0(Rat(static_cast<long>(s)));
        // univariate coefficient lists in y at x = x0
        UPoly ua(m + 1, GaussRat(0)), ub(n + 1, GaussRat(0));
        for (const auto& [e, c] : a.terms()) ua[e[1]] += c * pow(x0, e[0]);
        for (const auto& [e, c] : b.terms()) ub[e[1]] += c * pow(x0, e[0]);
        // Sylvester determinant with formal degrees m, n
        MatrixXq S(m + n, m + n);
        S.setConstant(GaussRat(0));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k <= m; ++k) S(r, r + k) = ua[m - k];
        for (int r = 0; r < m; ++r)
            for (int k = 0; k <= n; ++k) S(n + r, r + k) = ub[n - k];
        rhs[s] = (m + n == 0) ? GaussRat(1) : det(S);
        GaussRat p(1);
        for (int j = 0; j <= bound; ++j) {
            V(s, j) = p;
            p *= x0;
        }
    }
    auto sol = solve_exact(V, rhs);
    if (!sol) throw std::logic_error("resultant_y: interpolation failed");
    UPoly out(sol->size());
    for (int i = 0; i < sol->size(); ++i) out[i] = (*sol)[i];
    utrim(out);
    return out;
}

/// exact + numeric roots of a UPoly; exact ones split off first
struct UPolyRoots {
    std::vector<GaussRat> exact;
    std::vector<std::complex<double>> numeric;  // roots of the unsplit part
    bool complete = true;                        // no numeric part
};

UPolyRoots upoly_roots(const UPoly& u, double tol) {
    UPolyRoots out;
    UPoly rem = u;
    utrim(rem);
    if (rem.empty()) throw std::invalid_argument("upoly_roots: zero polynomial");
    // homogenize into a binary form with x as the variable: coeff of x^k is rem[k]
    int d = udeg(rem);
    if (d == 0) return out;
    Poly g(2);
    for (int k = 0; k <= d; ++k) g.add_term({k, d - k}, rem[k]);
    auto er = roots_binary_exact(g);
    for (auto& [p, mult] : er.roots) {
        if (p.q[1].is_zero()) continue;  // root at infinity: degree drop only
        out.exact.push_back(p.q[0] / p.q[1]);
    }
    if (er.remainder.degree() > 0) {
        out.complete = false;
        for (const auto& rc : roots_binary_numeric(er.remainder, tol))
            if (!rc.at_infinity) out.numeric.push_back(rc.value);
    }
    return out;
}

}  // namespace

std::vector<ProjPoint> cubic_singular_points(const Poly& F, bool& certified,
                                             double tol) {
    require_ternary_cubic(F, "cubic_singular_points");
    certified = true;
    Poly Fx = F.derivative(0), Fy = F.derivative(1), Fz = F.derivative(2);
    std::vector<ProjPoint> found;
    auto push_unique = [&](const ProjPoint& p) {
        for (const auto& q : found) {
            if (p.exact && q.exact && p == q) return;
            if (!p.exact || !q.exact) {
                if ((p.to_complex() - q.to_complex()).norm() < tol) return;
            }
        }
        found.push_back(p);
    };
    auto is_singular_exact = [&](const VectorXq& v) {
        std::vector<GaussRat> pt(v.data(), v.data() + 3);
        return Fx.eval(pt).is_zero() && Fy.eval(pt).is_zero() && Fz.eval(pt).is_zero();
    };

    // affine chart z = 1
    auto deh = [](const Poly& p) {
        Poly q(2);
        for (const auto& [e, c] : p.terms()) q.add_term({e[0], e[1]}, c);
        return q;
    };
    Poly p = deh(Fx), q = deh(Fy), r = deh(Fz);
    UPoly R1 = resultant_y(p, q), R2 = resultant_y(p, r), R3 = resultant_y(q, r);
    UPoly G = ugcd(ugcd(R1, R2), R3);
    if (G.empty()) {
        // all pairwise resultants vanished: shared curve between partial pairs;
        // fall back to the common bivariate factor route
        Poly shared = bivariate_gcd(bivariate_gcd(p, q), r);
        if (!shared.is_zero() && shared.degree() > 0) {
            // common zero curve of all three affine partials: cannot happen for
            // a cubic with three essential variables
            throw std::logic_error("cubic_singular_points: non-isolated singular locus");
        }
        G = {GaussRat(1)};
    }
    utrim(G);
    if (udeg(G) >= 1) {
        auto roots = upoly_roots(G, tol);
        for (const auto& x0 : roots.exact) {
            // common y-roots of the three partials at x = x0
            auto subst = [&](const Poly& f) {
                UPoly u;
                for (const auto& [e, c] : f.terms()) {
                    if (u.size() <= static_cast<std::size_t>(e[1]))
                        u.resize(e[1] + 1, GaussRat(0));
                    u[e[1]] += c * pow(x0, e[0]);
                }
                utrim(u);
                return u;
            };
            UPoly H = ugcd(ugcd(subst(p), subst(q)), subst(r));
            if (H.empty() || udeg(H) < 1) continue;
            auto yroots = upoly_roots(H, tol);
            if (!yroots.complete) certified = false;
            for (const auto& y0 : yroots.exact) {
                VectorXq v(3);
                v << x0, y0, GaussRat(1);
                if (is_singular_exact(v)) push_unique(ProjPoint::from_exact(std::move(v)));
            }
            for (const auto& y0 : yroots.numeric) {
                Eigen::VectorXcd v(3);
                v << to_complex(x0), y0, 1.0;
                certified = false;
                push_unique(ProjPoint::from_numeric(std::move(v)));
            }
        }
        if (!roots.complete) {
            certified = false;
            for (const auto& x0 : roots.numeric) {
                // numeric y candidates: roots of p(x0, y), filtered by q and r
                CPoly pc = poly_to<std::complex<double>>(p);
                CPoly qc = poly_to<std::complex<double>>(q);
                CPoly rc = poly_to<std::complex<double>>(r);
                auto ysub = [&](const CPoly& f) {
                    std::vector<std::complex<double>> u;
                    for (const auto& [e, c] : f.terms()) {
                        if (u.size() <= static_cast<std::size_t>(e[1])) u.resize(e[1] + 1, 0.0);
                        u[e[1]] += c * std::pow(std::complex<double>(x0), e[0]);
                    }
                    while (!u.empty() && std::abs(u.back()) < 1e-13) u.pop_back();
                    std::reverse(u.begin(), u.end());  // descending for roots_from_coeffs
                    return u;
                };
                auto u = ysub(pc);
                if (u.size() <= 1) continue;
                for (const auto& rcl : roots_from_coeffs(u, tol)) {
                    if (rcl.at_infinity) continue;
                    std::complex<double> y0 = rcl.value;
                    std::vector<std::complex<double>> pt{x0, y0, 1.0};
                    if (std::abs(qc.eval(pt)) < tol && std::abs(rc.eval(pt)) < tol) {
                        Eigen::VectorXcd v(3);
                        v << x0, y0, 1.0;
                        push_unique(ProjPoint::from_numeric(std::move(v)));
                    }
                }
            }
        }
    }

    // points at infinity: z = 0
    auto at_inf = [](const Poly& f) {
        Poly g(2);
        for (const auto& [e, c] : f.terms())
            if (e[2] == 0) g.add_term({e[0], e[1]}, c);
        return g;
    };
    Poly gx = at_inf(Fx), gy = at_inf(Fy), gz = at_inf(Fz);
    Poly ginf = binary_gcd(binary_gcd(gx, gy), gz);
    if (!ginf.is_zero() && ginf.degree() >= 1) {
        auto er = roots_binary_exact(ginf);
        for (auto& [pt, mult] : er.roots) {
            VectorXq v(3);
            v << pt.q[0], pt.q[1], GaussRat(0);
            if (is_singular_exact(v)) push_unique(ProjPoint::from_exact(std::move(v)));
        }
        if (er.remainder.degree() > 0) {
            certified = false;
            for (const auto& rcl : roots_binary_numeric(er.remainder, tol)) {
                Eigen::VectorXcd v(3);
                if (rcl.at_infinity)
                    v << 1.0, 0.0, 0.0;
                else
                    v << rcl.value, 1.0, 0.0;
                push_unique(ProjPoint::from_numeric(std::move(v)));
            }
        }
    }
    return found;
}

// --- classification ----------------------------------------------------------

CubicClassification classify_cubic(const Poly& F) {
    require_ternary_cubic(F, "classify_cubic");
    CubicClassification cc;
    EssentialVariables ev = essential_variables(F);
    cc.essential = ev.count;

    if (ev.count == 1) {
        cc.type = 1;
        cc.rank = 1;
        return cc;
    }
    if (ev.count == 2) {
        int r = binary_rank(ev.restricted);
        cc.type = r == 2 ? 2 : 3;
        cc.rank = r;
        return cc;
    }

    auto coeffs = cubic_coefficient_array(F);
    cc.S = aronhold_S(coeffs);
    cc.T = aronhold_T(coeffs);
    GaussRat disc = cc.T * cc.T + cc.S * cc.S * cc.S;

    if (!disc.is_zero()) {
        cc.type = cc.S.is_zero() ? 4 : 9;
        cc.rank = cc.S.is_zero() ? 3 : 4;
        return cc;
    }

    bool cert = true;
    cc.singular_points = cubic_singular_points(F, cert);
    cc.certified = cert;
    int count = static_cast<int>(cc.singular_points.size());
    if (count == 3) {
        cc.type = 5;
        cc.rank = 4;
        return cc;
    }
    if (count == 2) {
        cc.type = 6;
        cc.rank = 4;
        return cc;
    }
    if (count != 1) {
        throw std::logic_error("classify_cubic: singular cubic with " +
                               std::to_string(count) + " singular points found");
    }

    const ProjPoint& P = cc.singular_points[0];
    if (!P.exact) {
        cc.certified = false;
        // tangent-cone analysis needs exact data; report the best guess
        cc.type = 0;
        cc.rank = 4;
        cc.note = "irrational singular point: type 7/8/10 not certified";
        return cc;
    }
    cc.to_singular = complete_to_basis(P.q, 2);
    Poly G = compose_linear(F, cc.to_singular);
    // G = z f2(x,y) + f3(x,y); no z^3 or z^2-terms at a singular [0:0:1]
    Poly f2(2), f3(2);
    for (const auto& [e, c] : G.terms()) {
        if (e[2] >= 2) throw std::logic_error("classify_cubic: point is not singular");
        if (e[2] == 1)
            f2.add_term({e[0], e[1]}, c);
        else
            f3.add_term({e[0], e[1]}, c);
    }
    cc.f2 = f2;
    cc.f3 = f3;
    if (f2.is_zero()) throw std::logic_error("classify_cubic: degenerate tangent cone");
    auto sf = squarefree_binary(f2);
    if (sf.squarefree) {
        cc.type = 7;
        cc.rank = 4;
        return cc;
    }
    // f2 = const * l^2
    Poly l = sf.squarefree_part;
    if (l.degree() != 1 || f3.is_zero())
        throw std::logic_error("classify_cubic: unexpected tangent cone");
    if (divides(l, f3)) {
        cc.type = 10;
        cc.rank = 5;
    } else {
        cc.type = 8;
        cc.rank = 4;
    }
    return cc;
}

// --- nets of conics ----------------------------------------------------------

Poly delta_cubic(const std::vector<Poly>& conics) {
    if (conics.size() != 3)
        throw std::invalid_argument("delta_cubic: three conics required");
    std::vector<MatrixXq> mats;
    for (const auto& c : conics) {
        if (c.nvars() != 3 || c.degree() != 2)
            throw std::invalid_argument("delta_cubic: ternary conics required");
        mats.push_back(conic_matrix(c));
    }
    std::array<Poly, 9> entries;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Poly e(3);
            for (int k = 0; k < 3; ++k) {
                ExpVec ev(3, 0);
                ev[k] = 1;
                e.add_term(ev, mats[k](r, c));
            }
            entries[3 * r + c] = e;
        }
    return det3_poly(entries);
}

NetOfConics net_of_conics(const Poly& F) {
    require_ternary_cubic(F, "net_of_conics");
    NetOfConics net;
    net.conics = rows_as_polys(kernel_basis(MatrixXq(catalecticant(F, 2))), 3, 2);
    if (net.conics.size() != 3)
        throw std::invalid_argument("net_of_conics: dim (F^perp)_2 != 3");
    for (const auto& c : net.conics) net.mats.push_back(conic_matrix(c));
    net.delta = delta_cubic(net.conics);
    if (net.delta.is_zero())
        throw std::logic_error("net_of_conics: zero reducible-conic cubic");
    return net;
}

Membership membership_rank4(const Poly& F, const ProjPoint& P) {
    if (!P.exact) throw std::invalid_argument("membership_rank4: exact point required");
    NetOfConics net = net_of_conics(F);
    std::vector<GaussRat> pt(P.q.data(), P.q.data() + 3);
    MatrixXq v(1, 3);
    for (int i = 0; i < 3; ++i) v(0, i) = net.conics[i].eval(pt);
    bool allzero = v(0, 0).is_zero() && v(0, 1).is_zero() && v(0, 2).is_zero();
    if (allzero) return Membership::Forbidden;
    MatrixXq K = kernel_basis(v);  // two rows spanning the pencil through P
    MatrixXq M1 = K(0, 0) * net.mats[0] + K(0, 1) * net.mats[1] + K(0, 2) * net.mats[2];
    MatrixXq M2 = K(1, 0) * net.mats[0] + K(1, 1) * net.mats[1] + K(1, 2) * net.mats[2];
    auto b = pencil_det_coeffs<MatrixXq, GaussRat>(M1, M2, det3);
    bool zero = b[0].is_zero() && b[1].is_zero() && b[2].is_zero() && b[3].is_zero();
    if (zero) return Membership::Forbidden;  // the whole pencil is reducible
    GaussRat disc = cubic_disc_formula<GaussRat>(b[0], b[1], b[2], b[3]);
    return disc.is_zero() ? Membership::Forbidden : Membership::InWaring;
}

ForbiddenEquation forbidden_equation_rank4(const Poly& F) {
    NetOfConics net = net_of_conics(F);
    auto chart_disc = [&](int j) -> Poly {
        int k = (j + 1) % 3, l = (j + 2) % 3;
        // line C1 a + C2 b + C3 c = 0 on the chart C_j != 0, spanned by
        // u (u_j = -C_k, u_k = C_j) and v (v_j = -C_l, v_l = C_j)
        std::array<Poly, 3> u{Poly(3), Poly(3), Poly(3)}, w{Poly(3), Poly(3), Poly(3)};
        u[j] = -net.conics[k];
        u[k] = net.conics[j];
        w[j] = -net.conics[l];
        w[l] = net.conics[j];
        std::array<Poly, 9> M1, M2;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Poly e1(3), e2(3);
                for (int t = 0; t < 3; ++t) {
                    if (!u[t].is_zero()) e1 += net.mats[t](r, c) * u[t];
                    if (!w[t].is_zero()) e2 += net.mats[t](r, c) * w[t];
                }
                M1[3 * r + c] = e1;
                M2[3 * r + c] = e2;
            }
        // b(s,t) = det(s M1 + t M2): coefficients by column multilinearity
        std::array<Poly, 4> b{Poly(3), Poly(3), Poly(3), Poly(3)};
        for (int mask = 0; mask < 8; ++mask) {
            int cnt = ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
            std::array<Poly, 9> M;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    M[3 * r + c] = ((mask >> c) & 1) ? M2[3 * r + c] : M1[3 * r + c];
            b[cnt] += det3_poly(M);
        }
        return cubic_disc_formula_poly(b[0], b[1], b[2], b[3]);
    };

    ForbiddenEquation out;
    Poly D = chart_disc(0);
    out.chart_disc = D;
    if (D.is_zero())
        throw std::logic_error("forbidden_equation_rank4: chart discriminant vanished");

    auto strip_chart = [&](Poly E, const Poly& chart, int* mult) -> Poly {
        while (true) {
            Poly g = ternary_gcd(E, chart);
            if (g.degree() <= 0) break;
            E = exact_div(E, g);
            if (mult && normalize_poly(g) == normalize_poly(chart)) *mult += 1;
        }
        return E;
    };
    Poly E0 = strip_chart(D, net.conics[0], &out.chart_factor_multiplicity);
    E0 = squarefree_ternary(E0);

    // patch components of F_F inside V(C1) from the other charts
    Poly patch = Poly::constant(3, GaussRat(1));
    Poly D1 = chart_disc(1);
    if (!D1.is_zero()) {
        Poly E1 = squarefree_ternary(strip_chart(D1, net.conics[1], nullptr));
        Poly g = ternary_gcd(E1, net.conics[0]);
        if (g.degree() >= 1) patch = patch * g;
    }
    Poly c12 = ternary_gcd(net.conics[0], net.conics[1]);
    if (c12.degree() >= 1) {
        Poly D2 = chart_disc(2);
        if (!D2.is_zero()) {
            Poly E2 = squarefree_ternary(strip_chart(D2, net.conics[2], nullptr));
            Poly g = ternary_gcd(E2, c12);
            if (g.degree() >= 1) patch = patch * g;
        }
    }
    out.reduced = normalize_poly(squarefree_ternary(E0 * patch));
    return out;
}

// --- per-type loci -----------------------------------------------------------

LocusDescription locus_rank5(const Poly& F) {
    CubicClassification cc = classify_cubic(F);
    if (cc.type != 10)
        throw std::invalid_argument("locus_rank5: type (10) cubic required");
    // the line component of F = l * (conic tangent to l), in input coordinates
    Poly lt = squarefree_binary(cc.f2).squarefree_part;  // l in the moved frame
    VectorXq lv(3);
    ExpVec ex(2, 0);
    ex[0] = 1;
    lv[0] = lt.coeff(ex);
    ex[0] = 0;
    ex[1] = 1;
    lv[1] = lt.coeff(ex);
    lv[2] = GaussRat(0);
    auto inv = inverse(cc.to_singular);
    if (!inv) throw std::logic_error("locus_rank5: singular change");
    VectorXq coeffs = inv->transpose() * lv;
    // sanity: the line divides F
    Poly line = Poly::linear_form(coeffs);
    if (!divides(line, F)) throw std::logic_error("locus_rank5: line extraction failed");
    auto loc = LocusDescription::finite(LocusDescription::Which::Forbidden,
                                        {ProjPoint::from_exact(coeffs)});
    loc.note = "the point dual to the line component of F";
    return loc;
}

namespace {

/// exact reduction of a cusp (type 8) to c*y^2*z + a*x^3: returns the change
/// x = C y and the two scalars
struct CuspNormalForm {
    MatrixXq change;
    GaussRat cube_coeff, cone_coeff;
};

CuspNormalForm cusp_normal_form(const Poly& F, const CubicClassification& cc) {
    // start from the classification frame: G = z f2 + f3, f2 = const * l^2
    MatrixXq C = cc.to_singular;
    Poly G = compose_linear(F, C);
    auto sf = squarefree_binary(cc.f2);
    Poly l = sf.squarefree_part;  // linear in (x, y)
    // move l to the coordinate y: columns map new (x', y') to old (x, y)
    GaussRat a = l.coeff({1, 0}), b = l.coeff({0, 1});
    MatrixXq B(3, 3);
    B.setConstant(GaussRat(0));
    B(2, 2) = GaussRat(1);
    // need l(B(x',y')) = y': choose B as inverse of [[u0,u1],[a,b]] rows
    MatrixXq rows(2, 2);
    if (!b.is_zero()) {
        rows << GaussRat(1), GaussRat(0), a, b;
    } else {
        rows << GaussRat(0), GaussRat(1), a, b;
    }
    auto rinv = inverse(rows);
    if (!rinv) throw std::logic_error("cusp_normal_form: bad tangent line");
    B.topLeftCorner(2, 2) = *rinv;
    C = C * B;
    G = compose_linear(F, C);

    for (int guard = 0; guard < 8; ++guard) {
        // G = c y^2 z + f3(x, y) expected; absorb y^2-divisible parts of f3
        GaussRat c = G.coeff({0, 2, 1});
        if (c.is_zero()) throw std::logic_error("cusp_normal_form: lost tangent cone");
        GaussRat cxy2 = G.coeff({1, 2, 0});
        GaussRat cy3 = G.coeff({0, 3, 0});
        if (!cxy2.is_zero() || !cy3.is_zero()) {
            // z -> z - (cxy2 x + cy3 y)/c
            MatrixXq Sh = MatrixXq::Identity(3, 3);
            Sh(2, 0) = -cxy2 / c;
            Sh(2, 1) = -cy3 / c;
            C = C * Sh;
            G = compose_linear(F, C);
            continue;
        }
        GaussRat a3 = G.coeff({3, 0, 0});
        GaussRat a2 = G.coeff({2, 1, 0});
        if (a3.is_zero()) throw std::logic_error("cusp_normal_form: not a cusp");
        if (!a2.is_zero()) {
            // x -> x - a2/(3 a3) y
            MatrixXq Sh = MatrixXq::Identity(3, 3);
            Sh(0, 1) = -a2 / (GaussRat(3) * a3);
            C = C * Sh;
            G = compose_linear(F, C);
            continue;
        }
        // now G should be a3 x^3 + c y^2 z exactly
        Poly expect = a3 * Poly::variable(3, 0).pow(3) +
                      c * Poly::variable(3, 1).pow(2) * Poly::variable(3, 2);
        if (G == expect) {
            CuspNormalForm nf;
            nf.change = C;
            nf.cube_coeff = a3;
            nf.cone_coeff = c;
            return nf;
        }
        throw std::logic_error("cusp_normal_form: residual terms");
    }
    throw std::logic_error("cusp_normal_form: did not converge");
}

ProjPoint map_dual_point(const MatrixXq& change_inv_T, const ProjPoint& p) {
    return ProjPoint::from_exact(VectorXq(change_inv_T * p.q));
}

}  // namespace

LocusDescription cubic_locus_by_type(const Poly& F) {
    CubicClassification cc = classify_cubic(F);
    using W = LocusDescription::Which;

    if (cc.type == 1) {
        EssentialVariables ev = essential_variables(F);
        LocusDescription loc;
        loc.kind = LocusDescription::Kind::All;
        loc.which = W::Waring;
        loc.note = "triple line: rank one";
        return loc;
    }
    if (cc.type == 2 || cc.type == 3) {
        EssentialVariables ev = essential_variables(F);
        auto loc = binary_locus(ev.restricted);
        loc.note += " (in the essential P^1)";
        return loc;
    }
    if (cc.type == 5) {
        // three singular points move to the coordinate triangle; F becomes xyz
        if (cc.singular_points.size() != 3 || !cc.singular_points[0].exact ||
            !cc.singular_points[1].exact || !cc.singular_points[2].exact) {
            LocusDescription loc;
            loc.certified = false;
            loc.note = "type (5) with irrational singular points: no exact locus";
            return loc;
        }
        MatrixXq C(3, 3);
        for (int j = 0; j < 3; ++j) C.col(j) = cc.singular_points[j].q;
        Poly G = compose_linear(F, C);
        if (G.term_count() != 1)
            throw std::logic_error("cubic_locus_by_type: type 5 normalization failed");
        LocusDescription inner = monomial_forbidden(G);
        // map V(X Y Z) back: dual equations pull back through C^T
        LocusDescription loc;
        loc.kind = LocusDescription::Kind::Hypersurface;
        loc.which = W::Forbidden;
        for (const auto& eq : inner.equations)
            loc.equations.push_back(normalize_poly(compose_linear(eq, MatrixXq(C.transpose()))));
        loc.note = "union of the duals of the three singular points";
        return loc;
    }
    if (cc.type == 4) {
        // Fermat orbit; without an exact normal form the witness is numeric
        FitConfig cfg;
        cfg.seed = 7;
        auto fit3 = oracle_fit(F, 3, cfg);
        LocusDescription loc;
        loc.kind = LocusDescription::Kind::FinitePoints;
        loc.which = W::Waring;
        loc.certified = false;
        if (fit3.residual < 1e-9) {
            for (const auto& t : fit3.decomposition.num_terms)
                loc.points.push_back(ProjPoint::from_numeric(t.L));
        }
        loc.note = "Fermat orbit: three dual points (numeric witness, not certified)";
        return loc;
    }
    if (cc.type == 6 || cc.type == 7 || cc.type == 9) {
        auto eq = forbidden_equation_rank4(F);
        auto loc = LocusDescription::hypersurface(W::Forbidden, {eq.reduced});
        loc.note = "reduced chart discriminant of the net of conics";
        return loc;
    }
    if (cc.type == 8) {
        auto nf = cusp_normal_form(F, cc);
        auto inv = inverse(nf.change);
        if (!inv) throw std::logic_error("cubic_locus_by_type: singular change");
        MatrixXq Minv = inv->transpose();
        // W = {dual of x} union {line of duals of (y,z)-forms minus dual of y}
        LocusDescription loc;
        loc.kind = LocusDescription::Kind::Union;
        loc.which = W::Waring;
        LocusDescription comp1 = LocusDescription::finite(
            W::Waring, {map_dual_point(Minv, exact_point({GaussRat(1), GaussRat(0), GaussRat(0)}))});
        comp1.note = "from the cube block";
        LocusDescription comp2;
        comp2.kind = LocusDescription::Kind::LinesMinusPoint;
        comp2.which = W::Waring;
        comp2.lines.push_back(
            {map_dual_point(Minv, exact_point({GaussRat(0), GaussRat(1), GaussRat(0)})),
             map_dual_point(Minv, exact_point({GaussRat(0), GaussRat(0), GaussRat(1)}))});
        comp2.points.push_back(
            map_dual_point(Minv, exact_point({GaussRat(0), GaussRat(1), GaussRat(0)})));
        comp2.note = "from the y^2 z block: its dual line minus the dual of y";
        loc.components.push_back(std::move(comp1));
        loc.components.push_back(std::move(comp2));
        loc.note = "cusp: union of the block loci";
        return loc;
    }
    if (cc.type == 10) return locus_rank5(F);

    LocusDescription loc;
    loc.certified = false;
    loc.note = "not certified: " + cc.note;
    return loc;
}

Membership cubic_membership(const Poly& F, const ProjPoint& P) {
    if (!P.exact) throw std::invalid_argument("cubic_membership: exact point required");
    CubicClassification cc = classify_cubic(F);
    std::vector<GaussRat> pt(P.q.data(), P.q.data() + 3);

    if (cc.type == 6 || cc.type == 7 || cc.type == 9) return membership_rank4(F, P);
    if (cc.type == 10) {
        LocusDescription loc = locus_rank5(F);
        return P == loc.points[0] ? Membership::Forbidden : Membership::InWaring;
    }
    if (cc.type == 1 || cc.type == 2 || cc.type == 3) {
        EssentialVariables ev = essential_variables(F);
        VectorXq w = ev.change.transpose() * P.q;
        for (int i = ev.count; i < 3; ++i)
            if (!w[i].is_zero()) return Membership::Forbidden;
        VectorXq sub(ev.count);
        for (int i = 0; i < ev.count; ++i) sub[i] = w[i];
        if (cc.type == 1) return Membership::InWaring;
        return binary_membership(ev.restricted, ProjPoint::from_exact(std::move(sub)));
    }
    if (cc.type == 5) {
        if (cc.singular_points.size() != 3 || !cc.singular_points[0].exact ||
            !cc.singular_points[1].exact || !cc.singular_points[2].exact)
            throw std::runtime_error("cubic_membership: irrational singular data");
        MatrixXq C(3, 3);
        for (int j = 0; j < 3; ++j) C.col(j) = cc.singular_points[j].q;
        Poly G = compose_linear(F, C);
        VectorXq w = C.transpose() * P.q;
        return monomial_membership(G, ProjPoint::from_exact(std::move(w)));
    }
    if (cc.type == 8) {
        auto nf = cusp_normal_form(F, cc);
        Poly G = compose_linear(F, nf.change);
        VectorXq w = nf.change.transpose() * P.q;
        return split_locus_membership(G, ProjPoint::from_exact(std::move(w)));
    }
    throw std::runtime_error("cubic_membership: no certified membership test (" +
                             std::string(cc.type == 4 ? "Fermat orbit without an exact "
                                                        "normal form" : cc.note) + ")");
}

}  // namespace waring
