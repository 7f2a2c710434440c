#ifndef WARING_BIVARGCD_HPP
#define WARING_BIVARGCD_HPP

#include "waring/binary.hpp"

namespace waring {

// Bivariate gcd over Q(i) by the primitive polynomial remainder sequence,
// with polynomials viewed as univariate in x over Q(i)[y].  Enough machinery
// to take square-free parts of ternary homogeneous polynomials: the chart
// discriminants of the plane-cubic machinery need exactly that.

/// coefficient list in x, each a UPoly in y (ascending powers of x)
using XYPoly = std::vector<UPoly>;

inline XYPoly xy_from_poly(const Poly& p) {
    if (p.nvars() != 2) throw std::invalid_argument("xy_from_poly: 2 variables required");
    XYPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (out.size() <= static_cast<std::size_t>(e[0])) out.resize(e[0] + 1);
        UPoly& u = out[e[0]];
        if (u.size() <= static_cast<std::size_t>(e[1])) u.resize(e[1] + 1, GaussRat(0));
        u[e[1]] = c;
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    for (auto& u : out) utrim(u);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline Poly xy_to_poly(const XYPoly& f) {
    Poly p(2);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f[i].size(); ++j)
            p.add_term({static_cast<int>(i), static_cast<int>(j)}, f[i][j]);
    return p;
}

inline void xy_trim(XYPoly& f) {
    for (auto& u : f) utrim(u);
    while (!f.empty() && f.back().empty()) f.pop_back();
}

inline bool xy_zero(const XYPoly& f) { return f.empty(); }
inline int xy_deg(const XYPoly& f) { return static_cast<int>(f.size()) - 1; }

inline XYPoly xy_scale(const XYPoly& f, const UPoly& c) {
    XYPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = umul(f[i], c);
    xy_trim(r);
    return r;
}

inline XYPoly xy_sub(const XYPoly& a, const XYPoly& b) {
    XYPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = uadd(r[i], uscale(b[i], GaussRat(-1)));
    xy_trim(r);
    return r;
}

/// shift by x^k and multiply by a y-coefficient
inline XYPoly xy_shift_mul(const XYPoly& f, int k, const UPoly& c) {
    XYPoly r(f.size() + k);
    for (std::size_t i = 0; i < f.size(); ++i) r[i + k] = umul(f[i], c);
    xy_trim(r);
    return r;
}

/// content: gcd in y of all x-coefficients
inline UPoly xy_content(const XYPoly& f) {
    UPoly g;
    for (const auto& u : f) g = ugcd(g, u);
    return g;
}

inline XYPoly xy_primitive(const XYPoly& f) {
    if (xy_zero(f)) return f;
    UPoly c = xy_content(f);
    XYPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = f[i].empty() ? UPoly{} : udivexact(f[i], c);
    return r;
}

/// pseudo-remainder of a by b in x
inline XYPoly xy_prem(XYPoly a, const XYPoly& b) {
    xy_trim(a);
    if (xy_zero(b)) throw std::invalid_argument("xy_prem: zero divisor");
    const UPoly& lb = b.back();
    while (!xy_zero(a) && xy_deg(a) >= xy_deg(b)) {
        UPoly la = a.back();
        int shift = xy_deg(a) - xy_deg(b);
        a = xy_sub(xy_scale(a, lb), xy_shift_mul(b, shift, la));
    }
    return a;
}

/// gcd of two bivariate polynomials over Q(i), primitive PRS
inline Poly bivariate_gcd(const Poly& pa, const Poly& pb) {
    XYPoly a = xy_from_poly(pa), b = xy_from_poly(pb);
    if (xy_zero(a)) return pb;
    if (xy_zero(b)) return pa;
    UPoly ca = xy_content(a), cb = xy_content(b);
    UPoly cont = ugcd(ca, cb);
    a = xy_primitive(a);
    b = xy_primitive(b);
    if (xy_deg(a) < xy_deg(b)) std::swap(a, b);
    while (true) {
        XYPoly r = xy_prem(a, b);
        if (xy_zero(r)) break;
        a = std::move(b);
        b = xy_primitive(r);
    }
    XYPoly g = xy_scale(b, cont);
    Poly out = xy_to_poly(g);
    // normalize: leading coefficient 1 in graded lex
    if (!out.is_zero()) {
        GaussRat lead = out.terms().rbegin()->second;
        out *= GaussRat(1) / lead;
    }
    return out;
}

// --- ternary homogeneous helpers --------------------------------------------

/// split off the z-power: P = z^k * Q with z not dividing Q
inline std::pair<int, Poly> split_var_power(const Poly& P, int var) {
    if (P.is_zero()) return {0, P};
    int k = INT_MAX;
    for (const auto& [e, c] : P.terms()) k = std::min(k, e[var]);
    Poly q(P.nvars());
    for (const auto& [e, c] : P.terms()) {
        ExpVec f = e;
        f[var] -= k;
        q.add_term(f, c);
    }
    return {k, q};
}

inline Poly dehomogenize_z(const Poly& P) {
    if (P.nvars() != 3) throw std::invalid_argument("dehomogenize_z: 3 variables required");
    Poly q(2);
    for (const auto& [e, c] : P.terms()) q.add_term({e[0], e[1]}, c);
    return q;
}

inline Poly homogenize_z(const Poly& p, int degree) {
    Poly q(3);
    for (const auto& [e, c] : p.terms()) {
        int k = degree - e[0] - e[1];
        if (k < 0) throw std::invalid_argument("homogenize_z: degree too small");
        q.add_term({e[0], e[1], k}, c);
    }
    return q;
}

/// gcd of two ternary homogeneous polynomials (exact, normalized monic-ish)
inline Poly ternary_gcd(const Poly& A, const Poly& B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    require_homogeneous(A, "ternary_gcd");
    require_homogeneous(B, "ternary_gcd");
    auto [ka, qa] = split_var_power(A, 2);
    auto [kb, qb] = split_var_power(B, 2);
    Poly g2 = bivariate_gcd(dehomogenize_z(qa), dehomogenize_z(qb));
    Poly g3 = homogenize_z(g2, g2.degree());
    if (std::min(ka, kb) > 0)
        g3 = g3 * Poly::variable(3, 2, std::min(ka, kb));
    return g3;
}

/// product of the distinct irreducible factors, exact
inline Poly squarefree_ternary(const Poly& P) {
    require_homogeneous(P, "squarefree_ternary");
    if (P.degree() == 0) return Poly::constant(3, GaussRat(1));
    Poly g = ternary_gcd(ternary_gcd(P, P.derivative(0)),
                         ternary_gcd(P.derivative(1), P.derivative(2)));
    if (g.degree() <= 0) return normalize_poly(P);
    return normalize_poly(exact_div(P, g));
}

}  // namespace waring

#endif
