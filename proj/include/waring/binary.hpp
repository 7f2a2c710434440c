#ifndef WARING_BINARY_HPP
#define WARING_BINARY_HPP

#include <Eigen/Eigenvalues>

#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"
#include "waring/point.hpp"

namespace waring {

// Binary forms are MPoly values in two variables.  Coefficient vectors are
// indexed so coeffs[j] is the coefficient of x^(d-j) y^j.

inline void require_binary(const Poly& g, const char* who) {
    if (g.nvars() != 2)
        throw std::invalid_argument(std::string(who) + ": binary form required");
    require_homogeneous(g, who);
}

inline std::vector<GaussRat> binary_coeffs(const Poly& g) {
    require_binary(g, "binary_coeffs");
    int d = g.degree();
    std::vector<GaussRat> c(d + 1);
    for (int j = 0; j <= d; ++j) c[j] = g.coeff({d - j, j});
    return c;
}

inline Poly binary_from_coeffs(const std::vector<GaussRat>& c) {
    int d = static_cast<int>(c.size()) - 1;
    Poly g(2);
    for (int j = 0; j <= d; ++j) g.add_term({d - j, j}, c[j]);
    return g;
}

// --- univariate helpers (dense, ascending powers) ---------------------------

using UPoly = std::vector<GaussRat>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (std::size_t k = 1; k < p.size(); ++k)
        r.push_back(p[k] * GaussRat(Rat(static_cast<long>(k))));
    utrim(r);
    return r;
}

inline UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    while (udeg(a) >= udeg(b) && !a.empty()) {
        GaussRat f = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        for (std::size_t k = 0; k < b.size(); ++k)
            a[k + shift] -= f * b[k];
        a.pop_back();
        utrim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussRat lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

inline UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), GaussRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

inline UPoly uscale(const UPoly& a, const GaussRat& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, GaussRat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

/// Exact quotient; throws when b does not divide a.
inline UPoly udivexact(UPoly a, const UPoly& b) {
    utrim(a);
    if (b.empty()) throw std::invalid_argument("udivexact: zero divisor");
    if (a.empty()) return {};
    if (udeg(a) < udeg(b)) throw std::domain_error("udivexact: not divisible");
    UPoly q(udeg(a) - udeg(b) + 1, GaussRat(0));
    while (!a.empty() && udeg(a) >= udeg(b)) {
        GaussRat f = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        utrim(a);
    }
    if (!a.empty()) throw std::domain_error("udivexact: not divisible");
    return q;
}

// --- gcd and squarefree structure -------------------------------------------

/// Exact gcd of two binary forms, normalized with leading coefficient 1.
inline Poly binary_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    require_binary(f, "binary_gcd");
    require_binary(g, "binary_gcd");
    auto split = [](const Poly& p, int& xmult, int& ymult, UPoly& u) {
        auto c = binary_coeffs(p);
        int d = static_cast<int>(c.size()) - 1;
        int lead0 = 0;
        while (c[lead0].is_zero()) ++lead0;  // y | p that many times
        int trail0 = 0;
        while (c[d - trail0].is_zero()) ++trail0;  // x | p that many times
        ymult = lead0;
        xmult = trail0;
        u.assign(c.begin() + lead0, c.end() - trail0);
        std::reverse(u.begin(), u.end());  // u[k] = coeff of t^k, t = y/x
    };
    int fx, fy, gx, gy;
    UPoly uf, ug;
    split(f, fx, fy, uf);
    split(g, gx, gy, ug);
    UPoly w = ugcd(uf, ug);
    int wd = udeg(w);
    Poly r(2);
    // u was formed in t = x/y, so t^k rehomogenizes to x^k y^(wd-k)
    for (int k = 0; k <= wd; ++k) r.add_term({k, wd - k}, w[k]);
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    return x.pow(std::min(fx, gx)) * y.pow(std::min(fy, gy)) * r;
}

struct SquarefreeResult {
    bool squarefree;
    Poly squarefree_part;  // g / (repeated part)
    Poly repeated_part;    // gcd(g, dg/dx, dg/dy), leading coefficient 1
};

/// Square-freeness of a binary form; also returns g with one multiplicity
/// stripped from every repeated factor.
inline SquarefreeResult squarefree_binary(const Poly& g) {
    require_binary(g, "squarefree_binary");
    Poly rep = binary_gcd(binary_gcd(g, g.derivative(0)), g.derivative(1));
    bool sf = rep.degree() <= 0;
    if (g.degree() == 0) return {true, g, Poly::constant(2, GaussRat(1))};
    return {sf, exact_div(g, rep), rep};
}

// --- resultant and discriminant ---------------------------------------------

/// Sylvester matrix of two binary forms with their formal (homogeneous)
/// degrees; zero leading coefficients are allowed.
inline MatrixXq sylvester_matrix(const Poly& f, const Poly& g) {
    auto a = binary_coeffs(f), b = binary_coeffs(g);
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    MatrixXq M(m + n, m + n);
    M.setConstant(GaussRat(0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M(r, r + k) = a[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M(n + r, r + k) = b[k];
    return M;
}

inline GaussRat resultant_binary(const Poly& f, const Poly& g) {
    require_binary(f, "resultant_binary");
    require_binary(g, "resultant_binary");
    if (f.degree() + g.degree() == 0) return GaussRat(1);
    return det(MatrixXq(sylvester_matrix(f, g)));
}

/// Discriminant, normalized so that
/// disc(a x^3 + b x^2 y + c x y^2 + d y^3) = 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2.
/// Vanishes iff the form has a repeated projective root.
inline GaussRat discriminant_binary(const Poly& g) {
    require_binary(g, "discriminant_binary");
    int n = g.degree();
    if (n == 0) throw std::invalid_argument("discriminant_binary: constant form");
    if (n == 1) return GaussRat(1);
    // Make the x^n coefficient nonzero by the unimodular shear y -> y + t*x,
    // which leaves the discriminant unchanged.
    Poly h = g;
    if (h.coeff({n, 0}).is_zero()) {
        Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
        for (long t = 1;; ++t) {
            MatrixXq M(2, 2);
            M(0, 0) = GaussRat(1); M(0, 1) = GaussRat(0);
            M(1, 0) = GaussRat(Rat(t)); M(1, 1) = GaussRat(1);
            // x -> x, y -> t*x + y
            Poly cand = compose_linear(g, M);
            if (!cand.coeff({n, 0}).is_zero()) {
                h = cand;
                break;
            }
            if (t > 2 * n) throw std::logic_error("discriminant_binary: no shear found");
        }
    }
    GaussRat lead = h.coeff({n, 0});
    GaussRat res = resultant_binary(h, h.derivative(0));
    GaussRat sign = (((long)n * (n - 1) / 2) % 2 == 0) ? GaussRat(1) : GaussRat(-1);
    return sign * res / lead;
}

// --- roots -------------------------------------------------------------------

struct RootCluster {
    std::complex<double> value;  // t = x/y for the point [t : 1]
    bool at_infinity = false;    // the point [1 : 0]
    int multiplicity = 1;
};

/// Projective roots of the form with coefficient vector c (c[j] multiplies
/// x^(d-j) y^j), by companion-matrix eigenvalues in t = x/y; the point [1:0]
/// accounts for vanishing top coefficients.  Roots closer than tol merge.
inline std::vector<RootCluster> roots_from_coeffs(std::vector<std::complex<double>> c,
                                                  double tol = 1e-8) {
    int d = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> v(d + 1);
    for (int j = 0; j <= d; ++j) v[d - j] = c[j];  // v(t) = sum v[k] t^k
    double mx = 0;
    for (auto& z : v) mx = std::max(mx, std::abs(z));
    if (mx == 0) throw std::invalid_argument("roots: zero polynomial");
    int deg = d;
    int inf_mult = 0;
    while (deg > 0 && std::abs(v[deg]) <= 1e-14 * mx) {
        --deg;
        ++inf_mult;
    }
    std::vector<std::complex<double>> roots;
    if (deg > 0) {
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) C(i, deg - 1) = -v[i] / v[deg];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
        for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()[i]);
    }
    std::vector<RootCluster> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::complex<double> sum = roots[i];
        int cnt = 1;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(roots[j] - roots[i]) < tol) {
                used[j] = true;
                sum += roots[j];
                ++cnt;
            }
        }
        RootCluster rc;
        rc.value = sum / static_cast<double>(cnt);
        rc.multiplicity = cnt;
        out.push_back(rc);
    }
    if (inf_mult > 0) {
        RootCluster rc;
        rc.at_infinity = true;
        rc.multiplicity = inf_mult;
        out.push_back(rc);
    }
    return out;
}

/// All projective roots of an exact binary form, with multiplicity.  The
/// leading-zero stripping (roots at [1:0]) is decided exactly.
inline std::vector<RootCluster> roots_binary_numeric(const Poly& g, double tol = 1e-8) {
    require_binary(g, "roots_binary_numeric");
    auto cq = binary_coeffs(g);
    int d = static_cast<int>(cq.size()) - 1;
    int inf_mult = 0;
    while (inf_mult <= d && cq[inf_mult].is_zero()) ++inf_mult;
    std::vector<std::complex<double>> c;
    for (int j = inf_mult; j <= d; ++j) c.push_back(to_complex(cq[j]));
    auto out = roots_from_coeffs(c, tol);
    if (inf_mult > 0) {
        RootCluster rc;
        rc.at_infinity = true;
        rc.multiplicity = inf_mult;
        out.push_back(rc);
    }
    return out;
}

inline ProjPoint root_to_point(const RootCluster& rc) {
    Eigen::VectorXcd v(2);
    if (rc.at_infinity)
        v << 1.0, 0.0;
    else
        v << rc.value, 1.0;
    return ProjPoint::from_numeric(v);
}

/// Evaluate a binary form at an exact point.
inline GaussRat eval_binary(const Poly& g, const GaussRat& x, const GaussRat& y) {
    return g.eval({x, y});
}

struct ExactRoots {
    bool complete = false;                      // all roots Gaussian rational
    std::vector<std::pair<ProjPoint, int>> roots;  // exact roots found, with mult
    Poly remainder{2};                          // unsplit factor (exact)
};

/// Extract the Gaussian-rational projective roots of a binary form exactly,
/// guided by numeric approximations but verified by exact division.
inline ExactRoots roots_binary_exact(const Poly& g, std::int64_t max_den = 1'000'000) {
    require_binary(g, "roots_binary_exact");
    ExactRoots result;
    Poly rem = g;
    // root at [0:1] (x | g) and [1:0] (y | g) first
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    auto strip = [&](const Poly& var, const GaussRat& px, const GaussRat& py) {
        int m = 0;
        while (rem.degree() > 0 && eval_binary(rem, px, py).is_zero() && divides(var, rem)) {
            rem = exact_div(rem, var);
            ++m;
        }
        if (m > 0)
            result.roots.push_back({exact_point({px, py}), m});
    };
    strip(y, GaussRat(1), GaussRat(0));
    strip(x, GaussRat(0), GaussRat(1));
    if (rem.degree() > 0) {
        for (const auto& rc : roots_binary_numeric(rem, 1e-8)) {
            if (rc.at_infinity) continue;
            auto cand = rationalize(rc.value, max_den);
            if (!cand) continue;
            // candidate root [t : 1]: factor (x - t y)
            Poly lin = x - *cand * y;
            int m = 0;
            while (rem.degree() > 0 && divides(lin, rem)) {
                rem = exact_div(rem, lin);
                ++m;
            }
            if (m > 0) result.roots.push_back({exact_point({*cand, GaussRat(1)}), m});
        }
    }
    result.remainder = rem;
    result.complete = rem.degree() <= 0;
    return result;
}

}  // namespace waring

#endif
