#include <doctest.h>

#include <random>

#include "waring/binary.hpp"
#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"

using namespace waring;

namespace {

Poly var(int n, int i, int p = 1) { return Poly::variable(n, i, p); }

// independent determinant oracle: permutation expansion
GaussRat brute_det(const MatrixXq& M) {
    int n = static_cast<int>(M.rows());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    GaussRat total(0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        GaussRat t(inv % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) t *= M(i, perm[i]);
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Poly random_sparse(std::mt19937_64& rng, int nvars, int deg, int terms) {
    std::uniform_int_distribution<int> coef(-9, 9);
    auto basis = monomial_basis(nvars, deg);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(basis[pick(rng)], GaussRat(c));
    }
    return p;
}

}  // namespace

TEST_CASE("apolar action basics") {
    // (X^2, x^3) -> 6x
    Poly X2 = var(1, 0, 2), x3 = var(1, 0, 3);
    CHECK(apolar_act(X2, x3) == GaussRat(6) * var(1, 0));

    // (X^2, xyz) -> 0
    Poly xyz = var(3, 0) * var(3, 1) * var(3, 2);
    CHECK(apolar_act(var(3, 0, 2), xyz).is_zero());

    // (XY, xyz) -> z
    CHECK(apolar_act(var(3, 0) * var(3, 1), xyz) == var(3, 2));

    CHECK_THROWS_AS(apolar_act(var(2, 0), xyz), std::invalid_argument);
}

TEST_CASE("apolar action compatibility: (g*h) o F = g o (h o F)") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        Poly F = random_sparse(rng, nv, 4, 5);
        Poly g = random_sparse(rng, nv, 1 + static_cast<int>(rng() % 2), 3);
        Poly h = random_sparse(rng, nv, 1, 3);
        CHECK(apolar_act(g * h, F) == apolar_act(g, apolar_act(h, F)));
    }
}

TEST_CASE("catalecticant of xyz") {
    Poly xyz = var(3, 0) * var(3, 1) * var(3, 2);
    MatrixXq M1 = catalecticant(xyz, 1);
    CHECK(M1.rows() == 6);  // dim S_2 in 3 vars
    CHECK(M1.cols() == 3);
    CHECK(rank(M1) == 3);
    CHECK(kernel_basis(M1).rows() == 0);

    MatrixXq M2 = catalecticant(xyz, 2);
    auto ker = rows_as_polys(kernel_basis(M2), 3, 2);
    REQUIRE(ker.size() == 3);
    CHECK(ker[0] == var(3, 0, 2));  // X^2
    CHECK(ker[1] == var(3, 1, 2));  // Y^2
    CHECK(ker[2] == var(3, 2, 2));  // Z^2

    CHECK_THROWS_AS(catalecticant(xyz, 4), std::invalid_argument);
}

TEST_CASE("catalecticant kernel of x^3+y^3 at k=2 is XY") {
    Poly F = var(2, 0, 3) + var(2, 1, 3);
    auto ker = rows_as_polys(kernel_basis(MatrixXq(catalecticant(F, 2))), 2, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == var(2, 0) * var(2, 1));
}

TEST_CASE("catalecticant duality: rank cat(F,k) == rank cat(F,d-k)") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        Poly F = random_sparse(rng, 3, 4, 4);
        if (F.is_zero()) continue;
        for (int k = 0; k <= 4; ++k)
            CHECK(rank(MatrixXq(catalecticant(F, k))) ==
                  rank(MatrixXq(catalecticant(F, 4 - k))));
    }
}

TEST_CASE("exact linear algebra vs brute-force determinant") {
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        MatrixXq M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M(i, j) = GaussRat(coef(rng));
        CHECK(det(M) == brute_det(M));
        // adjugate identity
        MatrixXq P = M * adjugate(M);
        GaussRat d = det(M);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(P(i, j) == (i == j ? d : GaussRat(0)));
    }
}

TEST_CASE("kernel and solve") {
    MatrixXq A(2, 3);
    A << GaussRat(1), GaussRat(2), GaussRat(3),
         GaussRat(2), GaussRat(4), GaussRat(6);
    CHECK(rank(A) == 1);
    MatrixXq K = kernel_basis(A);
    REQUIRE(K.rows() == 2);
    for (int r = 0; r < K.rows(); ++r) {
        VectorXq v = K.row(r).transpose();
        VectorXq Av = A * v;
        for (int i = 0; i < Av.size(); ++i) CHECK(Av[i].is_zero());
    }

    VectorXq b(2);
    b << GaussRat(1), GaussRat(2);
    auto x = solve_exact(A, b);
    REQUIRE(x.has_value());
    VectorXq r = A * *x - b;
    for (int i = 0; i < r.size(); ++i) CHECK(r[i].is_zero());

    b << GaussRat(1), GaussRat(3);  // inconsistent
    CHECK(!solve_exact(A, b).has_value());
}

TEST_CASE("resultant and discriminant conventions") {
    Poly b3 = var(2, 0, 3) + var(2, 1, 3);  // X^3 + Y^3
    CHECK(discriminant_binary(b3) == GaussRat(-27));

    Poly b2g = var(2, 0, 2) * var(2, 1);  // X^2 Y
    CHECK(discriminant_binary(b2g).is_zero());

    // res(XY, X^3 - Y^3) via 5x5 Sylvester determinant, cross-checked brute
    Poly f = var(2, 0) * var(2, 1);
    Poly g = var(2, 0, 3) - var(2, 1, 3);
    MatrixXq S = sylvester_matrix(f, g);
    REQUIRE(S.rows() == 5);
    GaussRat r = resultant_binary(f, g);
    CHECK(r == brute_det(S));
    CHECK(!r.is_zero());

    // coprime iff resultant nonzero
    CHECK(resultant_binary(var(2, 0), var(2, 0) + var(2, 1)) == GaussRat(1));
    CHECK(resultant_binary(var(2, 0), var(2, 0, 2)).is_zero());

    CHECK_THROWS_AS(discriminant_binary(Poly(2)), std::invalid_argument);
}

TEST_CASE("discriminant matches the explicit cubic formula") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        GaussRat a(coef(rng)), b(coef(rng)), c(coef(rng)), d(coef(rng));
        if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) continue;
        Poly g = binary_from_coeffs({a, b, c, d});
        GaussRat expect = GaussRat(18) * a * b * c * d - GaussRat(4) * b * b * b * d +
                          b * b * c * c - GaussRat(4) * a * c * c * c -
                          GaussRat(27) * a * a * d * d;
        CHECK(discriminant_binary(g) == expect);
    }
}

TEST_CASE("squarefree_binary") {
    Poly x = var(2, 0), y = var(2, 1);
    auto r1 = squarefree_binary(x * y);
    CHECK(r1.squarefree);

    auto r2 = squarefree_binary(x * x);
    CHECK(!r2.squarefree);
    CHECK(r2.squarefree_part == x);

    Poly g = x * (x - y) * (x - y);
    auto r3 = squarefree_binary(g);
    CHECK(!r3.squarefree);
    CHECK(normalize_poly(r3.squarefree_part) == normalize_poly(x * (x - y)));
}

TEST_CASE("disc == 0 iff not squarefree (independent code paths)") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        // product of random linear forms with random multiplicities
        Poly g = Poly::constant(2, GaussRat(1));
        bool repeated = false;
        int total = 0;
        std::vector<std::pair<int, int>> used;
        for (int f = 0; f < 3 && total < 5; ++f) {
            int a = coef(rng), b = coef(rng);
            if (a == 0 && b == 0) a = 1;
            int mult = 1 + static_cast<int>(rng() % 2);
            for (auto& [ua, ub] : used)
                if (ua * b == ub * a) repeated = true;  // proportional forms
            used.push_back({a, b});
            if (mult > 1) repeated = true;
            total += mult;
            Poly lin = GaussRat(a) * var(2, 0) + GaussRat(b) * var(2, 1);
            g = g * lin.pow(mult);
        }
        CHECK(discriminant_binary(g).is_zero() == repeated);
        CHECK(squarefree_binary(g).squarefree == !repeated);
    }
}

TEST_CASE("numeric roots of binary forms") {
    Poly x = var(2, 0), y = var(2, 1);

    // X^2 + Y^2 -> [i:1], [-i:1]
    auto r = roots_binary_numeric(x * x + y * y, 1e-10);
    REQUIRE(r.size() == 2);
    for (const auto& rc : r) {
        CHECK(!rc.at_infinity);
        CHECK(std::abs(std::abs(rc.value.imag()) - 1.0) < 1e-12);
        CHECK(std::abs(rc.value.real()) < 1e-12);
    }

    // X^2 Y -> [0:1] x2 and [1:0]
    auto r2 = roots_binary_numeric(x * x * y);
    REQUIRE(r2.size() == 2);
    int found = 0;
    for (const auto& rc : r2) {
        if (rc.at_infinity) {
            CHECK(rc.multiplicity == 1);
            ++found;
        } else {
            CHECK(rc.multiplicity == 2);
            CHECK(std::abs(rc.value) < 1e-10);
            ++found;
        }
    }
    CHECK(found == 2);

    // X^4 - Y^4: four fourth roots of unity
    auto r3 = roots_binary_numeric(x.pow(4) - y.pow(4));
    CHECK(r3.size() == 4);
    for (const auto& rc : r3) {
        CHECK(!rc.at_infinity);
        CHECK(std::abs(std::abs(rc.value) - 1.0) < 1e-10);
    }
}

TEST_CASE("roots counted with multiplicity; evaluation small at roots") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng() % 4);
        std::vector<GaussRat> c(d + 1);
        bool nz = false;
        for (auto& v : c) {
            v = GaussRat(coef(rng));
            if (!v.is_zero()) nz = true;
        }
        if (!nz) continue;
        Poly g = binary_from_coeffs(c);
        double tol = 1e-7;
        auto roots = roots_binary_numeric(g, tol);
        int total = 0;
        double norm1 = 0;
        for (const auto& v : c) norm1 += std::abs(to_complex(v));
        CPoly gc = poly_to<std::complex<double>>(g);
        for (const auto& rc : roots) {
            total += rc.multiplicity;
            std::vector<std::complex<double>> pt =
                rc.at_infinity ? std::vector<std::complex<double>>{1.0, 0.0}
                               : std::vector<std::complex<double>>{rc.value, 1.0};
            // normalize the point to unit max-modulus before evaluating
            double mx = std::max(std::abs(pt[0]), std::abs(pt[1]));
            pt[0] /= mx;
            pt[1] /= mx;
            CHECK(std::abs(gc.eval(pt)) < tol * norm1);
        }
        CHECK(total == g.degree());
    }
}

TEST_CASE("exact root extraction") {
    Poly x = var(2, 0), y = var(2, 1);
    Poly g = (x - GaussRat(2) * y) * (x + y).pow(2) * y;
    auto er = roots_binary_exact(g);
    CHECK(er.complete);
    int found = 0;
    for (const auto& [pt, m] : er.roots) {
        if (pt == exact_point({GaussRat(2), GaussRat(1)})) {
            CHECK(m == 1);
            ++found;
        }
        if (pt == exact_point({GaussRat(-1), GaussRat(1)})) {
            CHECK(m == 2);
            ++found;
        }
        if (pt == exact_point({GaussRat(1), GaussRat(0)})) {
            CHECK(m == 1);  // the factor y vanishes at [1:0]
            ++found;
        }
    }
    CHECK(found == 3);

    // irrational pair stays in the remainder
    auto er2 = roots_binary_exact(x * x - GaussRat(2) * y * y);
    CHECK(!er2.complete);
    CHECK(er2.remainder.degree() == 2);

    // Gaussian rational roots
    auto er3 = roots_binary_exact(x * x + y * y);
    CHECK(er3.complete);
    REQUIRE(er3.roots.size() == 2);
}

TEST_CASE("binary gcd") {
    Poly x = var(2, 0), y = var(2, 1);
    Poly f = (x - y).pow(2) * (x + GaussRat(3) * y);
    Poly g = (x - y) * y.pow(2);
    Poly d = binary_gcd(f, g);
    CHECK(normalize_poly(d) == normalize_poly(x - y));

    CHECK(binary_gcd(x * y, x.pow(3) - y.pow(3)).degree() == 0);
}

TEST_CASE("mpoly division, composition, normalization") {
    Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    Poly p = (x + y) * (x - z).pow(2);
    CHECK(exact_div(p, x + y) == (x - z).pow(2));
    CHECK(divides(x - z, p));
    CHECK(!divides(x + z, p));

    // compose_linear: swap x and z in xyz
    MatrixXq M(3, 3);
    M.setConstant(GaussRat(0));
    M(0, 2) = GaussRat(1);
    M(1, 1) = GaussRat(1);
    M(2, 0) = GaussRat(1);
    CHECK(compose_linear(x * y * z, M) == x * y * z);
    CHECK(compose_linear(x * x * y, M) == z * z * y);

    CHECK(normalize_poly(GaussRat(Rat(-6, 4)) * (x * x - GaussRat(2) * y * z)) ==
          x * x - GaussRat(2) * y * z);
}
