#ifndef WARING_SCALAR_HPP
#define WARING_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace waring {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Gaussian rational a + b*i with exact rational parts.  This is the exact
/// scalar of the whole library; plain rationals are the im == 0 case.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    /// |z|^2 as an exact rational.
    Rat norm2() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n = o.norm2();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
inline GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
inline bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

inline GaussRat inv(const GaussRat& a) { return GaussRat(1) / a; }

inline GaussRat pow(GaussRat base, long e) {
    if (e < 0) return pow(inv(base), -e);
    GaussRat r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::complex<double> to_complex(const GaussRat& a) {
    return {a.re.convert_to<double>(), a.im.convert_to<double>()};
}

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Canonical text form: "3", "-1/2", "i", "1/2-3*i", ...
inline std::string to_string(const GaussRat& a) {
    if (a.im == 0) return to_string(a.re);
    std::string imabs = to_string(a.im < 0 ? Rat(-a.im) : a.im);
    std::string impart = (imabs == "1") ? "i" : imabs + "*i";
    if (a.re == 0) return (a.im < 0 ? "-" : "") + impart;
    return to_string(a.re) + (a.im < 0 ? "-" : "+") + impart;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& a) {
    return os << to_string(a);
}

// --- rational reconstruction from doubles (continued fractions) ------------

/// Best rational approximation p/q with q <= max_den; nullopt on non-finite.
inline std::optional<Rat> rationalize(double x, std::int64_t max_den = 1'000'000) {
    if (!std::isfinite(x)) return std::nullopt;
    double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9.2e18 || fl < -9.2e18) break;
        std::int64_t a = static_cast<std::int64_t>(fl);
        if (q0 != 0 && std::abs(a) > (9'000'000'000'000'000'000LL / std::max<std::int64_t>(1, std::abs(q0))))
            break;
        std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = v - fl;
        if (rem < 1e-14 * std::max(1.0, std::abs(v))) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    return Rat(Int(p1), Int(q1));
}

/// Gaussian-rational reconstruction of a complex double, parts independently.
inline std::optional<GaussRat> rationalize(std::complex<double> z,
                                           std::int64_t max_den = 1'000'000) {
    auto re = rationalize(z.real(), max_den);
    auto im = rationalize(z.imag(), max_den);
    if (!re || !im) return std::nullopt;
    return GaussRat(*re, *im);
}

using MatrixXq = Eigen::Matrix<GaussRat, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<GaussRat, Eigen::Dynamic, 1>;
using RowVectorXq = Eigen::Matrix<GaussRat, 1, Eigen::Dynamic>;

// --- combinatorics ----------------------------------------------------------

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

/// n (n-1) ... (n-k+1)
inline Int falling_factorial(int n, int k) {
    Int r = 1;
    for (int j = 0; j < k; ++j) r *= (n - j);
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

}  // namespace waring

namespace Eigen {
template <>
struct NumTraits<waring::GaussRat> {
    typedef waring::GaussRat Self;
    typedef Self Real;
    typedef Self NonInteger;
    typedef Self Nested;
    typedef Self Literal;
    enum {
        IsComplex = 0,  // no Eigen conjugation paths; we never call adjoint()
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 100
    };
    static inline Self epsilon() { return Self(0); }
    static inline Self dummy_precision() { return Self(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
