#ifndef WARING_MPOLY_HPP
#define WARING_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "waring/scalar.hpp"

namespace waring {

/// Exponent vector of a monomial; length = number of ambient variables.
using ExpVec = std::vector<int>;

inline int expvec_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order (ascending).  Reverse iteration over a map with
/// this comparator visits terms in the canonical graded-lex descending order.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = expvec_degree(a), db = expvec_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

template <class S>
S scalar_from_int(const Int& v);

template <>
inline GaussRat scalar_from_int<GaussRat>(const Int& v) {
    return GaussRat(Rat(v));
}
template <>
inline std::complex<double> scalar_from_int<std::complex<double>>(const Int& v) {
    return {v.convert_to<double>(), 0.0};
}

template <class S>
bool scalar_is_zero(const S& v) {
    return v == S(0);
}
template <>
inline bool scalar_is_zero<GaussRat>(const GaussRat& v) {
    return v.is_zero();
}

/// Sparse multivariate polynomial with coefficients in S, canonically ordered
/// by graded lex.  Primal and dual polynomials share this type; which ring a
/// value lives in is a matter of interpretation (variable index i <-> X_i).
template <class S>
class MPoly {
  public:
    using TermMap = std::map<ExpVec, S, GradedLexLess>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, const S& c) {
        MPoly p(nvars);
        p.add_term(ExpVec(nvars, 0), c);
        return p;
    }

    static MPoly monomial(const ExpVec& e, const S& c = S(1)) {
        MPoly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    static MPoly variable(int nvars, int i, int power = 1) {
        ExpVec e(nvars, 0);
        e[i] = power;
        return monomial(e);
    }

    /// The linear form with the given coefficient vector.
    static MPoly linear_form(const Eigen::Matrix<S, Eigen::Dynamic, 1>& coeffs) {
        MPoly p(static_cast<int>(coeffs.size()));
        for (int i = 0; i < coeffs.size(); ++i) {
            ExpVec e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    int degree() const {
        return terms_.empty() ? -1 : expvec_degree(terms_.rbegin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = expvec_degree(terms_.begin()->first);
        return expvec_degree(terms_.rbegin()->first) == d;
    }

    S coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const ExpVec& e, const S& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("MPoly: exponent vector length mismatch");
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const S& c) {
        if (scalar_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MPoly operator*(MPoly a, const S& c) { return a *= c; }
    friend MPoly operator*(const S& c, MPoly a) { return a *= c; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
        MPoly r = constant(nvars_, S(1));
        MPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    S eval(const std::vector<S>& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("MPoly::eval: wrong point dimension");
        S total(0);
        for (const auto& [e, c] : terms_) {
            S t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int j = 0; j < e[i]; ++j) t *= x[i];
            total += t;
        }
        return total;
    }

    MPoly derivative(int var) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            ExpVec f = e;
            f[var] -= 1;
            r.add_term(f, c * scalar_from_int<S>(Int(e[var])));
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

  private:
    void check_same(const MPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MPoly: mismatched ambient dimension");
    }

    int nvars_;
    TermMap terms_;
};

using Poly = MPoly<GaussRat>;
using CPoly = MPoly<std::complex<double>>;

// --- basic free functions ---------------------------------------------------

/// All exponent vectors of the given total degree, graded-lex descending.
inline std::vector<ExpVec> monomial_basis(int nvars, int degree) {
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, rem - k);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

inline int monomial_space_dim(int nvars, int degree) {
    return binomial(nvars - 1 + degree, degree).convert_to<int>();
}

/// multinomial(d; e) = d! / prod e_i!
inline Int multinomial(int d, const ExpVec& e) {
    Int r = factorial(d);
    for (int v : e) r /= factorial(v);
    return r;
}

/// Apolarity action: g, in the dual variables, acts on F as the constant
/// coefficient differential operator g(d/dx_0, ..., d/dx_n).
template <class S>
MPoly<S> apolar_act(const MPoly<S>& g, const MPoly<S>& F) {
    if (g.nvars() != F.nvars())
        throw std::invalid_argument("apolar_act: mismatched ambient dimension");
    MPoly<S> r(F.nvars());
    for (const auto& [a, ca] : g.terms()) {
        for (const auto& [b, cb] : F.terms()) {
            Int scale = 1;
            bool ok = true;
            ExpVec e(F.nvars());
            for (int i = 0; i < F.nvars(); ++i) {
                if (a[i] > b[i]) {
                    ok = false;
                    break;
                }
                e[i] = b[i] - a[i];
                scale *= falling_factorial(b[i], a[i]);
            }
            if (ok) r.add_term(e, ca * cb * scalar_from_int<S>(scale));
        }
    }
    return r;
}

inline void require_homogeneous(const Poly& F, const char* who) {
    if (F.is_zero())
        throw std::invalid_argument(std::string(who) + ": zero polynomial");
    if (!F.is_homogeneous())
        throw std::invalid_argument(std::string(who) + ": non-homogeneous input");
}

/// Matrix of the map T_k -> S_{d-k}, q |-> q o F.  Rows index the graded-lex
/// descending monomial basis of S_{d-k}, columns that of T_k.
inline MatrixXq catalecticant(const Poly& F, int k) {
    require_homogeneous(F, "catalecticant");
    int d = F.degree();
    if (k < 0 || k > d) throw std::invalid_argument("catalecticant: k out of range");
    auto rows = monomial_basis(F.nvars(), d - k);
    auto cols = monomial_basis(F.nvars(), k);
    MatrixXq M(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            ExpVec e(F.nvars());
            Int scale = 1;
            for (int i = 0; i < F.nvars(); ++i) {
                e[i] = rows[r][i] + cols[c][i];
                scale *= falling_factorial(e[i], cols[c][i]);
            }
            M(r, c) = F.coeff(e) * GaussRat(Rat(scale));
        }
    return M;
}

/// Substitute x_i = sum_j M(i, j) * y_j.
template <class S>
MPoly<S> compose_linear(const MPoly<S>& F,
                        const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& M) {
    if (M.rows() != F.nvars())
        throw std::invalid_argument("compose_linear: matrix row count != nvars");
    int m = static_cast<int>(M.cols());
    std::vector<MPoly<S>> images;
    images.reserve(F.nvars());
    for (int i = 0; i < F.nvars(); ++i) {
        MPoly<S> li(m);
        for (int j = 0; j < m; ++j) {
            ExpVec e(m, 0);
            e[j] = 1;
            li.add_term(e, M(i, j));
        }
        images.push_back(li);
    }
    MPoly<S> out(m);
    for (const auto& [e, c] : F.terms()) {
        MPoly<S> t = MPoly<S>::constant(m, c);
        for (int i = 0; i < F.nvars(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        out += t;
    }
    return out;
}

/// Exact division; throws if q does not divide p.
inline Poly exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    Poly rem = p, quot(p.nvars());
    const ExpVec qexp = q.terms().rbegin()->first;
    const GaussRat qc = q.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const ExpVec rexp = rem.terms().rbegin()->first;
        const GaussRat rc = rem.terms().rbegin()->second;
        ExpVec e(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) {
            e[i] = rexp[i] - qexp[i];
            if (e[i] < 0) throw std::domain_error("exact_div: not divisible");
        }
        Poly t = Poly::monomial(e, rc / qc);
        quot += t;
        rem -= t * q;
        if (!rem.is_zero() && !GradedLexLess{}(rem.terms().rbegin()->first, rexp))
            throw std::domain_error("exact_div: not divisible");
    }
    return quot;
}

inline bool divides(const Poly& q, const Poly& p) {
    try {
        exact_div(p, q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/// Divide by the scalar content and flip sign so the graded-lex leading
/// coefficient has positive real part (or positive imaginary part if purely
/// imaginary).  Rational polynomials come out with integer coprime
/// coefficients and positive leading coefficient.
inline Poly normalize_poly(const Poly& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        for (const Rat* part : {&c.re, &c.im}) {
            if (*part == 0) continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::abs(numerator(*part))));
            den_lcm = boost::multiprecision::lcm(den_lcm, Int(denominator(*part)));
        }
    }
    GaussRat scale(Rat(den_lcm, num_gcd));
    Poly q = p * scale;
    const GaussRat& lead = q.terms().rbegin()->second;
    bool flip = lead.re < 0 || (lead.re == 0 && lead.im < 0);
    return flip ? -q : q;
}

template <class S>
MPoly<S> poly_to(const Poly& p);

template <>
inline MPoly<std::complex<double>> poly_to<std::complex<double>>(const Poly& p) {
    CPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, to_complex(c));
    return r;
}

inline double coeff_norm(const CPoly& p) {
    double s = 0;
    for (const auto& [e, c] : p.terms()) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace waring

#endif
