#ifndef WARING_POINT_HPP
#define WARING_POINT_HPP

#include <Eigen/Dense>

#include "waring/scalar.hpp"

namespace waring {

/// Projective point, exact (Gaussian rational) or numeric (complex double).
/// Exact points are normalized so the first nonzero coordinate is 1; two
/// exact points are equal iff their normalized coordinates are.
struct ProjPoint {
    bool exact = true;
    VectorXq q;           // active when exact
    Eigen::VectorXcd c;   // active when !exact

    static ProjPoint from_exact(VectorXq v) {
        int nz = -1;
        for (int i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                nz = i;
                break;
            }
        if (nz < 0) throw std::invalid_argument("ProjPoint: zero vector");
        GaussRat lead = v[nz];
        for (int i = 0; i < v.size(); ++i) v[i] = v[i] / lead;
        ProjPoint p;
        p.exact = true;
        p.q = std::move(v);
        return p;
    }

    static ProjPoint from_numeric(Eigen::VectorXcd v, double tol = 1e-12) {
        int best = 0;
        for (int i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[best])) best = i;
        if (std::abs(v[best]) <= tol)
            throw std::invalid_argument("ProjPoint: zero vector");
        v /= v[best];
        ProjPoint p;
        p.exact = false;
        p.c = std::move(v);
        return p;
    }

    int dim() const { return exact ? static_cast<int>(q.size()) : static_cast<int>(c.size()); }

    Eigen::VectorXcd to_complex() const {
        if (!exact) return c;
        Eigen::VectorXcd v(q.size());
        for (int i = 0; i < q.size(); ++i) v[i] = waring::to_complex(q[i]);
        return v;
    }

    bool operator==(const ProjPoint& o) const {
        if (!exact || !o.exact || q.size() != o.q.size()) return false;
        for (int i = 0; i < q.size(); ++i)
            if (q[i] != o.q[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ":";
            if (exact) {
                s += waring::to_string(q[i]);
            } else {
                std::ostringstream os;
                os << c[i].real();
                if (c[i].imag() != 0) os << (c[i].imag() > 0 ? "+" : "") << c[i].imag() << "i";
                s += os.str();
            }
        }
        return s + "]";
    }
};

inline ProjPoint exact_point(std::initializer_list<GaussRat> coords) {
    VectorXq v(static_cast<int>(coords.size()));
    int i = 0;
    for (const auto& x : coords) v[i++] = x;
    return ProjPoint::from_exact(std::move(v));
}

}  // namespace waring

#endif
