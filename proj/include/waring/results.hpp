#ifndef WARING_RESULTS_HPP
#define WARING_RESULTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "waring/mpoly.hpp"
#include "waring/point.hpp"

namespace waring {

/// A sum-of-powers decomposition F = sum c_i L_i^d.  Exact decompositions
/// reconstruct F identically; numeric ones carry a relative coefficient-norm
/// residual.
struct Decomposition {
    struct Term {
        GaussRat c;
        VectorXq L;  // coefficients of the linear form
    };
    struct NumTerm {
        std::complex<double> c;
        Eigen::VectorXcd L;
    };

    int degree = 0;
    bool exact = true;
    double residual = 0.0;
    std::vector<Term> terms;
    std::vector<NumTerm> num_terms;

    int size() const {
        return exact ? static_cast<int>(terms.size())
                     : static_cast<int>(num_terms.size());
    }

    /// sum c_i L_i^d, exact terms only.
    Poly reconstruct(int nvars) const {
        Poly out(nvars);
        for (const auto& t : terms) {
            Poly lf = Poly::linear_form(t.L);
            out += t.c * lf.pow(degree);
        }
        return out;
    }

    CPoly reconstruct_numeric(int nvars) const {
        CPoly out(nvars);
        if (exact) {
            return poly_to<std::complex<double>>(reconstruct(nvars));
        }
        for (const auto& t : num_terms) {
            CPoly lf(nvars);
            for (int i = 0; i < t.L.size(); ++i) {
                ExpVec e(nvars, 0);
                e[i] = 1;
                lf.add_term(e, t.L[i]);
            }
            out += CPoly::constant(nvars, t.c) * lf.pow(degree);
        }
        return out;
    }

    /// Exact identity check, or relative residual below tol.
    bool verify(const Poly& F, double tol = 1e-8) const {
        if (exact) return reconstruct(F.nvars()) == F;
        CPoly diff = reconstruct_numeric(F.nvars()) - poly_to<std::complex<double>>(F);
        double nf = coeff_norm(poly_to<std::complex<double>>(F));
        return coeff_norm(diff) <= tol * std::max(1.0, nf);
    }
};

/// Distinct projective points, used as apolar sets.
struct PointSet {
    bool exact = true;
    std::vector<ProjPoint> points;
    int size() const { return static_cast<int>(points.size()); }
};

enum class RankMethod { Quadric, Monomial, Binary, CubicTable, Split, LowerBoundOnly };

inline const char* rank_method_name(RankMethod m) {
    switch (m) {
        case RankMethod::Quadric: return "quadric";
        case RankMethod::Monomial: return "monomial";
        case RankMethod::Binary: return "binary";
        case RankMethod::CubicTable: return "cubic-table";
        case RankMethod::Split: return "split";
        case RankMethod::LowerBoundOnly: return "lower-bound-only";
    }
    return "?";
}

struct RankResult {
    int rank = 0;
    RankMethod method = RankMethod::LowerBoundOnly;
    bool certified = false;
    int lower_bound = 0;
    std::optional<Decomposition> witness;
    std::string note;
};

enum class Membership { InWaring, Forbidden };

/// Tagged description of a Waring or forbidden locus: a hypersurface given by
/// (factors of) its equation, a finite point list, a hyperplane or line
/// arrangement, or a union of such descriptions in coordinate subspaces.
struct LocusDescription {
    enum class Kind {
        Hypersurface,     // V(prod equations)
        FinitePoints,     // the listed points
        HyperplaneUnion,  // V(X_i) for the listed dual variable indices
        LinesMinusPoint,  // coordinate lines through a point, minus the point
        Union,            // union of component descriptions
        Empty,
        All
    };
    enum class Which { Waring, Forbidden };

    Kind kind = Kind::Empty;
    Which which = Which::Forbidden;
    bool certified = true;
    std::vector<Poly> equations;      // dual-variable polynomials
    std::vector<ProjPoint> points;    // finite list, or excluded points for
                                      // LinesMinusPoint
    std::vector<std::array<ProjPoint, 2>> lines;  // lines given by two spanning points
    std::vector<int> variable_indices;  // HyperplaneUnion data
    std::vector<int> block_variables;   // for Union components: ambient indices
    std::vector<LocusDescription> components;
    std::string note;

    static LocusDescription finite(Which w, std::vector<ProjPoint> pts, bool cert = true) {
        LocusDescription d;
        d.kind = Kind::FinitePoints;
        d.which = w;
        d.points = std::move(pts);
        d.certified = cert;
        return d;
    }
    static LocusDescription hypersurface(Which w, std::vector<Poly> eqs, bool cert = true) {
        LocusDescription d;
        d.kind = Kind::Hypersurface;
        d.which = w;
        d.equations = std::move(eqs);
        d.certified = cert;
        return d;
    }
};

inline const char* locus_kind_name(LocusDescription::Kind k) {
    using K = LocusDescription::Kind;
    switch (k) {
        case K::Hypersurface: return "hypersurface";
        case K::FinitePoints: return "finite_points";
        case K::HyperplaneUnion: return "hyperplane_union";
        case K::LinesMinusPoint: return "lines_minus_point";
        case K::Union: return "union";
        case K::Empty: return "empty";
        case K::All: return "all";
    }
    return "?";
}

/// Raised when a prescribed point is forbidden; carries the certificate.
struct ForbiddenPointError : std::runtime_error {
    ProjPoint point;
    std::string certificate;
    ForbiddenPointError(ProjPoint p, std::string cert, const std::string& msg)
        : std::runtime_error(msg), point(std::move(p)), certificate(std::move(cert)) {}
};

}  // namespace waring

#endif
