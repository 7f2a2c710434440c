#ifndef WARING_LINALG_HPP
#define WARING_LINALG_HPP

#include <optional>
#include <vector>

#include "waring/mpoly.hpp"
#include "waring/scalar.hpp"

namespace waring {

// Exact dense linear algebra over a field scalar.  Pivoting is always
// "first nonzero entry", which keeps kernel bases and echelon forms
// deterministic and reproducible across runs.

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Reduce M to reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<int> rref_in_place(DenseMat<S>& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
        int p = -1;
        for (int r = row; r < M.rows(); ++r)
            if (!scalar_is_zero(M(r, col))) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row) M.row(p).swap(M.row(row));
        S lead = M(row, col);
        for (int c = col; c < M.cols(); ++c) M(row, c) = M(row, c) / lead;
        for (int r = 0; r < M.rows(); ++r) {
            if (r == row || scalar_is_zero(M(r, col))) continue;
            S f = M(r, col);
            for (int c = col; c < M.cols(); ++c) M(r, c) -= f * M(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
int rank(const DenseMat<S>& M) {
    DenseMat<S> A = M;
    return static_cast<int>(rref_in_place(A).size());
}

/// Basis of the right kernel, one vector per row, itself in reduced row
/// echelon form (canonical).
template <class S>
DenseMat<S> kernel_basis(const DenseMat<S>& M) {
    DenseMat<S> A = M;
    auto pivots = rref_in_place(A);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int dim = static_cast<int>(M.cols()) - static_cast<int>(pivots.size());
    DenseMat<S> K(dim, M.cols());
    K.setConstant(S(0));
    int k = 0;
    for (int free_col = 0; free_col < M.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        K(k, free_col) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            K(k, pivots[r]) = -A(static_cast<int>(r), free_col);
        ++k;
    }
    rref_in_place(K);
    return K;
}

/// One exact solution of A x = b, or nullopt when inconsistent.
template <class S>
std::optional<DenseVec<S>> solve_exact(const DenseMat<S>& A, const DenseVec<S>& b) {
    DenseMat<S> aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    DenseVec<S> x(A.cols());
    x.setConstant(S(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(static_cast<int>(r), A.cols());
    return x;
}

template <class S>
S det(const DenseMat<S>& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("det: square matrix required");
    DenseMat<S> A = M;
    S d(1);
    int n = static_cast<int>(A.rows());
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r)
            if (!scalar_is_zero(A(r, col))) {
                p = r;
                break;
            }
        if (p < 0) return S(0);
        if (p != col) {
            A.row(p).swap(A.row(col));
            d = -d;
        }
        d *= A(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (scalar_is_zero(A(r, col))) continue;
            S f = A(r, col) / A(col, col);
            for (int c = col; c < n; ++c) A(r, c) -= f * A(col, c);
        }
    }
    return d;
}

template <class S>
std::optional<DenseMat<S>> inverse(const DenseMat<S>& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("inverse: square matrix required");
    int n = static_cast<int>(M.rows());
    DenseMat<S> aug(n, 2 * n);
    aug.leftCols(n) = M;
    aug.rightCols(n).setConstant(S(0));
    for (int i = 0; i < n; ++i) aug(i, n + i) = S(1);
    auto pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    return DenseMat<S>(aug.rightCols(n));
}

/// Adjugate via cofactors: M * adj(M) = det(M) * I, also for singular M.
template <class S>
DenseMat<S> adjugate(const DenseMat<S>& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("adjugate: square matrix required");
    int n = static_cast<int>(M.rows());
    DenseMat<S> adj(n, n);
    if (n == 1) {
        adj(0, 0) = S(1);
        return adj;
    }
    DenseMat<S> minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = M(r, c);
                    ++cc;
                }
                ++rr;
            }
            S cof = det(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

/// Rows of K, read against the graded-lex descending monomial basis of the
/// given degree, as polynomials.
inline std::vector<Poly> rows_as_polys(const MatrixXq& K, int nvars, int degree) {
    auto basis = monomial_basis(nvars, degree);
    if (static_cast<int>(basis.size()) != K.cols())
        throw std::invalid_argument("rows_as_polys: basis size mismatch");
    std::vector<Poly> out;
    for (int r = 0; r < K.rows(); ++r) {
        Poly p(nvars);
        for (int c = 0; c < K.cols(); ++c) p.add_term(basis[c], K(r, c));
        out.push_back(std::move(p));
    }
    return out;
}

/// Coefficient vector of a polynomial in the graded-lex descending basis.
inline VectorXq poly_as_vector(const Poly& p, int degree) {
    auto basis = monomial_basis(p.nvars(), degree);
    VectorXq v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
    return v;
}

}  // namespace waring

#endif
