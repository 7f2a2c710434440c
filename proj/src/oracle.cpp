#include "waring/oracle.hpp"

#include <random>

#include "waring/apolarity.hpp"

namespace waring {

namespace {

struct Params {
    Eigen::VectorXcd c;   // terms
    Eigen::MatrixXcd v;   // terms x nvars
};

Params unpack(const FitProblem& fp, const Eigen::VectorXd& p) {
    Params out;
    out.c.resize(fp.terms);
    out.v.resize(fp.terms, fp.nvars);
    int k = 0;
    for (int i = 0; i < fp.terms; ++i) {
        out.c[i] = {p[k], p[k + 1]};
        k += 2;
    }
    for (int i = 0; i < fp.terms; ++i)
        for (int j = 0; j < fp.nvars; ++j) {
            out.v(i, j) = {p[k], p[k + 1]};
            k += 2;
        }
    return out;
}

void pack(const FitProblem& fp, const Params& q, Eigen::VectorXd& p) {
    p.resize(fp.param_count());
    int k = 0;
    for (int i = 0; i < fp.terms; ++i) {
        p[k] = q.c[i].real();
        p[k + 1] = q.c[i].imag();
        k += 2;
    }
    for (int i = 0; i < fp.terms; ++i)
        for (int j = 0; j < fp.nvars; ++j) {
            p[k] = q.v(i, j).real();
            p[k + 1] = q.v(i, j).imag();
            k += 2;
        }
}

/// model coefficients and the per-term monomial values v_i^alpha
Eigen::VectorXcd model(const FitProblem& fp, const Params& q, Eigen::MatrixXcd* powers) {
    Eigen::VectorXcd G = Eigen::VectorXcd::Zero(fp.basis.size());
    if (powers) powers->resize(fp.basis.size(), fp.terms);
    for (std::size_t a = 0; a < fp.basis.size(); ++a) {
        double mn = multinomial(fp.degree, fp.basis[a]).convert_to<double>();
        for (int i = 0; i < fp.terms; ++i) {
            std::complex<double> t(mn, 0.0);
            for (int j = 0; j < fp.nvars; ++j)
                for (int e = 0; e < fp.basis[a][j]; ++e) t *= q.v(i, j);
            if (powers) (*powers)(a, i) = t;
            G[a] += q.c[i] * t;
        }
    }
    return G;
}

/// exact least-squares refresh of the coefficients, with optional ridge
void solve_c(const FitProblem& fp, Params& q, double ridge) {
    Eigen::MatrixXcd A(fp.basis.size(), fp.terms);
    for (std::size_t a = 0; a < fp.basis.size(); ++a) {
        double mn = multinomial(fp.degree, fp.basis[a]).convert_to<double>();
        for (int i = 0; i < fp.terms; ++i) {
            std::complex<double> t(mn, 0.0);
            for (int j = 0; j < fp.nvars; ++j)
                for (int e = 0; e < fp.basis[a][j]; ++e) t *= q.v(i, j);
            A(a, i) = t;
        }
    }
    Eigen::MatrixXcd N = A.adjoint() * A;
    for (int i = 0; i < fp.terms; ++i) N(i, i) += ridge;
    q.c = N.ldlt().solve(A.adjoint() * fp.target);
}

}  // namespace

double FitProblem::objective(const Eigen::VectorXd& params, Eigen::VectorXd* grad) const {
    Params q = unpack(*this, params);
    Eigen::MatrixXcd powers;
    Eigen::VectorXcd G = model(*this, q, grad ? &powers : nullptr);
    Eigen::VectorXcd E = G - target;
    double obj = E.squaredNorm() + ridge * q.c.squaredNorm();
    if (!grad) return obj;

    grad->setZero(param_count());
    // dG_a/dc_i = powers(a, i); dG_a/dv_ij = c_i * d powers / d v_ij
    for (int i = 0; i < terms; ++i) {
        std::complex<double> s = 0.0;
        for (std::size_t a = 0; a < basis.size(); ++a)
            s += std::conj(E[a]) * powers(a, i);
        (*grad)[2 * i] = 2 * s.real() + 2 * ridge * q.c[i].real();
        (*grad)[2 * i + 1] = -2 * s.imag() + 2 * ridge * q.c[i].imag();
    }
    int base = 2 * terms;
    for (int i = 0; i < terms; ++i)
        for (int j = 0; j < nvars; ++j) {
            std::complex<double> s = 0.0;
            for (std::size_t a = 0; a < basis.size(); ++a) {
                int e = basis[a][j];
                if (e == 0) continue;
                double mn = multinomial(degree, basis[a]).convert_to<double>();
                // derivative of v_i^alpha wrt v_ij
                std::complex<double> t(mn * e, 0.0);
                for (int jj = 0; jj < nvars; ++jj) {
                    int ee = basis[a][jj] - (jj == j ? 1 : 0);
                    for (int k = 0; k < ee; ++k) t *= q.v(i, jj);
                }
                s += std::conj(E[a]) * (q.c[i] * t);
            }
            (*grad)[base + 2 * (i * nvars + j)] = 2 * s.real();
            (*grad)[base + 2 * (i * nvars + j) + 1] = -2 * s.imag();
        }
    return obj;
}

double FitProblem::residual(const Eigen::VectorXd& params) const {
    Params q = unpack(*this, params);
    Eigen::VectorXcd G = model(*this, q, nullptr);
    return (G - target).norm();
}

FitProblem make_fit_problem(const Poly& F, int r, double ridge) {
    require_homogeneous(F, "oracle");
    if (r < 1) throw std::invalid_argument("oracle: at least one term required");
    FitProblem fp;
    fp.nvars = F.nvars();
    fp.degree = F.degree();
    fp.terms = r;
    fp.basis = monomial_basis(fp.nvars, fp.degree);
    fp.ridge = ridge;
    fp.target.resize(fp.basis.size());
    VectorXq fe = poly_as_vector(F, fp.degree);
    for (int i = 0; i < fe.size(); ++i) fp.target[i] = to_complex(fe[i]);
    double n = fp.target.norm();
    if (n == 0) throw std::invalid_argument("oracle: zero polynomial");
    fp.target /= n;
    return fp;
}

FitResult oracle_fit(const Poly& F, int r, const FitConfig& cfg) {
    FitProblem fp = make_fit_problem(F, r, cfg.ridge);
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    FitResult best;
    best.residual = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_params;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Params q;
        q.v.resize(fp.terms, fp.nvars);
        for (int i = 0; i < fp.terms; ++i)
            for (int j = 0; j < fp.nvars; ++j) q.v(i, j) = {gauss(rng), gauss(rng)};
        q.c.setZero(fp.terms);
        solve_c(fp, q, std::max(cfg.ridge, 1e-12));
        Eigen::VectorXd p;
        pack(fp, q, p);

        Eigen::VectorXd g(fp.param_count());
        double obj = fp.objective(p, &g);
        double step = 0.05;
        for (int it = 0; it < cfg.iterations; ++it) {
            if (it % 25 == 24) {
                Params qq = unpack(fp, p);
                solve_c(fp, qq, std::max(cfg.ridge, 1e-12));
                Eigen::VectorXd pnew;
                pack(fp, qq, pnew);
                double onew = fp.objective(pnew, nullptr);
                if (onew < obj) {
                    p = pnew;
                    obj = onew;
                }
            }
            fp.objective(p, &g);
            double gn = g.norm();
            if (gn < 1e-14) break;
            bool accepted = false;
            for (int bt = 0; bt < 30; ++bt) {
                Eigen::VectorXd cand = p - step * g;
                double ocand = fp.objective(cand, nullptr);
                if (ocand < obj - 1e-4 * step * gn * gn) {
                    p = cand;
                    obj = ocand;
                    step *= 1.6;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted && step < 1e-18) break;
            if (obj < 0.01 * cfg.success_tol * cfg.success_tol) break;
        }
        // polish: refresh c without the ridge and take the pure residual
        Params q2 = unpack(fp, p);
        solve_c(fp, q2, 0.0);
        Eigen::VectorXd p2;
        pack(fp, q2, p2);
        double res = fp.residual(p2);
        if (res < best.residual) {
            best.residual = res;
            best_params = p2;
        }
        if (best.residual < 0.1 * cfg.success_tol) break;
    }

    Params q = unpack(fp, best_params);
    best.decomposition.degree = fp.degree;
    best.decomposition.exact = false;
    best.decomposition.residual = best.residual;
    for (int i = 0; i < fp.terms; ++i)
        best.decomposition.num_terms.push_back({q.c[i], q.v.row(i).transpose()});
    return best;
}

int oracle_rank_estimate(const Poly& F, const FitConfig& cfg, int r_max) {
    int start = rank_lower_bound(F);
    for (int r = std::max(1, start); r <= r_max; ++r) {
        FitResult fit = oracle_fit(F, r, cfg);
        if (fit.residual < cfg.success_tol) return r;
    }
    return r_max + 1;
}

double oracle_gradient_check(const FitProblem& problem, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd p(problem.param_count());
    for (int i = 0; i < p.size(); ++i) p[i] = gauss(rng);
    Eigen::VectorXd g(problem.param_count());
    problem.objective(p, &g);
    double h = 1e-6, worst = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        Eigen::VectorXd pp = p, pm = p;
        pp[i] += h;
        pm[i] -= h;
        double num = (problem.objective(pp, nullptr) - problem.objective(pm, nullptr)) / (2 * h);
        double denom = std::max({1.0, std::abs(g[i]), std::abs(num)});
        worst = std::max(worst, std::abs(g[i] - num) / denom);
    }
    return worst;
}

}  // namespace waring
