#ifndef WARING_ORACLE_HPP
#define WARING_ORACLE_HPP

#include <cstdint>

#include "waring/mpoly.hpp"
#include "waring/results.hpp"

namespace waring {

/// Random-restart least-squares Waring fitting.  Upper-bound semantics only:
/// a small residual certifies rank <= r up to tolerance; a large residual is
/// evidence, never a proof.
struct FitConfig {
    int restarts = 50;
    int iterations = 2000;
    double success_tol = 1e-9;  // relative, on coefficient-normalized F
    double ridge = 1e-12;       // small coefficient penalty steering the search
    std::uint64_t seed = 1;
};

struct FitResult {
    double residual = 1.0;  // best relative coefficient-norm residual
    Decomposition decomposition;  // numeric, from the best restart
};

/// Objective and analytic gradient over the real parameter vector
/// [Re c_i, Im c_i, Re v_ij, Im v_ij]; exposed for gradient checking.
struct FitProblem {
    int nvars = 0, degree = 0, terms = 0;
    std::vector<ExpVec> basis;
    Eigen::VectorXcd target;  // normalized coefficient vector of F
    double ridge = 0.0;

    int param_count() const { return 2 * terms * (1 + nvars); }
    double objective(const Eigen::VectorXd& params, Eigen::VectorXd* grad) const;
    double residual(const Eigen::VectorXd& params) const;  // without the penalty
};

FitProblem make_fit_problem(const Poly& F, int r, double ridge = 0.0);

FitResult oracle_fit(const Poly& F, int r, const FitConfig& cfg = {});

/// Sweep r upward from the catalecticant bound; the first r whose best
/// residual beats cfg.success_tol.
int oracle_rank_estimate(const Poly& F, const FitConfig& cfg = {}, int r_max = 24);

/// Max relative deviation between the analytic gradient and central finite
/// differences (step 1e-6) at a random parameter point.
double oracle_gradient_check(const FitProblem& problem, std::uint64_t seed);

}  // namespace waring

#endif
