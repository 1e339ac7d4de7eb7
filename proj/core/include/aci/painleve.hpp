#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aci/laurent.hpp"
#include "aci/linexact.hpp"
#include "aci/system.hpp"

namespace aci {

/// Smallest positive integer weight vector nu with every term of f_i of
/// nu-weight <= nu_i + 1 and the maximum attained (system parameters count as
/// weight zero). Throws std::runtime_error("not weight-homogeneous") when the
/// constraints are infeasible within max_weight.
std::vector<int> detect_weights(const HamiltonianSystem& sys, int max_weight = 6);

/// Terms of f_i attaining weight nu_i + 1 (the part entering the balance and
/// the Kowalewski matrix).
std::vector<PolyQ> top_weight_part(const HamiltonianSystem& sys, const std::vector<int>& nu);

struct Balance {
    Eigen::VectorXcd x0;
    std::vector<int> weights;
    double residual = 0.0;
    int family_dim = 0;             // corank of the balance Jacobian at x0
    Eigen::MatrixXcd directions;    // null directions when family_dim > 0
};

std::vector<Balance> solve_balances(const HamiltonianSystem& sys, const std::vector<int>& nu,
                                    const std::vector<Eigen::VectorXcd>& seeds = {},
                                    int random_starts = 200, unsigned rng_seed = 20111);

/// Exact balance datum: x0 = base + sum_k param_k * dir_k, entries in Q(i).
struct ExactBalance {
    std::vector<std::string> params;
    std::vector<GRat> base;
    std::vector<std::vector<GRat>> dirs;

    size_t dim() const { return base.size(); }
    /// Verifies f_top(x0) + diag(nu) x0 == 0 identically; throws on failure.
    void validate(const HamiltonianSystem& sys, const std::vector<int>& nu) const;
};

/// Rationalize a numeric balance (and its family directions) onto Q(i); returns
/// nullopt when the snap does not verify exactly.
std::optional<ExactBalance> rationalize_balance(const HamiltonianSystem& sys,
                                                const std::vector<int>& nu, const Balance& bal,
                                                const std::vector<std::string>& param_names,
                                                double tol = 1e-8);

struct KowalewskiSpectrum {
    Eigen::MatrixXcd matrix;                     // L = Jf_top(x0) + diag(nu)
    std::vector<Cplx> eigenvalues;
    std::vector<std::pair<int, int>> resonances;  // (k, algebraic multiplicity), k >= 0
    std::vector<std::pair<int, int>> defective;   // (k, geometric multiplicity) when it differs
    int balance_dim = 0;
    int free_parameter_count = 0;
};

KowalewskiSpectrum kowalewski_spectrum(const HamiltonianSystem& sys, const std::vector<int>& nu,
                                       const Balance& bal, double int_tol = 1e-8);

struct LaurentFamily {
    std::string system;
    std::vector<std::string> phase;
    std::vector<int> weights;                // leading exponent of component i is -weights[i]
    std::vector<std::string> ring;           // coefficient variables
    std::vector<std::string> free_params;    // balance + resonance parameter names
    int order = 0;                           // coefficients solved through j = order
    std::vector<SeriesQ> series;             // one per phase variable

    /// Numeric state at time t for given parameter values (ring order).
    Eigen::VectorXcd eval(const Cplx& t, const std::vector<Cplx>& params) const;
};

/// Solve the Laurent recursion through order N. Resonance parameters are named
/// via `resonance_names` (k -> names, one per kernel dimension); a missing entry
/// gets generated names. `hosts` optionally pins which component's coefficient
/// carries the fresh parameter (k -> phase index); the kernel is normalized so
/// that component equals 1 (requires a constant kernel entry there).
LaurentFamily expand_family(const HamiltonianSystem& sys, const std::vector<int>& nu,
                            const ExactBalance& bal, int N,
                            const std::map<int, std::vector<std::string>>& resonance_names = {},
                            const std::map<int, int>& hosts = {},
                            bool bind_system_params = false);

/// Residual series of the ODE on the family; all coefficients through the
/// guaranteed window must vanish identically. Returns the offending orders.
std::vector<int> family_ode_residual(const HamiltonianSystem& sys, const std::vector<int>& nu,
                                     const LaurentFamily& fam, bool bind_system_params = false);

/// H(x(t)) as a scalar Laurent series over the family ring.
SeriesQ substitute_invariant(const HamiltonianSystem& sys, const LaurentFamily& fam,
                             const PolyQ& H, bool bind_system_params = false);

}  // namespace aci
