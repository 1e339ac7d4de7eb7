#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aci/multipoly.hpp"

namespace aci {

/// A polynomial ODE system x' = f(x), optionally Hamiltonian (f = J dH/dx).
/// Polynomials live over phase_vars followed by param_vars; parameters are
/// symbolic constants of weight zero with default numeric values.
struct HamiltonianSystem {
    std::string name;
    std::vector<std::string> phase_vars;
    std::vector<std::string> param_vars;
    std::vector<PolyQ> vector_field;                      // m entries
    std::vector<PolyQ> invariants;                        // H_1..H_{n+k}
    std::optional<std::vector<std::vector<PolyQ>>> poisson;  // m x m, skew
    std::optional<std::vector<int>> weights;
    std::map<std::string, GRat> param_values;

    size_t dim() const { return phase_vars.size(); }
    std::vector<std::string> all_vars() const;

    /// Vector field / invariants with parameters bound to their default values
    /// (result polynomials still carry the full variable list).
    PolyQ bind_params(const PolyQ& p) const;

    /// Structural checks: J skew-symmetric, J dH/dx == f when J and a designated
    /// Hamiltonian are present, and <grad H_i, f> == 0 for every invariant.
    /// Throws std::runtime_error with a diagnostic on failure.
    void validate() const;
};

/// <grad F, J grad H> as an exact polynomial.
PolyQ poisson_bracket(const PolyQ& F, const PolyQ& H,
                      const std::vector<std::vector<PolyQ>>& J,
                      const std::vector<std::string>& phase_vars);

/// J dH/dx.
std::vector<PolyQ> hamiltonian_vector_field(const PolyQ& H,
                                            const std::vector<std::vector<PolyQ>>& J,
                                            const std::vector<std::string>& phase_vars);

/// Exact directional derivative <grad H, f>.
PolyQ lie_derivative(const PolyQ& H, const std::vector<PolyQ>& f,
                     const std::vector<std::string>& phase_vars);

}  // namespace aci
