#pragma once

#include <optional>
#include <vector>

#include "aci/multipoly.hpp"

namespace aci {

using QVec = std::vector<PolyQ>;
using QMat = std::vector<std::vector<PolyQ>>;

bool all_constant(const QMat& M);

PolyQ poly_det(const QMat& M);
QMat poly_adjugate(const QMat& M);
QVec mat_vec(const QMat& M, const QVec& v);

/// Exact multivariate division p / d (lex leading-term algorithm); nullopt if
/// the remainder is nonzero.
std::optional<PolyQ> exact_divide(const PolyQ& p, const PolyQ& d);

/// Row-reduction data for a constant matrix (entries are constant polynomials).
struct GaussResult {
    size_t rank = 0;
    std::vector<QVec> kernel;       // right kernel basis (constant vectors as polys)
    std::vector<QVec> left_kernel;  // left kernel basis
    /// Solve M z = r for a polynomial RHS; nullopt if inconsistent.
    std::optional<QVec> solve(const QVec& r) const;

    // internals for solve()
    std::vector<std::vector<GRat>> red;  // RREF of M
    std::vector<std::vector<GRat>> ops;  // row operations applied (ops * M = red)
    std::vector<int> pivot_col;
    size_t ncols = 0;
};
GaussResult gauss_constant(const QMat& M);

/// One step of the Laurent recursion: solve (L - k I) z = r exactly.
/// Nonsingular case: unique z. Resonance: z = particular + sum of fresh
/// parameters times kernel basis vectors (handled by the caller); this returns
/// the kernel and a polynomial particular solution, verifying the Fredholm
/// condition (left kernel orthogonal to r) first.
struct ResonanceSolve {
    QVec particular;
    std::vector<QVec> kernel;  // polynomial kernel vectors
};

std::optional<QVec> solve_linear_exact(const QMat& M, const QVec& r);  // nonsingular only
ResonanceSolve solve_resonant_exact(const QMat& M, const QVec& r);

}  // namespace aci
