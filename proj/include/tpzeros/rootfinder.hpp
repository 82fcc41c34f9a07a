#pragma once

/**
 * All complex zeros of a dense real polynomial by Aberth-Ehrlich
 * simultaneous iteration, with per-root residual certification.
 *
 * Exact zero coefficients at the top are dropped (degree drop) and exact
 * zeros at the bottom are split off as roots at the origin before
 * iterating; nothing is deflated during the iteration itself.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tpz {

using cplx = std::complex<double>;

struct RootSet {
    /// Nonzero roots sorted by (modulus, argument).
    std::vector<cplx> roots;
    /// residuals[i] = |p(z)| / sum_k |c_k| |z|^k for z = roots[i].
    std::vector<double> residuals;
    /// Nominal degree of the input (coeffs.size() - 1).
    std::size_t degree = 0;
    /// Number of roots at the origin (trailing zero coefficients).
    std::size_t trailing_zero_multiplicity = 0;

    std::size_t leading_degree_drop() const {
        return degree - roots.size() - trailing_zero_multiplicity;
    }
};

struct DiskCount {
    std::size_t inside = 0;
    std::size_t on_boundary = 0;
    std::size_t outside = 0;
    double boundary_tolerance = 0.0;
};

/// Scale-free residual |p(z)| / sum_k |c_k| |z|^k. For |z| > 1 both parts
/// are evaluated on the reversed coefficients at 1/z so the ratio is
/// computed without overflow. Deterministic for identical inputs.
double relative_residual(std::span<const double> coeffs, cplx z);

/// Every returned root satisfies relative_residual <= rel_tol * degree.
/// Throws Error{DegenerateInput} if all coefficients are zero or the
/// degree after removing leading zeros is 0, Error{NoConvergence} if the
/// certification is not met within max_iter sweeps.
RootSet find_roots(std::span<const double> coeffs, double rel_tol = 1e-13, int max_iter = 200);

/// Classifies roots against |z| = radius. A root is on the boundary when
/// ||z| - radius| <= boundary_rel_tol * radius, inside when strictly below
/// that band. Roots at the origin count as inside, so
/// inside + on_boundary + outside = roots.size() + trailing_zero_multiplicity.
DiskCount count_in_disk(const RootSet& rs, double radius, double boundary_rel_tol = 1e-8);

} // namespace tpz
