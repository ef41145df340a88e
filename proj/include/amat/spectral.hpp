#pragma once

#include <cmath>
#include <limits>

#include "amat/eigensolve.hpp"
#include "amat/projection.hpp"

namespace amat {

inline constexpr double kDefaultGapTol = 1e-7;

template <class S>
struct SpectralProjection {
    Projection<S> projection;  // onto the span of eigenvectors with lambda >= threshold
    double gap = 0.0;          // min_i |lambda_i - threshold|
};

/// Spectral projection of a Hermitian matrix for the set [threshold, inf).
///
/// The caller inspects `gap`; nothing here errors on a small gap. Over H
/// the eigensolver already works in the complex embedding, so the result
/// is structure compatible by construction.
template <class S>
SpectralProjection<S> spectral_projection(const Matrix<S>& m, double threshold,
                                          double tol_eig = -1.0) {
    const EigenSystem<S> es = hermitian_eigen(m, tol_eig);
    const int n = m.rows();
    int first = n;  // eigenvalues ascending: first index at or above threshold
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        gap = std::min(gap, std::abs(es.eigenvalues[i] - threshold));
        if (first == n && es.eigenvalues[i] >= threshold) first = i;
    }
    const int k = n - first;
    Matrix<S> proj(n, n);
    if (k > 0) {
        const Matrix<S> v = es.eigenvectors.cols_range(first, k);
        proj = v * v.adjoint();
    }
    SpectralProjection<S> out;
    // Residuals here are rounding-level; the loose gate just guards
    // against a catastrophically wrong eigensolve.
    out.projection = validate_projection(proj, 1e-8 * std::max(1, n));
    out.gap = gap;
    return out;
}

/// Variant that insists on a safe distance between the spectrum and the
/// threshold.
template <class S>
SpectralProjection<S> spectral_projection_strict(const Matrix<S>& m, double threshold,
                                                 double gap_tol = kDefaultGapTol,
                                                 double tol_eig = -1.0) {
    SpectralProjection<S> sp = spectral_projection(m, threshold, tol_eig);
    if (!(sp.gap >= gap_tol))
        throw SpectralGapTooSmall("spectral gap " + std::to_string(sp.gap) + " below " +
                                  std::to_string(gap_tol));
    return sp;
}

}  // namespace amat
