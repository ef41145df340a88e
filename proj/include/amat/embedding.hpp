#pragma once

#include <cmath>

#include "amat/errors.hpp"
#include "amat/matrix.hpp"

namespace amat {

// The embedding chi : M_n(H) -> M_2n(C) used throughout. Writing a
// quaternionic matrix as M = A1 + j*A2 with complex A1, A2 (entrywise
// q = z + j*w, z = a + b*i, w = c - d*i),
//
//     chi(M) = [ A1  -conj(A2) ]
//              [ A2   conj(A1) ]
//
// chi is a *-homomorphism, and its image is exactly the set of complex
// matrices X with X = J conj(X) J^{-1}, J = [[0, -I], [I, 0]].

inline MatC embed_complex(const MatH& m) {
    const int n = m.rows(), c = m.cols();
    MatC x(2 * n, 2 * c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            const Cplx z = complex_first(m(i, j));
            const Cplx w = complex_second(m(i, j));
            x(i, j) = z;
            x(i, j + c) = -std::conj(w);
            x(i + n, j) = w;
            x(i + n, j + c) = std::conj(z);
        }
    }
    return x;
}

/// Frobenius distance from X to J conj(X) J^{-1}; zero exactly on chi's image.
inline double structure_residual(const MatC& x) {
    if (x.rows() % 2 != 0 || x.cols() % 2 != 0)
        throw DimensionMismatch("structure_residual expects even dimensions");
    const int n = x.rows() / 2, c = x.cols() / 2;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            // Structure: B22 = conj(B11), B12 = -conj(B21).
            const Cplx d1 = x(i + n, j + c) - std::conj(x(i, j));
            const Cplx d2 = x(i, j + c) + std::conj(x(i + n, j));
            s += 2.0 * (std::norm(d1) + std::norm(d2));
        }
    }
    return std::sqrt(s);
}

/// Inverse of embed_complex on (a numerical neighborhood of) its image.
/// Averages the two redundant block copies.
inline MatH unembed_complex(const MatC& x, double tol_struct = 1e-10) {
    if (x.rows() % 2 != 0 || x.cols() % 2 != 0)
        throw StructureViolation("unembed_complex: dimensions must be even");
    const double res = structure_residual(x);
    if (!(res <= tol_struct))
        throw StructureViolation("unembed_complex: structure residual " + std::to_string(res) +
                                 " exceeds tolerance");
    const int n = x.rows() / 2, c = x.cols() / 2;
    MatH m(n, c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            const Cplx z = 0.5 * (x(i, j) + std::conj(x(i + n, j + c)));
            const Cplx w = 0.5 * (x(i + n, j) - std::conj(x(i, j + c)));
            m(i, j) = quat_from_complex_pair(z, w);
        }
    }
    return m;
}

/// Column version of chi: the quaternionic column v = x + j*y maps to
/// [x; y] in C^{2n}. This is the first column of embed_complex(v).
inline MatC embed_column(const MatH& v) {
    if (v.cols() != 1) throw DimensionMismatch("embed_column expects a column");
    const int n = v.rows();
    MatC c(2 * n, 1);
    for (int i = 0; i < n; ++i) {
        c(i, 0) = complex_first(v(i, 0));
        c(i + n, 0) = complex_second(v(i, 0));
    }
    return c;
}

/// Inverse of embed_column; no structure check needed (columns are free).
inline MatH unembed_column(const MatC& c) {
    if (c.cols() != 1 || c.rows() % 2 != 0)
        throw DimensionMismatch("unembed_column expects an even-length column");
    const int n = c.rows() / 2;
    MatH v(n, 1);
    for (int i = 0; i < n; ++i) v(i, 0) = quat_from_complex_pair(c(i, 0), c(i + n, 0));
    return v;
}

/// The antiunitary symmetry T([v; w]) = [-conj(w); conj(v)] on C^{2n}.
/// Equals J conj(.) with J = chi(j); T^2 = -1, <Tx, Ty> = <y, x>.
/// On embedded columns, T is right multiplication by the quaternion j.
inline MatC apply_antiunitary_T(const MatC& x) {
    if (x.cols() != 1) throw DimensionMismatch("apply_antiunitary_T expects a column");
    if (x.rows() % 2 != 0) throw DimensionMismatch("apply_antiunitary_T: odd length");
    const int n = x.rows() / 2;
    MatC t(2 * n, 1);
    for (int i = 0; i < n; ++i) {
        t(i, 0) = -std::conj(x(i + n, 0));
        t(i + n, 0) = std::conj(x(i, 0));
    }
    return t;
}

}  // namespace amat
