#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "amat/detail/eigen_bridge.hpp"
#include "amat/eigensolve.hpp"
#include "amat/embedding.hpp"
#include "amat/matrix.hpp"

namespace amat {

/// Largest singular value. Quaternionic matrices are measured through the
/// complex embedding, which is norm preserving.
template <class S>
double operator_norm(const Matrix<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    if constexpr (field_of<S> == Field::Quaternion) {
        return operator_norm(embed_complex(m));
    } else {
        auto e = detail::to_eigen(m);
        Eigen::BDCSVD<typename detail::EigenOf<S>::type> svd(e);
        return svd.singularValues()(0);
    }
}

template <class S>
struct Svd {
    Matrix<S> u;               // rows x k, orthonormal columns
    std::vector<double> sigma; // k = min(rows, cols), descending
    Matrix<S> v;               // cols x k, orthonormal columns
};

/// Thin SVD with descending singular values.
///
/// Over R and C this is Eigen's Jacobi SVD. Over H the right singular
/// vectors come from the eigendecomposition of M*M (routed through the
/// complex embedding); left vectors are M v / sigma, completed to an
/// orthonormal set where sigma is numerically zero. Completed columns
/// are only meaningful as "some orthonormal cokernel basis", which is
/// all the principal-vector machinery needs at angle pi/2.
template <class S>
Svd<S> svd(const Matrix<S>& m) {
    const int k = std::min(m.rows(), m.cols());
    Svd<S> out;
    if constexpr (field_of<S> != Field::Quaternion) {
        auto e = detail::to_eigen(m);
        Eigen::JacobiSVD<typename detail::EigenOf<S>::type> s(
            e, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.u = detail::from_eigen(s.matrixU());
        out.v = detail::from_eigen(s.matrixV());
        out.sigma.resize(k);
        for (int i = 0; i < k; ++i) out.sigma[i] = s.singularValues()(i);
        return out;
    } else {
        const MatH gram = m.adjoint() * m;  // cols x cols, Hermitian PSD
        const EigenSystem<Quat> es = hermitian_eigen(gram);
        const int c = gram.rows();
        out.u = Matrix<S>(m.rows(), k);
        out.v = Matrix<S>(m.cols(), k);
        out.sigma.resize(k);
        const double smax =
            std::sqrt(std::max(0.0, es.eigenvalues.empty() ? 0.0 : es.eigenvalues.back()));
        const double keep_tol = 64.0 * 2.22e-16 * std::max(1.0, smax) * std::max(1, m.rows());
        int next_unfilled = -1;
        for (int j = 0; j < k; ++j) {
            const int idx = c - 1 - j;  // eigenvalues come ascending
            const double s = std::sqrt(std::max(0.0, es.eigenvalues[idx]));
            out.sigma[j] = s;
            out.v.set_col(j, es.eigenvectors.col(idx));
            if (s > keep_tol) {
                MatH uj = m * es.eigenvectors.col(idx);
                uj *= 1.0 / s;
                out.u.set_col(j, uj);
            } else if (next_unfilled < 0) {
                next_unfilled = j;
            }
        }
        if (next_unfilled >= 0) {
            for (int j = next_unfilled; j < k; ++j) {
                // Best coordinate column after projecting out what we have.
                MatH best(m.rows(), 1);
                double best_norm = -1.0;
                for (int cand = 0; cand < m.rows(); ++cand) {
                    MatH e(m.rows(), 1);
                    e(cand, 0) = Quat{1.0};
                    for (int p = 0; p < j; ++p) {
                        const MatH up = out.u.col(p);
                        const Quat coef = column_dot(up, e);
                        for (int i = 0; i < e.rows(); ++i) e(i, 0) -= up(i, 0) * coef;
                    }
                    const double nrm = column_norm(e);
                    if (nrm > best_norm) {
                        best_norm = nrm;
                        best = e;
                    }
                }
                best *= 1.0 / best_norm;
                out.u.set_col(j, best);
            }
        }
        return out;
    }
}

}  // namespace amat
