#pragma once

#include <cmath>

#include "amat/canonical.hpp"
#include "amat/projection.hpp"
#include "amat/spectral.hpp"
#include "amat/svd.hpp"

namespace amat {

inline constexpr double kDefaultEpsDelta = 1e-6;

/// A commuting replacement pair with its measured certificates. The
/// displacements are measured operator norms, never inferred from the
/// bound; `bound` is the closed-form optimum for the objective that
/// produced the result, so tests can compare the two.
template <class S>
struct FixResult {
    Projection<S> p_fixed;
    Projection<S> q_fixed;
    double delta = 0.0;              // ||PQ - QP|| of the input pair
    double disp_p = 0.0;             // ||P' - P||
    double disp_q = 0.0;             // ||Q' - Q||
    double bound = 0.0;              // optimum for the objective
    double relation_residual = 0.0;  // five defect norms, summed
};

enum class FixObjective { Max, Sum };

/// delta = ||PQ - QP||; at most 1/2 for a projection pair.
template <class S>
double commutator_norm(const Projection<S>& p, const Projection<S>& q) {
    detail::check_pair_shape(p, q);
    return operator_norm(p.mat * q.mat - q.mat * p.mat);
}

/// Optimal max-displacement, sin(arcsin(2 delta)/4). Also evaluates the
/// equivalent nested radical sqrt(1/2 - 1/2 sqrt(1/2 + 1/2 sqrt(1-4d^2)))
/// and insists the two closed forms agree.
inline double max_displacement_bound(double delta) {
    if (!(delta >= -1e-12 && delta <= 0.5 + 1e-12))
        throw DomainError("max_displacement_bound: delta outside [0, 1/2]");
    const double d = std::clamp(delta, 0.0, 0.5);
    const double arcsin_form = std::sin(0.25 * std::asin(2.0 * d));
    const double radical_form =
        std::sqrt(0.5 - 0.5 * std::sqrt(0.5 + 0.5 * std::sqrt(1.0 - 4.0 * d * d)));
    if (std::abs(arcsin_form - radical_form) > 1e-12)
        throw Error("max_displacement_bound: closed forms disagree");
    return arcsin_form;
}

/// Optimal displacement sum, sin(arcsin(2 delta)/2).
inline double sum_displacement_bound(double delta) {
    if (!(delta >= -1e-12 && delta <= 0.5 + 1e-12))
        throw DomainError("sum_displacement_bound: delta outside [0, 1/2]");
    return std::sin(0.5 * std::asin(2.0 * std::clamp(delta, 0.0, 0.5)));
}

namespace detail {

template <class S>
FixResult<S> measure_fix(const Projection<S>& p, const Projection<S>& q, Projection<S> p_fixed,
                         Projection<S> q_fixed, double delta, double bound) {
    FixResult<S> out;
    out.delta = delta;
    out.bound = bound;
    out.disp_p = operator_norm(p_fixed.mat - p.mat);
    out.disp_q = operator_norm(q_fixed.mat - q.mat);
    out.relation_residual = p_fixed.residual_idem + q_fixed.residual_idem +
                            p_fixed.residual_herm + q_fixed.residual_herm +
                            operator_norm(p_fixed.mat * q_fixed.mat - q_fixed.mat * p_fixed.mat);
    out.p_fixed = std::move(p_fixed);
    out.q_fixed = std::move(q_fixed);
    return out;
}

}  // namespace detail

/// Sum-optimal fix: P' = P and Q' the spectral projection for [1/2, inf)
/// of PQP + (I-P)Q(I-P). Attains disp_p + disp_q = sin(arcsin(2 delta)/2)
/// for delta < 1/2; the 1/2-gap of the averaged operator closes as delta
/// approaches 1/2, which raises SpectralGapTooSmall.
template <class S>
FixResult<S> sum_fix(const Projection<S>& p, const Projection<S>& q,
                     double gap_tol = kDefaultGapTol) {
    detail::check_pair_shape(p, q);
    const double delta = commutator_norm(p, q);
    const Matrix<S> id = Matrix<S>::identity(p.n());
    const Matrix<S> ip = id - p.mat;
    const Matrix<S> avg = p.mat * q.mat * p.mat + ip * q.mat * ip;
    const auto sp = spectral_projection_strict(avg, 0.5, gap_tol);
    return detail::measure_fix(p, q, p, sp.projection, delta, sum_displacement_bound(delta));
}

/// Max-optimal fix by the spectral formulas:
///   R = (PQP + QPQ)/2,  S = ((I-P)Q(I-P) + Q(I-P)Q)/2,
///   T = PQP + (I-P)(I-Q)(I-P),
/// E_R, E_S spectral projections for [1/5, inf), E_T for [1/2, inf);
///   P' = E_T E_R E_T + (I-E_T)(I-E_S)(I-E_T),
///   Q' = E_T E_R E_T + (I-E_T) E_S (I-E_T).
/// Attains max(disp_p, disp_q) = sin(arcsin(2 delta)/4).
///
/// Only the T-gap (1/2 sqrt(1 - 4 delta^2)) gates the computation: R and S
/// can have eigenvalues arbitrarily close to 1/5, but those sit in blocks
/// that E_T masks out of P' and Q', so their spectral projections are
/// taken without a gap guard.
template <class S>
FixResult<S> max_fix(const Projection<S>& p, const Projection<S>& q,
                     double eps_delta = kDefaultEpsDelta, double gap_tol = kDefaultGapTol) {
    detail::check_pair_shape(p, q);
    const double delta = commutator_norm(p, q);
    if (!(delta < 0.5 - eps_delta))
        throw DeltaTooLarge("max_fix: delta = " + std::to_string(delta) +
                            " is not below 1/2 - eps_delta");
    const int n = p.n();
    const Matrix<S> id = Matrix<S>::identity(n);
    const Matrix<S>& pm = p.mat;
    const Matrix<S>& qm = q.mat;
    const Matrix<S> ip = id - pm;
    const Matrix<S> iq = id - qm;

    const Matrix<S> r_op = 0.5 * (pm * qm * pm + qm * pm * qm);
    const Matrix<S> s_op = 0.5 * (ip * qm * ip + qm * ip * qm);
    const Matrix<S> t_op = pm * qm * pm + ip * iq * ip;

    const Matrix<S> e_r = spectral_projection(r_op, 0.2).projection.mat;
    const Matrix<S> e_s = spectral_projection(s_op, 0.2).projection.mat;
    const auto t_sp = spectral_projection(t_op, 0.5);
    if (!(t_sp.gap >= gap_tol))
        throw SpectralGapTooSmall("max_fix: T-operator gap " + std::to_string(t_sp.gap) +
                                  " below " + std::to_string(gap_tol));
    const Matrix<S>& e_t = t_sp.projection.mat;
    const Matrix<S> ie_t = id - e_t;

    const Matrix<S> core = e_t * e_r * e_t;
    const Matrix<S> p_new = core + ie_t * (id - e_s) * ie_t;
    const Matrix<S> q_new = core + ie_t * e_s * ie_t;

    const double vtol = 1e-8 * std::max(1, n);
    return detail::measure_fix(p, q, validate_projection(p_new, vtol),
                               validate_projection(q_new, vtol), delta,
                               max_displacement_bound(delta));
}

/// Independent construction of the optimal fixes through the canonical
/// form: per 2x2 block with angle x the max objective takes the midpoint
/// projection at x/2 for both outputs when x <= pi/4 and the pair
/// (I - Q_{x/2+pi/4}, Q_{x/2+pi/4}) past pi/4; the sum objective keeps P
/// and snaps Q to P or I-P. One-dimensional blocks pass through. This is
/// the desk oracle that max_fix must match.
template <class S>
FixResult<S> block_oracle_fix(const Projection<S>& p, const Projection<S>& q,
                              FixObjective objective, double eps_delta = kDefaultEpsDelta) {
    detail::check_pair_shape(p, q);
    const double delta = commutator_norm(p, q);
    if (objective == FixObjective::Max && !(delta < 0.5 - eps_delta))
        throw DeltaTooLarge("block_oracle_fix: delta = " + std::to_string(delta) +
                            " is not below 1/2 - eps_delta");
    const CanonicalForm<S> cf = canonical_form(p, q);
    const int n = cf.n();
    const int j = cf.num_angles();
    constexpr double quarter_pi = 0.78539816339744831;

    Matrix<S> da(n, n), db(n, n);
    for (int k = 0; k < j; ++k) {
        const double x = cf.angles[k];
        Matrix<S> a(2, 2), b(2, 2);
        if (objective == FixObjective::Max) {
            if (x <= quarter_pi) {
                a = block_q<S>(0.5 * x);
                b = a;
            } else {
                b = block_q<S>(0.5 * x + quarter_pi);
                a = Matrix<S>::identity(2) - b;
            }
        } else {
            a = block_p<S>();
            b = (x <= quarter_pi) ? a : Matrix<S>::identity(2) - a;
        }
        da.set_block(2 * k, 2 * k, a);
        db.set_block(2 * k, 2 * k, b);
    }
    for (int k = 0; k < cf.r; ++k) db(2 * j + k, 2 * j + k) = scalar_from_real<S>(1.0);

    const Matrix<S> ua = cf.u.adjoint();
    Projection<S> a_new = validate_projection(cf.u * da * ua, 1e-8 * std::max(1, n));
    Projection<S> b_new = validate_projection(cf.u * db * ua, 1e-8 * std::max(1, n));
    if (cf.swapped) std::swap(a_new, b_new);
    const double bound = objective == FixObjective::Max ? max_displacement_bound(delta)
                                                        : sum_displacement_bound(delta);
    return detail::measure_fix(p, q, std::move(a_new), std::move(b_new), delta, bound);
}

}  // namespace amat
