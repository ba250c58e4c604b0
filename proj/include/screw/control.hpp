#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "screw/pinv.hpp"

namespace screw {

/// Idempotent 6x6 operator with explicit image and kernel bases,
/// image (+) kernel = se(3).
template <class S>
struct Projector {
    Matrix<S> matrix; // 6x6, P^2 = P
    std::optional<Pitch<S>> h;
    Matrix<S> image_basis;  // 6 x m
    Matrix<S> kernel_basis; // 6 x (6-m)
};

/// P_h = J J^{+h}: projection of se(3) onto the column space of J along the
/// h-reciprocal system S^{perp h}.
template <class S>
Projector<S> projector_h(const ScrewJacobian<S>& j, const Pitch<S>& h) {
    const PseudoinverseResult<S> pinv = h_pseudoinverse(j, h);
    Projector<S> p;
    p.matrix = j.matrix() * pinv.matrix;
    p.h = h;
    p.image_basis = j.matrix();
    p.kernel_basis = null_space(generalized_adjoint(j, h));
    return p;
}

template <class S>
struct CostEvaluation {
    S value;            // Phi_h(x) = (s - Jx)'Q_h(s - Jx)
    Matrix<S> gradient; // m x 1: -2 J'Q_h(s - Jx)
    Matrix<S> argument; // m x 1 joint rates
};

template <class S>
CostEvaluation<S> cost_phi(const ScrewJacobian<S>& j, const Twist<S>& s, const Matrix<S>& x,
                           const Pitch<S>& h) {
    if (x.rows() != j.cols() || x.cols() != 1)
        fail(Errc::InvalidInput, "joint-rate vector must be m x 1");
    const Matrix<S> residual = s.to_column() - j.matrix() * x;
    const Matrix<S> q = q_matrix(h);
    CostEvaluation<S> out;
    out.value = (residual.transpose() * q * residual)(0, 0);
    out.gradient = (j.matrix().transpose() * q * residual).scaled(S(-2));
    out.argument = x;
    return out;
}

/// Damped least squares: x = (J'Q_hJ + Lambda)^{-1} J'Q_h s and the modified
/// projector J(J'Q_hJ + Lambda)^{-1}J'Q_h; usable where J^{+h} does not exist.
template <class S>
std::pair<Matrix<S>, Matrix<S>> damped_solution(const ScrewJacobian<S>& j, const Twist<S>& s,
                                                const Matrix<S>& lambda, const Pitch<S>& h) {
    if (lambda.rows() != j.cols() || lambda.cols() != j.cols() || !lambda.is_symmetric())
        fail(Errc::InvalidInput, "Lambda must be symmetric m x m");
    const Matrix<S> adj = generalized_adjoint(j, h);
    const Matrix<S> damped_gram = adj * j.matrix() + lambda;
    const Matrix<S> solve = inverse(damped_gram) * adj; // throws Singular
    return {solve * s.to_column(), j.matrix() * solve};
}

/// Oblique projector onto span(J) along span(Z): P = J(K'J)^{-1}K' where the
/// columns of K span the wrenches annulling Z.
template <class S>
Projector<S> oblique_projector(const ScrewJacobian<S>& j, const Matrix<S>& z) {
    if (z.rows() != 6 || j.cols() + z.cols() != 6)
        fail(Errc::InvalidInput, "complement must be 6 x (6-m)");
    if (rank(Matrix<S>::hcat(j.matrix(), z)) != 6)
        fail(Errc::NotComplementary, "S and Z do not span se(3)");
    const Matrix<S> k = null_space(z.transpose()); // basis of Z*
    const Matrix<S> kj = k.transpose() * j.matrix();
    if (rank(kj) != j.cols()) fail(Errc::NotComplementary, "K'J singular: S meets Z");
    Projector<S> p;
    p.matrix = j.matrix() * inverse(kj) * k.transpose();
    p.image_basis = j.matrix();
    p.kernel_basis = z;
    return p;
}

/// Dual motion/force projector pair for hybrid control: P_h onto the twist
/// space S, P*_h = W W^{+h} onto the wrench space S*.
template <class S>
struct HybridSplit {
    Projector<S> motion_projector;
    Matrix<S> force_projector; // 6x6
};

template <class S>
HybridSplit<S> hybrid_split(const ScrewJacobian<S>& s_basis, const Matrix<S>& sstar_basis,
                            const Pitch<S>& h) {
    if (sstar_basis.rows() != 6) fail(Errc::InvalidInput, "wrench basis must be 6 x k");
    const Matrix<S> work = sstar_basis.transpose() * s_basis.matrix();
    const S scale = std::max(sstar_basis.max_abs(), s_basis.matrix().max_abs());
    for (std::size_t i = 0; i < work.rows(); ++i)
        for (std::size_t j = 0; j < work.cols(); ++j)
            if (!ScalarTraits<S>::is_zero(work(i, j), scale * scale))
                fail(Errc::NotDual, "wrench basis does not annul the twist space");
    HybridSplit<S> out{projector_h(s_basis, h), Matrix<S>()};
    out.force_projector = sstar_basis * wrench_pseudoinverse(sstar_basis, h);
    return out;
}

/// All joint rates moving the point x along direction q: the image under
/// J^{+h} of the 4-system {(w, v) : w x x + v in span(q)}.
template <class S>
Matrix<S> point_direction_task(const ScrewJacobian<S>& j, const Vec3<S>& x, const Vec3<S>& q,
                               const Pitch<S>& h) {
    if (vec_is_zero(q)) fail(Errc::ZeroDirection, "direction must be nonzero");
    Matrix<S> s(6, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec3<S> e{S(0), S(0), S(0)};
        e[i] = S(1);
        const Twist<S> t(e, cross(x, e)); // ev_x(t) = e x x + x x e... = 0
        s.set_column(i, t.to_column());
    }
    s.set_column(3, Twist<S>(Vec3<S>{S(0), S(0), S(0)}, q).to_column());
    const PseudoinverseResult<S> pinv = h_pseudoinverse(j, h);
    return column_space_basis(pinv.matrix * s);
}

} // namespace screw
