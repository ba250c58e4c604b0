#pragma once

#include <array>
#include <vector>

#include "screw/poly.hpp"
#include "screw/se3.hpp"

namespace screw {

/// 6xm matrix (1 <= m <= 6) whose columns are twists; rank cached at
/// construction.
template <class S>
class ScrewJacobian {
public:
    explicit ScrewJacobian(Matrix<S> mat) : mat_(std::move(mat)) {
        if (mat_.rows() != 6 || mat_.cols() < 1 || mat_.cols() > 6)
            fail(Errc::InvalidInput, "Jacobian must be 6xm with 1 <= m <= 6");
        rank_ = screw::rank(mat_);
    }

    explicit ScrewJacobian(const std::vector<Twist<S>>& twists)
        : ScrewJacobian(columns_to_matrix(twists)) {}

    const Matrix<S>& matrix() const { return mat_; }
    std::size_t cols() const { return mat_.cols(); }
    std::size_t rank() const { return rank_; }
    bool full_column_rank() const { return rank_ == mat_.cols(); }

    Twist<S> column_twist(std::size_t j) const { return Twist<S>::from_column(mat_.column(j)); }

private:
    static Matrix<S> columns_to_matrix(const std::vector<Twist<S>>& twists) {
        Matrix<S> m(6, twists.size());
        for (std::size_t j = 0; j < twists.size(); ++j)
            m.set_column(j, twists[j].to_column());
        return m;
    }

    Matrix<S> mat_;
    std::size_t rank_;
};

/// Gram pencil (G0, Ginf) with G(h) = G0 + h*Ginf = J'Q_h J, plus its
/// determinant as a polynomial in h.
template <class S>
struct GramPencil {
    Matrix<S> g0;
    Matrix<S> ginf;
    PolyH<S> detpoly;

    Matrix<S> at(const S& h) const { return g0 + ginf.scaled(h); }
};

/// m x 6 matrix J'Q_h, the generalised adjoint of J at pitch h.
template <class S>
Matrix<S> generalized_adjoint(const ScrewJacobian<S>& j, const Pitch<S>& h) {
    return j.matrix().transpose() * q_matrix(h);
}

template <class S>
GramPencil<S> gram_pencil(const ScrewJacobian<S>& j) {
    const Matrix<S> jt = j.matrix().transpose();
    GramPencil<S> g;
    g.g0 = jt * q_alpha_beta(S(0), S(1)) * j.matrix();
    g.ginf = jt * q_alpha_beta(S(1), S(0)) * j.matrix();
    g.detpoly = pencil_det(g.g0, g.ginf);
    return g;
}

/// Existence of J^{+h}: rank J = rank(J'Q_h J). For full-column-rank J this
/// is decided by evaluating the pencil determinant at h, so the verdict is
/// consistent with principal-pitch reporting.
template <class S>
bool exists_h_pinv(const ScrewJacobian<S>& j, const Pitch<S>& h) {
    const GramPencil<S> g = gram_pencil(j);
    if (j.full_column_rank()) return !g.detpoly.vanishes_at(h.value());
    return rank(g.at(h.value())) == j.rank();
}

enum class PinvMethod { FullColumnRankGram, RankSixMoorePenrose };

template <class S>
struct PseudoinverseResult {
    Matrix<S> matrix; // m x 6
    Pitch<S> h;
    PinvMethod method;
};

/// J^{+h}: (J'Q_h J)^{-1} J'Q_h for full column rank m < 6, the ordinary
/// Moore-Penrose J'(JJ')^{-1} for rank 6 (h-independent).
template <class S>
PseudoinverseResult<S> h_pseudoinverse(const ScrewJacobian<S>& j, const Pitch<S>& h) {
    if (j.rank() == 6) {
        const Matrix<S> jt = j.matrix().transpose();
        return {jt * inverse(j.matrix() * jt), h, PinvMethod::RankSixMoorePenrose};
    }
    if (!j.full_column_rank())
        fail(Errc::RankDeficient,
             "rank-deficient Jacobian with m < 6: no closed form for the h-pseudoinverse");
    if (!exists_h_pinv(j, h))
        fail(Errc::NoPseudoinverse, "no h-pseudoinverse at this pitch: det(J'Q_hJ) = 0");
    const Matrix<S> adj = generalized_adjoint(j, h);
    return {inverse(adj * j.matrix()) * adj, h, PinvMethod::FullColumnRankGram};
}

/// The four defining axioms (hP1)-(hP4) for a candidate pseudoinverse P:
///   (hP1) JPJ = J,  (hP2) PJP = P,
///   (hP3) (JP)^{*h} = Q_h^{-1}(JP)'Q_h = JP,
///   (hP4) (PJ)^{*h} = (PJ)' = PJ  (joint-space form is I_m).
template <class S>
std::array<bool, 4> verify_axioms(const ScrewJacobian<S>& j, const Matrix<S>& p,
                                  const Pitch<S>& h) {
    const Matrix<S>& jm = j.matrix();
    const Matrix<S> jp = jm * p;
    const Matrix<S> pj = p * jm;
    const Matrix<S> qh = q_matrix(h);
    const Matrix<S> qinv = q_inverse(h);
    return {
        (jm * pj).approx_equals(jm),
        (p * jp).approx_equals(p),
        (qinv * jp.transpose() * qh).approx_equals(jp),
        pj.transpose().approx_equals(pj),
    };
}

template <class S>
std::array<bool, 4> verify_axioms(const ScrewJacobian<S>& j, const PseudoinverseResult<S>& p) {
    return verify_axioms(j, p.matrix, p.h);
}

/// Wrench-space pseudoinverse W^{+h} = (W'Q_h^{-1}W)^{-1} W'Q_h^{-1} for a
/// full-column-rank 6xk wrench matrix; WW^{+h} is the wrench projector.
template <class S>
Matrix<S> wrench_pseudoinverse(const Matrix<S>& w, const Pitch<S>& h) {
    if (w.rows() != 6 || w.cols() < 1 || w.cols() > 6)
        fail(Errc::InvalidInput, "wrench matrix must be 6xk with 1 <= k <= 6");
    if (rank(w) != w.cols())
        fail(Errc::NoPseudoinverse, "wrench matrix does not have full column rank");
    const Matrix<S> wq = w.transpose() * q_inverse(h);
    const Matrix<S> gram = wq * w;
    if (rank(gram) != w.cols())
        fail(Errc::NoPseudoinverse, "W'Q_h^{-1}W is singular at this pitch");
    return inverse(gram) * wq;
}

} // namespace screw
