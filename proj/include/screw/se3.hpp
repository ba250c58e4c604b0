#pragma once

#include <array>

#include "screw/matrix.hpp"
#include "screw/scalar.hpp"

namespace screw {

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3<S> add(const Vec3<S>& a, const Vec3<S>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class S>
bool vec_is_zero(const Vec3<S>& a) {
    S scale(0);
    for (const auto& v : a) {
        S av = ScalarTraits<S>::abs(v);
        if (av > scale) scale = av;
    }
    for (const auto& v : a)
        if (!ScalarTraits<S>::is_zero(v, scale)) return false;
    return true;
}

/// Twist (omega; v): Pluecker coordinates of an element of se(3).
template <class S>
struct Twist {
    Vec3<S> omega{S(0), S(0), S(0)};
    Vec3<S> vel{S(0), S(0), S(0)};

    Twist() = default;
    Twist(Vec3<S> w, Vec3<S> v) : omega(std::move(w)), vel(std::move(v)) {}
    Twist(S w1, S w2, S w3, S v1, S v2, S v3)
        : omega{std::move(w1), std::move(w2), std::move(w3)},
          vel{std::move(v1), std::move(v2), std::move(v3)} {}

    static Twist from_column(const Matrix<S>& c) {
        return Twist({c(0, 0), c(1, 0), c(2, 0)}, {c(3, 0), c(4, 0), c(5, 0)});
    }

    Matrix<S> to_column() const {
        Matrix<S> c(6, 1);
        for (int i = 0; i < 3; ++i) {
            c(static_cast<std::size_t>(i), 0) = omega[static_cast<std::size_t>(i)];
            c(static_cast<std::size_t>(i) + 3, 0) = vel[static_cast<std::size_t>(i)];
        }
        return c;
    }

    bool is_zero() const { return vec_is_zero(omega) && vec_is_zero(vel); }
};

/// Wrench: 6-covector in dual Pluecker coordinates (moment; force).
/// Distinct from Twist; conversion only through Q_h and its inverse.
template <class S>
struct Wrench {
    Vec3<S> moment{S(0), S(0), S(0)};
    Vec3<S> force{S(0), S(0), S(0)};

    static Wrench from_column(const Matrix<S>& c) {
        return Wrench{{c(0, 0), c(1, 0), c(2, 0)}, {c(3, 0), c(4, 0), c(5, 0)}};
    }

    Matrix<S> to_column() const {
        Matrix<S> c(6, 1);
        for (int i = 0; i < 3; ++i) {
            c(static_cast<std::size_t>(i), 0) = moment[static_cast<std::size_t>(i)];
            c(static_cast<std::size_t>(i) + 3, 0) = force[static_cast<std::size_t>(i)];
        }
        return c;
    }

    /// Natural pairing with a twist (work rate), no form involved.
    S apply(const Twist<S>& s) const { return dot(moment, s.omega) + dot(force, s.vel); }
};

/// Pitch parameter: a finite h or the point at infinity, never a sentinel.
template <class S>
class Pitch {
public:
    static Pitch finite(S h) { return Pitch(false, std::move(h)); }
    static Pitch infinity() { return Pitch(true, S(0)); }

    bool is_infinite() const { return infinite_; }
    const S& value() const {
        if (infinite_) fail(Errc::InvalidInput, "finite pitch required");
        return h_;
    }

    bool operator==(const Pitch& o) const {
        if (infinite_ != o.infinite_) return false;
        return infinite_ || ScalarTraits<S>::close(h_, o.h_);
    }

private:
    Pitch(bool inf, S h) : infinite_(inf), h_(std::move(h)) {}
    bool infinite_;
    S h_;
};

/// Rigid displacement (R, t), R'R = I, det R = 1.
template <class S>
struct RigidDisplacement {
    Matrix<S> rotation; // 3x3
    Vec3<S> translation{S(0), S(0), S(0)};

    RigidDisplacement(Matrix<S> r, Vec3<S> t)
        : rotation(std::move(r)), translation(std::move(t)) {
        if (rotation.rows() != 3 || rotation.cols() != 3)
            fail(Errc::InvalidInput, "rotation must be 3x3");
        if (!(rotation.transpose() * rotation).approx_equals(Matrix<S>::identity(3)))
            fail(Errc::InvalidInput, "rotation is not orthogonal");
        const S d = determinant(rotation);
        if (!ScalarTraits<S>::is_zero(d - S(1), S(1)))
            fail(Errc::InvalidInput, "rotation must have determinant 1");
    }

    static RigidDisplacement identity() {
        return RigidDisplacement(Matrix<S>::identity(3), Vec3<S>{S(0), S(0), S(0)});
    }
};

template <class S>
Matrix<S> skew(const Vec3<S>& t) {
    Matrix<S> m(3, 3);
    m(0, 1) = -t[2];
    m(0, 2) = t[1];
    m(1, 0) = t[2];
    m(1, 2) = -t[0];
    m(2, 0) = -t[1];
    m(2, 1) = t[0];
    return m;
}

/// Q_{alpha,beta} = alpha*Q_inf + beta*Q_0, unhalved convention:
/// Q_h = [[-2h I, I], [I, 0]], Q_inf = [[-2 I, 0], [0, 0]].
template <class S>
Matrix<S> q_alpha_beta(const S& alpha, const S& beta) {
    Matrix<S> q(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        q(i, i) = S(-2) * alpha;
        q(i, i + 3) = beta;
        q(i + 3, i) = beta;
    }
    return q;
}

template <class S>
Matrix<S> q_matrix(const Pitch<S>& p) {
    return p.is_infinite() ? q_alpha_beta(S(1), S(0)) : q_alpha_beta(p.value(), S(1));
}

/// Q_h^{-1} = [[0, I], [I, 2h I]]; also the invariant form of the co-adjoint
/// action on wrenches.
template <class S>
Matrix<S> q_inverse(const Pitch<S>& p) {
    const S& h = p.value();
    Matrix<S> q(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        q(i, i + 3) = S(1);
        q(i + 3, i) = S(1);
        q(i + 3, i + 3) = S(2) * h;
    }
    return q;
}

/// <s1, s2>_h = -2h w1.w2 + w1.v2 + v1.w2 (finite h); -2 w1.w2 at infinity.
template <class S>
S pairing(const Twist<S>& s1, const Twist<S>& s2, const Pitch<S>& p) {
    if (p.is_infinite()) return S(-2) * dot(s1.omega, s2.omega);
    return S(-2) * p.value() * dot(s1.omega, s2.omega) + dot(s1.omega, s2.vel) +
           dot(s1.vel, s2.omega);
}

template <class S>
Pitch<S> pitch(const Twist<S>& s) {
    if (s.is_zero()) fail(Errc::ZeroTwist, "pitch of the zero twist is undefined");
    if (vec_is_zero(s.omega)) return Pitch<S>::infinity();
    return Pitch<S>::finite(dot(s.omega, s.vel) / dot(s.omega, s.omega));
}

/// 6x6 matrix of the adjoint action: [[R, 0], [TR, R]].
template <class S>
Matrix<S> adjoint_matrix(const RigidDisplacement<S>& g) {
    const Matrix<S> tr = skew(g.translation) * g.rotation;
    Matrix<S> ad(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            ad(i, j) = g.rotation(i, j);
            ad(i + 3, j) = tr(i, j);
            ad(i + 3, j + 3) = g.rotation(i, j);
        }
    return ad;
}

template <class S>
Twist<S> adjoint_action(const RigidDisplacement<S>& g, const Twist<S>& s) {
    return Twist<S>::from_column(adjoint_matrix(g) * s.to_column());
}

/// Lie bracket [s1, s2] = (w1 x w2; w1 x v2 + v1 x w2).
template <class S>
Twist<S> bracket(const Twist<S>& s1, const Twist<S>& s2) {
    return Twist<S>(cross(s1.omega, s2.omega),
                    add(cross(s1.omega, s2.vel), cross(s1.vel, s2.omega)));
}

/// Velocity of the point x under the twist: w x x + v.
template <class S>
Vec3<S> evaluate_field(const Twist<S>& s, const Vec3<S>& x) {
    return add(cross(s.omega, x), s.vel);
}

} // namespace screw
