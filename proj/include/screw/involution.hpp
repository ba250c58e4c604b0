#pragma once

#include <optional>
#include <string>
#include <vector>

#include "screw/systems.hpp"

namespace screw {

/// A set of m independent zero-pitch screws (lines in Pluecker coordinates).
template <class S>
class LineSet {
public:
    explicit LineSet(std::vector<Twist<S>> lines) : lines_(std::move(lines)) {
        if (lines_.empty() || lines_.size() > 6)
            fail(Errc::InvalidInput, "line set must have 1..6 elements");
        for (const auto& s : lines_) {
            if (vec_is_zero(s.omega))
                fail(Errc::NotLines, "a line must have nonzero angular part");
            const S q = pairing(s, s, Pitch<S>::finite(S(0)));
            S scale(0);
            for (const auto& v : s.omega) scale = std::max(scale, ScalarTraits<S>::abs(v));
            for (const auto& v : s.vel) scale = std::max(scale, ScalarTraits<S>::abs(v));
            if (!ScalarTraits<S>::is_zero(q, scale * scale))
                fail(Errc::NotLines, "a line must have zero pitch");
        }
        jacobian_ = std::make_unique<ScrewJacobian<S>>(lines_);
        independent_ = jacobian_->full_column_rank();
    }

    const std::vector<Twist<S>>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }
    bool independent() const { return independent_; }
    const ScrewJacobian<S>& jacobian() const { return *jacobian_; }

private:
    std::vector<Twist<S>> lines_;
    std::unique_ptr<ScrewJacobian<S>> jacobian_;
    bool independent_;
};

enum class TransversalCount { Zero, One, Two, Infinite, NotApplicable };

inline std::string transversal_count_name(TransversalCount t) {
    switch (t) {
        case TransversalCount::Zero: return "Zero";
        case TransversalCount::One: return "One";
        case TransversalCount::Two: return "Two";
        case TransversalCount::Infinite: return "Infinite";
        case TransversalCount::NotApplicable: return "NotApplicable";
    }
    return "?";
}

template <class S>
struct InvolutionCertificate {
    Twist<S> transversal; // z in S with <s_i, z>_0 = 0 for every line
    Wrench<S> wrench;     // Q_0 z: the equilibrating wrench
};

template <class S>
struct InvolutionReport {
    bool in_involution = false;
    std::optional<InvolutionCertificate<S>> certificate;
    std::string geometric_case = "NotApplicable";
    TransversalCount transversal_count = TransversalCount::NotApplicable;
};

/// Sylvester's condition: m independent lines are in involution iff
/// det(J'Q_0 J) = 0, i.e. J^{+0} does not exist. The certificate z = J*lambda
/// comes from the Gram kernel; Q_0 z is the equilibrating wrench.
template <class S>
InvolutionReport<S> is_in_involution(const LineSet<S>& l) {
    if (!l.independent()) fail(Errc::Dependent, "lines must be linearly independent");
    const ScrewJacobian<S>& j = l.jacobian();
    const GramPencil<S> g = gram_pencil(j);
    const Matrix<S> g_at_0 = g.g0;
    InvolutionReport<S> rep;
    rep.in_involution = rank(g_at_0) < l.size();
    if (rep.in_involution) {
        const Matrix<S> kernel = null_space(g_at_0);
        const Matrix<S> z = j.matrix() * kernel.column(0);
        InvolutionCertificate<S> cert;
        cert.transversal = Twist<S>::from_column(z);
        cert.wrench = Wrench<S>::from_column(q_alpha_beta(S(0), S(1)) * z);
        rep.certificate = std::move(cert);
    }
    return rep;
}

/// Geometric case of an in-involution line set, per the six m=3 arrangements
/// (and the pencil/parallel dichotomy at m=2). Derived by classifying the
/// spanned screw system and checking which modulus vanishes.
template <class S>
std::string classify_involution_geometry(const LineSet<S>& l) {
    InvolutionReport<S> rep = is_in_involution(l);
    if (!rep.in_involution) fail(Errc::NotInInvolution, "lines are not in involution");
    const std::size_t m = l.size();
    if (m == 4) return "InfinitelyManyTransversals";
    if (m == 5) return "CommonTransversal";
    const ScrewSystem<S> sys{l.jacobian()};
    const GHClass<S> cls = classify(sys);
    if (m == 2) {
        // reciprocal coplanar pair: concurrent (plane pencil, IIA h=0) or
        // parallel (IIB h=0)
        const bool parallel = vec_is_zero(cross(l.lines()[0].omega, l.lines()[1].omega));
        return parallel ? "ParallelPlanar" : "ConcurrentPencil";
    }
    switch (cls.type) {
        case SystemType::IA1:
        case SystemType::IA2: return "IA-zero-pitch";
        case SystemType::IB0: return "IB0-zero";
        case SystemType::IB3: return "IB3";
        case SystemType::IIA: return "IIA-zero";
        case SystemType::IIB: return "IIB-zero";
        case SystemType::IIC: return "IIC-zero";
        default:
            fail(Errc::NotInInvolution,
                 "unexpected class for three lines in involution: " + cls.label());
    }
}

/// m = 2, 3 determinant factorisations:
///   det(J'Q_0J) = -<s1,s2>_0^2              (m = 2)
///   det(J'Q_0J) = 2<s1,s2>_0<s2,s3>_0<s3,s1>_0  (m = 3)
/// Returns (det, factored product); the two must agree.
template <class S>
std::pair<S, S> sylvester_factor_identity(const LineSet<S>& l) {
    const std::size_t m = l.size();
    if (m != 2 && m != 3)
        fail(Errc::InvalidInput, "factor identity defined for m in {2, 3}");
    const S det = determinant(gram_pencil(l.jacobian()).g0);
    const Pitch<S> zero = Pitch<S>::finite(S(0));
    if (m == 2) {
        const S p = pairing(l.lines()[0], l.lines()[1], zero);
        return {det, -p * p};
    }
    const S p12 = pairing(l.lines()[0], l.lines()[1], zero);
    const S p23 = pairing(l.lines()[1], l.lines()[2], zero);
    const S p31 = pairing(l.lines()[2], l.lines()[0], zero);
    return {det, S(2) * p12 * p23 * p31};
}

/// Number of transversals to four independent lines: the count of zero-pitch
/// screws in the 0-reciprocal 2-system.
template <class S>
TransversalCount transversal_count(const LineSet<S>& l) {
    if (l.size() != 4) fail(Errc::InvalidInput, "transversal count defined for m = 4");
    if (!l.independent()) fail(Errc::Dependent, "lines must be linearly independent");
    const ScrewSystem<S> sys{l.jacobian()};
    const ReciprocalBasis<S> rec = reciprocal_system(sys, Pitch<S>::finite(S(0)));
    const ScrewSystem<S> rsys{ScrewJacobian<S>(rec.basis)};
    const GHClass<S> cls = classify(rsys);
    const S zero(0);
    auto modulus_is_zero = [&](const GHClass<S>& c) {
        for (const S& v : c.moduli)
            if (ScalarTraits<S>::close(v, zero)) return true;
        return false;
    };
    switch (cls.type) {
        case SystemType::IA: {
            // two real lines in the reciprocal iff its Klein form is indefinite
            const S det0 = determinant(gram_pencil(rsys.basis()).g0);
            return det0 < S(0) ? TransversalCount::Two : TransversalCount::Zero;
        }
        case SystemType::IB: return TransversalCount::One;
        case SystemType::IIA:
        case SystemType::IIB:
            return modulus_is_zero(cls) ? TransversalCount::Infinite : TransversalCount::Zero;
        default: return TransversalCount::Zero; // IIC: all infinite pitch
    }
}

} // namespace screw
