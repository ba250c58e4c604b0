#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "screw/pinv.hpp"

namespace screw {

/// A screw system: the column span of a full-column-rank Jacobian, m <= 5.
template <class S>
class ScrewSystem {
public:
    explicit ScrewSystem(ScrewJacobian<S> basis) : basis_(std::move(basis)) {
        if (!basis_.full_column_rank())
            fail(Errc::UnclassifiableRank, "screw system basis must have full column rank");
        if (basis_.cols() > 5)
            fail(Errc::InvalidInput, "screw systems have dimension 1..5");
    }

    const ScrewJacobian<S>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.cols(); }

private:
    ScrewJacobian<S> basis_;
};

enum class SystemType {
    HFinite,
    HInfinite,
    IA,   // m = 2
    IA1,  // m = 3, distinct principal pitches
    IA2,  // m = 3, repeated principal pitch
    IB,
    IB0,
    IB3,
    IC,
    IIA,
    IIB,
    IIC,
    IID,
    Reciprocal, // m in {4, 5}: typed by the 0-reciprocal system
};

inline std::string system_type_name(SystemType t) {
    switch (t) {
        case SystemType::HFinite: return "H-finite";
        case SystemType::HInfinite: return "H-infinite";
        case SystemType::IA: return "IA";
        case SystemType::IA1: return "IA1";
        case SystemType::IA2: return "IA2";
        case SystemType::IB: return "IB";
        case SystemType::IB0: return "IB0";
        case SystemType::IB3: return "IB3";
        case SystemType::IC: return "IC";
        case SystemType::IIA: return "IIA";
        case SystemType::IIB: return "IIB";
        case SystemType::IIC: return "IIC";
        case SystemType::IID: return "IID";
        case SystemType::Reciprocal: return "Reciprocal";
    }
    return "?";
}

/// Gibson-Hunt class: type tag, pitch moduli (translational moduli are not
/// extracted), and the affine dimension d of S meeting the plane at infinity.
template <class S>
struct GHClass {
    std::size_t dimension = 0;
    SystemType type = SystemType::HFinite;
    std::vector<S> moduli;
    std::size_t dim_inf = 0;
    bool degenerate_warning = false;
    std::shared_ptr<const GHClass<S>> reciprocal; // set iff type == Reciprocal

    std::string label() const {
        if (type == SystemType::Reciprocal)
            return "Reciprocal(" + std::to_string(dimension) + ", " + reciprocal->label() + ")";
        return system_type_name(type);
    }

    bool same_class(const GHClass& o) const {
        if (dimension != o.dimension || type != o.type || dim_inf != o.dim_inf) return false;
        if (moduli.size() != o.moduli.size()) return false;
        // moduli are a multiset; both sides are kept sorted
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (!ScalarTraits<S>::close(moduli[i], o.moduli[i])) return false;
        if (type == SystemType::Reciprocal) return reciprocal->same_class(*o.reciprocal);
        return true;
    }
};

/// Affine dimension of S intersected with {omega = 0}: m - rank of the 3xm
/// angular-part block.
template <class S>
std::size_t dim_at_infinity(const ScrewSystem<S>& s) {
    const Matrix<S>& j = s.basis().matrix();
    Matrix<S> ang(3, j.cols());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < j.cols(); ++c) ang(i, c) = j(i, c);
    return j.cols() - rank(ang);
}

/// The single pitch h with S contained in q_h, when the system is type II:
/// Infinity when all generators are translations, the finite h with
/// G0 + h*Ginf = 0 when one exists, nothing otherwise.
template <class S>
std::optional<Pitch<S>> type_two_pitch(const ScrewSystem<S>& s) {
    const GramPencil<S> g = gram_pencil(s.basis());
    S scale = g.g0.max_abs();
    if (g.ginf.max_abs() > scale) scale = g.ginf.max_abs();
    bool ginf_zero = true;
    S best(0);
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < g.ginf.rows(); ++i)
        for (std::size_t j = 0; j < g.ginf.cols(); ++j) {
            const S av = ScalarTraits<S>::abs(g.ginf(i, j));
            if (!ScalarTraits<S>::is_zero(g.ginf(i, j), scale)) ginf_zero = false;
            if (av > best) {
                best = av;
                bi = i;
                bj = j;
            }
        }
    if (ginf_zero) {
        // all angular parts vanish (Ginf = -2 Omega'Omega = 0); type II at
        // infinity needs G0 = 0 as well, which holds automatically then
        return Pitch<S>::infinity();
    }
    const S h = -g.g0(bi, bj) / g.ginf(bi, bj);
    const Matrix<S> at_h = g.at(h);
    S hscale = scale * std::max(S(1), ScalarTraits<S>::abs(h));
    for (std::size_t i = 0; i < at_h.rows(); ++i)
        for (std::size_t j = 0; j < at_h.cols(); ++j)
            if (!ScalarTraits<S>::is_zero(at_h(i, j), hscale)) return std::nullopt;
    return Pitch<S>::finite(h);
}

/// Canonical basis of S^{perp h}: the nullspace of J'Q_h (6 - m columns).
template <class S>
struct ReciprocalBasis {
    Matrix<S> basis; // 6 x (6-m)
    Pitch<S> h;
};

template <class S>
ReciprocalBasis<S> reciprocal_system(const ScrewSystem<S>& s, const Pitch<S>& h) {
    return {null_space(generalized_adjoint(s.basis(), h)), h};
}

/// True iff det(J'Q_hJ) vanishes identically: the Table-3 classes, for which
/// no h-pseudoinverse exists at any pitch.
template <class S>
bool no_pinv_for_all_h(const ScrewSystem<S>& s) {
    return gram_pencil(s.basis()).detpoly.identically_zero();
}

namespace detail {

// All 2x2 minors of the pencil G(h) = G0 + h*Ginf as quadratics in h.
template <class S>
std::vector<PolyH<S>> pencil_2x2_minors(const Matrix<S>& g0, const Matrix<S>& ginf) {
    std::vector<PolyH<S>> minors;
    const std::size_t n = g0.rows();
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t j2 = j1 + 1; j2 < n; ++j2) {
                    // (a0 + a1 h)(d0 + d1 h) - (b0 + b1 h)(c0 + c1 h)
                    const S a0 = g0(i1, j1), a1 = ginf(i1, j1);
                    const S b0 = g0(i1, j2), b1 = ginf(i1, j2);
                    const S c0 = g0(i2, j1), c1 = ginf(i2, j1);
                    const S d0 = g0(i2, j2), d1 = ginf(i2, j2);
                    minors.emplace_back(std::vector<S>{
                        a0 * d0 - b0 * c0,
                        a0 * d1 + a1 * d0 - b0 * c1 - b1 * c0,
                        a1 * d1 - b1 * c1,
                    });
                }
    return minors;
}

// Principal pitches of an identically-singular 3-pencil of generic rank 2:
// the h where rank G(h) drops below 2, i.e. the common roots of all 2x2
// minors. Candidates come from the lowest-degree nonzero minor.
template <class S>
std::vector<S> rank_drop_pitches(const GramPencil<S>& g, bool& warning) {
    const auto minors = pencil_2x2_minors(g.g0, g.ginf);
    const PolyH<S>* seed = nullptr;
    for (const auto& m : minors)
        if (!m.identically_zero() && (!seed || m.degree() < seed->degree())) seed = &m;
    if (!seed || seed->degree() == 0) {
        warning = true;
        return {};
    }
    std::vector<S> out;
    for (const S& cand : real_roots(*seed).roots) {
        bool common = true;
        for (const auto& m : minors)
            if (!m.vanishes_at(cand)) {
                common = false;
                break;
            }
        bool dup = false;
        for (const S& prev : out)
            if (ScalarTraits<S>::close(prev, cand)) dup = true;
        if (common && !dup) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Gibson-Hunt classification for m <= 3.
template <class S>
GHClass<S> classify(const ScrewSystem<S>& s) {
    const std::size_t m = s.dimension();
    if (m > 3) fail(Errc::InvalidInput, "classify handles m <= 3; use classify_via_reciprocal");
    GHClass<S> out;
    out.dimension = m;
    out.dim_inf = dim_at_infinity(s);

    if (m == 1) {
        const Pitch<S> p = pitch(s.basis().column_twist(0));
        if (p.is_infinite()) {
            out.type = SystemType::HInfinite;
        } else {
            out.type = SystemType::HFinite;
            out.moduli.push_back(p.value());
        }
        return out;
    }

    const auto tII = type_two_pitch(s);
    if (tII) {
        static constexpr SystemType by_d[4] = {SystemType::IIA, SystemType::IIB, SystemType::IIC,
                                               SystemType::IID};
        out.type = by_d[out.dim_inf];
        if (!tII->is_infinite()) out.moduli.push_back(tII->value());
        return out;
    }

    const GramPencil<S> pencil = gram_pencil(s.basis());
    if (m == 2) {
        if (out.dim_inf == 0) {
            out.type = SystemType::IA;
            out.moduli = real_roots(pencil.detpoly).roots;
        } else {
            // det is a nonzero constant for IB; moduli = its (empty) root set
            out.type = SystemType::IB;
            if (!pencil.detpoly.identically_zero())
                out.moduli = real_roots(pencil.detpoly).roots;
        }
        return out;
    }

    // m == 3, type I
    if (out.dim_inf == 0) {
        out.moduli = real_roots(pencil.detpoly).roots;
        bool rep01 =
            out.moduli.size() > 1 && ScalarTraits<S>::cluster(out.moduli[0], out.moduli[1]);
        bool rep12 =
            out.moduli.size() > 2 && ScalarTraits<S>::cluster(out.moduli[1], out.moduli[2]);
        if (rep01 && rep12) {
            out.type = SystemType::IA2;
            out.degenerate_warning = true; // triple root; unnamed in the classification
            const S avg = (out.moduli[0] + out.moduli[1] + out.moduli[2]) / S(3);
            out.moduli = {avg, avg, avg};
        } else if (rep01 || rep12) {
            out.type = SystemType::IA2;
            // a numerically split double root straddles the true value;
            // report its midpoint for both copies
            const std::size_t lo = rep01 ? 0 : 1;
            const S avg = (out.moduli[lo] + out.moduli[lo + 1]) / S(2);
            out.moduli[lo] = avg;
            out.moduli[lo + 1] = avg;
        } else {
            out.type = SystemType::IA1;
        }
    } else if (out.dim_inf == 1) {
        if (!pencil.detpoly.identically_zero()) {
            out.type = SystemType::IB0;
            const auto roots = real_roots(pencil.detpoly).roots;
            for (const S& r : roots) {
                bool dup = false;
                for (const S& prev : out.moduli)
                    if (ScalarTraits<S>::close(prev, r)) dup = true;
                if (!dup) out.moduli.push_back(r);
            }
            if (out.moduli.size() != 1 || roots.size() != out.moduli.size())
                out.degenerate_warning = true;
        } else {
            out.type = SystemType::IB3;
            out.moduli = detail::rank_drop_pitches(pencil, out.degenerate_warning);
        }
    } else {
        out.type = SystemType::IC;
    }
    return out;
}

/// m in {4, 5}: classified by the type of the 0-reciprocal (6-m)-system.
template <class S>
GHClass<S> classify_via_reciprocal(const ScrewSystem<S>& s) {
    const std::size_t m = s.dimension();
    if (m < 4) fail(Errc::InvalidInput, "classify_via_reciprocal handles m in {4, 5}");
    const ReciprocalBasis<S> rec = reciprocal_system(s, Pitch<S>::finite(S(0)));
    GHClass<S> out;
    out.dimension = m;
    out.type = SystemType::Reciprocal;
    out.dim_inf = dim_at_infinity(s);
    out.reciprocal = std::make_shared<GHClass<S>>(
        classify(ScrewSystem<S>(ScrewJacobian<S>(rec.basis))));
    out.moduli = out.reciprocal->moduli;
    return out;
}

/// classify / classify_via_reciprocal dispatch on dimension.
template <class S>
GHClass<S> classify_any(const ScrewSystem<S>& s) {
    return s.dimension() <= 3 ? classify(s) : classify_via_reciprocal(s);
}

} // namespace screw
