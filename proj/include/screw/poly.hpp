#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "screw/matrix.hpp"
#include "screw/scalar.hpp"

namespace screw {

/// Polynomial in the pitch parameter h, low-degree coefficients first.
/// The zero polynomial is the empty list (degree -1 by convention).
template <class S>
class PolyH {
public:
    PolyH() = default;
    explicit PolyH(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool identically_zero() const { return c_.empty(); }
    const std::vector<S>& coefficients() const { return c_; }
    S coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }

    S eval(const S& h) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
        return acc;
    }

    /// Zero test for an evaluated value, scaled by the coefficient magnitudes
    /// so the decision is consistent across the pencil.
    bool vanishes_at(const S& h) const {
        if (identically_zero()) return true;
        S scale(0);
        S hp(1);
        const S ha = ScalarTraits<S>::abs(h);
        for (const auto& c : c_) {
            S term = ScalarTraits<S>::abs(c) * hp;
            if (term > scale) scale = term;
            hp *= ha;
        }
        return ScalarTraits<S>::is_zero(eval(h), scale);
    }

    bool operator==(const PolyH& o) const { return c_ == o.c_; }

    std::string display(const std::string& var = "h") const {
        if (identically_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const S& c = c_[static_cast<std::size_t>(i)];
            if (ScalarTraits<S>::is_zero(c)) continue;
            std::string cs = ScalarTraits<S>::to_string(c);
            if (!out.empty()) {
                if (!cs.empty() && cs[0] == '-') {
                    out += " - ";
                    cs = cs.substr(1);
                } else {
                    out += " + ";
                }
            }
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += (cs == "-1") ? "-" : cs;
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        // Coefficients that are zero at the mode's tolerance (relative to the
        // largest coefficient) are dropped from the top.
        S scale(0);
        for (const auto& v : c_) {
            S av = ScalarTraits<S>::abs(v);
            if (av > scale) scale = av;
        }
        while (!c_.empty() && ScalarTraits<S>::is_zero(c_.back(), scale)) c_.pop_back();
    }

    std::vector<S> c_;
};

/// det(G0 + h*Ginf) by evaluation at m+1 rational nodes and Lagrange
/// interpolation. Exact in rational mode; same scheme in float mode.
template <class S>
PolyH<S> pencil_det(const Matrix<S>& g0, const Matrix<S>& ginf) {
    if (g0.rows() != g0.cols() || ginf.rows() != ginf.cols() || g0.rows() != ginf.rows())
        fail(Errc::InvalidInput, "pencil matrices must be square of equal size");
    const std::size_t m = g0.rows();
    const std::size_t npts = m + 1;
    std::vector<S> xs(npts), ys(npts);
    for (std::size_t k = 0; k < npts; ++k) {
        xs[k] = S(static_cast<int>(k)) - S(static_cast<int>(m / 2));
        ys[k] = determinant<S>(g0 + ginf.scaled(xs[k]));
    }
    // Newton form, expanded to monomial coefficients.
    std::vector<S> divided = ys;
    for (std::size_t level = 1; level < npts; ++level)
        for (std::size_t k = npts - 1; k >= level; --k)
            divided[k] = (divided[k] - divided[k - 1]) / (xs[k] - xs[k - level]);
    std::vector<S> coeffs(npts, S(0));
    std::vector<S> basis{S(1)}; // product (h - x_0)...(h - x_{k-1})
    for (std::size_t k = 0; k < npts; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += divided[k] * basis[i];
        if (k + 1 < npts) {
            basis.push_back(S(0));
            for (std::size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - xs[k] * basis[i];
            basis[0] = -xs[k] * basis[0];
        }
    }
    return PolyH<S>(std::move(coeffs));
}

namespace detail {

inline void solve_quadratic_double(double a, double b, double c, std::vector<double>& out) {
    const double disc = b * b - 4 * a * c;
    const double scale = std::max({1.0, b * b, std::fabs(4 * a * c)});
    if (std::fabs(disc) <= 1e-12 * scale) {
        out.push_back(-b / (2 * a));
        out.push_back(-b / (2 * a));
    } else if (disc > 0) {
        const double sq = std::sqrt(disc);
        out.push_back((-b - sq) / (2 * a));
        out.push_back((-b + sq) / (2 * a));
    }
}

// Real roots of a monic-izable cubic, trigonometric/Cardano form.
inline void solve_cubic_double(double a3, double a2, double a1, double a0,
                               std::vector<double>& out) {
    const double a = a2 / a3, b = a1 / a3, c = a0 / a3;
    const double q = (a * a - 3 * b) / 9;
    const double r = (a * (2 * a * a - 9 * b) + 27 * c) / 54;
    const double q3 = q * q * q;
    if (r * r < q3) {
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double f = -2 * std::sqrt(q);
        out.push_back(f * std::cos(t / 3) - a / 3);
        out.push_back(f * std::cos((t + 2 * std::numbers::pi) / 3) - a / 3);
        out.push_back(f * std::cos((t - 2 * std::numbers::pi) / 3) - a / 3);
    } else {
        double e = std::cbrt(std::fabs(r) + std::sqrt(r * r - q3));
        if (r > 0) e = -e;
        const double f = (e == 0) ? 0 : q / e;
        out.push_back(e + f - a / 3);
        // repeated root case
        const double scale = std::max(1.0, std::fabs(q3));
        if (std::fabs(r * r - q3) <= 1e-12 * scale) {
            out.push_back(-(e + f) / 2 - a / 3);
            out.push_back(-(e + f) / 2 - a / 3);
        }
    }
}

inline std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> d;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
    }
    return d;
}

} // namespace detail

template <class S>
struct RootList {
    std::vector<S> roots; // sorted, with multiplicity
    bool all_exact = true;
};

template <class S>
RootList<S> real_roots(const PolyH<S>& p);

/// Real roots (sorted, with multiplicity) of a degree <= 3 polynomial.
/// Degree <= 2 in closed form; cubics by rational-root test + deflation when
/// possible, float closed form otherwise (approximations flagged inexact).
template <>
inline RootList<Rat> real_roots<Rat>(const PolyH<Rat>& p) {
    using T = ScalarTraits<Rat>;
    if (p.identically_zero())
        fail(Errc::IdenticallyZero, "polynomial vanishes identically; degenerate pencil");
    if (p.degree() > 3) fail(Errc::InvalidInput, "real_roots limited to degree <= 3");
    RootList<Rat> out;
    const int deg = p.degree();
    if (deg == 0) return out;
    if (deg == 1) {
        out.roots.push_back(-p.coefficient(0) / p.coefficient(1));
        return out;
    }
    if (deg == 2) {
        const Rat a = p.coefficient(2), b = p.coefficient(1), c = p.coefficient(0);
        const Rat disc = b * b - 4 * a * c;
        if (disc < 0) return out;
        if (auto sq = T::sqrt_exact(disc)) {
            out.roots.push_back((-b - *sq) / (2 * a));
            out.roots.push_back((-b + *sq) / (2 * a));
        } else {
            const double dsq = std::sqrt(T::to_double(disc));
            out.roots.push_back(T::from_double((T::to_double(-b) - dsq) / (2 * T::to_double(a))));
            out.roots.push_back(T::from_double((T::to_double(-b) + dsq) / (2 * T::to_double(a))));
            out.all_exact = false;
        }
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }
    // cubic: clear denominators, try rational roots r = +-p/q with
    // p | a0, q | a3, then deflate to a quadratic
    BigInt lcm = 1;
    for (int i = 0; i <= 3; ++i) {
        BigInt d = denominator(p.coefficient(static_cast<std::size_t>(i)));
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<BigInt> ic(4);
    for (int i = 0; i <= 3; ++i)
        ic[static_cast<std::size_t>(i)] =
            numerator(p.coefficient(static_cast<std::size_t>(i)) * Rat(lcm));
    std::optional<Rat> found;
    if (ic[0] == 0) {
        found = Rat(0);
    } else {
        for (const auto& pn : detail::divisors(ic[0])) {
            for (const auto& qd : detail::divisors(ic[3])) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * pn, qd);
                    if (p.eval(cand).is_zero()) {
                        found = cand;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    if (found) {
        const Rat r = *found;
        // synthetic division by (h - r)
        const Rat a = p.coefficient(3);
        const Rat b = p.coefficient(2) + a * r;
        const Rat c = p.coefficient(1) + b * r;
        RootList<Rat> quad = real_roots<Rat>(PolyH<Rat>({c, b, a}));
        out.roots = quad.roots;
        out.roots.push_back(r);
        out.all_exact = quad.all_exact;
    } else {
        std::vector<double> dr;
        detail::solve_cubic_double(T::to_double(p.coefficient(3)), T::to_double(p.coefficient(2)),
                                   T::to_double(p.coefficient(1)), T::to_double(p.coefficient(0)),
                                   dr);
        for (double v : dr) out.roots.push_back(T::from_double(v));
        out.all_exact = false;
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

template <>
inline RootList<double> real_roots<double>(const PolyH<double>& p) {
    if (p.identically_zero())
        fail(Errc::IdenticallyZero, "polynomial vanishes identically; degenerate pencil");
    if (p.degree() > 3) fail(Errc::InvalidInput, "real_roots limited to degree <= 3");
    RootList<double> out;
    out.all_exact = false;
    const int deg = p.degree();
    if (deg == 0) return out;
    if (deg == 1) {
        out.roots.push_back(-p.coefficient(0) / p.coefficient(1));
    } else if (deg == 2) {
        detail::solve_quadratic_double(p.coefficient(2), p.coefficient(1), p.coefficient(0),
                                       out.roots);
    } else {
        detail::solve_cubic_double(p.coefficient(3), p.coefficient(2), p.coefficient(1),
                                   p.coefficient(0), out.roots);
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace screw
