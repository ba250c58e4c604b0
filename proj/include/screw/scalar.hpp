#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "screw/error.hpp"

namespace screw {

// Exact rational scalar. Kept in lowest terms with positive denominator by
// the backend.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
    static constexpr bool exact = true;

    static bool is_zero(const Rat& v, const Rat& /*scale*/ = Rat(0)) { return v.is_zero(); }
    static bool close(const Rat& a, const Rat& b) { return a == b; }
    // Root-multiplicity comparison; exact for rationals.
    static bool cluster(const Rat& a, const Rat& b) { return a == b; }

    static Rat abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

    static double to_double(const Rat& v) { return v.template convert_to<double>(); }

    // Exact binary expansion of the double; used for irrational root
    // approximations in rational mode.
    static Rat from_double(double v) {
        if (!std::isfinite(v)) fail(Errc::InvalidInput, "non-finite value");
        return Rat(v);
    }

    // sqrt when the argument is a perfect rational square.
    static std::optional<Rat> sqrt_exact(const Rat& v) {
        if (v < 0) return std::nullopt;
        BigInt n = numerator(v), d = denominator(v);
        BigInt sn = boost::multiprecision::sqrt(n);
        BigInt sd = boost::multiprecision::sqrt(d);
        if (sn * sn != n || sd * sd != d) return std::nullopt;
        return Rat(sn, sd);
    }

    static std::string to_string(const Rat& v) {
        if (denominator(v) == 1) return numerator(v).str();
        return numerator(v).str() + "/" + denominator(v).str();
    }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;

    // tau = 1e-10 relative to the largest absolute entry, absolute floor
    // 1e-12 for all-small matrices.
    static double zero_threshold(double scale) {
        return std::max(1e-12, 1e-10 * std::max(1.0, scale));
    }
    static bool is_zero(double v, double scale = 0.0) {
        return std::fabs(v) <= zero_threshold(scale);
    }
    // Moduli / reported-value comparison tolerance.
    static bool close(double a, double b) {
        return std::fabs(a - b) <= 1e-8 * std::max({1.0, std::fabs(a), std::fabs(b)});
    }
    // Root-multiplicity comparison: a repeated polynomial root splits by
    // O(sqrt(eps)) under coefficient rounding, so this is deliberately
    // coarser than close().
    static bool cluster(double a, double b) {
        return std::fabs(a - b) <= 1e-6 * std::max({1.0, std::fabs(a), std::fabs(b)});
    }

    static double abs(double v) { return std::fabs(v); }
    static double to_double(double v) { return v; }
    static double from_double(double v) { return v; }
    static std::optional<double> sqrt_exact(double v) {
        if (v < 0) return std::nullopt;
        return std::sqrt(v);
    }
    static std::string to_string(double v) { return std::to_string(v); }
};

// Parses "p/q", integer, or plain decimal strings into an exact rational.
inline Rat rat_from_string(const std::string& text) {
    auto bad = [&]() -> Rat { fail(Errc::InvalidInput, "malformed rational: '" + text + "'"); };
    if (text.empty()) return bad();
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) return bad();
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") return bad();
            BigInt num(digits);
            BigInt den = 1;
            for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return Rat(num, den);
        }
        return Rat(BigInt(text));
    } catch (const std::exception&) {
        return bad();
    }
}

} // namespace screw
