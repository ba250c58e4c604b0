#pragma once

#include <stdexcept>
#include <string>

namespace screw {

enum class Errc {
    InvalidInput,
    Singular,
    IdenticallyZero,
    NoPseudoinverse,
    RankDeficient,
    ZeroTwist,
    NotLines,
    Dependent,
    NotInInvolution,
    NotComplementary,
    NotDual,
    ZeroDirection,
    UnclassifiableRank,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace screw
