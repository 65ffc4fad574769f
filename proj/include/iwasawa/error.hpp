#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

enum class Errc {
    ModulusMismatch,
    NotInvertible,
    NotAResidue,
    NotSquarefree,
    NotFundamental,
    NoSolution,
    PreconditionViolated,
    BadReduction,
    ClassNumberUnsupported,
    CongruenceViolated,
    TooLarge,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Thrown for every domain failure in the library. The code identifies the
/// failure class; what() carries a human-readable reason.
class MathError : public std::runtime_error {
public:
    MathError(Errc code, const std::string& reason)
        : std::runtime_error(reason), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace iwasawa
