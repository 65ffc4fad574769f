#pragma once

#include <vector>

#include "iwasawa/modmath.hpp"

namespace iwasawa {

inline constexpr u64 kSequencePrimeCap = 10'000;

/// True iff (prod_{a <= (p^2-1)/m, p does not divide a} a)^(p-1) = 1 (mod p^2).
/// Requires p > 3 prime with p = 1 (mod m), m in {3, 4}; throws
/// CongruenceViolated otherwise, TooLarge past p = 10^4.
bool one_exceptional(u64 p, u64 m);

/// E_0 .. E_upto mod p^2 from sech x = sum E_n x^n / n!, indexed by n (odd
/// entries are zero). upto must be even; the recurrence never divides by
/// anything but 3, so upto may exceed p. Capped at 2 * 10^4.
std::vector<Residue> euler_mod(u64 p, u64 upto);

/// G_0 .. G_upto mod p^2 from (3/2) / (e^x + e^-x + 1) = sum G_n x^n / n!.
std::vector<Residue> glaisher_mod(u64 p, u64 upto);

struct SequenceVerdict {
    u64 p = 0;
    u64 m = 0;
    bool product_is_one = false;
    Residue special_value{0, 1};  ///< G_{p-1} for m = 3, E_{p-1} for m = 4
    Residue curve_residue{0, 1};  ///< #E(F_{p^{p-1}}) mod p^2

    bool agree() const noexcept {
        return product_is_one == special_value.is_zero() && product_is_one == curve_residue.is_zero();
    }
};

/// Computes the product test, the special value, and the point count of
/// y^2 = x^3 - 1 (m = 3) or y^2 = x^3 + x (m = 4) independently.
SequenceVerdict equivalence_check(u64 p, u64 m);

}  // namespace iwasawa
