#pragma once

#include <vector>

#include "iwasawa/modmath.hpp"
#include "iwasawa/quadfield.hpp"

namespace iwasawa {

/// Outcome of the unit-power test for lambda_p(K) > 1.
struct GoldVerdict {
    u64 p = 0;
    u64 d = 0;
    bool lambda_gt_one = false;
    Residue alpha_power{1, 1};  ///< u^(p-1) mod p^2, u the unit image of the generator
    QuadInt generator;
};

/// Decides lambda_p(K) > 1 from alpha^(p-1) mod (conjugate prime)^2, where
/// (alpha) = p^h. Throws PreconditionViolated if p <= 3, p does not split,
/// or p divides h.
GoldVerdict gold_test(const ImagQuadField& field, u64 p);

/// Same test with the embedding and the generator supplied by the caller.
/// Any unit multiple of a generator of either prime power is accepted.
GoldVerdict gold_test(const ImagQuadField& field, const PrimeSplit& split, const QuadInt& alpha);

/// Verdicts for every prime 3 < p <= p_max that splits in K and does not
/// divide h, in ascending order of p.
std::vector<GoldVerdict> gold_scan(const ImagQuadField& field, u64 p_max);

}  // namespace iwasawa
