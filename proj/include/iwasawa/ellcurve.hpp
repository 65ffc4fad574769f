#pragma once

/**
 * @file ellcurve.hpp
 * @brief Short Weierstrass curves over F_p, their Frobenius traces, and the
 *        point count over F_{p^n} modulo p^2.
 *
 * The count over F_{p^n} follows from the trace alone:
 *
 *     #E(F_{p^n}) = p^n + 1 - t_n,   t_0 = 2, t_1 = a_p,
 *     t_n = a_p t_{n-1} - p t_{n-2}.
 *
 * Only t_n mod p^2 is ever formed, so the exponent n = p - 1 costs a handful
 * of 2x2 matrix products regardless of how large p^n is.
 */

#include <optional>
#include <vector>

#include "iwasawa/catalog.hpp"
#include "iwasawa/modmath.hpp"
#include "iwasawa/quadfield.hpp"

namespace iwasawa {

inline constexpr u64 kBruteForceFp2Cap = 200;
inline constexpr u64 kNaiveEnumerationCap = 50;
inline constexpr u64 kOrdinaryScanCap = 100;

/// y^2 = x^3 + A x + B over F_p, p > 3, nonsingular.
class CurveFp {
public:
    /// Throws InvalidArgument for p <= 3 or composite p, BadReduction when
    /// 4A^3 + 27B^2 = 0 (mod p).
    CurveFp(u64 p, i128 A, i128 B);

    u64 p() const noexcept { return p_; }
    u64 A() const noexcept { return A_; }
    u64 B() const noexcept { return B_; }

    /// x^3 + A x + B mod p.
    u64 rhs(u64 x) const;

    /// (A c^2, B c^3).
    CurveFp twist(u64 c) const;

    Residue j_invariant() const;

    bool operator==(const CurveFp&) const = default;

private:
    u64 p_;
    u64 A_;
    u64 B_;
};

struct TraceData {
    CurveFp curve;
    i64 count_p = 0;  ///< #E(F_p), point at infinity included
    i64 a_p = 0;      ///< p + 1 - count_p
};

/// 1 + p + sum over x of the Legendre symbol of x^3 + Ax + B.
i64 count_points_fp(const CurveFp& curve);

/// Counts every affine (x, y) pair. Secondary oracle, p <= 50.
i64 count_points_fp_naive(const CurveFp& curve);

TraceData trace_ap(const CurveFp& curve);

/// Ordinary iff a_p != 0 (valid for p >= 5).
bool is_ordinary(const TraceData& trace);

/// t_n = pi^n + conj(pi)^n mod p^2.
Residue trace_power_mod(i64 a_p, u64 p, u64 n);

/// #E(F_{p^n}) mod p^2. The lambda test uses n = p - 1.
Residue count_mod_p2(const CurveFp& curve, u64 n);
Residue count_mod_p2(const TraceData& trace, u64 n);

/// #E(F_{p^2}) by enumeration over F_p[t]/(t^2 - nu). Throws TooLarge past
/// p = 200.
i64 count_points_fp2_bruteforce(const CurveFp& curve);

/// Sum of the quadratic character of F_{p^k} over f(x), k in {1, 2}.
/// Throws TooLarge for other degrees.
i64 char_sum(const CurveFp& curve, unsigned extension_degree);

/// A curve with the given j-invariant; j = 0 and j = 1728 map to
/// y^2 = x^3 + 1 and y^2 = x^3 + x.
CurveFp curve_from_j(u64 j, u64 p);

/// Reduction of a catalog model at p; throws BadReduction.
CurveFp reduce_entry(const CMCatalogEntry& entry, u64 p);

bool has_good_reduction(const CMCatalogEntry& entry, u64 p);

struct Theorem1Verdict {
    u64 d = 0;
    u64 p = 0;
    bool gold = false;
    Residue count_residue{0, 1};
    bool agree = false;
};

/// Runs both criteria at p and compares them. Throws ClassNumberUnsupported
/// if h > 1, BadReduction if p divides the model discriminant, and
/// PreconditionViolated if p is not a split prime > 3.
Theorem1Verdict theorem1_check(const ImagQuadField& field, const CMCatalogEntry& entry, u64 p);

/// One row per split prime 3 < p <= p_max. Bad-reduction primes are kept
/// with an empty value.
struct TableRow {
    u64 p = 0;
    std::optional<Residue> count;  ///< empty: bad reduction
};
std::vector<TableRow> catalog_table(const ImagQuadField& field, const CMCatalogEntry& entry, u64 p_max);

struct Theorem1Row {
    u64 p = 0;
    std::optional<Theorem1Verdict> verdict;  ///< empty: bad reduction
};
std::vector<Theorem1Row> theorem1_scan(const ImagQuadField& field, const CMCatalogEntry& entry,
                                       u64 p_max);

struct OrdinaryWitness {
    u64 j = 0;
    CurveFp curve;
    i64 a_p = 0;
};

struct OrdinaryScan {
    u64 p = 0;
    u64 ordinary_classes = 0;  ///< j-invariants whose representative is ordinary
    std::vector<OrdinaryWitness> witnesses;
};

/// Tests one representative per j-invariant over F_p and reports those that
/// are ordinary with #E(F_{p^{p-1}}) = 0 (mod p^2), ordered by j.
OrdinaryScan scan_ordinary_prime(u64 p, u64 cap = kOrdinaryScanCap);

}  // namespace iwasawa
