#pragma once

/**
 * @file quadfield.hpp
 * @brief Imaginary quadratic fields K = Q(sqrt(-d)) and the pieces of their
 *        arithmetic needed at a split prime p.
 *
 * Elements of the ring of integers are stored as (x + y sqrt(D)) / 2 with D
 * the fundamental discriminant; this covers both D = 1 and D = 0 (mod 4)
 * without a case split. A split prime p is described by a square root R of D
 * modulo p^2. The ring map sqrt(D) -> R identifies O_K / q^2 with Z/p^2 where
 * q is one of the two primes above p; the other root p^2 - R picks out the
 * conjugate prime.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "iwasawa/modmath.hpp"

namespace iwasawa {

inline constexpr u64 kClassNumberDiscCap = 1'000'000;

struct ImagQuadField {
    u64 d = 0;     ///< squarefree, d >= 1
    i64 D = 0;     ///< fundamental discriminant, -d or -4d
    u64 h = 0;     ///< class number h(D)

    u64 abs_disc() const noexcept { return static_cast<u64>(-D); }
};

/// (x + y sqrt(D)) / 2 in O_K. Integrality requires x = yD (mod 2).
struct QuadInt {
    i64 x = 0;
    i64 y = 0;

    QuadInt conj() const noexcept { return {x, -y}; }
    bool operator==(const QuadInt&) const = default;
};

struct PrimeSplit {
    u64 p = 0;
    u64 R = 0;  ///< R^2 = D (mod p^2), 0 <= R < p^2

    u64 p2() const noexcept { return p * p; }
    /// Same prime with the conjugate embedding sqrt(D) -> p^2 - R.
    PrimeSplit swapped() const noexcept { return {p, R == 0 ? 0 : p2() - R}; }
};

bool is_squarefree(u64 n);

i64 fundamental_discriminant(u64 d);

bool is_fundamental_discriminant(i64 D);

ImagQuadField make_field(u64 d);

/// Counts reduced primitive forms (a, b, c) with b^2 - 4ac = D.
/// Throws NotFundamental, or TooLarge beyond |D| = 10^6.
u64 class_number(i64 D);

/// Throws InvalidArgument if p is not an odd prime.
bool splits(const ImagQuadField& field, u64 p);

/// Exact norm (x^2 - D y^2) / 4.
i128 norm(const QuadInt& alpha, i64 D);

bool is_integral(const QuadInt& alpha, i64 D);

QuadInt multiply(const QuadInt& a, const QuadInt& b, i64 D);

/// Solves x^2 + n y^2 = m in nonnegative integers. Among all solutions the
/// one with the smallest gcd(x, y) is returned, ties broken by largest x.
/// m is factored by trial division; m must stay below 2^62.
std::optional<std::pair<u64, u64>> cornacchia(u64 m, u64 n);

/// Generator alpha of p^h for one of the two primes above p, with
/// N(alpha) = p^h and alpha not divisible by p.
QuadInt prime_power_generator(const ImagQuadField& field, u64 p);

PrimeSplit split_data(const ImagQuadField& field, u64 p);

/// Image of alpha under O_K -> Z/p^2, sqrt(D) -> R.
Residue embed(const QuadInt& alpha, const PrimeSplit& split);

}  // namespace iwasawa
