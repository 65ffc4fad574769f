#pragma once

/**
 * @file modmath.hpp
 * @brief Word-sized modular arithmetic for moduli p and p^2.
 *
 * Every modulus handled here is below 2^62, so products are accumulated in
 * unsigned 128-bit integers and never overflow. A Residue carries its modulus
 * with it; combining residues with different moduli throws instead of
 * silently reducing one into the other.
 */

#include <cstdint>
#include <ostream>
#include <vector>

#include "iwasawa/error.hpp"

namespace iwasawa {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

inline constexpr u64 kMaxModulus = u64{1} << 62;

/// Least nonnegative residue of a signed value.
u64 reduce(i128 value, u64 modulus);

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;  // a, b < 2^62, cannot wrap
    return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 pow_mod(u64 base, u64 exp, u64 m);

class Residue {
public:
    Residue(i128 value, u64 modulus);

    u64 value() const noexcept { return value_; }
    u64 modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1 % modulus_; }

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const;

    Residue& operator+=(const Residue& rhs) { return *this = *this + rhs; }
    Residue& operator-=(const Residue& rhs) { return *this = *this - rhs; }
    Residue& operator*=(const Residue& rhs) { return *this = *this * rhs; }

    bool operator==(const Residue& rhs) const = default;

private:
    void check_same_modulus(const Residue& rhs) const;

    u64 value_;
    u64 modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

Residue mod_pow(const Residue& base, u64 exp);

/// Throws NotInvertible when gcd(a, modulus) != 1.
Residue mod_inv(const Residue& a);

/// Jacobi symbol (a/n) for odd positive n.
int kronecker(i64 a, u64 n);

/// Square root of a modulo an odd prime p (Tonelli-Shanks). Returns the
/// smaller of the two roots. Throws NotAResidue unless (a/p) = 1.
u64 sqrt_mod_p(i64 a, u64 p);

/// Lifts a root r of a mod p to the unique root of a mod p^2 congruent to r.
u64 hensel_lift_sqrt(u64 r, i64 a, u64 p);

/// Lifts a root r of a mod p (p odd, p not dividing a) to a root mod p^e.
u64 hensel_lift_sqrt_power(u64 r, i64 a, u64 p, unsigned e);

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n);

std::vector<u64> primes_up_to(u64 limit);

/// C(n, k) mod modulus by Pascal addition (no division).
Residue binomial_mod(u64 n, u64 k, u64 modulus);

u64 isqrt(u64 n);
bool is_perfect_square(u64 n, u64* root = nullptr);

u64 gcd(u64 a, u64 b);

}  // namespace iwasawa
