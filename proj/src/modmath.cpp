#include "iwasawa/modmath.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace iwasawa {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::NotAResidue: return "NotAResidue";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::NotFundamental: return "NotFundamental";
        case Errc::NoSolution: return "NoSolution";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::BadReduction: return "BadReduction";
        case Errc::ClassNumberUnsupported: return "ClassNumberUnsupported";
        case Errc::CongruenceViolated: return "CongruenceViolated";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

u64 reduce(i128 value, u64 modulus) {
    i128 r = value % static_cast<i128>(modulus);
    if (r < 0) r += modulus;
    return static_cast<u64>(r);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(i128 value, u64 modulus) : modulus_(modulus) {
    if (modulus == 0 || modulus >= kMaxModulus) {
        throw MathError(Errc::InvalidArgument,
                        "modulus must lie in [1, 2^62), got " + std::to_string(modulus));
    }
    value_ = reduce(value, modulus);
}

void Residue::check_same_modulus(const Residue& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw MathError(Errc::ModulusMismatch, "residues mod " + std::to_string(modulus_) +
                                                   " and mod " + std::to_string(rhs.modulus_) +
                                                   " cannot be combined");
    }
}

Residue Residue::operator+(const Residue& rhs) const {
    check_same_modulus(rhs);
    return Residue(add_mod(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    check_same_modulus(rhs);
    return Residue(sub_mod(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    check_same_modulus(rhs);
    return Residue(mul_mod(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator-() const { return Residue(sub_mod(0, value_, modulus_), modulus_); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " (mod " << r.modulus() << ")";
}

Residue mod_pow(const Residue& base, u64 exp) {
    return Residue(pow_mod(base.value(), exp, base.modulus()), base.modulus());
}

Residue mod_inv(const Residue& a) {
    // Extended Euclid on (a, m), tracking only the coefficient of a.
    i128 old_r = a.value(), r = a.modulus();
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw MathError(Errc::NotInvertible, std::to_string(a.value()) + " is not invertible mod " +
                                                 std::to_string(a.modulus()));
    }
    return Residue(old_s, a.modulus());
}

int kronecker(i64 a, u64 n) {
    if (n == 0 || n % 2 == 0) {
        throw MathError(Errc::InvalidArgument, "Jacobi symbol needs an odd positive modulus");
    }
    u64 x = reduce(a, n);
    u64 m = n;
    int t = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            u64 r = m % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) t = -t;
        x %= m;
    }
    return m == 1 ? t : 0;
}

u64 sqrt_mod_p(i64 a, u64 p) {
    if (kronecker(a, p) != 1) {
        throw MathError(Errc::NotAResidue, std::to_string(a) + " is not a nonzero square mod " +
                                               std::to_string(p));
    }
    u64 n = reduce(a, p);
    u64 root;
    if (p % 4 == 3) {
        root = pow_mod(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
        u64 q = p - 1;
        unsigned s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        u64 z = 2;
        while (kronecker(static_cast<i64>(z), p) != -1) ++z;

        u64 c = pow_mod(z, q, p);
        u64 x = pow_mod(n, (q + 1) / 2, p);
        u64 t = pow_mod(n, q, p);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (unsigned k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b, p);
            x = mul_mod(x, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
        root = x;
    }
    return std::min(root, p - root);
}

u64 hensel_lift_sqrt(u64 r, i64 a, u64 p) { return hensel_lift_sqrt_power(r, a, p, 2); }

u64 hensel_lift_sqrt_power(u64 r, i64 a, u64 p, unsigned e) {
    if (e == 0) {
        throw MathError(Errc::InvalidArgument, "exponent must be positive");
    }
    u64 pk = p;
    u64 root = r % p;
    for (unsigned k = 1; k < e; ++k) {
        if (pk > kMaxModulus / p) {
            throw MathError(Errc::TooLarge, "p^e exceeds 2^62");
        }
        pk *= p;
        // Newton step: root <- root - (root^2 - a) / (2 root), all mod p^(k+1).
        u64 f = sub_mod(mul_mod(root, root, pk), reduce(a, pk), pk);
        Residue inv2r = mod_inv(Residue(static_cast<i128>(2) * root, pk));
        root = sub_mod(root, mul_mod(f, inv2r.value(), pk), pk);
    }
    return root;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // This base set is deterministic for n < 3.3 * 10^24.
    for (u64 a : small) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

Residue binomial_mod(u64 n, u64 k, u64 modulus) {
    if (k > n) {
        throw MathError(Errc::InvalidArgument, "binomial_mod requires k <= n");
    }
    k = std::min(k, n - k);
    // row[i] = C(r, i) for the current r, truncated at column k.
    std::vector<u64> row(k + 1, 0);
    row[0] = 1 % modulus;
    for (u64 r = 1; r <= n; ++r) {
        for (u64 i = std::min(r, k); i >= 1; --i) row[i] = add_mod(row[i], row[i - 1], modulus);
    }
    return Residue(row[k], modulus);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(u64 n, u64* root) {
    u64 r = isqrt(n);
    if (root) *root = r;
    return static_cast<u128>(r) * r == n;
}

u64 gcd(u64 a, u64 b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
}

}  // namespace iwasawa
