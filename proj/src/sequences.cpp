#include "iwasawa/sequences.hpp"

#include <string>

#include "iwasawa/ellcurve.hpp"

namespace iwasawa {

namespace {

void check_prime_and_congruence(u64 p, u64 m) {
    if (m != 3 && m != 4) {
        throw MathError(Errc::InvalidArgument, "m must be 3 or 4");
    }
    if (p <= 3 || !is_prime(p)) {
        throw MathError(Errc::InvalidArgument, "p must be a prime > 3, got " + std::to_string(p));
    }
    if (p % m != 1) {
        throw MathError(Errc::CongruenceViolated,
                        std::to_string(p) + " is not 1 mod " + std::to_string(m));
    }
}

void check_upto(u64 p, u64 upto) {
    if (p <= 3 || !is_prime(p)) {
        throw MathError(Errc::InvalidArgument, "p must be a prime > 3, got " + std::to_string(p));
    }
    if (upto % 2 != 0) {
        throw MathError(Errc::InvalidArgument, "upto must be even");
    }
    if (upto > 2 * kSequencePrimeCap) {
        throw MathError(Errc::TooLarge, "upto is capped at 2 * 10^4");
    }
}

// Shared driver: c0 * S_n + sum_{k even, 2 <= k <= n} ck * C(n, k) * S_{n-k} = 0.
std::vector<Residue> even_egf_recurrence(u64 p, u64 upto, Residue s0, u64 c0, u64 ck) {
    const u64 mod = p * p;
    const Residue inv_c0 = mod_inv(Residue(c0, mod));
    const Residue weight(ck, mod);

    std::vector<Residue> s(upto + 1, Residue(0, mod));
    s[0] = s0;
    std::vector<u64> row{1};  // C(n, .) built by Pascal addition
    for (u64 n = 1; n <= upto; ++n) {
        row.push_back(0);
        for (u64 k = n; k >= 1; --k) row[k] = add_mod(row[k], row[k - 1], mod);
        if (n % 2 != 0) continue;
        Residue acc(0, mod);
        for (u64 k = 2; k <= n; k += 2) acc += Residue(row[k], mod) * s[n - k];
        s[n] = -(weight * acc) * inv_c0;
    }
    return s;
}

}  // namespace

bool one_exceptional(u64 p, u64 m) {
    check_prime_and_congruence(p, m);
    if (p > kSequencePrimeCap) {
        throw MathError(Errc::TooLarge, "product test is capped at p <= 10^4");
    }
    const u64 mod = p * p;
    const u64 top = (mod - 1) / m;
    u64 prod = 1;
    for (u64 a = 1; a <= top; ++a) {
        if (a % p != 0) prod = mul_mod(prod, a, mod);
    }
    return pow_mod(prod, p - 1, mod) == 1;
}

std::vector<Residue> euler_mod(u64 p, u64 upto) {
    check_upto(p, upto);
    return even_egf_recurrence(p, upto, Residue(1, p * p), 1, 1);
}

std::vector<Residue> glaisher_mod(u64 p, u64 upto) {
    check_upto(p, upto);
    const u64 mod = p * p;
    return even_egf_recurrence(p, upto, mod_inv(Residue(2, mod)), 3, 2);
}

SequenceVerdict equivalence_check(u64 p, u64 m) {
    check_prime_and_congruence(p, m);
    SequenceVerdict v;
    v.p = p;
    v.m = m;
    v.product_is_one = one_exceptional(p, m);
    if (m == 3) {
        v.special_value = glaisher_mod(p, p - 1).back();
        v.curve_residue = count_mod_p2(CurveFp(p, 0, -1), p - 1);
    } else {
        v.special_value = euler_mod(p, p - 1).back();
        v.curve_residue = count_mod_p2(CurveFp(p, 1, 0), p - 1);
    }
    return v;
}

}  // namespace iwasawa
