#include "iwasawa/quadfield.hpp"

#include <algorithm>
#include <string>

namespace iwasawa {

namespace {

struct PrimePower {
    u64 prime;
    unsigned exp;
};

std::vector<PrimePower> factor_trial(u64 n) {
    std::vector<PrimePower> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q != 0) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.push_back({q, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

u64 ipow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > kMaxModulus / base) {
            throw MathError(Errc::TooLarge, "prime power exceeds 2^62");
        }
        r *= base;
    }
    return r;
}

// All x in [0, q^e) with x^2 = -n (mod q^e).
std::vector<u64> roots_of_minus_n(u64 n, u64 q, unsigned e) {
    const i64 target = -static_cast<i64>(n);
    if (q != 2 && n % q != 0) {
        if (kronecker(target, q) != 1) return {};
        u64 r = sqrt_mod_p(target, q);
        if (e == 1) return {r, q - r};
        return {hensel_lift_sqrt_power(r, target, q, e), hensel_lift_sqrt_power(q - r, target, q, e)};
    }
    // q = 2 or q | n: lift digit by digit.
    std::vector<u64> roots;
    for (u64 x = 0; x < q; ++x) {
        if (mul_mod(x, x, q) == reduce(target, q)) roots.push_back(x);
    }
    u64 qk = q;
    for (unsigned k = 1; k < e && !roots.empty(); ++k) {
        u64 next_mod = qk * q;
        std::vector<u64> next;
        for (u64 r : roots) {
            for (u64 j = 0; j < q; ++j) {
                u64 cand = r + j * qk;
                if (mul_mod(cand, cand, next_mod) == reduce(target, next_mod)) next.push_back(cand);
            }
        }
        roots = std::move(next);
        qk = next_mod;
    }
    return roots;
}

// Roots of -n modulo m = prod q^e, combined by CRT.
std::vector<u64> roots_mod(u64 n, const std::vector<PrimePower>& factors) {
    std::vector<u64> acc{0};
    u64 acc_mod = 1;
    for (const auto& [q, e] : factors) {
        u64 qe = ipow(q, e);
        std::vector<u64> local = roots_of_minus_n(n, q, e);
        if (local.empty()) return {};
        u64 new_mod = acc_mod * qe;
        // x = a (mod acc_mod), x = b (mod qe):
        // x = a + acc_mod * ((b - a) * acc_mod^{-1} mod qe).
        u64 inv = mod_inv(Residue(acc_mod, qe)).value();
        std::vector<u64> next;
        next.reserve(acc.size() * local.size());
        for (u64 a : acc) {
            for (u64 b : local) {
                u64 t = mul_mod(sub_mod(b % qe, a % qe, qe), inv, qe);
                next.push_back(a + acc_mod * t);
            }
        }
        acc = std::move(next);
        acc_mod = new_mod;
    }
    return acc;
}

// Solutions of x^2 + n y^2 = m with gcd(x, y) = 1.
std::vector<std::pair<u64, u64>> primitive_solutions(u64 m, u64 n,
                                                     const std::vector<PrimePower>& factors) {
    std::vector<std::pair<u64, u64>> sols;
    if (m == 1) {
        sols.emplace_back(1, 0);
        return sols;
    }
    const u64 bound = isqrt(m);
    for (u64 root : roots_mod(n, factors)) {
        u64 a = m, b = root;
        while (b > bound) {
            u64 r = a % b;
            a = b;
            b = r;
        }
        u64 rest = m - b * b;
        if (rest % n != 0) continue;
        u64 y;
        if (!is_perfect_square(rest / n, &y)) continue;
        if (gcd(b, y) != 1) continue;
        sols.emplace_back(b, y);
    }
    return sols;
}

std::optional<std::pair<u64, u64>> cornacchia_factored(u64 m, u64 n,
                                                       std::vector<PrimePower> factors) {
    // Candidate gcds g with g^2 | m, tried in ascending order.
    std::vector<u64> gs{1};
    for (const auto& [q, e] : factors) {
        std::vector<u64> more;
        for (u64 g : gs) {
            u64 t = g;
            for (unsigned k = 1; 2 * k <= e; ++k) {
                t *= q;
                more.push_back(t);
            }
        }
        gs.insert(gs.end(), more.begin(), more.end());
    }
    std::sort(gs.begin(), gs.end());

    for (u64 g : gs) {
        std::vector<PrimePower> reduced;
        u64 gg = g;
        for (auto [q, e] : factors) {
            while (gg % q == 0) {
                gg /= q;
                e -= 2;
            }
            if (e > 0) reduced.push_back({q, e});
        }
        auto sols = primitive_solutions(m / (g * g), n, reduced);
        if (sols.empty()) continue;
        auto best = *std::max_element(sols.begin(), sols.end());
        return std::make_pair(best.first * g, best.second * g);
    }
    return std::nullopt;
}

}  // namespace

bool is_squarefree(u64 n) {
    if (n == 0) return false;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
    }
    return true;
}

i64 fundamental_discriminant(u64 d) {
    return d % 4 == 3 ? -static_cast<i64>(d) : -4 * static_cast<i64>(d);
}

bool is_fundamental_discriminant(i64 D) {
    if (D >= 0) return false;
    u64 a = static_cast<u64>(-D);
    if (a % 4 == 3) return is_squarefree(a);  // D = 1 (mod 4)
    if (a % 4 != 0) return false;
    u64 m = a / 4;  // D = 4 * (-m), need -m = 2, 3 (mod 4)
    return (m % 4 == 1 || m % 4 == 2) && is_squarefree(m);
}

ImagQuadField make_field(u64 d) {
    if (!is_squarefree(d)) {
        throw MathError(Errc::NotSquarefree, std::to_string(d) + " is not squarefree");
    }
    ImagQuadField f;
    f.d = d;
    f.D = fundamental_discriminant(d);
    f.h = class_number(f.D);
    return f;
}

u64 class_number(i64 D) {
    if (!is_fundamental_discriminant(D)) {
        throw MathError(Errc::NotFundamental,
                        std::to_string(D) + " is not a negative fundamental discriminant");
    }
    const u64 absD = static_cast<u64>(-D);
    if (absD > kClassNumberDiscCap) {
        throw MathError(Errc::TooLarge, "class number enumeration capped at |D| <= 10^6");
    }
    // Reduced: |b| <= a <= c, b >= 0 if |b| = a or a = c. Then 3a^2 <= |D|.
    u64 h = 0;
    for (i64 a = 1; 3 * a * a <= static_cast<i64>(absD); ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (((b - D) & 1) != 0) continue;
            i64 num = b * b - D;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (gcd(gcd(static_cast<u64>(a), static_cast<u64>(b < 0 ? -b : b)), static_cast<u64>(c)) != 1)
                continue;
            ++h;
        }
    }
    return h;
}

bool splits(const ImagQuadField& field, u64 p) {
    if (p < 3 || !is_prime(p)) {
        throw MathError(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
    }
    return kronecker(field.D, p) == 1;
}

i128 norm(const QuadInt& alpha, i64 D) {
    i128 x = alpha.x, y = alpha.y;
    return (x * x - static_cast<i128>(D) * y * y) / 4;
}

bool is_integral(const QuadInt& alpha, i64 D) {
    i128 x = alpha.x, y = alpha.y;
    return ((x - y * D) % 2 == 0) && ((x * x - static_cast<i128>(D) * y * y) % 4 == 0);
}

QuadInt multiply(const QuadInt& a, const QuadInt& b, i64 D) {
    i128 x = (static_cast<i128>(a.x) * b.x + static_cast<i128>(D) * a.y * b.y) / 2;
    i128 y = (static_cast<i128>(a.x) * b.y + static_cast<i128>(a.y) * b.x) / 2;
    return {static_cast<i64>(x), static_cast<i64>(y)};
}

std::optional<std::pair<u64, u64>> cornacchia(u64 m, u64 n) {
    if (m == 0 || n == 0 || m >= kMaxModulus) {
        throw MathError(Errc::InvalidArgument, "cornacchia needs 0 < m < 2^62 and n > 0");
    }
    return cornacchia_factored(m, n, factor_trial(m));
}

QuadInt prime_power_generator(const ImagQuadField& field, u64 p) {
    if (!splits(field, p)) {
        throw MathError(Errc::PreconditionViolated,
                        std::to_string(p) + " does not split in Q(sqrt(-" + std::to_string(field.d) + "))");
    }
    if (field.h % p == 0) {
        throw MathError(Errc::PreconditionViolated, std::to_string(p) + " divides the class number");
    }
    const u64 m = 4 * ipow(p, static_cast<unsigned>(field.h));
    if (m >= kMaxModulus) {
        throw MathError(Errc::TooLarge, "4 p^h exceeds 2^62");
    }
    std::vector<PrimePower> factors{{2, 2}, {p, static_cast<unsigned>(field.h)}};
    auto sol = cornacchia_factored(m, field.abs_disc(), factors);
    // A generator of p^h has gcd(x, y) in {1, 2}, so the minimal-gcd solution
    // can never be a multiple of p.
    if (!sol || (sol->first % p == 0 && sol->second % p == 0)) {
        throw MathError(Errc::NoSolution, "no generator of norm p^h found");
    }
    return {static_cast<i64>(sol->first), static_cast<i64>(sol->second)};
}

PrimeSplit split_data(const ImagQuadField& field, u64 p) {
    if (!splits(field, p)) {
        throw MathError(Errc::PreconditionViolated, std::to_string(p) + " does not split");
    }
    u64 r = sqrt_mod_p(field.D, p);
    return {p, hensel_lift_sqrt(r, field.D, p)};
}

Residue embed(const QuadInt& alpha, const PrimeSplit& split) {
    const u64 m = split.p2();
    Residue num = Residue(alpha.x, m) + Residue(alpha.y, m) * Residue(split.R, m);
    return num * mod_inv(Residue(2, m));
}

}  // namespace iwasawa
