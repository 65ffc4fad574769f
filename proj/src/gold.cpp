#include "iwasawa/gold.hpp"

#include <string>

namespace iwasawa {

namespace {

void check_preconditions(const ImagQuadField& field, u64 p) {
    if (p <= 3) {
        throw MathError(Errc::PreconditionViolated, "p must be a prime > 3, got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw MathError(Errc::PreconditionViolated, std::to_string(p) + " is not prime");
    }
    if (!splits(field, p)) {
        const char* how = field.D % static_cast<i64>(p) == 0 ? "ramified" : "inert";
        throw MathError(Errc::PreconditionViolated, std::to_string(p) + " is " + how +
                                                        " in Q(sqrt(-" + std::to_string(field.d) + "))");
    }
    if (field.h % p == 0) {
        throw MathError(Errc::PreconditionViolated,
                        std::to_string(p) + " divides the class number " + std::to_string(field.h));
    }
}

}  // namespace

GoldVerdict gold_test(const ImagQuadField& field, u64 p) {
    check_preconditions(field, p);
    return gold_test(field, split_data(field, p), prime_power_generator(field, p));
}

GoldVerdict gold_test(const ImagQuadField& field, const PrimeSplit& split, const QuadInt& alpha) {
    const u64 p = split.p;
    check_preconditions(field, p);

    // Exactly one of alpha, conj(alpha) lies outside the kernel prime of the
    // embedding; its image is alpha reduced modulo the other prime squared.
    Residue image = embed(alpha, split);
    if (image.value() % p == 0) image = embed(alpha.conj(), split);
    if (image.value() % p == 0) {
        throw MathError(Errc::PreconditionViolated, "generator is divisible by p");
    }

    GoldVerdict v;
    v.p = p;
    v.d = field.d;
    v.alpha_power = mod_pow(image, p - 1);
    v.lambda_gt_one = v.alpha_power.is_one();
    v.generator = alpha;
    return v;
}

std::vector<GoldVerdict> gold_scan(const ImagQuadField& field, u64 p_max) {
    std::vector<GoldVerdict> out;
    for (u64 p : primes_up_to(p_max)) {
        if (p <= 3 || !splits(field, p) || field.h % p == 0) continue;
        out.push_back(gold_test(field, p));
    }
    return out;
}

}  // namespace iwasawa
