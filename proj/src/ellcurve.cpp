#include "iwasawa/ellcurve.hpp"

#include <array>
#include <string>

#include "iwasawa/gold.hpp"

namespace iwasawa {

namespace {

u64 discriminant_mod(i128 A, i128 B, u64 p) {
    u64 a = reduce(A, p), b = reduce(B, p);
    u64 a3 = mul_mod(mul_mod(a, a, p), a, p);
    u64 b2 = mul_mod(b, b, p);
    return add_mod(mul_mod(4, a3, p), mul_mod(27, b2, p), p);
}

// F_p[t] / (t^2 - nu) with nu a fixed nonresidue.
struct Fp2 {
    u64 a = 0;
    u64 b = 0;
};

class Fp2Field {
public:
    explicit Fp2Field(u64 p) : p_(p) {
        nu_ = 2;
        while (kronecker(static_cast<i64>(nu_), p) != -1) ++nu_;
    }

    u64 nu() const { return nu_; }

    Fp2 add(Fp2 x, Fp2 y) const { return {add_mod(x.a, y.a, p_), add_mod(x.b, y.b, p_)}; }

    Fp2 mul(Fp2 x, Fp2 y) const {
        u64 re = add_mod(mul_mod(x.a, y.a, p_), mul_mod(nu_, mul_mod(x.b, y.b, p_), p_), p_);
        u64 im = add_mod(mul_mod(x.a, y.b, p_), mul_mod(x.b, y.a, p_), p_);
        return {re, im};
    }

    Fp2 pow(Fp2 base, u64 exp) const {
        Fp2 r{1, 0};
        while (exp > 0) {
            if (exp & 1) r = mul(r, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return r;
    }

    /// x^{p+1} = a^2 - nu b^2 lies in F_p.
    u64 norm(Fp2 x) const {
        return sub_mod(mul_mod(x.a, x.a, p_), mul_mod(nu_, mul_mod(x.b, x.b, p_), p_), p_);
    }

    Fp2 curve_rhs(const CurveFp& c, Fp2 x) const {
        Fp2 x3 = mul(mul(x, x), x);
        Fp2 ax = mul({c.A(), 0}, x);
        return add(add(x3, ax), {c.B(), 0});
    }

private:
    u64 p_;
    u64 nu_;
};

using Mat2 = std::array<u64, 4>;  // row-major

Mat2 mat_mul(const Mat2& x, const Mat2& y, u64 m) {
    return {add_mod(mul_mod(x[0], y[0], m), mul_mod(x[1], y[2], m), m),
            add_mod(mul_mod(x[0], y[1], m), mul_mod(x[1], y[3], m), m),
            add_mod(mul_mod(x[2], y[0], m), mul_mod(x[3], y[2], m), m),
            add_mod(mul_mod(x[2], y[1], m), mul_mod(x[3], y[3], m), m)};
}

void check_scan_prime(u64 p) {
    if (p <= 3 || !is_prime(p)) {
        throw MathError(Errc::InvalidArgument, "expected a prime p > 3, got " + std::to_string(p));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CurveFp

CurveFp::CurveFp(u64 p, i128 A, i128 B) : p_(p) {
    check_scan_prime(p);
    if (p >= (u64{1} << 31)) {
        throw MathError(Errc::TooLarge, "curves are limited to p < 2^31");
    }
    A_ = reduce(A, p);
    B_ = reduce(B, p);
    if (discriminant_mod(A_, B_, p) == 0) {
        throw MathError(Errc::BadReduction, "4A^3 + 27B^2 vanishes mod " + std::to_string(p));
    }
}

u64 CurveFp::rhs(u64 x) const {
    x %= p_;
    u64 x2 = mul_mod(x, x, p_);
    return add_mod(mul_mod(add_mod(x2, A_, p_), x, p_), B_, p_);
}

CurveFp CurveFp::twist(u64 c) const {
    u64 c2 = mul_mod(c, c, p_);
    return CurveFp(p_, mul_mod(A_, c2, p_), mul_mod(B_, mul_mod(c2, c, p_), p_));
}

Residue CurveFp::j_invariant() const {
    Residue a3 = mod_pow(Residue(A_, p_), 3);
    Residue four_a3 = Residue(4, p_) * a3;
    Residue denom = four_a3 + Residue(27, p_) * mod_pow(Residue(B_, p_), 2);
    return Residue(1728, p_) * four_a3 * mod_inv(denom);
}

// ---------------------------------------------------------------------------
// counting

i64 count_points_fp(const CurveFp& curve) {
    const u64 p = curve.p();
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) sum += kronecker(static_cast<i64>(curve.rhs(x)), p);
    return 1 + static_cast<i64>(p) + sum;
}

i64 count_points_fp_naive(const CurveFp& curve) {
    const u64 p = curve.p();
    if (p > kNaiveEnumerationCap) {
        throw MathError(Errc::TooLarge, "naive enumeration is limited to p <= 50");
    }
    i64 n = 1;
    for (u64 x = 0; x < p; ++x) {
        u64 f = curve.rhs(x);
        for (u64 y = 0; y < p; ++y) {
            if (mul_mod(y, y, p) == f) ++n;
        }
    }
    return n;
}

TraceData trace_ap(const CurveFp& curve) {
    i64 n = count_points_fp(curve);
    return {curve, n, static_cast<i64>(curve.p()) + 1 - n};
}

bool is_ordinary(const TraceData& trace) { return trace.a_p != 0; }

Residue trace_power_mod(i64 a_p, u64 p, u64 n) {
    const u64 m = p * p;
    if (n == 0) return Residue(2, m);
    // (t_k, t_{k-1}) = M^(k-1) (t_1, t_0) with M = [[a_p, -p], [1, 0]].
    Mat2 step{reduce(a_p, m), reduce(-static_cast<i128>(p), m), 1, 0};
    Mat2 acc{1, 0, 0, 1};
    for (u64 e = n - 1; e > 0; e >>= 1) {
        if (e & 1) acc = mat_mul(acc, step, m);
        step = mat_mul(step, step, m);
    }
    u64 t1 = reduce(a_p, m);
    return Residue(add_mod(mul_mod(acc[0], t1, m), mul_mod(acc[1], 2, m), m), m);
}

Residue count_mod_p2(const TraceData& trace, u64 n) {
    if (n == 0) {
        throw MathError(Errc::InvalidArgument, "extension degree must be positive");
    }
    const u64 p = trace.curve.p();
    const u64 m = p * p;
    Residue q(pow_mod(p, n, m), m);
    return q + Residue(1, m) - trace_power_mod(trace.a_p, p, n);
}

Residue count_mod_p2(const CurveFp& curve, u64 n) { return count_mod_p2(trace_ap(curve), n); }

i64 count_points_fp2_bruteforce(const CurveFp& curve) {
    const u64 p = curve.p();
    if (p > kBruteForceFp2Cap) {
        throw MathError(Errc::TooLarge, "F_{p^2} enumeration is limited to p <= 200");
    }
    Fp2Field F(p);
    const u64 half_order = (p * p - 1) / 2;
    i64 n = 1;
    for (u64 a = 0; a < p; ++a) {
        for (u64 b = 0; b < p; ++b) {
            Fp2 f = F.curve_rhs(curve, {a, b});
            if (f.a == 0 && f.b == 0) {
                n += 1;
                continue;
            }
            Fp2 z = F.pow(f, half_order);
            if (z.a == 1 && z.b == 0) n += 2;
        }
    }
    return n;
}

i64 char_sum(const CurveFp& curve, unsigned extension_degree) {
    const u64 p = curve.p();
    i64 sum = 0;
    if (extension_degree == 1) {
        // Euler's criterion, independent of the Jacobi-symbol path.
        for (u64 x = 0; x < p; ++x) {
            u64 f = curve.rhs(x);
            if (f == 0) continue;
            sum += pow_mod(f, (p - 1) / 2, p) == 1 ? 1 : -1;
        }
        return sum;
    }
    if (extension_degree == 2) {
        if (p > kBruteForceFp2Cap) {
            throw MathError(Errc::TooLarge, "F_{p^2} character sums are limited to p <= 200");
        }
        // z is a square in F_{p^2} iff its norm z^{p+1} is a square in F_p.
        Fp2Field F(p);
        for (u64 a = 0; a < p; ++a) {
            for (u64 b = 0; b < p; ++b) {
                sum += kronecker(static_cast<i64>(F.norm(F.curve_rhs(curve, {a, b}))), p);
            }
        }
        return sum;
    }
    throw MathError(Errc::TooLarge, "character sums are only enumerated over F_p and F_{p^2}");
}

CurveFp curve_from_j(u64 j, u64 p) {
    check_scan_prime(p);
    j %= p;
    if (j == 0) return CurveFp(p, 0, 1);
    if (j == 1728 % p) return CurveFp(p, 1, 0);
    u64 k = sub_mod(1728 % p, j, p);
    u64 jk = mul_mod(j, k, p);
    return CurveFp(p, mul_mod(3, jk, p), mul_mod(2, mul_mod(jk, k, p), p));
}

// ---------------------------------------------------------------------------
// catalog-level checks

bool has_good_reduction(const CMCatalogEntry& entry, u64 p) {
    return discriminant_mod(entry.A, entry.B, p) != 0;
}

CurveFp reduce_entry(const CMCatalogEntry& entry, u64 p) { return CurveFp(p, entry.A, entry.B); }

Theorem1Verdict theorem1_check(const ImagQuadField& field, const CMCatalogEntry& entry, u64 p) {
    if (entry.d != field.d) {
        throw MathError(Errc::InvalidArgument, "catalog entry is for a different field");
    }
    if (field.h != 1) {
        throw MathError(Errc::ClassNumberUnsupported,
                        "point counts need a curve over Q; h = " + std::to_string(field.h));
    }
    if (p <= 3 || !is_prime(p) || !splits(field, p)) {
        throw MathError(Errc::PreconditionViolated, std::to_string(p) + " is not a split prime > 3");
    }
    if (!has_good_reduction(entry, p)) {
        throw MathError(Errc::BadReduction, "model has bad reduction at " + std::to_string(p));
    }
    Theorem1Verdict v;
    v.d = field.d;
    v.p = p;
    v.gold = gold_test(field, p).lambda_gt_one;
    v.count_residue = count_mod_p2(reduce_entry(entry, p), p - 1);
    v.agree = v.gold == v.count_residue.is_zero();
    return v;
}

std::vector<TableRow> catalog_table(const ImagQuadField& field, const CMCatalogEntry& entry, u64 p_max) {
    if (field.h != 1) {
        throw MathError(Errc::ClassNumberUnsupported, "tables need a curve over Q");
    }
    std::vector<TableRow> rows;
    for (u64 p : primes_up_to(p_max)) {
        if (p <= 3 || !splits(field, p)) continue;
        TableRow row{p, std::nullopt};
        if (has_good_reduction(entry, p)) row.count = count_mod_p2(reduce_entry(entry, p), p - 1);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Theorem1Row> theorem1_scan(const ImagQuadField& field, const CMCatalogEntry& entry,
                                       u64 p_max) {
    if (field.h != 1) {
        throw MathError(Errc::ClassNumberUnsupported, "theorem check needs a curve over Q");
    }
    std::vector<Theorem1Row> rows;
    for (u64 p : primes_up_to(p_max)) {
        if (p <= 3 || !splits(field, p)) continue;
        Theorem1Row row{p, std::nullopt};
        if (has_good_reduction(entry, p)) row.verdict = theorem1_check(field, entry, p);
        rows.push_back(row);
    }
    return rows;
}

OrdinaryScan scan_ordinary_prime(u64 p, u64 cap) {
    check_scan_prime(p);
    if (p > cap) {
        throw MathError(Errc::TooLarge, "ordinary scan is capped at p <= " + std::to_string(cap));
    }
    OrdinaryScan scan;
    scan.p = p;
    for (u64 j = 0; j < p; ++j) {
        TraceData t = trace_ap(curve_from_j(j, p));
        if (!is_ordinary(t)) continue;
        ++scan.ordinary_classes;
        if (count_mod_p2(t, p - 1).is_zero()) scan.witnesses.push_back({j, t.curve, t.a_p});
    }
    return scan;
}

}  // namespace iwasawa
