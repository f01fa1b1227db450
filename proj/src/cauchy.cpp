#include "cauchy.hpp"

#include <cmath>

namespace prsq {
namespace {

// ============================================================================
// rational helpers
// ============================================================================

bool mul_check(u128& acc, u128 f) {
    if (f != 0 && acc > ~(u128)0 / f) return true;
    acc *= f;
    return false;
}

bool rat_less(const Rat128& x, const Rat128& y) {
    if (x.overflow) return false;
    if (y.overflow) return true;
    u128 lhs = x.num, rhs = y.num;
    const bool lo = mul_check(lhs, y.den);
    const bool ro = mul_check(rhs, x.den);
    if (lo || ro) return x.approx() < y.approx();  // both sides astronomical
    return lhs < rhs;
}

Rat128 rat_max(const Rat128& x, const Rat128& y) { return rat_less(x, y) ? y : x; }

u128 ipow_u128(u64 base, unsigned k, bool& ovf) {
    u128 acc = 1;
    while (k-- && !ovf) ovf = mul_check(acc, base);
    return acc;
}

}  // namespace

bool Rat128::less_than(u64 n) const {
    if (overflow) return false;
    return num < (u128)n * den;
}

double Rat128::approx() const {
    if (overflow) return std::numeric_limits<double>::infinity();
    return (double)num / (double)den;
}

// ============================================================================
// explicit bounds
// ============================================================================

BoundTriple bounds(unsigned k, u64 j, u64 l) {
    if (k < 1 || j < 1 || l < 1) throw domain_error("bounds: k, j, l must be >= 1");
    BoundTriple bt;
    bt.k = k;
    bt.j = j;
    bt.l = l;

    {
        bool ovf = false;
        u128 acc = ipow_u128(2 * (u64)k * l, 2 * k, ovf);
        for (unsigned i = 0; i + 1 < 2 * k && !ovf; ++i) ovf = mul_check(acc, j + 1);
        bt.a_val = {acc, 1, ovf};
    }
    {
        // exp of an irrational power: evaluate in extended precision and push
        // the result up so the "n > bound" gates can only be stricter
        const long double kk = (long double)k;
        const long double e = 2.0L * powl(kk, 1.5L) *
                              powl((long double)j, 1.0L / (4.0L * kk)) *
                              powl((long double)(j + 1), (2.0L * kk - 1.0L) / (4.0L * kk));
        long double v = expl(e) / (long double)j;
        v *= 1.0L + 1e-12L;
        if (!(v >= 0.0L) || v > 3.0e38L) {
            bt.b_val = {0, 1, true};
        } else {
            bt.b_val = {(u128)ceill(v), 1, false};
        }
    }
    Rat128 third;
    {
        bool ovf = false;
        u128 acc = ipow_u128(3275, 2 * k, ovf);
        third = {acc, j, ovf};
    }
    bt.c_val = rat_max(rat_max(bt.a_val, bt.b_val), third);
    return bt;
}

IntervalSpec interval_I(u64 n, u64 j, unsigned k) {
    if (n < 2) throw domain_error("interval_I: n must be >= 2");
    if (j < 1 || k < 1) throw domain_error("interval_I: j, k must be >= 1");
    IntervalSpec iv;
    iv.lo = Bound::shifted_sqrt_root(-1, (u128)j * (n - 1), k);
    iv.hi = Bound::kth_root((u128)(j + 1) * n, 1, 2 * k);
    iv.lo_open = true;
    iv.hi_open = true;
    return iv;
}

// ============================================================================
// fixed-linear-value four-square searches
// ============================================================================

namespace {

void check_positive(i64 a, i64 b, const char* who) {
    if (a < 1 || b < 1) throw domain_error(std::string(who) + ": a, b must be positive");
    if (a > ((i64)1 << 60)) throw resource_limit_error(std::string(who) + ": a too large");
}

}  // namespace

std::array<i64, 4> cauchy_1111(i64 a, i64 b) {
    check_positive(a, b, "cauchy 1111");
    const bool odd_case = (a % 2 == 1) && (b % 2 == 1);
    const bool even_case = (a % 4 == 2) && (b % 2 == 0);
    if (!odd_case && !even_case)
        throw domain_error("cauchy 1111: need ab odd, or a = 2 mod 4 with b even");
    if (!((i128)b * b < (i128)4 * a)) throw domain_error("cauchy 1111: requires b^2 < 4a");
    if (!((i128)3 * a < (i128)b * b + 2 * b + 4))
        throw domain_error("cauchy 1111: requires 3a < b^2 + 2b + 4");

    for (i64 s = (i64)isqrt((u64)a); s >= 0; --s) {
        const i64 rs = a - s * s;
        for (i64 t = std::min(s, (i64)isqrt((u64)rs)); t >= 0; --t) {
            const i64 sig = b - s - t;
            if (sig < 0) continue;
            const i64 rho = rs - t * t;
            const i64 disc = 2 * rho - sig * sig;  // (u-v)^2 when solvable
            if (disc < 0) continue;
            const i64 rt = (i64)isqrt((u64)disc);
            if (rt * rt != disc) continue;
            if ((sig + rt) % 2) continue;
            const i64 u = (sig + rt) / 2, v = (sig - rt) / 2;
            if (v < 0) continue;
            return {s, t, u, v};
        }
    }
    throw internal_error("cauchy 1111: search exhausted under valid side conditions");
}

std::array<i64, 4> cauchy_1122(i64 a, i64 b) {
    check_positive(a, b, "cauchy 1122");
    if ((a - b) % 2) throw domain_error("cauchy 1122: requires a = b (mod 2)");
    if (!((i128)b * b < (i128)6 * a)) throw domain_error("cauchy 1122: requires b^2 < 6a");
    if (!((i128)5 * a < (i128)b * b + 2 * b + 6))
        throw domain_error("cauchy 1122: requires 5a < b^2 + 2b + 6");
    if (!(a % 2 == 1 || a % 8 == 4))
        throw domain_error("cauchy 1122: requires a odd or a = 4 mod 8");
    if (!(a % 3 == 0 || b % 3 != 0))
        throw domain_error("cauchy 1122: requires 3 | a or 3 not| b");

    for (i64 s = (i64)isqrt((u64)a); s >= 0; --s) {
        const i64 rs = a - s * s;
        for (i64 t = std::min(s, (i64)isqrt((u64)rs)); t >= 0; --t) {
            if ((b - s - t) % 2) continue;
            if ((rs - t * t) % 2) continue;
            const i64 sig = (b - s - t) / 2;
            const i64 rho = (rs - t * t) / 2;
            if (sig < 0) continue;
            const i64 disc = 2 * rho - sig * sig;
            if (disc < 0) continue;
            const i64 rt = (i64)isqrt((u64)disc);
            if (rt * rt != disc) continue;
            if ((sig + rt) % 2) continue;
            const i64 u = (sig + rt) / 2, v = (sig - rt) / 2;
            if (v < 0) continue;
            return {s, t, u, v};
        }
    }
    throw internal_error("cauchy 1122: search exhausted under valid side conditions");
}

std::array<i64, 4> cauchy_1113(i64 a, i64 b) {
    check_positive(a, b, "cauchy 1113");
    if ((a - b) % 2) throw domain_error("cauchy 1113: requires a = b (mod 2)");
    if (!((i128)b * b < (i128)6 * a)) throw domain_error("cauchy 1113: requires b^2 < 6a");
    if (!((i128)5 * a < (i128)b * b + 2 * b + 6))
        throw domain_error("cauchy 1113: requires 5a < b^2 + 2b + 6");
    if (!(a % 9 == 3 || b % 3 != 0))
        throw domain_error("cauchy 1113: requires a = 3 mod 9 or 3 not| b");

    for (i64 s = (i64)isqrt((u64)a); s >= 0; --s) {
        const i64 rs = a - s * s;
        for (i64 t = std::min(s, (i64)isqrt((u64)rs)); t >= 0; --t) {
            const i64 sig = b - s - t;
            const i64 rho = rs - t * t;
            const i64 disc = 12 * rho - 3 * sig * sig;  // 12 u^2 + ... quadratic in v
            if (disc < 0) continue;
            const i64 rt = (i64)isqrt((u64)disc);
            for (const i64 pm : {rt, -rt}) {
                if ((3 * sig + pm) % 12) continue;
                const i64 v = (3 * sig + pm) / 12;
                const i64 u = sig - 3 * v;
                if (u < 0 || v < 0) continue;
                if (u * u + 3 * v * v != rho) continue;
                return {s, t, u, v};
            }
        }
    }
    throw internal_error("cauchy 1113: search exhausted under valid side conditions");
}

// ============================================================================
// interval-driven decomposition
// ============================================================================

namespace {

bool side_conditions(Variant v, i64 a, i64 b) {
    switch (v) {
        case Variant::i:
            if (!((a % 2 == 1 && b % 2 == 1) || (a % 4 == 2 && b % 2 == 0))) return false;
            return (i128)b * b < (i128)4 * a && (i128)3 * a < (i128)b * b + 2 * b + 4;
        case Variant::ii:
            if ((a - b) % 2) return false;
            if (!(a % 2 == 1 || a % 8 == 4)) return false;
            if (!(a % 3 == 0 || b % 3 != 0)) return false;
            return (i128)b * b < (i128)6 * a && (i128)5 * a < (i128)b * b + 2 * b + 6;
        case Variant::iii:
            if ((a - b) % 2) return false;
            if (!(a % 9 == 3 || b % 3 != 0)) return false;
            return (i128)b * b < (i128)6 * a && (i128)5 * a < (i128)b * b + 2 * b + 6;
    }
    return false;
}

}  // namespace

Thm14Outcome decompose_thm14(u64 n, unsigned k, Variant variant, bool relaxed) {
    if (n < 1) throw domain_error("thm1.4: n must be >= 1");
    if (k < 1) throw domain_error("thm1.4: k must be >= 1");
    if (n > ((u64)1 << 60)) throw resource_limit_error("thm1.4: n exceeds the search cap");

    if (!relaxed) {
        bool ok = false;
        switch (variant) {
            case Variant::i:
                if (n % 2 == 1)
                    ok = bounds(k, 3, 4).gate_c(n);
                else if (n % 4 == 2)
                    ok = bounds(k, 3, 2).gate_a(n);
                else
                    throw domain_error("thm1.4i: n must be odd or 2 mod 4");
                break;
            case Variant::ii:
                if (n % 2 == 1)
                    ok = bounds(k, 5, 6).gate_c(n);
                else if (n % 4 == 0)
                    ok = bounds(k, 5, 6).gate_a(n);
                else
                    throw domain_error("thm1.4ii: n must be odd or divisible by 4");
                break;
            case Variant::iii:
                ok = (n % 2 == 1) ? bounds(k, 5, 4).gate_c(n) : bounds(k, 5, 4).gate_a(n);
                break;
        }
        if (!ok) throw domain_error("thm1.4: n is below the variant's size gate");
    }

    Thm14Outcome out;
    if (n < 2) {
        out.diagnostic = "no interval exists for n < 2";
        return out;
    }

    const u64 j = (variant == Variant::i) ? 3 : 5;
    const bool want_prime = (n % 2 == 1);
    const IntervalSpec iv = interval_I(n, j, k);
    const auto lo = iv.first_integer();
    const auto hi = iv.last_integer();
    if (lo && hi) {
        for (i64 m = std::max<i64>(*lo, 1); m <= *hi; ++m) {
            if (want_prime ? !is_prime((u64)m) : (m % 2 != 0)) continue;
            out.had_candidates = true;
            bool ovf = false;
            const u128 mk = ipow_u128((u64)m, k, ovf);
            if (ovf || mk > (u128)((i64)1 << 62)) continue;  // cannot satisfy b^2 < 6a anyway
            const i64 a = (i64)n, b = (i64)mk;
            if (!side_conditions(variant, a, b)) continue;
            out.side_conditions_met = true;
            out.m = (u64)m;

            Witness w;
            w.value = n;
            w.signed_coords = false;
            switch (variant) {
                case Variant::i:
                    w.form = FormId::f1111;
                    w.tuple = cauchy_1111(a, b);
                    w.constraint.coeffs = {1, 1, 1, 1};
                    break;
                case Variant::ii:
                    w.form = FormId::f1122;
                    w.tuple = cauchy_1122(a, b);
                    w.constraint.coeffs = {1, 1, 2, 2};
                    break;
                case Variant::iii:
                    w.form = FormId::f1113;
                    w.tuple = cauchy_1113(a, b);
                    w.constraint.coeffs = {1, 1, 1, 3};
                    break;
            }
            w.constraint.target =
                want_prime ? TargetSet::prime_power(k) : TargetSet::even_kth_power(k);
            w.certificate = want_prime ? Certificate::prime_power((u64)m, k)
                                       : Certificate::even_power((u64)m, k);
            w.validate();
            out.witness = w;
            return out;
        }
    }

    if (!out.had_candidates)
        out.diagnostic =
            want_prime ? "no prime in the interval" : "no even integer in the interval";
    else
        out.diagnostic = "side conditions fail for every interval candidate";
    if (!relaxed)
        throw internal_error("thm1.4: construction failed despite the size gate: " +
                             out.diagnostic);
    return out;
}

}  // namespace prsq
