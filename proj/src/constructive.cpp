#include "constructive.hpp"

#include <cstdlib>

namespace prsq {
namespace {

// ============================================================================
// small helpers
// ============================================================================

i64 mod_norm(i128 v, i64 m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return (i64)r;
}

std::optional<i64> exact_div(i64 v, i64 d) {
    if (v % d) return std::nullopt;
    return v / d;
}

// ascending prime scan over an interval; fn returns true to stop
template <typename F>
void for_primes_in(const IntervalSpec& iv, F&& fn) {
    auto lo = iv.first_integer();
    auto hi = iv.last_integer();
    if (!lo || !hi) return;
    for (i64 m = std::max<i64>(*lo, 2); m <= *hi; ++m)
        if (is_prime((u64)m) && fn((u64)m)) return;
}

u128 ipow(u64 base, unsigned k) {
    u128 r = 1;
    while (k--) r *= base;
    return r;
}

// ============================================================================
// interval construction shared by thm 1.1 and cor 1.2
// ============================================================================

// Try one prime p: represent q*n - p^k*p^k = s^2 + q z^2 + 2q w^2 with
// s = -2d p^k (mod q), then x = p^k - 2d*y, y = (s + 2d p^k)/q.  Returns the
// tuple or a reason string.
std::optional<std::array<i64, 4>> thm11_attempt(u64 n, u64 d, unsigned k, u64 p,
                                                std::string& why) {
    const u64 q = 4 * d * d + 1;
    const u128 pk = ipow(p, k);
    const u128 p2k = pk * pk;
    if (p2k > (u128)q * n) {
        why = "p^2k exceeds q*n";
        return std::nullopt;
    }
    const u64 m = (u64)((u128)q * n - p2k);
    const i64 P = (i64)pk;

    CongruenceConstraint cc;
    cc.clauses.push_back({{1, 0, 0, 0}, (i64)q, mod_norm((i128)-2 * (i64)d * P, (i64)q)});
    auto rep = represent_constrained(named_forms::f_q((i64)d), m, cc);
    if (!rep) {
        why = "no constrained ternary representation";
        return std::nullopt;
    }
    const i64 s = (*rep)[0];
    const i64 y = (i64)(((i128)s + (i128)2 * (i64)d * P) / (i64)q);
    const i64 x = P - 2 * (i64)d * y;
    if (x < 0 || y < 0) {
        why = "recovered coordinate negative";
        return std::nullopt;
    }
    return std::array<i64, 4>{x, y, std::abs((*rep)[1]), std::abs((*rep)[2])};
}

}  // namespace

Thm11Outcome decompose_thm11(u64 n, u64 d, unsigned k) {
    if (n < 1) throw domain_error("thm1.1: n must be >= 1");
    if (d < 1) throw domain_error("thm1.1: d must be >= 1");
    if (k < 1) throw domain_error("thm1.1: k must be >= 1");
    const u64 q = 4 * d * d + 1;
    if (!is_prime(q)) throw domain_error("thm1.1: 4d^2+1 must be prime");
    if ((u128)q * n > ((u128)1 << 48))
        throw resource_limit_error("thm1.1: q*n exceeds the representation cap");

    IntervalSpec iv;
    iv.lo = Bound::kth_root((u128)(q - 1) * n, 1, 2 * k);
    iv.hi = Bound::kth_root((u128)q * n, 1, 2 * k);

    Thm11Outcome out;
    for_primes_in(iv, [&](u64 p) {
        if (p <= q) return false;
        std::string why;
        auto tup = thm11_attempt(n, d, k, p, why);
        if (!tup) {
            out.attempts.push_back({p, why});
            return false;
        }
        Witness w;
        w.value = n;
        w.form = FormId::f1112;
        w.tuple = *tup;
        w.signed_coords = false;
        w.constraint = {{1, (i64)(2 * d), 0, 0}, TargetSet::prime_power(k)};
        w.certificate = Certificate::prime_power(p, k);
        w.validate();
        out.witness = w;
        return true;
    });
    return out;
}

// ============================================================================
// corollaries: prime-valued linear restrictions, total for n >= first value
// ============================================================================

Witness decompose_cor12(u64 n, const Accel* accel) {
    if (n < 1) throw domain_error("cor1.2: n must be >= 1");
    const LinearConstraint lc{{1, 2, 0, 0}, TargetSet::prime()};
    if (n <= kCor12Fallback) {
        auto w = exists_constrained(n, FormId::f1112, lc, false, accel);
        if (!w) throw internal_error("cor1.2: exhaustive search found no witness");
        return *w;
    }
    if (n > ((u64)1 << 45))
        throw resource_limit_error("cor1.2: n exceeds the search cap");

    // p prime in [sqrt(4n), sqrt(5n)], p > 5; x + 2y = p
    IntervalSpec iv;
    iv.lo = Bound::kth_root((u128)4 * n, 1, 2);
    iv.hi = Bound::kth_root((u128)5 * n, 1, 2);
    std::optional<Witness> found;
    for_primes_in(iv, [&](u64 p) {
        if (p <= 5) return false;
        std::string why;
        auto tup = thm11_attempt(n, 1, 1, p, why);
        if (!tup) return false;
        Witness w;
        w.value = n;
        w.form = FormId::f1112;
        w.tuple = *tup;
        w.signed_coords = false;
        w.constraint = lc;
        w.certificate = Certificate::prime_power(p, 1);
        w.validate();
        found = w;
        return true;
    });
    if (!found) throw internal_error("cor1.2: no usable prime in the interval");
    return *found;
}

Witness decompose_cor13i(u64 n, const Accel* accel) {
    if (n < 2) throw domain_error("cor1.3i: n must be >= 2");
    const LinearConstraint lc{{1, 1, 0, 0}, TargetSet::prime()};
    if (n <= kCor13Fallback) {
        auto w = exists_constrained(n, FormId::f1112, lc, false, accel);
        if (!w) throw internal_error("cor1.3i: exhaustive search found no witness");
        return *w;
    }
    if (n > ((u64)1 << 46))
        throw resource_limit_error("cor1.3i: n exceeds the search cap");

    // p prime in [sqrt(n), sqrt(2n)]; 2n - p^2 = s^2 + 2b^2 + 4c^2, y = (s+p)/2
    IntervalSpec iv;
    iv.lo = Bound::kth_root(n, 1, 2);
    iv.hi = Bound::kth_root((u128)2 * n, 1, 2);
    std::optional<Witness> found;
    for_primes_in(iv, [&](u64 p) {
        if (p <= 2) return false;
        const u64 m = 2 * n - p * p;
        auto rep = represent_constrained(named_forms::g_2_4(), m, {});
        if (!rep) return false;
        const i64 s = (*rep)[0];
        auto y = exact_div(s + (i64)p, 2);
        if (!y) return false;
        const i64 x = (i64)p - *y;
        if (x < 0 || *y < 0) return false;
        Witness w;
        w.value = n;
        w.form = FormId::f1112;
        w.tuple = {x, *y, std::abs((*rep)[1]), std::abs((*rep)[2])};
        w.signed_coords = false;
        w.constraint = lc;
        w.certificate = Certificate::prime_power(p, 1);
        w.validate();
        found = w;
        return true;
    });
    if (!found) throw internal_error("cor1.3i: no usable prime in the interval");
    return *found;
}

Witness decompose_cor13ii(u64 n, const Accel* accel) {
    if (n < 3) throw domain_error("cor1.3ii: n must be >= 3");
    const LinearConstraint lc{{1, 0, 0, 1}, TargetSet::prime()};
    if (n <= kCor13Fallback) {
        auto w = exists_constrained(n, FormId::f1112, lc, false, accel);
        if (!w) throw internal_error("cor1.3ii: exhaustive search found no witness");
        return *w;
    }
    if (n > ((u64)1 << 45))
        throw resource_limit_error("cor1.3ii: n exceeds the search cap");

    // p > 3 prime in [sqrt(n), sqrt(3n/2)]; 3n - 2p^2 = s^2 + 3b^2 + 3c^2 with
    // s = -p (mod 3), w = (s+p)/3
    IntervalSpec iv;
    iv.lo = Bound::kth_root(n, 1, 2);
    iv.hi = Bound::kth_root((u128)3 * n, 2, 2);
    std::optional<Witness> found;
    for_primes_in(iv, [&](u64 p) {
        if (p <= 3) return false;
        const u64 m = 3 * n - 2 * p * p;
        CongruenceConstraint cc;
        cc.clauses.push_back({{1, 0, 0, 0}, 3, mod_norm(-(i64)p, 3)});
        auto rep = represent_constrained(named_forms::h_3_3(), m, cc);
        if (!rep) return false;
        const i64 s = (*rep)[0];
        auto wv = exact_div(s + (i64)p, 3);
        if (!wv) return false;
        const i64 x = (i64)p - *wv;
        if (x < 0 || *wv < 0) return false;
        Witness w;
        w.value = n;
        w.form = FormId::f1112;
        w.tuple = {x, std::abs((*rep)[1]), std::abs((*rep)[2]), *wv};
        w.signed_coords = false;
        w.constraint = lc;
        w.certificate = Certificate::prime_power(p, 1);
        w.validate();
        found = w;
        return true;
    });
    if (!found) throw internal_error("cor1.3ii: no usable prime in the interval");
    return *found;
}

// ============================================================================
// lambda decomposers: fixed-value linear restrictions via ternary lemmas
// ============================================================================

namespace {

void check_lambda_odd(i64 lambda, const char* who) {
    if (lambda < 1 || lambda % 2 == 0)
        throw domain_error(std::string(who) + ": lambda must be a positive odd integer");
}

bool clauses_hold(const CongruenceConstraint& cc, const std::array<i64, 3>& t) {
    for (const auto& cl : cc.clauses)
        if (!cl.satisfied({t[0], t[1], t[2], 0})) return false;
    return true;
}

}  // namespace

std::array<i64, 3> lemma_a(u64 n, i64 lambda) {
    check_lambda_odd(lambda, "lemma A");
    if ((i128)16 * n < (i128)lambda * lambda)
        throw domain_error("lemma A: requires 16n >= lambda^2");
    const u64 m = 80 * n - 5 * (u64)(lambda * lambda);

    CongruenceConstraint cc;
    cc.clauses.push_back({{1, 0, 0, 0}, 8, mod_norm(-lambda, 8)});
    cc.clauses.push_back({{0, 1, 0, 0}, 4, mod_norm(lambda, 4)});
    cc.clauses.push_back({{2, 0, 1, 0}, 5, 0});
    cc.clauses.push_back({{1, 2, 0, 0}, 16, mod_norm(9 * (i128)lambda, 16)});
    if (auto rep = represent_constrained(named_forms::g_10_16(), m, cc))
        return {(*rep)[0], (*rep)[1], (*rep)[2]};

    // the congruences can also be met after one pass through the form's
    // automorphism (x,y,z) -> ((-3x+16z)/5, y, (x+3z)/5)
    for (const auto& t : represent_all(named_forms::g_10_16(), m)) {
        if (mod_norm((i128)-3 * t[0] + 16 * t[2], 5) != 0) continue;
        auto g = automorphism_g({t[0], t[1], t[2]});
        if (clauses_hold(cc, g)) return g;
    }
    throw internal_error("lemma A: form fails to represent the target residually");
}

std::array<i64, 3> lemma_b(u64 n, i64 lambda) {
    check_lambda_odd(lambda, "lemma B");
    if ((i128)8 * n < (i128)lambda * lambda)
        throw domain_error("lemma B: requires 8n >= lambda^2");
    const u64 m = 88 * n - 11 * (u64)(lambda * lambda);

    CongruenceConstraint cc;
    cc.clauses.push_back({{1, 5, 0, 0}, 11, 0});
    cc.clauses.push_back({{0, 0, 1, 0}, 2, 1});
    cc.clauses.push_back({{1, 0, 0, 0}, 8, mod_norm(lambda, 8)});
    if (auto rep = represent_constrained(named_forms::g_8_44(), m, cc))
        return {(*rep)[0], (*rep)[1], (*rep)[2]};
    throw internal_error("lemma B: form fails to represent the target residually");
}

Witness decompose_thm12i(u64 n, i64 lambda) {
    if (n < 1) throw domain_error("thm1.2i: n must be >= 1");
    check_lambda_odd(lambda, "thm1.2i");
    if ((i128)8 * n < (i128)lambda * lambda)
        throw domain_error("thm1.2i: requires 8n >= lambda^2");
    if (n > ((u64)1 << 40))
        throw resource_limit_error("thm1.2i: n exceeds the search cap");

    const auto abc = lemma_b(n, lambda);
    std::optional<std::array<i64, 4>> found;
    // recover (x,y,z,w) from the triple; r aligns a with lambda mod 88 and is
    // unique per sign pattern.  The all-plus pattern is the proof's own path;
    // the rest are a robustness net.
    for (int sa = 0; sa < 2 && !found; ++sa)
        for (int sb = 0; sb < 2 && !found; ++sb)
            for (int sc = 0; sc < 2 && !found; ++sc) {
                const i64 a = sa ? -abc[0] : abc[0];
                const i64 b = sb ? -abc[1] : abc[1];
                const i64 c = sc ? -abc[2] : abc[2];
                for (i64 r = 0; r < 11 && !found; ++r) {
                    auto s = exact_div(a - lambda + 16 * r, 88);
                    if (!s) continue;
                    auto t = exact_div(b - 2 * lambda - r, 11);
                    if (!t) continue;
                    auto u = exact_div(c + lambda, 2);
                    if (!u) continue;
                    const std::array<i64, 4> q{lambda + *s + 2 * *t - *u, *s + 2 * *t + *u,
                                               r - 6 * *s - *t, -r + 5 * *s - *t};
                    const i128 val = (i128)q[0] * q[0] + (i128)q[1] * q[1] +
                                     (i128)q[2] * q[2] + 2 * (i128)q[3] * q[3];
                    const i128 lin = (i128)q[0] + q[1] + 2 * q[2] + 2 * q[3];
                    if (val == (i128)n && lin == lambda) found = q;
                }
            }
    if (!found) throw internal_error("thm1.2i: recovery failed for the ternary triple");

    Witness w;
    w.value = n;
    w.form = FormId::f1112;
    w.tuple = *found;
    w.signed_coords = true;
    w.constraint = {{1, 1, 2, 2}, TargetSet::fixed(lambda)};
    w.certificate = Certificate::fixed(lambda);
    w.validate();
    return w;
}

Witness decompose_thm12ii(u64 n, i64 lambda) {
    if (n < 1) throw domain_error("thm1.2ii: n must be >= 1");
    check_lambda_odd(lambda, "thm1.2ii");
    if ((i128)16 * n < (i128)lambda * lambda)
        throw domain_error("thm1.2ii: requires 16n >= lambda^2");
    if (n > ((u64)1 << 40))
        throw resource_limit_error("thm1.2ii: n exceeds the search cap");

    const auto abc = lemma_a(n, lambda);
    std::optional<std::array<i64, 4>> found;
    for (int sa = 0; sa < 2 && !found; ++sa)
        for (int sb = 0; sb < 2 && !found; ++sb)
            for (int sc = 0; sc < 2 && !found; ++sc) {
                const i64 a = sa ? -abc[0] : abc[0];
                const i64 b = sb ? -abc[1] : abc[1];
                const i64 c = sc ? -abc[2] : abc[2];
                for (i64 r = 0; r < 10 && !found; ++r) {
                    auto s = exact_div(a - 7 * lambda - 8 * r, 80);
                    if (!s) continue;
                    auto t = exact_div(b - lambda + 4 * r, 8);
                    if (!t) continue;
                    auto u = exact_div(c - lambda + r, 5);
                    if (!u) continue;
                    const std::array<i64, 4> q{lambda + 7 * *s + *t + *u,
                                               -r - 2 * *s + 2 * *t - *u, -3 * *s - *t + *u,
                                               r + 3 * *s - *t - *u};
                    const i128 val = (i128)q[0] * q[0] + (i128)q[1] * q[1] +
                                     (i128)q[2] * q[2] + 2 * (i128)q[3] * q[3];
                    const i128 lin = (i128)q[0] + 2 * q[1] + 3 * q[2] + 2 * q[3];
                    if (val == (i128)n && lin == lambda) found = q;
                }
            }
    if (!found) throw internal_error("thm1.2ii: recovery failed for the ternary triple");

    Witness w;
    w.value = n;
    w.form = FormId::f1112;
    w.tuple = *found;
    w.signed_coords = true;
    w.constraint = {{1, 2, 3, 2}, TargetSet::fixed(lambda)};
    w.certificate = Certificate::fixed(lambda);
    w.validate();
    return w;
}

// ============================================================================
// restrictions on n^2 and on 2n+delta: cross-term ternary scan
// ============================================================================

namespace {

// Enumerate 3X^2 + 5Y^2 + 2XY + zc*Z^2 == m outward from zero in each
// coordinate (positive before negative); fn returns true to stop.
template <typename F>
void scan_cross_outward(u64 m, i64 zc, F&& fn) {
    const i64 bx = (i64)isqrt(5 * m / 14) + 1;
    const i64 by = (i64)isqrt(3 * m / 7) + 2;
    for (i64 ax = 0; ax <= bx; ++ax)
        for (int sx = 0; sx < (ax ? 2 : 1); ++sx) {
            const i64 X = sx ? -ax : ax;
            for (i64 ay = 0; ay <= by; ++ay)
                for (int sy = 0; sy < (ay ? 2 : 1); ++sy) {
                    const i64 Y = sy ? -ay : ay;
                    const i128 rem =
                        (i128)m - 3 * (i128)X * X - 5 * (i128)Y * Y - 2 * (i128)X * Y;
                    if (rem < 0 || rem % zc) continue;
                    const u64 qz = (u64)(rem / zc);
                    const u64 Z = isqrt(qz);
                    if (Z * Z != qz) continue;
                    if (fn(X, Y, (i64)Z)) return;
                    if (Z && fn(X, Y, -(i64)Z)) return;
                }
        }
}

}  // namespace

Witness decompose_thm12iii(u64 n, i64 lambda) {
    if (n < 1 || n % 2 == 0) throw domain_error("thm1.2iii: n must be a positive odd integer");
    check_lambda_odd(lambda, "thm1.2iii");
    if (lambda % 7 == 0) throw domain_error("thm1.2iii: lambda must not be divisible by 7");
    if ((i128)14 * n * n < (i128)lambda * lambda)
        throw domain_error("thm1.2iii: requires 14n^2 >= lambda^2");
    if (n > 1000000) throw resource_limit_error("thm1.2iii: n exceeds the search cap");

    const u64 m = 14 * n * n - (u64)(lambda * lambda);
    std::optional<std::array<i64, 4>> found;
    scan_cross_outward(m, 14, [&](i64 X0, i64 Y0, i64 W) {
        const i64 a0 = 3 * X0 + Y0, b0 = Y0;
        for (int ia = 0; ia < (a0 ? 2 : 1); ++ia) {
            const i64 a = ia ? -a0 : a0;
            if (mod_norm((i128)a - 2 * lambda, 7) != 0) continue;
            for (int ib = 0; ib < (b0 ? 2 : 1); ++ib) {
                const i64 b = ib ? -b0 : b0;
                if (mod_norm((i128)b - a, 3) != 0) continue;
                for (i64 r = 0; r < 3; ++r) {
                    auto s = exact_div(a + 5 * lambda + 14 * r, 42);
                    if (!s) continue;
                    auto t = exact_div(b - lambda + 5 * r, 3);
                    if (!t) continue;
                    const i64 X = lambda - 5 * *s + *t;
                    const i64 Y = -3 * r + 4 * *s + *t;
                    const i64 Z = 2 * r - *s - *t;
                    for (int iw = 0; iw < (W ? 2 : 1); ++iw) {
                        const i64 Wv = iw ? -W : W;
                        const i128 val = (i128)X * X + (i128)Y * Y + (i128)Z * Z + (i128)Wv * Wv;
                        const i128 lin = (i128)X + 2 * Y + 3 * Z;
                        if (val == (i128)n * n && lin == lambda) {
                            found = {X, Y, Z, Wv};
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    });
    if (!found) throw internal_error("thm1.2iii: recovery scan exhausted");

    Witness w;
    w.value = n * n;
    w.form = FormId::f1111;
    w.tuple = *found;
    w.signed_coords = true;
    w.constraint = {{1, 2, 3, 0}, TargetSet::fixed(lambda)};
    w.certificate = Certificate::fixed(lambda);
    w.validate();
    return w;
}

Witness decompose_thm13(u64 n, i64 lambda, int delta) {
    if (n < 1) throw domain_error("thm1.3: n must be >= 1");
    if (delta != 0 && delta != 1) throw domain_error("thm1.3: delta must be 0 or 1");
    if (lambda % 7 == 0) throw domain_error("thm1.3: lambda must not be divisible by 7");
    if ((i128)7 * n < (i128)lambda * lambda)
        throw domain_error("thm1.3: requires 7n >= lambda^2");
    const i64 cls = delta ? 4 : 2;
    if (mod_norm((i128)n - lambda, cls) == 0)
        throw domain_error("thm1.3: requires n != lambda mod 2^(1+delta)");
    if (n > ((u64)1 << 43)) throw resource_limit_error("thm1.3: n exceeds the search cap");

    if (delta == 1) {
        // Residues force the parity of x+y+z+w: a target of 7 mod 8 admits
        // only w odd with one odd coordinate among x,y,z (even sum), and a
        // target of 1 mod 8 only w even with one odd coordinate (odd sum).
        // A lambda of the wrong parity is unreachable, so don't scan for it.
        const bool odd_lambda = mod_norm(lambda, 2) == 1;
        if (n % 4 == 3 && odd_lambda)
            throw not_found_error(
                "thm1.3: no witness exists (target 7 mod 8 forces an even coordinate sum)");
        if (n % 4 == 0 && !odd_lambda)
            throw not_found_error(
                "thm1.3: no witness exists (target 1 mod 8 forces an odd coordinate sum)");
    }

    const u64 N = 2 * n + (u64)delta;
    const u64 m = 14 * N - 4 * (u64)(lambda * lambda);
    std::optional<std::array<i64, 4>> found;
    scan_cross_outward(m, 7, [&](i64 X0, i64 Y0, i64 Z0) {
        const i64 a0 = X0 + 5 * Y0, b0 = X0, c0 = Z0;
        for (int ia = 0; ia < (a0 ? 2 : 1); ++ia) {
            const i64 a = ia ? -a0 : a0;
            for (int ib = 0; ib < (b0 ? 2 : 1); ++ib) {
                const i64 b = ib ? -b0 : b0;
                if (mod_norm((i128)b - a, 5) != 0) continue;
                for (int ic = 0; ic < (c0 ? 2 : 1); ++ic) {
                    const i64 c = ic ? -c0 : c0;
                    if (mod_norm((i128)c - a, 2) != 0) continue;
                    for (i64 r = 0; r < 10; ++r) {
                        auto s = exact_div(a + lambda + 7 * r, 70);
                        if (!s) continue;
                        auto t = exact_div(b + lambda + 2 * r, 5);
                        if (!t) continue;
                        auto u = exact_div(c + lambda - r, 2);
                        if (!u) continue;
                        const i64 X = lambda - *s - *t - *u;
                        const i64 Y = r - *s - *t + *u;
                        const i64 Z = -r + 6 * *s + *t;
                        const i64 W = -4 * *s + *t;
                        const i128 val =
                            (i128)X * X + (i128)Y * Y + (i128)Z * Z + 2 * (i128)W * W;
                        const i128 lin = (i128)X + Y + Z + W;
                        if (val == (i128)N && lin == lambda) {
                            found = {X, Y, Z, W};
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    });
    if (!found) throw not_found_error("thm1.3: recovery scan exhausted");

    Witness w;
    w.value = N;
    w.form = FormId::f1112;
    w.tuple = *found;
    w.signed_coords = true;
    w.constraint = {{1, 1, 1, 1}, TargetSet::fixed(lambda)};
    w.certificate = Certificate::fixed(lambda);
    w.validate();
    return w;
}

}  // namespace prsq
