#include "forms.hpp"

#include <algorithm>
#include <numeric>

namespace prsq {

// ============================================================================
// construction / evaluation
// ============================================================================
QuadraticForm QuadraticForm::diagonal3(i64 a, i64 b, i64 c) {
    if (a <= 0 || b <= 0 || c <= 0) throw domain_error("form: diagonal must be positive");
    QuadraticForm f;
    f.arity = 3;
    f.diag = {a, b, c, 0};
    return f;
}

QuadraticForm QuadraticForm::diagonal4(i64 a, i64 b, i64 c, i64 d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0) throw domain_error("form: diagonal must be positive");
    QuadraticForm f;
    f.arity = 4;
    f.diag = {a, b, c, d};
    return f;
}

QuadraticForm QuadraticForm::cross3(i64 a, i64 b, i64 c, i64 xy) {
    if (a <= 0 || b <= 0 || c <= 0) throw domain_error("form: diagonal must be positive");
    if (4 * a * b - xy * xy <= 0) throw domain_error("form: not positive definite");
    QuadraticForm f;
    f.arity = 3;
    f.diag = {a, b, c, 0};
    f.cross_xy = xy;
    return f;
}

i64 QuadraticForm::evaluate(const std::array<i64, 4>& t) const {
    i128 acc = 0;
    for (int i = 0; i < arity; ++i) acc += (i128)diag[i] * t[i] * t[i];
    acc += (i128)cross_xy * t[0] * t[1];
    if (acc > std::numeric_limits<i64>::max() || acc < std::numeric_limits<i64>::min())
        throw resource_limit_error("evaluate: value exceeds 64 bits");
    return (i64)acc;
}

std::string QuadraticForm::label() const {
    static const char* var[4] = {"x", "y", "z", "w"};
    std::string s;
    for (int i = 0; i < arity; ++i) {
        if (!s.empty()) s += "+";
        if (diag[i] != 1) s += std::to_string(diag[i]);
        s += var[i];
        s += "^2";
    }
    if (cross_xy != 0) {
        s += (cross_xy > 0 ? "+" : "-");
        if (std::abs(cross_xy) != 1) s += std::to_string(std::abs(cross_xy));
        s += "xy";
    }
    return s;
}

namespace named_forms {
QuadraticForm f_q(i64 d) {
    if (d < 1) throw domain_error("f_q: d must be >= 1");
    i64 q = 4 * d * d + 1;
    return QuadraticForm::diagonal3(1, q, 2 * q);
}
QuadraticForm g_5_10() { return QuadraticForm::diagonal3(1, 5, 10); }
QuadraticForm g_2_4() { return QuadraticForm::diagonal3(1, 2, 4); }
QuadraticForm h_3_3() { return QuadraticForm::diagonal3(1, 3, 3); }
QuadraticForm g_10_16() { return QuadraticForm::diagonal3(1, 10, 16); }
QuadraticForm g_8_44() { return QuadraticForm::diagonal3(1, 8, 44); }
QuadraticForm R_cross() { return QuadraticForm::cross3(3, 5, 14, 2); }
QuadraticForm h_14_42() { return QuadraticForm::diagonal3(1, 14, 42); }
QuadraticForm Rstar_cross() { return QuadraticForm::cross3(3, 5, 7, 2); }
QuadraticForm l_14_35() { return QuadraticForm::diagonal3(1, 14, 35); }
QuadraticForm q_1112() { return QuadraticForm::diagonal4(1, 1, 1, 2); }
QuadraticForm q_1111() { return QuadraticForm::diagonal4(1, 1, 1, 1); }
QuadraticForm q_1122() { return QuadraticForm::diagonal4(1, 1, 2, 2); }
QuadraticForm q_1113() { return QuadraticForm::diagonal4(1, 1, 1, 3); }
QuadraticForm q_1255() { return QuadraticForm::diagonal4(1, 2, 5, 5); }
}  // namespace named_forms

// ============================================================================
// congruence machinery
// ============================================================================
bool CongruenceClause::satisfied(const std::array<i64, 4>& t) const {
    i128 v = -(i128)residue;
    for (int i = 0; i < 4; ++i) v += (i128)coeffs[i] * t[i];
    return v % modulus == 0;
}

namespace {

i64 mod_pos(i128 v, i64 m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return (i64)r;
}

// inverse of a modulo m; requires gcd(a, m) == 1
i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 t0 = 0, t1 = 1, r0 = m, r1 = mod_pos(a, m);
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw internal_error("mod_inverse: arguments not coprime");
    return mod_pos(t0, m);
}

// arithmetic progression value = r (mod m)
struct Progression {
    i64 r = 0;
    i64 m = 1;
};

// combine two congruences (general moduli); nullopt when incompatible
std::optional<Progression> combine(const Progression& a, i64 r2, i64 m2) {
    i64 g = std::gcd(a.m, m2);
    if (mod_pos((i128)r2 - a.r, g) != 0) return std::nullopt;
    i64 lcm = a.m / g * m2;
    // x = a.r + a.m * t, need a.m * t = r2 - a.r (mod m2)
    i64 mm = m2 / g;
    i64 step = (a.m / g) % mm;
    i64 rhs = mod_pos(((i128)r2 - a.r) / g, mm);
    i64 t = mod_pos((i128)rhs * mod_inverse(step, mm), mm);
    Progression out;
    out.m = lcm;
    out.r = mod_pos((i128)a.r + (i128)a.m * t, lcm);
    return out;
}

// reduce clause to a progression for coordinate `idx`, with coords < idx fixed.
// Applicable when all nonzero coefficients sit at positions <= idx.
// Returns: 0 = not applicable, 1 = applied, -1 = incompatible (skip prefix)
int clause_progression(const CongruenceClause& cl, int idx, const std::array<i64, 4>& fixed,
                       Progression& prog) {
    for (int i = idx + 1; i < 4; ++i)
        if (cl.coeffs[i] != 0) return 0;
    if (cl.coeffs[idx] == 0) return 0;  // handled at an earlier level or as filter
    i128 rhs = cl.residue;
    for (int i = 0; i < idx; ++i) rhs -= (i128)cl.coeffs[i] * fixed[i];
    i64 c = mod_pos(cl.coeffs[idx], cl.modulus);
    i64 b = mod_pos(rhs, cl.modulus);
    i64 g = std::gcd(c, cl.modulus);
    if (b % g != 0) return -1;
    i64 m = cl.modulus / g;
    i64 cc = (c / g) % m;
    i64 bb = (b / g) % m;
    i64 r = mod_pos((i128)bb * mod_inverse(cc, m), m);
    auto comb = combine(prog, r, m);
    if (!comb) return -1;
    prog = *comb;
    return 1;
}

// first progression member >= lo
i64 prog_start(const Progression& p, i64 lo) {
    return lo + mod_pos((i128)p.r - lo, p.m);
}

bool all_satisfied(const std::vector<CongruenceClause>& cls, const std::array<i64, 4>& t) {
    for (const auto& c : cls)
        if (!c.satisfied(t)) return false;
    return true;
}

constexpr u64 kRepresentCap = (u64)1 << 48;

// solve diag0 * x^2 + cross * y * x == rest for integer x; appends candidates
// in ascending order
void solve_first_coord(i64 diag0, i64 cross, i64 y, i64 rest, i64 out[2], int& count) {
    count = 0;
    // x = (-cross*y ± sqrt(cross^2 y^2 + 4 diag0 rest)) / (2 diag0)
    i128 disc = (i128)cross * cross * y * y + (i128)4 * diag0 * rest;
    if (disc < 0) return;
    u128 d = (u128)disc;
    u128 rt = ikroot128(d, 2);
    if (rt * rt != d) return;
    i128 base = -(i128)cross * y;
    i64 den = 2 * diag0;
    i128 cand[2] = {base - (i128)(u64)rt, base + (i128)(u64)rt};
    for (i128 c : cand) {
        if (c % den != 0) continue;
        i64 x = (i64)(c / den);
        if (count == 1 && out[0] == x) continue;
        out[count++] = x;
    }
}

}  // namespace

// ============================================================================
// represent_all: complete signed lists
// ============================================================================
std::vector<std::array<i64, 4>> represent_all(const QuadraticForm& f, u64 m) {
    if (m > kRepresentCap) throw resource_limit_error("represent_all: m exceeds 2^48");
    std::vector<std::array<i64, 4>> out;
    const i64 a0 = f.diag[0], a1 = f.diag[1], a2 = f.diag[2];
    const i64 e = f.cross_xy;
    // bound on |y| from positive definiteness of the (x,y) block
    const i64 D = 4 * a0 * a1 - e * e;
    const i64 by = isqrt((u64)((i128)4 * a0 * m / D)) + 1;
    if (f.arity == 3) {
        const i64 bz = isqrt(m / a2);
        for (i64 y = -by; y <= by; ++y) {
            for (i64 z = -bz; z <= bz; ++z) {
                i128 rest = (i128)m - (i128)a1 * y * y - (i128)a2 * z * z;
                // a0 x^2 + e x y can dip below zero, down to -e^2 y^2 / (4 a0)
                if (4 * a0 * rest + (i128)e * e * y * y < 0) continue;
                i64 roots[2];
                int nc;
                solve_first_coord(a0, e, y, (i64)rest, roots, nc);
                for (int i = 0; i < nc; ++i) out.push_back({roots[i], y, z, 0});
            }
        }
    } else {
        const i64 a3 = f.diag[3];
        const i64 bz = isqrt(m / a2);
        for (i64 y = -by; y <= by; ++y) {
            for (i64 z = -bz; z <= bz; ++z) {
                i128 r2 = (i128)m - (i128)a1 * y * y - (i128)a2 * z * z;
                if (r2 < 0) continue;
                i64 bw = isqrt((u64)(r2 / a3));
                for (i64 w = -bw; w <= bw; ++w) {
                    i128 rest = r2 - (i128)a3 * w * w;
                    if (rest < 0) continue;
                    i64 roots[2];
                    int nc;
                    solve_first_coord(a0, e, y, (i64)rest, roots, nc);
                    for (int i = 0; i < nc; ++i) out.push_back({roots[i], y, z, w});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ============================================================================
// represent_constrained: lexicographically least constrained representation
// ============================================================================
std::optional<std::array<i64, 4>> represent_constrained(const QuadraticForm& f, u64 m,
                                                        const CongruenceConstraint& cc) {
    if (m > kRepresentCap) throw resource_limit_error("represent_constrained: m exceeds 2^48");
    if (f.cross_xy != 0) {
        // cross-term forms: filter the complete list (these calls are rare)
        for (const auto& t : represent_all(f, m)) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
                if (!cc.sign_free[i] && t[i] < 0) ok = false;
            if (ok && all_satisfied(cc.clauses, t)) return t;
        }
        return std::nullopt;
    }

    // diagonal forms: strided lexicographic iteration, last coordinate solved
    const int n = f.arity;
    const int last = n - 1;
    std::array<i64, 4> t{0, 0, 0, 0};

    // iterative nested loop over coordinates [0, last)
    struct Level {
        i64 cur = 0, hi = 0, step = 1;
        i128 rest = 0;  // remaining value before this coordinate
    };
    std::array<Level, 3> lv;

    auto setup_level = [&](int idx, i128 rest) -> bool {
        Progression prog;
        for (const auto& cl : cc.clauses) {
            int rc = clause_progression(cl, idx, t, prog);
            if (rc < 0) return false;
        }
        i64 bound = isqrt((u64)(rest / f.diag[idx]));
        i64 lo = cc.sign_free[idx] ? -bound : 0;
        lv[idx].step = prog.m;
        lv[idx].cur = prog_start(prog, lo);
        lv[idx].hi = bound;
        lv[idx].rest = rest;
        return true;
    };

    int depth = 0;
    if (!setup_level(0, (i128)m)) return std::nullopt;
    while (depth >= 0) {
        if (lv[depth].cur > lv[depth].hi) {
            --depth;
            if (depth >= 0) lv[depth].cur += lv[depth].step;
            continue;
        }
        t[depth] = lv[depth].cur;
        i128 rest = lv[depth].rest - (i128)f.diag[depth] * t[depth] * t[depth];
        if (rest < 0) {
            // past the feasible range on this side; for sign-free coords the
            // negative tail can still be infeasible while later values work
            lv[depth].cur += lv[depth].step;
            continue;
        }
        if (depth + 1 < last) {
            ++depth;
            if (!setup_level(depth, rest)) {
                --depth;
                lv[depth].cur += lv[depth].step;
            }
            continue;
        }
        // solve the last coordinate: diag[last] * v^2 == rest
        if (rest % f.diag[last] == 0) {
            i128 sq = rest / f.diag[last];
            u64 r = isqrt((u64)sq);
            if ((i128)r * r == sq) {
                i64 cands[2];
                int nc = 0;
                if (r == 0) {
                    cands[nc++] = 0;
                } else {
                    if (cc.sign_free[last]) cands[nc++] = -(i64)r;
                    cands[nc++] = (i64)r;
                }
                for (int ci = 0; ci < nc; ++ci) {
                    t[last] = cands[ci];
                    bool ok = true;
                    for (int i = 0; i < n && ok; ++i)
                        if (!cc.sign_free[i] && t[i] < 0) ok = false;
                    if (ok && all_satisfied(cc.clauses, t)) {
                        for (int i = n; i < 4; ++i) t[i] = 0;
                        return t;
                    }
                }
            }
        }
        lv[depth].cur += lv[depth].step;
    }
    return std::nullopt;
}

// ============================================================================
// identities
// ============================================================================
std::array<i64, 3> automorphism_g(const std::array<i64, 3>& t) {
    i64 x = t[0], z = t[2];
    if (mod_pos(-3 * x + 16 * z, 5) != 0 || mod_pos(x + 3 * z, 5) != 0)
        throw domain_error("automorphism_g: transform not integral for this tuple");
    return {(-3 * x + 16 * z) / 5, t[1], (x + 3 * z) / 5};
}

std::array<i64, 3> lift_R_to_h(const std::array<i64, 3>& t) {
    return {3 * t[0] + t[1], t[1], t[2]};
}

std::array<i64, 3> lift_Rstar_to_l(const std::array<i64, 3>& t) {
    return {t[0] + 5 * t[1], t[0], t[2]};
}

std::array<i64, 4> multiplier7(const std::array<i64, 4>& t) {
    i64 s = t[0], tt = t[1], u = t[2], v = t[3];
    return {s + 2 * u + 2 * v, -2 * tt - u + 2 * v, 2 * s - tt - 2 * v, s + tt - u + v};
}

}  // namespace prsq
