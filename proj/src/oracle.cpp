#include "oracle.hpp"

namespace prsq {

// ============================================================================
// acceleration tables
// ============================================================================
Accel Accel::build(FormId f, u64 n_max) {
    if (n_max > kOracleLimit) throw resource_limit_error("accel: n_max exceeds oracle gate");
    Accel a;
    const QuadraticForm q = form_of(f);
    a.c1 = q.diag[q.arity - 2];
    a.c2 = q.diag[q.arity - 1];
    a.limit = n_max;
    a.tail.assign(n_max + 1, 0);
    for (u64 z = 0; (u128)a.c1 * z * z <= n_max; ++z) {
        const u64 base = (u64)a.c1 * z * z;
        for (u64 w = 0; base + (u128)a.c2 * w * w <= n_max; ++w)
            a.tail[base + (u64)a.c2 * w * w] = 1;
    }
    // linear values of our constraints are below 16*sqrt(n) + slack
    a.plimit = 16 * isqrt(n_max) + 64;
    a.prime.assign(a.plimit + 1, 1);
    a.prime[0] = a.prime[1] = 0;
    for (u64 p = 2; p * p <= a.plimit; ++p)
        if (a.prime[p])
            for (u64 m = p * p; m <= a.plimit; m += p) a.prime[m] = 0;
    return a;
}

namespace {

void check_gate(u64 n) {
    if (n > kOracleLimit) throw resource_limit_error("oracle: n exceeds enumeration gate");
}

// visits the sign variants of a nonnegative pattern in ascending (signed
// lexicographic) order; fn returning true stops the walk
template <typename F>
bool visit_sign_variants(const std::array<i64, 4>& pat, int arity, F&& fn) {
    std::array<i64, 4> t{0, 0, 0, 0};
    int first[4];
    for (int i = 0; i < 4; ++i) first[i] = (i < arity && pat[i] != 0) ? 0 : 1;
    for (int s0 = first[0]; s0 < 2; ++s0) {
        t[0] = s0 ? pat[0] : -pat[0];
        for (int s1 = first[1]; s1 < 2; ++s1) {
            t[1] = s1 ? pat[1] : -pat[1];
            for (int s2 = first[2]; s2 < 2; ++s2) {
                t[2] = s2 ? pat[2] : -pat[2];
                for (int s3 = first[3]; s3 < 2; ++s3) {
                    t[3] = s3 ? pat[3] : -pat[3];
                    if (fn(t)) return true;
                }
            }
        }
    }
    return false;
}

// walks nonnegative patterns of a diagonal form in lexicographic order
template <typename F>
void visit_patterns(const QuadraticForm& f, u64 n, F&& fn) {
    const u64 c0 = (u64)f.diag[0], c1 = (u64)f.diag[1], c2 = (u64)f.diag[2];
    if (f.arity == 3) {
        for (u64 x = 0; c0 * x * x <= n; ++x) {
            const u64 r1 = n - c0 * x * x;
            for (u64 y = 0; c1 * y * y <= r1; ++y) {
                const u64 r2 = r1 - c1 * y * y;
                if (r2 % c2) continue;
                const u64 q = r2 / c2, z = isqrt(q);
                if (z * z != q) continue;
                if (fn(std::array<i64, 4>{(i64)x, (i64)y, (i64)z, 0})) return;
            }
        }
        return;
    }
    const u64 c3 = (u64)f.diag[3];
    for (u64 x = 0; c0 * x * x <= n; ++x) {
        const u64 r1 = n - c0 * x * x;
        for (u64 y = 0; c1 * y * y <= r1; ++y) {
            const u64 r2 = r1 - c1 * y * y;
            for (u64 z = 0; c2 * z * z <= r2; ++z) {
                const u64 r3 = r2 - c2 * z * z;
                if (r3 % c3) continue;
                const u64 q = r3 / c3, w = isqrt(q);
                if (w * w != q) continue;
                if (fn(std::array<i64, 4>{(i64)x, (i64)y, (i64)z, (i64)w})) return;
            }
        }
    }
}

}  // namespace

// ============================================================================
// complete enumeration
// ============================================================================
std::vector<std::array<i64, 4>> enumerate_diagonal(const QuadraticForm& f, u64 n,
                                                   bool signed_tuples) {
    check_gate(n);
    if (f.cross_xy != 0) throw domain_error("enumerate_diagonal: diagonal forms only");
    std::vector<std::array<i64, 4>> out;
    visit_patterns(f, n, [&](const std::array<i64, 4>& pat) {
        if (!signed_tuples) {
            out.push_back(pat);
            return false;
        }
        visit_sign_variants(pat, f.arity, [&](const std::array<i64, 4>& t) {
            out.push_back(t);
            return false;
        });
        return false;
    });
    return out;
}

std::vector<std::array<i64, 4>> enumerate(FormId f, u64 n, bool signed_tuples) {
    return enumerate_diagonal(form_of(f), n, signed_tuples);
}

// ============================================================================
// least constrained witness
// ============================================================================
std::optional<Witness> exists_constrained(u64 n, FormId fid, const LinearConstraint& lc,
                                          bool signed_tuples, const Accel* accel) {
    check_gate(n);
    const QuadraticForm f = form_of(fid);
    if (f.arity == 3 && lc.coeffs[3] != 0)
        throw domain_error("exists_constrained: constraint references unused coordinate");

    auto make_witness = [&](const std::array<i64, 4>& t) {
        Witness w;
        w.value = n;
        w.form = fid;
        w.tuple = t;
        w.signed_coords = signed_tuples;
        w.constraint = lc;
        w.certificate = certify(lc.target, lc.value_at(t));
        w.validate();
        return w;
    };
    auto in_target = [&](i64 v) -> bool {
        if (lc.target.kind == TargetKind::prime && accel) return accel->prime_at(v);
        return lc.target.contains(v);
    };

    if (signed_tuples) {
        std::optional<Witness> found;
        visit_patterns(f, n, [&](const std::array<i64, 4>& pat) {
            return visit_sign_variants(pat, f.arity, [&](const std::array<i64, 4>& t) {
                if (!in_target(lc.value_at(t))) return false;
                found = make_witness(t);
                return true;
            });
        });
        return found;
    }

    const u64 c0 = (u64)f.diag[0], c1 = (u64)f.diag[1], c2 = (u64)f.diag[2];
    if (f.arity == 3) {
        for (u64 x = 0; c0 * x * x <= n; ++x) {
            const u64 r1 = n - c0 * x * x;
            for (u64 y = 0; c1 * y * y <= r1; ++y) {
                const u64 r2 = r1 - c1 * y * y;
                if (r2 % c2) continue;
                const u64 q = r2 / c2, z = isqrt(q);
                if (z * z != q) continue;
                std::array<i64, 4> t{(i64)x, (i64)y, (i64)z, 0};
                if (in_target(lc.value_at(t))) return make_witness(t);
            }
        }
        return std::nullopt;
    }

    const u64 c3 = (u64)f.diag[3];
    const bool use_tail =
        accel && n <= accel->limit && accel->c1 == f.diag[2] && accel->c2 == f.diag[3];
    const bool sup_z = lc.coeffs[2] != 0, sup_w = lc.coeffs[3] != 0;
    const bool enumerable_target =
        lc.target.kind == TargetKind::fixed || lc.target.kind == TargetKind::square;

    for (u64 x = 0; c0 * x * x <= n; ++x) {
        const u64 r1 = n - c0 * x * x;
        for (u64 y = 0; c1 * y * y <= r1; ++y) {
            const u64 r2 = r1 - c1 * y * y;
            const i64 base = lc.coeffs[0] * (i64)x + lc.coeffs[1] * (i64)y;

            if (!sup_z && !sup_w) {
                // constraint decided here; the tail pair only needs to exist
                if (!in_target(base)) continue;
                if (use_tail && !accel->tail_ok(r2)) continue;
                for (u64 z = 0; c2 * z * z <= r2; ++z) {
                    const u64 r3 = r2 - c2 * z * z;
                    if (r3 % c3) continue;
                    const u64 q = r3 / c3, w = isqrt(q);
                    if (w * w == q) return make_witness({(i64)x, (i64)y, (i64)z, (i64)w});
                }
                continue;
            }

            if (!sup_z && sup_w) {
                // constraint decided by w; descending w visits completions in
                // ascending-z order, preserving the least-witness contract
                for (i64 w = (i64)isqrt(r2 / c3); w >= 0; --w) {
                    if (!in_target(base + lc.coeffs[3] * w)) continue;
                    const u64 r3 = r2 - c3 * (u64)(w * w);
                    if (r3 % c2) continue;
                    const u64 q = r3 / c2, z = isqrt(q);
                    if (z * z == q) return make_witness({(i64)x, (i64)y, (i64)z, w});
                }
                continue;
            }

            if (sup_z && !sup_w && enumerable_target && lc.coeffs[2] > 0) {
                // enumerate target values instead of scanning every z
                const u64 zmax = isqrt(r2 / c2);
                auto try_z = [&](i64 z) -> std::optional<Witness> {
                    if (z < 0 || (u64)z > zmax) return std::nullopt;
                    const u64 r3 = r2 - c2 * (u64)(z * z);
                    if (r3 % c3) return std::nullopt;
                    const u64 q = r3 / c3, w = isqrt(q);
                    if (w * w != q) return std::nullopt;
                    return make_witness({(i64)x, (i64)y, z, (i64)w});
                };
                if (lc.target.kind == TargetKind::fixed) {
                    const i64 diff = lc.target.lambda - base;
                    if (diff >= 0 && diff % lc.coeffs[2] == 0)
                        if (auto w = try_z(diff / lc.coeffs[2])) return w;
                } else {  // square target: j^2 = base + coeff*z, j ascending
                    const i64 zcap = lc.coeffs[2] * (i64)zmax;
                    for (i64 j = (i64)isqrt((u64)base);; ++j) {
                        const i64 diff = j * j - base;
                        if (diff < 0) continue;
                        if (diff > zcap) break;
                        if (diff % lc.coeffs[2]) continue;
                        if (auto w = try_z(diff / lc.coeffs[2])) return w;
                    }
                }
                continue;
            }

            // general leaf check
            if (use_tail && !accel->tail_ok(r2)) continue;
            for (u64 z = 0; c2 * z * z <= r2; ++z) {
                const u64 r3 = r2 - c2 * z * z;
                if (r3 % c3) continue;
                const u64 q = r3 / c3, w = isqrt(q);
                if (w * w != q) continue;
                std::array<i64, 4> t{(i64)x, (i64)y, (i64)z, (i64)w};
                if (in_target(lc.value_at(t))) return make_witness(t);
            }
        }
    }
    return std::nullopt;
}

}  // namespace prsq
