#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"

using namespace prsq;
using Tuple = std::array<i64, 4>;

namespace {

// independent mirror of the advertised search order: nonnegative coordinates
// ascending, last coordinate solved from the remainder
template <typename Visit>
void naive_patterns(const QuadraticForm& f, i64 n, Visit&& visit) {
    const auto& d = f.diag;
    if (f.arity == 3) {
        for (i64 x = 0; d[0] * x * x <= n; ++x)
            for (i64 y = 0; d[0] * x * x + d[1] * y * y <= n; ++y) {
                const i64 rem = n - d[0] * x * x - d[1] * y * y;
                if (rem % d[2]) continue;
                const i64 z = (i64)isqrt((u64)(rem / d[2]));
                if (d[2] * z * z != rem) continue;
                if (visit({x, y, z, 0})) return;
            }
        return;
    }
    for (i64 x = 0; d[0] * x * x <= n; ++x)
        for (i64 y = 0; d[0] * x * x + d[1] * y * y <= n; ++y)
            for (i64 z = 0; d[0] * x * x + d[1] * y * y + d[2] * z * z <= n; ++z) {
                const i64 rem = n - d[0] * x * x - d[1] * y * y - d[2] * z * z;
                if (rem % d[3]) continue;
                const i64 w = (i64)isqrt((u64)(rem / d[3]));
                if (d[3] * w * w != rem) continue;
                if (visit({x, y, z, w})) return;
            }
}

template <typename Visit>
bool naive_signs(const QuadraticForm& f, const Tuple& pat, int idx, Tuple cur, Visit&& visit) {
    if (idx == f.arity) {
        return visit(cur);
    }
    if (pat[idx] == 0) {
        cur[idx] = 0;
        return naive_signs(f, pat, idx + 1, cur, visit);
    }
    cur[idx] = -pat[idx];
    if (naive_signs(f, pat, idx + 1, cur, visit)) return true;
    cur[idx] = pat[idx];
    return naive_signs(f, pat, idx + 1, cur, visit);
}

std::optional<Tuple> naive_least(FormId f, u64 n, const LinearConstraint& lc,
                                 bool signed_tuples) {
    const QuadraticForm qf = form_of(f);
    std::optional<Tuple> found;
    auto in_target = [&](const Tuple& t) {
        i128 v = 0;
        for (int i = 0; i < 4; ++i) v += (i128)lc.coeffs[i] * t[i];
        return lc.target.contains((i64)v);
    };
    naive_patterns(qf, (i64)n, [&](const Tuple& pat) {
        if (!signed_tuples) {
            if (in_target(pat)) {
                found = pat;
                return true;
            }
            return false;
        }
        return naive_signs(qf, pat, 0, {0, 0, 0, 0}, [&](const Tuple& t) {
            if (in_target(t)) {
                found = t;
                return true;
            }
            return false;
        });
    });
    return found;
}

}  // namespace

TEST_CASE("enumerate: frozen lists") {
    const auto e2 = enumerate(FormId::f1112, 2, false);
    REQUIRE(e2.size() == 4);
    CHECK(e2[0] == Tuple{0, 0, 0, 1});
    CHECK(e2[1] == Tuple{0, 1, 1, 0});
    CHECK(e2[2] == Tuple{1, 0, 1, 0});
    CHECK(e2[3] == Tuple{1, 1, 0, 0});

    const auto e14 = enumerate(FormId::f1111, 14, false);
    CHECK(e14.size() == 24);
    CHECK(e14.front() == Tuple{0, 1, 2, 3});
    // single multiset {0,1,2,3}: every tuple is a rearrangement of it
    for (const auto& t : e14) {
        std::array<i64, 4> a = t;
        std::sort(a.begin(), a.end());
        CHECK(a == std::array<i64, 4>{0, 1, 2, 3});
    }
    // all sign variants of the three nonzero coordinates
    CHECK(enumerate(FormId::f1111, 14, true).size() == 24 * 8);

    CHECK(enumerate(FormId::f3sq, 7, false).empty());
    CHECK(enumerate(FormId::f3sq, 6, false).size() == 3);  // orderings of (1,1,2)
    CHECK(enumerate(FormId::f1111, 0, true).size() == 1);
}

TEST_CASE("enumerate matches a brute-force grid") {
    std::mt19937_64 rng(42);
    for (const FormId f :
         {FormId::f1111, FormId::f1112, FormId::f1122, FormId::f1113, FormId::f3sq}) {
        const QuadraticForm qf = form_of(f);
        for (int rep = 0; rep < 25; ++rep) {
            const u64 n = rng() % 300;
            std::vector<Tuple> grid;
            const i64 b = (i64)isqrt(n) + 1;
            Tuple t{0, 0, 0, 0};
            for (i64 x = -b; x <= b; ++x)
                for (i64 y = -b; y <= b; ++y)
                    for (i64 z = -b; z <= b; ++z) {
                        if (qf.arity == 3) {
                            t = {x, y, z, 0};
                            if (qf.evaluate(t) == (i64)n) grid.push_back(t);
                        } else {
                            for (i64 w = -b; w <= b; ++w) {
                                t = {x, y, z, w};
                                if (qf.evaluate(t) == (i64)n) grid.push_back(t);
                            }
                        }
                    }
            auto got = enumerate(f, n, true);
            CHECK(got.size() == grid.size());
            std::sort(got.begin(), got.end());
            std::sort(grid.begin(), grid.end());
            CHECK(got == grid);

            // unsigned = nonnegative filter of the signed list
            std::vector<Tuple> nn;
            for (const auto& g : grid)
                if (g[0] >= 0 && g[1] >= 0 && g[2] >= 0 && g[3] >= 0) nn.push_back(g);
            auto gotu = enumerate(f, n, false);
            std::sort(gotu.begin(), gotu.end());
            CHECK(gotu == nn);
        }
    }
}

TEST_CASE("exists_constrained returns the least witness") {
    struct Case {
        u64 n;
        FormId f;
        LinearConstraint lc;
        Tuple expect;
    };
    const Case cases[] = {
        {10, FormId::f1112, {{1, 2, 0, 0}, TargetSet::prime()}, {0, 1, 1, 2}},
        {15, FormId::f1112, {{1, 2, 0, 0}, TargetSet::prime()}, {2, 0, 3, 1}},
        {100, FormId::f1112, {{1, 2, 0, 0}, TargetSet::prime()}, {0, 1, 1, 7}},
        {2, FormId::f1112, {{1, 1, 0, 0}, TargetSet::prime()}, {1, 1, 0, 0}},
        {100, FormId::f1112, {{1, 1, 0, 0}, TargetSet::prime()}, {0, 2, 8, 4}},
        {1000, FormId::f1112, {{1, 1, 0, 0}, TargetSet::prime()}, {0, 2, 14, 20}},
        {100, FormId::f1112, {{1, 0, 0, 1}, TargetSet::prime()}, {0, 1, 1, 7}},
        {1000, FormId::f1112, {{1, 0, 0, 1}, TargetSet::prime()}, {1, 6, 31, 1}},
        {10, FormId::f1111, {{1, 3, 5, 0}, TargetSet::square()}, {0, 3, 0, 1}},
        {100, FormId::f1111, {{1, 3, 5, 0}, TargetSet::square()}, {0, 0, 0, 10}},
        {1234, FormId::f1111, {{1, 3, 5, 0}, TargetSet::square()}, {0, 3, 0, 35}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        const auto w = exists_constrained(c.n, c.f, c.lc, false);
        REQUIRE(w.has_value());
        CHECK(w->tuple == c.expect);
        CHECK(w->value == c.n);
        CHECK(w->form == c.f);
        CHECK(!w->signed_coords);
    }
    // no witness below the corollaries' starting points
    CHECK(!exists_constrained(1, FormId::f1112, {{1, 1, 0, 0}, TargetSet::prime()}, false)
               .has_value());
    CHECK(!exists_constrained(2, FormId::f1112, {{1, 0, 0, 1}, TargetSet::prime()}, false)
               .has_value());
}

TEST_CASE("exists_constrained certificate kinds") {
    const auto w = exists_constrained(10, FormId::f1112, {{1, 2, 0, 0}, TargetSet::prime()},
                                      false);
    REQUIRE(w.has_value());
    CHECK(w->certificate.kind == Certificate::Kind::prime_power);
    CHECK(w->certificate.base == 2);

    const auto s = exists_constrained(10, FormId::f1111, {{1, 3, 5, 0}, TargetSet::square()},
                                      false);
    REQUIRE(s.has_value());
    CHECK(s->certificate.kind == Certificate::Kind::square);
    CHECK(s->certificate.base == 3);  // 0 + 3*3 + 0 = 9

    const auto f = exists_constrained(9, FormId::f1111, {{1, 1, 2, 2}, TargetSet::fixed(3)},
                                      true);
    REQUIRE(f.has_value());
    CHECK(f->certificate.kind == Certificate::Kind::fixed);
    CHECK(f->signed_coords);
}

TEST_CASE("exists_constrained agrees with the naive mirror") {
    std::mt19937_64 rng(271828);
    const FormId forms[] = {FormId::f1111, FormId::f1112, FormId::f1122, FormId::f1113};
    const TargetSet targets[] = {TargetSet::prime(), TargetSet::prime_power(2),
                                 TargetSet::even_kth_power(1), TargetSet::square(),
                                 TargetSet::fixed(5), TargetSet::fixed(1)};
    int hits = 0;
    for (int rep = 0; rep < 900; ++rep) {
        const FormId f = forms[rng() % 4];
        const u64 n = rng() % 2200;
        LinearConstraint lc;
        for (int i = 0; i < 4; ++i) lc.coeffs[i] = (i64)(rng() % 4);
        if (lc.coeffs == std::array<i64, 4>{0, 0, 0, 0}) lc.coeffs[0] = 1;
        lc.target = targets[rng() % 6];
        const bool sgn = rng() % 2 == 0;
        CAPTURE(n);
        CAPTURE(sgn);
        const auto got = exists_constrained(n, f, lc, sgn);
        const auto expect = naive_least(f, n, lc, sgn);
        if (expect.has_value()) {
            ++hits;
            REQUIRE(got.has_value());
            CHECK(got->tuple == *expect);
        } else {
            CHECK(!got.has_value());
        }
    }
    CHECK(hits > 200);  // the sweep exercises real witnesses, not just misses
}

TEST_CASE("acceleration tables do not change any result") {
    const u64 n_max = 4000;
    const Accel acc1112 = Accel::build(FormId::f1112, n_max);
    const std::array<i64, 4> coeff_sets[] = {{1, 2, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}};
    for (const auto& coeffs : coeff_sets) {
        const LinearConstraint lc{coeffs, TargetSet::prime()};
        for (u64 n = 0; n <= n_max; n += 7) {
            const auto a = exists_constrained(n, FormId::f1112, lc, false, &acc1112);
            const auto b = exists_constrained(n, FormId::f1112, lc, false, nullptr);
            CHECK(a.has_value() == b.has_value());
            if (a && b) CHECK(a->tuple == b->tuple);
        }
    }
    // square targets through the accelerated path
    const Accel acc = Accel::build(FormId::f1111, 3000);
    const LinearConstraint sq{{1, 3, 5, 0}, TargetSet::square()};
    for (u64 n = 0; n <= 3000; n += 11) {
        const auto a = exists_constrained(n, FormId::f1111, sq, false, &acc);
        const auto b = naive_least(FormId::f1111, n, sq, false);
        CHECK(a.has_value() == b.has_value());
        if (a && b) CHECK(a->tuple == *b);
    }
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS((void)enumerate(FormId::f1112, kOracleLimit + 1, false),
                    resource_limit_error);
    CHECK_THROWS_AS((void)exists_constrained(kOracleLimit + 1, FormId::f1112,
                                             {{1, 2, 0, 0}, TargetSet::prime()}, false),
                    resource_limit_error);
    // a ternary form cannot carry a constraint on the fourth coordinate
    CHECK_THROWS_AS((void)exists_constrained(5, FormId::f3sq,
                                             {{1, 0, 0, 1}, TargetSet::prime()}, false),
                    domain_error);
}
