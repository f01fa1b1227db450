#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "forms.hpp"

using namespace prsq;
using Tuple = std::array<i64, 4>;

namespace {

// independent brute-force representation list used to validate the library's
std::vector<Tuple> naive_represent(const QuadraticForm& f, i64 m) {
    std::vector<Tuple> out;
    const i64 bx = (i64)isqrt((u64)m) + 1;
    for (i64 x = -bx; x <= bx; ++x)
        for (i64 y = -bx; y <= bx; ++y) {
            if (f.arity == 3) {
                for (i64 z = -bx; z <= bx; ++z)
                    if (f.evaluate({x, y, z, 0}) == m) out.push_back({x, y, z, 0});
            } else {
                for (i64 z = -bx; z <= bx; ++z)
                    for (i64 w = -bx; w <= bx; ++w)
                        if (f.evaluate({x, y, z, w}) == m) out.push_back({x, y, z, w});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("form construction and evaluation") {
    const auto f = named_forms::q_1112();
    CHECK(f.arity == 4);
    CHECK(f.evaluate({1, 2, 3, 4}) == 46);
    CHECK(f.evaluate({-1, -2, -3, -4}) == 46);
    CHECK(named_forms::f_q(1) == named_forms::g_5_10());
    CHECK(named_forms::f_q(2).evaluate({1, 1, 1, 0}) == 1 + 17 + 34);
    CHECK(named_forms::R_cross().evaluate({1, 1, 0, 0}) == 3 + 5 + 2);
    CHECK(named_forms::R_cross().evaluate({1, -1, 0, 0}) == 3 + 5 - 2);
    CHECK(named_forms::Rstar_cross().evaluate({2, 3, 1, 0}) == 12 + 45 + 7 + 12);
    CHECK_THROWS_AS(QuadraticForm::diagonal3(1, 0, 2), domain_error);
    CHECK_THROWS_AS(QuadraticForm::diagonal4(1, 1, 1, -2), domain_error);
    // 4ab <= xy^2 is not positive definite
    CHECK_THROWS_AS(QuadraticForm::cross3(1, 1, 1, 2), domain_error);
    CHECK_THROWS_AS((void)named_forms::q_1111().evaluate({(i64)1 << 32, 0, 0, 0}),
                    resource_limit_error);
}

TEST_CASE("form labels") {
    CHECK(named_forms::g_5_10().label() == "x^2+5y^2+10z^2");
    CHECK(named_forms::q_1112().label() == "x^2+y^2+z^2+2w^2");
    CHECK(named_forms::R_cross().label() == "3x^2+5y^2+14z^2+2xy");
}

TEST_CASE("congruence clause") {
    const CongruenceClause cl{{1, 2, 0, 0}, 5, 3};
    CHECK(cl.satisfied({1, 1, 9, 9}));    // 3 mod 5
    CHECK(cl.satisfied({-2, 0, 0, 0}));   // -2 = 3 mod 5
    CHECK(!cl.satisfied({1, 2, 0, 0}));   // 5 = 0 mod 5
}

TEST_CASE("represent_all: frozen lists") {
    const auto a = represent_all(named_forms::g_10_16(), 75);
    REQUIRE(a.size() == 16);
    CHECK(a.front() == Tuple{-7, -1, -1, 0});
    CHECK(a.back() == Tuple{7, 1, 1, 0});

    const auto b = represent_all(named_forms::g_8_44(), 77);
    CHECK(b.size() == 16);

    const auto c = represent_all(named_forms::f_q(1), 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Tuple{-1, 0, 0, 0});
    CHECK(c[1] == Tuple{1, 0, 0, 0});

    const auto d = represent_all(named_forms::g_2_4(), 4);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == Tuple{-2, 0, 0, 0});
    CHECK(d[1] == Tuple{0, 0, -1, 0});
    CHECK(d[2] == Tuple{0, 0, 1, 0});
    CHECK(d[3] == Tuple{2, 0, 0, 0});

    CHECK(represent_all(named_forms::g_5_10(), 3).empty());
    CHECK_THROWS_AS((void)represent_all(named_forms::g_5_10(), ((u64)1 << 48) + 1),
                    resource_limit_error);
}

TEST_CASE("represent_all agrees with brute force") {
    std::mt19937_64 rng(2024);
    const QuadraticForm forms[] = {
        named_forms::g_5_10(),  named_forms::g_2_4(),   named_forms::h_3_3(),
        named_forms::g_10_16(), named_forms::g_8_44(),  named_forms::R_cross(),
        named_forms::Rstar_cross(), named_forms::q_1112(), named_forms::q_1111(),
        named_forms::q_1113(),  named_forms::q_1255(),
    };
    for (const auto& f : forms) {
        for (int rep = 0; rep < 12; ++rep) {
            const i64 m = (i64)(rng() % (f.arity == 4 ? 120 : 900));
            CAPTURE(f.label());
            CAPTURE(m);
            CHECK(represent_all(f, (u64)m) == naive_represent(f, m));
        }
    }
}

TEST_CASE("represent_constrained equals filtered representation list") {
    std::mt19937_64 rng(77);
    const QuadraticForm forms[] = {named_forms::g_10_16(), named_forms::g_8_44(),
                                   named_forms::h_3_3(), named_forms::q_1112()};
    for (const auto& f : forms)
        for (int rep = 0; rep < 40; ++rep) {
            const u64 m = rng() % 800;
            CongruenceConstraint cc;
            const int nclauses = (int)(rng() % 3);
            for (int i = 0; i < nclauses; ++i) {
                CongruenceClause cl;
                for (int j = 0; j < f.arity; ++j) cl.coeffs[j] = (i64)(rng() % 5) - 2;
                cl.modulus = 1 + (i64)(rng() % 8);
                cl.residue = (i64)(rng() % (u64)cl.modulus);
                cc.clauses.push_back(cl);
            }
            if (rng() % 3 == 0) cc.sign_free[rng() % f.arity] = false;

            std::optional<Tuple> expect;
            for (const auto& t : represent_all(f, m)) {
                bool ok = true;
                for (int i = 0; i < 4; ++i)
                    if (!cc.sign_free[i] && t[i] < 0) ok = false;
                for (const auto& cl : cc.clauses)
                    if (!cl.satisfied(t)) ok = false;
                if (ok) { expect = t; break; }
            }
            CAPTURE(f.label());
            CAPTURE(m);
            CHECK(represent_constrained(f, m, cc) == expect);
        }
}

TEST_CASE("represent_constrained: congruence used by the interval construction") {
    // 5n - p^2 = s^2 + 5z^2 + 10w^2 with s = -2p (mod 5), the d=1 instance
    const u64 n = 1009, p = 67;  // p in [sqrt(4n), sqrt(5n)]
    const u64 m = 5 * n - p * p;
    CongruenceConstraint cc;
    cc.clauses.push_back({{1, 0, 0, 0}, 5, (i64)((10 - 2 * p % 5) % 5)});
    const auto rep = represent_constrained(named_forms::g_5_10(), m, cc);
    REQUIRE(rep.has_value());
    CHECK(named_forms::g_5_10().evaluate(*rep) == (i64)m);
    CHECK((((*rep)[0] + 2 * (i64)p) % 5) == 0);
}

TEST_CASE("automorphism of x^2+10y^2+16z^2") {
    std::mt19937_64 rng(5150);
    const auto f = named_forms::g_10_16();
    for (int i = 0; i < 4000; ++i) {
        const i64 x = (i64)(rng() % 2001) - 1000;
        const i64 y = (i64)(rng() % 2001) - 1000;
        i64 z = (i64)(rng() % 2001) - 1000;
        // applicability needs -3x+16z = 0 (mod 5), i.e. z = 3x (mod 5)
        z -= ((z - 3 * x) % 5 + 5) % 5;
        const auto g = automorphism_g({x, y, z});
        CHECK(f.evaluate({g[0], g[1], g[2], 0}) == f.evaluate({x, y, z, 0}));
        CHECK(automorphism_g(g) == std::array<i64, 3>{x, y, z});
    }
    CHECK_THROWS_AS((void)automorphism_g({1, 0, 0}), domain_error);
}

TEST_CASE("lifts and multiplier") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 5000; ++i) {
        const i64 x = (i64)(rng() % 2001) - 1000;
        const i64 y = (i64)(rng() % 2001) - 1000;
        const i64 z = (i64)(rng() % 2001) - 1000;
        const auto h = lift_R_to_h({x, y, z});
        CHECK(named_forms::h_14_42().evaluate({h[0], h[1], h[2], 0}) ==
              3 * named_forms::R_cross().evaluate({x, y, z, 0}));
        const auto l = lift_Rstar_to_l({x, y, z});
        CHECK(named_forms::l_14_35().evaluate({l[0], l[1], l[2], 0}) ==
              5 * named_forms::Rstar_cross().evaluate({x, y, z, 0}));
        const i64 w = (i64)(rng() % 2001) - 1000;
        const auto m7 = multiplier7({x, y, z, w});
        CHECK(named_forms::q_1112().evaluate(m7) ==
              7 * named_forms::q_1112().evaluate({x, y, z, w}));
    }
    CHECK(multiplier7({1, 1, 1, 1}) == Tuple{5, -1, -1, 2});
}
