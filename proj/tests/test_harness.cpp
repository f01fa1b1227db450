#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "harness.hpp"
#include "records.hpp"

using namespace prsq;

namespace {

CampaignSpec make_spec(TargetId t, u64 lo, u64 hi, CampaignMode m) {
    CampaignSpec s;
    s.target = t;
    s.n_lo = lo;
    s.n_hi = hi;
    s.mode = m;
    return s;
}

u64 invariant_sum(const CampaignResult& r) {
    return r.passed + r.failed.size() + r.not_applicable;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("target and mode names round-trip") {
    const TargetId all[] = {TargetId::thm11,   TargetId::cor12,   TargetId::cor13i,
                            TargetId::cor13ii, TargetId::thm12i,  TargetId::thm12ii,
                            TargetId::thm12iii, TargetId::thm13,  TargetId::thm14,
                            TargetId::conj135};
    for (TargetId t : all) {
        auto back = target_from_name(target_name(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK(*target_from_name("cor1.3ii") == TargetId::cor13ii);
    CHECK(!target_from_name("thm9.9").has_value());
    for (CampaignMode m :
         {CampaignMode::construct, CampaignMode::oracle, CampaignMode::cross}) {
        auto back = mode_from_name(mode_name(m));
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
    CHECK(!mode_from_name("both").has_value());
}

TEST_CASE("spec digest identifies the sweep, not the execution") {
    CampaignSpec a = make_spec(TargetId::cor12, 1, 100, CampaignMode::cross);
    CampaignSpec b = a;
    b.workers = 8;
    b.witness_log = "/tmp/somewhere.log";
    CHECK(a.digest() == b.digest());

    b = a;
    b.n_hi = 101;
    CHECK(a.digest() != b.digest());
    b = a;
    b.mode = CampaignMode::oracle;
    CHECK(a.digest() != b.digest());
    b = a;
    b.params.lambda = 3;
    CHECK(a.digest() != b.digest());
    b = a;
    b.target = TargetId::cor13i;
    CHECK(a.digest() != b.digest());
}

TEST_CASE("config validation") {
    auto s = make_spec(TargetId::cor12, 10, 1, CampaignMode::construct);
    CHECK_THROWS_AS((void)run(s), config_error);  // n_lo > n_hi
    s = make_spec(TargetId::cor12, 1, 10, CampaignMode::construct);
    s.step = 0;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::cor12, 1, 10, CampaignMode::construct);
    s.workers = 0;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm11, 1, 10, CampaignMode::construct);
    s.params.d = 4;  // 4*16+1 = 65 is composite
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm12i, 1, 10, CampaignMode::construct);
    s.params.lambda = 2;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm12iii, 1, 10, CampaignMode::construct);
    s.params.lambda = 7;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm13, 1, 10, CampaignMode::construct);
    s.params.lambda = -14;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm13, 1, 10, CampaignMode::construct);
    s.params.delta = 2;
    CHECK_THROWS_AS((void)run(s), config_error);
    s = make_spec(TargetId::thm14, 1, 10, CampaignMode::construct);
    s.params.k = 0;
    CHECK_THROWS_AS((void)run(s), config_error);
}

TEST_CASE("prime-target corollaries sweep clean in every mode") {
    for (auto mode : {CampaignMode::construct, CampaignMode::oracle, CampaignMode::cross}) {
        auto r = run(make_spec(TargetId::cor12, 1, 2000, mode));
        CHECK(r.checked == 2000);
        CHECK(r.passed == 2000);
        CHECK(r.failed.empty());
        CHECK(r.not_applicable == 0);
        CHECK(r.not_found == 0);
        CHECK(invariant_sum(r) == r.checked);
    }

    auto r = run(make_spec(TargetId::cor13i, 2, 2000, CampaignMode::oracle));
    CHECK(r.passed == 1999);
    CHECK(r.failed.empty());

    // n_lo below the gate: the gated n land in not_applicable
    r = run(make_spec(TargetId::cor13ii, 1, 1500, CampaignMode::cross));
    CHECK(r.checked == 1500);
    CHECK(r.not_applicable == 2);  // n = 1, 2
    CHECK(r.not_found == 0);
    CHECK(r.passed == 1498);
    CHECK(r.failed.empty());
}

TEST_CASE("fixed-sum decomposers sweep clean") {
    auto s = make_spec(TargetId::thm12i, 1, 400, CampaignMode::construct);
    s.params.lambda = 3;
    auto r = run(s);
    CHECK(r.checked == 400);
    CHECK(r.not_applicable == 1);  // 8n < 9 only at n = 1
    CHECK(r.passed == 399);
    CHECK(r.failed.empty());

    s.target = TargetId::thm12ii;
    s.params.lambda = 5;
    r = run(s);
    CHECK(r.not_applicable == 1);  // 16n < 25 only at n = 1
    CHECK(r.passed == 399);
    CHECK(r.failed.empty());

    s = make_spec(TargetId::thm12iii, 1, 99, CampaignMode::construct);
    s.params.lambda = 1;
    r = run(s);
    CHECK(r.checked == 99);
    CHECK(r.not_applicable == 49);  // even n
    CHECK(r.passed == 50);
    CHECK(r.failed.empty());

    // cross mode re-derives existence by brute force (values stay small)
    s = make_spec(TargetId::thm12i, 1, 150, CampaignMode::cross);
    s.params.lambda = 5;
    r = run(s);
    CHECK(r.failed.empty());
    CHECK(r.passed == 147);  // 8n >= 25 from n = 4 on
    CHECK(r.not_applicable == 3);
}

TEST_CASE("parity gate bookkeeping matches the documented example") {
    // construct sweep, lambda = 1, delta = 0: the gate n != lambda (mod 2)
    // turns exactly the odd n into not_applicable
    auto s = make_spec(TargetId::thm13, 1, 1000, CampaignMode::construct);
    s.params.lambda = 1;
    s.params.delta = 0;
    auto r = run(s);
    CHECK(r.checked == 1000);
    CHECK(r.not_applicable == 500);
    CHECK(r.not_found == 0);
    CHECK(r.passed == 500);
    CHECK(r.failed.empty());
}

TEST_CASE("forced-parity classes surface as not_found and the oracle concurs") {
    // delta = 1, lambda odd: n = 3 (mod 4) passes the printed gate but has no
    // witness at all.  Those n must land in not_found (inside not_applicable),
    // never in failed.
    auto s = make_spec(TargetId::thm13, 1, 200, CampaignMode::construct);
    s.params.lambda = 1;
    s.params.delta = 1;
    auto r = run(s);
    const u64 gated = 50;     // n = 1 (mod 4), the printed precondition
    const u64 obstructed = 50;  // n = 3 (mod 4)
    CHECK(r.checked == 200);
    CHECK(r.not_applicable == gated + obstructed);
    CHECK(r.not_found == obstructed);
    CHECK(r.passed == 100);
    CHECK(r.failed.empty());

    // cross mode re-checks each obstructed n by exhaustive signed enumeration
    s.mode = CampaignMode::cross;
    auto rc = run(s);
    CHECK(rc.not_found == obstructed);
    CHECK(rc.passed == 100);
    CHECK(rc.failed.empty());
    CHECK(rc.digest == r.digest);  // same witnesses either way

    // even lambda: the empty class sits at n = 0 (mod 4)
    s = make_spec(TargetId::thm13, 1, 200, CampaignMode::cross);
    s.params.lambda = 2;
    s.params.delta = 1;
    auto re = run(s);
    CHECK(re.not_found == 50);
    CHECK(re.failed.empty());
    CHECK(re.not_applicable == 100);  // 50 gated (n = 2 mod 4) + 50 obstructed
    CHECK(re.passed == 100);
}

TEST_CASE("interval construction reports ineffective ranges as not_found") {
    // d = 1, k = 2: [ (4n)^{1/4}, (5n)^{1/4} ] holds no prime above q = 5 for
    // n in [50, 250] (7^4 = 2401 first enters at n = 481), so every n is a
    // clean miss, never a failure
    auto s = make_spec(TargetId::thm11, 50, 250, CampaignMode::construct);
    s.params.d = 1;
    s.params.k = 2;
    auto r = run(s);
    CHECK(r.checked == 201);
    CHECK(r.failed.empty());
    CHECK(r.passed == 0);
    CHECK(r.not_found == 201);
    CHECK(r.not_applicable == 201);  // not_found counts inside not_applicable

    // 11^4 = 14641 lies in [4n, 5n] exactly for n in [2929, 3660]: part of
    // that window succeeds, the rest misses; nothing fails
    s = make_spec(TargetId::thm11, 2900, 3700, CampaignMode::construct);
    s.params.k = 2;
    r = run(s);
    CHECK(r.checked == 801);
    CHECK(r.failed.empty());
    CHECK(r.passed + r.not_found == 801);
    CHECK(r.not_found > 0);

    // k = 1 at moderate scale: the construction is reliable
    s = make_spec(TargetId::thm11, 10000, 10400, CampaignMode::construct);
    s.params.k = 1;
    r = run(s);
    CHECK(r.failed.empty());
    CHECK(r.passed >= 399);
    CHECK(r.not_found <= 2);

    // cross mode: a construction miss with an existing oracle witness stays
    // not_found (the statement only promises success for n large enough)
    s = make_spec(TargetId::thm11, 50, 250, CampaignMode::cross);
    s.params.k = 2;
    auto rc = run(s);
    CHECK(rc.failed.empty());
    CHECK(rc.passed == 0);
    CHECK(rc.not_found == 201);
}

TEST_CASE("prime-power sum census matches the frozen grid") {
    // odd n in [3, 3001], k = 1, relaxed: 1484 witnesses, 16 without
    auto s = make_spec(TargetId::thm14, 3, 3001, CampaignMode::construct);
    s.step = 2;
    s.params.k = 1;
    s.params.variant = Variant::i;
    s.params.relaxed = true;
    auto r = run(s);
    CHECK(r.checked == 1500);
    CHECK(r.passed == 1484);
    CHECK(r.not_applicable == 16);
    CHECK(r.not_found == 0);
    CHECK(r.failed.empty());

    // variant ii over 4 | n: 374 with witnesses, 376 without
    s = make_spec(TargetId::thm14, 4, 3000, CampaignMode::construct);
    s.step = 4;
    s.params.variant = Variant::ii;
    r = run(s);
    CHECK(r.checked == 750);
    CHECK(r.passed == 374);
    CHECK(r.not_applicable == 376);
    CHECK(r.failed.empty());

    // oracle mode on a slice: existence is checked independently of the
    // interval construction, so it can only do better
    s = make_spec(TargetId::thm14, 3, 301, CampaignMode::oracle);
    s.step = 2;
    s.params.variant = Variant::i;
    auto ro = run(s);
    CHECK(ro.failed.empty());
    CHECK(ro.passed >= 140);
}

TEST_CASE("digest is invariant across worker counts") {
    auto s = make_spec(TargetId::cor12, 1, 5000, CampaignMode::construct);
    s.workers = 1;
    auto r1 = run(s);
    s.workers = 4;
    auto r4 = run(s);
    s.workers = 8;
    auto r8 = run(s);
    CHECK(r1.digest == r4.digest);
    CHECK(r4.digest == r8.digest);
    CHECK(r1.passed == r8.passed);
    CHECK(r1.digest != 0);
    CHECK(r1.digest_hex().size() == 16);

    // step sweeps shard the same way
    s = make_spec(TargetId::thm12iii, 1, 2999, CampaignMode::construct);
    s.step = 2;
    s.params.lambda = 9;
    s.workers = 1;
    auto a = run(s);
    s.workers = 8;
    auto b = run(s);
    CHECK(a.digest == b.digest);
    CHECK(a.failed.empty());
}

TEST_CASE("witness logs round-trip and are verified on re-entry") {
    const std::string path = "/tmp/prsq_test_witness.log";
    std::remove(path.c_str());

    auto s = make_spec(TargetId::cor12, 1, 300, CampaignMode::construct);
    s.witness_log = path;
    auto r = run(s);
    CHECK(r.passed == 300);

    auto chk = verify_witness_log(path);
    CHECK(chk.ok);
    CHECK(chk.witnesses == 300);
    CHECK(chk.spec_digest == s.digest());

    // re-running the same spec verifies the log on load and rewrites it
    auto r2 = run(s);
    CHECK(r2.digest == r.digest);
    CHECK(verify_witness_log(path).ok);

    // a different spec may claim the path; the header then names it
    auto s2 = make_spec(TargetId::cor12, 5, 120, CampaignMode::construct);
    s2.witness_log = path;
    (void)run(s2);
    auto chk2 = verify_witness_log(path);
    CHECK(chk2.ok);
    CHECK(chk2.witnesses == 116);
    CHECK(chk2.spec_digest == s2.digest());
    std::remove(path.c_str());
}

TEST_CASE("tampered witness logs are rejected") {
    const std::string path = "/tmp/prsq_test_tamper.log";
    std::remove(path.c_str());
    auto s = make_spec(TargetId::cor12, 1, 40, CampaignMode::construct);
    s.witness_log = path;
    (void)run(s);

    // flip one n: the witness no longer answers that instance
    std::string body = slurp(path);
    auto pos = body.find("\"n\":7");
    REQUIRE(pos != std::string::npos);
    body.replace(pos, 5, "\"n\":8");
    {
        std::ofstream out(path, std::ios::trunc);
        out << body;
    }
    auto chk = verify_witness_log(path);
    CHECK(!chk.ok);
    CHECK(chk.error.find("does not match") != std::string::npos);

    // the engine refuses to resume over a corrupt log of the same sweep
    CHECK_THROWS_AS((void)run(s), io_error);

    // unparseable trailing line
    (void)std::remove(path.c_str());
    (void)run(s);
    {
        std::ofstream out(path, std::ios::app);
        out << "{broken\n";
    }
    CHECK(!verify_witness_log(path).ok);

    // a file that is not a log at all is never clobbered
    {
        std::ofstream out(path, std::ios::trunc);
        out << "precious data\n";
    }
    CHECK_THROWS_AS((void)run(s), io_error);
    CHECK(slurp(path) == "precious data\n");
    std::remove(path.c_str());
}

TEST_CASE("gate_check stays in lockstep with the decomposers") {
    CampaignParams p;

    // thm1.2i / thm1.2ii / thm1.2iii / thm1.3 across parameter grids
    for (i64 lambda : {1, 3, 5, 9}) {
        p.lambda = lambda;
        for (u64 n = 1; n <= 120; ++n) {
            {
                auto g = gate_check(TargetId::thm12i, p, n);
                bool domain = false;
                try {
                    (void)decompose_thm12i(n, lambda);
                } catch (const domain_error&) {
                    domain = true;
                }
                CHECK(g.has_value() == domain);
            }
            {
                auto g = gate_check(TargetId::thm12iii, p, n);
                bool domain = false;
                try {
                    (void)decompose_thm12iii(n, lambda);
                } catch (const domain_error&) {
                    domain = true;
                }
                CHECK(g.has_value() == domain);
            }
        }
    }

    for (i64 lambda : {1, -3, 2, 5}) {
        p.lambda = lambda;
        for (int delta : {0, 1}) {
            p.delta = delta;
            for (u64 n = 1; n <= 120; ++n) {
                auto g = gate_check(TargetId::thm13, p, n);
                int what = 0;  // 0 ok, 1 domain, 2 not_found
                try {
                    (void)decompose_thm13(n, lambda, delta);
                } catch (const domain_error&) {
                    what = 1;
                } catch (const not_found_error&) {
                    what = 2;
                }
                if (!g) {
                    CHECK(what == 0);
                } else if (g->second) {
                    CHECK(what == 2);
                } else {
                    CHECK(what == 1);
                }
            }
        }
    }

    // thm1.4 strict gates
    p = CampaignParams{};
    p.relaxed = false;
    for (auto v : {Variant::i, Variant::ii, Variant::iii}) {
        p.variant = v;
        for (u64 n = 1; n <= 200; ++n) {
            auto g = gate_check(TargetId::thm14, p, n);
            bool domain = false;
            try {
                (void)decompose_thm14(n, 1, v, false);
            } catch (const domain_error&) {
                domain = true;
            } catch (const internal_error&) {
                // gate passed, construction failed: not a gate question
            }
            CHECK(g.has_value() == domain);
        }
    }

    // small-n floors
    p = CampaignParams{};
    CHECK(gate_check(TargetId::cor13i, p, 1).has_value());
    CHECK(!gate_check(TargetId::cor13i, p, 2).has_value());
    CHECK(gate_check(TargetId::cor13ii, p, 2).has_value());
    CHECK(!gate_check(TargetId::conj135, p, 0).has_value());
}

TEST_CASE("1-3-5 sweep") {
    auto r = check_135(1000);
    CHECK(r.checked == 1001);  // 0 through 1000
    CHECK(r.passed == 1001);
    CHECK(r.failed.empty());
    CHECK(r.not_applicable == 0);

    CHECK_THROWS_AS((void)check_135(10'000'001), resource_limit_error);

    // least witnesses, via the log
    const std::string path = "/tmp/prsq_test_135.log";
    std::remove(path.c_str());
    (void)check_135(50, 2, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    std::array<std::array<i64, 4>, 3> expect{{{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}}};
    for (int n = 0; n <= 2; ++n) {
        REQUIRE(std::getline(in, line));
        auto j = json::parse(line);
        CHECK(j["n"] == (u64)n);
        CHECK(witness_from_json(j["witness"]).tuple == expect[(size_t)n]);
    }
    // n = 10 -> (0,3,0,1), linear value 9
    for (int skip = 3; skip < 10; ++skip) REQUIRE(std::getline(in, line));
    REQUIRE(std::getline(in, line));
    auto j = json::parse(line);
    CHECK(j["n"] == 10);
    auto w = witness_from_json(j["witness"]);
    CHECK(w.tuple == std::array<i64, 4>{0, 3, 0, 1});
    CHECK(w.linear_value() == 9);
    CHECK(w.certificate.base == 3);
    std::remove(path.c_str());
}

TEST_CASE("conjecture exploration") {
    CHECK_THROWS_AS((void)explore_conjecture({0, 0, 0, 0}, FormId::f1112, 10), config_error);
    CHECK_THROWS_AS((void)explore_conjecture({1, 1, 1, 1}, FormId::f1112, 10'001),
                    resource_limit_error);

    // achievable first-coordinate values: x such that n - x^2 is a sum of
    // three squares
    auto rep = explore_conjecture({1, 0, 0, 0}, FormId::f1111, 8);
    REQUIRE(rep.values.size() == 9);
    CHECK(rep.values[0] == std::vector<i64>{0});
    CHECK(rep.values[1] == std::vector<i64>{0, 1});
    CHECK(rep.values[4] == std::vector<i64>{0, 1, 2});
    CHECK(rep.values[7] == std::vector<i64>{1, 2});  // 7 itself needs four squares
    CHECK(rep.uncoverable.empty());

    // three-square form: the 4^a(8b+7) classes have no representation at all
    rep = explore_conjecture({1, 1, 1, 0}, FormId::f3sq, 30);
    CHECK(rep.uncoverable == std::vector<u64>{7, 15, 23, 28});

    // growth curve bookkeeping
    rep = explore_conjecture({1, 3, 5, 0}, FormId::f1111, 200);
    CHECK(rep.uncoverable.empty());
    REQUIRE(!rep.hitting_set.empty());
    u64 cum = 0;
    u64 prev_gain = ~0ULL;
    for (const auto& step : rep.hitting_set) {
        CHECK(step.newly_covered >= 1);
        CHECK(step.newly_covered <= prev_gain);  // greedy gains never grow
        prev_gain = step.newly_covered;
        cum += step.newly_covered;
        CHECK(step.cumulative == cum);
    }
    CHECK(cum == 201);

    // the first greedy pick is achievable on a sizable slice of [0, 200]
    CHECK(rep.hitting_set.front().newly_covered >= 50);
}

TEST_CASE("worker default picks up the environment override") {
    setenv("PRSQ_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    setenv("PRSQ_WORKERS", "junk", 1);
    CHECK(default_workers() >= 1);
    unsetenv("PRSQ_WORKERS");
    CHECK(default_workers() >= 1);
}
