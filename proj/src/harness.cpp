#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "records.hpp"

namespace prsq {

// ============================================================================
// names
// ============================================================================
namespace {

struct TargetEntry {
    TargetId id;
    const char* name;
};
constexpr TargetEntry kTargets[] = {
    {TargetId::thm11, "thm1.1"},     {TargetId::cor12, "cor1.2"},
    {TargetId::cor13i, "cor1.3i"},   {TargetId::cor13ii, "cor1.3ii"},
    {TargetId::thm12i, "thm1.2i"},   {TargetId::thm12ii, "thm1.2ii"},
    {TargetId::thm12iii, "thm1.2iii"}, {TargetId::thm13, "thm1.3"},
    {TargetId::thm14, "thm1.4"},     {TargetId::conj135, "conj135"},
};

i64 mod_norm(i128 v, i64 m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return (i64)r;
}

}  // namespace

const char* target_name(TargetId id) {
    for (const auto& e : kTargets)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<TargetId> target_from_name(const std::string& name) {
    for (const auto& e : kTargets)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const char* mode_name(CampaignMode m) {
    switch (m) {
        case CampaignMode::construct: return "construct";
        case CampaignMode::oracle: return "oracle";
        case CampaignMode::cross: return "cross";
    }
    return "?";
}

std::optional<CampaignMode> mode_from_name(const std::string& name) {
    if (name == "construct") return CampaignMode::construct;
    if (name == "oracle") return CampaignMode::oracle;
    if (name == "cross") return CampaignMode::cross;
    return std::nullopt;
}

// ============================================================================
// digests (FNV-1a 64)
// ============================================================================
namespace {

constexpr u64 kFnvOffset = 1469598103934665603ULL;
constexpr u64 kFnvPrime = 1099511628211ULL;

u64 fnv1a(const void* data, size_t len, u64 h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

u64 fnv1a_str(const std::string& s, u64 h = kFnvOffset) { return fnv1a(s.data(), s.size(), h); }

std::string hex16(u64 v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

}  // namespace

u64 CampaignSpec::digest() const {
    // workers and the log path are execution details, not sweep identity
    std::string s = std::string(target_name(target)) + "|d=" + std::to_string(params.d) +
                    "|k=" + std::to_string(params.k) + "|l=" + std::to_string(params.lambda) +
                    "|e=" + std::to_string(params.delta) +
                    "|v=" + std::to_string((int)params.variant) +
                    "|r=" + std::to_string((int)params.relaxed) + "|" + std::to_string(n_lo) +
                    ".." + std::to_string(n_hi) + "/" + std::to_string(step) + "|" +
                    mode_name(mode);
    return fnv1a_str(s);
}

std::string CampaignResult::digest_hex() const { return hex16(digest); }

// ============================================================================
// spec validation: parameter conditions that would invalidate every n are
// configuration mistakes, not per-n gate outcomes
// ============================================================================
namespace {

void validate_spec(const CampaignSpec& s) {
    const auto& p = s.params;
    if (s.n_lo > s.n_hi) throw config_error("campaign: n_lo exceeds n_hi");
    if (s.step == 0) throw config_error("campaign: step must be positive");
    if (s.workers == 0) throw config_error("campaign: workers must be positive");
    switch (s.target) {
        case TargetId::thm11: {
            if (p.d < 1 || p.d > 30000) throw config_error("thm1.1: d out of range");
            if (p.k < 1) throw config_error("thm1.1: k must be >= 1");
            const u64 q = 4 * p.d * p.d + 1;
            if (!is_prime(q)) throw config_error("thm1.1: 4d^2+1 must be prime");
            break;
        }
        case TargetId::thm12i:
        case TargetId::thm12ii:
            if (p.lambda < 1 || p.lambda % 2 == 0)
                throw config_error("campaign: lambda must be a positive odd integer");
            break;
        case TargetId::thm12iii:
            if (p.lambda < 1 || p.lambda % 2 == 0)
                throw config_error("campaign: lambda must be a positive odd integer");
            if (p.lambda % 7 == 0) throw config_error("campaign: lambda must not be divisible by 7");
            break;
        case TargetId::thm13:
            if (p.lambda % 7 == 0) throw config_error("campaign: lambda must not be divisible by 7");
            if (p.delta != 0 && p.delta != 1) throw config_error("campaign: delta must be 0 or 1");
            break;
        case TargetId::thm14:
            if (p.k < 1) throw config_error("thm1.4: k must be >= 1");
            break;
        default:
            break;
    }
}

}  // namespace

// ============================================================================
// per-n applicability gates (mirrors of the decomposers' own domain checks,
// used where the construction is not run; kept in lockstep by property tests)
// ============================================================================
std::optional<std::pair<std::string, bool>> gate_check(TargetId target,
                                                       const CampaignParams& p, u64 n) {
    auto na = [](const char* r) { return std::make_pair(std::string(r), false); };
    switch (target) {
        case TargetId::thm11:
        case TargetId::cor12:
            if (n < 1) return na("requires n >= 1");
            break;
        case TargetId::cor13i:
            if (n < 2) return na("requires n >= 2");
            break;
        case TargetId::cor13ii:
            if (n < 3) return na("requires n >= 3");
            break;
        case TargetId::thm12i:
            if (n < 1) return na("requires n >= 1");
            if ((i128)8 * n < (i128)p.lambda * p.lambda) return na("requires 8n >= lambda^2");
            break;
        case TargetId::thm12ii:
            if (n < 1) return na("requires n >= 1");
            if ((i128)16 * n < (i128)p.lambda * p.lambda) return na("requires 16n >= lambda^2");
            break;
        case TargetId::thm12iii:
            if (n < 1 || n % 2 == 0) return na("requires odd n");
            if ((i128)14 * n * n < (i128)p.lambda * p.lambda)
                return na("requires 14n^2 >= lambda^2");
            break;
        case TargetId::thm13: {
            if (n < 1) return na("requires n >= 1");
            if ((i128)7 * n < (i128)p.lambda * p.lambda) return na("requires 7n >= lambda^2");
            if (mod_norm((i128)n - p.lambda, p.delta ? 4 : 2) == 0)
                return na("requires n != lambda mod 2^(1+delta)");
            if (p.delta == 1) {
                // provably empty classes: residues force the parity of x+y+z+w
                const bool odd_lambda = mod_norm(p.lambda, 2) == 1;
                if (n % 4 == 3 && odd_lambda)
                    return std::make_pair(
                        std::string("no witness exists: 2n+1 = 7 (mod 8) forces an even sum"),
                        true);
                if (n % 4 == 0 && !odd_lambda)
                    return std::make_pair(
                        std::string("no witness exists: 2n+1 = 1 (mod 8) forces an odd sum"),
                        true);
            }
            break;
        }
        case TargetId::thm14: {
            if (n < 1) return na("requires n >= 1");
            if (p.relaxed) break;
            bool ok = false;
            switch (p.variant) {
                case Variant::i:
                    if (n % 2 == 1)
                        ok = bounds(p.k, 3, 4).gate_c(n);
                    else if (n % 4 == 2)
                        ok = bounds(p.k, 3, 2).gate_a(n);
                    else
                        return na("variant i requires n odd or 2 mod 4");
                    break;
                case Variant::ii:
                    if (n % 2 == 1)
                        ok = bounds(p.k, 5, 6).gate_c(n);
                    else if (n % 4 == 0)
                        ok = bounds(p.k, 5, 6).gate_a(n);
                    else
                        return na("variant ii requires n odd or divisible by 4");
                    break;
                case Variant::iii:
                    ok = (n % 2 == 1) ? bounds(p.k, 5, 4).gate_c(n) : bounds(p.k, 5, 4).gate_a(n);
                    break;
            }
            if (!ok) return na("below the variant's size gate");
            break;
        }
        case TargetId::conj135:
            break;  // every n >= 0 is in scope
    }
    return std::nullopt;
}

// ============================================================================
// single-n evaluation
// ============================================================================
namespace {

enum class Bucket { passed, not_applicable, not_found, failed };

struct Outcome {
    Bucket bucket = Bucket::passed;
    std::string reason;
    std::optional<Witness> witness;
};

Outcome ok(Witness w) { return {Bucket::passed, "", std::move(w)}; }

// the question the oracle is asked for one target instance
struct OracleQuery {
    u64 value = 0;
    FormId form = FormId::f1112;
    LinearConstraint lc;
    bool signed_tuples = false;
};

OracleQuery oracle_query(TargetId t, const CampaignParams& p, u64 n) {
    switch (t) {
        case TargetId::thm11:
            return {n, FormId::f1112,
                    {{1, (i64)(2 * p.d), 0, 0}, TargetSet::prime_power(p.k)}, false};
        case TargetId::cor12:
            return {n, FormId::f1112, {{1, 2, 0, 0}, TargetSet::prime()}, false};
        case TargetId::cor13i:
            return {n, FormId::f1112, {{1, 1, 0, 0}, TargetSet::prime()}, false};
        case TargetId::cor13ii:
            return {n, FormId::f1112, {{1, 0, 0, 1}, TargetSet::prime()}, false};
        case TargetId::thm12i:
            return {n, FormId::f1112, {{1, 1, 2, 2}, TargetSet::fixed(p.lambda)}, true};
        case TargetId::thm12ii:
            return {n, FormId::f1112, {{1, 2, 3, 2}, TargetSet::fixed(p.lambda)}, true};
        case TargetId::thm12iii:
            return {n * n, FormId::f1111, {{1, 2, 3, 0}, TargetSet::fixed(p.lambda)}, true};
        case TargetId::thm13:
            return {2 * n + (u64)p.delta, FormId::f1112,
                    {{1, 1, 1, 1}, TargetSet::fixed(p.lambda)}, true};
        case TargetId::thm14: {
            const TargetSet ts =
                (n % 2 == 1) ? TargetSet::prime_power(p.k) : TargetSet::even_kth_power(p.k);
            switch (p.variant) {
                case Variant::i: return {n, FormId::f1111, {{1, 1, 1, 1}, ts}, false};
                case Variant::ii: return {n, FormId::f1122, {{1, 1, 2, 2}, ts}, false};
                case Variant::iii: return {n, FormId::f1113, {{1, 1, 1, 3}, ts}, false};
            }
            break;
        }
        case TargetId::conj135:
            return {n, FormId::f1111, {{1, 3, 5, 0}, TargetSet::square()}, false};
    }
    throw internal_error("campaign: unhandled oracle query");
}

Outcome eval_construct(const CampaignSpec& s, u64 n, const Accel* accel) {
    const auto& p = s.params;
    try {
        switch (s.target) {
            case TargetId::thm11: {
                auto out = decompose_thm11(n, p.d, p.k);
                if (out.witness) return ok(std::move(*out.witness));
                std::string r = "no interval prime yields a witness";
                if (!out.attempts.empty())
                    r += " (last tried " + std::to_string(out.attempts.back().p) + ": " +
                         out.attempts.back().reason + ")";
                return {Bucket::not_found, std::move(r), std::nullopt};
            }
            case TargetId::cor12: return ok(decompose_cor12(n, accel));
            case TargetId::cor13i: return ok(decompose_cor13i(n, accel));
            case TargetId::cor13ii: return ok(decompose_cor13ii(n, accel));
            case TargetId::thm12i: return ok(decompose_thm12i(n, p.lambda));
            case TargetId::thm12ii: return ok(decompose_thm12ii(n, p.lambda));
            case TargetId::thm12iii: return ok(decompose_thm12iii(n, p.lambda));
            case TargetId::thm13: return ok(decompose_thm13(n, p.lambda, p.delta));
            case TargetId::thm14: {
                auto out = decompose_thm14(n, p.k, p.variant, p.relaxed);
                if (out.witness) return ok(std::move(*out.witness));
                return {Bucket::not_applicable, out.diagnostic, std::nullopt};
            }
            case TargetId::conj135: {
                auto q = oracle_query(s.target, p, n);
                auto w = exists_constrained(q.value, q.form, q.lc, q.signed_tuples, accel);
                if (w) return ok(std::move(*w));
                return {Bucket::failed, "no decomposition with a square linear value",
                        std::nullopt};
            }
        }
        throw internal_error("campaign: unhandled target");
    } catch (const domain_error& e) {
        return {Bucket::not_applicable, e.what(), std::nullopt};
    } catch (const not_found_error& e) {
        return {Bucket::not_found, e.what(), std::nullopt};
    } catch (const error& e) {
        return {Bucket::failed, e.what(), std::nullopt};
    } catch (const std::exception& e) {
        return {Bucket::failed, std::string("unexpected: ") + e.what(), std::nullopt};
    }
}

Outcome eval_oracle(const CampaignSpec& s, u64 n, const Accel* accel) {
    auto gate = gate_check(s.target, s.params, n);
    if (gate && !gate->second) return {Bucket::not_applicable, gate->first, std::nullopt};
    // a gate with the not_found flag asserts nonexistence; run the oracle
    // anyway and let it confirm
    try {
        auto q = oracle_query(s.target, s.params, n);
        auto w = exists_constrained(q.value, q.form, q.lc, q.signed_tuples, accel);
        if (w) {
            if (gate)
                return {Bucket::failed,
                        "expected no witness (" + gate->first + ") but the oracle found one",
                        std::nullopt};
            return ok(std::move(*w));
        }
        if (gate) return {Bucket::not_found, gate->first, std::nullopt};
        if (s.target == TargetId::thm11)
            return {Bucket::not_found, "no constrained representation exists", std::nullopt};
        if (s.target == TargetId::thm14 && s.params.relaxed)
            return {Bucket::not_applicable, "no constrained representation exists", std::nullopt};
        return {Bucket::failed, "no constrained representation exists", std::nullopt};
    } catch (const error& e) {
        return {Bucket::failed, e.what(), std::nullopt};
    }
}

Outcome eval_cross(const CampaignSpec& s, u64 n, const Accel* accel) {
    Outcome c = eval_construct(s, n, accel);
    if (c.bucket == Bucket::failed || c.bucket == Bucket::not_applicable) return c;
    if (s.target == TargetId::conj135) return c;  // construction is the oracle already
    std::optional<Witness> ow;
    try {
        auto q = oracle_query(s.target, s.params, n);
        ow = exists_constrained(q.value, q.form, q.lc, q.signed_tuples, accel);
    } catch (const error& e) {
        return {Bucket::failed, std::string("oracle: ") + e.what(), std::nullopt};
    }
    if (c.bucket == Bucket::passed) {
        if (ow) return c;
        return {Bucket::failed, "constructed a witness where the oracle finds none",
                std::nullopt};
    }
    // construction reported no witness
    if (ow && s.target == TargetId::thm13)
        return {Bucket::failed, "scan reported no witness but the oracle finds one",
                std::nullopt};
    return c;  // agreement on absence, or an ineffective-range miss (thm1.1)
}

Outcome evaluate(const CampaignSpec& s, u64 n, const Accel* accel) {
    switch (s.mode) {
        case CampaignMode::construct: return eval_construct(s, n, accel);
        case CampaignMode::oracle: return eval_oracle(s, n, accel);
        case CampaignMode::cross: return eval_cross(s, n, accel);
    }
    throw internal_error("campaign: unhandled mode");
}

bool wants_accel(TargetId t) {
    switch (t) {
        case TargetId::thm11:
        case TargetId::cor12:
        case TargetId::cor13i:
        case TargetId::cor13ii:
        case TargetId::conj135: return true;
        default: return false;
    }
}

}  // namespace

// ============================================================================
// campaign driver
// ============================================================================
CampaignResult run(const CampaignSpec& spec) {
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();

    // verify a pre-existing log for the same sweep before clobbering it
    const bool logging = !spec.witness_log.empty();
    if (logging) {
        std::ifstream probe(spec.witness_log);
        if (probe.good()) {
            auto chk = verify_witness_log(spec.witness_log);
            if (chk.spec_digest == 0 && !chk.ok)
                throw io_error("refusing to overwrite " + spec.witness_log + ": " + chk.error);
            if (chk.spec_digest == spec.digest() && !chk.ok)
                throw io_error("witness log " + spec.witness_log +
                               " fails verification: " + chk.error);
            // a clean log for a different sweep is simply replaced
        }
    }

    const Accel* accel = nullptr;
    std::optional<Accel> accel_store;
    if (wants_accel(spec.target) && spec.n_hi <= 30'000'000) {
        const FormId f = spec.target == TargetId::conj135 ? FormId::f1111 : FormId::f1112;
        accel_store = Accel::build(f, std::max<u64>(spec.n_hi, 1));
        accel = &*accel_store;
    }

    const u64 count = (spec.n_hi - spec.n_lo) / spec.step + 1;
    constexpr u64 kBlock = 1024;
    const u64 nblocks = (count + kBlock - 1) / kBlock;

    struct BlockOut {
        u64 passed = 0, na = 0, nf = 0;
        std::vector<CampaignFailure> failed;
        std::vector<u64> line_hashes;
        std::vector<std::string> lines;  // retained only when logging
    };
    std::vector<BlockOut> blocks(nblocks);
    std::atomic<u64> next{0};

    auto work = [&]() {
        for (;;) {
            const u64 b = next.fetch_add(1);
            if (b >= nblocks) return;
            auto& out = blocks[b];
            const u64 ihi = std::min(count, (b + 1) * kBlock);
            for (u64 i = b * kBlock; i < ihi; ++i) {
                const u64 n = spec.n_lo + i * spec.step;
                Outcome o = evaluate(spec, n, accel);
                switch (o.bucket) {
                    case Bucket::passed: {
                        ++out.passed;
                        std::string line =
                            log_line_json(spec.target, spec.params, n, *o.witness).dump();
                        line.push_back('\n');
                        out.line_hashes.push_back(fnv1a_str(line));
                        if (logging) out.lines.push_back(std::move(line));
                        break;
                    }
                    case Bucket::not_applicable: ++out.na; break;
                    case Bucket::not_found:
                        ++out.na;  // not_found is the claim-free slice of n/a
                        ++out.nf;
                        break;
                    case Bucket::failed: out.failed.push_back({n, std::move(o.reason)}); break;
                }
            }
        }
    };

    const unsigned nw = (unsigned)std::min<u64>(spec.workers, nblocks ? nblocks : 1);
    if (nw <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // single merge point, in n-order
    CampaignResult r;
    r.checked = count;
    std::ofstream log;
    if (logging) {
        log.open(spec.witness_log, std::ios::trunc);
        if (!log) throw io_error("cannot open witness log for writing: " + spec.witness_log);
        log << log_header_json(spec).dump() << '\n';
    }
    u64 h = kFnvOffset;
    for (auto& b : blocks) {
        r.passed += b.passed;
        r.not_applicable += b.na;
        r.not_found += b.nf;
        for (auto& f : b.failed) r.failed.push_back(std::move(f));
        for (u64 lh : b.line_hashes) {
            unsigned char bytes[8];
            for (int i = 0; i < 8; ++i) bytes[i] = (unsigned char)(lh >> (8 * i));
            h = fnv1a(bytes, 8, h);
        }
        if (logging)
            for (const auto& l : b.lines) log << l;
    }
    if (logging) {
        log.flush();
        if (!log) throw io_error("failed writing witness log: " + spec.witness_log);
    }
    r.digest = h;
    r.duration_ms = (u64)std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return r;
}

// ============================================================================
// conjecture sweeps
// ============================================================================
CampaignResult check_135(u64 n_max, unsigned workers, const std::string& witness_log) {
    if (n_max > 10'000'000) throw resource_limit_error("check_135: n_max exceeds the sweep cap");
    CampaignSpec s;
    s.target = TargetId::conj135;
    s.n_lo = 0;
    s.n_hi = n_max;
    s.mode = CampaignMode::construct;
    s.workers = workers ? workers : 1;
    s.witness_log = witness_log;
    return run(s);
}

ConjectureReport explore_conjecture(const std::array<i64, 4>& coeffs, FormId form, u64 n_max) {
    if (coeffs == std::array<i64, 4>{0, 0, 0, 0})
        throw config_error("explore: coefficients must not all be zero");
    if (n_max > 10'000)
        throw resource_limit_error("explore: n_max exceeds the exploration cap");

    ConjectureReport rep;
    rep.coeffs = coeffs;
    rep.form = form;
    rep.n_max = n_max;
    rep.values.resize(n_max + 1);

    std::map<i64, std::vector<u64>> covers;  // value -> ascending n list
    u64 remaining = 0;
    for (u64 n = 0; n <= n_max; ++n) {
        std::set<i64> vs;
        for (const auto& t : enumerate(form, n, true)) {
            const i64 v = coeffs[0] * t[0] + coeffs[1] * t[1] + coeffs[2] * t[2] +
                          coeffs[3] * t[3];
            if (v >= 0) vs.insert(v);
        }
        if (vs.empty()) {
            rep.uncoverable.push_back(n);
            continue;
        }
        rep.values[n].assign(vs.begin(), vs.end());
        for (i64 v : vs) covers[v].push_back(n);
        ++remaining;
    }

    // greedy: pick the value covering the most still-uncovered n, smallest
    // value on ties; covered entries are compacted away as rounds proceed
    std::vector<char> covered(n_max + 1, 0);
    u64 cum = 0;
    while (remaining > 0) {
        i64 best = 0;
        u64 best_gain = 0;
        for (auto& [v, ns] : covers) {
            ns.erase(std::remove_if(ns.begin(), ns.end(), [&](u64 n) { return covered[n] != 0; }),
                     ns.end());
            if (ns.size() > best_gain) {
                best_gain = ns.size();
                best = v;
            }
        }
        if (best_gain == 0) break;  // cannot happen: every remaining n has a value
        for (u64 n : covers[best]) {
            covered[n] = 1;
            --remaining;
        }
        cum += best_gain;
        rep.hitting_set.push_back({best, best_gain, cum});
    }
    return rep;
}

// ============================================================================
// witness-log verification
// ============================================================================
LogCheck verify_witness_log(const std::string& path) {
    LogCheck c;
    std::ifstream in(path);
    if (!in) {
        c.error = "cannot open " + path;
        return c;
    }
    std::string line;
    if (!std::getline(in, line)) {
        c.error = "empty file";
        return c;
    }
    try {
        const json hd = json::parse(line);
        if (hd.value("kind", std::string()) != "log_header") {
            c.error = "first line is not a log header";
            return c;
        }
        if (hd.value("schema", -1) != kSchemaVersion) {
            c.error = "unsupported schema version";
            return c;
        }
        c.spec_digest = std::stoull(hd.at("spec_digest").get<std::string>(), nullptr, 16);
    } catch (const std::exception&) {
        c.error = "malformed log header";
        return c;
    }
    u64 lineno = 1;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            const json j = json::parse(line);
            if (j.value("kind", std::string()) != "witness")
                throw io_error("record kind is not witness");
            const auto tname = j.at("target").get<std::string>();
            const auto t = target_from_name(tname);
            if (!t) throw io_error("unknown target " + tname);
            const CampaignParams p = params_from_json(j.at("params"));
            const u64 n = j.at("n").get<u64>();
            Witness w = witness_from_json(j.at("witness"));
            w.validate();
            // the witness must answer exactly the question (target, params, n)
            const OracleQuery q = oracle_query(*t, p, n);
            if (w.value != q.value || w.form != q.form || !(w.constraint == q.lc) ||
                w.signed_coords != q.signed_tuples)
                throw io_error("witness does not match its target instance");
            ++c.witnesses;
        }
    } catch (const std::exception& e) {
        c.error = "line " + std::to_string(lineno) + ": " + e.what();
        return c;
    }
    c.ok = true;
    return c;
}

unsigned default_workers() {
    if (const char* env = std::getenv("PRSQ_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 512) return (unsigned)v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace prsq
