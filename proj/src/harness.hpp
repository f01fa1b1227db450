#pragma once
// Verification campaigns: sweep an n-range for one target claim, in
// constructive, oracle (brute-force), or cross (compare both) mode, with
// deterministic sharding, a witness digest, and optional witness logging.
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cauchy.hpp"
#include "constructive.hpp"
#include "oracle.hpp"

namespace prsq {

// ============================================================================
// campaign targets and parameters
// ============================================================================
enum class TargetId {
    thm11,
    cor12,
    cor13i,
    cor13ii,
    thm12i,
    thm12ii,
    thm12iii,
    thm13,
    thm14,
    conj135,
};

const char* target_name(TargetId id);  // "thm1.1", "cor1.2", ..., "conj135"
std::optional<TargetId> target_from_name(const std::string& name);

enum class CampaignMode { construct, oracle, cross };
const char* mode_name(CampaignMode m);
std::optional<CampaignMode> mode_from_name(const std::string& name);

struct CampaignParams {
    u64 d = 1;                    // thm1.1
    unsigned k = 1;               // thm1.1, thm1.4
    i64 lambda = 1;               // thm1.2*, thm1.3
    int delta = 0;                // thm1.3
    Variant variant = Variant::i; // thm1.4
    bool relaxed = true;          // thm1.4

    bool operator==(const CampaignParams&) const = default;
};

struct CampaignSpec {
    TargetId target = TargetId::cor12;
    CampaignParams params;
    u64 n_lo = 1;
    u64 n_hi = 1;
    u64 step = 1;  // n = n_lo, n_lo+step, ..., <= n_hi
    CampaignMode mode = CampaignMode::construct;
    unsigned workers = 1;
    std::string witness_log;  // empty: no log file

    // stable identity of the sweep (target, params, range, mode; not workers
    // or the log path) — used in the log header and for resume verification
    u64 digest() const;

    bool operator==(const CampaignSpec&) const = default;
};

// ============================================================================
// results
// ============================================================================
struct CampaignFailure {
    u64 n = 0;
    std::string reason;
};

struct CampaignResult {
    u64 checked = 0;
    u64 passed = 0;
    u64 not_applicable = 0;  // precondition-gated n (includes not_found)
    u64 not_found = 0;       // no witness and no claim: thm1.1 ineffective
                             // range, thm1.3 parity-obstructed classes
    std::vector<CampaignFailure> failed;
    u64 duration_ms = 0;
    u64 digest = 0;  // folded over the ordered witness stream
    std::string digest_hex() const;
};

// runs the sweep; throws config_error for invalid specs, io_error on log
// trouble.  Failures never abort the campaign.
CampaignResult run(const CampaignSpec& spec);

// applicability of a single n under a target's arithmetic gates, without
// running any construction: nullopt = applicable, otherwise the reason the
// n is skipped (second element: true if it counts as not_found rather than
// plain not_applicable)
std::optional<std::pair<std::string, bool>> gate_check(TargetId target,
                                                       const CampaignParams& params, u64 n);

// ============================================================================
// conjecture support
// ============================================================================
// sweep of the quaternary-squares claim with x+3y+5z a perfect square
CampaignResult check_135(u64 n_max, unsigned workers = 1, const std::string& witness_log = "");

struct ConjectureReport {
    std::array<i64, 4> coeffs{};
    FormId form = FormId::f1112;
    u64 n_max = 0;
    // values[n]: ascending achievable nonnegative linear values at n
    std::vector<std::vector<i64>> values;
    // greedy hitting set over achievable nonnegative linear values: each step
    // picks
    // the value covering the most uncovered n (ties: smallest value)
    struct Step {
        i64 value = 0;
        u64 newly_covered = 0;
        u64 cumulative = 0;
    };
    std::vector<Step> hitting_set;
    std::vector<u64> uncoverable;  // n with no representation at all
};

ConjectureReport explore_conjecture(const std::array<i64, 4>& coeffs, FormId form, u64 n_max);

// ============================================================================
// witness logs
// ============================================================================
struct LogCheck {
    u64 spec_digest = 0;
    u64 witnesses = 0;
    bool ok = false;
    std::string error;  // first problem found, empty when ok
};

// parses and re-validates every line of a witness log
LogCheck verify_witness_log(const std::string& path);

// worker-count default: PRSQ_WORKERS env var, else hardware concurrency
unsigned default_workers();

}  // namespace prsq
