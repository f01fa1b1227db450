#pragma once
// JSON record schema (schema version 1).  One object per line everywhere:
// witness logs, CLI output, C-API strings.  Field order is fixed by using
// ordered_json so records are byte-stable and diffable.  128-bit numerators
// are emitted as decimal strings; everything else is an exact JSON integer.
#include <json.hpp>

#include "harness.hpp"

namespace prsq {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// variant labels for thm1.4 parameters ("i", "ii", "iii")
const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

// ============================================================================
// witnesses
// ============================================================================
// {"form","tuple","signed","coeffs","target_set":{"kind","k","lambda"},
//  "value","linear","certificate":{"kind","base","exponent"}}
json witness_json(const Witness& w);
Witness witness_from_json(const json& j);  // io_error on malformed input

// one witness-log line: {"kind":"witness","target",...,"n",...,"witness":{...}}
json log_line_json(TargetId target, const CampaignParams& params, u64 n, const Witness& w);
// {"kind":"log_header","schema",...,"spec_digest",...}
json log_header_json(const CampaignSpec& spec);

// ============================================================================
// campaign specs and results
// ============================================================================
json params_json(const CampaignParams& p);
CampaignParams params_from_json(const json& j);

json campaign_spec_json(const CampaignSpec& spec);
CampaignSpec campaign_spec_from_json(const json& j);  // io_error on malformed input

json campaign_result_json(const CampaignSpec& spec, const CampaignResult& r);

// ============================================================================
// bounds and conjecture reports
// ============================================================================
json rat_json(const Rat128& r);  // {"num":"<decimal>","den",...,"overflow","approx"}
json bounds_json(const BoundTriple& b);
json conjecture_report_json(const ConjectureReport& rep);

}  // namespace prsq
