#include "records.hpp"

namespace prsq {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::i: return "i";
        case Variant::ii: return "ii";
        case Variant::iii: return "iii";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
    if (s == "i") return Variant::i;
    if (s == "ii") return Variant::ii;
    if (s == "iii") return Variant::iii;
    return std::nullopt;
}

static const char* target_kind_name(TargetKind k) {
    switch (k) {
        case TargetKind::prime: return "prime";
        case TargetKind::prime_power: return "prime_power";
        case TargetKind::even_kth_power: return "even_kth_power";
        case TargetKind::fixed: return "fixed";
        case TargetKind::square: return "square";
    }
    return "?";
}

static TargetKind target_kind_from(const std::string& s) {
    if (s == "prime") return TargetKind::prime;
    if (s == "prime_power") return TargetKind::prime_power;
    if (s == "even_kth_power") return TargetKind::even_kth_power;
    if (s == "fixed") return TargetKind::fixed;
    if (s == "square") return TargetKind::square;
    throw io_error("unknown target-set kind: " + s);
}

static const char* cert_kind_name(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::none: return "none";
        case Certificate::Kind::prime_power: return "prime_power";
        case Certificate::Kind::even_power: return "even_power";
        case Certificate::Kind::fixed: return "fixed";
        case Certificate::Kind::square: return "square";
    }
    return "?";
}

static Certificate::Kind cert_kind_from(const std::string& s) {
    if (s == "none") return Certificate::Kind::none;
    if (s == "prime_power") return Certificate::Kind::prime_power;
    if (s == "even_power") return Certificate::Kind::even_power;
    if (s == "fixed") return Certificate::Kind::fixed;
    if (s == "square") return Certificate::Kind::square;
    throw io_error("unknown certificate kind: " + s);
}

// ============================================================================
// witnesses
// ============================================================================
json witness_json(const Witness& w) {
    json j;
    j["form"] = form_tag(w.form);
    j["tuple"] = w.tuple;
    j["signed"] = w.signed_coords;
    j["coeffs"] = w.constraint.coeffs;
    j["target_set"] = {{"kind", target_kind_name(w.constraint.target.kind)},
                       {"k", w.constraint.target.k},
                       {"lambda", w.constraint.target.lambda}};
    j["value"] = w.value;
    j["linear"] = w.linear_value();
    j["certificate"] = {{"kind", cert_kind_name(w.certificate.kind)},
                        {"base", w.certificate.base},
                        {"exponent", w.certificate.exponent}};
    return j;
}

template <typename T>
static T field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw io_error(std::string("missing field: ") + key);
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad field ") + key + ": " + e.what());
    }
}

Witness witness_from_json(const json& j) {
    Witness w;
    auto tag = field<std::string>(j, "form");
    auto f = form_from_tag(tag);
    if (!f) throw io_error("unknown form tag: " + tag);
    w.form = *f;
    w.tuple = field<std::array<i64, 4>>(j, "tuple");
    w.signed_coords = field<bool>(j, "signed");
    w.constraint.coeffs = field<std::array<i64, 4>>(j, "coeffs");
    auto ts = field<json>(j, "target_set");
    w.constraint.target.kind = target_kind_from(field<std::string>(ts, "kind"));
    w.constraint.target.k = field<unsigned>(ts, "k");
    w.constraint.target.lambda = field<i64>(ts, "lambda");
    w.value = field<u64>(j, "value");
    auto c = field<json>(j, "certificate");
    w.certificate.kind = cert_kind_from(field<std::string>(c, "kind"));
    w.certificate.base = field<i64>(c, "base");
    w.certificate.exponent = field<unsigned>(c, "exponent");
    return w;
}

json log_line_json(TargetId target, const CampaignParams& params, u64 n, const Witness& w) {
    json j;
    j["kind"] = "witness";
    j["target"] = target_name(target);
    j["n"] = n;
    j["params"] = params_json(params);
    j["witness"] = witness_json(w);
    return j;
}

json log_header_json(const CampaignSpec& spec) {
    json j;
    j["kind"] = "log_header";
    j["schema"] = kSchemaVersion;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", (unsigned long long)spec.digest());
    j["spec_digest"] = hex;
    j["target"] = target_name(spec.target);
    j["mode"] = mode_name(spec.mode);
    j["n_lo"] = spec.n_lo;
    j["n_hi"] = spec.n_hi;
    j["step"] = spec.step;
    j["params"] = params_json(spec.params);
    return j;
}

// ============================================================================
// campaign specs and results
// ============================================================================
json params_json(const CampaignParams& p) {
    json j;
    j["d"] = p.d;
    j["k"] = p.k;
    j["lambda"] = p.lambda;
    j["delta"] = p.delta;
    j["variant"] = variant_name(p.variant);
    j["relaxed"] = p.relaxed;
    return j;
}

CampaignParams params_from_json(const json& j) {
    CampaignParams p;
    if (j.contains("d")) p.d = field<u64>(j, "d");
    if (j.contains("k")) p.k = field<unsigned>(j, "k");
    if (j.contains("lambda")) p.lambda = field<i64>(j, "lambda");
    if (j.contains("delta")) p.delta = field<int>(j, "delta");
    if (j.contains("variant")) {
        auto v = variant_from_name(field<std::string>(j, "variant"));
        if (!v) throw io_error("unknown variant: " + field<std::string>(j, "variant"));
        p.variant = *v;
    }
    if (j.contains("relaxed")) p.relaxed = field<bool>(j, "relaxed");
    return p;
}

json campaign_spec_json(const CampaignSpec& spec) {
    json j;
    j["kind"] = "campaign_spec";
    j["target"] = target_name(spec.target);
    j["params"] = params_json(spec.params);
    j["n_lo"] = spec.n_lo;
    j["n_hi"] = spec.n_hi;
    j["step"] = spec.step;
    j["mode"] = mode_name(spec.mode);
    j["workers"] = spec.workers;
    j["witness_log"] = spec.witness_log;
    return j;
}

CampaignSpec campaign_spec_from_json(const json& j) {
    CampaignSpec spec;
    auto tname = field<std::string>(j, "target");
    auto t = target_from_name(tname);
    if (!t) throw io_error("unknown target: " + tname);
    spec.target = *t;
    if (j.contains("params")) spec.params = params_from_json(j["params"]);
    spec.n_lo = field<u64>(j, "n_lo");
    spec.n_hi = field<u64>(j, "n_hi");
    if (j.contains("step")) spec.step = field<u64>(j, "step");
    if (j.contains("mode")) {
        auto mname = field<std::string>(j, "mode");
        auto m = mode_from_name(mname);
        if (!m) throw io_error("unknown mode: " + mname);
        spec.mode = *m;
    }
    if (j.contains("workers")) spec.workers = field<unsigned>(j, "workers");
    if (j.contains("witness_log")) spec.witness_log = field<std::string>(j, "witness_log");
    return spec;
}

json campaign_result_json(const CampaignSpec& spec, const CampaignResult& r) {
    json j;
    j["kind"] = "campaign_result";
    j["target"] = target_name(spec.target);
    j["mode"] = mode_name(spec.mode);
    j["n_lo"] = spec.n_lo;
    j["n_hi"] = spec.n_hi;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    j["not_applicable"] = r.not_applicable;
    j["not_found"] = r.not_found;
    json fails = json::array();
    for (const auto& f : r.failed) fails.push_back({{"n", f.n}, {"reason", f.reason}});
    j["failed"] = std::move(fails);
    j["duration_ms"] = r.duration_ms;
    j["digest"] = r.digest_hex();
    return j;
}

// ============================================================================
// bounds and conjecture reports
// ============================================================================
json rat_json(const Rat128& r) {
    json j;
    j["num"] = u128_to_string(r.num);
    j["den"] = r.den;
    j["overflow"] = r.overflow;
    j["approx"] = r.approx();  // display aid; decisions use the exact fields
    return j;
}

json bounds_json(const BoundTriple& b) {
    json j;
    j["kind"] = "bounds";
    j["k"] = b.k;
    j["j"] = b.j;
    j["l"] = b.l;
    j["a"] = rat_json(b.a_val);
    j["b"] = rat_json(b.b_val);
    j["c"] = rat_json(b.c_val);
    return j;
}

json conjecture_report_json(const ConjectureReport& rep) {
    json j;
    j["kind"] = "conjecture_report";
    j["coeffs"] = rep.coeffs;
    j["form"] = form_tag(rep.form);
    j["n_max"] = rep.n_max;
    j["values"] = rep.values;
    json steps = json::array();
    for (const auto& s : rep.hitting_set)
        steps.push_back(
            {{"value", s.value}, {"newly_covered", s.newly_covered}, {"cumulative", s.cumulative}});
    j["hitting_set"] = std::move(steps);
    j["uncoverable"] = rep.uncoverable;
    return j;
}

}  // namespace prsq
