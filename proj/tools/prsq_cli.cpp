// Command-line front end.  Links only the C API; all structured output is
// line-delimited JSON (schema 1) unless --human asks for tables.
#include <CLI11.hpp>
#include <json.hpp>
#include <prsq.h>

#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

// exit-code partition; documented in the README and --help epilogue
constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitNotFound = 66;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;
constexpr int kExitResource = 75;

int exit_code(prsq_status s) {
    switch (s) {
        case PRSQ_OK: return kExitOk;
        case PRSQ_E_USAGE: return kExitUsage;
        case PRSQ_E_DOMAIN: return kExitDomain;
        case PRSQ_E_NOT_FOUND: return kExitNotFound;
        case PRSQ_E_RESOURCE_LIMIT: return kExitResource;
        case PRSQ_E_INTERNAL: return kExitInternal;
        case PRSQ_E_CONFIG: return kExitUsage;
        case PRSQ_E_IO: return kExitIo;
    }
    return kExitInternal;
}

const char* class_name(prsq_status s) {
    switch (s) {
        case PRSQ_OK: return "ok";
        case PRSQ_E_USAGE: return "usage";
        case PRSQ_E_DOMAIN: return "domain";
        case PRSQ_E_NOT_FOUND: return "not_found";
        case PRSQ_E_RESOURCE_LIMIT: return "resource_limit";
        case PRSQ_E_INTERNAL: return "internal";
        case PRSQ_E_CONFIG: return "config";
        case PRSQ_E_IO: return "io";
    }
    return "internal";
}

bool g_human = false;

std::string take_string(char* s);
void print_record(const json& r);

int report_failure(prsq_status s, const std::string& context) {
    const std::string msg = prsq_last_error();
    if (g_human) {
        std::fprintf(stderr, "%s: %s (%s)\n", context.c_str(), msg.c_str(), class_name(s));
    } else {
        json j;
        j["kind"] = s == PRSQ_E_NOT_FOUND ? "not_found" : "error";
        j["class"] = class_name(s);
        j["context"] = context;
        j["message"] = msg;
        print_record(j);
    }
    return exit_code(s);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    prsq_string_free(s);
    return out;
}

// every record this tool prints carries the output-format version up front
json with_schema(const json& r) {
    json out;
    out["schema"] = 1;
    for (const auto& [k, v] : r.items()) out[k] = v;
    return out;
}

void print_record(const json& r) { std::printf("%s\n", with_schema(r).dump().c_str()); }

// squares rendering for --human: value = sum of diag[i] * t[i]^2
void print_witness_human(const json& w, const std::string& target, uint64_t n) {
    static const std::vector<std::pair<std::string, std::vector<int>>> diags = {
        {"1111", {1, 1, 1, 1}}, {"1112", {1, 1, 1, 2}}, {"1122", {1, 1, 2, 2}},
        {"1113", {1, 1, 1, 3}}, {"3sq", {1, 1, 1}},
    };
    const std::string form = w["form"];
    const auto& tuple = w["tuple"];
    std::string sum;
    for (const auto& [tag, d] : diags) {
        if (tag != form) continue;
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) sum += " + ";
            if (d[i] != 1) sum += std::to_string(d[i]) + "*";
            const std::string t = tuple[i].dump();
            sum += (t[0] == '-' ? "(" + t + ")" : t) + "^2";
        }
    }
    std::printf("%s  n=%" PRIu64 ":  %s = %s\n", target.c_str(), n,
                w["value"].dump().c_str(), sum.c_str());
    std::string lin;
    const auto& coeffs = w["coeffs"];
    for (size_t i = 0; i < 4; ++i) {
        const long long c = coeffs[i].get<long long>();
        if (c == 0) continue;
        if (!lin.empty()) lin += " + ";
        if (c != 1) lin += std::to_string(c) + "*";
        lin += "xyzw"[i];
    }
    const auto& cert = w["certificate"];
    std::printf("  constraint: %s = %s  [%s, base %s, exponent %s]\n", lin.c_str(),
                w["linear"].dump().c_str(), cert["kind"].get<std::string>().c_str(),
                cert["base"].dump().c_str(), cert["exponent"].dump().c_str());
}

void print_campaign_human(const json& r) {
    std::printf("%s [%s]  checked %s  passed %s  not-applicable %s (not-found %s)  failed %s\n",
                r["target"].get<std::string>().c_str(),
                r["mode"].get<std::string>().c_str(), r["checked"].dump().c_str(),
                r["passed"].dump().c_str(), r["not_applicable"].dump().c_str(),
                r["not_found"].dump().c_str(), std::to_string(r["failed"].size()).c_str());
    const double passed = r["passed"].get<double>();
    const double nf = r["not_found"].get<double>();
    if (passed + nf > 0)
        std::printf("  success rate over attempted: %.2f%%\n", 100.0 * passed / (passed + nf));
    for (const auto& f : r["failed"])
        std::printf("  FAIL n=%s: %s\n", f["n"].dump().c_str(),
                    f["reason"].get<std::string>().c_str());
    std::printf("  digest %s  (%s ms)\n", r["digest"].get<std::string>().c_str(),
                r["duration_ms"].dump().c_str());
}

struct VerifyArgs {
    std::string target = "cor1.2";
    uint64_t from = 1, to = 1, step = 1;
    std::string mode = "construct";
    unsigned workers = 0;
    std::string log;
    bool allow_ineffective = false;
    uint64_t d = 1;
    unsigned k = 1;
    int64_t lambda = 1;
    int delta = 0;
    std::string variant = "i";
    bool strict = false;
};

json spec_json(const VerifyArgs& a) {
    json spec;
    spec["target"] = a.target;
    spec["params"] = {{"d", a.d},         {"k", a.k},
                      {"lambda", a.lambda}, {"delta", a.delta},
                      {"variant", a.variant}, {"relaxed", !a.strict}};
    spec["n_lo"] = a.from;
    spec["n_hi"] = a.to;
    spec["step"] = a.step;
    spec["mode"] = a.mode;
    spec["workers"] = a.workers ? a.workers : prsq_default_workers();
    spec["witness_log"] = a.log;
    return spec;
}

int campaign_exit(const prsq_campaign_counts& c, bool allow_ineffective) {
    if (c.failed > 0) return kExitInternal;
    if (c.not_found > 0 && !allow_ineffective) return kExitNotFound;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted sums of squares: decompositions, sweeps, bounds"};
    app.set_config("--config", "", "read options from an INI/TOML file "
                                   "(command-line flags take precedence)");
    app.add_flag("--human", g_human, "tables instead of JSON records");
    app.fallthrough();  // allow --human/--config after the subcommand name
    app.require_subcommand(1);
    app.footer("exit codes: 0 ok, 64 usage/config, 65 domain, 66 not-found, "
               "70 check-failure, 74 io, 75 resource-limit");

    static const std::vector<std::string> kRepresentTargets = {
        "thm1.1", "cor1.2", "cor1.3i", "cor1.3ii", "thm1.2i",
        "thm1.2ii", "thm1.2iii", "thm1.3", "thm1.4"};
    static const std::vector<std::string> kCampaignTargets = {
        "thm1.1", "cor1.2", "cor1.3i", "cor1.3ii", "thm1.2i", "thm1.2ii",
        "thm1.2iii", "thm1.3", "thm1.4", "conj135"};
    static const std::vector<std::string> kForms = {"1111", "1112", "1122", "1113", "3sq"};

    // ------------------------------------------------------------ represent
    auto* rep = app.add_subcommand("represent", "decompose one n with its side constraint");
    VerifyArgs ra;
    uint64_t rn = 0;
    rep->add_option("--target", ra.target, "statement to instantiate")
        ->required()
        ->check(CLI::IsMember(kRepresentTargets));
    rep->add_option("--n", rn, "the integer to decompose")->required();
    rep->add_option("--d", ra.d, "parameter d (thm1.1)");
    rep->add_option("--k", ra.k, "exponent k (thm1.1, thm1.4)")->check(CLI::Range(1u, 64u));
    rep->add_option("--lambda", ra.lambda, "prescribed linear value");
    rep->add_option("--delta", ra.delta, "0 or 1 (thm1.3)")->check(CLI::Range(0, 1));
    rep->add_option("--variant", ra.variant, "thm1.4 variant")
        ->check(CLI::IsMember({"i", "ii", "iii"}));
    rep->add_flag("--strict", ra.strict, "thm1.4: enforce the size gates");

    // --------------------------------------------------------------- verify
    auto* ver = app.add_subcommand("verify", "sweep an n-range and report failures");
    VerifyArgs va;
    ver->add_option("--target", va.target, "statement to sweep")
        ->required()
        ->check(CLI::IsMember(kCampaignTargets));
    ver->add_option("--from", va.from, "first n")->required();
    ver->add_option("--to", va.to, "last n")->required();
    ver->add_option("--step", va.step, "n stride")->check(CLI::PositiveNumber);
    ver->add_option("--mode", va.mode, "construct | oracle | cross")
        ->check(CLI::IsMember({"construct", "oracle", "cross"}));
    ver->add_option("--workers", va.workers, "worker threads (default: PRSQ_WORKERS or cores)");
    ver->add_option("--log", va.log, "witness log path");
    ver->add_flag("--allow-ineffective", va.allow_ineffective,
                  "exit 0 even when some n have no witness (not_found)");
    ver->add_option("--d", va.d, "parameter d (thm1.1)");
    ver->add_option("--k", va.k, "exponent k")->check(CLI::Range(1u, 64u));
    ver->add_option("--lambda", va.lambda, "prescribed linear value");
    ver->add_option("--delta", va.delta, "0 or 1 (thm1.3)")->check(CLI::Range(0, 1));
    ver->add_option("--variant", va.variant, "thm1.4 variant")
        ->check(CLI::IsMember({"i", "ii", "iii"}));
    ver->add_flag("--strict", va.strict, "thm1.4: enforce the size gates");

    // ----------------------------------------------------------- conjecture
    auto* con = app.add_subcommand("conjecture", "restricted-representation explorations");
    std::string cid = "135";
    uint64_t cmax = 1000;
    unsigned cworkers = 0;
    std::string clog;
    std::vector<int64_t> ccoeffs;
    std::string cform = "1112";
    con->add_option("--id", cid, "named sweep (135: x+3y+5z square on four squares)")
        ->check(CLI::IsMember({"135"}));
    con->add_option("--n-max", cmax, "sweep upper end")->required();
    con->add_option("--workers", cworkers, "worker threads");
    con->add_option("--log", clog, "witness log path");
    con->add_option("--coeffs", ccoeffs,
                    "explore achievable a*x+b*y+c*z+d*w values instead of the named sweep")
        ->delimiter(',')
        ->expected(4);
    con->add_option("--form", cform, "form for --coeffs")->check(CLI::IsMember(kForms));

    // --------------------------------------------------------------- bounds
    auto* bnd = app.add_subcommand("bounds", "explicit thresholds for the k,j,l construction");
    unsigned bk = 1;
    uint64_t bj = 1, bl = 1;
    bnd->add_option("--k", bk, "exponent")->required()->check(CLI::Range(1u, 64u));
    bnd->add_option("--j", bj, "interval density parameter")->required()
        ->check(CLI::PositiveNumber);
    bnd->add_option("--l", bl, "interval length parameter")->required()
        ->check(CLI::PositiveNumber);

    // ----------------------------------------------------------- verify-log
    auto* vlog = app.add_subcommand("verify-log", "re-validate every witness in a log file");
    std::string vpath;
    vlog->add_option("path", vpath, "witness log")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (rep->parsed()) {
        prsq_params p;
        prsq_params_init(&p);
        p.d = ra.d;
        p.k = ra.k;
        p.lambda = ra.lambda;
        p.delta = ra.delta;
        p.variant = ra.variant.c_str();
        p.relaxed = ra.strict ? 0 : 1;
        prsq_witness* w = nullptr;
        const prsq_status s = prsq_represent(ra.target.c_str(), rn, &p, &w);
        if (s != PRSQ_OK) return report_failure(s, "represent " + ra.target);
        char* js = nullptr;
        prsq_witness_json(w, &js);
        const std::string wj = take_string(js);
        if (g_human) {
            print_witness_human(json::parse(wj), ra.target, rn);
        } else {
            json out;
            out["kind"] = "witness";
            out["target"] = ra.target;
            out["n"] = rn;
            out["witness"] = json::parse(wj);
            print_record(out);
        }
        prsq_witness_free(w);
        return kExitOk;
    }

    if (ver->parsed()) {
        prsq_campaign_counts counts{};
        char* rj = nullptr;
        const prsq_status s = prsq_verify(spec_json(va).dump().c_str(), &counts, &rj);
        if (s != PRSQ_OK) return report_failure(s, "verify " + va.target);
        const json r = json::parse(take_string(rj));
        if (g_human)
            print_campaign_human(r);
        else
            print_record(r);
        return campaign_exit(counts, va.allow_ineffective);
    }

    if (con->parsed()) {
        if (!ccoeffs.empty()) {
            char* rj = nullptr;
            const prsq_status s =
                prsq_conjecture_explore(ccoeffs.data(), cform.c_str(), cmax, &rj);
            if (s != PRSQ_OK) return report_failure(s, "conjecture exploration");
            const json r = json::parse(take_string(rj));
            if (g_human) {
                std::printf("form %s, coeffs (%lld,%lld,%lld,%lld), n <= %s\n",
                            cform.c_str(), (long long)ccoeffs[0], (long long)ccoeffs[1],
                            (long long)ccoeffs[2], (long long)ccoeffs[3],
                            r["n_max"].dump().c_str());
                std::printf("  uncovered-by-any-value n: %s\n", r["uncoverable"].dump().c_str());
                std::printf("  greedy hitting set (value, newly covered, cumulative):\n");
                for (const auto& st : r["hitting_set"])
                    std::printf("    %6s  %6s  %6s\n", st["value"].dump().c_str(),
                                st["newly_covered"].dump().c_str(),
                                st["cumulative"].dump().c_str());
            } else {
                print_record(r);
            }
            return kExitOk;
        }
        prsq_campaign_counts counts{};
        char* rj = nullptr;
        const prsq_status s = prsq_check135(cmax, cworkers,
                                            clog.empty() ? nullptr : clog.c_str(), &counts,
                                            &rj);
        if (s != PRSQ_OK) return report_failure(s, "conjecture sweep");
        const json r = json::parse(take_string(rj));
        if (g_human)
            print_campaign_human(r);
        else
            print_record(r);
        return campaign_exit(counts, /*allow_ineffective=*/false);
    }

    if (bnd->parsed()) {
        char* bj_out = nullptr;
        const prsq_status s = prsq_bounds(bk, bj, bl, &bj_out);
        if (s != PRSQ_OK) return report_failure(s, "bounds");
        const json r = json::parse(take_string(bj_out));
        if (g_human) {
            auto rat = [](const json& x) {
                std::string t = x["num"].get<std::string>();
                if (x["den"].get<uint64_t>() != 1) t += "/" + x["den"].dump();
                if (x["overflow"].get<bool>()) t += " (overflowed: treated as +inf)";
                return t;
            };
            std::printf("k=%s j=%s l=%s\n  a = %s\n  b = %s (certified upper rounding)\n"
                        "  c = %s\n",
                        r["k"].dump().c_str(), r["j"].dump().c_str(), r["l"].dump().c_str(),
                        rat(r["a"]).c_str(), rat(r["b"]).c_str(), rat(r["c"]).c_str());
        } else {
            print_record(r);
        }
        return kExitOk;
    }

    if (vlog->parsed()) {
        uint64_t nwit = 0;
        const prsq_status s = prsq_log_verify(vpath.c_str(), &nwit);
        if (s != PRSQ_OK) return report_failure(s, "verify-log " + vpath);
        if (g_human) {
            std::printf("ok: %" PRIu64 " witnesses verified\n", nwit);
        } else {
            json out;
            out["kind"] = "log_check";
            out["ok"] = true;
            out["witnesses"] = nwit;
            print_record(out);
        }
        return kExitOk;
    }

    return kExitUsage;  // unreachable: require_subcommand guards
}
