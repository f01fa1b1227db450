// C ABI shim: exceptions become status codes, Witness becomes an opaque
// handle, everything structured crosses as JSON text.
#include "prsq.h"

#include <cstring>
#include <new>
#include <string>

#include "records.hpp"

using namespace prsq;

namespace {

thread_local std::string g_last_error;

prsq_status set_error(errc c, const char* what) {
    g_last_error = what ? what : "";
    switch (c) {
        case errc::ok: return PRSQ_OK;
        case errc::usage: return PRSQ_E_USAGE;
        case errc::domain: return PRSQ_E_DOMAIN;
        case errc::not_found: return PRSQ_E_NOT_FOUND;
        case errc::resource_limit: return PRSQ_E_RESOURCE_LIMIT;
        case errc::internal: return PRSQ_E_INTERNAL;
        case errc::config: return PRSQ_E_CONFIG;
        case errc::io: return PRSQ_E_IO;
    }
    return PRSQ_E_INTERNAL;
}

prsq_status usage(const char* what) { return set_error(errc::usage, what); }

// runs fn inside the exception barrier
template <typename F>
prsq_status guarded(F&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(errc::resource_limit, "out of memory");
    } catch (const std::exception& e) {
        return set_error(errc::internal, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

CampaignParams convert_params(const prsq_params* p) {
    CampaignParams cp;
    if (!p) return cp;
    cp.d = p->d;
    cp.k = p->k;
    cp.lambda = p->lambda;
    cp.delta = p->delta;
    if (p->variant) {
        auto v = variant_from_name(p->variant);
        if (!v) throw config_error(std::string("unknown variant: ") + p->variant);
        cp.variant = *v;
    }
    cp.relaxed = p->relaxed != 0;
    return cp;
}

void fill_counts(prsq_campaign_counts* out, const CampaignResult& r) {
    if (!out) return;
    out->checked = r.checked;
    out->passed = r.passed;
    out->not_applicable = r.not_applicable;
    out->not_found = r.not_found;
    out->failed = r.failed.size();
    out->duration_ms = r.duration_ms;
    out->digest = r.digest;
}

}  // namespace

struct prsq_witness {
    Witness w;
};

extern "C" {

const char* prsq_version(void) { return "1.0.0"; }

const char* prsq_last_error(void) { return g_last_error.c_str(); }

void prsq_string_free(char* s) { delete[] s; }

void prsq_params_init(prsq_params* p) {
    if (!p) return;
    p->d = 1;
    p->k = 1;
    p->lambda = 1;
    p->delta = 0;
    p->variant = "i";
    p->relaxed = 1;
}

prsq_status prsq_represent(const char* target, uint64_t n, const prsq_params* params,
                           prsq_witness** out) {
    if (!target || !out) return usage("represent: target and out must be non-null");
    *out = nullptr;
    return guarded([&]() -> prsq_status {
        const auto t = target_from_name(target);
        if (!t) return usage(("unknown target: " + std::string(target)).c_str());
        const CampaignParams p = convert_params(params);
        std::optional<Witness> w;
        switch (*t) {
            case TargetId::thm11: {
                auto o = decompose_thm11(n, p.d, p.k);
                if (!o.witness) {
                    std::string why = "thm1.1: no interval prime yields a witness";
                    if (!o.attempts.empty())
                        why += " (last tried " + std::to_string(o.attempts.back().p) + ": " +
                               o.attempts.back().reason + ")";
                    throw not_found_error(why);
                }
                w = std::move(o.witness);
                break;
            }
            case TargetId::cor12: w = decompose_cor12(n); break;
            case TargetId::cor13i: w = decompose_cor13i(n); break;
            case TargetId::cor13ii: w = decompose_cor13ii(n); break;
            case TargetId::thm12i: w = decompose_thm12i(n, p.lambda); break;
            case TargetId::thm12ii: w = decompose_thm12ii(n, p.lambda); break;
            case TargetId::thm12iii: w = decompose_thm12iii(n, p.lambda); break;
            case TargetId::thm13: w = decompose_thm13(n, p.lambda, p.delta); break;
            case TargetId::thm14: {
                auto o = decompose_thm14(n, p.k, p.variant, p.relaxed);
                if (!o.witness) throw not_found_error("thm1.4: " + o.diagnostic);
                w = std::move(o.witness);
                break;
            }
            case TargetId::conj135: {
                w = exists_constrained(n, FormId::f1111,
                                       {{1, 3, 5, 0}, TargetSet::square()}, false);
                if (!w) throw not_found_error("conj135: no decomposition found");
                break;
            }
        }
        *out = new prsq_witness{std::move(*w)};
        return PRSQ_OK;
    });
}

void prsq_witness_free(prsq_witness* w) { delete w; }

uint64_t prsq_witness_value(const prsq_witness* w) { return w ? w->w.value : 0; }

const char* prsq_witness_form(const prsq_witness* w) {
    return w ? form_tag(w->w.form) : "";
}

void prsq_witness_tuple(const prsq_witness* w, int64_t out[4]) {
    if (!w || !out) return;
    for (int i = 0; i < 4; ++i) out[i] = w->w.tuple[(size_t)i];
}

int64_t prsq_witness_linear(const prsq_witness* w) { return w ? w->w.linear_value() : 0; }

int prsq_witness_signed(const prsq_witness* w) { return w && w->w.signed_coords ? 1 : 0; }

const char* prsq_witness_certificate_kind(const prsq_witness* w) {
    if (!w) return "";
    switch (w->w.certificate.kind) {
        case Certificate::Kind::none: return "none";
        case Certificate::Kind::prime_power: return "prime_power";
        case Certificate::Kind::even_power: return "even_power";
        case Certificate::Kind::fixed: return "fixed";
        case Certificate::Kind::square: return "square";
    }
    return "";
}

int64_t prsq_witness_certificate_base(const prsq_witness* w) {
    return w ? w->w.certificate.base : 0;
}

unsigned prsq_witness_certificate_exponent(const prsq_witness* w) {
    return w ? w->w.certificate.exponent : 0;
}

prsq_status prsq_witness_json(const prsq_witness* w, char** out) {
    if (!w || !out) return usage("witness_json: w and out must be non-null");
    return guarded([&]() -> prsq_status {
        *out = dup_string(witness_json(w->w).dump());
        return PRSQ_OK;
    });
}

prsq_status prsq_verify(const char* spec_json, prsq_campaign_counts* counts,
                        char** result_json) {
    if (!spec_json) return usage("verify: spec_json must be non-null");
    if (result_json) *result_json = nullptr;
    return guarded([&]() -> prsq_status {
        json j;
        try {
            j = json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
            throw io_error(std::string("spec is not valid JSON: ") + e.what());
        }
        const CampaignSpec spec = campaign_spec_from_json(j);
        const CampaignResult r = run(spec);
        fill_counts(counts, r);
        if (result_json) *result_json = dup_string(campaign_result_json(spec, r).dump());
        return PRSQ_OK;
    });
}

prsq_status prsq_check135(uint64_t n_max, unsigned workers, const char* witness_log,
                          prsq_campaign_counts* counts, char** result_json) {
    if (result_json) *result_json = nullptr;
    return guarded([&]() -> prsq_status {
        const CampaignResult r =
            check_135(n_max, workers ? workers : default_workers(),
                      witness_log ? std::string(witness_log) : std::string());
        fill_counts(counts, r);
        if (result_json) {
            CampaignSpec s;  // mirror of what check_135 ran, for the record
            s.target = TargetId::conj135;
            s.n_lo = 0;
            s.n_hi = n_max;
            s.mode = CampaignMode::construct;
            *result_json = dup_string(campaign_result_json(s, r).dump());
        }
        return PRSQ_OK;
    });
}

prsq_status prsq_conjecture_explore(const int64_t coeffs[4], const char* form, uint64_t n_max,
                                    char** report_json) {
    if (!coeffs || !form || !report_json)
        return usage("conjecture_explore: coeffs, form and report_json must be non-null");
    *report_json = nullptr;
    return guarded([&]() -> prsq_status {
        const auto f = form_from_tag(form);
        if (!f) return usage(("unknown form: " + std::string(form)).c_str());
        const auto rep = explore_conjecture({coeffs[0], coeffs[1], coeffs[2], coeffs[3]}, *f,
                                            n_max);
        *report_json = dup_string(conjecture_report_json(rep).dump());
        return PRSQ_OK;
    });
}

prsq_status prsq_bounds(unsigned k, uint64_t j, uint64_t l, char** out) {
    if (!out) return usage("bounds: out must be non-null");
    *out = nullptr;
    return guarded([&]() -> prsq_status {
        *out = dup_string(bounds_json(bounds(k, j, l)).dump());
        return PRSQ_OK;
    });
}

prsq_status prsq_log_verify(const char* path, uint64_t* witnesses) {
    if (!path) return usage("log_verify: path must be non-null");
    return guarded([&]() -> prsq_status {
        const LogCheck c = verify_witness_log(path);
        if (witnesses) *witnesses = c.witnesses;
        if (!c.ok) throw io_error(c.error);
        return PRSQ_OK;
    });
}

unsigned prsq_default_workers(void) { return default_workers(); }

}  // extern "C"
