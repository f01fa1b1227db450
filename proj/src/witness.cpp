#include "witness.hpp"

namespace prsq {

QuadraticForm form_of(FormId id) {
    switch (id) {
        case FormId::f1111: return named_forms::q_1111();
        case FormId::f1112: return named_forms::q_1112();
        case FormId::f1122: return named_forms::q_1122();
        case FormId::f1113: return named_forms::q_1113();
        case FormId::f3sq: return QuadraticForm::diagonal3(1, 1, 1);
    }
    throw internal_error("form_of: bad FormId");
}

const char* form_tag(FormId id) {
    switch (id) {
        case FormId::f1111: return "1111";
        case FormId::f1112: return "1112";
        case FormId::f1122: return "1122";
        case FormId::f1113: return "1113";
        case FormId::f3sq: return "3sq";
    }
    return "?";
}

std::optional<FormId> form_from_tag(const std::string& tag) {
    if (tag == "1111") return FormId::f1111;
    if (tag == "1112") return FormId::f1112;
    if (tag == "1122") return FormId::f1122;
    if (tag == "1113") return FormId::f1113;
    if (tag == "3sq") return FormId::f3sq;
    return std::nullopt;
}

namespace {
// v == r^k exactly, with r recovered; nullopt if v is not a perfect k-th power
std::optional<u64> exact_kth_root(i64 v, unsigned k) {
    if (v < 0) return std::nullopt;
    u64 r = ikroot((u64)v, k);
    u128 p = 1;
    for (unsigned i = 0; i < k; ++i) p *= r;
    if (p != (u128)(u64)v) return std::nullopt;
    return r;
}
}  // namespace

bool TargetSet::contains(i64 v) const {
    switch (kind) {
        case TargetKind::prime: return v >= 2 && is_prime((u64)v);
        case TargetKind::prime_power: {
            auto r = exact_kth_root(v, k);
            return r && is_prime(*r);
        }
        case TargetKind::even_kth_power: {
            auto r = exact_kth_root(v, k);
            return r && *r >= 2 && *r % 2 == 0;
        }
        case TargetKind::fixed: return v == lambda;
        case TargetKind::square: return v >= 0 && is_square(v);
    }
    return false;
}

std::string TargetSet::describe() const {
    switch (kind) {
        case TargetKind::prime: return "prime";
        case TargetKind::prime_power: return "prime^" + std::to_string(k);
        case TargetKind::even_kth_power: return "even^" + std::to_string(k);
        case TargetKind::fixed: return "= " + std::to_string(lambda);
        case TargetKind::square: return "square";
    }
    return "?";
}

i64 LinearConstraint::value_at(const std::array<i64, 4>& t) const {
    i128 v = 0;
    for (int i = 0; i < 4; ++i) v += (i128)coeffs[i] * t[i];
    return (i64)v;
}

Certificate certify(const TargetSet& t, i64 v) {
    switch (t.kind) {
        case TargetKind::prime: return Certificate::prime_power((u64)v, 1);
        case TargetKind::prime_power: return Certificate::prime_power(ikroot((u64)v, t.k), t.k);
        case TargetKind::even_kth_power: return Certificate::even_power(ikroot((u64)v, t.k), t.k);
        case TargetKind::fixed: return Certificate::fixed(t.lambda);
        case TargetKind::square: return Certificate::square((i64)isqrt((u64)v));
    }
    return Certificate::none();
}

void Witness::validate() const {
    const QuadraticForm f = form_of(form);
    for (int i = f.arity; i < 4; ++i)
        if (tuple[i] != 0) throw internal_error("witness: unused coordinate nonzero");
    if (!signed_coords)
        for (int i = 0; i < f.arity; ++i)
            if (tuple[i] < 0) throw internal_error("witness: negative coordinate");
    if ((u64)f.evaluate(tuple) != value) throw internal_error("witness: form value mismatch");
    const i64 lv = linear_value();
    if (!constraint.target.contains(lv))
        throw internal_error("witness: linear value outside target set");
    // certificate consistency
    switch (certificate.kind) {
        case Certificate::Kind::none: break;
        case Certificate::Kind::prime_power: {
            if (!is_prime((u64)certificate.base))
                throw internal_error("witness: certificate base not prime");
            i128 p = 1;
            for (unsigned i = 0; i < certificate.exponent; ++i) p *= certificate.base;
            if (p != lv) throw internal_error("witness: certificate power mismatch");
            break;
        }
        case Certificate::Kind::even_power: {
            if (certificate.base < 2 || certificate.base % 2)
                throw internal_error("witness: certificate base not even");
            i128 p = 1;
            for (unsigned i = 0; i < certificate.exponent; ++i) p *= certificate.base;
            if (p != lv) throw internal_error("witness: certificate power mismatch");
            break;
        }
        case Certificate::Kind::fixed:
            if (lv != certificate.base) throw internal_error("witness: fixed value mismatch");
            break;
        case Certificate::Kind::square:
            if ((i128)certificate.base * certificate.base != lv)
                throw internal_error("witness: square root mismatch");
            break;
    }
}

}  // namespace prsq
