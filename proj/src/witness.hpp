#pragma once
// Witness vocabulary shared by the oracle, the constructive decomposers and
// the verification harness: quaternary form identifiers, linear-constraint
// target sets, certificates, and the self-validating Witness record.
#include <array>
#include <optional>
#include <string>

#include "forms.hpp"

namespace prsq {

// ============================================================================
// the five recurring forms
// ============================================================================
enum class FormId { f1111, f1112, f1122, f1113, f3sq };

QuadraticForm form_of(FormId id);
const char* form_tag(FormId id);  // "1111", "1112", "1122", "1113", "3sq"
std::optional<FormId> form_from_tag(const std::string& tag);

// ============================================================================
// target set of a linear constraint: the value ax+by+cz+dw must land in it
// ============================================================================
enum class TargetKind { prime, prime_power, even_kth_power, fixed, square };

struct TargetSet {
    TargetKind kind = TargetKind::prime;
    unsigned k = 1;   // exponent for prime_power / even_kth_power
    i64 lambda = 0;   // required value for fixed

    static TargetSet prime() { return {TargetKind::prime, 1, 0}; }
    static TargetSet prime_power(unsigned k) { return {TargetKind::prime_power, k, 0}; }
    static TargetSet even_kth_power(unsigned k) { return {TargetKind::even_kth_power, k, 0}; }
    static TargetSet fixed(i64 lambda) { return {TargetKind::fixed, 1, lambda}; }
    static TargetSet square() { return {TargetKind::square, 1, 0}; }

    bool contains(i64 v) const;
    std::string describe() const;
    bool operator==(const TargetSet&) const = default;
};

struct LinearConstraint {
    std::array<i64, 4> coeffs{0, 0, 0, 0};
    TargetSet target;

    i64 value_at(const std::array<i64, 4>& t) const;
    bool operator==(const LinearConstraint&) const = default;
};

// ============================================================================
// certificate: the concrete witness for target-set membership
// ============================================================================
struct Certificate {
    enum class Kind { none, prime_power, even_power, fixed, square };
    Kind kind = Kind::none;
    i64 base = 0;           // p, the even root, lambda, or the square root
    unsigned exponent = 1;

    static Certificate none() { return {}; }
    static Certificate prime_power(u64 p, unsigned k) {
        return {Kind::prime_power, (i64)p, k};
    }
    static Certificate even_power(u64 b, unsigned k) { return {Kind::even_power, (i64)b, k}; }
    static Certificate fixed(i64 lambda) { return {Kind::fixed, lambda, 1}; }
    static Certificate square(i64 root) { return {Kind::square, root, 2}; }

    bool operator==(const Certificate&) const = default;
};

// builds the certificate that proves `v` lies in `t` (assumes t.contains(v))
Certificate certify(const TargetSet& t, i64 v);

// ============================================================================
// Witness: tuple + constraint + certificate, all cross-checked by validate()
// ============================================================================
struct Witness {
    u64 value = 0;  // the represented integer (the form's value at `tuple`)
    FormId form = FormId::f1112;
    std::array<i64, 4> tuple{0, 0, 0, 0};
    bool signed_coords = false;  // false: coordinates are asserted nonnegative
    LinearConstraint constraint;
    Certificate certificate;

    i64 linear_value() const { return constraint.value_at(tuple); }
    // throws internal_error naming the first violated invariant
    void validate() const;
    bool operator==(const Witness&) const = default;
};

}  // namespace prsq
