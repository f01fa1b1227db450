#pragma once
// Brute-force ground truth: complete enumeration of form representations and
// independent least-witness search under a linear constraint.  Everything the
// constructive algorithms claim is re-checkable through this module alone.
#include <vector>

#include "witness.hpp"

namespace prsq {

// enumeration is gated at this value (Theta(n^{3/2}) work at arity 4)
constexpr u64 kOracleLimit = 100'000'000;

// ============================================================================
// Accel: optional precomputed tables that speed up million-scale sweeps
// without changing any result.  `tail` marks values representable by the
// form's trailing coefficient pair (c_hi * z^2 + c_lo * w^2); `prime` is a
// sieve bitmap for the small linear values a constraint can take.
// ============================================================================
struct Accel {
    u64 limit = 0;  // tail bitmap covers 0..limit
    i64 c1 = 1, c2 = 1;
    std::vector<std::uint8_t> tail;
    u64 plimit = 0;  // prime bitmap covers 0..plimit
    std::vector<std::uint8_t> prime;

    static Accel build(FormId f, u64 n_max);

    bool tail_ok(u64 v) const { return tail[v] != 0; }
    bool prime_at(i64 v) const {
        if (v < 2) return false;
        if ((u64)v <= plimit) return prime[v] != 0;
        return is_prime((u64)v);
    }
};

// complete sorted list of tuples with form value n.  signed_tuples=false:
// nonnegative tuples in lexicographic order; true: every sign combination,
// ordered by absolute-value pattern first, then by the signed tuple.
std::vector<std::array<i64, 4>> enumerate(FormId f, u64 n, bool signed_tuples);

// same, for an arbitrary positive-definite diagonal form (arity 3 or 4)
std::vector<std::array<i64, 4>> enumerate_diagonal(const QuadraticForm& f, u64 n,
                                                   bool signed_tuples);

// least witness (in the enumeration order above) whose linear value lies in
// the constraint's target set, or nullopt when no tuple qualifies
std::optional<Witness> exists_constrained(u64 n, FormId f, const LinearConstraint& lc,
                                          bool signed_tuples, const Accel* accel = nullptr);

}  // namespace prsq
