#pragma once
// Constrained four-variable decompositions n = Q(s,t,u,v) with a prescribed
// linear value L(s,t,u,v) = b, the explicit size bounds that make them
// unconditional, and the prime/even-power interval construction on top.
#include "witness.hpp"

namespace prsq {

// nonnegative rational with an overflow flag (overflow reads as +infinity,
// which keeps every "n > bound" gate conservative)
struct Rat128 {
    u128 num = 0;
    u64 den = 1;
    bool overflow = false;

    bool less_than(u64 n) const;  // *this < n, strictly; false when overflowed
    double approx() const;
};

struct BoundTriple {
    unsigned k = 1;
    u64 j = 1;
    u64 l = 1;
    Rat128 a_val;  // (2kl)^{2k} (j+1)^{2k-1}, exact
    Rat128 b_val;  // certified upper bound of (1/j) exp(2 k^{3/2} j^{1/4k} (j+1)^{(2k-1)/4k})
    Rat128 c_val;  // max(a_val, b_val, 3275^{2k}/j)

    bool gate_a(u64 n) const { return a_val.less_than(n); }
    bool gate_c(u64 n) const { return c_val.less_than(n); }
};

BoundTriple bounds(unsigned k, u64 j, u64 l);

// the open interval ((-1+sqrt(j(n-1)))^{1/k}, ((j+1)n)^{1/2k}); membership is
// decided by the exact integer tests (m^k+1)^2 > j(n-1) and m^{2k} < (j+1)n
IntervalSpec interval_I(u64 n, u64 j, unsigned k);

// four-square searches with a fixed linear value; first solution in
// descending (s, t) order with s >= t.  DomainError when the stated side
// conditions fail; under valid side conditions a solution always exists.
std::array<i64, 4> cauchy_1111(i64 a, i64 b);  // s^2+t^2+ u^2+ v^2 = a, s+t+ u+ v = b
std::array<i64, 4> cauchy_1122(i64 a, i64 b);  // s^2+t^2+2u^2+2v^2 = a, s+t+2u+2v = b
std::array<i64, 4> cauchy_1113(i64 a, i64 b);  // s^2+t^2+ u^2+3v^2 = a, s+t+ u+3v = b

enum class Variant { i, ii, iii };

struct Thm14Outcome {
    std::optional<Witness> witness;
    u64 m = 0;                         // interval element used (0 when absent)
    bool had_candidates = false;       // some m passed the parity/primality filter
    bool side_conditions_met = false;  // some candidate met the lemma side conditions
    std::string diagnostic;            // set when witness is absent
};

// x+y+z+w = m^k (variant i), x+y+2z+2w = m^k (ii), x+y+z+3w = m^k (iii),
// with m prime for odd n and m even for even n, m from the interval above
// (j = 3 for variant i, else 5).  Strict mode enforces the per-parity size
// gates and treats exhaustion as an internal invariant violation; relaxed
// mode attempts the construction for any n and reports failure diagnostics.
Thm14Outcome decompose_thm14(u64 n, unsigned k, Variant variant, bool relaxed = true);

}  // namespace prsq
