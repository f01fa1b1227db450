#pragma once
// One decomposition algorithm per representation statement: pick a prime in
// an interval, represent an auxiliary value by a constrained ternary form,
// recover (x,y,z,w) through an exact identity, and post-validate everything.
#include "oracle.hpp"

namespace prsq {

// direct-computation fallback thresholds (the ranges where the statements
// were settled by exhaustive search rather than by the interval construction)
constexpr u64 kCor12Fallback = 3275ULL * 3275ULL / 4;  // 2681406
constexpr u64 kCor13Fallback = 3275ULL * 3275ULL;      // 10725625

struct Thm11Attempt {
    u64 p;
    std::string reason;
};
// success is not guaranteed (the underlying bound is ineffective), so the
// outcome separates "no witness found" from hard errors and carries the
// primes that were tried along with why each failed
struct Thm11Outcome {
    std::optional<Witness> witness;
    std::vector<Thm11Attempt> attempts;
};

// n = x^2+y^2+z^2+2w^2 with x + 2d*y = p^k, p prime in
// [(4d^2 n)^{1/2k}, ((1+4d^2) n)^{1/2k}], p > q = 4d^2+1 (q must be prime)
Thm11Outcome decompose_thm11(u64 n, u64 d, unsigned k);

// total decomposers; the Accel tables only speed up the fallback range
Witness decompose_cor12(u64 n, const Accel* accel = nullptr);   // x+2y prime, n >= 1
Witness decompose_cor13i(u64 n, const Accel* accel = nullptr);  // x+y prime, n >= 2
Witness decompose_cor13ii(u64 n, const Accel* accel = nullptr); // x+w prime, n >= 3

// constrained ternary representations feeding the lambda decomposers:
// lemma_a: a^2+10b^2+16c^2 = 80n-5l^2 with a=-l (8), b=l (4), c+2a=0 (5), a+2b=9l (16)
// lemma_b: a^2+ 8b^2+44c^2 = 88n-11l^2 with a+5b=0 (11), c odd, a=l (8)
std::array<i64, 3> lemma_a(u64 n, i64 lambda);  // requires 16n >= lambda^2, lambda odd > 0
std::array<i64, 3> lemma_b(u64 n, i64 lambda);  // requires  8n >= lambda^2, lambda odd > 0

Witness decompose_thm12i(u64 n, i64 lambda);    // x+y+2z+2w = lambda   (8n  >= l^2)
Witness decompose_thm12ii(u64 n, i64 lambda);   // x+2y+3z+2w = lambda  (16n >= l^2)
Witness decompose_thm12iii(u64 n, i64 lambda);  // n^2 = x^2+..+w^2, x+2y+3z = lambda
Witness decompose_thm13(u64 n, i64 lambda, int delta);  // 2n+delta, x+y+z+w = lambda

}  // namespace prsq
