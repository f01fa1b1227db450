#pragma once
// Exact integer arithmetic: integer roots, deterministic 64-bit primality,
// intervals with irrational endpoints decided by integer comparisons, CRT.
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prsq {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;
using u128 = unsigned __int128;
using i128 = __int128;

// ============================================================================
// error taxonomy, shared by every module and mapped 1:1 onto C-API status
// codes and CLI exit codes
// ============================================================================
enum class errc {
    ok = 0,
    usage,
    domain,
    not_found,
    resource_limit,
    internal,
    config,
    io,
};

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

struct domain_error : error {
    explicit domain_error(const std::string& w) : error(errc::domain, w) {}
};
struct not_found_error : error {
    explicit not_found_error(const std::string& w) : error(errc::not_found, w) {}
};
struct resource_limit_error : error {
    explicit resource_limit_error(const std::string& w) : error(errc::resource_limit, w) {}
};
struct internal_error : error {
    explicit internal_error(const std::string& w) : error(errc::internal, w) {}
};
struct config_error : error {
    explicit config_error(const std::string& w) : error(errc::config, w) {}
};
struct io_error : error {
    explicit io_error(const std::string& w) : error(errc::io, w) {}
};

std::string u128_to_string(u128 v);

// ============================================================================
// integer roots
// ============================================================================
u64 isqrt(u64 n);                 // floor(sqrt(n))
u64 ikroot(u64 n, unsigned k);    // floor(n^(1/k)), k >= 1
bool is_square(i64 n);            // n == t^2 for some integer t (false for n < 0)
// floor k-th root of a u128 (needed for interval realization at large radicands)
u128 ikroot128(u128 n, unsigned k);

// ============================================================================
// primality: deterministic Miller-Rabin, valid for every 64-bit input
// ============================================================================
bool is_prime(u64 n);

// ============================================================================
// exact interval endpoints
//
// Every interval this project needs has endpoints of one of three shapes:
//   rational      num/den
//   root          (num/den)^(1/k)              with num, den >= 0
//   shift_root    (shift + sqrt(rad))^(1/k)    with rad >= 0, shift+sqrt(rad) >= 0
// Comparing an integer m against any of these reduces to integer comparisons
// of powers, so membership decisions are exact -- no floating point.
// ============================================================================
struct Bound {
    enum class Kind { rational, root, shift_root };
    Kind kind = Kind::rational;
    i64 num = 0;        // rational: num/den
    u64 den = 1;
    u128 rnum = 0;      // root: (rnum/den)^(1/k)
    unsigned k = 1;
    i64 shift = 0;      // shift_root: (shift + sqrt(rad))^(1/k)
    u128 rad = 0;

    static Bound rational(i64 num, u64 den = 1);
    static Bound integer(i64 v) { return rational(v, 1); }
    static Bound kth_root(u128 num, u64 den, unsigned k);
    static Bound shifted_sqrt_root(i64 shift, u128 rad, unsigned k);

    // sign of (m - value): -1 below, 0 equal, +1 above
    int compare(i64 m) const;
    // floor of the bound's value (exact)
    i64 floor_value() const;
    double approx() const;  // display only, never used for decisions
};

struct IntervalSpec {
    Bound lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    bool contains(i64 m) const;
    std::optional<i64> first_integer() const;  // least integer member
    std::optional<i64> last_integer() const;   // greatest integer member
};

// ascending list of primes inside the interval
std::vector<u64> primes_in(const IntervalSpec& iv);
// early-exit variant for wide intervals
std::optional<u64> first_prime_in(const IntervalSpec& iv);

// ============================================================================
// prime-containing interval [x, x + x/(2 ln^2 x)], valid for x > 3275.
// The width is rounded *down* to a rational so the returned interval is a
// subset of the true one.  `width_certified` is true when the integer
// realization provably equals the true interval's realization (the rounding
// uncertainty window contains no integer), i.e. the guarantee transfers.
// ============================================================================
struct DusartInterval {
    IntervalSpec interval;
    bool width_certified = false;
};
DusartInterval dusart_interval(i64 x_num, u64 x_den = 1);  // domain_error if x <= 3275

// ============================================================================
// 2-modulus CRT: unique x in [0, m1*m2) with x = r1 (mod m1), x = r2 (mod m2).
// domain_error when gcd(m1, m2) != 1; resource_limit when m1*m2 overflows u64.
// ============================================================================
u64 crt2(u64 r1, u64 m1, u64 r2, u64 m2);

}  // namespace prsq
