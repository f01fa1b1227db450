#include "arith.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace prsq {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

// ============================================================================
// integer roots
// ============================================================================
u64 isqrt(u64 n) {
    if (n == 0) return 0;
    // start from the hardware sqrt and correct; exact for all u64
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (u128)r * r > n) --r;
    while ((u128)(r + 1) * (r + 1) <= n) ++r;
    return r;
}

static u128 pow_sat(u128 base, unsigned e) {
    // saturating power: result clamped at u128 max
    constexpr u128 MAX = ~(u128)0;
    u128 r = 1;
    while (e) {
        if (e & 1) {
            if (base != 0 && r > MAX / base) return MAX;
            r *= base;
        }
        e >>= 1;
        if (e) {
            if (base > (u128)1 << 64) return (r == 0) ? 0 : MAX;  // base^2 overflows
            base *= base;
        }
    }
    return r;
}

u128 ikroot128(u128 n, unsigned k) {
    if (k == 0) throw domain_error("ikroot: k must be >= 1");
    if (k == 1 || n <= 1) return n;
    if (k == 2 && n <= std::numeric_limits<u64>::max()) return isqrt(static_cast<u64>(n));
    // binary search with saturating powers (overflow-safe for any u128 input)
    unsigned bits = 128 / k + 2;
    if (bits > 127) bits = 127;
    u128 lo = 1, hi = (u128)1 << bits;
    while (lo < hi) {
        u128 mid = lo + (hi - lo + 1) / 2;
        if (pow_sat(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

u64 ikroot(u64 n, unsigned k) {
    if (k == 0) throw domain_error("ikroot: k must be >= 1");
    if (k == 1) return n;
    if (k == 2) return isqrt(n);
    return static_cast<u64>(ikroot128(n, k));
}

bool is_square(i64 n) {
    if (n < 0) return false;
    u64 r = isqrt(static_cast<u64>(n));
    return (i64)(r * r) == n;
}

// ============================================================================
// deterministic Miller-Rabin for u64
// ============================================================================
static u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

static u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // this witness set decides primality for every n < 3.3e24, hence all u64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ============================================================================
// Bound
// ============================================================================
Bound Bound::rational(i64 num, u64 den) {
    if (den == 0) throw domain_error("Bound: zero denominator");
    Bound b;
    b.kind = Kind::rational;
    b.num = num;
    b.den = den;
    return b;
}

Bound Bound::kth_root(u128 num, u64 den, unsigned k) {
    if (den == 0 || k == 0) throw domain_error("Bound: bad root parameters");
    Bound b;
    b.kind = Kind::root;
    b.rnum = num;
    b.den = den;
    b.k = k;
    return b;
}

Bound Bound::shifted_sqrt_root(i64 shift, u128 rad, unsigned k) {
    if (k == 0) throw domain_error("Bound: bad root parameters");
    Bound b;
    b.kind = Kind::shift_root;
    b.shift = shift;
    b.rad = rad;
    b.k = k;
    return b;
}

int Bound::compare(i64 m) const {
    switch (kind) {
        case Kind::rational: {
            i128 lhs = (i128)m * (i128)den;
            if (lhs < num) return -1;
            if (lhs > num) return 1;
            return 0;
        }
        case Kind::root: {
            // value = (rnum/den)^(1/k) >= 0
            if (m < 0) return -1;
            u128 mk = pow_sat((u128)(u64)m, k);
            constexpr u128 MAX = ~(u128)0;
            if (mk == MAX) return 1;  // saturated: m^k certainly above
            u128 lhs;
            if (den != 1 && mk > MAX / den) return 1;
            lhs = mk * den;
            if (lhs < rnum) return -1;
            if (lhs > rnum) return 1;
            return 0;
        }
        case Kind::shift_root: {
            // value = (shift + sqrt(rad))^(1/k) >= 0 by construction
            if (m < 0) return -1;
            u128 mk = pow_sat((u128)(u64)m, k);
            // compare mk against shift + sqrt(rad):  d = mk - shift vs sqrt(rad)
            if (shift >= 0) {
                if (mk < (u128)(u64)shift) return -1;
                u128 d = mk - (u128)(u64)shift;
                constexpr u128 MAX = ~(u128)0;
                if (d != 0 && d > MAX / d) return 1;  // d^2 overflows: above
                u128 d2 = d * d;
                if (d2 < rad) return -1;
                if (d2 > rad) return 1;
                return 0;
            }
            u128 d = mk + (u128)(u64)(-shift);  // mk - shift with shift < 0
            constexpr u128 MAX = ~(u128)0;
            if (d != 0 && d > MAX / d) return 1;
            u128 d2 = d * d;
            if (d2 < rad) return -1;
            if (d2 > rad) return 1;
            return 0;
        }
    }
    return 0;
}

i64 Bound::floor_value() const {
    switch (kind) {
        case Kind::rational: {
            i64 q = num / (i64)den;
            if (num % (i64)den != 0 && num < 0) --q;  // floor for negatives
            return q;
        }
        case Kind::root: {
            u128 f = ikroot128(rnum / den, k);
            // correct for the rational radicand: f is a first guess
            i64 v = (i64)(u64)f;
            while (compare(v + 1) <= 0) ++v;
            while (v > 0 && compare(v) > 0) --v;
            return v;
        }
        case Kind::shift_root: {
            u128 s = ikroot128(rad, 2);
            i128 inner = (i128)shift + (i128)(u64)s;
            if (inner < 0) inner = 0;
            i64 v = (i64)(u64)ikroot128((u128)inner, k);
            while (compare(v + 1) <= 0) ++v;
            while (v > 0 && compare(v) > 0) --v;
            return v;
        }
    }
    return 0;
}

double Bound::approx() const {
    switch (kind) {
        case Kind::rational:
            return (double)num / (double)den;
        case Kind::root:
            return std::pow((double)rnum / (double)den, 1.0 / k);
        case Kind::shift_root:
            return std::pow((double)shift + std::sqrt((double)rad), 1.0 / k);
    }
    return 0;
}

// ============================================================================
// IntervalSpec
// ============================================================================
bool IntervalSpec::contains(i64 m) const {
    int cl = lo.compare(m);
    if (lo_open ? cl <= 0 : cl < 0) return false;
    int ch = hi.compare(m);
    if (hi_open ? ch >= 0 : ch > 0) return false;
    return true;
}

std::optional<i64> IntervalSpec::first_integer() const {
    i64 c = lo.floor_value();  // at or just below the lower endpoint
    for (int step = 0; step < 4; ++step, ++c) {
        if (contains(c)) return c;
    }
    // interval contains no integer at/above lo within the adjustment window;
    // it is empty iff hi < c as well
    return std::nullopt;
}

std::optional<i64> IntervalSpec::last_integer() const {
    i64 c = hi.floor_value() + 1;  // at or just above the upper endpoint
    for (int step = 0; step < 4; ++step, --c) {
        if (contains(c)) return c;
    }
    return std::nullopt;
}

std::vector<u64> primes_in(const IntervalSpec& iv) {
    std::vector<u64> out;
    auto lo = iv.first_integer();
    auto hi = iv.last_integer();
    if (!lo || !hi || *lo > *hi) return out;
    for (i64 m = std::max<i64>(*lo, 2); m <= *hi; ++m) {
        if (is_prime((u64)m)) out.push_back((u64)m);
    }
    return out;
}

std::optional<u64> first_prime_in(const IntervalSpec& iv) {
    auto lo = iv.first_integer();
    auto hi = iv.last_integer();
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    for (i64 m = std::max<i64>(*lo, 2); m <= *hi; ++m) {
        if (is_prime((u64)m)) return (u64)m;
    }
    return std::nullopt;
}

// ============================================================================
// dusart_interval
// ============================================================================
DusartInterval dusart_interval(i64 x_num, u64 x_den) {
    if (x_den == 0) throw domain_error("dusart_interval: zero denominator");
    if (x_den > (1u << 20)) throw resource_limit_error("dusart_interval: denominator too large");
    if (x_num > (i64(1) << 40)) throw resource_limit_error("dusart_interval: x too large");
    // exact check x > 3275
    if ((i128)x_num <= (i128)3275 * (i128)x_den)
        throw domain_error("dusart_interval: requires x > 3275");

    // Directed rounding via long double with an explicit safety margin.
    // logl/expl are correctly rounded to ~1e-19 relative error; the 1e-13
    // margin dominates that by six orders of magnitude, so lo <= true <= hi.
    const long double margin = 1e-13L;
    long double x = (long double)x_num / (long double)x_den;
    long double L = std::log(x);
    long double ln_lo = L * (1.0L - margin);
    long double ln_hi = L * (1.0L + margin);
    long double w_lo = x / (2.0L * ln_hi * ln_hi) * (1.0L - margin);
    long double w_hi = x / (2.0L * ln_lo * ln_lo) * (1.0L + margin);

    // hi endpoint as an exact rational with denominator x_den * 2^20
    const u64 S = 1u << 20;
    i64 wl_scaled = (i64)std::floor(w_lo * (long double)(x_den * S));
    i64 wh_scaled = (i64)std::ceil(w_hi * (long double)(x_den * S));
    i64 hi_num = x_num * (i64)S + wl_scaled;
    u64 hi_den = x_den * S;

    DusartInterval out;
    out.interval.lo = Bound::rational(x_num, x_den);
    out.interval.hi = Bound::rational(hi_num, hi_den);
    out.interval.lo_open = false;
    out.interval.hi_open = false;

    // certified iff no integer falls in the rounding uncertainty window
    i64 floor_down = Bound::rational(hi_num, hi_den).floor_value();
    i64 floor_up = Bound::rational(x_num * (i64)S + wh_scaled, hi_den).floor_value();
    out.width_certified = (floor_down == floor_up);
    return out;
}

// ============================================================================
// crt2
// ============================================================================
static i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

u64 crt2(u64 r1, u64 m1, u64 r2, u64 m2) {
    if (m1 == 0 || m2 == 0) throw domain_error("crt2: moduli must be positive");
    if (std::gcd(m1, m2) != 1) throw domain_error("crt2: moduli not coprime");
    if ((u128)m1 * m2 > std::numeric_limits<u64>::max())
        throw resource_limit_error("crt2: modulus product overflows");
    if (m1 == 1) return r2 % m2;
    if (m2 == 1) return r1 % m1;
    // both moduli >= 2, so each fits comfortably in i64 given the product bound
    r1 %= m1;
    r2 %= m2;
    i64 x, y;
    egcd((i64)m1, (i64)m2, x, y);  // x = m1^{-1} mod m2 (up to sign)
    i128 xm = (i128)x % (i128)m2;
    if (xm < 0) xm += m2;
    // candidate = r1 + m1 * ((r2 - r1) * inv(m1) mod m2)
    i128 diff = ((i128)r2 - (i128)r1) % (i128)m2;
    if (diff < 0) diff += m2;
    u128 t = (u128)diff * (u128)xm % m2;
    u128 res = (u128)r1 + (u128)m1 * t;
    return (u64)(res % ((u128)m1 * m2));
}

}  // namespace prsq
