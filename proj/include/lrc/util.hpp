// Small shared helpers: checked 64-bit arithmetic, integer number theory,
// binomials, and the enumeration budget used by the brute-force analyzers.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checked signed arithmetic.  Inputs at the scales this library targets never
// overflow; if a caller pushes past 64 bits we fail loudly instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("checked_sub: 64-bit overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

// base^exp with overflow checking.
inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    if (a < 0) throw std::invalid_argument("ceil_div: negative dividend unsupported");
    return (a + b - 1) / b;
}

// floor(log_base(v)) for v >= 1, base >= 2.
inline int floor_log(std::int64_t base, std::int64_t v) {
    if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
    if (v < 1) throw std::invalid_argument("floor_log: value must be >= 1");
    int k = 0;
    std::int64_t pw = 1;
    while (pw <= v / base) {
        pw *= base;
        ++k;
    }
    return k;
}

// C(n, k), exact, 0 when k > n or k < 0.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // divides exactly: r is C(n-k+i, i) * i! / i!
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// If q is a prime power p^e returns {p, e}, otherwise throws.
inline std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("prime_power_split: q must be >= 2");
    auto f = prime_factors(q);
    if (f.size() != 1) throw std::invalid_argument("prime_power_split: q is not a prime power");
    std::uint64_t p = f[0];
    std::uint32_t e = 0;
    std::uint64_t t = q;
    while (t > 1) {
        t /= p;
        ++e;
    }
    return {static_cast<std::uint32_t>(p), e};
}

// Cap on the number of codewords / vectors a brute-force enumeration may
// visit.  Overridable through the LRC_MAX_ENUM environment variable.
inline std::int64_t enumeration_budget() {
    static const std::int64_t budget = [] {
        if (const char* s = std::getenv("LRC_MAX_ENUM")) {
            char* end = nullptr;
            long long v = std::strtoll(s, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
            throw std::invalid_argument("LRC_MAX_ENUM must be a positive integer");
        }
        return static_cast<std::int64_t>(1) << 24;
    }();
    return budget;
}

}  // namespace lrc
