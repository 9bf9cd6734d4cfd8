// Krawtchouk polynomials K_k(x; n, q), the closed quadratic for degree two,
// and an exact character-sum oracle.
//
// The oracle never touches complex roots of unity: summing a nontrivial
// additive character over a sphere {y : wt(y) = s} reduces to counting how
// often tr(x*y) hits each prime-field level.  The counts of the nonzero
// levels are necessarily equal, so the sum is N_0 - N_1 exactly.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/util.hpp"

namespace lrc {

// K_k(x; n, q) = sum_{j=0}^{k} (-1)^j C(x,j) C(n-x, k-j) (q-1)^(k-j).
inline std::int64_t kraw_eval(std::int64_t k, std::int64_t x, std::int64_t n, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("kraw_eval: q must be >= 2");
    if (k < 0 || k > n) throw std::invalid_argument("kraw_eval: need 0 <= k <= n");
    if (x < 0 || x > n) throw std::invalid_argument("kraw_eval: need 0 <= x <= n");
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
        std::int64_t term = checked_mul(binomial(x, j), binomial(n - x, k - j));
        term = checked_mul(term, checked_pow(q - 1, static_cast<unsigned>(k - j)));
        acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    return acc;
}

// Degree-two closed form:
//   K_2(a; s, q) = (q^2/2) a^2 - ((2(q-1)qs + q(2-q))/2) a + C(s,2)(q-1)^2.
// Evaluated as an exact integer by clearing the denominator 2.
inline std::int64_t kraw2_quadratic(std::int64_t a, std::int64_t s, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("kraw2_quadratic: q must be >= 2");
    if (s < 2) throw std::invalid_argument("kraw2_quadratic: need s >= 2");
    if (a < 0 || a > s) throw std::invalid_argument("kraw2_quadratic: need 0 <= a <= s");
    std::int64_t twice = checked_mul(checked_mul(q, q), checked_mul(a, a));
    std::int64_t lin = checked_add(checked_mul(checked_mul(2 * (q - 1), q), s), checked_mul(q, 2 - q));
    twice = checked_sub(twice, checked_mul(lin, a));
    twice = checked_add(twice, checked_mul(checked_mul(s, s - 1), checked_mul(q - 1, q - 1)));
    if (twice % 2 != 0) throw std::logic_error("kraw2_quadratic: value is not an integer");
    return twice / 2;
}

struct Kraw2Min {
    std::int64_t argmin = 0;
    std::int64_t value = 0;
};

// Minimum of K_2(a; s, q) over integer a in [0, s], by direct scan; the
// smallest minimizing a wins ties.
inline Kraw2Min kraw2_min(std::int64_t s, std::int64_t q) {
    Kraw2Min best{0, kraw2_quadratic(0, s, q)};
    for (std::int64_t a = 1; a <= s; ++a) {
        std::int64_t v = kraw2_quadratic(a, s, q);
        if (v < best.value) best = {a, v};
    }
    return best;
}

// Sum of the additive character omega^tr(x*y) over all y in GF(q)^n of weight
// exactly s, computed exactly through trace level counts.  Throws if the
// nonzero level counts disagree, which would signal broken field arithmetic.
inline std::int64_t char_sum_oracle(const Field& f, const std::vector<std::uint32_t>& x,
                                    std::int64_t s, std::int64_t budget = enumeration_budget()) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    if (s < 0 || s > n) throw std::invalid_argument("char_sum_oracle: need 0 <= s <= n");
    for (auto xi : x)
        if (xi >= f.q()) throw std::invalid_argument("char_sum_oracle: x entry out of range");
    std::int64_t work = checked_mul(binomial(n, s),
                                    checked_pow(static_cast<std::int64_t>(f.q()) - 1,
                                                static_cast<unsigned>(s)));
    if (work > budget)
        throw BudgetExceeded("char_sum_oracle: C(n,s)(q-1)^s = " + std::to_string(work) +
                             " exceeds the budget of " + std::to_string(budget));

    std::vector<std::int64_t> level(f.p(), 0);
    std::vector<std::int64_t> support(s);
    for (std::int64_t i = 0; i < s; ++i) support[i] = i;
    std::vector<std::uint32_t> vals(s, 1);
    while (true) {
        // all nonzero value assignments on this support
        while (true) {
            std::uint32_t acc = 0;
            for (std::int64_t i = 0; i < s; ++i)
                acc = f.add(acc, f.mul(x[static_cast<std::size_t>(support[i])], vals[i]));
            ++level[f.trace_to_prime(acc)];
            std::int64_t pos = s - 1;
            while (pos >= 0) {
                if (++vals[pos] < f.q()) break;
                vals[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
        }
        // next support combination
        std::int64_t pos = s - 1;
        while (pos >= 0 && support[pos] == n - (s - pos)) --pos;
        if (pos < 0) break;
        ++support[pos];
        for (std::int64_t i = pos + 1; i < s; ++i) support[i] = support[i - 1] + 1;
        std::fill(vals.begin(), vals.end(), 1);
    }

    for (std::uint32_t c = 2; c < f.p(); ++c)
        if (level[c] != level[1])
            throw std::logic_error("char_sum_oracle: nonzero trace levels disagree");
    return level[0] - (f.p() > 1 ? level[1] : 0);
}

}  // namespace lrc
