// Finite fields GF(p^e) with exact table-backed arithmetic.
//
// Elements are integer encodings in [0, q): the base-p digits of the encoding
// are the coefficients of the element's polynomial representation, lowest
// degree first.  A Field is immutable after construction and cheap to copy.
//
// ExtField models GF(q^m) as a degree-m extension of a base Field, with
// elements encoded base-q the same way.  It exists to realize trace-style
// constructions and to test trace transitivity; it carries no lookup tables.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/util.hpp"

namespace lrc {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

namespace detail {

inline int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of num modulo den over the coefficient field K.
// K must provide q(), add, sub, mul, inv on encodings.
template <class K>
Poly poly_rem(Poly num, const Poly& den, const K& k) {
    int dd = poly_deg(den);
    if (dd < 0) throw std::invalid_argument("poly_rem: zero divisor");
    std::uint32_t lead_inv = k.inv(den[static_cast<std::size_t>(dd)]);
    for (int i = poly_deg(num); i >= dd; i = poly_deg(num)) {
        std::uint32_t c = k.mul(num[static_cast<std::size_t>(i)], lead_inv);
        for (int j = 0; j <= dd; ++j) {
            auto& slot = num[static_cast<std::size_t>(i - dd + j)];
            slot = k.sub(slot, k.mul(c, den[static_cast<std::size_t>(j)]));
        }
    }
    return num;
}

// Irreducibility over K by trial division against every monic polynomial of
// degree at most deg(f)/2.
template <class K>
bool poly_irreducible(const Poly& f, const K& k) {
    int d = poly_deg(f);
    if (d < 1) return false;
    std::uint64_t q = k.q();
    for (int t = 1; t <= d / 2; ++t) {
        Poly g(static_cast<std::size_t>(t) + 1, 0);
        g[static_cast<std::size_t>(t)] = 1;
        // odometer over the t low coefficients
        while (true) {
            if (poly_deg(poly_rem(f, g, k)) < 0) return false;
            int pos = t - 1;
            while (pos >= 0) {
                auto& c = g[static_cast<std::size_t>(pos)];
                if (++c < q) break;
                c = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return true;
}

// The monic irreducible of the given degree whose coefficient list
// (c_0, c_1, ...) is smallest, comparing the low-degree coefficient first.
template <class K>
Poly smallest_irreducible(unsigned deg, const K& k) {
    if (deg == 0) throw std::invalid_argument("smallest_irreducible: degree must be >= 1");
    std::uint64_t q = k.q();
    Poly f(deg + 1, 0);
    f[deg] = 1;
    while (true) {
        if (poly_irreducible(f, k)) return f;
        int pos = static_cast<int>(deg) - 1;  // last coefficient varies fastest
        while (pos >= 0) {
            auto& c = f[static_cast<std::size_t>(pos)];
            if (++c < q) break;
            c = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("smallest_irreducible: no candidate found");
    }
}

// GF(p) arithmetic on plain residues, used while constructing a Field.
struct PrimeOps {
    std::uint32_t p;
    std::uint32_t q() const { return p; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeOps: division by zero");
        std::uint32_t r = 1, base = a;
        std::uint32_t k = p - 2;
        while (k) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }
};

}  // namespace detail

// GF(p^e).  q = p^e is capped at 2^16 so the log/antilog tables stay small.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 16;

    // Builds GF(p^e).  When no modulus is supplied the lexicographically
    // smallest monic irreducible of degree e over GF(p) is chosen, comparing
    // coefficients low degree first; the primitive element alpha is the
    // smallest primitive encoding.  A supplied modulus must be monic of
    // degree e and is checked for irreducibility by trial division.
    static Field make(std::uint32_t p, std::uint32_t e, const Poly* modulus = nullptr) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
        if (e < 1) throw std::invalid_argument("Field: e must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxOrder) throw std::invalid_argument("Field: q = p^e exceeds 65536");
        }
        detail::PrimeOps ops{p};
        Poly mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != static_cast<std::size_t>(e) + 1 || mod[e] != 1)
                throw std::invalid_argument("Field: modulus must be monic of degree e");
            for (auto c : mod)
                if (c >= p) throw std::invalid_argument("Field: modulus coefficient out of range");
            if (!detail::poly_irreducible(mod, ops))
                throw std::invalid_argument("Field: modulus is reducible");
        } else {
            mod = detail::smallest_irreducible(e, ops);
        }
        return Field(std::make_shared<const Impl>(p, e, static_cast<std::uint32_t>(q), std::move(mod)));
    }

    std::uint32_t p() const { return impl_->p; }
    std::uint32_t e() const { return impl_->e; }
    std::uint32_t q() const { return impl_->q; }
    const Poly& modulus() const { return impl_->modulus; }
    std::uint32_t alpha() const { return impl_->alpha; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        if (impl_->p == 2) return a ^ b;
        return digitwise(a, b, /*negate_b=*/false);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        if (impl_->p == 2) return a ^ b;
        return digitwise(a, b, /*negate_b=*/true);
    }
    std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = impl_->log[a] + impl_->log[b];
        std::uint32_t n = impl_->q - 1;
        if (s >= n) s -= n;
        return impl_->exp[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        check(a);
        if (a == 0) throw std::domain_error("Field: division by zero");
        std::uint32_t n = impl_->q - 1;
        std::uint32_t l = impl_->log[a];
        return impl_->exp[l == 0 ? 0 : n - l];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
        check(a);
        if (a == 0) return k == 0 ? 1 : 0;
        std::uint64_t n = impl_->q - 1;
        std::uint64_t s = (static_cast<std::uint64_t>(impl_->log[a]) * (k % n)) % n;
        return impl_->exp[s];
    }

    // Multiplication through polynomial convolution and reduction, bypassing
    // the tables; kept public so tests can cross-check the two paths.
    std::uint32_t mul_no_table(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        return impl_->mul_poly(a, b);
    }

    // Absolute trace down to GF(p): sum of a^(p^i) for i < e.  The result is
    // an element of the prime subfield, whose encodings are 0..p-1.
    std::uint32_t trace_to_prime(std::uint32_t a) const {
        check(a);
        return impl_->trace[a];
    }

    bool operator==(const Field& o) const {
        return impl_->p == o.impl_->p && impl_->e == o.impl_->e && impl_->modulus == o.impl_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const { return "GF(" + std::to_string(impl_->q) + ")"; }

private:
    struct Impl {
        std::uint32_t p, e, q;
        Poly modulus;
        std::uint32_t alpha = 0;
        std::vector<std::uint32_t> exp, log, trace;

        Impl(std::uint32_t p_, std::uint32_t e_, std::uint32_t q_, Poly mod)
            : p(p_), e(e_), q(q_), modulus(std::move(mod)) {
            alpha = find_alpha();
            build_tables();
        }

        std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
            std::vector<std::uint32_t> da(e), db(e), prod(2 * e - 1, 0);
            decode(a, da);
            decode(b, db);
            for (std::uint32_t i = 0; i < e; ++i) {
                if (da[i] == 0) continue;
                for (std::uint32_t j = 0; j < e; ++j)
                    prod[i + j] = static_cast<std::uint32_t>(
                        (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
            }
            for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(e); --i) {
                std::uint32_t c = prod[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                prod[static_cast<std::size_t>(i)] = 0;
                for (std::uint32_t j = 0; j < e; ++j) {
                    auto& slot = prod[static_cast<std::size_t>(i) - e + j];
                    slot = static_cast<std::uint32_t>(
                        (slot + static_cast<std::uint64_t>(c) * (p - modulus[j]) % p) % p);
                }
            }
            return encode(prod);
        }

        std::uint32_t pow_poly(std::uint32_t a, std::uint64_t k) const {
            std::uint32_t r = 1, base = a;
            while (k) {
                if (k & 1) r = mul_poly(r, base);
                base = mul_poly(base, base);
                k >>= 1;
            }
            return r;
        }

        std::uint32_t find_alpha() const {
            auto factors = prime_factors(q - 1);
            for (std::uint32_t cand = 1; cand < q; ++cand) {
                bool primitive = true;
                for (auto r : factors) {
                    if (pow_poly(cand, (q - 1) / r) == 1) {
                        primitive = false;
                        break;
                    }
                }
                if (primitive) return cand;
            }
            throw std::logic_error("Field: no primitive element found");
        }

        void build_tables() {
            exp.assign(q - 1, 0);
            log.assign(q, 0);
            std::uint32_t x = 1;
            for (std::uint32_t i = 0; i + 1 < q; ++i) {
                exp[i] = x;
                log[x] = i;
                x = mul_poly(x, alpha);
            }
            if (x != 1) throw std::logic_error("Field: alpha order mismatch");
            trace.assign(q, 0);
            for (std::uint32_t a = 0; a < q; ++a) {
                std::uint32_t s = a, t = a;
                for (std::uint32_t i = 1; i < e; ++i) {
                    t = pow_poly(t, p);
                    // digitwise add without tables
                    std::vector<std::uint32_t> ds(e), dt(e);
                    decode(s, ds);
                    decode(t, dt);
                    for (std::uint32_t j = 0; j < e; ++j) ds[j] = (ds[j] + dt[j]) % p;
                    s = encode(ds);
                }
                if (s >= p) throw std::logic_error("Field: trace left the prime subfield");
                trace[a] = s;
            }
        }

        void decode(std::uint32_t v, std::vector<std::uint32_t>& digits) const {
            for (std::uint32_t i = 0; i < e; ++i) {
                digits[i] = v % p;
                v /= p;
            }
        }
        std::uint32_t encode(const std::vector<std::uint32_t>& digits) const {
            std::uint32_t v = 0;
            for (std::uint32_t i = e; i-- > 0;) v = v * p + digits[i];
            return v;
        }
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    void check(std::uint32_t a) const {
        if (a >= impl_->q)
            throw std::invalid_argument("Field: element encoding " + std::to_string(a) +
                                        " out of range for " + describe());
    }

    std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool negate_b) const {
        std::uint32_t p = impl_->p, v = 0, mult = 1;
        for (std::uint32_t i = 0; i < impl_->e; ++i) {
            std::uint32_t da = a % p, db = b % p;
            a /= p;
            b /= p;
            std::uint32_t d = negate_b ? (da + p - db) % p : (da + db) % p;
            v += d * mult;
            mult *= p;
        }
        return v;
    }

    std::shared_ptr<const Impl> impl_;
};

// GF(q^m) built on top of a base Field.  Encodings are base-q digit vectors
// packed into a 64-bit integer, lowest-degree coefficient in the lowest digit.
class ExtField {
public:
    static ExtField make(const Field& base, std::uint32_t m, const Poly* modulus = nullptr) {
        if (m < 1) throw std::invalid_argument("ExtField: degree must be >= 1");
        std::uint64_t order = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            order *= base.q();
            if (order > (1ull << 32)) throw std::invalid_argument("ExtField: q^m exceeds 2^32");
        }
        Poly mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != static_cast<std::size_t>(m) + 1 || mod[m] != 1)
                throw std::invalid_argument("ExtField: modulus must be monic of degree m");
            for (auto c : mod)
                if (c >= base.q()) throw std::invalid_argument("ExtField: modulus coefficient out of range");
            if (!detail::poly_irreducible(mod, base))
                throw std::invalid_argument("ExtField: modulus is reducible");
        } else {
            mod = detail::smallest_irreducible(m, base);
        }
        return ExtField(base, m, order, std::move(mod));
    }

    const Field& base() const { return base_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    const Poly& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        check(a);
        check(b);
        std::uint64_t v = 0, mult = 1, q = base_.q();
        for (std::uint32_t i = 0; i < m_; ++i) {
            v += static_cast<std::uint64_t>(base_.add(static_cast<std::uint32_t>(a % q),
                                                      static_cast<std::uint32_t>(b % q))) *
                 mult;
            a /= q;
            b /= q;
            mult *= q;
        }
        return v;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        check(a);
        check(b);
        std::vector<std::uint32_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
        decode(a, da);
        decode(b, db);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
        }
        for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(m_); --i) {
            std::uint32_t c = prod[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<std::size_t>(i)] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                auto& slot = prod[static_cast<std::size_t>(i) - m_ + j];
                slot = base_.sub(slot, base_.mul(c, modulus_[j]));
            }
        }
        std::uint64_t v = 0;
        for (std::uint32_t i = m_; i-- > 0;) v = v * base_.q() + prod[i];
        return v;
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
        check(a);
        std::uint64_t r = 1, b = a;
        while (k) {
            if (k & 1) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }

    // Relative trace down to the base field: sum of a^(q^i) for i < m.
    // The result is a constant polynomial, returned as a base-field encoding.
    std::uint32_t trace_relative(std::uint64_t a) const {
        check(a);
        std::uint64_t s = a, t = a;
        for (std::uint32_t i = 1; i < m_; ++i) {
            t = pow(t, base_.q());
            s = add(s, t);
        }
        if (s >= base_.q()) throw std::logic_error("ExtField: relative trace left the base field");
        return static_cast<std::uint32_t>(s);
    }

    // Absolute trace down to GF(p): sum of a^(p^i) for i < e*m.
    std::uint32_t trace_to_prime(std::uint64_t a) const {
        check(a);
        std::uint64_t s = a, t = a;
        std::uint32_t total = base_.e() * m_;
        for (std::uint32_t i = 1; i < total; ++i) {
            t = pow(t, base_.p());
            s = add(s, t);
        }
        if (s >= base_.p()) throw std::logic_error("ExtField: absolute trace left the prime field");
        return static_cast<std::uint32_t>(s);
    }

private:
    ExtField(Field base, std::uint32_t m, std::uint64_t order, Poly mod)
        : base_(std::move(base)), m_(m), order_(order), modulus_(std::move(mod)) {}

    void check(std::uint64_t a) const {
        if (a >= order_) throw std::invalid_argument("ExtField: element encoding out of range");
    }
    void decode(std::uint64_t v, std::vector<std::uint32_t>& digits) const {
        std::uint64_t q = base_.q();
        for (std::uint32_t i = 0; i < m_; ++i) {
            digits[i] = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
    }

    Field base_;
    std::uint32_t m_;
    std::uint64_t order_;
    Poly modulus_;
};

}  // namespace lrc
