// Locality certification by exact line scanning, plus the bound arsenal for
// dimension optimality: Singleton-type with locality, Griesmer, Plotkin, and
// their combination into the Cadambe-Mazumdar style upper bound on k.
//
// Locality certificates are exact for codes whose columns are distinct
// projective points: a coordinate supports (2,delta) repair exactly when some
// line through its point keeps delta further points among the columns.  Any
// qualifying repair set of size delta+1 has punctured rank exactly 2, hence
// lies on a line.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/geometry.hpp"
#include "lrc/util.hpp"

namespace lrc {

// A verification claim failed; distinct from malformed input.
class CertificationFailure : public std::runtime_error {
public:
    explicit CertificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct LocalityCertificate {
    int r = 2;
    std::int64_t delta = 0;
    std::vector<std::vector<std::int64_t>> repair_sets;      // one per coordinate, sorted
    std::vector<std::int64_t> per_coordinate_best_delta;
};

namespace detail {

struct LineHits {
    std::vector<Point> line;                // all q+1 points, sorted
    std::vector<std::int64_t> member_cols;  // column indices found on the line
};

// Canonicalized columns plus an index sorted by point value, rejecting
// duplicate projective points.
struct CanonColumns {
    std::vector<Point> canon;
    std::vector<std::int64_t> order;
};

inline CanonColumns canon_columns(const LinearCode& code) {
    CanonColumns cc;
    cc.canon.reserve(code.n());
    for (const auto& col : code.columns()) cc.canon.push_back(canonicalize(code.field(), col));
    cc.order.resize(cc.canon.size());
    for (std::size_t i = 0; i < cc.order.size(); ++i) cc.order[i] = static_cast<std::int64_t>(i);
    std::sort(cc.order.begin(), cc.order.end(), [&](std::int64_t a, std::int64_t b) {
        return cc.canon[static_cast<std::size_t>(a)] < cc.canon[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 1; i < cc.order.size(); ++i)
        if (cc.canon[static_cast<std::size_t>(cc.order[i - 1])] ==
            cc.canon[static_cast<std::size_t>(cc.order[i])])
            throw std::invalid_argument(
                "duplicate columns: locality certification requires distinct projective points");
    return cc;
}

inline std::vector<std::uint32_t> to_coords(const std::vector<std::int64_t>& idx) {
    std::vector<std::uint32_t> out;
    out.reserve(idx.size());
    for (std::int64_t v : idx) {
        if (v < 0 || v > static_cast<std::int64_t>(UINT32_MAX))
            throw std::invalid_argument("coordinate index out of range");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

inline std::int64_t find_column(const CanonColumns& cc, const Point& p) {
    auto it = std::lower_bound(cc.order.begin(), cc.order.end(), p,
                               [&](std::int64_t idx, const Point& val) {
                                   return cc.canon[static_cast<std::size_t>(idx)] < val;
                               });
    if (it == cc.order.end() || cc.canon[static_cast<std::size_t>(*it)] != p) return -1;
    return *it;
}

// Every line through column i that meets a second column, each listed once.
inline std::vector<LineHits> lines_at(const LinearCode& code, const CanonColumns& cc,
                                      std::size_t i) {
    std::vector<LineHits> out;
    if (code.m() < 2) return out;
    const std::size_t n = code.n();
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i || seen[j]) continue;
        PointSet line = line_through(code.field(), code.m(), cc.canon[i], cc.canon[j]);
        LineHits hits;
        hits.line = line.points();
        for (const auto& p : hits.line) {
            std::int64_t idx = find_column(cc, p);
            if (idx < 0) continue;
            hits.member_cols.push_back(idx);
            if (static_cast<std::size_t>(idx) != i) seen[static_cast<std::size_t>(idx)] = 1;
        }
        std::sort(hits.member_cols.begin(), hits.member_cols.end());
        out.push_back(std::move(hits));
    }
    return out;
}

}  // namespace detail

// True iff R is a valid repair set witnessing (2,delta) for coordinate i.
inline bool verify_repair_set(const LinearCode& code, std::int64_t i,
                              std::vector<std::int64_t> r_set, std::int64_t delta) {
    std::sort(r_set.begin(), r_set.end());
    if (!std::binary_search(r_set.begin(), r_set.end(), i)) return false;
    if (static_cast<std::int64_t>(r_set.size()) > delta + 1) return false;
    return analyze(puncture(code, detail::to_coords(r_set))).params.d >= delta;
}

// Scan all lines through every column point.  With delta_target = 0 the
// certificate reports the best delta the code supports; otherwise the target
// is enforced and a CertificationFailure lists the coordinates that fall
// short.  Repair sets are fixed deterministically: the lexicographically
// smallest qualifying line, then the coordinate itself plus the lowest
// column indices on that line.
inline LocalityCertificate certify_locality(const LinearCode& code, std::int64_t delta_target = 0) {
    const std::int64_t q = code.field().q();
    if (delta_target != 0 && (delta_target < 2 || delta_target > q))
        throw std::invalid_argument("delta must lie in [2, q]");
    detail::CanonColumns cc = detail::canon_columns(code);
    const std::size_t n = code.n();

    std::vector<std::vector<detail::LineHits>> all_lines(n);
    LocalityCertificate cert;
    cert.per_coordinate_best_delta.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        all_lines[i] = detail::lines_at(code, cc, i);
        std::int64_t best = 0;
        for (const auto& hits : all_lines[i])
            best = std::max(best, static_cast<std::int64_t>(hits.member_cols.size()) - 1);
        cert.per_coordinate_best_delta[i] = best;
    }

    std::int64_t code_best = n > 0 ? cert.per_coordinate_best_delta[0] : 0;
    for (std::int64_t b : cert.per_coordinate_best_delta) code_best = std::min(code_best, b);

    if (delta_target != 0 && code_best < delta_target) {
        std::string msg = "delta " + std::to_string(delta_target) + " unachievable:";
        for (std::size_t i = 0; i < n; ++i)
            if (cert.per_coordinate_best_delta[i] < delta_target)
                msg += " column " + std::to_string(i + 1) + " supports at most " +
                       std::to_string(cert.per_coordinate_best_delta[i]) + ",";
        msg.pop_back();
        throw CertificationFailure(msg);
    }
    cert.delta = delta_target != 0 ? delta_target : code_best;

    cert.repair_sets.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.delta < 1) {
            cert.repair_sets[i] = {static_cast<std::int64_t>(i)};
            continue;
        }
        const detail::LineHits* chosen = nullptr;
        for (const auto& hits : all_lines[i]) {
            if (static_cast<std::int64_t>(hits.member_cols.size()) < cert.delta + 1) continue;
            if (chosen == nullptr || hits.line < chosen->line) chosen = &hits;
        }
        if (chosen == nullptr) throw std::logic_error("certify_locality: qualifying line vanished");
        std::vector<std::int64_t>& r_set = cert.repair_sets[i];
        r_set.push_back(static_cast<std::int64_t>(i));
        for (std::int64_t idx : chosen->member_cols) {
            if (static_cast<std::int64_t>(r_set.size()) > cert.delta) break;
            if (idx != static_cast<std::int64_t>(i)) r_set.push_back(idx);
        }
        std::sort(r_set.begin(), r_set.end());
        CodeParams got = analyze(puncture(code, detail::to_coords(r_set))).params;
        if (got != CodeParams{cert.delta + 1, 2, cert.delta})
            throw std::logic_error("certify_locality: repair set is not an MDS line segment");
    }
    return cert;
}

// Reference implementation: the best delta coordinate i supports, by searching
// every repair set of size at most max_size containing i.  Subsets whose
// columns already span three dimensions are pruned: puncturing to them has
// d <= |R| - 2 by Singleton, which can never witness |R| <= delta + 1.
inline std::int64_t exhaustive_best_delta(const LinearCode& code, std::size_t i,
                                          std::size_t max_size) {
    const std::size_t n = code.n();
    std::vector<std::int64_t> r_set{static_cast<std::int64_t>(i)};
    std::int64_t best = 0;

    auto rank_of = [&](const std::vector<std::int64_t>& idx) {
        std::vector<Point> cols;
        cols.reserve(idx.size());
        for (std::int64_t j : idx) cols.push_back(code.column(static_cast<std::size_t>(j)));
        return static_cast<std::int64_t>(detail::row_echelon_basis(code.field(), cols).size());
    };

    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (r_set.size() >= 2) {
            std::vector<std::int64_t> sorted = r_set;
            std::sort(sorted.begin(), sorted.end());
            std::int64_t d = analyze(puncture(code, detail::to_coords(sorted))).params.d;
            if (d >= static_cast<std::int64_t>(r_set.size()) - 1) best = std::max(best, d);
        }
        if (r_set.size() >= max_size) return;
        for (std::size_t j = next; j < n; ++j) {
            if (j == i) continue;
            r_set.push_back(static_cast<std::int64_t>(j));
            if (rank_of(r_set) <= 2) self(self, j + 1);
            r_set.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1)
inline std::int64_t singleton_rd_bound(std::int64_t n, std::int64_t k, std::int64_t r,
                                       std::int64_t delta) {
    if (k < 1 || r < 1 || delta < 2)
        throw std::invalid_argument("singleton_rd_bound: need k >= 1, r >= 1, delta >= 2");
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

struct KoptBound {
    std::int64_t value = 0;
    std::string bound = "void";
};

// Upper bound on the largest dimension of any q-ary [n, *, d] linear code:
// the smallest of Plotkin (when qd > (q-1)n), the Griesmer inversion, and
// Singleton.  Ties report the earlier bound in that order.
inline KoptBound kopt_upper(std::int64_t n, std::int64_t d, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("kopt_upper: q must be >= 2");
    if (d < 1) throw std::invalid_argument("kopt_upper: d must be >= 1");
    if (n <= 0 || n < d) return {0, "void"};

    KoptBound best{-1, ""};
    auto consider = [&](std::int64_t value, const char* name) {
        if (best.value < 0 || value < best.value) best = {value, name};
    };
    if (checked_mul(q, d) > checked_mul(q - 1, n)) {
        std::int64_t cap = checked_mul(q, d) / (checked_mul(q, d) - checked_mul(q - 1, n));
        consider(floor_log(q, cap), "plotkin");
    }
    std::int64_t sum = 0, pw = 1, k = 0;
    while (true) {
        std::int64_t term = ceil_div(d, pw);
        if (sum + term > n) break;
        sum += term;
        ++k;
        if (pw >= d) {  // every further term is 1
            k += n - sum;
            break;
        }
        pw = checked_mul(pw, q);
    }
    consider(k, "griesmer");
    consider(n - d + 1, "singleton");
    return best;
}

struct KoptRow {
    std::int64_t s = 0;
    std::int64_t n_prime = 0;
    std::int64_t kopt_upper = 0;
    std::string bound_name;
};

struct BoundReport {
    std::int64_t singleton_rd = 0;
    std::vector<KoptRow> table;
    std::int64_t cm_upper = 0;
    std::int64_t s_star = 0;
    std::string k_optimal;          // "certified" | "inconclusive"
    bool griesmer = false;
    bool singleton_rd_optimal = false;
};

// n = sum of ceil(d/q^i) over i < k, met with equality
inline bool griesmer_check(const CodeParams& params, std::int64_t q) {
    if (params.k < 1 || params.d < 1) return false;
    std::int64_t sum = 0, pw = 1;
    for (std::int64_t i = 0; i < params.k; ++i) {
        sum = checked_add(sum, ceil_div(params.d, pw));
        if (sum > params.n) return false;
        if (pw < params.d) pw = checked_mul(pw, q);
    }
    return sum == params.n;
}

// k <= min over s of s*r + kopt_upper(n - s(r+delta-1), d); scanning stops at
// the first s whose shortened length falls below d (that term is still
// included).  The verdict "certified" means the minimum equals k exactly.
inline BoundReport cm_certify(const CodeParams& params, std::int64_t r, std::int64_t delta,
                              std::int64_t q) {
    if (r < 1 || delta < 2)
        throw std::invalid_argument("cm_certify: need r >= 1 and delta >= 2");
    if (params.k < 1 || params.d < 1)
        throw std::invalid_argument("cm_certify: degenerate code parameters");
    BoundReport report;
    report.singleton_rd = singleton_rd_bound(params.n, params.k, r, delta);
    report.singleton_rd_optimal = params.d == report.singleton_rd;
    report.griesmer = griesmer_check(params, q);

    const std::int64_t group = r + delta - 1;
    for (std::int64_t s = 1;; ++s) {
        std::int64_t n_prime = params.n - checked_mul(s, group);
        KoptBound kb = kopt_upper(std::max<std::int64_t>(n_prime, 0), params.d, q);
        report.table.push_back({s, n_prime, kb.value, kb.bound});
        std::int64_t total = checked_add(checked_mul(s, r), kb.value);
        if (report.s_star == 0 || total < report.cm_upper) {
            report.cm_upper = total;
            report.s_star = s;
        }
        if (n_prime < params.d) break;
    }
    if (report.cm_upper < params.k)
        throw std::logic_error(
            "cm_certify: upper bound fell below the actual dimension; "
            "the locality premise or the input parameters are wrong");
    report.k_optimal = report.cm_upper == params.k ? "certified" : "inconclusive";
    return report;
}

}  // namespace lrc
