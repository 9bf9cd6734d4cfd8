#pragma once

// Sweep grids: enumerate construction specs over small parameter ranges and
// re-verify every claim against the brute-force analyzers.  Shared by the
// repro CLI command and the acceptance checks, so both exercise exactly the
// same instances.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lrc/certify.hpp"
#include "lrc/code.hpp"
#include "lrc/families.hpp"
#include "lrc/geometry.hpp"
#include "lrc/util.hpp"

namespace lrc {

namespace detail {

inline std::vector<Support> subsets_of_size(std::uint32_t m, std::uint32_t s) {
    std::vector<Support> out;
    if (s == 0 || s > m) return out;
    Support cur(s);
    for (std::uint32_t i = 0; i < s; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::uint32_t i = s;
        while (i > 0 && cur[i - 1] == m - s + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::uint32_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

// Unordered families of t pairwise-disjoint nonempty subsets of {0..m-1} with
// t_min <= t <= t_max.  Enumerated by restricted-growth coordinate labelings
// (label 0 = coordinate unused, a new label must be one past the largest so
// far), which yields each unordered family exactly once with its parts
// ordered by minimum element.
inline std::vector<std::vector<Support>> disjoint_families(std::uint32_t m, std::uint32_t t_min,
                                                           std::uint32_t t_max) {
    std::vector<std::vector<Support>> out;
    if (t_min < 1 || t_max < t_min) throw std::invalid_argument("disjoint_families: bad t range");
    std::vector<std::uint32_t> label(m, 0);
    auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t used) -> void {
        if (i == m) {
            if (used < t_min) return;
            std::vector<Support> parts(used);
            for (std::uint32_t j = 0; j < m; ++j)
                if (label[j] != 0) parts[label[j] - 1].push_back(j);
            out.push_back(std::move(parts));
            return;
        }
        std::uint32_t top = std::min(used + 1, t_max);
        for (std::uint32_t l = 0; l <= top; ++l) {
            label[i] = l;
            self(self, i + 1, std::max(used, l));
        }
        label[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

// Unordered pairs of subsets of {0..m-1}, each of size >= min_size, meeting in
// at most one coordinate.
inline std::vector<std::vector<Support>> overlapping_pairs(std::uint32_t m,
                                                           std::uint32_t min_size = 3) {
    std::vector<Support> pool;
    for (std::uint32_t s = min_size; s <= m; ++s)
        for (Support& a : detail::subsets_of_size(m, s)) pool.push_back(std::move(a));
    std::vector<std::vector<Support>> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            if (detail::overlap(pool[i], pool[j]) <= 1) out.push_back({pool[i], pool[j]});
    return out;
}

inline bool weight2_within_budget(const ConstructionSpec& spec) {
    std::int64_t q = checked_pow(spec.p, spec.e);
    std::int64_t cap = (checked_pow(q, spec.m - 1) - q) / (q - 1);
    return predicted_deleted(spec, q) <= cap;
}

// Every subspace-union spec with 2..3 disjoint nonempty support sets.
inline std::vector<ConstructionSpec> subspace_union_grid(std::uint32_t p, std::uint32_t e,
                                                         std::uint32_t m, std::uint32_t t_min = 2,
                                                         std::uint32_t t_max = 3) {
    std::vector<ConstructionSpec> out;
    for (auto& family : disjoint_families(m, t_min, t_max))
        out.push_back({Family::subspace_union, p, e, m, std::move(family)});
    return out;
}

// Weight-two specs on one grid point: single supports of each size in
// single_sizes, plus all pairs of supports (size >= 3, overlap <= 1), keeping
// only instances within the puncturing budget.
inline std::vector<ConstructionSpec> weight2_grid(std::uint32_t p, std::uint32_t e,
                                                  std::uint32_t m,
                                                  const std::vector<std::uint32_t>& single_sizes) {
    std::vector<ConstructionSpec> out;
    for (std::uint32_t s : single_sizes)
        for (Support& a : detail::subsets_of_size(m, s))
            out.push_back({Family::weight2_single, p, e, m, {std::move(a)}});
    for (auto& pair : overlapping_pairs(m, 3))
        out.push_back({Family::weight2_multi, p, e, m, std::move(pair)});
    std::erase_if(out, [](const ConstructionSpec& spec) { return !weight2_within_budget(spec); });
    return out;
}

struct GridPoint {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t m = 2;
};

namespace detail {

inline std::vector<GridPoint> filter_grid(std::vector<GridPoint> pts, std::int64_t qm_cap) {
    std::erase_if(pts, [&](const GridPoint& g) {
        return checked_pow(checked_pow(g.p, g.e), g.m) > qm_cap;
    });
    return pts;
}

}  // namespace detail

inline std::vector<GridPoint> subspace_union_grid_points(std::int64_t qm_cap = 1 << 20) {
    std::vector<GridPoint> pts;
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}})
        for (std::uint32_t m : {3u, 4u, 5u}) pts.push_back({p, e, m});
    return detail::filter_grid(std::move(pts), qm_cap);
}

inline std::vector<GridPoint> weight2_grid_points(std::int64_t qm_cap = 1 << 20) {
    std::vector<GridPoint> pts;
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}})
        for (std::uint32_t m : {4u, 5u}) pts.push_back({p, e, m});
    return detail::filter_grid(std::move(pts), qm_cap);
}

// One fully verified sweep instance.  Every *_ok flag compares a claim made
// by the construction against an independent brute-force computation.
struct SweepRow {
    ConstructionSpec spec;
    CodeParams predicted;
    CodeParams verified;
    std::int64_t certified_delta = 0;
    bool params_ok = false;      // analyze(code) == predicted params
    bool griesmer_ok = true;     // griesmer claimed  =>  griesmer_check passes
    bool locality_ok = true;     // predicted (2,delta)  =>  certified delta is >= it
    bool sufficiency_ok = true;  // deletion-budget test for delta  =>  certified delta >= delta
    bool pass = false;
};

inline SweepRow verify_instance(const ConstructionSpec& spec,
                                std::int64_t budget = enumeration_budget()) {
    SweepRow row;
    row.spec = spec;
    Construction built = construct(spec);
    row.predicted = built.sheet.predicted_params;
    row.verified = analyze(built.code, budget).params;
    row.params_ok = row.verified == row.predicted;

    const std::int64_t q = built.code.field().q();
    if (built.sheet.griesmer_claimed) row.griesmer_ok = griesmer_check(row.verified, q);

    LocalityCertificate cert = certify_locality(built.code);
    row.certified_delta = cert.delta;
    if (built.sheet.predicted_locality.covered)
        row.locality_ok =
            cert.delta >= static_cast<std::int64_t>(built.sheet.predicted_locality.delta);

    std::int64_t pg_size = (checked_pow(q, spec.m) - 1) / (q - 1);
    std::int64_t deleted = pg_size - static_cast<std::int64_t>(built.code.n());
    for (std::int64_t delta = 2; delta <= q; ++delta)
        if (locality_sufficient(deleted, spec.m, q, delta) && cert.delta < delta)
            row.sufficiency_ok = false;

    row.pass = row.params_ok && row.griesmer_ok && row.locality_ok && row.sufficiency_ok;
    return row;
}

}  // namespace lrc
