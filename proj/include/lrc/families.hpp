// Code families built by puncturing the simplex code at structured point
// sets, together with the parameters, locality, and side conditions each
// family predicts for itself.  Predictions are claims only; the analyzer and
// certifier check them independently.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/field.hpp"
#include "lrc/geometry.hpp"
#include "lrc/util.hpp"

namespace lrc {

enum class Family { simplex, subspace_union, weight2_single, weight2_multi };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::simplex: return "simplex";
        case Family::subspace_union: return "subspace-union";
        case Family::weight2_single: return "weight2-single";
        case Family::weight2_multi: return "weight2-multi";
    }
    throw std::logic_error("family_name: bad enum");
}

inline Family family_from_name(const std::string& s) {
    if (s == "simplex") return Family::simplex;
    if (s == "subspace-union") return Family::subspace_union;
    if (s == "weight2-single") return Family::weight2_single;
    if (s == "weight2-multi") return Family::weight2_multi;
    throw std::invalid_argument("unknown family: " + s);
}

// Support sets use 0-based coordinate indices; the CLI and JSON layers
// translate from the 1-based convention.
struct ConstructionSpec {
    Family family = Family::simplex;
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t m = 2;
    std::vector<Support> sets;
};

struct ConditionCheck {
    std::string name;
    bool holds = false;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct PredictedLocality {
    bool covered = false;
    int r = 2;
    std::uint32_t delta = 0;
};

struct ClaimSheet {
    CodeParams predicted_params;
    PredictedLocality predicted_locality;
    bool griesmer_claimed = false;
    std::vector<ConditionCheck> conditions;
};

struct Construction {
    LinearCode code;
    ClaimSheet sheet;
};

namespace detail {

// sets are strictly increasing once validated
inline std::size_t overlap(const Support& a, const Support& b) {
    std::vector<std::uint32_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.size();
}

// largest number of support sets sharing one size
inline std::int64_t max_size_multiplicity(const ConstructionSpec& spec) {
    std::map<std::size_t, std::int64_t> counts;
    for (const auto& a : spec.sets) ++counts[a.size()];
    std::int64_t best = 0;
    for (const auto& [size, count] : counts) best = std::max(best, count);
    return best;
}

}  // namespace detail

inline void validate_spec(const ConstructionSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("construction needs m >= 2");
    for (const auto& a : spec.sets) validate_support(spec.m, a, "construction support set");
    const std::size_t t = spec.sets.size();
    switch (spec.family) {
        case Family::simplex:
            if (t != 0) throw std::invalid_argument("simplex takes no support sets");
            break;
        case Family::subspace_union: {
            if (t < 2) throw std::invalid_argument("subspace-union needs at least two support sets");
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = i + 1; j < t; ++j)
                    if (detail::overlap(spec.sets[i], spec.sets[j]) != 0)
                        throw std::invalid_argument("subspace-union support sets must be pairwise disjoint");
            break;
        }
        case Family::weight2_single:
            if (t != 1) throw std::invalid_argument("weight2-single takes exactly one support set");
            if (spec.sets[0].size() < 3)
                throw std::invalid_argument("weight2-single needs a support set of size at least 3");
            break;
        case Family::weight2_multi: {
            if (t < 1) throw std::invalid_argument("weight2-multi needs at least one support set");
            for (const auto& a : spec.sets)
                if (a.size() < 3)
                    throw std::invalid_argument("weight2-multi support sets need size at least 3");
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = i + 1; j < t; ++j)
                    if (detail::overlap(spec.sets[i], spec.sets[j]) > 1)
                        throw std::invalid_argument("weight2-multi support sets may overlap in at most one coordinate");
            break;
        }
    }
}

// closed form for the number of punctured points
inline std::int64_t predicted_deleted(const ConstructionSpec& spec, std::int64_t q) {
    switch (spec.family) {
        case Family::simplex:
            return 0;
        case Family::subspace_union: {
            std::int64_t sum = 0;
            for (const auto& a : spec.sets)
                sum = checked_add(sum, checked_pow(q, static_cast<unsigned>(a.size())));
            sum -= static_cast<std::int64_t>(spec.sets.size());
            return sum / (q - 1);
        }
        case Family::weight2_single:
        case Family::weight2_multi: {
            std::int64_t sum = 0;
            for (const auto& a : spec.sets)
                sum = checked_add(sum, binomial(static_cast<std::int64_t>(a.size()), 2));
            return checked_mul(q - 1, sum);
        }
    }
    throw std::logic_error("predicted_deleted: bad enum");
}

inline PredictedLocality predicted_locality(const ConstructionSpec& spec) {
    validate_spec(spec);
    const std::int64_t q = checked_pow(static_cast<std::int64_t>(spec.p), spec.e);
    const std::size_t t = spec.sets.size();
    switch (spec.family) {
        case Family::simplex:
            return {true, 2, static_cast<std::uint32_t>(q)};
        case Family::subspace_union: {
            std::size_t max_size = 0;
            for (const auto& a : spec.sets) max_size = std::max(max_size, a.size());
            if (t == 2 && max_size + 2 <= spec.m)
                return {true, 2, static_cast<std::uint32_t>(q)};
            if (t >= 3 && spec.m >= 4)
                return {true, 2, static_cast<std::uint32_t>(q)};
            if (t == 2 && spec.m > 2 && q > 2 && max_size == spec.m - 1)
                return {true, 2, static_cast<std::uint32_t>(q - 1)};
            return {false, 2, 0};
        }
        case Family::weight2_single:
        case Family::weight2_multi: {
            std::int64_t deleted = predicted_deleted(spec, q);
            std::int64_t cap = (checked_pow(q, spec.m - 1) - q) / (q - 1);
            if (deleted <= cap) return {true, 2, static_cast<std::uint32_t>(q)};
            return {false, 2, 0};
        }
    }
    throw std::logic_error("predicted_locality: bad enum");
}

// |D| small enough to guarantee that every point of D^c lies on a line with
// delta more surviving points, hence (2,delta)-locality
inline bool locality_sufficient(std::int64_t deleted, std::uint32_t m, std::int64_t q,
                                std::int64_t delta) {
    if (delta < 2 || delta > q)
        throw std::invalid_argument("locality_sufficient: need 2 <= delta <= q");
    if (m < 2) throw std::invalid_argument("locality_sufficient: need m >= 2");
    std::int64_t lines = (checked_pow(q, m - 1) - 1) / (q - 1);
    return deleted <= checked_mul(lines, q + 1 - delta) - 1;
}

inline Construction construct(const ConstructionSpec& spec) {
    validate_spec(spec);
    Field f = Field::make(spec.p, spec.e);
    const std::int64_t q = f.q();
    const std::uint32_t m = spec.m;

    PointSet pg = pg_points(f, m);
    PointSet cols = pg;
    if (!spec.sets.empty()) {
        const bool weight2 = spec.family != Family::subspace_union;
        PointSet deleted = weight2 ? weight2_points(f, m, spec.sets[0])
                                   : subspace_points(f, m, spec.sets[0]);
        for (std::size_t i = 1; i < spec.sets.size(); ++i)
            deleted = union_of(deleted, weight2 ? weight2_points(f, m, spec.sets[i])
                                                : subspace_points(f, m, spec.sets[i]));
        cols = difference_of(pg, deleted);
    }

    ClaimSheet sheet;
    sheet.predicted_locality = predicted_locality(spec);
    const std::int64_t pg_size = (checked_pow(q, m) - 1) / (q - 1);
    const std::int64_t n = pg_size - predicted_deleted(spec, q);
    std::int64_t d = checked_pow(q, m - 1);
    switch (spec.family) {
        case Family::simplex:
            sheet.griesmer_claimed = true;
            break;
        case Family::subspace_union: {
            for (const auto& a : spec.sets)
                d -= checked_pow(q, static_cast<unsigned>(a.size()) - 1);
            std::int64_t mult = detail::max_size_multiplicity(spec);
            sheet.conditions.push_back({"griesmer_multiplicity", mult <= q - 1, mult, q - 1});
            sheet.griesmer_claimed = sheet.conditions.back().holds;
            break;
        }
        case Family::weight2_single:
        case Family::weight2_multi: {
            std::int64_t total = 0;
            for (const auto& a : spec.sets) {
                std::int64_t s = static_cast<std::int64_t>(a.size());
                std::int64_t u = 2 * (s - 1) * (q - 1) + q;
                total = checked_add(total, checked_mul(u, u));
            }
            d -= total / (8 * q);
            std::int64_t cap = (checked_pow(q, m - 1) - q) / (q - 1);
            sheet.conditions.push_back(
                {"puncture_budget", predicted_deleted(spec, q) <= cap, predicted_deleted(spec, q), cap});
            std::int64_t num = checked_mul(q, d);
            std::int64_t sub = checked_mul(q - 1, n - q - 1);
            bool applicable = num > sub;
            sheet.conditions.push_back({"plotkin_applicable", applicable, num, sub});
            std::int64_t window = applicable ? checked_mul(num - sub, checked_pow(q, m - 1)) : 0;
            sheet.conditions.push_back({"plotkin_window", applicable && num < window, num, window});
            break;
        }
    }
    if (d < 1)
        throw std::invalid_argument("construct: deletion leaves predicted distance " +
                                    std::to_string(d) + ", code is degenerate");
    sheet.predicted_params = {n, m, d};
    return {build_code(cols), std::move(sheet)};
}

}  // namespace lrc
