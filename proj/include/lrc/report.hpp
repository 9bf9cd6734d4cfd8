#pragma once

// End-to-end construct pipeline and JSON rendering.
//
// run_construct_pipeline chains construct -> analyze -> certify_locality ->
// cm_certify and records whether every claim survived verification.  The
// JSON shapes here are frozen: field names and nesting are part of the
// external interface, and ordered_json keeps key order deterministic so
// reports are byte-stable across runs.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lrc/certify.hpp"
#include "lrc/code.hpp"
#include "lrc/families.hpp"
#include "lrc/util.hpp"

namespace lrc {

using ordered_json = nlohmann::ordered_json;

struct RunReport {
    ConstructionSpec spec;
    ClaimSheet sheet;
    AnalyzeResult verified;
    LocalityCertificate certificate;
    std::optional<BoundReport> bounds;  // absent when the certified delta is < 2
    bool params_agree = false;
    bool locality_agrees = false;
    bool griesmer_agrees = false;

    bool all_agree() const { return params_agree && locality_agrees && griesmer_agrees; }
};

inline RunReport run_construct_pipeline(const ConstructionSpec& spec,
                                        std::int64_t budget = enumeration_budget()) {
    RunReport rep;
    rep.spec = spec;
    Construction built = construct(spec);
    rep.sheet = built.sheet;
    rep.verified = analyze(built.code, budget);
    rep.certificate = certify_locality(built.code);
    if (rep.certificate.delta >= 2)
        rep.bounds = cm_certify(rep.verified.params, rep.certificate.r, rep.certificate.delta,
                                built.code.field().q());

    rep.params_agree = rep.verified.params == rep.sheet.predicted_params;
    const PredictedLocality& pl = rep.sheet.predicted_locality;
    rep.locality_agrees =
        !pl.covered || rep.certificate.delta >= static_cast<std::int64_t>(pl.delta);
    rep.griesmer_agrees =
        !rep.sheet.griesmer_claimed || griesmer_check(rep.verified.params, built.code.field().q());
    return rep;
}

inline ordered_json params_to_json(const CodeParams& p) {
    return ordered_json{{"n", p.n}, {"k", p.k}, {"d", p.d}};
}

inline ordered_json analyze_to_json(const AnalyzeResult& a) {
    ordered_json wd = ordered_json::object();
    for (const auto& [w, count] : a.weight_distribution) wd[std::to_string(w)] = count;
    return ordered_json{{"params", params_to_json(a.params)}, {"weight_distribution", wd}};
}

inline ordered_json spec_to_json(const ConstructionSpec& spec) {
    ordered_json sets = ordered_json::array();
    for (const Support& a : spec.sets) {
        ordered_json group = ordered_json::array();
        for (std::uint32_t i : a) group.push_back(i + 1);
        sets.push_back(std::move(group));
    }
    return ordered_json{{"family", family_name(spec.family)},
                        {"p", spec.p},
                        {"e", spec.e},
                        {"m", spec.m},
                        {"sets", std::move(sets)}};
}

inline ordered_json claims_to_json(const ClaimSheet& sheet) {
    ordered_json conditions = ordered_json::array();
    for (const ConditionCheck& c : sheet.conditions)
        conditions.push_back(ordered_json{
            {"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    ordered_json locality;
    if (sheet.predicted_locality.covered)
        locality = ordered_json{{"r", sheet.predicted_locality.r},
                                {"delta", sheet.predicted_locality.delta}};
    else
        locality = "uncovered";
    return ordered_json{{"predicted_params", params_to_json(sheet.predicted_params)},
                        {"predicted_locality", std::move(locality)},
                        {"griesmer_claimed", sheet.griesmer_claimed},
                        {"conditions", std::move(conditions)}};
}

inline ordered_json certificate_to_json(const LocalityCertificate& cert) {
    ordered_json sets = ordered_json::object();
    for (std::size_t i = 0; i < cert.repair_sets.size(); ++i) {
        ordered_json members = ordered_json::array();
        for (std::int64_t j : cert.repair_sets[i]) members.push_back(j + 1);
        sets[std::to_string(i + 1)] = std::move(members);
    }
    return ordered_json{{"r", cert.r},
                        {"delta", cert.delta},
                        {"repair_sets", std::move(sets)},
                        {"per_coordinate_best_delta", cert.per_coordinate_best_delta}};
}

inline ordered_json bounds_to_json(const BoundReport& b) {
    ordered_json table = ordered_json::array();
    for (const KoptRow& row : b.table)
        table.push_back(ordered_json{{"s", row.s},
                                     {"n_prime", row.n_prime},
                                     {"kopt_upper", row.kopt_upper},
                                     {"bound_name", row.bound_name}});
    ordered_json verdicts{{"k_optimal", b.k_optimal},
                          {"griesmer", b.griesmer ? "yes" : "no"},
                          {"singleton_rd_optimal", b.singleton_rd_optimal ? "yes" : "no"}};
    return ordered_json{{"singleton_rd", b.singleton_rd},
                        {"table", std::move(table)},
                        {"cm_upper", b.cm_upper},
                        {"s_star", b.s_star},
                        {"verdicts", std::move(verdicts)}};
}

inline ordered_json report_to_json(const RunReport& rep) {
    ordered_json bounds;
    if (rep.bounds) bounds = bounds_to_json(*rep.bounds);
    return ordered_json{{"spec", spec_to_json(rep.spec)},
                        {"claims", claims_to_json(rep.sheet)},
                        {"verified", analyze_to_json(rep.verified)},
                        {"certificate", certificate_to_json(rep.certificate)},
                        {"bounds", std::move(bounds)},
                        {"agreement",
                         ordered_json{{"params", rep.params_agree},
                                      {"locality", rep.locality_agrees},
                                      {"griesmer", rep.griesmer_agrees},
                                      {"all", rep.all_agree()}}}};
}

namespace detail {

inline std::uint32_t json_u32(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("spec json: '") + key + "' must be a non-negative integer");
    std::uint64_t v = j[key].get<std::uint64_t>();
    if (v > 0xffffffffull)
        throw ParseError(std::string("spec json: '") + key + "' too large");
    return static_cast<std::uint32_t>(v);
}

// 1-based indices from the wire, sorted and deduplicated check, to a 0-based Support
inline Support to_support(std::vector<std::uint64_t> raw, const char* what) {
    if (raw.empty()) throw ParseError(std::string(what) + ": empty set");
    std::sort(raw.begin(), raw.end());
    Support out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1) throw ParseError(std::string(what) + ": indices are 1-based");
        if (i > 0 && raw[i] == raw[i - 1])
            throw ParseError(std::string(what) + ": duplicate index " + std::to_string(raw[i]));
        if (raw[i] > 0xffffffffull)
            throw ParseError(std::string(what) + ": index too large");
        out.push_back(static_cast<std::uint32_t>(raw[i] - 1));
    }
    return out;
}

}  // namespace detail

inline ConstructionSpec spec_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("spec json: expected an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw ParseError("spec json: 'family' must be a string");
    ConstructionSpec spec;
    spec.family = family_from_name(j["family"].get<std::string>());
    spec.p = detail::json_u32(j, "p");
    spec.e = detail::json_u32(j, "e");
    spec.m = detail::json_u32(j, "m");
    if (j.contains("sets")) {
        if (!j["sets"].is_array()) throw ParseError("spec json: 'sets' must be an array");
        for (const auto& group : j["sets"]) {
            if (!group.is_array()) throw ParseError("spec json: each set must be an array");
            std::vector<std::uint64_t> raw;
            for (const auto& v : group) {
                if (!v.is_number_unsigned())
                    throw ParseError("spec json: set entries must be positive integers");
                raw.push_back(v.get<std::uint64_t>());
            }
            spec.sets.push_back(detail::to_support(std::move(raw), "spec json set"));
        }
    }
    return spec;
}

// Flag grammar: groups separated by ';', 1-based indices separated by ','.
// "1;2,3" means {1} and {2,3}.  An empty string means no sets.
inline std::vector<Support> parse_sets(std::string_view text) {
    std::vector<Support> out;
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t') cleaned.push_back(c);
    if (cleaned.empty()) return out;

    std::size_t start = 0;
    while (true) {
        std::size_t end = cleaned.find(';', start);
        std::string_view group{cleaned.data() + start,
                               (end == std::string::npos ? cleaned.size() : end) - start};
        if (group.empty()) throw ParseError("sets: empty group");
        std::vector<std::uint64_t> raw;
        std::size_t g = 0;
        while (true) {
            std::size_t comma = group.find(',', g);
            std::string_view item =
                group.substr(g, (comma == std::string_view::npos ? group.size() : comma) - g);
            if (item.empty()) throw ParseError("sets: empty index");
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw ParseError("sets: bad index '" + std::string(item) + "'");
            raw.push_back(value);
            if (comma == std::string_view::npos) break;
            g = comma + 1;
        }
        out.push_back(detail::to_support(std::move(raw), "sets"));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace lrc
