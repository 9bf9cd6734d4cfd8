// Batch front end: construct code families, analyze generator matrices,
// certify locality and optimality, query the Krawtchouk oracle, and re-run
// the verification sweeps.
//
// Exit codes: 0 = all claims verified, 1 = a verification mismatch,
// 2 = invalid input.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lrc/krawtchouk.hpp"
#include "lrc/report.hpp"
#include "lrc/sweep.hpp"

namespace {

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
};

PrimePower split_prime_power(std::int64_t q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string sets_to_string(const std::vector<lrc::Support>& sets) {
    std::string out;
    for (std::size_t g = 0; g < sets.size(); ++g) {
        if (g) out += ';';
        for (std::size_t i = 0; i < sets[g].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(sets[g][i] + 1);
        }
    }
    return out.empty() ? "-" : out;
}

std::string params_to_string(const lrc::CodeParams& p) {
    std::ostringstream os;
    os << "[" << p.n << "," << p.k << "," << p.d << "]";
    return os.str();
}

int cmd_construct(const std::string& family, std::uint32_t p, std::uint32_t e, std::uint32_t m,
                  const std::string& sets_text, const std::string& out_path,
                  const std::string& report_path) {
    lrc::ConstructionSpec spec;
    spec.family = lrc::family_from_name(family);
    spec.p = p;
    spec.e = e;
    spec.m = m;
    spec.sets = lrc::parse_sets(sets_text);

    lrc::RunReport rep = lrc::run_construct_pipeline(spec);
    if (!out_path.empty()) lrc::write_matrix_file(out_path, lrc::construct(spec).code);

    std::string json = lrc::report_to_json(rep).dump(2) + "\n";
    if (!report_path.empty()) {
        write_text_file(report_path, json);
        std::cout << params_to_string(rep.verified.params) << " delta=" << rep.certificate.delta
                  << " agreement=" << (rep.all_agree() ? "ok" : "MISMATCH") << "\n";
    } else {
        std::cout << json;
    }
    return rep.all_agree() ? 0 : 1;
}

int cmd_analyze(const std::string& path) {
    lrc::LinearCode code = lrc::read_matrix_file(path);
    std::cout << lrc::analyze_to_json(lrc::analyze(code)).dump(2) << "\n";
    return 0;
}

int cmd_certify(const std::string& path, std::int64_t r, std::int64_t delta, bool best,
                bool expect_optimal) {
    if (r != 2) throw std::invalid_argument("only r = 2 is supported");
    lrc::LinearCode code = lrc::read_matrix_file(path);
    std::int64_t target = best ? 0 : delta;
    lrc::LocalityCertificate cert = lrc::certify_locality(code, target);

    std::optional<lrc::BoundReport> bounds;
    if (cert.delta >= 2)
        bounds = lrc::cm_certify(lrc::analyze(code).params, cert.r, cert.delta, code.field().q());

    lrc::ordered_json out{{"certificate", lrc::certificate_to_json(cert)},
                          {"bounds", bounds ? lrc::bounds_to_json(*bounds) : lrc::ordered_json()}};
    std::cout << out.dump(2) << "\n";

    if (expect_optimal && (!bounds || bounds->k_optimal != "certified")) {
        std::cerr << "error: optimality not certified\n";
        return 1;
    }
    return 0;
}

int cmd_kraw(std::int64_t degree, std::int64_t weight, std::int64_t n, std::int64_t q,
             bool charsum) {
    std::int64_t value = lrc::kraw_eval(degree, weight, n, q);
    lrc::ordered_json out{
        {"degree", degree}, {"weight", weight}, {"n", n}, {"q", q}, {"value", value}};
    bool ok = true;
    if (charsum) {
        PrimePower pp = split_prime_power(q);
        lrc::Field f = lrc::Field::make(pp.p, pp.e);
        std::vector<std::uint32_t> x(static_cast<std::size_t>(n), 0);
        for (std::int64_t i = 0; i < weight; ++i) x[static_cast<std::size_t>(i)] = 1;
        std::int64_t oracle = lrc::char_sum_oracle(f, x, degree);
        out["char_sum"] = oracle;
        out["agree"] = oracle == value;
        ok = oracle == value;
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

struct ReproRow {
    std::string kind;
    lrc::ConstructionSpec spec;
    lrc::CodeParams predicted;
    lrc::CodeParams verified;
    std::int64_t delta = 0;
    bool pass = false;
};

ReproRow example_row(const std::string& kind, const lrc::ConstructionSpec& spec,
                     std::int64_t expect_delta) {
    lrc::RunReport rep = lrc::run_construct_pipeline(spec);
    ReproRow row;
    row.kind = kind;
    row.spec = spec;
    row.predicted = rep.sheet.predicted_params;
    row.verified = rep.verified.params;
    row.delta = rep.certificate.delta;
    row.pass = rep.all_agree() && row.delta == expect_delta && rep.bounds.has_value() &&
               rep.bounds->k_optimal == "certified";
    return row;
}

ReproRow sweep_row(const lrc::ConstructionSpec& spec) {
    lrc::SweepRow s = lrc::verify_instance(spec);
    ReproRow row;
    row.kind = lrc::family_name(spec.family);
    row.spec = spec;
    row.predicted = s.predicted;
    row.verified = s.verified;
    row.delta = s.certified_delta;
    row.pass = s.pass;
    return row;
}

int cmd_repro(std::int64_t grid_max_qm, bool as_json) {
    std::vector<ReproRow> rows;
    rows.push_back(
        example_row("example-1", {lrc::Family::subspace_union, 2, 2, 3, {{0}, {1, 2}}}, 3));
    rows.push_back(
        example_row("example-2", {lrc::Family::weight2_multi, 2, 1, 5, {{0, 1, 2}, {2, 3, 4}}}, 2));

    for (const lrc::GridPoint& g : lrc::subspace_union_grid_points(grid_max_qm))
        for (const lrc::ConstructionSpec& spec : lrc::subspace_union_grid(g.p, g.e, g.m))
            rows.push_back(sweep_row(spec));
    for (const lrc::GridPoint& g : lrc::weight2_grid_points(grid_max_qm))
        for (const lrc::ConstructionSpec& spec : lrc::weight2_grid(g.p, g.e, g.m, {3, 4}))
            rows.push_back(sweep_row(spec));

    std::size_t passed = 0;
    for (const ReproRow& row : rows)
        if (row.pass) ++passed;

    if (as_json) {
        lrc::ordered_json arr = lrc::ordered_json::array();
        for (const ReproRow& row : rows) {
            lrc::ordered_json sets = lrc::ordered_json::array();
            for (const lrc::Support& a : row.spec.sets) {
                lrc::ordered_json group = lrc::ordered_json::array();
                for (std::uint32_t i : a) group.push_back(i + 1);
                sets.push_back(std::move(group));
            }
            arr.push_back(lrc::ordered_json{
                {"kind", row.kind},
                {"q", lrc::checked_pow(row.spec.p, row.spec.e)},
                {"m", row.spec.m},
                {"sets", std::move(sets)},
                {"predicted", lrc::params_to_json(row.predicted)},
                {"verified", lrc::params_to_json(row.verified)},
                {"certified_delta", row.delta},
                {"pass", row.pass}});
        }
        std::cout << lrc::ordered_json{{"rows", std::move(arr)},
                                       {"passed", passed},
                                       {"total", rows.size()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << std::left << std::setw(6) << "state" << std::setw(16) << "kind"
                  << std::setw(4) << "q" << std::setw(3) << "m" << std::setw(14) << "sets"
                  << std::setw(14) << "predicted" << std::setw(14) << "verified"
                  << "delta\n";
        for (const ReproRow& row : rows)
            std::cout << std::left << std::setw(6) << (row.pass ? "PASS" : "FAIL") << std::setw(16)
                      << row.kind << std::setw(4) << lrc::checked_pow(row.spec.p, row.spec.e)
                      << std::setw(3) << row.spec.m << std::setw(14)
                      << sets_to_string(row.spec.sets) << std::setw(14)
                      << params_to_string(row.predicted) << std::setw(14)
                      << params_to_string(row.verified) << row.delta << "\n";
        std::cout << "passed " << passed << "/" << rows.size() << "\n";
    }
    return passed == rows.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"punctured projective code toolkit: construct, verify, certify"};
    app.require_subcommand(1);

    std::string family, sets_text, out_path, report_path, matrix_path;
    std::uint32_t p = 2, e = 1, m = 2;
    std::int64_t r = 2, delta = 0, degree = 0, weight = 0, n = 0, q = 0;
    std::int64_t grid_max_qm = std::int64_t{1} << 20;
    bool best = false, expect_optimal = false, charsum = false, as_json = false;

    CLI::App* construct = app.add_subcommand("construct", "build a code family and verify it");
    construct->add_option("--family", family, "simplex | subspace-union | weight2-single | weight2-multi")
        ->required();
    construct->add_option("--p", p, "field characteristic")->required();
    construct->add_option("--e", e, "field extension degree");
    construct->add_option("--m", m, "ambient dimension")->required();
    construct->add_option("--sets", sets_text, "support sets, e.g. \"1;2,3\" (1-based)");
    construct->add_option("--out", out_path, "write the generator matrix here");
    construct->add_option("--report", report_path, "write the JSON report here");

    CLI::App* analyze = app.add_subcommand("analyze", "exact parameters of a generator matrix");
    analyze->add_option("matrix", matrix_path, "generator matrix file")->required();

    CLI::App* certify = app.add_subcommand("certify", "locality certificate and dimension bounds");
    certify->add_option("matrix", matrix_path, "generator matrix file")->required();
    certify->add_option("--r", r, "locality parameter (only 2)");
    CLI::Option* opt_delta = certify->add_option("--delta", delta, "target delta");
    CLI::Option* opt_best = certify->add_flag("--best", best, "certify the best achievable delta");
    opt_delta->excludes(opt_best);
    opt_best->excludes(opt_delta);
    certify->add_flag("--expect-optimal", expect_optimal, "exit 1 unless dimension is certified");

    CLI::App* kraw = app.add_subcommand("kraw", "Krawtchouk values and the character-sum oracle");
    kraw->add_option("--degree", degree, "polynomial degree")->required();
    kraw->add_option("--weight,--a", weight, "evaluation point (vector weight)")->required();
    kraw->add_option("--n", n, "vector length")->required();
    kraw->add_option("--q", q, "alphabet size")->required();
    kraw->add_flag("--charsum", charsum, "cross-check against the enumeration oracle");

    CLI::App* repro = app.add_subcommand("repro", "re-verify the worked examples and sweep grids");
    repro->add_option("--grid-max-qm", grid_max_qm, "skip grid points with q^m above this");
    repro->add_flag("--json", as_json, "machine-readable rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(family, p, e, m, sets_text, out_path, report_path);
        if (analyze->parsed()) return cmd_analyze(matrix_path);
        if (certify->parsed())
            return cmd_certify(matrix_path, r, delta, opt_best->count() || !opt_delta->count(),
                               expect_optimal);
        if (kraw->parsed()) return cmd_kraw(degree, weight, n, q, charsum);
        if (repro->parsed()) return cmd_repro(grid_max_qm, as_json);
    } catch (const lrc::CertificationFailure& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::logic_error& ex) {
        std::cerr << "claim violation: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
