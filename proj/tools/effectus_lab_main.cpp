// effectus-lab: load finite models, check their axioms, enumerate small
// structures, and run the law suites with seeded, reproducible reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "efflab/enumerate.hpp"
#include "efflab/json_io.hpp"
#include "efflab/laws.hpp"
#include "efflab/product_backend.hpp"
#include "efflab/set_backend.hpp"
#include "efflab/tensor.hpp"

namespace {

using efflab::BlockSignature;
using efflab::EffectTable;
using efflab::LawReport;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

// Glob with '*' and '?' over law ids.
bool glob_match(const std::string& pat, const std::string& s, size_t pi = 0,
                size_t si = 0) {
    while (pi < pat.size() && si < s.size() && (pat[pi] == s[si] || pat[pi] == '?')) {
        ++pi;
        ++si;
    }
    if (pi == pat.size()) return si == s.size();
    if (pat[pi] == '*') {
        for (size_t skip = si; skip <= s.size(); ++skip)
            if (glob_match(pat, s, pi + 1, skip)) return true;
        return false;
    }
    return false;
}

void print_report(const LawReport& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.law;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", r.residual);
    std::cout << "  residual=" << buf;
    const std::string statement = efflab::law_statement(r.law);
    if (!statement.empty()) std::cout << "  | " << statement;
    std::cout << "\n";
    if (!r.pass && r.counterexample)
        std::cout << "      counterexample: " << *r.counterexample << "\n";
}

int cmd_check(const std::string& path, const std::string& kind,
              const std::string& json_out) {
    EffectTable table;
    try {
        table = efflab::effect_table_from_json(efflab::load_json_file(path));
    } catch (const efflab::ParseError& e) {
        std::cerr << "parse error at " << path << ":" << e.line() << ":" << e.col() << ": "
                  << e.what() << "\n";
        return kExitInputError;
    } catch (const efflab::Error& e) {
        std::cerr << "input error (" << e.code() << "): " << e.what() << "\n";
        return kExitInputError;
    }

    LawReport rep;
    try {
        if (kind == "ea") rep = check_effect_algebra(table);
        else if (kind == "monoid") rep = check_effect_monoid(table);
        else rep = check_sea_table(table);
    } catch (const efflab::Error& e) {
        if (std::string(e.code()) == "missing-product-table") {
            std::cout << "FAIL  " << (kind == "sea" ? "def2.57" : "def2.15")
                      << "  no product table present\n";
            return kExitLawFailure;
        }
        std::cerr << "input error (" << e.code() << "): " << e.what() << "\n";
        return kExitInputError;
    }

    print_report(rep);
    if (rep.pass && table.product && kind != "ea") {
        const auto idem = efflab::idempotents(table);
        std::cout << "idempotents: " << idem.elements.size()
                  << (idem.irreducible ? " (irreducible)" : " (reducible)")
                  << "; boolean: " << (efflab::boolean_verdict(table) ? "yes" : "no")
                  << "\n";
    }
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << efflab::to_json(rep).dump(2) << "\n";
    }
    return rep.pass ? kExitPass : kExitLawFailure;
}

int cmd_enumerate(int max_size, const std::string& out_dir, bool sea) {
    efflab::EnumerationResult res;
    try {
        res = sea ? efflab::enumerate_sea_tables(max_size)
                  : efflab::enumerate_effect_monoids(max_size);
    } catch (const efflab::Error& e) {
        std::cerr << "input error (" << e.code() << "): " << e.what() << "\n";
        return kExitInputError;
    }

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::map<int, int> index;
        json summary;
        summary["schema"] = "enumeration-summary/1";
        summary["max_size"] = max_size;
        summary["kind"] = sea ? "sea" : "monoid";
        json files = json::array();
        for (const auto& s : res.structures) {
            const int n = s.table.size();
            const std::string name = std::string(sea ? "sea" : "monoid") + "_size" +
                                     std::to_string(n) + "_" +
                                     std::to_string(index[n]++) + ".json";
            std::ofstream out(std::filesystem::path(out_dir) / name);
            json j = efflab::to_json(s.table);
            j["boolean"] = s.boolean;
            out << j.dump(2) << "\n";
            files.push_back(json{{"file", name}, {"size", n}, {"boolean", s.boolean}});
        }
        summary["structures"] = files;
        summary["count_by_size"] = json::object();
        summary["ea_classes_by_size"] = json::object();
        for (const auto& [k, v] : res.count_by_size)
            summary["count_by_size"][std::to_string(k)] = v;
        for (const auto& [k, v] : res.ea_classes_by_size)
            summary["ea_classes_by_size"][std::to_string(k)] = v;
        std::ofstream out(std::filesystem::path(out_dir) / "summary.json");
        out << summary.dump(2) << "\n";
    }

    std::cout << (sea ? "sea tables" : "effect monoids") << " up to isomorphism:\n";
    for (const auto& [k, v] : res.count_by_size) {
        std::cout << "  size " << k << ": " << v
                  << " (effect-algebra classes with a product: "
                  << res.ea_classes_by_size.at(k) << ")\n";
    }
    int boolean_count = 0;
    for (const auto& s : res.structures)
        if (s.boolean) ++boolean_count;
    std::cout << "boolean verdicts: " << boolean_count << "/" << res.structures.size()
              << "\n";
    return kExitPass;
}

struct VerifyConfig {
    std::string backend = "matrix";
    std::vector<int> dims = {2};
    int set_size = 2;
    std::string laws = "*";
    int trials = 50;
    uint64_t seed = 1;
    double tol = 1e-8;
    std::string json_out;
    std::string mutant;  // "", "ceil", "seq"
};

int cmd_verify(const VerifyConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<LawReport> reports;
    efflab::LawOptions opts;
    if (cfg.mutant == "ceil") opts.ceil = efflab::LawOptions::Ceil::threshold_half;
    if (cfg.mutant == "seq") opts.seq = efflab::LawOptions::Seq::no_sqrt;

    try {
        if (cfg.backend == "matrix") {
            const BlockSignature sig{cfg.dims};
            auto collect = [&](std::vector<LawReport> batch) {
                reports.insert(reports.end(), batch.begin(), batch.end());
            };
            collect(run_jordan_laws(sig, cfg.trials, cfg.seed, cfg.tol, opts));
            collect(run_diamond_laws(sig, cfg.trials, cfg.seed, cfg.tol, opts));
            collect(run_effectus_laws(sig, cfg.trials, cfg.seed, cfg.tol));
            // Tensor pair from the first two dims (repeated when single).
            const BlockSignature fa{{cfg.dims[0]}};
            const BlockSignature fb{{cfg.dims.size() > 1 ? cfg.dims[1] : cfg.dims[0]}};
            if (fa.total_dim() * fb.total_dim() <= 36)
                collect(run_tensor_laws(fa, fb, cfg.trials, cfg.seed, cfg.tol));
        } else if (cfg.backend == "set") {
            reports = run_set_laws(efflab::SetObject{cfg.set_size}, cfg.trials, cfg.seed);
        } else if (cfg.backend == "product") {
            const efflab::ProdObject obj{efflab::SetObject{cfg.set_size},
                                         BlockSignature{cfg.dims}};
            reports = run_product_laws(obj, cfg.trials, cfg.seed);
        } else {
            std::cerr << "unknown backend " << cfg.backend << "\n";
            return kExitInputError;
        }
    } catch (const efflab::Error& e) {
        std::cerr << "input error (" << e.code() << "): " << e.what() << "\n";
        return kExitInputError;
    }

    // Law filter.
    std::vector<LawReport> selected;
    for (auto& r : reports)
        if (glob_match(cfg.laws, r.law)) selected.push_back(std::move(r));
    if (selected.empty()) {
        std::cerr << "unknown-law-id: no law matches '" << cfg.laws << "'\n";
        return kExitInputError;
    }

    bool all_pass = true;
    for (const auto& r : selected) {
        print_report(r);
        all_pass = all_pass && r.pass;
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << selected.size()
              << " laws, " << wall << " s)\n";

    if (!cfg.json_out.empty()) {
        json manifest;
        manifest["schema"] = efflab::kManifestSchema;
        manifest["version"] = kVersion;
        manifest["config"] = {
            {"backend", cfg.backend}, {"dims", cfg.dims},   {"set_size", cfg.set_size},
            {"laws", cfg.laws},       {"trials", cfg.trials}, {"seed", cfg.seed},
            {"tol", cfg.tol},         {"mutant", cfg.mutant},
        };
        json reps = json::array();
        for (const auto& r : selected) {
            json j = efflab::to_json(r);
            const std::string statement = efflab::law_statement(r.law);
            if (!statement.empty()) j["statement"] = statement;
            reps.push_back(j);
        }
        manifest["reports"] = reps;
        manifest["pass"] = all_pass;
        manifest["wall_clock_s"] = wall;
        std::ofstream out(cfg.json_out);
        out << manifest.dump(2) << "\n";
    }
    return all_pass ? kExitPass : kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effectus-lab: finite models and law suites for effect algebras,\n"
                 "sequential products and matrix effectuses"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // check
    std::string check_path, check_kind = "ea", check_json;
    auto* check = app.add_subcommand("check", "check a table file against its axioms");
    check->add_option("file", check_path, "effect table json")->required();
    check->add_option("--kind", check_kind, "ea|monoid|sea")
        ->check(CLI::IsMember({"ea", "monoid", "sea"}));
    check->add_option("--json", check_json, "write the report as json");

    // enumerate
    int enum_max = 4;
    std::string enum_out;
    bool enum_sea = false;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "exhaustively enumerate finite structures");
    enumerate->add_option("--max-size", enum_max, "largest carrier size")->required();
    enumerate->add_option("--out", enum_out, "directory for structure files");
    enumerate->add_flag("--sea", enum_sea, "enumerate sequential products instead");

    // verify
    VerifyConfig cfg;
    std::string dims_csv = "2";
    auto* verify = app.add_subcommand("verify", "run law suites with seeded sampling");
    verify->add_option("--backend", cfg.backend, "matrix|set|product")
        ->check(CLI::IsMember({"matrix", "set", "product"}));
    verify->add_option("--dims", dims_csv, "comma-separated block dimensions");
    verify->add_option("--set-size", cfg.set_size, "carrier size for the set backend");
    verify->add_option("--laws", cfg.laws, "law id glob, e.g. 'prop3.4.*'");
    verify->add_option("--trials", cfg.trials, "sampled trials per law")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "rng seed");
    verify->add_option("--tol", cfg.tol, "residual tolerance");
    verify->add_option("--json", cfg.json_out, "manifest output path");
    verify->add_option("--mutant", cfg.mutant, "inject a broken primitive: ceil|seq")
        ->check(CLI::IsMember({"", "ceil", "seq"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(check_path, check_kind, check_json);
        if (*enumerate) return cmd_enumerate(enum_max, enum_out, enum_sea);
        // Parse dims.
        cfg.dims.clear();
        std::stringstream ss(dims_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.dims.push_back(std::stoi(item));
        if (cfg.dims.empty()) {
            std::cerr << "input error: --dims must name at least one block\n";
            return kExitInputError;
        }
        return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}
