#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "frobtsct/render.hpp"

using namespace frobtsct;

namespace {

struct RunConfig {
    long p = 0;
    long m = 0;
    std::string fusion_case;
    std::string target = "tsct";
    std::string format = "json";
    bool format_explicit = false; // verify prints text unless json was asked for
    std::string out_path;         // empty = stdout
    long oracle_cap = 2000;
};

int write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << cfg.out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int run(const RunConfig& cfg) {
    FrobSpec spec;
    try {
        spec = validate_spec(cfg.p, cfg.m, fusion_from_name(cfg.fusion_case));
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    }

    if (cfg.target == "verify") {
        Report rep = verify_spec_report(spec, cfg.oracle_cap);
        bool as_json = cfg.format_explicit && cfg.format == "json";
        std::string text = as_json ? json_string(document_json("verify", spec, report_json(rep)))
                                   : report_text(rep);
        int rc = write_output(cfg, text);
        if (rc != 0) return rc;
        return rep.ok() ? 0 : 3;
    }

    std::string text;
    if (cfg.target == "chartab") {
        CharTable X = irr_frobenius(spec);
        if (cfg.format == "json")
            text = json_string(document_json("chartab", spec, chartab_json(X)));
        else if (cfg.format == "csv")
            text = chartab_csv(X);
        else
            text = chartab_latex(X);
    } else if (cfg.target == "dec") {
        DecMatrix dec = decomposition_matrix(spec, 1);
        if (cfg.format == "json")
            text = json_string(document_json("dec", spec, dec_json(dec)));
        else if (cfg.format == "csv")
            text = dec_csv(dec);
        else
            text = dec_latex(dec);
    } else if (cfg.target == "proj") {
        CharTable X = irr_frobenius(spec);
        CharTable proj = projective_table(decomposition_matrix(spec, 1), restrict_to_p_regular(X));
        if (cfg.format == "json")
            text = json_string(document_json("proj", spec, chartab_json(proj)));
        else if (cfg.format == "csv")
            text = chartab_csv(proj);
        else
            text = chartab_latex(proj);
    } else { // tsct
        TSCT t = build_tsct(spec);
        if (cfg.format == "json")
            text = json_string(document_json("tsct", spec, tsct_json(t)));
        else if (cfg.format == "csv")
            text = tsct_csv(t);
        else
            text = tsct_latex(t);
    }
    return write_output(cfg, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trivial source character tables of (C_p x C_p) : C_m Frobenius groups"};

    RunConfig cfg;
    if (const char* env = std::getenv("FROBTSCT_ORACLE_CAP")) cfg.oracle_cap = std::atol(env);

    std::string config_path;
    auto* opt_p = app.add_option("--p", cfg.p, "odd prime p");
    auto* opt_m = app.add_option("--m", cfg.m, "order m of the cyclic complement");
    auto* opt_case = app.add_option("--case", cfg.fusion_case, "fusion case")
                         ->check(CLI::IsMember({"maximal", "minimal"}));
    auto* opt_target = app.add_option("--target", cfg.target, "what to compute")
                           ->check(CLI::IsMember({"chartab", "dec", "proj", "tsct", "verify"}));
    auto* opt_format = app.add_option("--format", cfg.format, "output format")
                           ->check(CLI::IsMember({"json", "csv", "latex"}));
    auto* opt_out = app.add_option("--out", cfg.out_path, "output file (default: stdout)");
    auto* opt_cap = app.add_option("--oracle-cap", cfg.oracle_cap, "verification enumeration cap on |G|");
    app.add_option("--config", config_path, "JSON config file; explicit flags win");

    CLI11_PARSE(app, argc, argv);

    if (!config_path.empty()) {
        nlohmann::json j;
        try {
            j = load_json_file(config_path);
        } catch (const std::exception& ex) {
            std::cerr << ex.what() << "\n";
            return 2;
        }
        if (!opt_p->count() && j.contains("p")) cfg.p = j["p"].get<long>();
        if (!opt_m->count() && j.contains("m")) cfg.m = j["m"].get<long>();
        if (!opt_case->count() && j.contains("case")) cfg.fusion_case = j["case"].get<std::string>();
        if (!opt_target->count() && j.contains("target")) cfg.target = j["target"].get<std::string>();
        if (!opt_format->count() && j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (!opt_out->count() && j.contains("out")) cfg.out_path = j["out"].get<std::string>();
        if (!opt_cap->count() && j.contains("oracle_cap")) cfg.oracle_cap = j["oracle_cap"].get<long>();
        if (!opt_format->count() && j.contains("format")) cfg.format_explicit = true;
    }
    if (opt_format->count()) cfg.format_explicit = true;

    if (cfg.p == 0 || cfg.m == 0 || cfg.fusion_case.empty()) {
        std::cerr << "required: --p, --m, --case (flags or config file)\n";
        return 2;
    }

    try {
        return run(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
