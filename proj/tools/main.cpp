// Batch driver: runs identity/polylog/lattice/regulator suites from JSON
// experiment descriptors and emits canonical machine-readable reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "eklab/suites/runner.hpp"

namespace {

int run_descriptor(const std::string& path, bool with_timing) {
    using nlohmann::json;
    json desc;
    {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open descriptor " << path << "\n";
            return 2;
        }
        try {
            in >> desc;
        } catch (const json::parse_error& e) {
            std::cerr << "error: descriptor is not valid JSON: " << e.what() << "\n";
            return 2;
        }
    }
    try {
        eklab::suites::reject_unknown_fields(desc, {"kind", "seed", "precision_bits", "params", "output"},
                                             "descriptor");
        if (!desc.contains("kind") || !desc["kind"].is_string()) {
            std::cerr << "error: descriptor needs a string field 'kind'\n";
            return 2;
        }
        const std::string kind = desc["kind"].get<std::string>();
        std::uint64_t seed = 0;
        if (desc.contains("seed")) {
            if (!desc["seed"].is_number_unsigned() && !desc["seed"].is_number_integer()) {
                std::cerr << "error: 'seed' must be an integer\n";
                return 2;
            }
            seed = desc["seed"].get<std::uint64_t>();
        }
        long precision_bits = 0;
        if (desc.contains("precision_bits")) {
            precision_bits = desc["precision_bits"].get<long>();
        } else if (const char* env = std::getenv("EKLAB_PRECISION_BITS")) {
            precision_bits = std::atol(env);
        }
        if (precision_bits > 0) eklab::precision::set_contract_bits(precision_bits);

        nlohmann::json params = desc.contains("params") ? desc["params"] : nlohmann::json::object();
        eklab::Report report = eklab::suites::run_suite(kind, seed, params);

        std::string serialized = report.to_json(with_timing).dump(2);
        serialized += "\n";
        if (desc.contains("output") && desc["output"].is_string()) {
            std::ofstream out(desc["output"].get<std::string>(), std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write report to " << desc["output"].get<std::string>() << "\n";
                return 2;
            }
            out << serialized;
        } else {
            std::cout << serialized;
        }
        for (const auto& c : report.checks)
            std::cerr << "[" << c.status() << "] " << report.suite << "/" << c.name << " ("
                      << static_cast<long>(c.wall_ms) << " ms)\n";
        return report.all_passed() ? 0 : 1;
    } catch (const eklab::suites::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and multiprecision checks for polylogarithm, configuration-complex and "
                 "Eisenstein-Kronecker identities"};
    app.require_subcommand(1);

    std::string descriptor_path;
    bool with_timing = false;
    CLI::App* run = app.add_subcommand("run", "run the suite described by a JSON experiment descriptor");
    run->add_option("descriptor", descriptor_path, "path to the descriptor JSON")->required();
    run->add_flag("--timing", with_timing, "include wall-clock fields in the report (breaks byte-level "
                                           "reproducibility across runs)");

    CLI::App* list = app.add_subcommand("list", "list available suites");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const auto& [name, desc] : eklab::suites::list_suites()) std::cout << name << "  -  " << desc << "\n";
        return 0;
    }
    return run_descriptor(descriptor_path, with_timing);
}
