#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/report.hpp"

namespace {

// Accepts "3,5,7" and "3:25" / "3:25:2" range forms.
std::vector<int> parse_n_list(const std::vector<std::string>& specs) {
    std::vector<int> out;
    for (const auto& spec : specs) {
        std::stringstream ss(spec);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) continue;
            size_t c1 = piece.find(':');
            if (c1 == std::string::npos) {
                out.push_back(std::stoi(piece));
                continue;
            }
            size_t c2 = piece.find(':', c1 + 1);
            int lo = std::stoi(piece.substr(0, c1));
            int hi, step = 1;
            if (c2 == std::string::npos) {
                hi = std::stoi(piece.substr(c1 + 1));
            } else {
                hi = std::stoi(piece.substr(c1 + 1, c2 - c1 - 1));
                step = std::stoi(piece.substr(c2 + 1));
            }
            if (step < 1) throw CLI::ValidationError("--n", "range step must be >= 1");
            for (int v = lo; v <= hi; v += step) out.push_back(v);
        }
    }
    return out;
}

void add_common(CLI::App* cmd, qsc::RunConfig& config, std::vector<std::string>& statements,
                std::vector<std::string>& n_specs) {
    cmd->add_option("--statement", statements,
                    "statement ids (comma separated or repeated); 'all' = every applicable")
        ->delimiter(',');
    cmd->add_option("--n", n_specs, "n values: list '3,5,7' and/or ranges '3:25' or '3:25:2'");
    cmd->add_option("--m-mode", config.m_mode, "half, full, or both")
        ->check(CLI::IsMember({"half", "full", "both"}))
        ->capture_default_str();
    cmd->add_option("--trials", config.trials, "parameter specializations per (statement, n, mode)")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "deterministic sampling seed")->capture_default_str();
    cmd->add_option("--format", config.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", config.out, "write the report to a file instead of stdout");
    cmd->add_flag("--timings", config.timings,
                  "record per-check wall time (waives byte-identical reports)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for q-supercongruences"};
    app.set_version_flag("--version", std::string(qsc::kToolName) + " " + qsc::kToolVersion);
    app.require_subcommand(1);

    qsc::RunConfig config;
    std::vector<std::string> statements;
    std::vector<std::string> n_specs;
    std::vector<unsigned> primes;

    CLI::App* verify = app.add_subcommand("verify", "check statements over a range of n");
    add_common(verify, config, statements, n_specs);
    verify->add_flag("--certify", config.certify,
                     "grid mode: enough specializations to pin the parametric congruence");

    CLI::App* identity = app.add_subcommand("identity", "check the terminating series identities");
    add_common(identity, config, statements, n_specs);
    identity->add_option("--truncation", config.truncation, "highest truncation to check")
        ->capture_default_str();

    CLI::App* padic = app.add_subcommand("padic", "check the classical q -> 1 statements");
    add_common(padic, config, statements, n_specs);
    padic->add_option("--primes", primes, "odd primes to check")->delimiter(',');
    padic->add_option("--r", config.r, "prime-power exponent r (truncation (p^r-1)/2)")
        ->capture_default_str();

    CLI::App* scan = app.add_subcommand("scan", "verify with a raised Phi_n exponent");
    add_common(scan, config, statements, n_specs);
    scan->add_option("--extra-exponent", config.extra_exponent,
                     "replacement Phi_n exponent for the statement's modulus family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    config.statements = statements;
    config.primes = primes;
    if (verify->parsed()) config.command = qsc::RunConfig::Command::verify;
    if (identity->parsed()) config.command = qsc::RunConfig::Command::identity;
    if (padic->parsed()) config.command = qsc::RunConfig::Command::padic;
    if (scan->parsed()) config.command = qsc::RunConfig::Command::scan;

    try {
        config.ns = parse_n_list(n_specs);
        qsc::ReportDocument doc = qsc::run(config);
        std::string payload = qsc::emit(doc, config.format);
        if (config.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream file(config.out);
            if (!file) {
                std::cerr << "cannot open output file: " << config.out << "\n";
                return 2;
            }
            file << payload;
        }
        return qsc::exit_status(doc);
    } catch (const qsc::applicability_error& e) {
        std::cerr << "applicability error: " << e.what() << "\n";
        return 2;
    } catch (const qsc::degeneracy_error& e) {
        std::cerr << "degeneracy error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
