#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsc/statements.hpp"

namespace qsc {

inline constexpr const char* kToolName = "qsc";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    enum class Command { verify, identity, padic, scan };

    Command command = Command::verify;
    std::vector<std::string> statements;  // empty or {"all"} = every applicable id
    std::vector<int> ns;
    std::vector<unsigned> primes;
    unsigned r = 1;
    std::string m_mode = "both";  // half | full | both
    int trials = 3;
    uint64_t seed = 42;
    bool certify = false;
    int extra_exponent = -1;  // scan: replacement Phi_n exponent
    int truncation = 6;       // identity command: highest truncation
    std::string format = "json";
    std::string out;       // empty = stdout
    bool timings = false;  // opt-in: per-record wall time (breaks byte-identity)
};

struct FactorRecord {
    std::string factor;
    int required = 0;
    int achieved = 0;
    int den_valuation = 0;
    bool den_coprime = true;
};

struct CheckRecord {
    std::string statement;
    int n = 0;  // n for q-statements, p for classical ones, truncation for identities
    std::string m_mode;
    int trial = 0;
    std::map<std::string, std::string> params;
    std::string modulus;
    std::vector<FactorRecord> factors;
    bool denominator_coprime = true;
    bool pass = false;
    std::string notes;
    double elapsed_ms = 0.0;
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    RunConfig config;
    std::vector<CheckRecord> records;
    int total = 0;
    int passed = 0;
    int failed = 0;
};

/// Executes the configured checks on a bounded worker pool (QSC_WORKERS,
/// default hardware concurrency) and returns deterministically ordered records.
ReportDocument run(const RunConfig& config);

/// json (canonical), csv (per-factor valuations flattened into columns), text.
std::string emit(const ReportDocument& doc, const std::string& format);

/// 0 when every record passed, 1 otherwise. Config and degeneracy errors are
/// thrown from run() and map to exit status 2 in the CLI.
int exit_status(const ReportDocument& doc);

std::string command_name(RunConfig::Command command);

}  // namespace qsc
