#include "qsc/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsc/padic.hpp"
#include "qsc/prng.hpp"
#include "qsc/threadpool.hpp"

namespace qsc {

std::string command_name(RunConfig::Command command) {
    switch (command) {
        case RunConfig::Command::verify: return "verify";
        case RunConfig::Command::identity: return "identity";
        case RunConfig::Command::padic: return "padic";
        case RunConfig::Command::scan: return "scan";
    }
    return "?";
}

namespace {

using nlohmann::json;

std::vector<FactorRecord> factor_records(const CongruenceReport& report) {
    std::vector<FactorRecord> out;
    out.reserve(report.per_factor.size());
    for (const auto& fc : report.per_factor) {
        out.push_back({fc.factor, fc.required, fc.achieved, fc.den_valuation, fc.den_coprime});
    }
    return out;
}

std::map<std::string, std::string> param_strings(const ParamSet& params) {
    std::map<std::string, std::string> out;
    for (const auto& [name, value] : params.values()) out[name] = value.get_str();
    return out;
}

bool wants_all(const std::vector<std::string>& ids) {
    return ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end();
}

std::set<MMode> requested_modes(const std::string& m_mode) {
    if (m_mode == "half") return {MMode::half};
    if (m_mode == "full") return {MMode::full};
    if (m_mode == "both") return {MMode::half, MMode::full};
    throw std::invalid_argument("unknown m-mode: " + m_mode);
}

struct WorkItem {
    std::string statement;
    int n = 0;
    MMode mode = MMode::half;
    bool has_mode = false;
    unsigned p = 0;  // padic
};

// identity oracles ----------------------------------------------------------

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {"chu_vandermonde", "whipple_3f2", "watson_8phi7"};
    return names;
}

Rational draw(SplitMix64& rng) {
    const auto& pool = sample_pool();
    return pool[static_cast<size_t>(rng.below(pool.size()))];
}

CheckRecord run_identity(const std::string& name, int n, int trial, uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, name, static_cast<uint64_t>(n), 7, static_cast<uint64_t>(trial)));
    CheckRecord rec;
    rec.statement = name;
    rec.n = n;
    rec.m_mode = "";
    rec.trial = trial;
    rec.modulus = "identity";
    for (int attempt = 0; attempt < 50; ++attempt) {
        try {
            RatFunc lhs, rhs;
            if (name == "chu_vandermonde") {
                Rational b = draw(rng), c = draw(rng);
                rec.params = {{"b", b.get_str()}, {"c", c.get_str()}};
                lhs = chu_vandermonde_lhs(n, b, c);
                rhs = chu_vandermonde_rhs(n, b, c);
            } else if (name == "whipple_3f2") {
                Rational b = draw(rng), c = draw(rng);
                rec.params = {{"b", b.get_str()}, {"c", c.get_str()}};
                lhs = whipple_lhs(n, b, c);
                rhs = whipple_rhs(n, b, c);
            } else if (name == "watson_8phi7") {
                Rational g = draw(rng), b = draw(rng), c = draw(rng), d = draw(rng), e = draw(rng);
                rec.params = {{"g", g.get_str()},
                              {"b", b.get_str()},
                              {"c", c.get_str()},
                              {"d", d.get_str()},
                              {"e", e.get_str()}};
                lhs = watson_lhs(n, g, b, c, d, e);
                rhs = watson_rhs(n, g, b, c, d, e);
            } else {
                throw std::invalid_argument("unknown identity: " + name);
            }
            rec.pass = (lhs == rhs);
            rec.notes = rec.pass ? "exact identity" : "identity mismatch";
            return rec;
        } catch (const degeneracy_error&) {
            continue;
        }
    }
    throw degeneracy_error(name + ": degenerate after resampling");
}

// verify/scan ----------------------------------------------------------------

std::vector<CheckRecord> run_verify_item(const RunConfig& config, const WorkItem& item,
                                         int phi_override) {
    std::vector<CheckRecord> out;
    std::vector<TrialResult> trials;
    if (config.certify) {
        trials = certify_statement(item.statement, item.n, item.mode);
    } else {
        trials = run_statement(item.statement, item.n, item.mode, config.seed, config.trials,
                               phi_override);
    }
    const StatementInfo& info = statement_info(item.statement);
    for (size_t t = 0; t < trials.size(); ++t) {
        CheckRecord rec;
        rec.statement = item.statement;
        rec.n = item.n;
        rec.m_mode = info.half_only ? "half" : to_string(item.mode);
        rec.trial = static_cast<int>(t);
        rec.params = param_strings(trials[t].params);
        rec.modulus = info.kind == StatementKind::identity
                          ? "identity"
                          : statement_modulus(item.statement, item.n, trials[t].params, phi_override).str();
        rec.factors = factor_records(trials[t].report);
        rec.denominator_coprime = trials[t].report.denominator_coprime;
        rec.pass = trials[t].report.pass;
        rec.notes = trials[t].report.notes;
        out.push_back(std::move(rec));
    }
    return out;
}

CheckRecord run_padic_item(const WorkItem& item, unsigned r) {
    ClassicalResult res = check_classical_detail(item.statement, item.p, r);
    CheckRecord rec;
    rec.statement = item.statement;
    rec.n = static_cast<int>(item.p);
    rec.m_mode = "";
    rec.trial = 0;
    rec.params = {{"p", std::to_string(item.p)}, {"r", std::to_string(r)}};
    rec.modulus = "p^" + std::to_string(res.modulus_exponent);
    FactorRecord fr;
    fr.factor = "p";
    fr.required = static_cast<int>(res.modulus_exponent);
    fr.achieved = static_cast<int>(res.achieved);
    rec.factors = {fr};
    rec.pass = res.pass;
    rec.notes = "lhs = " + res.lhs + "; rhs = " + res.rhs;
    return rec;
}

void sort_records(std::vector<CheckRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.statement != b.statement) return a.statement < b.statement;
        if (a.n != b.n) return a.n < b.n;
        if (a.m_mode != b.m_mode) return a.m_mode < b.m_mode;
        return a.trial < b.trial;
    });
}

}  // namespace

ReportDocument run(const RunConfig& config) {
    ReportDocument doc;
    doc.config = config;

    std::vector<WorkItem> items;
    const bool all = wants_all(config.statements);

    if (config.command == RunConfig::Command::verify || config.command == RunConfig::Command::scan) {
        if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
        if (config.ns.empty()) throw std::invalid_argument("no n values given");
        if (config.command == RunConfig::Command::scan && config.extra_exponent < 1) {
            throw std::invalid_argument("scan requires --extra-exponent >= 1");
        }
        std::vector<std::string> ids = all ? statement_ids() : config.statements;
        std::set<MMode> modes = requested_modes(config.m_mode);
        for (const auto& id : ids) {
            const StatementInfo& info = statement_info(id);  // throws on unknown id
            for (int n : config.ns) {
                if (n < 1 || n % 2 == 0 || !info.applicable(n)) {
                    if (all) continue;
                    throw applicability_error(id + ": requires " + info.applicability +
                                              " (got n = " + std::to_string(n) + ")");
                }
                if (config.command == RunConfig::Command::scan && !info.supports_scan) {
                    if (all) continue;
                    throw std::invalid_argument(id + ": modulus has no adjustable Phi_n exponent");
                }
                if (config.certify && !info.certifiable) {
                    if (all) continue;
                    throw std::invalid_argument(id + ": certification unsupported");
                }
                std::set<MMode> supported =
                    info.half_only ? std::set<MMode>{MMode::half} : std::set<MMode>{MMode::half, MMode::full};
                std::vector<MMode> use;
                for (MMode m : modes) {
                    if (supported.count(m)) use.push_back(m);
                }
                if (use.empty()) {
                    if (all) continue;
                    throw std::invalid_argument(id + ": requested m-mode not supported");
                }
                // A half-only statement under "both" runs once.
                if (info.half_only) use = {MMode::half};
                for (MMode m : use) {
                    WorkItem item;
                    item.statement = id;
                    item.n = n;
                    item.mode = m;
                    item.has_mode = true;
                    items.push_back(std::move(item));
                }
            }
        }
    } else if (config.command == RunConfig::Command::padic) {
        if (config.primes.empty()) throw std::invalid_argument("no primes given");
        std::vector<std::string> ids = all ? classical_ids() : config.statements;
        for (const auto& id : ids) {
            for (unsigned p : config.primes) {
                if (all && !classical_applicable(id, p, config.r)) continue;
                WorkItem item;
                item.statement = id;
                item.p = p;
                items.push_back(std::move(item));
            }
        }
    } else {  // identity
        if (config.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
        std::vector<std::string> ids = all ? identity_names() : config.statements;
        for (const auto& id : ids) {
            if (std::find(identity_names().begin(), identity_names().end(), id) ==
                identity_names().end()) {
                throw std::invalid_argument("unknown identity: " + id);
            }
            for (int n = 1; n <= config.truncation; ++n) {
                WorkItem item;
                item.statement = id;
                item.n = n;
                items.push_back(std::move(item));
            }
        }
    }

    std::vector<std::vector<CheckRecord>> results(items.size());
    int phi_override = config.command == RunConfig::Command::scan ? config.extra_exponent : -1;
    parallel_for(items.size(), worker_count(), [&](size_t i) {
        auto start = std::chrono::steady_clock::now();
        std::vector<CheckRecord> recs;
        if (config.command == RunConfig::Command::padic) {
            recs.push_back(run_padic_item(items[i], config.r));
        } else if (config.command == RunConfig::Command::identity) {
            for (int t = 0; t < config.trials; ++t) {
                recs.push_back(run_identity(items[i].statement, items[i].n, t, config.seed));
            }
        } else {
            recs = run_verify_item(config, items[i], phi_override);
        }
        if (config.timings) {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                  start)
                            .count();
            for (auto& r : recs) r.elapsed_ms = ms / static_cast<double>(recs.size());
        }
        results[i] = std::move(recs);
    });

    for (auto& recs : results) {
        for (auto& r : recs) doc.records.push_back(std::move(r));
    }
    sort_records(doc.records);
    doc.total = static_cast<int>(doc.records.size());
    for (const auto& r : doc.records) (r.pass ? doc.passed : doc.failed)++;
    return doc;
}

int exit_status(const ReportDocument& doc) { return doc.failed == 0 ? 0 : 1; }

namespace {

json config_json(const RunConfig& c) {
    json j;
    j["command"] = command_name(c.command);
    j["statements"] = c.statements;
    j["n"] = c.ns;
    j["primes"] = c.primes;
    j["r"] = c.r;
    j["m_mode"] = c.m_mode;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["certify"] = c.certify;
    if (c.extra_exponent > 0) {
        j["extra_exponent"] = c.extra_exponent;
    } else {
        j["extra_exponent"] = nullptr;
    }
    j["truncation"] = c.truncation;
    j["format"] = c.format;
    j["timings"] = c.timings;
    return j;
}

json record_json(const CheckRecord& r) {
    json j;
    j["statement"] = r.statement;
    j["n"] = r.n;
    j["m_mode"] = r.m_mode;
    j["trial"] = r.trial;
    j["params"] = r.params;
    j["modulus"] = r.modulus;
    json factors = json::array();
    for (const auto& f : r.factors) {
        factors.push_back({{"factor", f.factor},
                           {"required", f.required},
                           {"achieved", f.achieved},
                           {"den_valuation", f.den_valuation},
                           {"den_coprime", f.den_coprime}});
    }
    j["factors"] = factors;
    j["denominator_coprime"] = r.denominator_coprime;
    j["pass"] = r.pass;
    j["notes"] = r.notes;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string emit_csv(const ReportDocument& doc) {
    size_t max_factors = 0;
    for (const auto& r : doc.records) max_factors = std::max(max_factors, r.factors.size());
    std::ostringstream os;
    os << "statement,n,m_mode,trial,params,modulus,denominator_coprime,pass,notes,elapsed_ms";
    for (size_t i = 1; i <= max_factors; ++i) {
        os << ",factor_" << i << ",required_" << i << ",achieved_" << i << ",den_valuation_" << i;
    }
    os << "\n";
    for (const auto& r : doc.records) {
        std::ostringstream params;
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) params << ";";
            first = false;
            params << k << "=" << v;
        }
        os << csv_quote(r.statement) << "," << r.n << "," << r.m_mode << "," << r.trial << ","
           << csv_quote(params.str()) << "," << csv_quote(r.modulus) << ","
           << (r.denominator_coprime ? "true" : "false") << "," << (r.pass ? "true" : "false") << ","
           << csv_quote(r.notes) << "," << r.elapsed_ms;
        for (size_t i = 0; i < max_factors; ++i) {
            if (i < r.factors.size()) {
                os << "," << csv_quote(r.factors[i].factor) << "," << r.factors[i].required << ","
                   << r.factors[i].achieved << "," << r.factors[i].den_valuation;
            } else {
                os << ",,,,";
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string emit_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << doc.tool << " " << doc.version << " " << command_name(doc.config.command) << ": "
       << doc.passed << "/" << doc.total << " passed\n";
    for (const auto& r : doc.records) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.statement << " n=" << r.n;
        if (!r.m_mode.empty()) os << " m=" << r.m_mode;
        os << " trial=" << r.trial;
        if (!r.params.empty()) {
            os << " params(";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) os << ", ";
                first = false;
                os << k << "=" << v;
            }
            os << ")";
        }
        if (!r.modulus.empty()) os << " mod " << r.modulus;
        for (const auto& f : r.factors) {
            os << " | " << f.factor << ": " << f.achieved << "/" << f.required;
            if (!f.den_coprime) os << " (denominator hit, v=" << f.den_valuation << ")";
        }
        if (!r.notes.empty()) os << " -- " << r.notes;
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string emit(const ReportDocument& doc, const std::string& format) {
    if (format == "json") {
        json j;
        j["tool"] = doc.tool;
        j["version"] = doc.version;
        j["config"] = config_json(doc.config);
        json records = json::array();
        for (const auto& r : doc.records) records.push_back(record_json(r));
        j["records"] = records;
        j["summary"] = {{"total", doc.total}, {"passed", doc.passed}, {"failed", doc.failed}};
        return j.dump(2) + "\n";
    }
    if (format == "csv") return emit_csv(doc);
    if (format == "text") return emit_text(doc);
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace qsc
