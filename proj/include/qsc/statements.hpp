#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsc/congruence.hpp"
#include "qsc/series.hpp"

namespace qsc {

/// Truncation mode: M = (n-1)/2 or M = n-1.
enum class MMode { half, full };

std::string to_string(MMode mode);
MMode mmode_from_string(const std::string& text);
int truncation_for(MMode mode, int n);

/// Named parameter assignment for one check.
class ParamSet {
public:
    void set(const std::string& name, const Rational& value) { values_[name] = value; }
    const Rational& get(const std::string& name) const;
    long get_int(const std::string& name) const;
    bool has(const std::string& name) const { return values_.count(name) != 0; }
    const std::map<std::string, Rational>& values() const { return values_; }

private:
    std::map<std::string, Rational> values_;
};

enum class SlotKind {
    rational,       // drawn from the sample pool
    index_to_half,  // integer in [0, (n-1)/2]
};

struct ParamSlot {
    std::string name;
    SlotKind kind = SlotKind::rational;
    // Admissibility beyond the pool guarantees; sees slots filled before this one.
    std::function<bool(const Rational&, const ParamSet&, int)> admissible;
};

enum class StatementKind { congruence, identity };

struct StatementInfo {
    std::string id;
    std::string summary;
    StatementKind kind = StatementKind::congruence;
    std::vector<ParamSlot> slots;
    bool half_only = false;  // fixed truncation (n-1)/2; no M sweep
    std::function<bool(int)> applicable;
    std::string applicability;
    bool supports_scan = false;    // modulus family with an adjustable Phi_n exponent
    int base_phi_exponent = 0;     // Phi_n exponent in the displayed modulus
    bool certifiable = false;      // slots independent: grid certification supported
};

const std::vector<std::string>& statement_ids();
bool statement_exists(const std::string& id);
const StatementInfo& statement_info(const std::string& id);

RatFunc statement_lhs(const std::string& id, int n, MMode mode, const ParamSet& params);
RatFunc statement_rhs(const std::string& id, int n, MMode mode, const ParamSet& params);
FactoredModulus statement_modulus(const std::string& id, int n, const ParamSet& params,
                                  int phi_exponent_override = -1);

struct TrialResult {
    ParamSet params;
    CongruenceReport report;
};

/// Samples admissible parameters, builds both sides, and checks
/// lhs - rhs against the statement's modulus, once per trial. Degenerate
/// samples are retried a bounded number of times.
std::vector<TrialResult> run_statement(const std::string& id, int n, MMode mode, uint64_t seed,
                                       int trials, int phi_exponent_override = -1);

/// Grid certification: every rational slot sweeps 2M+n+1 distinct admissible
/// integers (index slots sweep their whole range), which exceeds the
/// parameter degree of the cleared difference, so an all-pass is a proof of
/// the parametric congruence at this n.
std::vector<TrialResult> certify_statement(const std::string& id, int n, MMode mode);

/// Number of grid points per rational slot used by certification.
int certify_points(int n, MMode mode);

// Weights from the Chinese-remainder step and the a -> 1 limit.
RatFunc omega_factor(const Rational& a, int n);
RatFunc s_factor(const Rational& a, int n);
RatFunc r_factor(const Rational& a, const Rational& b, int n);

/// Compares the removable-singularity value at a = 1 of
/// (1-a q0^n)(a-q0^n){1-a^n-n(1-a)a^((n-1)/2)} / ((1-a)^2(1-a^n))
/// with [n]^2 (n^2-1)(1-q0)^2 / 24 at q0 = q_val.
bool lhopital_check(int n, const Rational& q_val);

/// Documented sampling pool; every member has |value| not in {0, 1}.
const std::vector<Rational>& sample_pool();

namespace builders {

// Shared building blocks, exposed for cross-checks in tests.
RatFunc six_param_lhs(int n, int M, const QMonomial& a, const QMonomial& b, const QMonomial& c,
                      const QMonomial& d);
RatFunc four_param_rhs_sum(int n, const QMonomial& a, const QMonomial& b, const QMonomial& c,
                           const QMonomial& d);
RatFunc brace_prefactor(int n);  // [n]q^((1-n)/2) (1 + [n]^2 (n^2-1)(1-q)^2 / 24)
RatFunc x_ratio(int n);          // (q^3;q^4)_((n-1)/2) / (q^5;q^4)_((n-1)/2)
RatFunc w1_weight(const Rational& b, int n);
RatFunc w2_weight(const Rational& a, int n);

}  // namespace builders

}  // namespace qsc
