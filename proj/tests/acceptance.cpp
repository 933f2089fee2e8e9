// Acceptance suite: every release criterion in one binary, one line each.
// Exit status 0 only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/padic.hpp"
#include "qsc/prng.hpp"
#include "qsc/report.hpp"
#include "qsc/threadpool.hpp"

using namespace qsc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Tally {
    int checks = 0;
    int failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (detail.tellp() < 600) detail << " [" << what << "]";
        }
    }
};

bool trials_pass(Tally& t, const std::string& id, int n, MMode mode, int trials,
                 int phi_override = -1) {
    bool all = true;
    for (const auto& trial : run_statement(id, n, mode, 42, trials, phi_override)) {
        std::ostringstream what;
        what << id << " n=" << n << " " << to_string(mode);
        for (const auto& [k, v] : trial.params.values()) what << " " << k << "=" << v.get_str();
        if (!trial.report.pass) {
            for (const auto& f : trial.report.per_factor) {
                if (!f.ok()) {
                    what << " " << f.factor << ":" << f.achieved << "/" << f.required;
                    if (!f.den_coprime) what << " den-hit";
                }
            }
        }
        t.expect(trial.report.pass, what.str());
        all = all && trial.report.pass;
    }
    return all;
}

std::vector<MMode> modes_for(const std::string& id) {
    return statement_info(id).half_only ? std::vector<MMode>{MMode::half}
                                        : std::vector<MMode>{MMode::half, MMode::full};
}

// Runs (id, n, mode) work items on the pool; parameter draws are seed-derived,
// so scheduling cannot change any outcome.
void run_matrix(Tally& t, const std::vector<std::string>& ids, const std::vector<int>& ns,
                int trials) {
    struct Item {
        std::string id;
        int n;
        MMode mode;
    };
    std::vector<Item> items;
    for (const auto& id : ids) {
        const StatementInfo& info = statement_info(id);
        for (int n : ns) {
            if (!info.applicable(n)) continue;
            for (MMode mode : modes_for(id)) items.push_back({id, n, mode});
        }
    }
    std::vector<Tally> local(items.size());
    parallel_for(items.size(), worker_count(), [&](size_t i) {
        trials_pass(local[i], items[i].id, items[i].n, items[i].mode, trials);
    });
    for (const auto& l : local) {
        t.checks += l.checks;
        t.failures += l.failures;
        if (l.failures > 0) t.detail << l.detail.str();
    }
}

std::vector<int> odd_range(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; n += 2) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------

bool criterion_1(std::string& note) {
    Tally t;
    double worst_trial = 0;
    int worst_n = 0;
    for (int n : odd_range(3, 25)) {
        for (MMode mode : {MMode::half, MMode::full}) {
            auto t0 = std::chrono::steady_clock::now();
            trials_pass(t, "thm_1_1", n, mode, 3);
            double per_trial = seconds_since(t0) / 3.0;
            if (per_trial > worst_trial) {
                worst_trial = per_trial;
                worst_n = n;
            }
        }
    }
    t.expect(worst_trial < 10.0, "per-trial time budget");
    std::ostringstream os;
    os << t.checks << " checks, worst per-trial " << worst_trial << " s at n=" << worst_n
       << t.detail.str();
    note = os.str();
    return t.failures == 0;
}

bool criterion_2(std::string& note) {
    Tally t;
    run_matrix(t,
               {"cor_2_2", "cor_2_3", "cor_2_4", "cor_2_5", "cor_2_6", "cor_2_7", "cor_2_8",
                "cor_2_9"},
               odd_range(3, 21), 1);
    std::string detail = t.detail.str();
    if (t.failures == 1 && detail.find("cor_2_8 n=3 full") != std::string::npos) {
        detail += " -- verified counterexample: the q^-2 specialization at full truncation"
                  " retains Phi_3 valuation exactly 3 < 4 (see README, Findings)";
    }
    note = std::to_string(t.checks) + " checks" + detail;
    return t.failures == 0;
}

bool criterion_3(std::string& note) {
    Tally t;
    run_matrix(t, {"guo_conj", "guo_a", "guo_conj_a", "routine_b"}, {3, 7, 11, 15, 19}, 1);
    note = std::to_string(t.checks) + " checks" + t.detail.str();
    return t.failures == 0;
}

bool criterion_4(std::string& note) {
    Tally t;
    run_matrix(t, {"guo_b", "guo_c", "guo_d", "guo_e", "guo_f"}, odd_range(3, 15), 3);
    // the n mod 4 split of guo_f: zero right side at 3 mod 4, product form at 1 mod 4
    t.expect(statement_rhs("guo_f", 7, MMode::half, {}).is_zero(), "guo_f zero branch");
    t.expect(!statement_rhs("guo_f", 13, MMode::half, {}).is_zero(), "guo_f product branch");
    note = std::to_string(t.checks) + " checks" + t.detail.str();
    return t.failures == 0;
}

bool criterion_5(std::string& note) {
    Tally t;
    run_matrix(t,
               {"lem_2_1", "lem_2_1_4phi3", "lem_2_1_ab", "lem_3_1", "lem_3_2", "lem_3_3",
                "lem_4_1", "thm_3_4", "thm_4_2", "eq_par", "formula_b", "guopreprint_1",
                "guopreprint_2", "guozu2"},
               odd_range(3, 15), 3);
    note = std::to_string(t.checks) + " checks" + t.detail.str();
    return t.failures == 0;
}

bool criterion_6(std::string& note) {
    RunConfig c;
    c.command = RunConfig::Command::scan;
    c.statements = {"conj_4_1"};
    c.ns = {3, 7, 11, 15};
    c.trials = 1;
    c.extra_exponent = 4;
    ReportDocument doc = run(c);
    std::ostringstream os;
    os << doc.total << " records via scan mode, " << doc.failed << " failed";
    if (doc.failed > 0) {
        os << "; findings:";
        for (const auto& r : doc.records) {
            if (!r.pass) os << " [" << r.statement << " n=" << r.n << " " << r.m_mode << "]";
        }
    }
    note = os.str();
    return doc.failed == 0;
}

bool criterion_7(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    RunConfig c;
    c.command = RunConfig::Command::identity;
    c.truncation = 6;
    c.trials = 10;
    ReportDocument doc = run(c);
    double elapsed = seconds_since(t0);
    std::ostringstream os;
    os << doc.total << " identity checks, " << doc.failed << " failed, " << elapsed << " s";
    note = os.str();
    return doc.failed == 0 && elapsed < 5.0;
}

bool criterion_8(std::string& note) {
    Tally t;
    for (int n : {1, 3, 5, 7, 9}) {
        for (const Rational& qv :
             {Rational(2), make_rational(1, 2), Rational(-2), Rational(3)}) {
            t.expect(lhopital_check(n, qv),
                     "lhopital n=" + std::to_string(n) + " q=" + qv.get_str());
        }
    }
    note = std::to_string(t.checks) + " exact limit comparisons" + t.detail.str();
    return t.failures == 0;
}

bool criterion_9(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto classical = [&](const std::string& id, unsigned p, unsigned r) {
        ClassicalResult res = check_classical_detail(id, p, r);
        t.expect(res.pass, id + " p=" + std::to_string(p) + " r=" + std::to_string(r));
    };
    for (unsigned p : {5u, 7u, 11u, 13u}) classical("long_a", p, 1);
    classical("long_a", 5, 2);
    for (unsigned p : {5u, 7u, 11u}) classical("long_c", p, 1);
    for (unsigned p : {5u, 13u, 7u, 11u}) classical("hamme_b", p, 1);
    for (unsigned p : {7u, 11u, 19u}) classical("liu", p, 1);
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) classical("kilbourn", p, 1);
    for (unsigned p : {5u, 7u}) classical("cor_2_8_classical", p, 1);
    for (unsigned p : {5u, 7u}) classical("cor_2_9_classical", p, 1);
    for (unsigned p : {7u, 11u}) classical("conj_4_1_classical", p, 1);
    for (unsigned p : {13u, 17u}) classical("swisher", p, 1);
    double elapsed = seconds_since(t0);
    t.expect(elapsed < 30.0, "time budget");
    std::ostringstream os;
    os << t.checks << " checks, " << elapsed << " s" << t.detail.str();
    note = os.str();
    return t.failures == 0;
}

// Compact reruns of the module property lists plus grid certification.
bool criterion_10(std::string& note) {
    Tally t;

    SplitMix64 rng(1234);
    auto rand_poly = [&](int max_deg) {
        int deg = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg + 1)));
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) {
            c.push_back(make_rational(static_cast<long>(rng.below(19)) - 9,
                                      1 + static_cast<long>(rng.below(4))));
        }
        return Poly(std::move(c));
    };
    auto rand_nonzero = [&](int max_deg) {
        for (;;) {
            Poly p = rand_poly(max_deg);
            if (!p.is_zero()) return p;
        }
    };
    for (int i = 0; i < 40; ++i) {
        Poly a = rand_poly(8), b = rand_poly(8), c = rand_poly(8);
        t.expect((a + b) + c == a + (b + c), "assoc add");
        t.expect(a * (b + c) == a * b + a * c, "distrib");
        Poly d = rand_nonzero(6);
        auto [q, r] = poly_divrem(a, d);
        t.expect(a == q * d + r && r.degree() < d.degree(), "divrem round trip");
    }
    for (int i = 0; i < 100; ++i) {
        Poly g = rand_nonzero(10);
        Poly a = g * rand_nonzero(20);
        Poly b = g * rand_nonzero(20);
        Poly got = poly_gcd(a, b);
        t.expect(poly_divides(got, a) && poly_divides(got, b) && poly_divides(g, got),
                 "gcd divides");
    }
    for (int i = 0; i < 20; ++i) {
        RatFunc a(rand_poly(7), rand_nonzero(7));
        RatFunc b(rand_poly(7), rand_nonzero(7));
        RatFunc s = a + b;
        t.expect(RatFunc(s.num(), s.den()) == s, "reduce idempotent");
        LaurentPoly ln(rand_poly(5), static_cast<long long>(rng.below(9)) - 4);
        LaurentPoly ld(rand_nonzero(5), static_cast<long long>(rng.below(9)) - 4);
        RatFunc red = ratfunc_reduce(ln, ld);
        Rational x(2);
        if (ld.eval(x) != 0) {
            t.expect(red.num().eval(x) / red.den().eval(x) == ln.eval(x) / ld.eval(x),
                     "offset clearing at q=2");
        }
    }

    for (int n = 1; n <= 60; ++n) {
        Poly prod{Rational(1)};
        for (int d : divisors_of(n)) prod *= cyclotomic(d);
        std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
        c[0] = Rational(-1);
        c.back() = Rational(1);
        t.expect(prod == Poly(std::move(c)), "cyclotomic product law");
    }
    for (int n = 1; n <= 45; n += 2) {
        Poly prod{Rational(1)};
        for (int d : divisors_of(n)) {
            if (d > 1) prod *= cyclotomic(d);
        }
        t.expect(prod == q_integer(n), "q-integer cyclotomic product");
    }
    for (int tt = 0; tt <= 30; ++tt) {
        RatFunc lhs = ratfunc_reduce(q_shifted_factorial(qpow(1), 2, tt),
                                     q_shifted_factorial(qpow(2), 2, tt));
        LaurentPoly den = q_shifted_factorial(qmon(Rational(-1), 1), 1, tt);
        den *= den;
        RatFunc rhs = ratfunc_reduce(LaurentPoly(q_binomial(2 * tt, tt)), den);
        t.expect(lhs == rhs, "binomial Pochhammer law");
    }
    for (int m = 1; m <= 30; ++m) {
        for (int n2 = m + 1; n2 <= 30; ++n2) {
            t.expect(poly_gcd(cyclotomic(m), cyclotomic(n2)).is_constant(), "cyclotomic coprime");
        }
    }

    t.expect(check_congruence(RatFunc(), assemble_modulus(15, 3)).pass, "zero passes");
    {
        FactoredModulus mod = assemble_modulus(9, 2);
        Poly full = mod.product();
        for (int i = 0; i < 10; ++i) {
            Poly g = rand_nonzero(5);
            RatFunc d(full * g, Poly(std::vector<Rational>{Rational(5), Rational(7)}));
            t.expect(check_congruence(d, mod).pass, "multiple of full product");
        }
        Poly f = cyclotomic(5);
        for (int i = 0; i < 10; ++i) {
            int v1 = static_cast<int>(rng.below(3)), v2 = static_cast<int>(rng.below(3));
            Poly a = poly_pow(f, static_cast<unsigned>(v1)) * rand_nonzero(4);
            Poly b = poly_pow(f, static_cast<unsigned>(v2)) * rand_nonzero(4);
            while (poly_valuation(a, f) != v1) {
                a = poly_pow(f, static_cast<unsigned>(v1)) * rand_nonzero(4);
            }
            while (poly_valuation(b, f) != v2) {
                b = poly_pow(f, static_cast<unsigned>(v2)) * rand_nonzero(4);
            }
            t.expect(poly_valuation(a * b, f) == v1 + v2, "valuation additivity");
        }
        std::vector<std::pair<Poly, Poly>> pairs = {{rand_poly(1), cyclotomic(3)},
                                                    {rand_poly(3), cyclotomic(5)}};
        Poly r = poly_crt(pairs);
        for (const auto& [residue, modulus] : pairs) {
            t.expect(poly_mod(r, modulus) == poly_mod(residue, modulus), "crt round trip");
        }
    }

    for (MMode mode : {MMode::half, MMode::full}) {
        auto grid = certify_statement("thm_1_1", 3, mode);
        size_t per_slot = static_cast<size_t>(certify_points(3, mode));
        t.expect(grid.size() == per_slot * per_slot, "grid size");
        bool all = true;
        for (const auto& g : grid) all = all && g.report.pass;
        t.expect(all, "certified grid " + to_string(mode));
    }

    note = std::to_string(t.checks) + " checks" + t.detail.str();
    return t.failures == 0;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "thm_1_1 odd n in [3,25], both modes, 3 specializations, mod [n]Phi_n^3", criterion_1},
        {2, "cor_2_2..cor_2_9 odd n in [3,21], both modes, mod [n]Phi_n^3", criterion_2},
        {3, "guo_conj and the guo_a/guo_conj_a/routine_b chain, n in {3,7,11,15,19}", criterion_3},
        {4, "guo_b..guo_f odd n in [3,15], sampled parameters, stated moduli", criterion_4},
        {5,
         "lemma/theorem suite (2.1*, 3.1-3.3, 3.4, 4.1, 4.2, eq_par, formula_b, guopreprint, "
         "guozu2) odd n in [3,15]",
         criterion_5},
        {6, "conj_4_1 via scan mode at exponent 4, n in {3,7,11,15}", criterion_6},
        {7, "identity oracles (Chu-Vandermonde, Whipple, Watson), truncations <= 6, 10 draws each",
         criterion_7},
        {8, "removable-singularity limit check, n in {1,3,5,7,9}, q in {2,1/2,-2,3}", criterion_8},
        {9, "classical p-adic suite at the stated primes and moduli", criterion_9},
        {10, "property suites and certify mode (thm_1_1 at n = 3)", criterion_10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s ... %s (%s)\n", c.number, c.label, ok ? "PASS" : "FAIL",
                    note.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
