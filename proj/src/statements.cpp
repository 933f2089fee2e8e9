#include "qsc/statements.hpp"

#include <algorithm>

#include "qsc/prng.hpp"

namespace qsc {

std::string to_string(MMode mode) { return mode == MMode::half ? "half" : "full"; }

MMode mmode_from_string(const std::string& text) {
    if (text == "half") return MMode::half;
    if (text == "full") return MMode::full;
    throw std::invalid_argument("unknown m-mode: " + text);
}

int truncation_for(MMode mode, int n) { return mode == MMode::half ? (n - 1) / 2 : n - 1; }

const Rational& ParamSet::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw std::invalid_argument("missing parameter: " + name);
    return it->second;
}

long ParamSet::get_int(const std::string& name) const {
    const Rational& v = get(name);
    if (v.get_den() != 1) throw std::invalid_argument("parameter is not an integer: " + name);
    return static_cast<long>(v.get_num().get_si());
}

const std::vector<Rational>& sample_pool() {
    static const std::vector<Rational> pool = {
        make_rational(2),     make_rational(3),      make_rational(5),
        make_rational(1, 2),  make_rational(3, 2),   make_rational(-2),
        make_rational(-1, 3), make_rational(5, 2),   make_rational(7, 3),
    };
    return pool;
}

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

namespace {

using Up = std::vector<std::pair<QMonomial, int>>;

const QMonomial Q1{1, 1};   // q
const QMonomial Q2{1, 2};   // q^2

QMonomial over_q2(const QMonomial& x) { return qmon_inv(x) * Q2; }  // q^2 / x

RatFunc sum_spec(Up upper, Up lower, Rational zc, long long z1, long long z2, bool bracket, int M) {
    SumSpec spec;
    spec.upper = std::move(upper);
    spec.lower = std::move(lower);
    spec.arg_coef = std::move(zc);
    spec.arg_lin = z1;
    spec.arg_quad = z2;
    spec.bracket_4k1 = bracket;
    return q_hyper_sum(spec, M);
}

RatFunc laurent_rf(const LaurentPoly& num) { return ratfunc_from(num); }

RatFunc poch_ratio(const LaurentPoly& num, const LaurentPoly& den) { return ratfunc_reduce(num, den); }

LaurentPoly q_int_l(int n) { return LaurentPoly(q_integer(n)); }

}  // namespace

namespace builders {

RatFunc x_ratio(int n) {
    int m = (n - 1) / 2;
    return poch_ratio(q_shifted_factorial(qpow(3), 4, m), q_shifted_factorial(qpow(5), 4, m));
}

RatFunc brace_prefactor(int n) {
    Poly nn = q_integer(n);
    Poly one_minus_q = Poly(Rational(1)) - Poly::variable();
    Rational scal = make_rational(static_cast<long>(n) * n - 1, 24);
    Poly brace = Poly(Rational(1)) + scal * (nn * nn * one_minus_q * one_minus_q);
    return laurent_rf(LaurentPoly(nn * brace, (1 - static_cast<long long>(n)) / 2));
}

RatFunc w1_weight(const Rational& b, int n) {
    int m = (n - 1) / 2;
    LaurentPoly num = LaurentPoly::monomial(rational_pow(b, m), -m) *
                      q_shifted_factorial(qmon(Rational(1) / b, 2), 2, m);
    LaurentPoly den = q_shifted_factorial(qmon(b, 2), 2, m);
    return poch_ratio(num, den);
}

RatFunc w2_weight(const Rational& a, int n) {
    int m = (n - 1) / 2;
    LaurentPoly num = q_shifted_factorial(qpow(1), 2, m);
    num *= num;
    LaurentPoly den = q_shifted_factorial(qmon(a, 2), 2, m) *
                      q_shifted_factorial(qmon(Rational(1) / a, 2), 2, m);
    return poch_ratio(num, den);
}

RatFunc six_param_lhs(int n, int M, const QMonomial& a, const QMonomial& b, const QMonomial& c,
                      const QMonomial& d) {
    (void)n;
    QMonomial arg = b * Q1 / (c * d);  // bq/cd
    return sum_spec({{a * Q1, 2}, {Q1 / a, 2}, {Q1 / b, 2}, {c * Q1, 2}, {d * Q1, 2}, {Q1, 2}},
                    {{over_q2(a), 2}, {a * Q2, 2}, {b * Q2, 2}, {over_q2(c), 2}, {over_q2(d), 2}, {Q2, 2}},
                    arg.coef, arg.qexp, 0, true, M);
}

RatFunc four_param_rhs_sum(int n, const QMonomial& a, const QMonomial& b, const QMonomial& c,
                           const QMonomial& d) {
    QMonomial q_over_cd = Q1 / (c * d);
    return sum_spec({{a * Q1, 2}, {Q1 / a, 2}, {Q1 / b, 2}, {q_over_cd, 2}},
                    {{Q2, 2}, {over_q2(b), 2}, {over_q2(c), 2}, {over_q2(d), 2}}, Rational(1), 2, 0,
                    false, (n - 1) / 2);
}

}  // namespace builders

using builders::brace_prefactor;
using builders::four_param_rhs_sum;
using builders::six_param_lhs;
using builders::w1_weight;
using builders::w2_weight;
using builders::x_ratio;

RatFunc omega_factor(const Rational& a, int n) {
    if (a == 0 || a == 1 || a == -1) throw degeneracy_error("omega_factor: a in {0, 1, -1}");
    if (n < 1 || n % 2 == 0) throw std::domain_error("omega_factor: n must be odd and positive");
    Rational an = rational_pow(a, n);
    Rational am = rational_pow(a, (n - 1) / 2);
    Rational brace = Rational(1) - Rational(n) * (Rational(1) - a) * am / (Rational(1) - an);
    Rational inv_sq = Rational(1) / ((Rational(1) - a) * (Rational(1) - a));
    Poly p = poly_one_minus_aqn(a, n) * poly_a_minus_qn(a, n);
    Poly body = Poly(Rational(1)) + (brace * inv_sq) * p;
    return laurent_rf(LaurentPoly(body, (1 - static_cast<long long>(n)) / 2));
}

RatFunc s_factor(const Rational& a, int n) {
    if (a == 0 || a == 1 || a == -1) throw degeneracy_error("s_factor: a in {0, 1, -1}");
    if (n < 1 || n % 2 == 0) throw std::domain_error("s_factor: n must be odd and positive");
    Rational inv_sq = Rational(1) / ((Rational(1) - a) * (Rational(1) - a));
    // (1 - q^n)(1 + a^2 - a - a q^n) / (1-a)^2 * q^((1-n)/2)
    Poly one_minus_qn = Poly(Rational(1)) - Poly::monomial(Rational(1), n);
    Poly bracket = Poly(Rational(1) + a * a - a) - Poly::monomial(a, n);
    RatFunc t1 = laurent_rf(LaurentPoly(inv_sq * (one_minus_qn * bracket),
                                        (1 - static_cast<long long>(n)) / 2));
    RatFunc t2 = RatFunc(inv_sq * (poly_one_minus_aqn(a, n) * poly_a_minus_qn(a, n)),
                         Poly(Rational(1))) *
                 w2_weight(a, n);
    return t1 - t2;
}

RatFunc r_factor(const Rational& a, const Rational& b, int n) {
    if (a == 0 || a == 1 || a == -1 || b == 0 || b == 1 || b == -1) {
        throw degeneracy_error("r_factor: parameters in {0, 1, -1}");
    }
    Rational denom = (a - b) * (Rational(1) - a * b);
    if (denom == 0) throw degeneracy_error("r_factor: (a - b)(1 - ab) = 0");
    Rational inv = Rational(1) / denom;
    Poly b_minus_qn = Poly(b) - Poly::monomial(Rational(1), n);
    Poly bracket = Poly(a * b - 1 - a * a) + Poly::monomial(a, n);
    RatFunc w1c(inv * (b_minus_qn * bracket), Poly(Rational(1)));
    RatFunc w2c(inv * (poly_one_minus_aqn(a, n) * poly_a_minus_qn(a, n)), Poly(Rational(1)));
    return w1c * w1_weight(b, n) + w2c * w2_weight(a, n);
}

bool lhopital_check(int n, const Rational& q_val) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("lhopital_check: n must be odd and positive");
    if (q_val == 0 || q_val == 1 || q_val == -1) {
        throw degeneracy_error("lhopital_check: q_val in {0, 1, -1}");
    }
    Rational Q = rational_pow(q_val, n);
    if (Q == 1) throw degeneracy_error("lhopital_check: q_val^n = 1");
    int m = (n - 1) / 2;
    // Everything below lives in the variable a.
    Poly one_minus_Qa = Poly(Rational(1)) - Poly::monomial(Q, 1);
    Poly a_minus_Q = Poly::variable() - Poly(Q);
    Poly a_pow_n = Poly::monomial(Rational(1), n);
    // 1 - a^n - n (1 - a) a^m
    Poly brace = Poly(Rational(1)) - a_pow_n -
                 Rational(n) * ((Poly(Rational(1)) - Poly::variable()) * Poly::monomial(Rational(1), m));
    Poly one_minus_a = Poly(Rational(1)) - Poly::variable();
    Poly den = one_minus_a * one_minus_a * (Poly(Rational(1)) - a_pow_n);
    RatFunc F(one_minus_Qa * a_minus_Q * brace, den);
    Rational lhs = F.eval(Rational(1));
    Rational nn = q_integer(n).eval(q_val);
    Rational rhs = nn * nn * make_rational(static_cast<long>(n) * n - 1, 24) * (Rational(1) - q_val) *
                   (Rational(1) - q_val);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

struct Statement {
    StatementInfo info;
    std::function<RatFunc(int, int, const ParamSet&)> lhs;
    std::function<RatFunc(int, int, const ParamSet&)> rhs;
    std::function<FactoredModulus(int, const ParamSet&, int)> modulus;
};

bool any_odd(int) { return true; }
bool three_mod_four(int n) { return n % 4 == 3; }

const auto slot_nonzero = [](const Rational& v, const ParamSet&, int) { return v != 0; };
const auto slot_nonunit = [](const Rational& v, const ParamSet&, int) {
    return v != 0 && v != 1 && v != -1;
};

ParamSlot rational_slot(std::string name, bool unit_ok) {
    ParamSlot s;
    s.name = std::move(name);
    s.kind = SlotKind::rational;
    s.admissible = unit_ok ? slot_nonzero : slot_nonunit;
    return s;
}

ParamSlot index_slot(std::string name) {
    ParamSlot s;
    s.name = std::move(name);
    s.kind = SlotKind::index_to_half;
    s.admissible = [](const Rational&, const ParamSet&, int) { return true; };
    return s;
}

QMonomial rat_mono(const Rational& v) { return qmon(v, 0); }

// Modulus helpers reused across entries.
FactoredModulus mod_n_phi(int n, int e, int override_e, std::vector<Poly> extras = {}) {
    return assemble_modulus(n, override_e > 0 ? override_e : e, std::move(extras));
}

FactoredModulus mod_phi_only(int n, int e, int override_e, std::vector<Poly> extras = {}) {
    return modulus_phi(n, override_e > 0 ? override_e : e, std::move(extras));
}

// Summands shared by several statements.
RatFunc lhs_guo_conj_family(int n, int M) {
    (void)n;
    return sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q2, 4}},
                    {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 4}}, Rational(-1), 1, 0, true, M);
}

RatFunc rhs_guozu2(int n) {
    if (n % 4 == 3) return RatFunc();
    int m4 = (n - 1) / 4;
    LaurentPoly num = q_shifted_factorial(Q2, 4, m4);
    num *= num;
    num *= LaurentPoly::monomial(Rational(1), (n - 1) / 2);
    LaurentPoly den = q_shifted_factorial(qpow(4), 4, m4);
    den *= den;
    return poch_ratio(num, den);
}

std::map<std::string, Statement>& build_registry() {
    static std::map<std::string, Statement> reg;

    auto add = [&](Statement st) { reg.emplace(st.info.id, std::move(st)); };

    auto cor_entry = [&](std::string id, std::string summary, Up lhs_up, Up lhs_low, Rational lz,
                         long long lz1, long long lz2, Up rhs_up, Up rhs_low, Rational rz,
                         long long rz1, long long rz2) {
        Statement st;
        st.info.id = std::move(id);
        st.info.summary = std::move(summary);
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [lhs_up, lhs_low, lz, lz1, lz2](int, int M, const ParamSet&) {
            return sum_spec(lhs_up, lhs_low, lz, lz1, lz2, true, M);
        };
        st.rhs = [rhs_up, rhs_low, rz, rz1, rz2](int n, int, const ParamSet&) {
            return brace_prefactor(n) *
                   sum_spec(rhs_up, rhs_low, rz, rz1, rz2, false, (n - 1) / 2);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    };

    // --- main two-parameter congruence -------------------------------------
    {
        Statement st;
        st.info.id = "thm_1_1";
        st.info.summary =
            "two-parameter congruence mod [n]Phi_n^3 for the [4k+1](q;q^2)_k^4(cq,dq;q^2)_k summand";
        st.info.slots = {rational_slot("c", true), rational_slot("d", true)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int, int M, const ParamSet& p) {
            const Rational& c = p.get("c");
            const Rational& d = p.get("d");
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {qmon(c, 1), 2}, {qmon(d, 1), 2}},
                            {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {qmon(Rational(1) / c, 2), 2},
                             {qmon(Rational(1) / d, 2), 2}},
                            Rational(1) / (c * d), 1, 0, true, M);
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            const Rational& c = p.get("c");
            const Rational& d = p.get("d");
            RatFunc sum = sum_spec(
                {{Q1, 2}, {Q1, 2}, {Q1, 2}, {qmon(Rational(1) / (c * d), 1), 2}},
                {{Q2, 2}, {Q2, 2}, {qmon(Rational(1) / c, 2), 2}, {qmon(Rational(1) / d, 2), 2}},
                Rational(1), 2, 0, false, (n - 1) / 2);
            return brace_prefactor(n) * sum;
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    }

    // --- corollaries of the main congruence ---------------------------------
    cor_entry("cor_2_2", "c = d = 1 case: [4k+1](q;q^2)_k^6/(q^2;q^2)_k^6 q^k",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
              {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}}, Rational(1), 1, 0,
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}},
              Rational(1), 2, 0);
    cor_entry("cor_2_3", "c = d = -1 case with (q^2;q^4)_k^2 factors",
              {{Q1, 2}, {Q1, 2}, {Q2, 4}, {Q2, 4}}, {{Q2, 2}, {Q2, 2}, {qpow(4), 4}, {qpow(4), 4}},
              Rational(1), 1, 0, {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
              {{qpow(4), 4}, {qpow(4), 4}}, Rational(1), 2, 0);
    cor_entry("cor_2_4", "c = -1, d -> infinity case with q^(k^2+k)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q2, 4}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 4}},
              Rational(1), 1, 1, {{Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {qpow(4), 4}}, Rational(1),
              2, 0);
    cor_entry("cor_2_5", "c = -1, d -> 0 case with q^(-k^2)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q2, 4}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 4}},
              Rational(1), 0, -1, {{Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {qpow(4), 4}},
              Rational(-1), 1, 0);
    cor_entry("cor_2_6", "c, d -> infinity case with q^(2k^2+k)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}},
              Rational(1), 1, 2, {{Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}}, Rational(1), 2,
              0);
    cor_entry("cor_2_7", "c, d -> 0 case with q^(-2k^2-k)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}},
              Rational(1), -1, -2, {{Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}}, Rational(-1),
              0, -1);
    cor_entry("cor_2_8", "c = d = q^(-2) case with (q^(-1);q^2)_k^2 and q^(5k)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {qpow(-1), 2}, {qpow(-1), 2}},
              {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 2}, {qpow(4), 2}}, Rational(1), 5, 0,
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {qpow(5), 2}},
              {{Q2, 2}, {Q2, 2}, {qpow(4), 2}, {qpow(4), 2}}, Rational(1), 2, 0);
    cor_entry("cor_2_9", "c = q^(-2), d = 1 case with (q^(-1);q^2)_k and q^(3k)",
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {qpow(-1), 2}},
              {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 2}}, Rational(1), 3, 0,
              {{Q1, 2}, {Q1, 2}, {Q1, 2}, {qpow(3), 2}},
              {{Q2, 2}, {Q2, 2}, {Q2, 2}, {qpow(4), 2}}, Rational(1), 2, 0);

    // --- prior results and the section-2 chain ------------------------------
    {
        Statement st;
        st.info.id = "guo_a";
        st.info.summary = "sum_(k<=(n-1)/2) of (q;q^2)_k^2(q^2;q^4)_k summand = [n] X mod Phi_n^3";
        st.info.half_only = true;
        st.info.applicable = three_mod_four;
        st.info.applicability = "n == 3 (mod 4)";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int n, int, const ParamSet&) {
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q2, 4}}, {{Q2, 2}, {Q2, 2}, {qpow(4), 4}},
                            Rational(1), 2, 0, false, (n - 1) / 2);
        };
        st.rhs = [](int n, int, const ParamSet&) { return laurent_rf(q_int_l(n)) * x_ratio(n); };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 3, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_conj";
        st.info.summary = "alternating (q;q^2)_k^4(q^2;q^4)_k summand = [n]^2 q^((1+n)/2) X mod [n]Phi_n^3";
        st.info.applicable = three_mod_four;
        st.info.applicability = "n == 3 (mod 4)";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int n, int M, const ParamSet&) { return lhs_guo_conj_family(n, M); };
        st.rhs = [](int n, int, const ParamSet&) {
            Poly nn = q_integer(n);
            return laurent_rf(LaurentPoly(nn * nn, (1 + static_cast<long long>(n)) / 2)) * x_ratio(n);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_conj_a";
        st.info.summary = "alternating summand = [n]^2 q^((1-n)/2){1 + ...} X mod [n]Phi_n^3";
        st.info.applicable = three_mod_four;
        st.info.applicability = "n == 3 (mod 4)";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int n, int M, const ParamSet&) { return lhs_guo_conj_family(n, M); };
        st.rhs = [](int n, int, const ParamSet&) {
            return laurent_rf(q_int_l(n)) * brace_prefactor(n) * x_ratio(n);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "routine_b";
        st.info.summary = "[n]^2 q^((1-n)/2){1 + ...} X = [n]^2 q^((1+n)/2) X mod [n]Phi_n^3";
        st.info.half_only = true;
        st.info.applicable = three_mod_four;
        st.info.applicability = "n == 3 (mod 4)";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int n, int, const ParamSet&) {
            return laurent_rf(q_int_l(n)) * brace_prefactor(n) * x_ratio(n);
        };
        st.rhs = [](int n, int, const ParamSet&) {
            Poly nn = q_integer(n);
            return laurent_rf(LaurentPoly(nn * nn, (1 + static_cast<long long>(n)) / 2)) * x_ratio(n);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_b";
        st.info.summary = "two-parameter congruence mod [n](1-aq^n)(a-q^n) with argument c^k";
        st.info.slots = {rational_slot("a", false), rational_slot("c", false)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int, int M, const ParamSet& p) {
            const Rational& a = p.get("a");
            const Rational& c = p.get("c");
            return sum_spec({{qmon(a, 1), 2}, {qmon(Rational(1) / a, 1), 2},
                             {qmon(Rational(1) / c, 1), 2}, {Q1, 2}},
                            {{qmon(Rational(1) / a, 2), 2}, {qmon(a, 2), 2}, {qmon(c, 2), 2}, {Q2, 2}},
                            c, 0, 0, true, M);
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * w1_weight(p.get("c"), n);
        };
        st.modulus = [](int n, const ParamSet& p, int) {
            const Rational& a = p.get("a");
            return modulus_q_integer(n, {poly_one_minus_aqn(a, n), poly_a_minus_qn(a, n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_c";
        st.info.summary = "[4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 summand = [n]q^((1-n)/2){1 + ...} mod [n]Phi_n^3";
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 3;
        st.info.certifiable = true;
        st.lhs = [](int, int M, const ParamSet&) {
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
                            {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}}, Rational(1), 0, 0, true, M);
        };
        st.rhs = [](int n, int, const ParamSet&) { return brace_prefactor(n); };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 3, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_d";
        st.info.summary = "sixth-power summand = [n]q^((1-n)/2) (fourth-power half sum) mod [n]Phi_n^2";
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.info.certifiable = true;
        st.lhs = [](int, int M, const ParamSet&) {
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
                            {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}}, Rational(1), 1,
                            0, true, M);
        };
        st.rhs = [](int n, int, const ParamSet&) {
            RatFunc sum = sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
                                   {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}}, Rational(1), 2, 0, false,
                                   (n - 1) / 2);
            return laurent_rf(LaurentPoly(q_integer(n), (1 - static_cast<long long>(n)) / 2)) * sum;
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 2, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_e";
        st.info.summary = "alternating fifth-power summand with q^(k^2+k) mod [n]Phi_n^2";
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.info.certifiable = true;
        st.lhs = [](int, int M, const ParamSet&) {
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}, {Q1, 2}},
                            {{Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}, {Q2, 2}}, Rational(-1), 1, 1, true,
                            M);
        };
        st.rhs = [](int n, int, const ParamSet&) {
            RatFunc sum = sum_spec({{Q1, 2}, {Q1, 2}, {Q1, 2}}, {{Q2, 2}, {Q2, 2}, {Q2, 2}},
                                   Rational(1), 2, 0, false, (n - 1) / 2);
            return laurent_rf(LaurentPoly(q_integer(n), (1 - static_cast<long long>(n)) / 2)) * sum;
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 2, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guo_f";
        st.info.summary = "alternating (q;q^2)_k^4(q^2;q^4)_k summand mod [n]Phi_n^2 with n mod 4 case split";
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.info.certifiable = true;
        st.lhs = [](int n, int M, const ParamSet&) { return lhs_guo_conj_family(n, M); };
        st.rhs = [](int n, int, const ParamSet&) -> RatFunc {
            if (n % 4 == 3) return RatFunc();
            int m4 = (n - 1) / 4;
            LaurentPoly num = q_shifted_factorial(Q2, 4, m4);
            num *= num;
            num *= q_int_l(n);
            LaurentPoly den = q_shifted_factorial(qpow(4), 4, m4);
            den *= den;
            return poch_ratio(num, den);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 2, oe); };
        add(std::move(st));
    }

    // --- section 2 lemma forms ----------------------------------------------
    {
        Statement st;
        st.info.id = "lem_2_1";
        st.info.summary = "[n]^2 (q^3;q^4)/(q^5;q^4) ratio vanishes mod [n]";
        st.info.half_only = true;
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet&) {
            Poly nn = q_integer(n);
            return laurent_rf(LaurentPoly(nn * nn, 0)) * x_ratio(n);
        };
        st.rhs = [](int, int, const ParamSet&) { return RatFunc(); };
        st.modulus = [](int n, const ParamSet&, int) { return modulus_q_integer(n); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "lem_2_1_4phi3";
        st.info.summary = "terminating 4phi3 evaluation equal to [n] (q^3;q^4)/(q^5;q^4)";
        st.info.kind = StatementKind::identity;
        st.info.half_only = true;
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet&) {
            SeriesSpec spec;
            spec.upper_params = {qpow(1 - n), qpow(1 + n), Q1, qmon(Rational(-1), 1)};
            spec.lower_params = {qpow(2 + n), qpow(2 - n), qmon(Rational(-1), 2)};
            spec.base_step = 2;
            spec.argument = Q2;
            spec.truncation = (n - 1) / 2;
            return phi_series(spec);
        };
        st.rhs = [](int n, int, const ParamSet&) { return laurent_rf(q_int_l(n)) * x_ratio(n); };
        st.modulus = [](int, const ParamSet&, int) { return FactoredModulus{}; };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "lem_2_1_ab";
        st.info.summary = "[n](q^(1-n),q^(1+n);q^2)_k/(q^(2-n),q^(2+n);q^2)_k vanishes mod [n]";
        st.info.half_only = true;
        st.info.slots = {index_slot("k")};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet& p) {
            int k = static_cast<int>(p.get_int("k"));
            LaurentPoly num = q_int_l(n) * q_shifted_factorial(qpow(1 - n), 2, k) *
                              q_shifted_factorial(qpow(1 + n), 2, k);
            LaurentPoly den =
                q_shifted_factorial(qpow(2 - n), 2, k) * q_shifted_factorial(qpow(2 + n), 2, k);
            return poch_ratio(num, den);
        };
        st.rhs = [](int, int, const ParamSet&) { return RatFunc(); };
        st.modulus = [](int n, const ParamSet&, int) { return modulus_q_integer(n); };
        add(std::move(st));
    }

    // --- section 3 ----------------------------------------------------------
    {
        Statement st;
        st.info.id = "lem_3_1";
        st.info.summary = "Pochhammer reflection congruence mod Phi_n for (xq;q^2)/(q^2/x;q^2)";
        st.info.half_only = true;
        st.info.slots = {rational_slot("x", false), index_slot("k")};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet& p) {
            const Rational& x = p.get("x");
            int k = static_cast<int>(p.get_int("k"));
            int m = (n - 1) / 2 - k;
            return poch_ratio(q_shifted_factorial(qmon(x, 1), 2, m),
                              q_shifted_factorial(qmon(Rational(1) / x, 2), 2, m));
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            const Rational& x = p.get("x");
            int k = static_cast<int>(p.get_int("k"));
            long e = (n - 1) / 2 - 2L * k;
            Rational coef = rational_pow(-x, e);
            long long qe = static_cast<long long>(n - 1) * (n - 1) / 4 + k;
            LaurentPoly num = LaurentPoly::monomial(coef, qe) * q_shifted_factorial(qmon(x, 1), 2, k);
            LaurentPoly den = q_shifted_factorial(qmon(Rational(1) / x, 2), 2, k);
            return poch_ratio(num, den);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 1, oe); };
        add(std::move(st));
    }

    auto six_param_slots = [] {
        return std::vector<ParamSlot>{rational_slot("a", false), rational_slot("b", false),
                                      rational_slot("c", true), rational_slot("d", true)};
    };
    auto six_param_lhs_fn = [](int n, int M, const ParamSet& p) {
        return six_param_lhs(n, M, rat_mono(p.get("a")), rat_mono(p.get("b")), rat_mono(p.get("c")),
                             rat_mono(p.get("d")));
    };
    auto four_param_sum_fn = [](int n, const ParamSet& p) {
        return four_param_rhs_sum(n, rat_mono(p.get("a")), rat_mono(p.get("b")),
                                  rat_mono(p.get("c")), rat_mono(p.get("d")));
    };

    {
        Statement st;
        st.info.id = "lem_3_2";
        st.info.summary = "six-parameter summand vanishes mod Phi_n";
        st.info.slots = six_param_slots();
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = six_param_lhs_fn;
        st.rhs = [](int, int, const ParamSet&) { return RatFunc(); };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 1, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "lem_3_3";
        st.info.summary = "six-parameter summand vanishes mod [n]";
        st.info.slots = six_param_slots();
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = six_param_lhs_fn;
        st.rhs = [](int, int, const ParamSet&) { return RatFunc(); };
        st.modulus = [](int n, const ParamSet&, int) { return modulus_q_integer(n); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "thm_3_4";
        st.info.summary = "four-parameter congruence mod Phi_n(1-aq^n)(a-q^n)";
        st.info.slots = six_param_slots();
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = six_param_lhs_fn;
        st.rhs = [four_param_sum_fn](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * w1_weight(p.get("b"), n) * four_param_sum_fn(n, p);
        };
        st.modulus = [](int n, const ParamSet& p, int oe) {
            const Rational& a = p.get("a");
            return mod_phi_only(n, 1, oe, {poly_one_minus_aqn(a, n), poly_a_minus_qn(a, n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guozu2";
        st.info.summary = "(q;q^2)_k^2(q^2;q^4)_k half sum mod Phi_n^2 with n mod 4 case split";
        st.info.half_only = true;
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.lhs = [](int n, int, const ParamSet&) {
            return sum_spec({{Q1, 2}, {Q1, 2}, {Q2, 4}}, {{Q2, 2}, {Q2, 2}, {qpow(4), 4}},
                            Rational(1), 2, 0, false, (n - 1) / 2);
        };
        st.rhs = [](int n, int, const ParamSet&) { return rhs_guozu2(n); };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 2, oe); };
        add(std::move(st));
    }

    // --- section 4 ----------------------------------------------------------
    {
        Statement st;
        st.info.id = "lem_4_1";
        st.info.summary = "six-parameter summand = [n] W2(a) (half sum) mod (b-q^n)";
        st.info.slots = six_param_slots();
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = six_param_lhs_fn;
        st.rhs = [four_param_sum_fn](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * w2_weight(p.get("a"), n) * four_param_sum_fn(n, p);
        };
        st.modulus = [](int n, const ParamSet& p, int) {
            const Rational& b = p.get("b");
            return make_modulus({}, {Poly(b) - Poly::monomial(Rational(1), n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "eq_par";
        st.info.summary = "six-parameter summand = [n] R(a,b) (half sum) mod Phi_n(1-aq^n)(a-q^n)(b-q^n)";
        st.info.slots = six_param_slots();
        // b additionally avoids a and 1/a so the weight denominators stay nonzero.
        st.info.slots[1].admissible = [](const Rational& v, const ParamSet& p, int) {
            if (v == 0 || v == 1 || v == -1) return false;
            if (p.has("a") && (v == p.get("a") || v * p.get("a") == 1)) return false;
            return true;
        };
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = six_param_lhs_fn;
        st.rhs = [four_param_sum_fn](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * r_factor(p.get("a"), p.get("b"), n) *
                   four_param_sum_fn(n, p);
        };
        st.modulus = [](int n, const ParamSet& p, int oe) {
            const Rational& a = p.get("a");
            const Rational& b = p.get("b");
            return mod_phi_only(n, 1, oe,
                                {poly_one_minus_aqn(a, n), poly_a_minus_qn(a, n),
                                 Poly(b) - Poly::monomial(Rational(1), n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "thm_4_2";
        st.info.summary = "three-parameter congruence mod Phi_n^2(1-aq^n)(a-q^n) with Omega weight";
        st.info.slots = {rational_slot("a", false), rational_slot("c", true),
                         rational_slot("d", true)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.lhs = [](int, int M, const ParamSet& p) {
            const Rational& a = p.get("a");
            const Rational& c = p.get("c");
            const Rational& d = p.get("d");
            return sum_spec({{qmon(a, 1), 2}, {qmon(Rational(1) / a, 1), 2}, {qmon(c, 1), 2},
                             {qmon(d, 1), 2}, {Q1, 2}, {Q1, 2}},
                            {{qmon(Rational(1) / a, 2), 2}, {qmon(a, 2), 2},
                             {qmon(Rational(1) / c, 2), 2}, {qmon(Rational(1) / d, 2), 2}, {Q2, 2},
                             {Q2, 2}},
                            Rational(1) / (c * d), 1, 0, true, M);
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            const Rational& a = p.get("a");
            const Rational& c = p.get("c");
            const Rational& d = p.get("d");
            RatFunc sum = sum_spec({{qmon(a, 1), 2}, {qmon(Rational(1) / a, 1), 2},
                                    {qmon(Rational(1) / (c * d), 1), 2}, {Q1, 2}},
                                   {{qmon(Rational(1) / c, 2), 2}, {qmon(Rational(1) / d, 2), 2},
                                    {Q2, 2}, {Q2, 2}},
                                   Rational(1), 2, 0, false, (n - 1) / 2);
            return laurent_rf(q_int_l(n)) * omega_factor(a, n) * sum;
        };
        st.modulus = [](int n, const ParamSet& p, int oe) {
            const Rational& a = p.get("a");
            return mod_phi_only(n, 2, oe, {poly_one_minus_aqn(a, n), poly_a_minus_qn(a, n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guopreprint_1";
        st.info.summary = "(aq^2,q^2/a;q^2)_((n-1)/2) closed form mod Phi_n";
        st.info.half_only = true;
        st.info.slots = {rational_slot("a", false)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet& p) {
            const Rational& a = p.get("a");
            int m = (n - 1) / 2;
            return laurent_rf(q_shifted_factorial(qmon(a, 2), 2, m) *
                              q_shifted_factorial(qmon(Rational(1) / a, 2), 2, m));
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            const Rational& a = p.get("a");
            int m = (n - 1) / 2;
            Rational coef = (m % 2 == 0 ? Rational(1) : Rational(-1)) *
                            (Rational(1) - rational_pow(a, n)) /
                            ((Rational(1) - a) * rational_pow(a, m));
            return laurent_rf(
                LaurentPoly::monomial(coef, -static_cast<long long>(n - 1) * (n - 1) / 4));
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 1, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "guopreprint_2";
        st.info.summary = "(aq,q/a;q^2)_((n-1)/2) closed form mod Phi_n";
        st.info.half_only = true;
        st.info.slots = {rational_slot("a", false)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.lhs = [](int n, int, const ParamSet& p) {
            const Rational& a = p.get("a");
            int m = (n - 1) / 2;
            return laurent_rf(q_shifted_factorial(qmon(a, 1), 2, m) *
                              q_shifted_factorial(qmon(Rational(1) / a, 1), 2, m));
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            const Rational& a = p.get("a");
            int m = (n - 1) / 2;
            Rational coef = (m % 2 == 0 ? Rational(1) : Rational(-1)) *
                            (Rational(1) - rational_pow(a, n)) /
                            ((Rational(1) - a) * rational_pow(a, m));
            return laurent_rf(LaurentPoly::monomial(
                coef, (1 - static_cast<long long>(n) * n) / 4));
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_phi_only(n, 1, oe); };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "formula_b";
        st.info.summary = "[n] S(a) = [n] Omega(a) mod Phi_n^2(1-aq^n)(a-q^n)";
        st.info.half_only = true;
        st.info.slots = {rational_slot("a", false)};
        st.info.applicable = any_odd;
        st.info.applicability = "odd n >= 1";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 2;
        st.lhs = [](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * s_factor(p.get("a"), n);
        };
        st.rhs = [](int n, int, const ParamSet& p) {
            return laurent_rf(q_int_l(n)) * omega_factor(p.get("a"), n);
        };
        st.modulus = [](int n, const ParamSet& p, int oe) {
            const Rational& a = p.get("a");
            return mod_phi_only(n, 2, oe, {poly_one_minus_aqn(a, n), poly_a_minus_qn(a, n)});
        };
        add(std::move(st));
    }
    {
        Statement st;
        st.info.id = "conj_4_1";
        st.info.summary = "alternating summand = [n]^2 X q^((1-n)/2) mod [n]Phi_n^4 (conjectural)";
        st.info.applicable = three_mod_four;
        st.info.applicability = "n == 3 (mod 4)";
        st.info.supports_scan = true;
        st.info.base_phi_exponent = 4;
        st.info.certifiable = true;
        st.lhs = [](int n, int M, const ParamSet&) { return lhs_guo_conj_family(n, M); };
        st.rhs = [](int n, int, const ParamSet&) {
            Poly nn = q_integer(n);
            return laurent_rf(LaurentPoly(nn * nn, (1 - static_cast<long long>(n)) / 2)) * x_ratio(n);
        };
        st.modulus = [](int n, const ParamSet&, int oe) { return mod_n_phi(n, 4, oe); };
        add(std::move(st));
    }

    return reg;
}

const std::map<std::string, Statement>& registry() {
    static const std::map<std::string, Statement>& reg = build_registry();
    return reg;
}

const Statement& lookup(const std::string& id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw std::invalid_argument("unknown statement id: " + id);
    return it->second;
}

void require_applicable(const Statement& st, int n) {
    if (n < 1 || n % 2 == 0) {
        throw applicability_error(st.info.id + ": n must be odd and positive (got " +
                                  std::to_string(n) + ")");
    }
    if (!st.info.applicable(n)) {
        throw applicability_error(st.info.id + ": requires " + st.info.applicability + " (got n = " +
                                  std::to_string(n) + ")");
    }
}

}  // namespace

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, st] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

bool statement_exists(const std::string& id) { return registry().count(id) != 0; }

const StatementInfo& statement_info(const std::string& id) { return lookup(id).info; }

namespace {

int effective_truncation(const Statement& st, int n, MMode mode) {
    return st.info.half_only ? (n - 1) / 2 : truncation_for(mode, n);
}

void require_params(const Statement& st, int n, const ParamSet& params) {
    ParamSet seen;
    for (const auto& slot : st.info.slots) {
        if (!params.has(slot.name)) {
            throw std::invalid_argument(st.info.id + ": missing parameter " + slot.name);
        }
        const Rational& v = params.get(slot.name);
        if (slot.kind == SlotKind::index_to_half) {
            if (v.get_den() != 1 || v < 0 || v > (n - 1) / 2) {
                throw degeneracy_error(st.info.id + ": index parameter " + slot.name +
                                       " out of range");
            }
        }
        if (!slot.admissible(v, seen, n)) {
            throw degeneracy_error(st.info.id + ": inadmissible parameter " + slot.name + " = " +
                                   v.get_str());
        }
        seen.set(slot.name, v);
    }
}

}  // namespace

RatFunc statement_lhs(const std::string& id, int n, MMode mode, const ParamSet& params) {
    const Statement& st = lookup(id);
    require_applicable(st, n);
    require_params(st, n, params);
    return st.lhs(n, effective_truncation(st, n, mode), params);
}

RatFunc statement_rhs(const std::string& id, int n, MMode mode, const ParamSet& params) {
    const Statement& st = lookup(id);
    require_applicable(st, n);
    require_params(st, n, params);
    return st.rhs(n, effective_truncation(st, n, mode), params);
}

FactoredModulus statement_modulus(const std::string& id, int n, const ParamSet& params,
                                  int phi_exponent_override) {
    const Statement& st = lookup(id);
    require_applicable(st, n);
    require_params(st, n, params);
    if (phi_exponent_override > 0 && !st.info.supports_scan) {
        throw std::invalid_argument(id + ": modulus does not support a Phi_n exponent override");
    }
    return st.modulus(n, params, phi_exponent_override);
}

namespace {

ParamSet sample_params(const Statement& st, int n, SplitMix64& rng) {
    const auto& pool = sample_pool();
    ParamSet params;
    for (const auto& slot : st.info.slots) {
        bool placed = false;
        for (int attempt = 0; attempt < 128 && !placed; ++attempt) {
            Rational v;
            if (slot.kind == SlotKind::index_to_half) {
                v = Rational(static_cast<long>(rng.below(static_cast<uint64_t>((n - 1) / 2 + 1))));
            } else {
                v = pool[static_cast<size_t>(rng.below(pool.size()))];
            }
            if (slot.admissible(v, params, n)) {
                params.set(slot.name, v);
                placed = true;
            }
        }
        if (!placed) {
            throw degeneracy_error(st.info.id + ": could not sample admissible " + slot.name);
        }
    }
    return params;
}

TrialResult run_one(const Statement& st, int n, MMode mode, const ParamSet& params,
                    int phi_exponent_override) {
    int M = effective_truncation(st, n, mode);
    RatFunc lhs = st.lhs(n, M, params);
    RatFunc rhs = st.rhs(n, M, params);
    TrialResult out;
    out.params = params;
    if (st.info.kind == StatementKind::identity) {
        RatFunc diff = lhs - rhs;
        out.report.pass = diff.is_zero();
        out.report.denominator_coprime = true;
        out.report.notes = out.report.pass ? "exact identity" : "identity mismatch";
        return out;
    }
    FactoredModulus modulus = st.modulus(n, params, phi_exponent_override);
    out.report = check_congruence(lhs - rhs, modulus);
    return out;
}

}  // namespace

std::vector<TrialResult> run_statement(const std::string& id, int n, MMode mode, uint64_t seed,
                                       int trials, int phi_exponent_override) {
    const Statement& st = lookup(id);
    require_applicable(st, n);
    if (trials < 1) throw std::invalid_argument("run_statement: trials must be >= 1");
    if (phi_exponent_override > 0 && !st.info.supports_scan) {
        throw std::invalid_argument(id + ": modulus does not support a Phi_n exponent override");
    }
    // Trials are parameter specializations; without slots there is only one.
    if (st.info.slots.empty()) trials = 1;
    std::vector<TrialResult> out;
    out.reserve(static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, id, static_cast<uint64_t>(n),
                                   mode == MMode::half ? 0u : 1u, static_cast<uint64_t>(t)));
        constexpr int kMaxResamples = 50;
        bool done = false;
        for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
            ParamSet params = sample_params(st, n, rng);
            try {
                out.push_back(run_one(st, n, mode, params, phi_exponent_override));
                done = true;
            } catch (const degeneracy_error&) {
                if (st.info.slots.empty()) throw;  // nothing to resample
            }
        }
        if (!done) throw degeneracy_error(id + ": degenerate after resampling");
    }
    return out;
}

// One more than 3M + n, a margin above the cleared difference's degree in any
// single parameter (each side contributes at most M from the upper factors,
// M from the cleared lower factors, and M + n from argument powers and modulus
// extras combined).
int certify_points(int n, MMode mode) { return 3 * truncation_for(mode, n) + n + 1; }

std::vector<TrialResult> certify_statement(const std::string& id, int n, MMode mode) {
    const Statement& st = lookup(id);
    require_applicable(st, n);
    if (!st.info.certifiable) {
        throw std::invalid_argument(id + ": certification requires independent parameter slots");
    }
    if (st.info.slots.empty()) {
        return {run_one(st, n, mode, ParamSet{}, -1)};
    }
    int points = certify_points(n, st.info.half_only ? MMode::half : mode);

    // Per-slot value lists: index slots sweep their full range; rational slots
    // take the first `points` admissible integers from 2 upward.
    std::vector<std::vector<Rational>> grids;
    for (const auto& slot : st.info.slots) {
        std::vector<Rational> grid;
        if (slot.kind == SlotKind::index_to_half) {
            for (int k = 0; k <= (n - 1) / 2; ++k) grid.emplace_back(static_cast<long>(k));
        } else {
            ParamSet empty;
            for (long v = 2; static_cast<int>(grid.size()) < points; ++v) {
                Rational r(v);
                if (slot.admissible(r, empty, n)) grid.push_back(r);
            }
        }
        grids.push_back(std::move(grid));
    }

    std::vector<TrialResult> out;
    std::vector<size_t> idx(st.info.slots.size(), 0);
    for (;;) {
        ParamSet params;
        for (size_t s = 0; s < idx.size(); ++s) params.set(st.info.slots[s].name, grids[s][idx[s]]);
        out.push_back(run_one(st, n, mode, params, -1));
        size_t s = 0;
        for (; s < idx.size(); ++s) {
            if (++idx[s] < grids[s].size()) break;
            idx[s] = 0;
        }
        if (s == idx.size()) break;
    }
    return out;
}

}  // namespace qsc
