#pragma once

#include <vector>

#include "qsc/qobjects.hpp"
#include "qsc/ratfunc.hpp"

namespace qsc {

/// Truncated basic hypergeometric series with the standard compensating
/// power for unbalanced parameter counts:
/// term_k = prod(upper; Q)_k / [(Q; Q)_k prod(lower; Q)_k]
///          * {(-1)^k Q^binom(k,2)}^(1 + s - r) * z^k,  Q = q^base_step.
struct SeriesSpec {
    std::vector<QMonomial> upper_params;
    std::vector<QMonomial> lower_params;
    int base_step = 1;
    QMonomial argument{1, 0};
    int truncation = 0;  // highest k included
};

/// Exact truncated sum. Throws degeneracy_error if a lower-parameter
/// Pochhammer factor vanishes at or below the truncation.
RatFunc phi_series(const SeriesSpec& spec);

/// Sums of the shape used by every congruence in the registry:
/// sum_{k=0}^{M} [4k+1]? * prod (x_i; q^step_i)_k / prod (y_j; q^step_j)_k
///              * arg_coef^k * q^(arg_lin*k + arg_quad*k^2).
/// Factors carry their own step so bases q^2 and q^4 can mix in one summand.
struct SumSpec {
    std::vector<std::pair<QMonomial, int>> upper;
    std::vector<std::pair<QMonomial, int>> lower;
    Rational arg_coef{1};
    long long arg_lin = 0;
    long long arg_quad = 0;
    bool bracket_4k1 = false;  // multiply each term by [4k+1]
};

/// Exact value of the truncated sum with terms k = 0..M.
/// Throws degeneracy_error if a lower factor vanishes.
RatFunc q_hyper_sum(const SumSpec& spec, int M);

// Terminating identity oracles: both sides built independently, equality is
// the assertion. All parameters are rationals away from {0, 1, -1}; the 8phi7
// transformation takes a = g^2.
RatFunc chu_vandermonde_lhs(int n, const Rational& b, const Rational& c);
RatFunc chu_vandermonde_rhs(int n, const Rational& b, const Rational& c);
RatFunc whipple_lhs(int n, const Rational& b, const Rational& c);
RatFunc whipple_rhs(int n, const Rational& b, const Rational& c);
RatFunc watson_lhs(int n, const Rational& g, const Rational& b, const Rational& c,
                   const Rational& d, const Rational& e);
RatFunc watson_rhs(int n, const Rational& g, const Rational& b, const Rational& c,
                   const Rational& d, const Rational& e);

}  // namespace qsc
