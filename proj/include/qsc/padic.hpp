#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

/// (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Rational rising_factorial(const Rational& x, unsigned k);

/// Truncated classical sums, one per statement id:
///   hamme_b, swisher, liu, conj_4_1_classical : sum (-1)^k (4k+1) (1/2)_k^5 / k!^5
///   kilbourn                                  : sum (1/2)_k^4 / k!^4
///   long_a                                    : sum (4k+1) (1/2)_k^4 / k!^4
///   long_c                                    : sum (4k+1) (1/2)_k^6 / k!^6
///   cor_2_8_classical : sum (4k+1)(1/2)_k^4(-1/2)_k^2 / (k!^4 (k+1)!^2)
///   cor_2_9_classical : sum (4k+1)(1/2)_k^5(-1/2)_k   / (k!^5 (k+1)!)
/// The truncation is k = 0 .. (p^r - 1)/2.
Rational classical_sum(const std::string& id, unsigned p, unsigned r);

/// Second (right-hand) sums for the statements that have one.
Rational classical_second_sum(const std::string& id, unsigned p, unsigned r);

std::vector<std::string> classical_ids();

/// v_p(lhs - rhs) >= k, for rationals whose difference has a p-free denominator.
/// Throws std::domain_error when p divides the denominator of the difference.
bool padic_valuation_check(const Rational& lhs, const Rational& rhs, unsigned p, unsigned k);

/// v_p of a nonzero rational's numerator minus denominator valuation.
long padic_valuation(const Rational& x, unsigned p);

struct PadicResidue {
    unsigned p = 0;
    unsigned k = 0;
    uint64_t modulus = 0;  // p^k
    uint64_t value = 0;    // in [0, p^k)
};

/// Morita's p-adic Gamma at the integer residue of x mod p^k:
/// Gamma_p(m) = (-1)^m * prod_{0 < j < m, p !| j} j, reduced mod p^k.
/// Requires den(x) coprime to p and p^k < 2^32.
PadicResidue padic_gamma(const Rational& x, unsigned p, unsigned k);

/// Coefficients a_1..a_N of q * prod_{n>=1} (1 - q^(2n))^4 (1 - q^(4n))^4.
std::vector<BigInt> eta_coefficients(unsigned N);

struct ClassicalResult {
    std::string id;
    unsigned p = 0;
    unsigned r = 1;
    unsigned modulus_exponent = 0;
    long achieved = 0;  // v_p(lhs - rhs); capped at 64 when the difference is 0
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

/// Precondition check only (prime parity classes, p > 3 where needed, r = 1
/// for the Gamma_p-based statements); false instead of throwing.
bool classical_applicable(const std::string& id, unsigned p, unsigned r);

/// Assembles the statement's right-hand side (p-power, Gamma_p expression,
/// eta coefficient, or second sum) and checks the congruence at the
/// statement's modulus exponent.
ClassicalResult check_classical_detail(const std::string& id, unsigned p, unsigned r);

bool check_classical(const std::string& id, unsigned p, unsigned r);

}  // namespace qsc
