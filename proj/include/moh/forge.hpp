#pragma once

#include "moh/params.hpp"
#include "moh/polynomial.hpp"
#include "moh/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace moh {

/// Coefficient tables of the chain construction, in the internal
/// normalization c_{(i,1)} = 1 for every generator.
///   c: (generator i, column j) for 1 <= i <= n+1, 1 <= j <= m+1
///   a: chain i -> (a_{(i,i)}, a_{(i,i+1)}, a_{(i,i+2)}), a_{(i,i+2)} = 1
///   d: (generator i, slot s) -> coefficient attached to the s-th skeleton
///      tail monomial of f_i (f_i^tau picks it up with a minus sign)
struct CoefficientTables {
    std::map<std::pair<int, int>, Rational> c;
    std::map<int, std::array<Rational, 3>> a;
    std::map<std::pair<int, int>, Rational> d;
};

/// Outcome of one three-term chain z*f_i, y*f_{i+1}, x*f_{i+2}.
///
/// `residual` is a_{(i,i)} z f_i + a_{(i,i+1)} y f_{i+1} + a_{(i,i+2)} x f_{i+2}
/// over the full (internally scaled) generators. When it is nonzero it cannot
/// be repaired by any choice of f_{i+2} (its monomials are x-free); the
/// builder instead certifies that it is a combination of terms
/// mono * (y^{n+2} - z^{n+1}), each of which maps to zero under rho, and
/// `certificate` holds that decomposition.
struct ChainReport {
    int chain = 0;
    Polynomial residual;
    bool exact = true;
    std::vector<std::pair<Monomial, Rational>> certificate;
    /// Tail terms of f_{i+2} forced beyond the predicted skeleton (the
    /// x-divisible part of the would-be residual, folded into the tail).
    std::vector<std::pair<Monomial, Rational>> absorbed;
};

struct GeneratorSet {
    MohParams params;
    std::vector<Polynomial> sigma_parts;  // f_1^sigma .. f_{n+1}^sigma, internal scale
    std::vector<Polynomial> tails;        // f_1^tau .. f_{n+1}^tau, internal scale
    std::vector<Polynomial> generators;   // f_i = f_i^sigma + f_i^tau
    std::vector<Polynomial> canonical;    // canonicalize_primitive(f_i) display forms
    CoefficientTables tables;
    std::vector<ChainReport> chains;      // chains 1..n-1

    const Polynomial& generator(std::size_t i) const { return generators.at(i - 1); }
    SigmaGrading grading() const { return SigmaGrading{params.n}; }
};

/// Closed-form seeds f_1^sigma, f_2^sigma (c_{(1,1)} = c_{(2,1)} = 1):
///   f_1^sigma = x^{2m} + sum_{j=1}^m (-1)^j C(m+j-1,j-1) C(2m,m-j) x^{m-j} y^{2j-1} z^{m-j}
///   f_2^sigma = x^{2m-1} y + sum_{j=1}^m (-1)^j C(m+j-2,j-1) C(2m-1,m-j) x^{m-j} y^{2j-2} z^{m+1-j}
std::pair<Polynomial, Polynomial> leading_seed(const MohParams& P);

struct LeadingChainResult {
    std::vector<Polynomial> sigma_parts;  // all n+1 of them
    CoefficientTables tables;             // c and a filled, d empty
};

/// Runs the n-1 three-term chains on the sigma-leading forms, forward
/// substitution in the displayed equation order. Odd chains fix
/// a_{(i,i+2)} = 1, a_{(i,i)} = -1 and read a_{(i,i+1)} off the last column
/// (any nonzero value, fixed to 1, when that column vanishes); even chains
/// solve the 2x2 system from the first and last columns (ChainError/
/// Degenerate when singular). Each solved chain is re-checked as an exact
/// polynomial identity (ChainError/Inconsistent).
LeadingChainResult solve_leading_chain(const MohParams& P,
                                       const std::pair<Polynomial, Polynomial>& seeds);

/// Skeleton tail monomials for index l (1 <= l <= m):
///   first:  m_{(n-2l+3),s} for s = 1..l     (an even-indexed generator)
///   second: m_{(n-2l+2),s} for s = 1..l+1   (an odd-indexed generator)
/// All z-exponents are verified nonnegative integers (ExponentError).
std::pair<std::vector<Monomial>, std::vector<Monomial>> tail_monomials(const MohParams& P,
                                                                       std::int64_t l);

/// Seed tails with binomial coefficients attached:
///   f_1^tau = -sum_{s=1}^{m+1} C(m+s-2, s-1) m_{(1,s)}
///   f_2^tau = -sum_{s=1}^{m}   C(m+s-2, s-1) m_{(2,s)}
std::pair<Polynomial, Polynomial> tail_seed(const MohParams& P);

struct TailChainResult {
    std::vector<Polynomial> tails;  // all n+1
    std::vector<ChainReport> chains;
};

/// Propagates the tails through the same chains, with the a-coefficients
/// fixed by solve_leading_chain. Per chain: the d-coefficients are matched
/// on the skeleton slots; any x-divisible remainder is folded into the tail
/// (recorded in ChainReport::absorbed); an x-free remainder must decompose
/// into mono * (y^{n+2} - z^{n+1}) kernel terms (recorded in
/// ChainReport::certificate) or TailInconsistentError is thrown with the
/// first surviving monomial.
TailChainResult solve_tail_chain(const MohParams& P,
                                 const std::pair<Polynomial, Polynomial>& seeds,
                                 const LeadingChainResult& leading,
                                 CoefficientTables& tables);

/// The whole construction: validate, seed, solve both chain families,
/// assemble f_i = f_i^sigma + f_i^tau and the canonical display forms.
GeneratorSet build_generators(std::int64_t n, std::int64_t lambda);

/// Exact evaluation of the two alternating binomial sums
///   nu_l = C(2m, m+l) - sum_{k=0}^{m-l} C(m-1+k, k) C(m-k, l),          0 <= l <= m
///   mu_l = C(2m, l) + sum_{k=1}^{m-l} (-1)^k C(m+k-1, k-1) C(2m, m-k) C(m-k, l), 0 <= l <= m-1
/// Returns true iff every admissible l vanishes.
bool check_binomial_identities(std::int64_t m);

}  // namespace moh
