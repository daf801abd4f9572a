#pragma once

#include "moh/errors.hpp"

#include <cstdint>
#include <vector>

namespace moh {

/// Validated curve parameters (n, lambda) together with every derived
/// quantity the generator construction needs.
///
/// Two different remainder decompositions of lambda are kept side by side
/// under distinct names because downstream formulas use both:
///   lambda = sec2_a + sec2_b*sec2_p + sec2_r   with 1 <= sec2_r <= sec2_b
///   lambda = (n*m + sec4_w)*(n+1) + sec4_r     with 1 <= sec4_r <= n+1
struct MohParams {
    std::int64_t n = 0;        // odd positive
    std::int64_t m = 0;        // (n+1)/2
    std::int64_t lambda = 0;   // coprime with m, > n(n+1)m

    std::int64_t sec2_a = 0;   // n(n+1)m
    std::int64_t sec2_b = 0;   // (n+2)m
    std::int64_t sec2_p = 0;
    std::int64_t sec2_r = 0;

    std::int64_t sec4_w = 0;
    std::int64_t sec4_r = 0;
    std::int64_t sec4_alpha = 0;        // sec4_w = alpha(n+2) + q
    std::int64_t sec4_q = 0;
    std::int64_t sec4_alpha_prime = 0;  // sec4_w + n+1 = alpha'(n+2) + q'
    std::int64_t sec4_q_prime = 0;

    std::vector<std::int64_t> t_seq;        // t_1..t_m, residues mod n+2
    std::vector<std::int64_t> t_prime_seq;  // t'_1..t'_{m+1}

    std::int64_t t(std::size_t l) const { return t_seq.at(l - 1); }
    std::int64_t t_prime(std::size_t l) const { return t_prime_seq.at(l - 1); }
};

/// Validates (n, lambda) and derives all fields, re-checking every invariant
/// including both divisibility facts the tail construction relies on.
/// Throws ParamError (EvenN, LambdaTooSmall, NotCoprime,
/// InternalDivisibility).
MohParams validate_and_derive(std::int64_t n, std::int64_t lambda);

/// The `count` smallest integers lambda > n(n+1)m with gcd(lambda, m) = 1,
/// ascending. Used by grid sweeps.
std::vector<std::int64_t> smallest_valid_lambdas(std::int64_t n, std::size_t count);

}  // namespace moh
