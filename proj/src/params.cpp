#include "moh/params.hpp"

#include <numeric>
#include <string>

namespace moh {

namespace {

std::int64_t positive_remainder(std::int64_t value, std::int64_t mod) {
    std::int64_t r = value % mod;
    return r < 0 ? r + mod : r;
}

}  // namespace

MohParams validate_and_derive(std::int64_t n, std::int64_t lambda) {
    if (n <= 0 || n % 2 == 0)
        throw ParamError(ParamError::Kind::EvenN,
                         "n must be an odd positive integer, got " + std::to_string(n));
    MohParams P;
    P.n = n;
    P.m = (n + 1) / 2;
    P.lambda = lambda;
    if (lambda <= n * (n + 1) * P.m)
        throw ParamError(ParamError::Kind::LambdaTooSmall,
                         "lambda must exceed n(n+1)m = " + std::to_string(n * (n + 1) * P.m) +
                             ", got " + std::to_string(lambda));
    if (std::gcd(lambda, P.m) != 1)
        throw ParamError(ParamError::Kind::NotCoprime, "gcd(lambda, m) must be 1: gcd(" +
                                                           std::to_string(lambda) + ", " +
                                                           std::to_string(P.m) + ") = " +
                                                           std::to_string(std::gcd(lambda, P.m)));

    P.sec2_a = n * (n + 1) * P.m;
    P.sec2_b = (n + 2) * P.m;
    // lambda = A + B p + r with the remainder taken in [1, B], not [0, B-1]
    P.sec2_p = (lambda - P.sec2_a - 1) / P.sec2_b;
    P.sec2_r = lambda - P.sec2_a - P.sec2_b * P.sec2_p;

    const std::int64_t excess = lambda - n * P.m * (n + 1);
    P.sec4_w = (excess - 1) / (n + 1);
    P.sec4_r = excess - P.sec4_w * (n + 1);

    P.sec4_alpha = P.sec4_w / (n + 2);
    P.sec4_q = P.sec4_w % (n + 2);
    P.sec4_alpha_prime = (P.sec4_w + n + 1) / (n + 2);
    P.sec4_q_prime = (P.sec4_w + n + 1) % (n + 2);

    const std::int64_t mod = n + 2;
    std::int64_t t1 = positive_remainder(P.sec4_q + (P.sec4_r - 1) * (n + 1), mod);
    std::int64_t t1p = positive_remainder(P.sec4_q_prime + (P.sec4_r - 1) * (n + 1), mod);
    P.t_seq.resize(static_cast<std::size_t>(P.m));
    P.t_prime_seq.resize(static_cast<std::size_t>(P.m) + 1);
    P.t_seq[0] = t1;
    P.t_prime_seq[0] = t1p;
    for (std::size_t l = 1; l < P.t_seq.size(); ++l)
        P.t_seq[l] = (P.t_seq[l - 1] + 2) % mod;
    for (std::size_t l = 1; l < P.t_prime_seq.size(); ++l)
        P.t_prime_seq[l] = (P.t_prime_seq[l - 1] + 2) % mod;

    // hard assertions, not trust: both divisibility facts must hold
    if ((n * (P.m + 1) + lambda - (n + 1) * t1 + 1) % mod != 0)
        throw ParamError(ParamError::Kind::InternalDivisibility,
                         "n+2 does not divide n(m+1)+lambda-(n+1)t1+1 (internal bug)");
    if ((n * P.m + lambda - (n + 1) * t1p) % mod != 0)
        throw ParamError(ParamError::Kind::InternalDivisibility,
                         "n+2 does not divide nm+lambda-(n+1)t1' (internal bug)");

    // decomposition round trips
    if (P.sec2_a + P.sec2_b * P.sec2_p + P.sec2_r != lambda || P.sec2_r < 1 ||
        P.sec2_r > P.sec2_b || P.sec2_p < 0)
        throw ParamError(ParamError::Kind::InternalDivisibility,
                         "lambda = A + Bp + r decomposition failed (internal bug)");
    if ((n * P.m + P.sec4_w) * (n + 1) + P.sec4_r != lambda || P.sec4_r < 1 ||
        P.sec4_r > n + 1 || P.sec4_w < 0)
        throw ParamError(ParamError::Kind::InternalDivisibility,
                         "lambda = (nm+w)(n+1) + r decomposition failed (internal bug)");
    return P;
}

std::vector<std::int64_t> smallest_valid_lambdas(std::int64_t n, std::size_t count) {
    if (n <= 0 || n % 2 == 0)
        throw ParamError(ParamError::Kind::EvenN,
                         "n must be an odd positive integer, got " + std::to_string(n));
    const std::int64_t m = (n + 1) / 2;
    std::vector<std::int64_t> out;
    for (std::int64_t lam = n * (n + 1) * m + 1; out.size() < count; ++lam)
        if (std::gcd(lam, m) == 1) out.push_back(lam);
    return out;
}

}  // namespace moh
