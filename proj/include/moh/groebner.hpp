#pragma once

#include "moh/params.hpp"
#include "moh/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace moh {

/// A list of nonzero polynomials under the fixed lex order x > y > z.
/// (The elimination oracle uses a private 4-variable representation with
/// lex t > x > y > z internally; only 3-variable polynomials cross this
/// interface.)
struct OrderedBasis {
    std::vector<Polynomial> polys;
};

inline constexpr std::size_t kDefaultPairBudget = 200000;

/// Remainder of multivariate division of f by G: no term of the result is
/// divisible by any leading term of G, and f - result lies in <G>.
Polynomial normal_form(const Polynomial& f, const OrderedBasis& G);

/// Division with quotients: f = sum q_i g_i + remainder, exactly.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const OrderedBasis& G);

/// lcm-cancellation combination S(f, g). Throws ZeroPolynomialError.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger criterion: every S-pair reduces to zero modulo G. Pairs with
/// coprime leading terms are skipped unless skip_coprime is false.
struct BuchbergerResult {
    bool is_groebner_basis = false;
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};
BuchbergerResult buchberger_check(const OrderedBasis& G, bool skip_coprime = true);

/// Reduced Groebner basis of <F> (monic, fully inter-reduced, sorted by
/// ascending leading monomial) -- the unique canonical form for the order.
/// Pair selection: lowest total degree of the lcm first, ties by lex on the
/// lcm. Throws BudgetExceededError once more than `budget` pairs have been
/// reduced.
OrderedBasis buchberger_complete(const OrderedBasis& F, std::size_t budget = kDefaultPairBudget);

/// True iff <F> = <G>, decided by comparing reduced Groebner bases.
bool ideal_equal(const OrderedBasis& F, const OrderedBasis& G,
                 std::size_t budget = kDefaultPairBudget);

/// The four explicit generators {g1, g2, g3, g4} of the contracted kernel
/// ideal for n = 1, with sec2_r and sec2_p substituted:
///   g1 = y^3 - z^2
///   g2 = x*z - y^2 - y^(3-r) z^(r+p)
///   g3 = x*y - z - y^(4-r) z^(r+p-1)
///   g4 = x^2 - y - x y^(3-r) z^(r+p-1) - y^((r-2)(3r-5)/2) z^(-r^2+4r+p-2)
/// Requires P.n == 1 (NotN1Error). The half-integer-looking exponent in g4 is
/// verified to be a nonnegative integer rather than assumed.
OrderedBasis n1_basis(const MohParams& P);

/// Independent implicitization oracle: generators of the elimination ideal
///   <x - rho(x), y - rho(y), z - rho(z)> \cap k[x,y,z]
/// computed with lex t > x > y > z; the t-free members of the reduced basis.
/// Desk-scale only (n = 1). Throws NotN1Error / BudgetExceededError.
OrderedBasis kernel_oracle(const MohParams& P, std::size_t budget = kDefaultPairBudget);

}  // namespace moh
