#pragma once

#include "moh/params.hpp"
#include "moh/polynomial.hpp"
#include "moh/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace moh {

/// Exact univariate polynomial in t, ascending degree order.
class UniPolynomial {
  public:
    using TermMap = std::map<std::int64_t, Rational>;

    UniPolynomial() = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(std::int64_t degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(std::int64_t degree, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    UniPolynomial& operator+=(const UniPolynomial& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
    friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

    /// "t^78 + 2*t^105 + t^132", ascending degree; "0" for the zero polynomial.
    std::string to_text() const;

  private:
    TermMap terms_;
};

/// Image of f under the substitution x -> t^{nm} + t^{nm+lambda},
/// y -> t^{(n+1)m}, z -> t^{(n+2)m}. Exact: polynomials map to polynomials,
/// so no truncation is involved anywhere.
UniPolynomial rho_apply(const Polynomial& f, const MohParams& P);

/// True iff rho_apply(f, P) is identically zero.
bool is_in_kernel(const Polynomial& f, const MohParams& P);

/// Predicted image of the u-th tail monomial of the first generator:
/// sum_{j=0}^{m+1-u} binom(m+1-u, j) t^{nm(n+1) + lambda(m+j)}.
/// Requires 1 <= u <= m+1 (IndexOutOfRangeError otherwise).
std::vector<std::pair<std::int64_t, Rational>> tail_image_profile(std::int64_t u,
                                                                  const MohParams& P);

}  // namespace moh
