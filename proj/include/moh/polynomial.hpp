#pragma once

#include "moh/errors.hpp"
#include "moh/rational.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace moh {

/// Exponent triple of x^a y^b z^c. operator<=> is the lexicographic order
/// induced by x > y > z.
struct Monomial {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool divides(const Monomial& m) const {
        return x <= m.x && y <= m.y && z <= m.z;
    }
    Monomial operator*(const Monomial& m) const { return {x + m.x, y + m.y, z + m.z}; }
    Monomial operator/(const Monomial& m) const { return {x - m.x, y - m.y, z - m.z}; }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
    }
    std::int64_t total_degree() const { return x + y + z; }
};

std::string monomial_to_text(const Monomial& m);

/// Weighted grading with sigma-weights (n, n+1, n+2) for (x, y, z).
struct SigmaGrading {
    std::int64_t n;
    std::int64_t weight(const Monomial& m) const {
        return n * m.x + (n + 1) * m.y + (n + 2) * m.z;
    }
};

inline std::int64_t sigma_weight(const Monomial& m, const SigmaGrading& g) {
    return g.weight(m);
}

/// Sparse trivariate polynomial over the rationals. Terms are stored (and
/// iterated) lex-descending with x > y > z; zero coefficients are never kept.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    Polynomial() = default;
    Polynomial(std::initializer_list<std::pair<Monomial, Rational>> terms) {
        for (const auto& [m, c] : terms) add_term(m, c);
    }
    static Polynomial constant(const Rational& c) { return Polynomial{{Monomial{}, c}}; }
    static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
        return Polynomial{{m, c}};
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    Polynomial scaled(const Rational& c) const;
    /// c * x^m.x y^m.y z^m.z * (*this)
    Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Lex-greatest term. Throws ZeroPolynomialError on the zero polynomial.
    std::pair<Monomial, Rational> leading_term() const;

  private:
    TermMap terms_;
};

/// min sigma-weight over the terms of f. Throws ZeroPolynomialError.
std::int64_t sigma_order(const Polynomial& f, const SigmaGrading& g);

/// Sum of the terms of minimal sigma-weight. Throws ZeroPolynomialError.
Polynomial sigma_leading_form(const Polynomial& f, const SigmaGrading& g);

/// f - sigma_leading_form(f); every term has sigma-weight > sigma_order(f).
Polynomial sigma_tail(const Polynomial& f, const SigmaGrading& g);

/// Unique unit multiple of f with coprime integer coefficients whose
/// sigma-leading form has a positive lex-leading coefficient.
Polynomial canonicalize_primitive(const Polynomial& f, const SigmaGrading& g);

/// Canonical text form, terms lex-descending:
/// "2*x^3*z - 3*x^2*y^2 - 2*x*y^2*z^6 - y^4*z^5 + y*z^2".
std::string polynomial_to_text(const Polynomial& f);

/// Inverse of polynomial_to_text (also accepts non-canonical term order and
/// rational coefficients like "3/2*x"). Throws ParseError.
Polynomial polynomial_from_text(std::string_view s);

}  // namespace moh
