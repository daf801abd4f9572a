#include "moh/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace moh {

std::string monomial_to_text(const Monomial& m) {
    std::string s;
    auto piece = [&s](char v, std::int64_t e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    };
    piece('x', m.x);
    piece('y', m.y);
    piece('z', m.z);
    return s.empty() ? "1" : s;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    return *terms_.begin();
}

std::int64_t sigma_order(const Polynomial& f, const SigmaGrading& g) {
    if (f.is_zero()) throw ZeroPolynomialError();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& [m, c] : f.terms()) best = std::min(best, g.weight(m));
    return best;
}

Polynomial sigma_leading_form(const Polynomial& f, const SigmaGrading& g) {
    std::int64_t ord = sigma_order(f, g);
    Polynomial r;
    for (const auto& [m, c] : f.terms())
        if (g.weight(m) == ord) r.add_term(m, c);
    return r;
}

Polynomial sigma_tail(const Polynomial& f, const SigmaGrading& g) {
    std::int64_t ord = sigma_order(f, g);
    Polynomial r;
    for (const auto& [m, c] : f.terms())
        if (g.weight(m) != ord) r.add_term(m, c);
    return r;
}

Polynomial canonicalize_primitive(const Polynomial& f, const SigmaGrading& g) {
    if (f.is_zero()) throw ZeroPolynomialError();
    Int den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        Int d = denominator(c);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    Int content = 0;
    for (const auto& [m, c] : f.terms()) content = gcd(content, Int(numerator(c) * (den_lcm / denominator(c))));
    Rational scale(den_lcm, content);
    // sign: lex-leading coefficient of the sigma-leading form positive
    if (sigma_leading_form(f, g).leading_term().second * scale < 0) scale = -scale;
    return f.scaled(scale);
}

std::string polynomial_to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = abs(c);
        std::string body;
        if (m == Monomial{}) {
            body = rational_to_text(a);
        } else {
            body = monomial_to_text(m);
            if (a != 1) body = rational_to_text(a) + "*" + body;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

struct TextCursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
};

Rational parse_number(TextCursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && c.s[c.i] >= '0' && c.s[c.i] <= '9') ++c.i;
    if (c.i == start) throw ParseError("expected digits in polynomial literal");
    std::string num(c.s.substr(start, c.i - start));
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        c.skip_ws();
        std::size_t dstart = c.i;
        while (c.i < c.s.size() && c.s[c.i] >= '0' && c.s[c.i] <= '9') ++c.i;
        if (c.i == dstart) throw ParseError("expected denominator digits");
        std::string den(c.s.substr(dstart, c.i - dstart));
        return Rational(Int(num), Int(den));
    }
    return Rational(Int(num));
}

std::int64_t parse_exponent(TextCursor& c) {
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        c.skip_ws();
        std::size_t start = c.i;
        while (c.i < c.s.size() && c.s[c.i] >= '0' && c.s[c.i] <= '9') ++c.i;
        if (c.i == start) throw ParseError("expected exponent digits");
        return std::stoll(std::string(c.s.substr(start, c.i - start)));
    }
    return 1;
}

}  // namespace

Polynomial polynomial_from_text(std::string_view s) {
    Polynomial out;
    TextCursor c{s};
    if (c.done()) throw ParseError("empty polynomial literal");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();
        Rational coeff = 1;
        bool saw_number = false;
        if (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
            coeff = parse_number(c);
            saw_number = true;
        }
        Monomial mono;
        bool saw_var = false;
        while (true) {
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                ++c.i;
                c.skip_ws();
            } else if (saw_number || saw_var) {
                // contiguous variables without '*' are also accepted
            }
            if (c.i >= c.s.size()) break;
            char v = c.s[c.i];
            if (v != 'x' && v != 'y' && v != 'z') break;
            ++c.i;
            std::int64_t e = parse_exponent(c);
            if (v == 'x') mono.x += e;
            if (v == 'y') mono.y += e;
            if (v == 'z') mono.z += e;
            saw_var = true;
        }
        if (!saw_number && !saw_var) {
            if (s == "0") return Polynomial{};
            throw ParseError("expected a term in polynomial literal");
        }
        out.add_term(mono, sign < 0 ? -coeff : coeff);
    }
    return out;
}

}  // namespace moh
