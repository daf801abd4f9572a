#include "moh/rational.hpp"

#include "moh/errors.hpp"

namespace moh {

std::string rational_to_text(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_text(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw ParseError("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits");
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9')
                throw ParseError("invalid integer literal: " + std::string(t));
        return Int(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return Rational(num, den);
}

Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

}  // namespace moh
