#include "moh/rho.hpp"

namespace moh {

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
    UniPolynomial r;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(da + db, ca * cb);
    return r;
}

std::string UniPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rational a = abs(c);
        std::string body = d == 0 ? rational_to_text(a)
                                  : (a == 1 ? "" : rational_to_text(a) + "*") + "t^" +
                                        std::to_string(d);
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

UniPolynomial rho_apply(const Polynomial& f, const MohParams& P) {
    const std::int64_t n = P.n, m = P.m, lambda = P.lambda;
    UniPolynomial out;
    for (const auto& [mono, coeff] : f.terms()) {
        // (t^{nm} + t^{nm+lambda})^x * t^{(n+1)m y} * t^{(n+2)m z}
        const std::int64_t base = n * m * mono.x + (n + 1) * m * mono.y + (n + 2) * m * mono.z;
        for (std::int64_t j = 0; j <= mono.x; ++j)
            out.add_term(base + lambda * j, coeff * Rational(binomial(mono.x, j)));
    }
    return out;
}

bool is_in_kernel(const Polynomial& f, const MohParams& P) {
    return rho_apply(f, P).is_zero();
}

std::vector<std::pair<std::int64_t, Rational>> tail_image_profile(std::int64_t u,
                                                                  const MohParams& P) {
    if (u < 1 || u > P.m + 1)
        throw IndexOutOfRangeError("tail_image_profile requires 1 <= u <= m+1, got " +
                                   std::to_string(u));
    std::vector<std::pair<std::int64_t, Rational>> out;
    const std::int64_t base = P.n * P.m * (P.n + 1);
    for (std::int64_t j = 0; j <= P.m + 1 - u; ++j)
        out.emplace_back(base + P.lambda * (P.m + j), Rational(binomial(P.m + 1 - u, j)));
    return out;
}

}  // namespace moh
