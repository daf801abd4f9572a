#include "moh/forge.hpp"

#include "moh/linalg.hpp"
#include "moh/rho.hpp"

#include <string>

namespace moh {

namespace {

std::string cname(int i, int j) { return "c(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string aname(int i, int j) { return "a(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

/// f_g^sigma assembled from the coefficient row c[1..m+1] via the displayed
/// monomial templates (signs carried by the templates, the table stays
/// positive-normalized).
Polynomial sigma_part_from_row(int g, const std::vector<Rational>& row, const MohParams& P) {
    const std::int64_t m = P.m;
    Polynomial f;
    if (g % 2 == 1) {
        const std::int64_t i = (g + 1) / 2;
        for (std::int64_t j = 1; j <= i; ++j)  // sign (-1)^(j-1)
            f.add_term({2 * m - i - j + 2, 2 * j - 2, i - j},
                       (j % 2 == 1 ? row[j] : -row[j]));
        for (std::int64_t j = 1; j <= m + 1 - i; ++j)  // sign (-1)^(j+i-1)
            f.add_term({m + 1 - i - j, 2 * j - 1, m - 1 + i - j},
                       ((j + i) % 2 == 1 ? row[i + j] : -row[i + j]));
    } else {
        const std::int64_t i = g / 2;
        for (std::int64_t j = 1; j <= i; ++j)
            f.add_term({2 * m - i - j + 1, 2 * j - 1, i - j},
                       (j % 2 == 1 ? row[j] : -row[j]));
        for (std::int64_t j = 1; j <= m + 1 - i; ++j)
            f.add_term({m + 1 - i - j, 2 * j - 2, m + i - j},
                       ((j + i) % 2 == 1 ? row[i + j] : -row[i + j]));
    }
    return f;
}

Rational lookup(const std::map<std::string, Rational>& values, const std::string& key) {
    return values.at(key);
}

}  // namespace

std::pair<Polynomial, Polynomial> leading_seed(const MohParams& P) {
    const std::int64_t m = P.m;
    std::vector<Rational> c1(m + 2), c2(m + 2);
    c1[1] = 1;
    c2[1] = 1;
    for (std::int64_t j = 1; j <= m; ++j) {
        c1[j + 1] = Rational(binomial(m + j - 1, j - 1) * binomial(2 * m, m - j));
        c2[j + 1] = Rational(binomial(m + j - 2, j - 1) * binomial(2 * m - 1, m - j));
    }
    return {sigma_part_from_row(1, c1, P), sigma_part_from_row(2, c2, P)};
}

LeadingChainResult solve_leading_chain(const MohParams& P,
                                       const std::pair<Polynomial, Polynomial>& seeds) {
    const std::int64_t n = P.n, m = P.m;
    LeadingChainResult out;
    out.sigma_parts.resize(static_cast<std::size_t>(n) + 1);
    out.sigma_parts[0] = seeds.first;
    out.sigma_parts[1] = seeds.second;

    std::vector<std::vector<Rational>> crow(static_cast<std::size_t>(n) + 2);
    crow[1].assign(static_cast<std::size_t>(m) + 2, 0);
    crow[2].assign(static_cast<std::size_t>(m) + 2, 0);
    crow[1][1] = 1;
    crow[2][1] = 1;
    for (std::int64_t j = 1; j <= m; ++j) {
        crow[1][j + 1] = Rational(binomial(m + j - 1, j - 1) * binomial(2 * m, m - j));
        crow[2][j + 1] = Rational(binomial(m + j - 2, j - 1) * binomial(2 * m - 1, m - j));
    }

    for (int ch = 1; ch <= n - 1; ++ch) {
        const int g = ch + 2;
        std::vector<LinearEquation> eqs;
        std::map<std::string, Rational> known;
        // previous two coefficient rows are fixed
        for (std::int64_t j = 1; j <= m + 1; ++j) {
            known[cname(ch, static_cast<int>(j))] = crow[ch][j];
            known[cname(ch + 1, static_cast<int>(j))] = crow[ch + 1][j];
        }
        known[cname(g, 1)] = 1;
        known[aname(ch, ch + 2)] = 1;

        const std::string a_lo = aname(ch, ch);
        const std::string a_md = aname(ch, ch + 1);
        const std::string a_hi = aname(ch, ch + 2);
        const std::string chp = "chain" + std::to_string(ch);

        if (ch % 2 == 1) {
            const int i = (ch + 1) / 2;  // chain 2i-1 producing f_{2i+1}
            // column 1: a_lo c_{2i-1,1} + a_hi c_{2i+1,1} = 0
            eqs.push_back({{{a_lo, crow[ch][1]}, {a_hi, Rational(1)}}, 0, chp + ".col1"});
            // last column: a_lo c_{2i-1,m+1} + a_md c_{2i,m+1} = 0 pins a_md;
            // when c_{2i,m+1} = 0 any nonzero value works and we fix 1
            if (crow[ch + 1][m + 1] == 0) known[a_md] = 1;
            eqs.push_back({{{a_lo, crow[ch][m + 1]}, {a_md, crow[ch + 1][m + 1]}}, 0,
                           chp + ".last-column"});
            for (int j = 2; j <= i; ++j)
                eqs.push_back({{{a_lo, crow[ch][j]},
                                {a_md, -crow[ch + 1][j - 1]},
                                {cname(g, j), Rational(1)}},
                               0,
                               chp + ".col" + std::to_string(j)});
            eqs.push_back({{{a_md, crow[ch + 1][i]}, {cname(g, i + 1), Rational(-1)}}, 0,
                           chp + ".col" + std::to_string(i + 1)});
            for (int j = 1; j <= m - i; ++j)
                eqs.push_back({{{a_lo, crow[ch][i + j]},
                                {a_md, crow[ch + 1][i + j]},
                                {cname(g, i + j + 1), Rational(-1)}},
                               0,
                               chp + ".col" + std::to_string(i + j + 1)});
        } else {
            const int i = ch / 2;  // chain 2i producing f_{2i+2}
            // first and last columns give a 2x2 system for (a_lo, a_md):
            //   a_lo + a_md = -1   and   a_lo c_{2i,m+1} + a_md c_{2i+1,m+1} = 0
            const Rational det = crow[ch + 1][m + 1] - crow[ch][m + 1];
            if (det == 0)
                throw ChainError(ChainError::Kind::Degenerate, ch,
                                 "chain " + std::to_string(ch) +
                                     ": the first/last-column system for the a-coefficients is "
                                     "singular");
            known[a_lo] = -crow[ch + 1][m + 1] / det;
            known[a_md] = Rational(-1) - known[a_lo];
            eqs.push_back(
                {{{a_lo, crow[ch][1]}, {a_md, crow[ch + 1][1]}, {a_hi, Rational(1)}},
                 0,
                 chp + ".col1"});
            for (int j = 2; j <= i; ++j)
                eqs.push_back({{{a_lo, crow[ch][j]},
                                {a_md, crow[ch + 1][j]},
                                {cname(g, j), Rational(1)}},
                               0,
                               chp + ".col" + std::to_string(j)});
            eqs.push_back({{{a_md, crow[ch + 1][i + 1]}, {cname(g, i + 1), Rational(1)}}, 0,
                           chp + ".col" + std::to_string(i + 1)});
            eqs.push_back({{{a_lo, crow[ch][i + 1]}, {cname(g, i + 2), Rational(-1)}}, 0,
                           chp + ".col" + std::to_string(i + 2)});
            for (int j = 2; j <= m - i; ++j)
                eqs.push_back({{{a_lo, crow[ch][i + j]},
                                {a_md, crow[ch + 1][i + j]},
                                {cname(g, i + j + 1), Rational(-1)}},
                               0,
                               chp + ".col" + std::to_string(i + j + 1)});
            eqs.push_back(
                {{{a_lo, crow[ch][m + 1]}, {a_md, crow[ch + 1][m + 1]}}, 0, chp + ".last-column"});
        }

        ChainSolution sol;
        try {
            sol = solve_triangular_chain(eqs, known);
        } catch (const SolveError& e) {
            throw ChainError(ChainError::Kind::Inconsistent, ch,
                             "chain " + std::to_string(ch) + ": " + e.what());
        }

        crow[g].assign(static_cast<std::size_t>(m) + 2, 0);
        for (std::int64_t j = 1; j <= m + 1; ++j)
            crow[g][j] = lookup(sol.values, cname(g, static_cast<int>(j)));
        out.tables.a[ch] = {lookup(sol.values, a_lo), lookup(sol.values, a_md),
                            lookup(sol.values, a_hi)};
        out.sigma_parts[static_cast<std::size_t>(g) - 1] = sigma_part_from_row(g, crow[g], P);

        // the solved chain must be an exact polynomial identity
        Polynomial combo = out.sigma_parts[ch - 1].times_monomial({0, 0, 1}, out.tables.a[ch][0]);
        combo += out.sigma_parts[ch].times_monomial({0, 1, 0}, out.tables.a[ch][1]);
        combo += out.sigma_parts[ch + 1].times_monomial({1, 0, 0}, out.tables.a[ch][2]);
        if (!combo.is_zero())
            throw ChainError(ChainError::Kind::Inconsistent, ch,
                             "chain " + std::to_string(ch) +
                                 ": leading-form relation has surviving monomial " +
                                 monomial_to_text(combo.leading_term().first));
    }

    for (int g = 1; g <= n + 1; ++g)
        for (std::int64_t j = 1; j <= m + 1; ++j)
            out.tables.c[{g, static_cast<int>(j)}] = crow[g][j];
    return out;
}

std::pair<std::vector<Monomial>, std::vector<Monomial>> tail_monomials(const MohParams& P,
                                                                       std::int64_t l) {
    if (l < 1 || l > P.m)
        throw IndexOutOfRangeError("tail_monomials requires 1 <= l <= m, got " +
                                   std::to_string(l));
    const std::int64_t n = P.n, m = P.m, lambda = P.lambda, mod = n + 2;

    auto check = [](const Monomial& mono) {
        if (mono.z < 0 || mono.x < 0 || mono.y < 0)
            throw ExponentError(ExponentError::Kind::Negative,
                                "negative exponent in tail monomial " + monomial_to_text(mono));
        return mono;
    };

    // family of f_{n-2l+3} (even index), driven by the t-sequence
    std::vector<Monomial> even_family;
    const std::int64_t num1 = n * (m + 1) + lambda - (n + 1) * P.t(1) + 1;
    if (num1 % mod != 0)
        throw ExponentError(ExponentError::Kind::NonIntegral,
                            "n+2 does not divide n(m+1)+lambda-(n+1)t1+1");
    even_family.push_back(check({l - 1, P.t(1), num1 / mod + m - l}));
    for (std::int64_t s = 2; s <= l; ++s) {
        const Monomial& prev = even_family.back();
        std::int64_t gamma = prev.z;
        std::int64_t zexp = (P.t(s - 1) + 2 >= mod) ? gamma + P.t(s - 1) - P.t(s) : gamma - 1;
        even_family.push_back(check({l - s, P.t(s), zexp}));
    }

    // family of f_{n-2l+2} (odd index), driven by the primed sequence
    std::vector<Monomial> odd_family;
    const std::int64_t num2 = n * m + lambda - (n + 1) * P.t_prime(1);
    if (num2 % mod != 0)
        throw ExponentError(ExponentError::Kind::NonIntegral,
                            "n+2 does not divide nm+lambda-(n+1)t1'");
    odd_family.push_back(check({l, P.t_prime(1), num2 / mod + m - l}));
    for (std::int64_t s = 2; s <= l + 1; ++s) {
        const Monomial& prev = odd_family.back();
        std::int64_t gamma = prev.z;
        std::int64_t zexp = (P.t_prime(s - 1) + 2 >= mod) ? gamma + P.t_prime(s - 1) - P.t_prime(s)
                                                          : gamma - 1;
        odd_family.push_back(check({l - s + 1, P.t_prime(s), zexp}));
    }
    return {even_family, odd_family};
}

std::pair<Polynomial, Polynomial> tail_seed(const MohParams& P) {
    const std::int64_t m = P.m;
    auto [fam2, fam1] = tail_monomials(P, m);  // indices n-2m+3 = 2 and n-2m+2 = 1
    Polynomial f1t, f2t;
    for (std::int64_t s = 1; s <= m + 1; ++s)
        f1t.add_term(fam1[static_cast<std::size_t>(s) - 1], -Rational(binomial(m + s - 2, s - 1)));
    for (std::int64_t s = 1; s <= m; ++s)
        f2t.add_term(fam2[static_cast<std::size_t>(s) - 1], -Rational(binomial(m + s - 2, s - 1)));
    return {f1t, f2t};
}

TailChainResult solve_tail_chain(const MohParams& P,
                                 const std::pair<Polynomial, Polynomial>& seeds,
                                 const LeadingChainResult& leading, CoefficientTables& tables) {
    const std::int64_t n = P.n;
    TailChainResult out;
    out.tails.resize(static_cast<std::size_t>(n) + 1);
    out.tails[0] = seeds.first;
    out.tails[1] = seeds.second;

    std::vector<std::vector<Monomial>> skeleton(static_cast<std::size_t>(n) + 2);
    for (std::int64_t l = 1; l <= P.m; ++l) {
        auto [even_family, odd_family] = tail_monomials(P, l);
        skeleton[static_cast<std::size_t>(n - 2 * l + 3)] = even_family;
        skeleton[static_cast<std::size_t>(n - 2 * l + 2)] = odd_family;
    }

    for (int ch = 1; ch <= n - 1; ++ch) {
        const int g = ch + 2;
        const auto& a = leading.tables.a.at(ch);
        Polynomial lhs = out.tails[ch - 1].times_monomial({0, 0, 1}, a[0]);
        lhs += out.tails[ch].times_monomial({0, 1, 0}, a[1]);

        // d-coefficients read off the skeleton slots x * m_{(g,s)}
        Polynomial ftau;
        const auto& sk = skeleton[static_cast<std::size_t>(g)];
        for (std::size_t s = 0; s < sk.size(); ++s) {
            Rational coef = lhs.coefficient(sk[s] * Monomial{1, 0, 0});
            Rational d = coef / a[2];
            tables.d[{g, static_cast<int>(s) + 1}] = d;
            ftau.add_term(sk[s], -d);
        }

        ChainReport report;
        report.chain = ch;
        Polynomial residual = lhs + ftau.times_monomial({1, 0, 0}, a[2]);

        // monomials still divisible by x are absorbed into the tail: the
        // skeleton under-predicts the support for some parameter values
        for (const auto& [mono, coef] : residual.terms()) {
            if (mono.x >= 1) {
                Monomial extra{mono.x - 1, mono.y, mono.z};
                report.absorbed.emplace_back(extra, -coef / a[2]);
                ftau.add_term(extra, -coef / a[2]);
            }
        }
        residual = lhs + ftau.times_monomial({1, 0, 0}, a[2]);

        // an x-free remainder cannot be produced by any tail choice; it must
        // be a combination of mono * (y^{n+2} - z^{n+1}), which rho kills
        report.residual = residual;
        report.exact = residual.is_zero();
        Polynomial work = residual;
        while (!work.is_zero()) {
            Monomial picked;
            bool found = false;
            for (const auto& [mono, coef] : work.terms()) {
                if (mono.y >= n + 2) {
                    picked = mono;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw TailInconsistentError(
                    ch, monomial_to_text(work.leading_term().first),
                    "chain " + std::to_string(ch) + ": tail relation leaves monomial " +
                        monomial_to_text(work.leading_term().first) +
                        " that is neither matchable nor a kernel binomial multiple");
            const Monomial quot{picked.x, picked.y - (n + 2), picked.z};
            const Rational coef = work.coefficient(picked);
            report.certificate.emplace_back(quot, coef);
            work.add_term(picked, -coef);
            work.add_term({quot.x, quot.y, quot.z + n + 1}, coef);
        }

        out.chains.push_back(std::move(report));
        out.tails[static_cast<std::size_t>(g) - 1] = ftau;
    }
    return out;
}

GeneratorSet build_generators(std::int64_t n, std::int64_t lambda) {
    GeneratorSet G;
    G.params = validate_and_derive(n, lambda);
    auto seeds = leading_seed(G.params);
    LeadingChainResult lead = solve_leading_chain(G.params, seeds);
    auto tseeds = tail_seed(G.params);
    G.tables = lead.tables;
    TailChainResult tails = solve_tail_chain(G.params, tseeds, lead, G.tables);

    G.sigma_parts = std::move(lead.sigma_parts);
    G.tails = std::move(tails.tails);
    G.chains = std::move(tails.chains);
    const SigmaGrading grading{n};
    for (std::size_t i = 0; i < G.sigma_parts.size(); ++i) {
        Polynomial f = G.sigma_parts[i] + G.tails[i];
        G.canonical.push_back(canonicalize_primitive(f, grading));
        G.generators.push_back(std::move(f));
    }
    return G;
}

bool check_binomial_identities(std::int64_t m) {
    if (m < 1) return false;
    for (std::int64_t l = 0; l <= m; ++l) {
        Int nu = binomial(2 * m, m + l);
        for (std::int64_t k = 0; k <= m - l; ++k)
            nu -= binomial(m - 1 + k, k) * binomial(m - k, l);
        if (nu != 0) return false;
    }
    for (std::int64_t l = 0; l <= m - 1; ++l) {
        Int mu = binomial(2 * m, l);
        for (std::int64_t k = 1; k <= m - l; ++k) {
            Int term = binomial(m + k - 1, k - 1) * binomial(2 * m, m - k) * binomial(m - k, l);
            mu += (k % 2 == 1) ? -term : term;
        }
        if (mu != 0) return false;
    }
    return true;
}

}  // namespace moh
