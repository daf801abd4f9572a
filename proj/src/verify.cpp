#include "moh/verify.hpp"

#include "moh/rho.hpp"

#include "json.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace moh {

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

void run_check(VerificationReport& report, const std::string& name, const CheckFn& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto [pass, witness] = fn();
    auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.pass = pass;
    r.witness = std::move(witness);
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.checks.push_back(std::move(r));
}

std::string first_nonzero_degree(const UniPolynomial& u) {
    if (u.is_zero()) return "zero image";
    const auto& [d, c] = *u.terms().begin();
    return "t^" + std::to_string(d) + " has coefficient " + rational_to_text(c);
}

Polynomial chain_combination(const GeneratorSet& G, int chain,
                             const std::vector<Polynomial>& parts) {
    const auto& a = G.tables.a.at(chain);
    Polynomial combo = parts[static_cast<std::size_t>(chain) - 1].times_monomial({0, 0, 1}, a[0]);
    combo += parts[static_cast<std::size_t>(chain)].times_monomial({0, 1, 0}, a[1]);
    combo += parts[static_cast<std::size_t>(chain) + 1].times_monomial({1, 0, 0}, a[2]);
    return combo;
}

void kernel_suite(VerificationReport& rep, const GeneratorSet& G) {
    for (std::size_t i = 1; i <= G.generators.size(); ++i) {
        run_check(rep, "kernel.f" + std::to_string(i), [&, i] {
            UniPolynomial img = rho_apply(G.generator(i), G.params);
            if (img.is_zero()) return std::pair{true, std::string{}};
            return std::pair{false, first_nonzero_degree(img)};
        });
    }
}

void syzygy_suite(VerificationReport& rep, const GeneratorSet& G) {
    for (const auto& chain : G.chains) {
        const int ch = chain.chain;
        run_check(rep, "syzygy.sigma.chain" + std::to_string(ch), [&] {
            Polynomial combo = chain_combination(G, ch, G.sigma_parts);
            if (combo.is_zero()) return std::pair{true, std::string{}};
            return std::pair{false, "leading-form relation leaves " +
                                        polynomial_to_text(combo)};
        });
        // the full relation is zero or a certified kernel element: recompute
        // the residual, re-expand the certificate, and re-apply rho to it
        run_check(rep, "syzygy.chain" + std::to_string(ch), [&] {
            Polynomial combo = chain_combination(G, ch, G.generators);
            if (combo != chain.residual)
                return std::pair{false, std::string{"stored residual differs from recomputed relation"}};
            if (combo.is_zero()) return std::pair{true, std::string{"exact"}};
            Polynomial expanded;
            const std::int64_t n = G.params.n;
            for (const auto& [mono, coef] : chain.certificate) {
                expanded.add_term({mono.x, mono.y + n + 2, mono.z}, coef);
                expanded.add_term({mono.x, mono.y, mono.z + n + 1}, -coef);
            }
            if (expanded != combo)
                return std::pair{false, "certificate does not reproduce the residual " +
                                            polynomial_to_text(combo)};
            if (!is_in_kernel(combo, G.params))
                return std::pair{false,
                                 "residual " + polynomial_to_text(combo) + " is not in the kernel"};
            return std::pair{true, "inexact; residual " + polynomial_to_text(combo) +
                                       " certified as kernel element"};
        });
    }
}

void sigma_suite(VerificationReport& rep, const GeneratorSet& G) {
    const SigmaGrading grading = G.grading();
    const std::int64_t n = G.params.n;
    for (std::size_t i = 1; i <= G.generators.size(); ++i) {
        run_check(rep, "sigma.order.f" + std::to_string(i), [&, i] {
            std::int64_t expected = n * n + n + static_cast<std::int64_t>(i) - 1;
            std::int64_t got = sigma_order(G.generator(i), grading);
            if (got == expected) return std::pair{true, std::string{}};
            return std::pair{false, "sigma-order " + std::to_string(got) + ", expected " +
                                        std::to_string(expected)};
        });
        run_check(rep, "sigma.leading.f" + std::to_string(i), [&, i] {
            Polynomial lead = sigma_leading_form(G.generator(i), grading);
            if (lead == G.sigma_parts[i - 1]) return std::pair{true, std::string{}};
            return std::pair{false, "leading form " + polynomial_to_text(lead) +
                                        " differs from constructed " +
                                        polynomial_to_text(G.sigma_parts[i - 1])};
        });
    }
}

void counts_suite(VerificationReport& rep, const GeneratorSet& G) {
    const std::int64_t n = G.params.n;
    run_check(rep, "counts.generators", [&] {
        if (G.generators.size() == static_cast<std::size_t>(n) + 1)
            return std::pair{true, std::string{}};
        return std::pair{false, std::to_string(G.generators.size()) + " generators, expected " +
                                    std::to_string(n + 1)};
    });
    run_check(rep, "counts.sigma_orders", [&] {
        const SigmaGrading grading = G.grading();
        for (std::size_t i = 1; i <= G.generators.size(); ++i) {
            std::int64_t got = sigma_order(G.generator(i), grading);
            if (got != n * n + n + static_cast<std::int64_t>(i) - 1)
                return std::pair{false, "f" + std::to_string(i) + " has sigma-order " +
                                            std::to_string(got)};
        }
        return std::pair{true, std::string{}};
    });
    run_check(rep, "counts.skeleton", [&] {
        for (std::int64_t l = 1; l <= G.params.m; ++l) {
            auto [even_family, odd_family] = tail_monomials(G.params, l);
            if (even_family.size() != static_cast<std::size_t>(l) ||
                odd_family.size() != static_cast<std::size_t>(l) + 1)
                return std::pair{false, "skeleton sizes for l=" + std::to_string(l) +
                                            " are not (l, l+1)"};
        }
        return std::pair{true, std::string{}};
    });
}

void identities_suite(VerificationReport& rep, const GeneratorSet& G) {
    run_check(rep, "identities.binomial", [&] {
        if (check_binomial_identities(G.params.m)) return std::pair{true, std::string{}};
        return std::pair{false, "a binomial sum fails to vanish for m = " +
                                    std::to_string(G.params.m)};
    });
    run_check(rep, "identities.tail_image", [&] {
        // the closed-form image of every f1 tail monomial
        auto [even_family, odd_family] = tail_monomials(G.params, G.params.m);
        for (std::int64_t u = 1; u <= G.params.m + 1; ++u) {
            UniPolynomial img = rho_apply(
                Polynomial::monomial(odd_family[static_cast<std::size_t>(u) - 1]), G.params);
            UniPolynomial expect;
            for (const auto& [deg, coef] : tail_image_profile(u, G.params))
                expect.add_term(deg, coef);
            if (!(img == expect))
                return std::pair{false, "image of tail monomial u=" + std::to_string(u) + " is " +
                                            img.to_text() + ", predicted " + expect.to_text()};
        }
        return std::pair{true, std::string{}};
    });
}

void n1_suite(VerificationReport& rep, const GeneratorSet& G) {
    const OrderedBasis B = n1_basis(G.params);
    const Polynomial &g1 = B.polys[0], &g2 = B.polys[1], &g3 = B.polys[2], &g4 = B.polys[3];
    run_check(rep, "n1.kernel", [&] {
        for (std::size_t i = 0; i < 4; ++i)
            if (!is_in_kernel(B.polys[i], G.params))
                return std::pair{false, "g" + std::to_string(i + 1) + " is not in the kernel"};
        return std::pair{true, std::string{}};
    });
    run_check(rep, "n1.buchberger", [&] {
        auto res = buchberger_check(B);
        if (res.is_groebner_basis) return std::pair{true, std::string{}};
        std::string w = "failing pairs:";
        for (auto [i, j] : res.failing_pairs)
            w += " (g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1) + ")";
        return std::pair{false, w};
    });
    run_check(rep, "n1.spair", [&] {
        if (s_polynomial(g2, g3) == -g1) return std::pair{true, std::string{}};
        return std::pair{false, std::string{"S(g2,g3) != -g1"}};
    });
    run_check(rep, "n1.reduction", [&] {
        if (G.params.sec2_r == 3) {
            Polynomial lhs = g3.times_monomial({0, 0, 1}) - g2.times_monomial({0, 1, 0});
            if (lhs == g1) return std::pair{true, std::string{"g1 = z*g3 - y*g2"}};
            return std::pair{false, std::string{"z*g3 - y*g2 != g1"}};
        }
        Polynomial lhs = g4.times_monomial({0, 1, 0}) - g3.times_monomial({1, 0, 0});
        if (lhs == g2) return std::pair{true, std::string{"g2 = y*g4 - x*g3"}};
        return std::pair{false, std::string{"y*g4 - x*g3 != g2"}};
    });
}

void oracle_suite(VerificationReport& rep, const GeneratorSet& G, std::size_t budget) {
    const OrderedBasis oracle = kernel_oracle(G.params, budget);
    run_check(rep, "oracle.members_in_kernel", [&] {
        for (std::size_t i = 0; i < oracle.polys.size(); ++i)
            if (!is_in_kernel(oracle.polys[i], G.params))
                return std::pair{false, "oracle member " + std::to_string(i) + " not in kernel"};
        return std::pair{true, "members: " + std::to_string(oracle.polys.size())};
    });
    run_check(rep, "oracle.matches_n1_ideal", [&] {
        const OrderedBasis B = n1_basis(G.params);
        OrderedBasis sub;
        if (G.params.sec2_r == 3)
            sub.polys = {B.polys[1], B.polys[2], B.polys[3]};
        else
            sub.polys = {B.polys[2], B.polys[3]};
        if (ideal_equal(oracle, sub, budget)) return std::pair{true, std::string{}};
        return std::pair{false, std::string{"elimination ideal differs from the explicit n=1 ideal"}};
    });
    run_check(rep, "oracle.contains_construction", [&] {
        const OrderedBasis gb = buchberger_complete(oracle, budget);
        for (std::size_t i = 0; i < G.generators.size(); ++i)
            if (!normal_form(G.generators[i], gb).is_zero())
                return std::pair{false,
                                 "f" + std::to_string(i + 1) + " does not reduce to zero"};
        return std::pair{true, std::string{}};
    });
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
    if (name == "kernel") return Suite::Kernel;
    if (name == "syzygy") return Suite::Syzygy;
    if (name == "sigma") return Suite::Sigma;
    if (name == "counts") return Suite::Counts;
    if (name == "identities") return Suite::Identities;
    if (name == "n1") return Suite::N1;
    if (name == "oracle") return Suite::Oracle;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Kernel: return "kernel";
        case Suite::Syzygy: return "syzygy";
        case Suite::Sigma: return "sigma";
        case Suite::Counts: return "counts";
        case Suite::Identities: return "identities";
        case Suite::N1: return "n1";
        case Suite::Oracle: return "oracle";
        case Suite::All: return "all";
    }
    return "?";
}

bool VerificationReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.witness.empty()) os << ": " << c.witness;
        os << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << " n=" << n << " lambda=" << lambda << " suite=" << suite
       << "\n";
    return os.str();
}

std::string VerificationReport::to_json_text() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["lambda"] = lambda;
    j["suite"] = suite;
    j["status"] = pass() ? "PASS" : "FAIL";
    nlohmann::ordered_json checks_json = nlohmann::ordered_json::object();
    for (const auto& c : checks) {
        checks_json[c.name] = {
            {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}, {"millis", c.millis}};
    }
    j["checks"] = checks_json;
    return j.dump(2);
}

VerificationReport run_suite(std::int64_t n, std::int64_t lambda, Suite suite,
                             std::size_t oracle_budget) {
    if ((suite == Suite::N1 || suite == Suite::Oracle) && n != 1) throw NotN1Error();
    VerificationReport rep;
    rep.n = n;
    rep.lambda = lambda;
    rep.suite = suite_name(suite);
    const GeneratorSet G = build_generators(n, lambda);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Kernel) kernel_suite(rep, G);
    if (all || suite == Suite::Syzygy) syzygy_suite(rep, G);
    if (all || suite == Suite::Sigma) sigma_suite(rep, G);
    if (all || suite == Suite::Counts) counts_suite(rep, G);
    if (all || suite == Suite::Identities) identities_suite(rep, G);
    if (suite == Suite::N1 || (all && n == 1)) n1_suite(rep, G);
    if (suite == Suite::Oracle || (all && n == 1)) oracle_suite(rep, G, oracle_budget);
    return rep;
}

}  // namespace moh
