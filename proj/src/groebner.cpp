#include "moh/groebner.hpp"

#include "moh/rho.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace moh {

namespace {

// Generic lex engine over N exponents (index 0 is the most significant
// variable). The public 3-variable order x > y > z and the oracle's
// t > x > y > z are both instances.
template <std::size_t N>
struct VMono {
    std::array<std::int64_t, N> e{};
    friend auto operator<=>(const VMono&, const VMono&) = default;
    bool divides(const VMono& m) const {
        for (std::size_t i = 0; i < N; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    VMono operator*(const VMono& m) const {
        VMono r;
        for (std::size_t i = 0; i < N; ++i) r.e[i] = e[i] + m.e[i];
        return r;
    }
    VMono operator/(const VMono& m) const {
        VMono r;
        for (std::size_t i = 0; i < N; ++i) r.e[i] = e[i] - m.e[i];
        return r;
    }
    static VMono lcm(const VMono& a, const VMono& b) {
        VMono r;
        for (std::size_t i = 0; i < N; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    std::int64_t total_degree() const {
        std::int64_t s = 0;
        for (auto v : e) s += v;
        return s;
    }
};

template <std::size_t N>
using VPoly = std::map<VMono<N>, Rational, std::greater<VMono<N>>>;

template <std::size_t N>
void vadd(VPoly<N>& p, const VMono<N>& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

template <std::size_t N>
void vaxpy(VPoly<N>& p, const VPoly<N>& q, const VMono<N>& shift, const Rational& scale) {
    for (const auto& [m, c] : q) vadd(p, m * shift, c * scale);
}

template <std::size_t N>
VPoly<N> vnormal_form(VPoly<N> f, const std::vector<VPoly<N>>& G,
                      std::vector<VPoly<N>>* quotients = nullptr) {
    VPoly<N> r;
    while (!f.empty()) {
        const auto& [lead, coeff] = *f.begin();
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto& [glead, gcoeff] = *G[i].begin();
            if (!glead.divides(lead)) continue;
            VMono<N> shift = lead / glead;
            Rational q = coeff / gcoeff;
            vaxpy(f, G[i], shift, -q);
            if (quotients) vadd((*quotients)[i], shift, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.emplace(lead, coeff);
            f.erase(f.begin());
        }
    }
    return r;
}

template <std::size_t N>
VPoly<N> vspoly(const VPoly<N>& f, const VPoly<N>& g) {
    const auto& [fl, fc] = *f.begin();
    const auto& [gl, gc] = *g.begin();
    VMono<N> L = VMono<N>::lcm(fl, gl);
    VPoly<N> s;
    vaxpy(s, f, L / fl, Rational(1) / fc);
    vaxpy(s, g, L / gl, Rational(-1) / gc);
    return s;
}

template <std::size_t N>
bool coprime_leads(const VPoly<N>& f, const VPoly<N>& g) {
    const auto& fl = f.begin()->first;
    const auto& gl = g.begin()->first;
    for (std::size_t i = 0; i < N; ++i)
        if (fl.e[i] > 0 && gl.e[i] > 0) return false;
    return true;
}

template <std::size_t N>
std::vector<VPoly<N>> vcomplete(std::vector<VPoly<N>> G, std::size_t budget) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const VPoly<N>& p) { return p.empty(); }),
            G.end());
    struct Pair {
        std::size_t i, j;
        VMono<N> lcm;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        return Pair{i, j, VMono<N>::lcm(G[i].begin()->first, G[j].begin()->first)};
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.push_back(make_pair(i, j));
    // normal selection: lowest lcm total degree first, ties by lex on the lcm
    auto later = [](const Pair& a, const Pair& b) {
        if (a.lcm.total_degree() != b.lcm.total_degree())
            return a.lcm.total_degree() > b.lcm.total_degree();
        return a.lcm > b.lcm;
    };
    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [&](const Pair& a, const Pair& b) { return later(b, a); });
        Pair pr = *it;
        pairs.erase(it);
        if (++processed > budget)
            throw BudgetExceededError("pair budget of " + std::to_string(budget) +
                                      " exceeded during basis completion");
        if (coprime_leads(G[pr.i], G[pr.j])) continue;
        VPoly<N> r = vnormal_form(vspoly(G[pr.i], G[pr.j]), G);
        if (r.empty()) continue;
        G.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back(make_pair(k, G.size() - 1));
    }
    // minimize: drop members whose leading monomial is divisible by another's
    std::vector<VPoly<N>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = G[i].begin()->first;
            const auto& lj = G[j].begin()->first;
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // inter-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<VPoly<N>> rest;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) rest.push_back(minimal[j]);
            VPoly<N> r = vnormal_form(minimal[i], rest);
            if (r != minimal[i]) {
                changed = true;
                if (r.empty())
                    minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    minimal[i] = std::move(r);
                break;
            }
        }
    }
    for (auto& g : minimal) {
        Rational lc = g.begin()->second;
        for (auto& [m, c] : g) c /= lc;
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const VPoly<N>& a, const VPoly<N>& b) { return a.begin()->first < b.begin()->first; });
    return minimal;
}

VPoly<3> to_vec(const Polynomial& p) {
    VPoly<3> r;
    for (const auto& [m, c] : p.terms()) r.emplace(VMono<3>{{m.x, m.y, m.z}}, c);
    return r;
}

Polynomial from_vec(const VPoly<3>& p) {
    Polynomial r;
    for (const auto& [m, c] : p) r.add_term(Monomial{m.e[0], m.e[1], m.e[2]}, c);
    return r;
}

std::vector<VPoly<3>> to_vec(const OrderedBasis& B) {
    std::vector<VPoly<3>> r;
    for (const auto& p : B.polys)
        if (!p.is_zero()) r.push_back(to_vec(p));
    return r;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const OrderedBasis& G) {
    return from_vec(vnormal_form(to_vec(f), to_vec(G)));
}

DivisionResult divide(const Polynomial& f, const OrderedBasis& G) {
    auto vg = to_vec(G);
    std::vector<VPoly<3>> q(vg.size());
    VPoly<3> r = vnormal_form(to_vec(f), vg, &q);
    DivisionResult out;
    out.remainder = from_vec(r);
    for (const auto& qi : q) out.quotients.push_back(from_vec(qi));
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
    return from_vec(vspoly(to_vec(f), to_vec(g)));
}

BuchbergerResult buchberger_check(const OrderedBasis& G, bool skip_coprime) {
    auto vg = to_vec(G);
    BuchbergerResult res;
    res.is_groebner_basis = true;
    for (std::size_t i = 0; i < vg.size(); ++i) {
        for (std::size_t j = i + 1; j < vg.size(); ++j) {
            if (skip_coprime && coprime_leads(vg[i], vg[j])) continue;
            if (!vnormal_form(vspoly(vg[i], vg[j]), vg).empty()) {
                res.is_groebner_basis = false;
                res.failing_pairs.emplace_back(i, j);
            }
        }
    }
    return res;
}

OrderedBasis buchberger_complete(const OrderedBasis& F, std::size_t budget) {
    OrderedBasis out;
    for (const auto& g : vcomplete(to_vec(F), budget)) out.polys.push_back(from_vec(g));
    return out;
}

bool ideal_equal(const OrderedBasis& F, const OrderedBasis& G, std::size_t budget) {
    return buchberger_complete(F, budget).polys == buchberger_complete(G, budget).polys;
}

OrderedBasis n1_basis(const MohParams& P) {
    if (P.n != 1) throw NotN1Error();
    const std::int64_t r = P.sec2_r, p = P.sec2_p;
    const std::int64_t num = (r - 2) * (3 * r - 5);
    if (num % 2 != 0)
        throw ExponentError(ExponentError::Kind::NonIntegral,
                            "(r-2)(3r-5)/2 is not an integer for r = " + std::to_string(r));
    const std::int64_t e_y = num / 2;
    const std::int64_t e_z = -r * r + 4 * r + p - 2;
    if (e_y < 0 || e_z < 0 || 3 - r < 0 || 4 - r < 0 || r + p - 1 < 0)
        throw ExponentError(ExponentError::Kind::Negative,
                            "negative exponent in the explicit n=1 basis");
    OrderedBasis B;
    B.polys.push_back(Polynomial{{{0, 3, 0}, 1}, {{0, 0, 2}, -1}});                    // g1
    B.polys.push_back(Polynomial{{{1, 0, 1}, 1}, {{0, 2, 0}, -1}, {{0, 3 - r, r + p}, -1}});  // g2
    B.polys.push_back(
        Polynomial{{{1, 1, 0}, 1}, {{0, 0, 1}, -1}, {{0, 4 - r, r + p - 1}, -1}});  // g3
    Polynomial g4{{{2, 0, 0}, 1}, {{0, 1, 0}, -1}};
    g4.add_term({1, 3 - r, r + p - 1}, -1);
    g4.add_term({0, e_y, e_z}, -1);
    B.polys.push_back(g4);
    return B;
}

OrderedBasis kernel_oracle(const MohParams& P, std::size_t budget) {
    // J = <x - rho(x), y - rho(y), z - rho(z)> in k[t,x,y,z], lex t > x > y > z;
    // the t-free members of the reduced basis generate the contraction.
    const std::int64_t n = P.n, m = P.m;
    std::vector<VPoly<4>> J(3);
    vadd(J[0], VMono<4>{{0, 1, 0, 0}}, Rational(1));
    vadd(J[0], VMono<4>{{n * m, 0, 0, 0}}, Rational(-1));
    vadd(J[0], VMono<4>{{n * m + P.lambda, 0, 0, 0}}, Rational(-1));
    vadd(J[1], VMono<4>{{0, 0, 1, 0}}, Rational(1));
    vadd(J[1], VMono<4>{{(n + 1) * m, 0, 0, 0}}, Rational(-1));
    vadd(J[2], VMono<4>{{0, 0, 0, 1}}, Rational(1));
    vadd(J[2], VMono<4>{{(n + 2) * m, 0, 0, 0}}, Rational(-1));
    OrderedBasis out;
    for (const auto& g : vcomplete(J, budget)) {
        bool t_free = std::all_of(g.begin(), g.end(),
                                  [](const auto& term) { return term.first.e[0] == 0; });
        if (!t_free) continue;
        Polynomial q;
        for (const auto& [mm, c] : g) q.add_term(Monomial{mm.e[1], mm.e[2], mm.e[3]}, c);
        out.polys.push_back(std::move(q));
    }
    return out;
}

}  // namespace moh
