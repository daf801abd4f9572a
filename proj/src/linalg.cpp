#include "moh/linalg.hpp"

#include <algorithm>
#include <set>

namespace moh {

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    // reduced row echelon form; pivot = leftmost nonzero, first available row
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = M.at(r, c);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[rank], a[sel]);
        Rational inv = Rational(1) / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[rank][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    // one basis vector per free column, that free variable set to 1
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

ChainSolution solve_triangular_chain(const std::vector<LinearEquation>& equations,
                                     const std::map<std::string, Rational>& known) {
    ChainSolution sol;
    sol.values = known;
    std::set<std::string> mentioned;
    for (std::size_t idx = 0; idx < equations.size(); ++idx) {
        const auto& eq = equations[idx];
        const std::string label = eq.label.empty() ? std::to_string(idx) : eq.label;
        Rational constant = -eq.rhs;
        const std::string* open_unknown = nullptr;
        Rational open_coeff = 0;
        for (const auto& [name, coeff] : eq.lhs) {
            mentioned.insert(name);
            auto it = sol.values.find(name);
            if (it != sol.values.end()) {
                constant += coeff * it->second;
            } else if (open_unknown && *open_unknown == name) {
                open_coeff += coeff;
            } else if (open_unknown) {
                SolveError e(SolveError::Kind::Underdetermined,
                             "equation " + label + " leaves more than one unknown open (" +
                                 *open_unknown + ", " + name + ")");
                e.unknown = name;
                e.equation = idx;
                throw e;
            } else {
                open_unknown = &name;
                open_coeff = coeff;
            }
        }
        if (open_unknown && open_coeff != 0) {
            sol.values[*open_unknown] = -constant / open_coeff;
            continue;
        }
        // pure consistency constraint; an open unknown with a vanishing
        // coefficient stays open and is reported at the end if never pinned
        if (constant != 0) {
            SolveError e(SolveError::Kind::Inconsistent, "equation " + label +
                                                             " has nonzero residual " +
                                                             rational_to_text(constant));
            e.equation = idx;
            e.residual = rational_to_text(constant);
            throw e;
        }
        ++sol.consistency_checks;
    }
    for (const auto& name : mentioned) {
        if (!sol.values.contains(name)) {
            SolveError e(SolveError::Kind::Underdetermined,
                         "unknown " + name + " is never pinned");
            e.unknown = name;
            throw e;
        }
    }
    return sol;
}

}  // namespace moh
