#pragma once

#include "moh/errors.hpp"
#include "moh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace moh {

/// Dense matrix over the rationals; dimensions fixed at construction.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> cells_;
};

/// Basis of the right nullspace of M, one vector per free column.
/// Deterministic: Gauss-Jordan with leftmost-nonzero/first-row pivoting;
/// each basis vector sets one free variable to 1 (free columns in ascending
/// order) and solves the pivots.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M);

/// One linear equation sum(coeff * unknown) = rhs over named unknowns.
struct LinearEquation {
    std::vector<std::pair<std::string, Rational>> lhs;
    Rational rhs = 0;
    std::string label;  // used in error messages
};

struct ChainSolution {
    std::map<std::string, Rational> values;
    std::size_t consistency_checks = 0;  // equations that were pure constraints
};

/// Forward substitution in the given equation order: each equation, after
/// substituting known/solved values, must either pin exactly one remaining
/// unknown or reduce to a consistency constraint. Throws SolveError
/// (Inconsistent with the equation index and residual, or Underdetermined
/// naming an unknown that is never pinned).
ChainSolution solve_triangular_chain(const std::vector<LinearEquation>& equations,
                                     const std::map<std::string, Rational>& known);

}  // namespace moh
