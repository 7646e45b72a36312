#pragma once

#include "mbposet/integer_matrix.hpp"

#include <optional>
#include <vector>

namespace mbposet {

/// A = left * diagonal * right with left, right unimodular. The nonzero
/// diagonal entries are positive and form a divisibility chain.
struct SmithDecomposition {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix left_inverse;
  IntegerMatrix right_inverse;
  std::vector<Integer> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Nonzero diagonal of the Smith form, skipping the transform bookkeeping.
std::vector<Integer> invariant_factors(const IntegerMatrix& a);

/// Columns form a Z-basis of {x : A x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Exact integer solution of A x = b, if one exists.
std::optional<std::vector<Integer>> solve(const IntegerMatrix& a, const std::vector<Integer>& b);

/// Exact integer solution of A X = B, column by column.
std::optional<IntegerMatrix> solve(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace mbposet
