#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

std::size_t rank(const RatMatrix& m);

std::size_t rank_of_rows(const std::vector<RatVector>& rows, std::size_t dim);

// Basis of {v : Mv = 0}, each vector canonicalized, sorted canonically.
// Empty iff rank = cols.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> homogeneous_basis;
};

// Solves Mx = b. nullopt iff inconsistent. Throws InputError on a
// dimension mismatch.
std::optional<LinearSolution> solve(const RatMatrix& m, const RatVector& b);

// Coefficients c with sum c_i vs_i = t, or nullopt.
std::optional<RatVector> in_span(const std::vector<RatVector>& vs,
                                 const RatVector& t);

}  // namespace conecalc
