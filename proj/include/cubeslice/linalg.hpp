#ifndef CUBESLICE_LINALG_HPP
#define CUBESLICE_LINALG_HPP

#include <optional>

#include "cubeslice/rational.hpp"

namespace cubeslice {

/// Exact rank over Q. Fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix, so intermediate entries stay bounded.
int rank(const RatMat& m);

/// Basis of the right kernel {x : Mx = 0}; size is cols - rank.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// One exact solution of Mx = b, or nullopt when the system is inconsistent.
/// Inconsistency is a normal outcome, not an error.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

/// Reduced row echelon form; pivot_cols gets the pivot column indices.
RatMat rref(const RatMat& m, std::vector<int>* pivot_cols = nullptr);

/// Rank of a set of vectors (rows).
int rank_of_vectors(const std::vector<RatVec>& vs);

}  // namespace cubeslice

#endif
