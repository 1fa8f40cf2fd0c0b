// Exact spectral decomposition helpers. Numeric eigensolves are used only
// as hints; every eigenvalue and eigenvector that leaves this module has
// been re-verified in exact rational arithmetic. Candidates that fail
// exact verification are discarded and reported via the `exact` flag.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opset/linalg.hpp"

namespace opset {

struct BlockDecomposition {
  // Mutually orthogonal subspaces spanning C^dim, each as an orthogonal
  // exact basis, canonically ordered.
  std::vector<std::vector<Vec>> blocks;
  // False when a numeric fallback had to discard unverifiable candidates;
  // the blocks are then a coarsening of the true decomposition.
  bool exact = true;
};

/// Best rational approximation of x with |x - p/q| <= tol, by continued
/// fractions. Returns nullopt when no small-denominator witness exists.
std::optional<Rational> rationalize(double x, double tol = 1e-9);

/// Eigenvalues (rational, ascending) and exact eigenspaces of a
/// diagonalizable matrix with real rational spectrum. Numeric eigenvalues
/// seed rational candidates; each is confirmed by an exact nullspace.
/// Returns nullopt when the verified eigenspaces do not fill the space
/// (e.g. irrational spectrum).
std::optional<std::vector<std::pair<Rational, std::vector<Vec>>>> exact_eigenspaces(
    const Mat& a);

/// Finest joint eigenspace decomposition of a pairwise-commuting family of
/// Hermitian operators. A deterministic generic element (prime-weighted
/// combination) splits first; each family member then refines any block on
/// which it fails to act as a scalar.
BlockDecomposition joint_eigenblocks(const std::vector<Mat>& family, std::size_t dim);

/// True iff all pairs in the family commute.
bool pairwise_commuting(const std::vector<Mat>& family);

}  // namespace opset
