// Orthogonality-preservation constraint spaces. For a measurement by one
// party, the post-measurement states of an orthogonal set stay pairwise
// orthogonal iff the measurement's M†M operator H satisfies
// ⟨a_i|H|a_j⟩ = 0 for every state pair whose other-party overlaps are
// nonzero. This module solves that real-linear system exactly and decides
// when only trivial (∝ identity) measurements remain.

#pragma once

#include <cstddef>
#include <vector>

#include "opset/linalg.hpp"
#include "opset/state_set.hpp"

namespace opset {

/// One pairwise orthogonality constraint. The pair binds the measuring
/// party iff the product of all other parties' overlaps is nonzero.
struct ConstraintRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar bystander_overlap;
  bool active = false;
};

/// Real-linear space of Hermitian operators compatible with all active
/// constraints, with a canonical (row-reduced) basis. Always contains the
/// identity.
struct HermitianSpace {
  std::size_t party = 0;
  std::size_t dim = 0;        // operator size d
  std::size_t dim_space = 0;  // number of basis elements
  std::vector<Mat> basis;
};

struct ConstraintDerivation {
  HermitianSpace space;
  std::vector<ConstraintRecord> records;
};

/// Solve for all Hermitian H on `party` with ⟨a_i|H|a_j⟩ = 0 over the
/// active pairs. Requires an orthogonal set. The basis is canonical:
/// nullspace of the constraint system in the parameter order (diagonal
/// entries, then re/im of each off-diagonal), row-reduced.
ConstraintDerivation derive_constraint_space(const StateSet& s, std::size_t party);

/// True iff the space is one-dimensional; its single basis element is then
/// necessarily proportional to the identity.
bool only_trivial(const HermitianSpace& space);

struct IrreducibilityReport {
  bool locally_irreducible = false;
  std::vector<bool> party_only_trivial;  // per party
  bool singleton_convention = false;     // sets of < 2 states report false
};

/// A set is locally irreducible when no party admits any nontrivial
/// orthogonality-preserving measurement, i.e. every party's constraint
/// space is trivial. Sets with fewer than two states return false by
/// convention (there is nothing to eliminate).
IrreducibilityReport is_locally_irreducible(const StateSet& s);

/// Hermitian d x d matrix from the real parameter vector used by the
/// solver (d diagonal entries, then re/im per off-diagonal, row-major).
Mat hermitian_from_params(const Vec& params, std::size_t d);

}  // namespace opset
