// Local projective measurements: applying projectors exactly, checking the
// orthogonality-preserving property, and enumerating the projective
// measurements a party can perform without breaking pairwise orthogonality.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opset/constraints.hpp"
#include "opset/state_set.hpp"

namespace opset {

/// Orthogonal projection onto the span of `support` on one party's space.
class Projector {
 public:
  Projector(std::size_t party, std::vector<Vec> support, std::size_t dim);

  std::size_t party() const { return party_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return ortho_basis_.size(); }
  const std::vector<Vec>& support() const { return support_; }
  const std::vector<Vec>& ortho_basis() const { return ortho_basis_; }
  const Mat& matrix() const { return matrix_; }

 private:
  std::size_t party_;
  std::size_t dim_;
  std::vector<Vec> support_;      // spanning set as given
  std::vector<Vec> ortho_basis_;  // Gram-Schmidt basis of the span
  Mat matrix_;
};

/// Projective measurement on one party: pairwise orthogonal elements whose
/// ranks sum to the party dimension.
struct PVM {
  std::size_t party = 0;
  std::vector<Projector> elements;

  /// Nontrivial iff it has more than one element (projective elements
  /// proportional to the identity are the identity itself).
  bool nontrivial() const { return elements.size() > 1; }

  void validate(std::size_t party_dim) const;
};

enum class Closure { SUBSET, NEW_DIRECTIONS };

struct OutcomeResult {
  std::size_t element_index = 0;
  StateSet survivors;  // ambient dims, measured factors replaced by projections
  std::vector<std::string> eliminated_labels;
  Closure closure = Closure::SUBSET;
  /// Survivors re-expressed in an exact basis of the projector's support
  /// (the measured party's dimension becomes the projector rank).
  StateSet restricted;
};

/// Apply (P ⊗ I) to every state. States whose measured factor projects to
/// zero are eliminated; survivors keep their labels. Closure is SUBSET iff
/// every survivor is proportional to a member of the input set.
OutcomeResult apply_projector(const StateSet& s, const Projector& p);

/// True iff for every element of the PVM the surviving post-measurement
/// states are pairwise orthogonal.
bool is_orthogonality_preserving(const StateSet& s, const PVM& m);

struct PvmEnumeration {
  std::vector<PVM> pvms;  // nontrivial only, finest-first
  /// True when the list provably contains every orthogonality-preserving
  /// PVM up to coarse-graining (constraint space commutative and fully
  /// decomposed). False flags INCOMPLETE_ENUMERATION.
  bool complete = true;
};

/// All nontrivial orthogonality-preserving PVMs on `party` that the
/// deterministic search families produce:
///   - joint eigenspace blocks of the constraint space when it commutes
///     (exhaustive in that case), with all coarse-grainings;
///   - blocks of the centre of a noncommuting constraint space;
///   - connected components of the factors' nonorthogonality graph;
///   - coordinate partitions whose parts zero out every active pair.
/// Every element of every returned PVM satisfies the constraint space
/// exactly. Requires an orthogonal set.
PvmEnumeration enumerate_op_pvms(const StateSet& s, std::size_t party);

/// Canonical form for deduplication and deterministic ordering.
std::string pvm_key(const PVM& m);

}  // namespace opset
