// Finite sets of multipartite orthogonal product states, stored with exact
// unnormalised coordinates, and the structural classifications built on
// them: orthogonality, completeness class, local redundancy, bipartition
// flattening. Every predicate here is scale-invariant, so normalisation
// factors are never materialised.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opset/linalg.hpp"

namespace opset {

/// One party's (unnormalised) factor of a product state.
struct LocalVector {
  std::size_t party = 0;
  Vec coords;
};

struct ProductState {
  std::string label;
  std::vector<LocalVector> factors;  // one per party, in party order
};

/// Declared tensor factorisation of one party's space, e.g. 6 = 2 x 3.
/// Index convention: coordinate k of the party equals (k / d2, k % d2).
using Split = std::pair<std::size_t, std::size_t>;

struct StateSet {
  std::vector<std::size_t> dims;
  std::vector<ProductState> states;
  std::map<std::size_t, Split> splits;  // party -> declared split
  std::string notes;

  std::size_t num_parties() const { return dims.size(); }
  std::size_t size() const { return states.size(); }

  /// Structural validation: factor counts, lengths, nonzero factors,
  /// unique labels. Throws on violation.
  void validate() const;
};

struct Bipartition {
  std::vector<std::size_t> group_a;  // ascending party indices
  std::vector<std::size_t> group_b;

  /// Throws unless the groups are disjoint, nonempty and cover all parties.
  void validate(std::size_t num_parties) const;
};

enum class CompletenessTag { COMPLETE, SUBSPACE_COMPLETE, INCOMPLETE_NON_SUBSPACE };

struct CompletenessClass {
  CompletenessTag tag;
  std::vector<std::size_t> local_span_dims;
};

const char* to_string(CompletenessTag tag);

struct OrthogonalityReport {
  bool orthogonal = true;
  // First violating pair (indices into states) when not orthogonal.
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

/// ⟨u|v⟩ on one party, conjugate-linear in u. Errors on party or length
/// mismatch.
Scalar inner_product(const LocalVector& u, const LocalVector& v);

/// Full-state overlap ⟨psi_i|psi_j⟩ = product of per-party factor overlaps.
Scalar state_overlap(const ProductState& a, const ProductState& b);

OrthogonalityReport is_orthogonal_set(const StateSet& s);

/// Requires an orthogonal set. The local span dimension of party p is the
/// rank of the stacked p-factors; the set is COMPLETE when its cardinality
/// is the full space dimension, SUBSPACE_COMPLETE when it matches the
/// product of local span dimensions with some span proper, and
/// INCOMPLETE_NON_SUBSPACE when it is strictly below that product.
CompletenessClass classify_completeness(const StateSet& s);

/// Whether some sub-factor of `party` (under the given split) can be
/// discarded with every pairwise orthogonality preserved. Orthogonality of
/// the reduced states is decided on reduced-density supports: discarding
/// subsystem S keeps states i, j perfectly distinguishable iff every pair
/// of S-slices of the kept part is orthogonal (whenever the other parties'
/// overlap is nonzero). Returns false for sets that are free from local
/// redundancy. Errors when the split does not factor the party dimension
/// nontrivially.
bool has_local_redundancy(const StateSet& s, std::size_t party, const Split& split);

/// Two-party view of a multipartite set: group factors are combined by
/// Kronecker products in ascending party order. Preserves labels,
/// cardinality and all pairwise overlaps.
StateSet flatten(const StateSet& s, const Bipartition& b);

/// All bipartitions of n parties (party 0 always in group A), in canonical
/// ascending-bitmask order.
std::vector<Bipartition> all_bipartitions(std::size_t num_parties);

/// Restrict every party to the span of its factors, re-expressing
/// coordinates in a deterministic exact basis of that span (the standard
/// basis subset when the span is coordinate-aligned, otherwise the
/// Gram-Schmidt basis of the factors in input order). The result carries
/// the same labels and pairwise overlap pattern up to positive rescaling
/// per party pair; all scale-invariant predicates are unaffected.
StateSet restrict_to_spans(const StateSet& s);

/// Canonical content key: labels plus ray-canonicalised factor
/// coordinates, serialised deterministically. Equal keys mean equal sets
/// up to per-factor rescaling.
std::string canonical_key(const StateSet& s);

}  // namespace opset
