// Projective-LPCC distinguishability by recursive protocol search with
// memoisation, and unextendibility of product bases by exact combinatorial
// search over state-to-party assignments.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opset/measurement.hpp"
#include "opset/state_set.hpp"

namespace opset {

enum class NodeType { IDENTIFIED, FAIL, MEASURE };

struct ProtocolNode {
  NodeType type = NodeType::FAIL;
  std::vector<std::string> candidate_labels;
  std::string candidates_key;  // canonical content key, used by replay

  // IDENTIFIED
  std::string identified_label;

  // FAIL
  std::string fail_reason;

  // MEASURE
  std::size_t party = 0;
  std::optional<PVM> pvm;
  std::vector<std::size_t> outcome_indices;  // element index per child
  std::vector<ProtocolNode> children;
};

enum class Distinguishability {
  DISTINGUISHABLE,
  INDISTINGUISHABLE_PROJECTIVE,
  UNKNOWN_DEPTH_EXCEEDED,
};

const char* to_string(Distinguishability d);

struct DistinguishabilityVerdict {
  Distinguishability verdict = Distinguishability::UNKNOWN_DEPTH_EXCEEDED;
  ProtocolNode tree;
  std::size_t depth_used = 0;
};

/// Decide projective-LPCC distinguishability. Depth-first search over the
/// enumerated orthogonality-preserving PVMs, parties in index order, PVMs
/// finest-first, memoised on canonical candidate sets. DISTINGUISHABLE
/// comes with a protocol tree whose leaves all identify one state.
/// INDISTINGUISHABLE_PROJECTIVE means a blocking node was certified: some
/// reachable node with two or more candidates admits no progressing
/// orthogonality-preserving PVM (with complete enumeration everywhere on
/// the failing frontier). Anything else is UNKNOWN_DEPTH_EXCEEDED.
DistinguishabilityVerdict search_protocol(const StateSet& s, std::size_t max_depth = 8);

/// Re-derive every node of a protocol tree from scratch and check that the
/// recorded candidate sets, outcome indices and identified labels are
/// reproduced exactly (canonical keys byte-identical).
bool replay_protocol(const StateSet& s, const ProtocolNode& tree);

struct UpbResult {
  bool upb = false;
  /// For extendible sets: a product state orthogonal to every member.
  std::optional<ProductState> witness;
  /// The assignment certifying extendibility: states given to each party.
  std::vector<std::vector<std::size_t>> assignment_groups;
};

/// Unextendible product basis test by exact enumeration: the set is
/// extendible iff the states can be assigned to parties so that no party's
/// assigned factors span its full space; the witness is then any product
/// of per-party orthogonal-complement vectors. Requires an orthogonal set.
UpbResult is_upb(const StateSet& s);

}  // namespace opset
