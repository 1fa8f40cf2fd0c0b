#include "opset/activation.hpp"

#include <deque>
#include <set>

#include "opset/state_io.hpp"

namespace opset {

const char* to_string(ActivationStatus s) {
  switch (s) {
    case ActivationStatus::NOT_ACTIVABLE: return "NOT_ACTIVABLE";
    case ActivationStatus::ACTIVABLE: return "ACTIVABLE";
    case ActivationStatus::UNKNOWN: return "UNKNOWN";
    case ActivationStatus::NOT_APPLICABLE: return "NOT_APPLICABLE";
  }
  return "?";
}

const char* to_string(TerminalProperty p) {
  switch (p) {
    case TerminalProperty::LOCALLY_IRREDUCIBLE: return "LOCALLY_IRREDUCIBLE";
    case TerminalProperty::INDISTINGUISHABLE_PROJECTIVE:
      return "INDISTINGUISHABLE_PROJECTIVE";
  }
  return "?";
}

const char* to_string(StrongLocality s) {
  switch (s) {
    case StrongLocality::STRONGLY_LOCAL: return "STRONGLY_LOCAL";
    case StrongLocality::NOT_STRONGLY_LOCAL: return "NOT_STRONGLY_LOCAL";
    case StrongLocality::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

namespace {

constexpr std::size_t kVisitedCap = 10000;

// Terminal test on a reached set. The set is judged on its per-party
// factor spans: a trivial constraint space on the span forces every
// orthogonality-preserving operator to act as a scalar there, so
// span-restricted irreducibility is sound in the ambient space as well.
// The indistinguishability route is only trusted when no restriction
// happened (ambient measurements could otherwise cut through the span).
std::optional<TerminalProperty> terminal_property(const StateSet& ambient,
                                                  const StateSet& restricted,
                                                  std::size_t max_depth,
                                                  bool* unknown) {
  if (restricted.size() < 2) return std::nullopt;
  if (is_locally_irreducible(restricted).locally_irreducible)
    return TerminalProperty::LOCALLY_IRREDUCIBLE;
  if (restricted.dims == ambient.dims) {
    DistinguishabilityVerdict dv = search_protocol(restricted, max_depth);
    if (dv.verdict == Distinguishability::INDISTINGUISHABLE_PROJECTIVE)
      return TerminalProperty::INDISTINGUISHABLE_PROJECTIVE;
    if (dv.verdict == Distinguishability::UNKNOWN_DEPTH_EXCEEDED) *unknown = true;
  }
  return std::nullopt;
}

struct FrontierNode {
  StateSet set;  // ambient party dimensions; measurements act on these
  std::vector<ActivationStep> steps;
};

}  // namespace

ActivationResult is_activable(const StateSet& s, std::size_t max_depth) {
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal) throw PreconditionError("is_activable requires an orthogonal set");

  ActivationResult result;

  DistinguishabilityVerdict initial = search_protocol(s, max_depth);
  if (initial.verdict == Distinguishability::INDISTINGUISHABLE_PROJECTIVE) {
    result.status = ActivationStatus::NOT_APPLICABLE;
    result.reason = "INITIALLY_INDISTINGUISHABLE";
    return result;
  }
  if (initial.verdict == Distinguishability::UNKNOWN_DEPTH_EXCEEDED) {
    result.status = ActivationStatus::UNKNOWN;
    result.reason = "INITIAL_DISTINGUISHABILITY_UNKNOWN";
    return result;
  }

  CompletenessClass cls = classify_completeness(s);
  if (cls.tag == CompletenessTag::COMPLETE || cls.tag == CompletenessTag::SUBSPACE_COMPLETE) {
    // Post-measurement sets of a (subspace-)complete basis are proper
    // subsets, and subsets of a distinguishable set stay distinguishable.
    result.status = ActivationStatus::NOT_ACTIVABLE;
    result.reason = "CLOSURE";
    return result;
  }

  bool exhaustive = true;  // no cap, depth cut, or enumeration gap seen
  std::set<std::string> visited;
  std::deque<FrontierNode> frontier;
  visited.insert(canonical_key(s));
  frontier.push_back(FrontierNode{s, {}});

  while (!frontier.empty()) {
    FrontierNode node = std::move(frontier.front());
    frontier.pop_front();
    if (node.steps.size() >= max_depth) {
      exhaustive = false;
      continue;
    }
    const std::string parent_key = canonical_key(node.set);
    for (std::size_t party = 0; party < node.set.num_parties(); ++party) {
      PvmEnumeration en = enumerate_op_pvms(node.set, party);
      if (!en.complete) exhaustive = false;
      for (const PVM& m : en.pvms) {
        // Materialise all outcomes so the deterministic-success flag can
        // examine the siblings of a terminal outcome.
        std::vector<std::pair<std::size_t, StateSet>> children;
        for (std::size_t e = 0; e < m.elements.size(); ++e) {
          OutcomeResult res = apply_projector(node.set, m.elements[e]);
          if (res.survivors.states.empty()) continue;
          children.emplace_back(e, std::move(res.survivors));
        }
        for (const auto& [e, child] : children) {
          std::string key = canonical_key(child);
          if (key == parent_key) continue;
          if (visited.count(key)) continue;
          if (visited.size() >= kVisitedCap) {
            exhaustive = false;
            continue;
          }
          visited.insert(std::move(key));
          StateSet restricted = restrict_to_spans(child);
          bool unknown = false;
          if (auto prop = terminal_property(child, restricted, max_depth, &unknown)) {
            ActivationWitness w;
            w.steps = node.steps;
            w.steps.push_back(ActivationStep{party, m, e});
            w.terminal = std::move(restricted);
            w.terminal_property = *prop;
            w.deterministic = true;
            for (const auto& [e2, sibling] : children) {
              bool sib_unknown = false;
              StateSet sib_restricted = restrict_to_spans(sibling);
              if (!terminal_property(sibling, sib_restricted, max_depth, &sib_unknown)) {
                w.deterministic = false;
                break;
              }
            }
            result.status = ActivationStatus::ACTIVABLE;
            result.reason = "TERMINAL_REACHED";
            result.witness = std::move(w);
            return result;
          }
          if (unknown) exhaustive = false;
          if (child.size() >= 2) {
            FrontierNode next;
            next.set = child;
            next.steps = node.steps;
            next.steps.push_back(ActivationStep{party, m, e});
            frontier.push_back(std::move(next));
          }
        }
      }
    }
  }

  if (exhaustive) {
    result.status = ActivationStatus::NOT_ACTIVABLE;
    result.reason = "REACHABLE_CLOSURE_EXHAUSTED";
  } else {
    result.status = ActivationStatus::UNKNOWN;
    result.reason = "SEARCH_BUDGET_EXHAUSTED";
  }
  return result;
}

bool replay_witness(const StateSet& s, const ActivationWitness& w) {
  StateSet current = s;
  for (const ActivationStep& step : w.steps) {
    if (step.party >= current.num_parties()) return false;
    if (step.outcome_index >= step.pvm.elements.size()) return false;
    try {
      step.pvm.validate(current.dims[step.pvm.party]);
    } catch (const Error&) {
      return false;
    }
    if (!is_orthogonality_preserving(current, step.pvm)) return false;
    OutcomeResult res = apply_projector(current, step.pvm.elements[step.outcome_index]);
    if (res.survivors.states.empty()) return false;
    current = std::move(res.survivors);
  }
  StateSet restricted = restrict_to_spans(current);
  if (serialize_state_set(restricted) != serialize_state_set(w.terminal)) return false;
  if (restricted.size() < 2) return false;
  switch (w.terminal_property) {
    case TerminalProperty::LOCALLY_IRREDUCIBLE:
      return is_locally_irreducible(restricted).locally_irreducible;
    case TerminalProperty::INDISTINGUISHABLE_PROJECTIVE:
      return search_protocol(restricted).verdict ==
             Distinguishability::INDISTINGUISHABLE_PROJECTIVE;
  }
  return false;
}

StrongLocalityReport is_strongly_local(const StateSet& s, std::size_t max_depth) {
  if (s.num_parties() < 2)
    throw PreconditionError("is_strongly_local requires at least two parties");
  StrongLocalityReport report;
  report.outside_definition_regime = s.num_parties() < 3;
  for (std::size_t d : s.dims)
    report.outside_definition_regime = report.outside_definition_regime || d < 3;

  bool all_not_activable = true;
  bool any_activable = false;
  for (const Bipartition& b : all_bipartitions(s.num_parties())) {
    BipartitionVerdict v;
    v.bipartition = b;
    v.result = is_activable(flatten(s, b), max_depth);
    all_not_activable =
        all_not_activable && v.result.status == ActivationStatus::NOT_ACTIVABLE;
    any_activable = any_activable || v.result.status == ActivationStatus::ACTIVABLE;
    report.verdicts.push_back(std::move(v));
  }
  if (all_not_activable)
    report.overall = StrongLocality::STRONGLY_LOCAL;
  else if (any_activable)
    report.overall = StrongLocality::NOT_STRONGLY_LOCAL;
  else
    report.overall = StrongLocality::UNKNOWN;
  return report;
}

}  // namespace opset
