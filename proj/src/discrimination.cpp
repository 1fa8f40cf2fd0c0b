#include "opset/discrimination.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace opset {

const char* to_string(Distinguishability d) {
  switch (d) {
    case Distinguishability::DISTINGUISHABLE: return "DISTINGUISHABLE";
    case Distinguishability::INDISTINGUISHABLE_PROJECTIVE:
      return "INDISTINGUISHABLE_PROJECTIVE";
    case Distinguishability::UNKNOWN_DEPTH_EXCEEDED: return "UNKNOWN_DEPTH_EXCEEDED";
  }
  return "?";
}

namespace {

enum class Status { SUCCESS, FAIL, UNKNOWN };

struct SearchOutcome {
  Status status = Status::UNKNOWN;
  ProtocolNode node;
  std::size_t depth_used = 0;
  // False when a result depended on skipping a branch that looped back to
  // an ancestor other than the node itself; such results are valid for the
  // current search but must not be memoised globally.
  bool pure = true;
};

std::vector<std::string> labels_of(const StateSet& s) {
  std::vector<std::string> ls;
  for (const ProductState& st : s.states) ls.push_back(st.label);
  return ls;
}

struct Searcher {
  struct MemoEntry {
    SearchOutcome outcome;
    std::size_t remaining;  // budget the entry was computed with
  };
  std::map<std::string, MemoEntry> memo;

  SearchOutcome run(const StateSet& set, std::size_t remaining,
                    std::vector<std::string>& path) {
    SearchOutcome out;
    out.node.candidate_labels = labels_of(set);
    out.node.candidates_key = canonical_key(set);

    if (set.size() <= 1) {
      out.status = Status::SUCCESS;
      out.node.type = NodeType::IDENTIFIED;
      if (set.size() == 1) out.node.identified_label = set.states[0].label;
      return out;
    }
    const std::string& key = out.node.candidates_key;
    if (auto it = memo.find(key); it != memo.end()) {
      if (it->second.outcome.status != Status::UNKNOWN ||
          remaining <= it->second.remaining)
        return it->second.outcome;
    }
    if (remaining == 0) {
      out.status = Status::UNKNOWN;
      out.node.type = NodeType::FAIL;
      out.node.fail_reason = "depth_exhausted";
      return out;
    }

    bool enumeration_incomplete = false;
    bool any_nontrivial_pvm = false;
    bool any_unknown_choice = false;
    bool impure = false;

    path.push_back(key);
    for (std::size_t party = 0; party < set.num_parties(); ++party) {
      PvmEnumeration en = enumerate_op_pvms(set, party);
      enumeration_incomplete = enumeration_incomplete || !en.complete;
      for (const PVM& m : en.pvms) {
        any_nontrivial_pvm = true;
        std::vector<std::pair<std::size_t, OutcomeResult>> outcomes;
        bool loops_self = false, loops_ancestor = false;
        for (std::size_t e = 0; e < m.elements.size(); ++e) {
          OutcomeResult res = apply_projector(set, m.elements[e]);
          if (res.survivors.states.empty()) continue;
          std::string child_key = canonical_key(res.survivors);
          if (child_key == key) {
            loops_self = true;
            break;
          }
          if (std::find(path.begin(), path.end(), child_key) != path.end()) {
            loops_ancestor = true;
            break;
          }
          outcomes.emplace_back(e, std::move(res));
        }
        if (loops_self) continue;  // a minimal protocol never repeats a node
        if (loops_ancestor) {
          impure = true;  // skip is sound for this search, not for the memo
          continue;
        }
        std::vector<ProtocolNode> children;
        std::size_t deepest = 0;
        bool all_ok = true, child_unknown = false;
        for (auto& [e, res] : outcomes) {
          SearchOutcome sub = run(res.survivors, remaining - 1, path);
          impure = impure || !sub.pure;
          if (sub.status == Status::UNKNOWN) {
            child_unknown = true;
            all_ok = false;
            break;
          }
          if (sub.status == Status::FAIL) {
            all_ok = false;
            break;
          }
          deepest = std::max(deepest, sub.depth_used);
          children.push_back(std::move(sub.node));
        }
        if (child_unknown) {
          any_unknown_choice = true;
          continue;
        }
        if (!all_ok) continue;
        out.status = Status::SUCCESS;
        out.node.type = NodeType::MEASURE;
        out.node.party = party;
        out.node.pvm = m;
        for (std::size_t c = 0; c < outcomes.size(); ++c)
          out.node.outcome_indices.push_back(outcomes[c].first);
        out.node.children = std::move(children);
        out.depth_used = deepest + 1;
        out.pure = true;  // a found protocol is a certificate regardless
        path.pop_back();
        memo[key] = MemoEntry{out, remaining};
        return out;
      }
    }
    path.pop_back();

    out.node.type = NodeType::FAIL;
    if (any_unknown_choice || enumeration_incomplete) {
      out.status = Status::UNKNOWN;
      out.node.fail_reason =
          any_unknown_choice ? "depth_exhausted" : "incomplete_enumeration";
      out.pure = !impure;
      if (out.pure) memo[key] = MemoEntry{out, remaining};
      return out;
    }
    out.status = Status::FAIL;
    out.node.fail_reason =
        any_nontrivial_pvm ? "all_measurements_fail" : "locally_irreducible";
    out.pure = !impure;
    if (out.pure) memo[key] = MemoEntry{out, remaining};
    return out;
  }
};

}  // namespace

DistinguishabilityVerdict search_protocol(const StateSet& s, std::size_t max_depth) {
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal)
    throw PreconditionError("search_protocol requires an orthogonal set");
  Searcher searcher;
  std::vector<std::string> path;
  SearchOutcome out = searcher.run(s, max_depth, path);
  DistinguishabilityVerdict v;
  v.tree = std::move(out.node);
  v.depth_used = out.depth_used;
  switch (out.status) {
    case Status::SUCCESS: v.verdict = Distinguishability::DISTINGUISHABLE; break;
    case Status::FAIL: v.verdict = Distinguishability::INDISTINGUISHABLE_PROJECTIVE; break;
    case Status::UNKNOWN: v.verdict = Distinguishability::UNKNOWN_DEPTH_EXCEEDED; break;
  }
  return v;
}

namespace {

bool replay_node(const StateSet& set, const ProtocolNode& node) {
  if (canonical_key(set) != node.candidates_key) return false;
  std::vector<std::string> ls = labels_of(set);
  if (ls != node.candidate_labels) return false;
  switch (node.type) {
    case NodeType::IDENTIFIED:
      return set.size() == 1 && set.states[0].label == node.identified_label;
    case NodeType::FAIL:
      return false;
    case NodeType::MEASURE: {
      if (!node.pvm) return false;
      if (node.outcome_indices.size() != node.children.size()) return false;
      std::set<std::size_t> nonempty;
      for (std::size_t e = 0; e < node.pvm->elements.size(); ++e) {
        OutcomeResult res = apply_projector(set, node.pvm->elements[e]);
        if (!res.survivors.states.empty()) nonempty.insert(e);
      }
      std::set<std::size_t> recorded(node.outcome_indices.begin(),
                                     node.outcome_indices.end());
      if (nonempty != recorded) return false;
      for (std::size_t c = 0; c < node.children.size(); ++c) {
        OutcomeResult res =
            apply_projector(set, node.pvm->elements[node.outcome_indices[c]]);
        if (!replay_node(res.survivors, node.children[c])) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool replay_protocol(const StateSet& s, const ProtocolNode& tree) {
  return replay_node(s, tree);
}

UpbResult is_upb(const StateSet& s) {
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal) throw PreconditionError("is_upb requires an orthogonal set");
  std::size_t n = s.num_parties();
  UpbResult result;

  // DFS over assignments of states to parties; prune as soon as a party's
  // assigned factors span its whole space (spanning is monotone).
  std::vector<std::vector<Vec>> assigned(n);
  std::vector<std::size_t> choice(s.size());
  auto spans_fully = [&](std::size_t party) {
    if (assigned[party].empty()) return s.dims[party] == 0;
    return rank(rows_matrix(assigned[party])) == s.dims[party];
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == s.size()) return true;  // all assigned, no party spans
    for (std::size_t p = 0; p < n; ++p) {
      assigned[p].push_back(s.states[i].factors[p].coords);
      choice[i] = p;
      bool ok = !spans_fully(p) && self(self, i + 1);
      if (ok) return true;
      assigned[p].pop_back();
    }
    return false;
  };

  if (!rec(rec, 0)) {
    result.upb = true;
    return result;
  }
  result.upb = false;
  result.assignment_groups.resize(n);
  for (std::size_t i = 0; i < s.size(); ++i)
    result.assignment_groups[choice[i]].push_back(i);
  ProductState witness;
  witness.label = "witness";
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Vec> comp = orthogonal_complement(assigned[p], s.dims[p]);
    if (comp.empty()) throw Error("internal: extendibility certificate has no complement");
    witness.factors.push_back(LocalVector{p, comp.front()});
  }
  result.witness = std::move(witness);
  return result;
}

}  // namespace opset
