#include "opset/reports.hpp"

#include "opset/state_io.hpp"

namespace opset {

using nlohmann::ordered_json;

namespace {

ordered_json mat_to_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json completeness_to_json(const CompletenessClass& c) {
  ordered_json j;
  j["tag"] = to_string(c.tag);
  j["local_span_dims"] = c.local_span_dims;
  return j;
}

}  // namespace

ordered_json analyze_report(const StateSet& s) {
  ordered_json j;
  j["schema"] = kSchema;
  j["dims"] = s.dims;
  j["num_states"] = s.size();
  OrthogonalityReport rep = is_orthogonal_set(s);
  j["orthogonal"] = rep.orthogonal;
  if (!rep.orthogonal) {
    j["violating_pair"] = ordered_json::array({s.states[rep.violating_pair->first].label,
                                               s.states[rep.violating_pair->second].label});
    return j;
  }
  j["completeness"] = completeness_to_json(classify_completeness(s));
  if (!s.splits.empty()) {
    ordered_json red;
    for (const auto& [party, split] : s.splits) {
      ordered_json e;
      e["party"] = party + 1;
      e["split"] = ordered_json::array({split.first, split.second});
      e["has_local_redundancy"] = has_local_redundancy(s, party, split);
      red.push_back(std::move(e));
    }
    j["local_redundancy"] = std::move(red);
  }
  return j;
}

ordered_json constraints_report(const StateSet& s, std::optional<std::size_t> party) {
  ordered_json j;
  j["schema"] = kSchema;
  ordered_json parties = ordered_json::array();
  std::vector<std::size_t> targets;
  if (party)
    targets.push_back(*party);
  else
    for (std::size_t p = 0; p < s.num_parties(); ++p) targets.push_back(p);
  for (std::size_t p : targets) {
    ConstraintDerivation d = derive_constraint_space(s, p);
    ordered_json e;
    e["party"] = p + 1;
    e["dim_space"] = d.space.dim_space;
    e["only_trivial"] = only_trivial(d.space);
    std::size_t active = 0;
    for (const ConstraintRecord& r : d.records) active += r.active ? 1 : 0;
    e["active_constraints"] = active;
    ordered_json basis = ordered_json::array();
    for (const Mat& b : d.space.basis) basis.push_back(mat_to_json(b));
    e["basis"] = std::move(basis);
    parties.push_back(std::move(e));
  }
  j["parties"] = std::move(parties);
  if (!party) {
    IrreducibilityReport rep = is_locally_irreducible(s);
    j["locally_irreducible"] = rep.locally_irreducible;
    if (rep.singleton_convention) j["singleton_convention"] = true;
  }
  return j;
}

ordered_json measure_report(const StateSet& s, const PVM& m) {
  ordered_json j;
  j["schema"] = kSchema;
  j["party"] = m.party + 1;
  j["orthogonality_preserving"] = is_orthogonality_preserving(s, m);
  ordered_json outcomes = ordered_json::array();
  for (std::size_t e = 0; e < m.elements.size(); ++e) {
    OutcomeResult res = apply_projector(s, m.elements[e]);
    res.element_index = e;
    ordered_json o;
    o["element"] = res.element_index;
    o["rank"] = m.elements[e].rank();
    ordered_json survivors = ordered_json::array();
    for (const ProductState& st : res.survivors.states) survivors.push_back(st.label);
    o["survivors"] = std::move(survivors);
    o["eliminated"] = res.eliminated_labels;
    o["closure"] = res.closure == Closure::SUBSET ? "SUBSET" : "NEW_DIRECTIONS";
    outcomes.push_back(std::move(o));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

ordered_json tree_to_json(const ProtocolNode& node) {
  ordered_json j;
  switch (node.type) {
    case NodeType::IDENTIFIED:
      j["type"] = "identified";
      j["label"] = node.identified_label;
      break;
    case NodeType::FAIL:
      j["type"] = "fail";
      j["reason"] = node.fail_reason;
      j["candidates"] = node.candidate_labels;
      break;
    case NodeType::MEASURE: {
      j["type"] = "measure";
      j["party"] = node.party + 1;
      ordered_json elements = ordered_json::array();
      for (const Projector& e : node.pvm->elements) {
        ordered_json support = ordered_json::array();
        for (const Vec& v : e.support()) support.push_back(vec_to_json(v));
        elements.push_back(std::move(support));
      }
      j["pvm"] = std::move(elements);
      j["candidates"] = node.candidate_labels;
      ordered_json children = ordered_json::array();
      for (std::size_t c = 0; c < node.children.size(); ++c) {
        ordered_json child;
        child["outcome"] = node.outcome_indices[c];
        child["node"] = tree_to_json(node.children[c]);
        children.push_back(std::move(child));
      }
      j["children"] = std::move(children);
      break;
    }
  }
  return j;
}

ordered_json distinguish_report(const DistinguishabilityVerdict& v) {
  ordered_json j;
  j["schema"] = kSchema;
  j["verdict"] = to_string(v.verdict);
  j["depth_used"] = v.depth_used;
  j["tree"] = tree_to_json(v.tree);
  return j;
}

ordered_json upb_report(const UpbResult& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["upb"] = r.upb;
  if (!r.upb && r.witness) {
    ordered_json factors = ordered_json::array();
    for (const LocalVector& f : r.witness->factors) factors.push_back(vec_to_json(f.coords));
    j["witness"] = std::move(factors);
    ordered_json groups = ordered_json::array();
    for (const auto& g : r.assignment_groups) groups.push_back(g);
    j["assignment_groups"] = std::move(groups);
  }
  return j;
}

ordered_json witness_to_json(const ActivationWitness& w) {
  ordered_json j;
  ordered_json steps = ordered_json::array();
  for (const ActivationStep& st : w.steps) {
    ordered_json s;
    s["party"] = st.party + 1;
    s["pvm"] = pvm_to_json(st.pvm);
    s["outcome"] = st.outcome_index;
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["terminal"] = state_set_to_json(w.terminal);
  j["terminal_property"] = to_string(w.terminal_property);
  j["deterministic"] = w.deterministic;
  return j;
}

ordered_json activation_report(const ActivationResult& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["verdict"] = to_string(r.status);
  j["reason"] = r.reason;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j;
}

ordered_json strong_local_report(const StrongLocalityReport& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["verdict"] = to_string(r.overall);
  if (r.outside_definition_regime) j["outside_definition_regime"] = true;
  ordered_json verdicts = ordered_json::array();
  for (const BipartitionVerdict& v : r.verdicts) {
    ordered_json e;
    std::string a, b;
    for (std::size_t p : v.bipartition.group_a) a += std::to_string(p + 1);
    for (std::size_t p : v.bipartition.group_b) b += std::to_string(p + 1);
    e["bipartition"] = a + "|" + b;
    e["result"] = activation_report(v.result);
    verdicts.push_back(std::move(e));
  }
  j["bipartitions"] = std::move(verdicts);
  return j;
}

}  // namespace opset
