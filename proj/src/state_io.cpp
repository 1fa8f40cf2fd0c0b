#include "opset/state_io.hpp"

#include <fstream>
#include <sstream>

#include "opset/measurement.hpp"

namespace opset {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json scalar_to_json(const Scalar& s) {
  return ordered_json::array({rational_to_string(s.re), rational_to_string(s.im)});
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError("scalar must be a pair of rational strings");
  return Scalar(parse_rational(j[0].get<std::string>()),
                parse_rational(j[1].get<std::string>()));
}

ordered_json vec_to_json(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (const Scalar& c : v) arr.push_back(scalar_to_json(c));
  return arr;
}

static Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of scalars");
  Vec v;
  for (const auto& c : j) v.push_back(scalar_from_json(c));
  return v;
}

ordered_json state_set_to_json(const StateSet& s) {
  ordered_json root;
  ordered_json dims = ordered_json::array();
  for (std::size_t d : s.dims) dims.push_back(d);
  root["dims"] = std::move(dims);
  if (!s.splits.empty()) {
    ordered_json splits;
    for (const auto& [party, split] : s.splits)
      splits[std::to_string(party + 1)] = ordered_json::array({split.first, split.second});
    root["splits"] = std::move(splits);
  }
  if (!s.notes.empty()) root["notes"] = s.notes;
  ordered_json states = ordered_json::array();
  for (const ProductState& st : s.states) {
    ordered_json state;
    state["label"] = st.label;
    ordered_json factors = ordered_json::array();
    for (const LocalVector& f : st.factors) factors.push_back(vec_to_json(f.coords));
    state["factors"] = std::move(factors);
    states.push_back(std::move(state));
  }
  root["states"] = std::move(states);
  return root;
}

std::string serialize_state_set(const StateSet& s) {
  return state_set_to_json(s).dump(2) + "\n";
}

StateSet parse_state_set(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("dims") || !root.contains("states"))
    throw ParseError("state-set file must be an object with 'dims' and 'states'");
  StateSet s;
  for (const auto& d : root["dims"]) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
      throw ParseError("'dims' entries must be positive integers");
    s.dims.push_back(d.get<std::size_t>());
  }
  if (root.contains("splits")) {
    if (!root["splits"].is_object()) throw ParseError("'splits' must be an object");
    for (const auto& [key, val] : root["splits"].items()) {
      std::size_t party;
      try {
        party = std::stoul(key);
      } catch (...) {
        throw ParseError("split key '" + key + "' is not a party index");
      }
      if (party == 0 || party > s.dims.size())
        throw ParseError("split key '" + key + "' is out of range");
      if (!val.is_array() || val.size() != 2)
        throw ParseError("split value must be a pair of dimensions");
      s.splits[party - 1] = Split{val[0].get<std::size_t>(), val[1].get<std::size_t>()};
    }
  }
  if (root.contains("notes")) s.notes = root["notes"].get<std::string>();
  for (const auto& state : root["states"]) {
    if (!state.is_object() || !state.contains("label") || !state.contains("factors"))
      throw ParseError("each state needs 'label' and 'factors'");
    ProductState st;
    st.label = state["label"].get<std::string>();
    std::size_t party = 0;
    for (const auto& f : state["factors"]) {
      st.factors.push_back(LocalVector{party, vec_from_json(f)});
      ++party;
    }
    s.states.push_back(std::move(st));
  }
  s.validate();
  return s;
}

ordered_json pvm_to_json(const PVM& m) {
  ordered_json root;
  root["party"] = m.party + 1;
  ordered_json elements = ordered_json::array();
  for (const Projector& e : m.elements) {
    ordered_json support = ordered_json::array();
    for (const Vec& v : e.support()) support.push_back(vec_to_json(v));
    elements.push_back(std::move(support));
  }
  root["elements"] = std::move(elements);
  return root;
}

std::string serialize_pvm(const PVM& m) { return pvm_to_json(m).dump(2) + "\n"; }

PVM parse_pvm(const std::string& text, const StateSet& reference) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("party") || !root.contains("elements"))
    throw ParseError("PVM file must be an object with 'party' and 'elements'");
  std::size_t party = root["party"].get<std::size_t>();
  if (party == 0 || party > reference.num_parties())
    throw ParseError("PVM party index out of range");
  PVM m;
  m.party = party - 1;
  std::size_t dim = reference.dims[m.party];
  for (const auto& el : root["elements"]) {
    std::vector<Vec> support;
    for (const auto& v : el) {
      Vec vec = vec_from_json(v);
      if (vec.size() != dim)
        throw ParseError("PVM support vector length does not match the party dimension");
      support.push_back(std::move(vec));
    }
    if (support.empty()) throw ParseError("PVM element with empty support");
    m.elements.emplace_back(m.party, std::move(support), dim);
  }
  m.validate(dim);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace opset
