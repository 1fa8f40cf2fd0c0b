// Command-line front end. Subcommands load a state-set file, run one
// analysis and print a JSON report (or a diagram for `render`).
// Exit codes: 0 success, 1 malformed input, 2 property violation found in
// the input (e.g. a non-orthogonal set fed to an analysis that needs one).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "opset/activation.hpp"
#include "opset/corpora.hpp"
#include "opset/discrimination.hpp"
#include "opset/reports.hpp"
#include "opset/state_io.hpp"
#include "opset/tiling.hpp"

namespace {

using namespace opset;

StateSet load_set(const std::string& path) { return parse_state_set(read_file(path)); }

Bipartition parse_bipartition(const std::string& text, std::size_t num_parties) {
  Bipartition b;
  bool second = false;
  for (char c : text) {
    if (c == '|') {
      if (second) throw ParseError("bipartition has more than one '|'");
      second = true;
      continue;
    }
    if (c < '1' || c > '9') throw ParseError("bipartition must list 1-based party digits");
    std::size_t p = static_cast<std::size_t>(c - '1');
    (second ? b.group_b : b.group_a).push_back(p);
  }
  b.validate(num_parties);
  return b;
}

void require_orthogonal(const StateSet& s) {
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal)
    throw PreconditionError("input set is not orthogonal: states '" +
                            s.states[rep.violating_pair->first].label + "' and '" +
                            s.states[rep.violating_pair->second].label + "' overlap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of multipartite orthogonal product-state sets"};
  app.require_subcommand(1);

  std::string file, pvm_file, format = "ascii", bipartition;
  std::size_t depth = 8;
  long long party_flag = -1;
  std::size_t element = 0;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "state-set file")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "orthogonality, completeness, redundancy");
  add_file(analyze);

  CLI::App* constraints =
      app.add_subcommand("constraints", "orthogonality-preservation operator space");
  add_file(constraints);
  constraints->add_option("--party", party_flag, "1-based party (default: all)");

  CLI::App* measure = app.add_subcommand("measure", "apply a PVM and report each outcome");
  add_file(measure);
  measure->add_option("--pvm", pvm_file, "PVM literal file")->required();

  CLI::App* distinguish = app.add_subcommand("distinguish", "projective-LPCC protocol search");
  add_file(distinguish);
  distinguish->add_option("--depth", depth, "maximum measurement rounds");

  CLI::App* upb = app.add_subcommand("upb", "unextendible product basis test");
  add_file(upb);

  CLI::App* activate = app.add_subcommand("activate", "local activability search");
  add_file(activate);
  activate->add_option("--depth", depth, "maximum measurement rounds");

  CLI::App* strong = app.add_subcommand("strong-local", "activability over bipartitions");
  add_file(strong);
  strong->add_option("--depth", depth, "maximum measurement rounds");
  strong->add_option("--bipartition", bipartition, "single bipartition, e.g. \"1|23\"");

  CLI::App* render = app.add_subcommand("render", "tiling diagram of a bipartite set");
  add_file(render);
  render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--pvm", pvm_file, "PVM whose element highlights the diagram");
  render->add_option("--element", element, "highlighted element index (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) {
      StateSet s = load_set(file);
      nlohmann::ordered_json rep = analyze_report(s);
      std::cout << rep.dump(2) << "\n";
      return rep["orthogonal"].get<bool>() ? 0 : 2;
    }
    if (*constraints) {
      StateSet s = load_set(file);
      require_orthogonal(s);
      std::optional<std::size_t> p;
      if (party_flag >= 0) {
        if (party_flag == 0 || static_cast<std::size_t>(party_flag) > s.num_parties())
          throw ParseError("--party out of range");
        p = static_cast<std::size_t>(party_flag) - 1;
      }
      std::cout << constraints_report(s, p).dump(2) << "\n";
      return 0;
    }
    if (*measure) {
      StateSet s = load_set(file);
      PVM m = parse_pvm(read_file(pvm_file), s);
      std::cout << measure_report(s, m).dump(2) << "\n";
      return 0;
    }
    if (*distinguish) {
      StateSet s = load_set(file);
      require_orthogonal(s);
      std::cout << distinguish_report(search_protocol(s, depth)).dump(2) << "\n";
      return 0;
    }
    if (*upb) {
      StateSet s = load_set(file);
      require_orthogonal(s);
      std::cout << upb_report(is_upb(s)).dump(2) << "\n";
      return 0;
    }
    if (*activate) {
      StateSet s = load_set(file);
      require_orthogonal(s);
      std::cout << activation_report(is_activable(s, depth)).dump(2) << "\n";
      return 0;
    }
    if (*strong) {
      StateSet s = load_set(file);
      require_orthogonal(s);
      if (!bipartition.empty()) {
        Bipartition b = parse_bipartition(bipartition, s.num_parties());
        ActivationResult r = is_activable(flatten(s, b), depth);
        nlohmann::ordered_json j = activation_report(r);
        j["bipartition"] = bipartition;
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      std::cout << strong_local_report(is_strongly_local(s, depth)).dump(2) << "\n";
      return 0;
    }
    if (*render) {
      StateSet s = load_set(file);
      std::optional<PVM> m;
      if (!pvm_file.empty()) {
        m = parse_pvm(read_file(pvm_file), s);
        if (element >= m->elements.size()) throw ParseError("--element out of range");
      }
      RenderFormat f = format == "svg" ? RenderFormat::SVG : RenderFormat::ASCII;
      std::cout << render_tiling(s, f, m ? &m->elements[element] : nullptr);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
