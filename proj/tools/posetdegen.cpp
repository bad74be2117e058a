#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "posetdegen/errors.hpp"
#include "posetdegen/io.hpp"

using namespace posetdegen;
using io::Json;

namespace {

struct Options {
  std::string format = "json";
  std::string out;
  std::string poset;
  std::string kind;
  std::size_t max_dilation = 3;
  std::string weights;
  bool default_zero = false;
  std::string hull = "upper";
  std::string chain_part;
  std::string vertices;
  std::string map;
  std::size_t n = 0;
  std::string dims;
  std::string mode = "gt";
  std::string action;
};

struct Outcome {
  Json report;
  int code = 0;
};

// Flag data, when the structure came from `flag`.
struct FlagContext {
  FlagData data;
  FlagMode mode;
};

constexpr int exit_validation = 2;
constexpr int exit_outside_cone = 3;
constexpr int exit_parse = 4;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return exit_parse;
    case ErrorCode::outside_cone: return exit_outside_cone;
    case ErrorCode::internal_closure_failure:
    case ErrorCode::theorem_violation: return 1;
    default: return exit_validation;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Hull parse_hull(const std::string& h) { return h == "lower" ? Hull::lower : Hull::upper; }

const Marking& require_marking(const RelativeStructure& s, const std::string& what) {
  if (!s.marking()) throw Error(ErrorCode::parse_error, what + " needs a marked structure (\"marked\" in the poset file)");
  return *s.marking();
}

ElementSet parse_labels(const Poset& p, const std::string& list) {
  ElementSet out;
  for (const auto& label : split(list, ',')) {
    const auto idx = p.index_of(label);
    if (!idx) throw Error(ErrorCode::unknown_label, "unknown element \"" + label + "\"");
    out.insert(*idx);
  }
  return out;
}

Json label_list(const Poset& p, ElementSet s) {
  Json out = Json::array();
  for (auto e : s) out.push_back(p.label(e));
  return out;
}

// The lattice on which weights live: J(P,<) unmarked, J_lambda marked.
std::vector<Ideal> weight_lattice(const RelativeStructure& s) {
  if (s.marking()) return marked_lattice(s, *s.marking());
  return s.lattice().ideals();
}

WeightVector load_weights(const RelativeStructure& s, const Options& o) {
  if (o.weights.empty()) throw Error(ErrorCode::parse_error, "--weights FILE is required");
  const auto lattice = weight_lattice(s);
  return io::parse_weights(io::read_json_file(o.weights), s.order(), lattice, o.default_zero, o.weights);
}

RelativeStructure with_weak(const RelativeStructure& s, const Poset& weak) {
  return validate_relative_structure(s.order(), weak, s.marking());
}

LatticePolytope polytope_of_kind(const RelativeStructure& s, const std::string& kind, const Options& o) {
  if (kind == "order") return build_polytope(s, PolytopeKind::order);
  if (kind == "chain") return build_polytope(s, PolytopeKind::chain);
  if (kind == "relative" || kind.empty()) {
    if (s.marking()) return build_mrpp(s, *s.marking());
    return build_polytope(s, PolytopeKind::relative);
  }
  const Marking& lambda = require_marking(s, "--kind " + kind);
  if (kind == "mrpp") return build_mrpp(s, lambda);
  if (kind == "gt") return build_mrpp(with_weak(s, Poset::trivial(s.order().labels())), lambda);
  if (kind == "fflv") return build_mrpp(with_weak(s, weak_order_excluding(s.order(), lambda.marked)), lambda);
  if (kind == "mcop") {
    const ElementSet c = parse_labels(s.order(), o.chain_part);
    return mcop_build(s.order(), lambda, c, (s.order().all() - lambda.marked) - c);
  }
  throw Error(ErrorCode::parse_error, "unknown polytope kind \"" + kind + "\"");
}

Outcome cmd_validate(const RelativeStructure& s) {
  Json r = {{"valid", true},
            {"elements", s.size()},
            {"relations", s.order().relation_size()},
            {"weak_relations", s.weak().relation_size()},
            {"ideals", s.lattice().size()},
            {"marked", s.marking().has_value()}};
  if (s.weak().relation_size() == 0)
    r["kind"] = "order";
  else if (s.weak() == s.order())
    r["kind"] = "chain";
  else
    r["kind"] = "relative";
  if (s.marking()) {
    const auto st = standardize(s, *s.marking());
    r["standard"] = st.classes.size() == s.size();
    r["marked_ideals"] = st.source.size();
  }
  return {r};
}

Outcome cmd_ideals(const RelativeStructure& s) {
  Json r = {{"count", s.lattice().size()}, {"ideals", io::ideals_json(s.order(), s.lattice().ideals())}};
  if (s.marking()) {
    const auto marked = marked_lattice(s, *s.marking());
    r["marked_count"] = marked.size();
    r["marked_ideals"] = io::ideals_json(s.order(), marked);
  }
  return {r};
}

Outcome cmd_ehrhart(const RelativeStructure& s, const Options& o) {
  Json values = Json::object();
  if (s.marking() && (o.kind.empty() || o.kind == "relative" || o.kind == "mrpp")) {
    for (std::size_t m = 0; m <= o.max_dilation; ++m) {
      Marking scaled = *s.marking();
      for (auto& v : scaled.values) v *= static_cast<std::int64_t>(m);
      values[std::to_string(m)] = mrpp_points(s, scaled).size();
    }
  } else {
    PolytopeKind kind = PolytopeKind::relative;
    if (o.kind == "order") kind = PolytopeKind::order;
    if (o.kind == "chain") kind = PolytopeKind::chain;
    const auto counts = ehrhart_values(with_kind(s, kind), o.max_dilation);
    for (std::size_t m = 0; m < counts.size(); ++m) values[std::to_string(m)] = counts[m];
  }
  return {values};
}

Outcome cmd_normality(const RelativeStructure& s, const Options& o) {
  const auto report = check_normality(s, o.max_dilation);
  Json r = {{"normal", report.normal}, {"max_dilation", o.max_dilation}};
  if (!report.normal) {
    r["failing_dilation"] = report.failing_dilation;
    if (report.counterexample) r["counterexample"] = *report.counterexample;
  }
  return {r};
}

Outcome cmd_cone_check(const RelativeStructure& s, const Options& o) {
  const WeightVector w = load_weights(s, o);
  const Hull hull = parse_hull(o.hull);
  if (!s.marking()) {
    const auto pos = cone_position(s, w, hull);
    return {io::cone_json(s.order(), s.lattice().ideals(), pos), pos.side == ConeSide::outside ? exit_outside_cone : 0};
  }
  const auto st = standardize(s, *s.marking());
  const auto pos = cone_position(st.quotient, st.transport(w), hull);
  std::vector<Ideal> names;
  for (auto q : st.quotient.lattice()) names.push_back(st.lift(q));
  return {io::cone_json(s.order(), names, pos), pos.side == ConeSide::outside ? exit_outside_cone : 0};
}

Outcome cmd_subdivide(const RelativeStructure& s, const Options& o, const FlagContext* flag) {
  const WeightVector w = load_weights(s, o);
  const Hull hull = parse_hull(o.hull);
  if (flag) return {io::flag_degeneration_json(flag->data, flag_degeneration(flag->data, flag->mode, w, hull))};
  if (s.marking()) return {io::marked_subdivision_json(s, mrpp_subdivide(s, *s.marking(), w, hull))};
  return {io::subdivision_json(s, subdivide(s, w, hull))};
}

Outcome cmd_components(const RelativeStructure& s, const Options& o) {
  const WeightVector w = load_weights(s, o);
  const Hull hull = parse_hull(o.hull);
  if (!s.marking()) return {io::components_json(s, zhu_components(s, w, hull))};
  const auto st = standardize(s, *s.marking());
  Json r = io::components_json(st.quotient, zhu_components(st.quotient, st.transport(w), hull));
  r["standard"] = io::standardized_json(s, st);
  return {r};
}

Outcome cmd_ideal_gens(const RelativeStructure& s, const Options& o) {
  static const std::map<std::string, PresentationKind> kinds{{"hibi", PresentationKind::hibi},
                                                             {"hibili", PresentationKind::hibili},
                                                             {"relative", PresentationKind::relative},
                                                             {"monomial", PresentationKind::monomial}};
  const auto it = kinds.find(o.kind.empty() ? "relative" : o.kind);
  if (it == kinds.end()) throw Error(ErrorCode::parse_error, "unknown presentation kind \"" + o.kind + "\"");
  return {io::presentation_json(s.order(), ideal_presentation(s, it->second))};
}

Outcome cmd_standardize(const RelativeStructure& s) {
  return {io::standardized_json(s, standardize(s, require_marking(s, "standardize")))};
}

Json recognition_json(const Poset& p, const std::optional<std::pair<ElementSet, ElementSet>>& found) {
  if (!found) return {{"found", false}};
  return {{"found", true}, {"chain_part", label_list(p, found->first)}, {"order_part", label_list(p, found->second)}};
}

Outcome cmd_mcop_recognize(const RelativeStructure& s, const Options& o) {
  const Marking& lambda = require_marking(s, "mcop-recognize");
  if (!o.vertices.empty()) {
    const Json j = io::read_json_file(o.vertices);
    const Json& list = j.is_object() && j.contains("vertices") ? j["vertices"] : j;
    std::vector<Point> target;
    try {
      target = list.get<std::vector<Point>>();
    } catch (const Json::exception&) {
      throw Error(ErrorCode::parse_error, o.vertices + ": expected an array of integer points");
    }
    for (const auto& x : target)
      if (x.size() != s.size()) throw Error(ErrorCode::parse_error, o.vertices + ": point has the wrong dimension");
    return {recognition_json(s.order(), mcop_recognize(s.order(), lambda, target))};
  }
  if (!o.weights.empty()) {
    const auto sub = mrpp_subdivide(s, lambda, load_weights(s, o), parse_hull(o.hull));
    Json parts = Json::array();
    for (const auto& part : sub.parts) {
      Json r = recognition_json(part.order, mcop_recognize(part.order, sub.standard.mu, part.vertices));
      r["added_covers"] = Json::array();
      for (auto [a, b] : part.order.covers())
        if (!sub.standard.quotient.order().less(a, b)) r["added_covers"].push_back({part.order.label(a), part.order.label(b)});
      parts.push_back(r);
    }
    return {{{"parts", parts}}};
  }
  return {recognition_json(s.order(), mcop_recognize(s.order(), lambda, build_mrpp(s, lambda).vertices))};
}

Outcome cmd_stronger_orders(const RelativeStructure& s) {
  Json orders = Json::array();
  for (const auto& p : stronger_orders(s.order())) orders.push_back(io::order_json(p));
  return {{{"count", orders.size()}, {"orders", orders}}};
}

Outcome cmd_linear_extensions(const RelativeStructure& s) {
  Json list = Json::array();
  for (const auto& l : linear_extensions(s.order())) {
    Json seq = Json::array();
    for (auto p : l) seq.push_back(s.order().label(p));
    list.push_back(seq);
  }
  return {{{"count", list.size()}, {"linear_extensions", list}}};
}

Outcome cmd_pluecker(const FlagContext& flag, const Options& o) {
  static const std::map<std::string, PlueckerMode> modes{{"O", PlueckerMode::order},
                                                         {"C", PlueckerMode::chain},
                                                         {"GT", PlueckerMode::gt},
                                                         {"FFLV", PlueckerMode::fflv}};
  std::string name = o.map;
  if (name.empty()) name = flag.mode == FlagMode::gt ? "GT" : "FFLV";
  const auto it = modes.find(name);
  if (it == modes.end()) throw Error(ErrorCode::parse_error, "unknown map \"" + name + "\" (O, C, GT or FFLV)");
  const FlagData& f = flag.data;
  // The order and chain maps live on the grid P_k alone.
  const bool grid = it->second == PlueckerMode::order || it->second == PlueckerMode::chain;
  Json table = Json::object();
  std::size_t inverted = 0, count = 0;
  for (const auto& idx : pluecker_indices(f, it->second)) {
    const Ideal j = pluecker_to_ideal(f, it->second, idx);
    table[pluecker_name(idx)] = io::ideal_key(f.poset, j);
    inverted += ideal_to_pluecker(f, it->second, j) == idx;
    ++count;
  }
  return {{{"map", name}, {"grid_only", grid}, {"count", count}, {"round_trips", inverted == count}, {"ideals", table}}};
}

Outcome run_action(const std::string& action, const RelativeStructure& s, const Options& o, const FlagContext* flag) {
  if (action == "validate") return cmd_validate(s);
  if (action == "ideals") return cmd_ideals(s);
  if (action == "polytope") {
    std::string kind = o.kind;
    if (flag && kind.empty()) kind = flag->mode == FlagMode::gt ? "gt" : "fflv";
    return {io::polytope_json(s.order(), polytope_of_kind(s, kind, o))};
  }
  if (action == "ehrhart") return cmd_ehrhart(s, o);
  if (action == "normality") return cmd_normality(s, o);
  if (action == "cone-check") return cmd_cone_check(s, o);
  if (action == "subdivide") return cmd_subdivide(s, o, flag);
  if (action == "components") return cmd_components(s, o);
  if (action == "ideal-gens") return cmd_ideal_gens(s, o);
  if (action == "standardize") return cmd_standardize(s);
  if (action == "mcop-recognize") return cmd_mcop_recognize(s, o);
  if (action == "stronger-orders") return cmd_stronger_orders(s);
  if (action == "linear-extensions") return cmd_linear_extensions(s);
  if (flag && action == "poset") return {io::to_json(io::to_poset_file(s))};
  if (flag && action == "pluecker") return cmd_pluecker(*flag, o);
  throw Error(ErrorCode::parse_error, "unknown action \"" + action + "\"");
}

RelativeStructure load_structure(const std::string& path) {
  return io::to_structure(io::parse_poset_file(io::read_json_file(path), path));
}

void emit(const Json& report, const Options& o) {
  const std::string text = io::render(report, o.format == "text");
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + o.out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative poset polytopes, their regular subdivisions and flag degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "Write the report to FILE instead of stdout");

  const auto add_poset = [&](CLI::App* sub) { sub->add_option("poset", o.poset, "Poset file (JSON)")->required(); };
  const auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", o.weights, "Weights file (JSON)");
    sub->add_flag("--default-zero", o.default_zero, "Missing ideals get weight 0");
    sub->add_option("--hull", o.hull, "Lift convention")->check(CLI::IsMember({"upper", "lower"}));
  };

  std::map<std::string, CLI::App*> commands;
  const auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands[name] = sub;
    return sub;
  };

  add_poset(command("validate", "Check the relative-structure conditions"));
  add_poset(command("ideals", "List the order ideals"));
  {
    auto* sub = command("polytope", "Vertices and lattice points");
    add_poset(sub);
    sub->add_option("--kind", o.kind)->check(
        CLI::IsMember({"order", "chain", "relative", "mrpp", "gt", "fflv", "mcop"}));
    sub->add_option("--chain-part", o.chain_part, "Comma-separated chain part C for --kind mcop");
  }
  {
    auto* sub = command("ehrhart", "Lattice-point counts of dilations");
    add_poset(sub);
    sub->add_option("--max-dilation", o.max_dilation);
    sub->add_option("--kind", o.kind)->check(CLI::IsMember({"order", "chain", "relative", "mrpp"}));
  }
  {
    auto* sub = command("normality", "Compare dilations with Minkowski sums");
    add_poset(sub);
    sub->add_option("--max-dilation", o.max_dilation);
  }
  {
    auto* sub = command("cone-check", "Position of a weight relative to the cone");
    add_poset(sub);
    add_weights(sub);
  }
  {
    auto* sub = command("subdivide", "Regular subdivision induced by a weight");
    add_poset(sub);
    add_weights(sub);
  }
  {
    auto* sub = command("components", "Components of the degeneration");
    add_poset(sub);
    add_weights(sub);
  }
  {
    auto* sub = command("ideal-gens", "Generators of the defining ideal");
    add_poset(sub);
    sub->add_option("--kind", o.kind)->check(CLI::IsMember({"hibi", "hibili", "relative", "monomial"}));
  }
  add_poset(command("standardize", "Quotient of a marked structure"));
  {
    auto* sub = command("mcop-recognize", "Find a chain-order partition with the given vertices");
    add_poset(sub);
    add_weights(sub);
    sub->add_option("--vertices", o.vertices, "JSON array of target vertices");
  }
  add_poset(command("stronger-orders", "Orders containing the given one"));
  add_poset(command("linear-extensions", "Linear extensions"));
  {
    auto* sub = command("flag", "Flag poset P_d with the GT or FFLV structure");
    sub->add_option("--n", o.n)->required();
    sub->add_option("--dims", o.dims, "Comma-separated 0=d0<...<dl=n")->required();
    sub->add_option("--mode", o.mode)->check(CLI::IsMember({"gt", "fflv"}));
    sub->add_option("action", o.action, "poset, ideals, polytope, ehrhart, cone-check, subdivide, components, "
                                        "ideal-gens, standardize, mcop-recognize, pluecker, ...")
        ->required();
    sub->add_option("--kind", o.kind);
    sub->add_option("--max-dilation", o.max_dilation);
    sub->add_option("--map", o.map, "Plücker map: O, C, GT or FFLV");
    sub->add_option("--vertices", o.vertices);
    add_weights(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  try {
    std::string name;
    for (const auto& [key, sub] : commands)
      if (sub->parsed()) name = key;

    Outcome outcome;
    if (name == "flag") {
      std::vector<std::size_t> dims;
      for (const auto& d : split(o.dims, ',')) {
        try {
          dims.push_back(static_cast<std::size_t>(std::stoul(d)));
        } catch (const std::exception&) {
          throw Error(ErrorCode::parse_error, "--dims: \"" + d + "\" is not a number");
        }
      }
      FlagContext flag{build_flag_poset(o.n, dims), o.mode == "fflv" ? FlagMode::fflv : FlagMode::gt};
      const RelativeStructure s = flag_structure(flag.data, flag.mode);
      outcome = run_action(o.action, s, o, &flag);
    } else if (name == "validate") {
      try {
        outcome = cmd_validate(load_structure(o.poset));
      } catch (const ConditionViolated& e) {
        outcome = {{{"valid", false},
                    {"condition", std::string(to_string(e.diagnostic().condition))},
                    {"witness", e.diagnostic().witness},
                    {"message", e.what()}},
                   exit_validation};
      }
    } else {
      outcome = run_action(name, load_structure(o.poset), o, nullptr);
    }
    emit(outcome.report, o);
    return outcome.code;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
}
