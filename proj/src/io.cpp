#include "posetdegen/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "posetdegen/errors.hpp"
#include "posetdegen/rational.hpp"

namespace posetdegen::io {

namespace {

Error parse_error(const std::string& source, const std::string& what) {
  return Error(ErrorCode::parse_error, source + ": " + what);
}

std::vector<LabelPair> parse_pairs(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_array()) throw parse_error(source, field + ": expected an array of label pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw parse_error(source, field + "[" + std::to_string(i) + "]: expected a pair of labels");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Json pairs_json(const std::vector<LabelPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::vector<LabelPair> label_covers(const Poset& p) {
  std::vector<LabelPair> out;
  for (auto [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
  return out;
}

Json keys_json(const Poset& p, std::span<const Ideal> ideals) {
  Json out = Json::array();
  for (auto j : ideals) out.push_back(ideal_key(p, j));
  return out;
}

Json added_covers_json(const Poset& base, const Poset& part) {
  Json out = Json::array();
  for (auto [a, b] : part.covers())
    if (!base.less(a, b)) out.push_back({part.label(a), part.label(b)});
  return out;
}

Json lift_json(const Poset& p, const AffineFunction& f) {
  Json normal = Json::object();
  for (std::size_t i = 0; i < f.normal.size(); ++i) normal[p.label(i)] = to_string(f.normal[i]);
  return {{"normal", normal}, {"constant", to_string(f.constant)}};
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw parse_error(source + ":" + std::to_string(line) + ":" + std::to_string(column), "malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

PosetFile parse_poset_file(const Json& j, const std::string& source) {
  if (!j.is_object()) throw parse_error(source, "expected a JSON object");
  static const std::set<std::string> known{"elements", "covers", "weak_covers", "weak_order", "marked"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw parse_error(source, "unknown field \"" + key + "\"");

  PosetFile f;
  if (!j.contains("elements") || !j["elements"].is_array()) throw parse_error(source, "elements: expected an array");
  for (std::size_t i = 0; i < j["elements"].size(); ++i) {
    const Json& e = j["elements"][i];
    if (!e.is_string()) throw parse_error(source, "elements[" + std::to_string(i) + "]: expected a string");
    f.elements.push_back(e.get<std::string>());
  }
  if (j.contains("covers")) f.covers = parse_pairs(j["covers"], source, "covers");
  if (j.contains("weak_covers")) f.weak_covers = parse_pairs(j["weak_covers"], source, "weak_covers");
  if (j.contains("weak_order")) {
    if (f.weak_covers) throw parse_error(source, "weak_order and weak_covers are mutually exclusive");
    const Json& w = j["weak_order"];
    if (!w.is_string() || (w != "trivial" && w != "order" && w != "unmarked"))
      throw parse_error(source, "weak_order: expected \"trivial\", \"order\" or \"unmarked\"");
    f.weak_order = w.get<std::string>();
  }
  if (j.contains("marked")) {
    if (!j["marked"].is_object()) throw parse_error(source, "marked: expected an object of label: integer");
    for (const auto& [label, value] : j["marked"].items()) {
      if (!value.is_number_integer()) throw parse_error(source, "marked." + label + ": expected an integer");
      f.marked[label] = value.get<std::int64_t>();
    }
  }
  return f;
}

Json to_json(const PosetFile& f) {
  Json out = Json::object();
  out["elements"] = f.elements;
  out["covers"] = pairs_json(f.covers);
  if (f.weak_covers) out["weak_covers"] = pairs_json(*f.weak_covers);
  if (f.weak_order) out["weak_order"] = *f.weak_order;
  if (!f.marked.empty()) {
    Json m = Json::object();
    for (const auto& [label, v] : f.marked) m[label] = v;
    out["marked"] = m;
  }
  return out;
}

RelativeStructure to_structure(const PosetFile& f) {
  const Poset order = build_poset(f.elements, f.covers);
  std::optional<Marking> marking;
  if (!f.marked.empty()) {
    Marking m{ElementSet{}, std::vector<std::int64_t>(order.size(), 0)};
    for (const auto& [label, v] : f.marked) {
      const auto idx = order.index_of(label);
      if (!idx) throw Error(ErrorCode::unknown_label, "marked label \"" + label + "\" is not an element");
      m.marked.insert(*idx);
      m.values[*idx] = v;
    }
    marking = m;
  }
  Poset weak = Poset::trivial(order.labels());
  if (f.weak_covers) {
    weak = build_poset(f.elements, *f.weak_covers);
  } else if (f.weak_order == "order") {
    weak = order;
  } else if (f.weak_order == "unmarked") {
    weak = weak_order_excluding(order, marking ? marking->marked : ElementSet{});
  }
  return validate_relative_structure(order, weak, marking);
}

PosetFile to_poset_file(const RelativeStructure& s) {
  PosetFile f;
  f.elements = s.order().labels();
  f.covers = label_covers(s.order());
  if (s.weak().relation_size() > 0) f.weak_covers = label_covers(s.weak());
  if (s.marking())
    for (auto p : s.marking()->marked) f.marked[s.order().label(p)] = s.marking()->values[p];
  return f;
}

std::string ideal_key(const Poset& p, ElementSet j) {
  std::vector<std::string> labels;
  for (auto e : j) labels.push_back(p.label(e));
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out;
}

WeightVector parse_weights(const Json& j, const Poset& p, std::span<const Ideal> lattice, bool default_zero,
                           const std::string& source) {
  if (!j.is_object()) throw parse_error(source, "expected a JSON object");
  const Json& table = j.contains("weights") ? j["weights"] : j;
  if (!table.is_object()) throw parse_error(source, "weights: expected an object of ideal: rational");

  std::vector<std::optional<Rational>> values(lattice.size());
  for (const auto& [key, value] : table.items()) {
    ElementSet set;
    if (!key.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = key.find(',', start);
        const std::string label = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto idx = p.index_of(label);
        if (!idx) throw parse_error(source, "weights key \"" + key + "\": unknown element \"" + label + "\"");
        set.insert(*idx);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    const auto it = std::find(lattice.begin(), lattice.end(), set);
    if (it == lattice.end()) throw parse_error(source, "weights key \"" + key + "\" is not an ideal of the lattice");
    auto& slot = values[static_cast<std::size_t>(it - lattice.begin())];
    if (slot) throw parse_error(source, "weights key \"" + key + "\" repeats an ideal");
    if (value.is_number_integer()) {
      slot = Rational(Integer(std::to_string(value.get<std::int64_t>())));
    } else if (value.is_string()) {
      try {
        slot = parse_rational(value.get<std::string>());
      } catch (const Error& e) {
        throw parse_error(source, "weights key \"" + key + "\": " + e.what());
      }
    } else {
      throw parse_error(source, "weights key \"" + key + "\": expected a rational string \"p/q\"");
    }
  }
  WeightVector w(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (values[i]) {
      w[i] = *values[i];
    } else if (default_zero) {
      w[i] = 0;
    } else {
      throw parse_error(source, "missing weight for ideal \"" + ideal_key(p, lattice[i]) + "\"");
    }
  }
  return w;
}

Json weights_to_json(const Poset& p, std::span<const Ideal> lattice, const WeightVector& w) {
  Json table = Json::object();
  for (std::size_t i = 0; i < lattice.size(); ++i) table[ideal_key(p, lattice[i])] = to_string(w[i]);
  return {{"weights", table}};
}

Json order_json(const Poset& order) {
  Json hasse = Json::object();
  for (std::size_t p = 0; p < order.size(); ++p) hasse[order.label(p)] = Json::array();
  for (auto [a, b] : order.covers()) hasse[order.label(a)].push_back(order.label(b));
  return {{"hasse", hasse}};
}

Json points_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& x : points) out.push_back(x);
  return out;
}

Json polytope_json(const Poset& p, const LatticePolytope& poly) {
  Json out = {{"kind", std::string(to_string(poly.kind))},
              {"coordinates", p.labels()},
              {"vertices", points_json(poly.vertices)},
              {"lattice_points", points_json(poly.points)},
              {"vertex_count", poly.vertices.size()},
              {"lattice_point_count", poly.points.size()}};
  if (!poly.vertex_labels.empty()) out["vertex_ideals"] = keys_json(p, poly.vertex_labels);
  return out;
}

Json ideals_json(const Poset& p, std::span<const Ideal> ideals) { return keys_json(p, ideals); }

Json presentation_json(const Poset& p, const IdealPresentation& pres) {
  Json gens = Json::array();
  for (const auto& g : pres.generators) {
    Json e = {{"lhs", {ideal_key(p, g.first), ideal_key(p, g.second)}}};
    if (g.rhs) e["rhs"] = {ideal_key(p, g.rhs->first), ideal_key(p, g.rhs->second)};
    gens.push_back(e);
  }
  return {{"kind", std::string(to_string(pres.kind))}, {"generators", gens}, {"count", pres.generators.size()}};
}

Json cone_json(const Poset& p, std::span<const Ideal> names, const ConePosition& pos) {
  const auto pairs = [&](const std::vector<IdealPair>& v) {
    Json out = Json::array();
    for (auto [a, b] : v) out.push_back({ideal_key(p, names[a]), ideal_key(p, names[b])});
    return out;
  };
  return {{"side", std::string(to_string(pos.side))}, {"tight", pairs(pos.tight)}, {"violated", pairs(pos.violated)}};
}

Json subdivision_json(const RelativeStructure& s, const Subdivision& sub) {
  Json parts = Json::array();
  for (const auto& part : sub.parts) {
    std::vector<Point> vertices;
    for (auto j : part.sublattice) vertices.push_back(relative_vertex(s.weak(), j));
    std::vector<Ideal> vanishing;
    for (auto j : s.lattice())
      if (!std::binary_search(part.sublattice.begin(), part.sublattice.end(), j)) vanishing.push_back(j);
    parts.push_back({{"order", order_json(part.order)},
                     {"added_covers", added_covers_json(s.order(), part.order)},
                     {"vertices", points_json(vertices)},
                     {"lattice_points", points_json(vertices)},
                     {"vertex_ideals", keys_json(s.order(), part.sublattice)},
                     {"vanishing_variables", keys_json(s.order(), vanishing)},
                     {"simplices", part.simplices.size()},
                     {"lift", lift_json(s.order(), part.lift)}});
  }
  return {{"coordinates", s.order().labels()},
          {"linearizations", sub.linearizations.size()},
          {"part_count", sub.parts.size()},
          {"parts", parts}};
}

Json standardized_json(const RelativeStructure& s, const StandardizedStructure& st) {
  const Poset& q = st.quotient.order();
  Json classes = Json::object(), mu = Json::object(), coordinate = Json::object();
  for (std::size_t c = 0; c < st.classes.size(); ++c) {
    Json members = Json::array();
    for (auto p : st.classes[c]) members.push_back(s.order().label(p));
    classes[q.label(c)] = members;
    coordinate[q.label(c)] = s.order().label(st.coordinate[c]);
    if (st.mu.marked.contains(c)) mu[q.label(c)] = st.mu[c];
  }
  return {{"quotient", to_json(to_poset_file(st.quotient))},
          {"classes", classes},
          {"mu", mu},
          {"coordinate", coordinate},
          {"is_standard", st.classes.size() == s.size()}};
}

Json marked_subdivision_json(const RelativeStructure& s, const MarkedSubdivision& sub) {
  const auto& st = sub.standard;
  const Poset& q = st.quotient.order();
  Json parts = Json::array();
  for (const auto& part : sub.parts) {
    std::vector<Ideal> vanishing;
    for (auto j : st.quotient.lattice())
      if (!std::binary_search(part.sublattice.begin(), part.sublattice.end(), j)) vanishing.push_back(st.lift(j));
    parts.push_back({{"order", order_json(part.order)},
                     {"added_covers", added_covers_json(q, part.order)},
                     {"vertices", points_json(part.vertices)},
                     {"lattice_points", points_json(part.points)},
                     {"vertex_count", part.vertices.size()},
                     {"lattice_point_count", part.points.size()},
                     {"vanishing_variables", keys_json(s.order(), vanishing)},
                     {"simplices", sub.unmarked.parts[part.part].simplices.size()}});
  }
  return {{"standard", standardized_json(s, st)},
          {"coordinates", q.labels()},
          {"part_count", sub.parts.size()},
          {"parts", parts}};
}

Json components_json(const RelativeStructure& s, const std::vector<Component>& comps) {
  Json out = Json::array();
  for (const auto& c : comps)
    out.push_back({{"order", order_json(c.order)},
                   {"added_covers", added_covers_json(s.order(), c.order)},
                   {"vanishing_variables", keys_json(s.order(), c.vanishing)},
                   {"presentation", presentation_json(s.order(), c.presentation)}});
  return {{"component_count", comps.size()}, {"components", out}};
}

Json flag_degeneration_json(const FlagData& f, const FlagDegeneration& deg) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < deg.parts.size(); ++i) {
    const auto& report = deg.parts[i];
    const auto& part = deg.subdivision.parts[i];
    Json added = Json::array();
    for (auto [a, b] : report.added_covers) added.push_back({f.poset.label(a), f.poset.label(b)});
    parts.push_back({{"order", order_json(part.order)},
                     {"added_covers", added},
                     {"vertices", points_json(part.vertices)},
                     {"lattice_points", points_json(part.points)},
                     {"vertex_count", report.vertex_count},
                     {"lattice_point_count", report.lattice_point_count},
                     {"vanishing_variables", report.vanishing_variables}});
  }
  return {{"coordinates", f.poset.labels()}, {"part_count", deg.parts.size()}, {"parts", parts}};
}

namespace {

bool is_scalar(const Json& j) { return !j.is_structured(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    return s.empty() ? "\"\"" : s;
  }
  return j.dump();
}

std::string inline_array(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    // Ideal keys contain commas themselves.
    const bool quote = j[i].is_string() && j[i].get<std::string>().find(',') != std::string::npos;
    out += (i ? ", " : "") + (quote ? j[i].dump() : scalar_text(j[i]));
  }
  return out + "]";
}

bool flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return is_scalar(e); });
}

void render_value(const Json& j, const std::string& pad, std::string& out);

void render_hasse(const Json& hasse, const std::string& pad, std::string& out) {
  for (const auto& [label, ups] : hasse.items()) {
    out += pad + label;
    if (!ups.empty()) {
      out += " <";
      for (std::size_t i = 0; i < ups.size(); ++i) out += (i ? ", " : " ") + ups[i].get<std::string>();
    }
    out += "\n";
  }
}

void render_entry(const std::string& name, const Json& v, const std::string& pad, std::string& out) {
  const std::string key = name.empty() ? "\"\"" : name;
  if (is_scalar(v)) {
    out += pad + key + ": " + scalar_text(v) + "\n";
  } else if (flat_array(v)) {
    out += pad + key + ": " + inline_array(v) + "\n";
  } else if (v.is_object() && v.size() == 1 && v.contains("hasse")) {
    out += pad + key + ":\n";
    render_hasse(v["hasse"], pad + "  ", out);
  } else {
    out += pad + key + ":\n";
    render_value(v, pad + "  ", out);
  }
}

void render_value(const Json& j, const std::string& pad, std::string& out) {
  if (j.is_object() && j.size() == 1 && j.contains("hasse")) {
    render_hasse(j["hasse"], pad, out);
  } else if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_entry(key, v, pad, out);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar(e)) {
        out += pad + "- " + scalar_text(e) + "\n";
      } else if (flat_array(e)) {
        out += pad + "- " + inline_array(e) + "\n";
      } else {
        std::string inner;
        render_value(e, pad + "  ", inner);
        // First line of the nested block carries the list marker.
        if (inner.size() >= pad.size() + 2) inner.replace(pad.size(), 2, "- ");
        out += inner;
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render_value(j, "", out);
  return out;
}

std::string render(const Json& j, bool text) { return text ? render_text(j) : j.dump(2) + "\n"; }

}  // namespace posetdegen::io
