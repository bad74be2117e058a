#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "posetdegen/degeneration.hpp"
#include "posetdegen/flag.hpp"
#include "posetdegen/marked.hpp"
#include "posetdegen/polytope.hpp"

namespace posetdegen::io {

using Json = nlohmann::json;

// {"elements": [...], "covers": [[a,b],...], "weak_covers": [[a,b],...],
//  "weak_order": "trivial" | "order" | "unmarked", "marked": {label: int}}
// weak_covers and weak_order are mutually exclusive; with neither the weak
// order is trivial.
struct PosetFile {
  std::vector<std::string> elements;
  std::vector<LabelPair> covers;
  std::optional<std::vector<LabelPair>> weak_covers;
  std::optional<std::string> weak_order;
  std::map<std::string, std::int64_t> marked;

  bool operator==(const PosetFile&) const = default;
};

// Throws ParseError; `source` prefixes messages.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
PosetFile parse_poset_file(const Json& j, const std::string& source);
Json to_json(const PosetFile& f);

// Throws the validation errors of build_poset and validate_relative_structure.
RelativeStructure to_structure(const PosetFile& f);
PosetFile to_poset_file(const RelativeStructure& s);

// Comma-joined labels in lexicographic order; "" for the empty ideal.
std::string ideal_key(const Poset& p, ElementSet j);

// {"weights": {key: "p/q" | integer}}. Every ideal of `lattice` needs an
// entry unless default_zero is set; keys outside the lattice are errors.
WeightVector parse_weights(const Json& j, const Poset& p, std::span<const Ideal> lattice, bool default_zero,
                           const std::string& source);
Json weights_to_json(const Poset& p, std::span<const Ideal> lattice, const WeightVector& w);

// Report fragments.
Json order_json(const Poset& order);                  // {"hasse": {label: [upper covers]}}
Json points_json(const std::vector<Point>& points);
Json polytope_json(const Poset& p, const LatticePolytope& poly);
Json ideals_json(const Poset& p, std::span<const Ideal> ideals);
Json presentation_json(const Poset& p, const IdealPresentation& pres);
// `names[i]` is the ideal of P reported for lattice position i.
Json cone_json(const Poset& p, std::span<const Ideal> names, const ConePosition& pos);
Json subdivision_json(const RelativeStructure& s, const Subdivision& sub);
Json marked_subdivision_json(const RelativeStructure& s, const MarkedSubdivision& sub);
Json components_json(const RelativeStructure& s, const std::vector<Component>& comps);
Json standardized_json(const RelativeStructure& s, const StandardizedStructure& st);
Json flag_degeneration_json(const FlagData& f, const FlagDegeneration& deg);

// Indented plain-text rendering; orders print as cover lists.
std::string render_text(const Json& j);
std::string render(const Json& j, bool text);

}  // namespace posetdegen::io
