#include "posetdegen/flag.hpp"

#include <algorithm>
#include <set>

#include "posetdegen/errors.hpp"

namespace posetdegen {

std::string_view to_string(FlagMode mode) { return mode == FlagMode::gt ? "gt" : "fflv"; }

std::string_view to_string(PlueckerMode mode) {
  switch (mode) {
    case PlueckerMode::order: return "O";
    case PlueckerMode::chain: return "C";
    case PlueckerMode::gt: return "GT";
    case PlueckerMode::fflv: return "FFLV";
  }
  return "?";
}

std::optional<std::size_t> FlagData::element(std::size_t i, std::size_t j) const {
  for (std::size_t e = 0; e < coords.size(); ++e)
    if (coords[e] == std::pair{i, j}) return e;
  return std::nullopt;
}

ElementSet FlagData::grid(std::size_t k) const {
  ElementSet out;
  for (std::size_t e = 0; e < coords.size(); ++e)
    if (coords[e].first <= k && k < coords[e].second) out.insert(e);
  return out;
}

FlagData build_flag_poset(std::size_t n, const std::vector<std::size_t>& dims) {
  const auto bad = [&](const std::string& why) { return Error(ErrorCode::invalid_dims, "invalid dims: " + why); };
  if (n == 0) throw bad("n must be positive");
  if (dims.size() < 2 || dims.front() != 0 || dims.back() != n) throw bad("dims must run from 0 to n");
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] <= dims[i - 1]) throw bad("dims must be strictly increasing");
  const std::size_t l = dims.size() - 1;

  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t m = 1; m <= l; ++m) cells.emplace(dims[m - 1] + 1, dims[m]);
  for (std::size_t m = 1; m < l; ++m)
    for (std::size_t i = 1; i <= dims[m]; ++i)
      for (std::size_t j = dims[m] + 1; j <= n; ++j) cells.emplace(i, j);
  if (cells.size() > max_elements) throw bad("flag poset exceeds " + std::to_string(max_elements) + " elements");

  FlagData f;
  f.n = n;
  f.dims = dims;
  f.coords.assign(cells.begin(), cells.end());
  std::vector<std::string> labels;
  for (auto [i, j] : f.coords) labels.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<ElementSet> above(f.coords.size());
  for (std::size_t a = 0; a < f.coords.size(); ++a)
    for (std::size_t b = 0; b < f.coords.size(); ++b)
      if (a != b && f.coords[a].first <= f.coords[b].first && f.coords[a].second <= f.coords[b].second)
        above[a].insert(b);
  f.poset = Poset::from_relation(labels, above);
  f.lambda = Marking{ElementSet{}, std::vector<std::int64_t>(f.coords.size(), 0)};
  for (std::size_t m = 1; m <= l; ++m) {
    const std::size_t e = *f.element(dims[m - 1] + 1, dims[m]);
    f.markers.push_back(e);
    f.lambda.marked.insert(e);
    f.lambda.values[e] = static_cast<std::int64_t>(l - m + 1);
  }
  return f;
}

RelativeStructure flag_structure(const FlagData& f, FlagMode mode) {
  const Poset weak = mode == FlagMode::gt ? Poset::trivial(f.poset.labels())
                                          : weak_order_excluding(f.poset, f.lambda.marked);
  return validate_relative_structure(f.poset, weak, f.lambda);
}

namespace {

std::size_t grassmannian_k(const FlagData& f) {
  if (!f.is_grassmannian())
    throw Error(ErrorCode::mode_dims_mismatch, "order and chain maps need dims of the form {0,k,n}");
  return f.dims[1];
}

// Position of k in dims, i.e. the number of markers in ideals of that size.
std::size_t dims_position(const FlagData& f, std::size_t k) {
  auto it = std::find(f.dims.begin(), f.dims.end(), k);
  if (it == f.dims.end()) throw Error(ErrorCode::invalid_index, "index length " + std::to_string(k) + " is not in dims");
  return static_cast<std::size_t>(it - f.dims.begin());
}

bool is_chain_mode(PlueckerMode mode) { return mode == PlueckerMode::chain || mode == PlueckerMode::fflv; }

// The ideal of an increasing index: row i reaches column a_{k+1-i} + i - 1.
Ideal staircase(const FlagData& f, ElementSet allowed, std::size_t k, const PlueckerIndex& a) {
  Ideal out;
  for (auto e : allowed) {
    const auto [i, j] = f.coords[e];
    if (i <= k && j <= a[k - i] + i - 1) out.insert(e);
  }
  return out;
}

// Rows holding a maximal element of j inside `allowed` take that column,
// the remaining rows i take i.
PlueckerIndex from_maxima(const FlagData& f, ElementSet allowed, std::size_t k, Ideal j) {
  PlueckerIndex alpha(k);
  for (std::size_t i = 1; i <= k; ++i) alpha[i - 1] = i;
  for (auto e : f.poset.maximal_in(j & allowed)) alpha[f.coords[e].first - 1] = f.coords[e].second;
  return alpha;
}

}  // namespace

PlueckerIndex canonical_index(const FlagData& f, PlueckerMode mode, PlueckerIndex index) {
  const std::size_t k = index.size();
  if (mode == PlueckerMode::order || mode == PlueckerMode::chain) {
    if (k != grassmannian_k(f))
      throw Error(ErrorCode::invalid_index, "index must have " + std::to_string(f.dims[1]) + " entries");
  } else {
    dims_position(f, k);
  }
  std::vector<std::size_t> sorted = index;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (sorted[i] < 1 || sorted[i] > f.n) throw Error(ErrorCode::invalid_index, "index entry out of range");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw Error(ErrorCode::invalid_index, "index entries must be distinct");
  }
  if (!is_chain_mode(mode)) return sorted;
  PlueckerIndex out(k, 0);
  std::vector<std::size_t> large;
  for (auto v : sorted) {
    if (v <= k)
      out[v - 1] = v;
    else
      large.push_back(v);
  }
  std::sort(large.rbegin(), large.rend());
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (out[i] == 0) out[i] = large[next++];
  return out;
}

Ideal pluecker_to_ideal(const FlagData& f, PlueckerMode mode, const PlueckerIndex& index) {
  const PlueckerIndex a = canonical_index(f, mode, index);
  const std::size_t k = a.size();
  switch (mode) {
    case PlueckerMode::order:
      return staircase(f, f.grid(k), k, a);
    case PlueckerMode::gt:
      return staircase(f, f.poset.all(), k, a);
    case PlueckerMode::chain: {
      ElementSet gens;
      for (std::size_t i = 1; i <= k; ++i)
        if (a[i - 1] > k) gens.insert(*f.element(i, a[i - 1]));
      return f.poset.down_closure(gens) & f.grid(k);
    }
    case PlueckerMode::fflv: {
      const std::size_t pos = dims_position(f, k);
      ElementSet gens;
      for (std::size_t m = 0; m < pos; ++m) gens.insert(f.markers[m]);
      for (std::size_t i = 1; i <= k; ++i)
        if (a[i - 1] > k) gens.insert(*f.element(i, a[i - 1]));
      return f.poset.down_closure(gens);
    }
  }
  return {};
}

PlueckerIndex ideal_to_pluecker(const FlagData& f, PlueckerMode mode, Ideal j) {
  PlueckerIndex result;
  switch (mode) {
    case PlueckerMode::order:
    case PlueckerMode::chain: {
      const std::size_t k = grassmannian_k(f);
      const ElementSet grid = f.grid(k);
      if (!j.subset_of(grid)) throw Error(ErrorCode::invalid_index, "set is not inside the grid P_k");
      if (mode == PlueckerMode::chain) {
        result = from_maxima(f, grid, k, j);
      } else {
        result.assign(k, 0);
        for (std::size_t i = 1; i <= k; ++i) {
          std::size_t c = k;
          for (auto e : j)
            if (f.coords[e].first == i) c = std::max(c, f.coords[e].second);
          result[k - i] = c - i + 1;
        }
      }
      break;
    }
    case PlueckerMode::gt:
    case PlueckerMode::fflv: {
      const std::size_t count = (j & f.lambda.marked).count();
      const std::size_t k = f.dims[std::min(count, f.dims.size() - 1)];
      if (mode == PlueckerMode::fflv) {
        result = from_maxima(f, f.grid(k), k, j);
      } else {
        result.assign(k, 0);
        for (std::size_t i = 1; i <= k; ++i) {
          std::size_t c = k;
          for (auto e : j)
            if (f.coords[e].first == i) c = std::max(c, f.coords[e].second);
          result[k - i] = c - i + 1;
        }
      }
      break;
    }
  }
  // Only ideals in the image of the map come back unchanged.
  try {
    if (pluecker_to_ideal(f, mode, result) == j) return canonical_index(f, mode, result);
  } catch (const Error&) {
  }
  throw Error(ErrorCode::invalid_index, format_set(f.poset, j) + " is not in the image of the " +
                                            std::string(to_string(mode)) + " map");
}

std::vector<PlueckerIndex> pluecker_indices(const FlagData& f, PlueckerMode mode) {
  std::vector<std::size_t> lengths;
  if (mode == PlueckerMode::order || mode == PlueckerMode::chain)
    lengths = {grassmannian_k(f)};
  else
    lengths = f.dims;
  std::vector<PlueckerIndex> out;
  for (auto k : lengths) {
    std::vector<PlueckerIndex> group;
    PlueckerIndex comb(k);
    auto choose = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
      if (pos == k) {
        group.push_back(canonical_index(f, mode, comb));
        return;
      }
      for (std::size_t v = from; v + (k - pos) <= f.n + 1; ++v) {
        comb[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    choose(choose, 0, 1);
    std::sort(group.begin(), group.end());
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::string pluecker_name(const PlueckerIndex& index) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) out += (i ? "," : "") + std::to_string(index[i]);
  return out;
}

LatticePolytope flag_polytope(const FlagData& f, FlagMode mode, bool with_vertices) {
  return build_mrpp(flag_structure(f, mode), f.lambda, with_vertices);
}

FlagDegeneration flag_degeneration(const FlagData& f, FlagMode mode, const WeightVector& w, Hull hull) {
  const RelativeStructure s = flag_structure(f, mode);
  FlagDegeneration out{mrpp_subdivide(s, f.lambda, w, hull), {}};
  const auto& standard = out.subdivision.standard;
  const PlueckerMode pm = mode == FlagMode::gt ? PlueckerMode::gt : PlueckerMode::fflv;
  for (const auto& part : out.subdivision.parts) {
    FlagPartReport report;
    for (auto [a, b] : part.order.covers()) {
      const Ideal la = standard.classes[a], lb = standard.classes[b];
      if (!f.poset.less(la.first(), lb.first())) report.added_covers.emplace_back(la.first(), lb.first());
    }
    report.vertex_count = part.vertices.size();
    report.lattice_point_count = part.points.size();
    const std::set<std::uint64_t> inside = [&] {
      std::set<std::uint64_t> s;
      for (auto j : part.sublattice) s.insert(j.bits());
      return s;
    }();
    for (auto q : standard.quotient.lattice().ideals())
      if (!inside.contains(q.bits()))
        report.vanishing_variables.push_back(pluecker_name(ideal_to_pluecker(f, pm, standard.lift(q))));
    out.parts.push_back(std::move(report));
  }
  return out;
}

}  // namespace posetdegen
