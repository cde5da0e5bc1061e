#include "omega/table_search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <json.hpp>
#include <omp.h>

namespace omega {

namespace {

using Grid = MultiplicationTable::Grid;

constexpr std::array<std::string_view, kPredicateCount> kPredicateNames = {
    "P_psi", "P_phi_closed", "P_coupling", "P_phi_complex", "P_assoc"};

bool in_phi(SignedBasis e) { return e.basis() >= 2; }

SignedBasis grid_product(const Grid& g, SignedBasis x, SignedBasis y) {
  return g[x.basis()][y.basis()].scaled(x.sign() * y.sign());
}

std::optional<std::array<BasisIndex, 3>> assoc_failure(const Grid& g) {
  for (BasisIndex a = 1; a < kDim; ++a)
    for (BasisIndex b = 1; b < kDim; ++b)
      for (BasisIndex c = 1; c < kDim; ++c) {
        // Triples involving 1 associate in any unital table.
        const SignedBasis left = grid_product(g, g[a][b], SignedBasis(1, c));
        const SignedBasis right = grid_product(g, SignedBasis(1, a), g[b][c]);
        if (left != right) return std::array<BasisIndex, 3>{a, b, c};
      }
  return std::nullopt;
}

std::optional<std::pair<BasisIndex, BasisIndex>> phi_escape(const Grid& g) {
  for (BasisIndex a = 2; a < kDim; ++a)
    for (BasisIndex b = 2; b < kDim; ++b)
      if (!in_phi(g[a][b])) return std::make_pair(a, b);
  return std::nullopt;
}

std::optional<std::pair<BasisIndex, BasisIndex>> coupling_escape(const Grid& g) {
  for (BasisIndex b = 0; b < 2; ++b)
    for (BasisIndex f = 2; f < kDim; ++f)
      if (!in_phi(g[b][f])) return std::make_pair(b, f);
  return std::nullopt;
}

// Index of the phi block (j*j, j*k, k*j, k*k) as four base-8 digits.
unsigned phi_block_index(const Grid& g) {
  return (static_cast<unsigned>(g[2][2].code()) << 9U) | (static_cast<unsigned>(g[2][3].code()) << 6U) |
         (static_cast<unsigned>(g[3][2].code()) << 3U) | static_cast<unsigned>(g[3][3].code());
}

Grid identity_grid() {
  Grid g;
  for (BasisIndex r = 0; r < kDim; ++r)
    for (BasisIndex c = 0; c < kDim; ++c) g[r][c] = SignedBasis(1, r == 0 ? c : (c == 0 ? r : 0));
  return g;
}

std::optional<PhiComplexFailure> classify_plane(const PlaneAnalysis& plane) {
  if (!plane.closed) return PhiComplexFailure::not_closed;
  if (!plane.unity) return PhiComplexFailure::no_unity;
  if (!plane.complex) return PhiComplexFailure::not_complex;
  return std::nullopt;
}

// P_phi_complex depends only on the phi block, so all 8^4 blocks are classified once.
bool phi_complex_fast(const Grid& g) {
  static const std::array<bool, 4096> verdicts = [] {
    std::array<bool, 4096> out{};
    Grid g = identity_grid();
    for (unsigned idx = 0; idx < 4096; ++idx) {
      g[2][2] = SignedBasis::from_code(static_cast<std::uint8_t>((idx >> 9U) & 7U));
      g[2][3] = SignedBasis::from_code(static_cast<std::uint8_t>((idx >> 6U) & 7U));
      g[3][2] = SignedBasis::from_code(static_cast<std::uint8_t>((idx >> 3U) & 7U));
      g[3][3] = SignedBasis::from_code(static_cast<std::uint8_t>(idx & 7U));
      out[idx] = !classify_plane(analyze_plane(MultiplicationTable("", g), 2, 3)).has_value();
    }
    return out;
  }();
  return verdicts[phi_block_index(g)];
}

bool passes(const Grid& g, Predicate p) {
  switch (p) {
    case Predicate::psi:
      return g[1][1] == SignedBasis(-1, 0);
    case Predicate::phi_closed:
      return !phi_escape(g);
    case Predicate::coupling:
      return !coupling_escape(g);
    case Predicate::phi_complex:
      return phi_complex_fast(g);
    case Predicate::assoc:
      return !assoc_failure(g);
  }
  return false;
}

bool codes_less(const Grid& a, const Grid& b) {
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) {
      if (a[r][c].code() != b[r][c].code()) return a[r][c].code() < b[r][c].code();
    }
  return false;
}

struct RawSurvivor {
  Grid canonical;
  Grid table;
};

// Scans [first, last) and appends to the caller's census/survivors.
void scan_range(const TableSpace& space, PredicateSet set, std::uint64_t first, std::uint64_t last, Census& census,
                std::vector<Grid>& survivors) {
  space.for_each(first, last, [&](const Grid& g) {
    const auto fail = first_failure(g, set);
    if (fail) {
      ++census.first_failure[static_cast<int>(*fail)];
    } else {
      ++census.passed;
      survivors.push_back(g);
    }
  });
}

SearchResult finish(const SearchConfig& cfg, const TableSpace& space, Census census, std::vector<Grid> grids,
                    double seconds) {
  std::vector<RawSurvivor> raw;
  raw.reserve(grids.size());
  for (const auto& g : grids) raw.push_back({canonicalize(g), g});
  std::sort(raw.begin(), raw.end(), [](const RawSurvivor& a, const RawSurvivor& b) {
    if (codes_less(a.canonical, b.canonical)) return true;
    if (codes_less(b.canonical, a.canonical)) return false;
    return codes_less(a.table, b.table);
  });

  SearchResult result;
  result.total_candidates = space.size();
  result.constraint_level = cfg.constraint_level();
  result.predicates = cfg.predicates.list();
  result.census = census;
  result.wall_time_seconds = seconds;
  for (const auto& s : raw) {
    MultiplicationTable canonical("canonical", s.canonical);
    if (result.classes.empty() || result.classes.back().canonical != canonical)
      result.classes.push_back({canonical, 0});
    ++result.classes.back().members;
    result.survivors.push_back({MultiplicationTable("survivor", s.table), std::move(canonical)});
  }

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + cfg.output_path + " for writing");
    out << search_result_json(result, cfg.record_wall_time);
    if (!out) throw IoError("failed writing " + cfg.output_path);
  }
  return result;
}

nlohmann::ordered_json table_json(const MultiplicationTable& t) {
  auto cells = t.to_strings();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : cells) rows.push_back(row);
  return rows;
}

MultiplicationTable table_from_json(const nlohmann::json& j, const std::string& name) {
  std::array<std::array<std::string, kDim>, kDim> cells;
  if (!j.is_array() || j.size() != kDim) throw InvalidTable("table must be a 4x4 array of strings");
  for (int r = 0; r < kDim; ++r) {
    if (!j[r].is_array() || j[r].size() != kDim) throw InvalidTable("table must be a 4x4 array of strings");
    for (int c = 0; c < kDim; ++c) cells[r][c] = j[r][c].get<std::string>();
  }
  return MultiplicationTable::from_strings(name, cells);
}

}  // namespace

std::string_view predicate_name(Predicate p) { return kPredicateNames[static_cast<int>(p)]; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (Predicate p : kAllPredicates)
    if (predicate_name(p) == name) return p;
  return std::nullopt;
}

std::vector<Predicate> PredicateSet::list() const {
  std::vector<Predicate> out;
  for (Predicate p : kAllPredicates)
    if (contains(p)) out.push_back(p);
  return out;
}

void SearchConfig::validate() const {
  if (predicates.empty()) throw ArithmeticError("search needs at least one predicate");
  if (worker_count < 1) throw ArithmeticError("worker_count must be at least 1");
  for (const auto& pin : pins)
    if (pin.row >= kDim || pin.col >= kDim) throw ArithmeticError("pin outside the 4x4 table");
}

std::string SearchConfig::constraint_level() const {
  std::string out = "unital";
  if (require_commutative) out += "+commutative";
  if (require_i_squared_minus_one) out += "+i2=-1";
  if (!pins.empty()) out += "+pins";
  return out;
}

TableSpace::TableSpace(const SearchConfig& cfg) : commutative_(cfg.require_commutative) {
  // Start from the identity border; unset interior cells are placeholders.
  base_ = identity_grid();
  std::array<std::array<std::optional<SignedBasis>, kDim>, kDim> fixed{};
  bool contradiction = false;
  auto impose = [&](BasisIndex r, BasisIndex c, SignedBasis v) {
    auto apply = [&](BasisIndex rr, BasisIndex cc) {
      if (rr == 0 || cc == 0) {
        if (v != SignedBasis(1, rr == 0 ? cc : rr)) contradiction = true;
        return;
      }
      if (fixed[rr][cc] && *fixed[rr][cc] != v) contradiction = true;
      fixed[rr][cc] = v;
    };
    apply(r, c);
    if (commutative_) apply(c, r);
  };
  if (cfg.require_i_squared_minus_one) impose(1, 1, SignedBasis(-1, 0));
  for (const auto& pin : cfg.pins) impose(pin.row, pin.col, pin.value);

  for (BasisIndex r = 1; r < kDim; ++r)
    for (BasisIndex c = commutative_ ? r : 1; c < kDim; ++c) {
      if (fixed[r][c]) {
        base_[r][c] = *fixed[r][c];
        if (commutative_) base_[c][r] = *fixed[r][c];
      } else {
        free_.push_back({r, c});
        set(base_, {r, c}, SignedBasis::from_code(0));
      }
    }
  size_ = contradiction ? 0 : (std::uint64_t{1} << (3 * free_.size()));
}

MultiplicationTable::Grid TableSpace::grid_at(std::uint64_t index) const {
  Grid g = base_;
  for (int n = static_cast<int>(free_.size()) - 1; n >= 0; --n) {
    set(g, free_[n], SignedBasis::from_code(static_cast<std::uint8_t>(index % 8)));
    index /= 8;
  }
  return g;
}

MultiplicationTable TableSpace::at(std::uint64_t index) const { return MultiplicationTable("candidate", grid_at(index)); }

TableSpace enumerate_tables(const SearchConfig& cfg) { return TableSpace(cfg); }

bool PredicateReport::passes_all(PredicateSet set) const {
  for (Predicate p : set.list())
    if (!pass(p)) return false;
  return true;
}

bool PredicateReport::operator==(const PredicateReport& o) const {
  auto cs_eq = [](const std::optional<ComplexStructure>& a, const std::optional<ComplexStructure>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->subset == b->subset && a->unity == b->unity && a->imaginary == b->imaginary &&
                  a->scale == b->scale);
  };
  return passed == o.passed && i_squared == o.i_squared && phi_escape == o.phi_escape &&
         coupling_escape == o.coupling_escape && cs_eq(phi_structure, o.phi_structure) &&
         phi_failure == o.phi_failure && assoc_failure == o.assoc_failure;
}

PredicateReport predicate_suite(const MultiplicationTable& table) {
  const Grid& g = table.entries();
  PredicateReport r;
  r.i_squared = g[1][1];
  r.passed[static_cast<int>(Predicate::psi)] = g[1][1] == SignedBasis(-1, 0);
  r.phi_escape = phi_escape(g);
  r.passed[static_cast<int>(Predicate::phi_closed)] = !r.phi_escape;
  r.coupling_escape = coupling_escape(g);
  r.passed[static_cast<int>(Predicate::coupling)] = !r.coupling_escape;
  const PlaneAnalysis plane = analyze_plane(table, 2, 3);
  r.phi_failure = classify_plane(plane);
  if (!r.phi_failure) r.phi_structure = plane.complex;
  r.passed[static_cast<int>(Predicate::phi_complex)] = !r.phi_failure;
  r.assoc_failure = assoc_failure(g);
  r.passed[static_cast<int>(Predicate::assoc)] = !r.assoc_failure;
  return r;
}

std::optional<Predicate> first_failure(const MultiplicationTable::Grid& grid, PredicateSet set) {
  for (Predicate p : kAllPredicates)
    if (set.contains(p) && !passes(grid, p)) return p;
  return std::nullopt;
}

MultiplicationTable::Grid Relabeling::apply(const MultiplicationTable::Grid& grid) const {
  auto perm = [this](BasisIndex b) -> BasisIndex {
    if (!swap_jk || b < 2) return b;
    return b == 2 ? 3 : 2;
  };
  Grid out;
  for (BasisIndex a = 0; a < kDim; ++a)
    for (BasisIndex b = 0; b < kDim; ++b) {
      const SignedBasis e = grid[perm(a)][perm(b)];
      const BasisIndex c = perm(e.basis());
      out[a][b] = SignedBasis(signs[a] * signs[b] * e.sign() * signs[c], c);
    }
  return out;
}

std::array<Relabeling, 16> Relabeling::group() {
  std::array<Relabeling, 16> out;
  for (unsigned n = 0; n < 16; ++n) {
    out[n].swap_jk = (n & 8U) != 0;
    out[n].signs = {1, (n & 1U) ? -1 : 1, (n & 2U) ? -1 : 1, (n & 4U) ? -1 : 1};
  }
  return out;
}

MultiplicationTable::Grid canonicalize(const MultiplicationTable::Grid& grid) {
  static const auto group = Relabeling::group();
  Grid best = grid;
  for (const auto& g : group) {
    Grid candidate = g.apply(grid);
    if (codes_less(candidate, best)) best = candidate;
  }
  return best;
}

MultiplicationTable canonicalize(const MultiplicationTable& table) {
  return MultiplicationTable(table.name(), canonicalize(table.entries()));
}

Census& Census::operator+=(const Census& o) {
  for (int n = 0; n < kPredicateCount; ++n) first_failure[n] += o.first_failure[n];
  passed += o.passed;
  return *this;
}

bool SearchResult::contains_canonical(const MultiplicationTable& canonical) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const CanonicalClass& c) { return c.canonical == canonical; });
}

SearchResult search_serial(const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const TableSpace space(cfg);
  Census census;
  std::vector<Grid> survivors;
  scan_range(space, cfg.predicates, 0, space.size(), census, survivors);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return finish(cfg, space, census, std::move(survivors), elapsed.count());
}

SearchResult search(const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const TableSpace space(cfg);
  const auto workers = static_cast<std::uint64_t>(cfg.worker_count);
  std::vector<Census> censuses(workers);
  std::vector<std::vector<Grid>> survivors(workers);
  phi_complex_fast(identity_grid());  // build the lookup before threads start

#pragma omp parallel for num_threads(cfg.worker_count) schedule(static, 1)
  for (std::int64_t w = 0; w < static_cast<std::int64_t>(workers); ++w) {
    const std::uint64_t n = space.size();
    const std::uint64_t first = n * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t last = n * (static_cast<std::uint64_t>(w) + 1) / workers;
    scan_range(space, cfg.predicates, first, last, censuses[w], survivors[w]);
  }

  Census census;
  std::vector<Grid> merged;
  for (std::uint64_t w = 0; w < workers; ++w) {
    census += censuses[w];
    merged.insert(merged.end(), survivors[w].begin(), survivors[w].end());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return finish(cfg, space, census, std::move(merged), elapsed.count());
}

std::string search_result_json(const SearchResult& result, bool include_wall_time) {
  nlohmann::ordered_json j;
  j["constraint_level"] = result.constraint_level;
  j["total_candidates"] = result.total_candidates;
  j["closed_form_counts"] = {
      {"all_entries_8^16", SpaceCounts::all_entries},
      {"unital_8^9", SpaceCounts::unital},
      {"unital_commutative_8^6", SpaceCounts::commutative},
      {"unital_commutative_i2_8^5", SpaceCounts::commutative_i2},
  };
  nlohmann::ordered_json preds = nlohmann::ordered_json::array();
  for (Predicate p : result.predicates) preds.push_back(predicate_name(p));
  j["predicates"] = preds;
  nlohmann::ordered_json census;
  for (Predicate p : result.predicates)
    census[std::string(predicate_name(p))] = result.census.first_failure[static_cast<int>(p)];
  census["passed"] = result.census.passed;
  j["census_first_failure"] = census;
  j["survivor_count"] = result.survivors.size();
  j["canonical_class_count"] = result.classes.size();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : result.classes)
    classes.push_back({{"canonical", table_json(c.canonical)}, {"members", c.members}});
  j["canonical_classes"] = classes;
  nlohmann::ordered_json survivors = nlohmann::ordered_json::array();
  for (const auto& s : result.survivors)
    survivors.push_back({{"table", table_json(s.table)}, {"canonical", table_json(s.canonical)}});
  j["survivors"] = survivors;
  if (include_wall_time) j["wall_time_seconds"] = result.wall_time_seconds;
  return j.dump(2) + "\n";
}

SearchResult parse_search_result(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    SearchResult r;
    r.total_candidates = j.at("total_candidates").get<std::uint64_t>();
    r.constraint_level = j.at("constraint_level").get<std::string>();
    for (const auto& name : j.at("predicates")) {
      auto p = parse_predicate(name.get<std::string>());
      if (!p) throw IoError("unknown predicate " + name.get<std::string>());
      r.predicates.push_back(*p);
    }
    const auto& census = j.at("census_first_failure");
    for (Predicate p : r.predicates)
      r.census.first_failure[static_cast<int>(p)] = census.at(std::string(predicate_name(p))).get<std::uint64_t>();
    r.census.passed = census.at("passed").get<std::uint64_t>();
    for (const auto& c : j.at("canonical_classes"))
      r.classes.push_back({table_from_json(c.at("canonical"), "canonical"), c.at("members").get<std::uint64_t>()});
    for (const auto& s : j.at("survivors"))
      r.survivors.push_back({table_from_json(s.at("table"), "survivor"), table_from_json(s.at("canonical"), "canonical")});
    if (j.contains("wall_time_seconds")) r.wall_time_seconds = j["wall_time_seconds"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed search result: ") + e.what());
  }
}

}  // namespace omega
