#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"

namespace omega {

/// Formalised requirements, listed in pruning order (cheapest first).
enum class Predicate : std::uint8_t { psi = 0, phi_closed, coupling, phi_complex, assoc };
inline constexpr int kPredicateCount = 5;
inline constexpr std::array<Predicate, kPredicateCount> kAllPredicates = {
    Predicate::psi, Predicate::phi_closed, Predicate::coupling, Predicate::phi_complex, Predicate::assoc};

/// "P_psi", "P_phi_closed", "P_coupling", "P_phi_complex", "P_assoc"
std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

/// Bit set over Predicate.
class PredicateSet {
 public:
  constexpr PredicateSet() = default;
  static constexpr PredicateSet all() { return PredicateSet((1U << kPredicateCount) - 1U); }

  constexpr PredicateSet& add(Predicate p) {
    bits_ |= 1U << static_cast<unsigned>(p);
    return *this;
  }
  constexpr bool contains(Predicate p) const { return (bits_ >> static_cast<unsigned>(p)) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const PredicateSet&) const = default;

  std::vector<Predicate> list() const;

 private:
  constexpr explicit PredicateSet(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0;
};

/// A fixed table entry imposed on the enumeration.
struct Pin {
  BasisIndex row;
  BasisIndex col;
  SignedBasis value;
};

struct SearchConfig {
  bool require_commutative = true;
  bool require_i_squared_minus_one = true;
  std::vector<Pin> pins;
  PredicateSet predicates = PredicateSet::all();
  int worker_count = 1;
  std::string output_path;
  /// The wall-clock field is the only nondeterministic part of the output file.
  bool record_wall_time = true;

  /// Throws ArithmeticError on an empty predicate set or worker_count < 1.
  void validate() const;
  /// "unital", "unital+commutative+i2=-1", ... with "+pins" when pins are present.
  std::string constraint_level() const;
};

/// Closed-form sizes of the candidate spaces.
struct SpaceCounts {
  static constexpr std::uint64_t all_entries = 281474976710656ULL;  // 8^16
  static constexpr std::uint64_t unital = 134217728ULL;             // 8^9
  static constexpr std::uint64_t commutative = 262144ULL;           // 8^6
  static constexpr std::uint64_t commutative_i2 = 32768ULL;         // 8^5
};

/// The set of unital tables consistent with a SearchConfig, in lexicographic order.
///
/// Free entries are the lower-right 3x3 block (upper triangle only under
/// commutativity) minus pinned cells, read row-major; the first free entry is the
/// most significant digit and digits follow the SignedBasis code order.
class TableSpace {
 public:
  explicit TableSpace(const SearchConfig& cfg);

  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  int free_entries() const noexcept { return static_cast<int>(free_.size()); }

  MultiplicationTable::Grid grid_at(std::uint64_t index) const;
  MultiplicationTable at(std::uint64_t index) const;

  /// Visits grids [first, last) in order, calling fn(const Grid&).
  template <class Fn>
  void for_each(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    if (first >= last) return;
    MultiplicationTable::Grid grid = grid_at(first);
    std::array<std::uint8_t, 9> digits{};
    std::uint64_t rem = first;
    for (int n = static_cast<int>(free_.size()) - 1; n >= 0; --n) {
      digits[n] = static_cast<std::uint8_t>(rem % 8);
      rem /= 8;
    }
    for (std::uint64_t index = first; index < last; ++index) {
      fn(static_cast<const MultiplicationTable::Grid&>(grid));
      for (int n = static_cast<int>(free_.size()) - 1; n >= 0; --n) {
        const std::uint8_t next = static_cast<std::uint8_t>((digits[n] + 1) % 8);
        digits[n] = next;
        set(grid, free_[n], SignedBasis::from_code(next));
        if (next != 0) break;
      }
    }
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MultiplicationTable;
    using difference_type = std::ptrdiff_t;

    iterator(const TableSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    MultiplicationTable operator*() const { return space_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const TableSpace* space_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  struct Cell {
    BasisIndex row;
    BasisIndex col;
  };

  void set(MultiplicationTable::Grid& grid, Cell cell, SignedBasis v) const {
    grid[cell.row][cell.col] = v;
    if (commutative_) grid[cell.col][cell.row] = v;
  }

  bool commutative_;
  MultiplicationTable::Grid base_{};
  std::vector<Cell> free_;
  std::uint64_t size_ = 0;
};

/// Stream of candidate tables for cfg.
TableSpace enumerate_tables(const SearchConfig& cfg);

enum class PhiComplexFailure { not_closed, no_unity, not_complex };

/// Per-predicate verdicts with re-checkable witnesses.
struct PredicateReport {
  std::array<bool, kPredicateCount> passed{};
  SignedBasis i_squared;                                          // P_psi: value of i*i
  std::optional<std::pair<BasisIndex, BasisIndex>> phi_escape;    // P_phi_closed
  std::optional<std::pair<BasisIndex, BasisIndex>> coupling_escape;  // P_coupling: (b, f) with b*f outside span(j,k)
  std::optional<ComplexStructure> phi_structure;                  // P_phi_complex on success
  std::optional<PhiComplexFailure> phi_failure;                   // P_phi_complex on failure
  std::optional<std::array<BasisIndex, 3>> assoc_failure;         // P_assoc

  bool pass(Predicate p) const { return passed[static_cast<int>(p)]; }
  bool passes_all(PredicateSet set) const;
  bool operator==(const PredicateReport& o) const;
};

PredicateReport predicate_suite(const MultiplicationTable& table);

/// First predicate of `set`, in pruning order, that the grid fails; nullopt if it passes all.
std::optional<Predicate> first_failure(const MultiplicationTable::Grid& grid, PredicateSet set);

/// One of the 16 basis changes fixing 1: optional j<->k swap, then sign flips of i, j, k.
struct Relabeling {
  bool swap_jk = false;
  std::array<int, kDim> signs = {1, 1, 1, 1};

  MultiplicationTable::Grid apply(const MultiplicationTable::Grid& grid) const;
  static std::array<Relabeling, 16> group();
};

MultiplicationTable canonicalize(const MultiplicationTable& table);
MultiplicationTable::Grid canonicalize(const MultiplicationTable::Grid& grid);

struct Survivor {
  MultiplicationTable table;
  MultiplicationTable canonical;
};

struct CanonicalClass {
  MultiplicationTable canonical;
  std::uint64_t members = 0;
};

/// Candidates grouped by the first predicate they fail; `passed` counts survivors.
struct Census {
  std::array<std::uint64_t, kPredicateCount> first_failure{};
  std::uint64_t passed = 0;

  Census& operator+=(const Census& o);
  bool operator==(const Census&) const = default;
};

struct SearchResult {
  std::uint64_t total_candidates = 0;
  std::string constraint_level;
  std::vector<Predicate> predicates;
  Census census;
  std::vector<Survivor> survivors;        // sorted by (canonical, table)
  std::vector<CanonicalClass> classes;    // sorted by canonical form
  double wall_time_seconds = 0.0;

  bool contains_canonical(const MultiplicationTable& canonical) const;
};

/// Parallel search: contiguous index ranges per worker, deterministic merge.
/// Writes the result file when cfg.output_path is non-empty (IoError on failure).
SearchResult search(const SearchConfig& cfg);

/// Single-threaded reference used to check the parallel path.
SearchResult search_serial(const SearchConfig& cfg);

/// JSON text of the result file. Timing is omitted when include_wall_time is false.
std::string search_result_json(const SearchResult& result, bool include_wall_time);
SearchResult parse_search_result(std::string_view json_text);

}  // namespace omega
