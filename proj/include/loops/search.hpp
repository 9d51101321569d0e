#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/term.hpp"

namespace loops {

// Search tables use 64-bit candidate masks.
inline constexpr std::size_t kMaxSearchOrder = 64;

// A reduced table under construction: row 0 and column 0 carry the identity
// pattern, every other cell is a hole (-1) or a value. Filled cells are
// always Latin-consistent.
class PartialTable {
 public:
  static constexpr int kHole = -1;

  // Throws InvalidSpec for order 0 or above kMaxSearchOrder.
  explicit PartialTable(std::size_t order);
  static PartialTable from_table(const LoopTable& q);

  std::size_t order() const { return n_; }
  int at(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  // Values not yet used in row r or column c.
  std::uint64_t row_candidates(std::size_t r) const { return full_ & ~row_used_[r]; }
  std::uint64_t col_candidates(std::size_t c) const { return full_ & ~col_used_[c]; }
  std::uint64_t candidates(std::size_t r, std::size_t c) const {
    return full_ & ~(row_used_[r] | col_used_[c]);
  }

  bool can_place(std::size_t r, std::size_t c, int v) const;
  // Preconditions: the cell is a hole and can_place holds.
  void place(std::size_t r, std::size_t c, int v);
  void clear(std::size_t r, std::size_t c);
  std::size_t holes() const { return holes_; }

  // Partial operations; -1 when not determined by the filled cells.
  int mul(int a, int b) const { return cells_[a * n_ + b]; }
  int ldiv(int a, int b) const { return row_pos_[a * n_ + b]; }
  int rdiv(int a, int b) const { return col_pos_[b * n_ + a]; }

  // Throws InvalidSpec while holes remain.
  LoopTable to_loop() const;

 private:
  std::size_t n_;
  std::uint64_t full_;
  std::size_t holes_ = 0;
  std::vector<std::int8_t> cells_;
  // row_pos_[r*n+v]: column holding v in row r; col_pos_[c*n+v]: its row.
  std::vector<std::int8_t> row_pos_;
  std::vector<std::int8_t> col_pos_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
};

enum class PropagationVerdict { Consistent, Contradiction };

// Judges every ground instance of the variety's identities whose cells are
// all filled. Throws UnknownVariety.
PropagationVerdict propagate_identity(const PartialTable& partial,
                                      std::string_view variety_id);
PropagationVerdict propagate_identities(const PartialTable& partial,
                                        const std::vector<const Identity*>& identities);

enum class SearchMode { Count, Collect, First };
// All and Reduced coincide: the identity is always 0, which fixes row 0 and
// column 0. UpToIso keeps one table per isomorphism class (its canonical
// form).
enum class IsomorphHandling { All, Reduced, UpToIso };
enum class CellOrder { MinRemaining, RowMajor };

struct CellAssignment {
  std::uint8_t row;
  std::uint8_t col;
  std::uint8_t value;
  friend bool operator==(const CellAssignment&, const CellAssignment&) = default;
};

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
};

struct SearchSpec {
  std::size_t order = 1;
  std::vector<std::string> required;
  std::vector<std::string> forbidden;
  SearchMode mode = SearchMode::Count;
  IsomorphHandling isomorphs = IsomorphHandling::Reduced;
  CellOrder cell_order = CellOrder::MinRemaining;
  bool propagate = true;
  // With propagation on, also fill cells forced by an instance whose one side
  // is known and whose other side lacks only its last step.
  bool deduce = true;
  // Worker threads for run_sharded().
  std::size_t shards = 1;
  // Restricts the search to these subtrees; empty means the whole tree.
  // A spec whose prefix list was emptied by shard() is marked `empty_shard`.
  std::vector<std::vector<CellAssignment>> prefixes;
  bool empty_shard = false;
  SearchBudget budget;
};

struct SearchResult {
  std::size_t order = 0;
  std::uint64_t found = 0;
  std::uint64_t visited = 0;
  double elapsed_seconds = 0;
  // Collect and First modes only.
  std::vector<LoopTable> loops;
};

// Throws InvalidSpec for bad specs (unknown ids are reported as
// UnknownVariety) and BudgetExceeded when a cap is hit.
void validate_spec(const SearchSpec& spec);

// Streams accepted tables to `visit` in search order; return false from
// `visit` to stop early. In UpToIso mode each class is reported once, as its
// canonical form. Returns the counters.
SearchResult enumerate(const SearchSpec& spec,
                       const std::function<bool(const LoopTable&)>& visit);
// Honors spec.mode; ignores spec.shards.
SearchResult enumerate(const SearchSpec& spec);

// k disjoint specs covering the same tree, split by assignments of row 1.
// Throws InvalidSpec for k == 0.
std::vector<SearchSpec> shard(const SearchSpec& spec, std::size_t k);

// Runs shard(spec, spec.shards) on separate threads and merges the results
// in shard order. UpToIso classes are deduplicated across shards.
SearchResult run_sharded(const SearchSpec& spec);

std::uint64_t count_up_to_isomorphism(std::size_t order, const SearchSpec& spec);
inline std::uint64_t count_up_to_isomorphism(std::size_t order) {
  return count_up_to_isomorphism(order, SearchSpec{});
}

struct MinimalOrderResult {
  std::size_t order;
  LoopTable witness;
};
// Smallest order in [1, max_order] with a loop in every required variety and
// in none of the forbidden ones. The budget applies per order.
std::optional<MinimalOrderResult> minimal_order(
    const std::vector<std::string>& required, const std::vector<std::string>& forbidden,
    std::size_t max_order, const SearchBudget& budget = {});

// order=<n> visited=<nodes> found=<m> elapsed=<s>
std::string summary_line(const SearchResult& result);

}  // namespace loops
