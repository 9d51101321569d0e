#include "loops/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <thread>

#include "loops/canonical.hpp"
#include "loops/error.hpp"
#include "loops/varieties.hpp"

namespace loops {

PartialTable::PartialTable(std::size_t order) : n_(order) {
  if (order == 0 || order > kMaxSearchOrder) {
    throw LoopError(ErrorKind::InvalidSpec,
                    "search order must be in 1.." + std::to_string(kMaxSearchOrder));
  }
  full_ = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  cells_.assign(n_ * n_, kHole);
  row_pos_.assign(n_ * n_, kHole);
  col_pos_.assign(n_ * n_, kHole);
  row_used_.assign(n_, 0);
  col_used_.assign(n_, 0);
  holes_ = n_ * n_;
  for (std::size_t i = 0; i < n_; ++i) {
    place(0, i, static_cast<int>(i));
    if (i != 0) place(i, 0, static_cast<int>(i));
  }
}

PartialTable PartialTable::from_table(const LoopTable& q) {
  PartialTable t(q.order());
  for (std::size_t r = 1; r < q.order(); ++r) {
    for (std::size_t c = 1; c < q.order(); ++c) {
      t.place(r, c, q.mul(static_cast<Element>(r), static_cast<Element>(c)));
    }
  }
  return t;
}

bool PartialTable::can_place(std::size_t r, std::size_t c, int v) const {
  return cells_[r * n_ + c] == kHole && v >= 0 && static_cast<std::size_t>(v) < n_ &&
         ((row_used_[r] | col_used_[c]) >> v & 1) == 0;
}

void PartialTable::place(std::size_t r, std::size_t c, int v) {
  cells_[r * n_ + c] = static_cast<std::int8_t>(v);
  row_pos_[r * n_ + v] = static_cast<std::int8_t>(c);
  col_pos_[c * n_ + v] = static_cast<std::int8_t>(r);
  row_used_[r] |= std::uint64_t{1} << v;
  col_used_[c] |= std::uint64_t{1} << v;
  --holes_;
}

void PartialTable::clear(std::size_t r, std::size_t c) {
  const int v = cells_[r * n_ + c];
  cells_[r * n_ + c] = kHole;
  row_pos_[r * n_ + v] = kHole;
  col_pos_[c * n_ + v] = kHole;
  row_used_[r] &= ~(std::uint64_t{1} << v);
  col_used_[c] &= ~(std::uint64_t{1} << v);
  ++holes_;
}

LoopTable PartialTable::to_loop() const {
  if (holes_ != 0) throw LoopError(ErrorKind::InvalidSpec, "partial table has holes");
  std::vector<Element> cells(cells_.begin(), cells_.end());
  return LoopTable::from_cells_unchecked(n_, std::move(cells));
}

namespace {

// Odometer over all assignments; an instance is judged only when both sides
// evaluate.
bool identity_consistent(const PartialTable& t, const Identity& id) {
  const std::size_t n = t.order();
  const std::size_t k = id.arity();
  Element vars[kMaxVariables] = {};
  if (k == 0) {
    const int l = eval_partial(id.lhs, t, vars);
    const int r = l < 0 ? -1 : eval_partial(id.rhs, t, vars);
    return l < 0 || r < 0 || l == r;
  }
  while (true) {
    const int l = eval_partial(id.lhs, t, vars);
    if (l >= 0) {
      const int r = eval_partial(id.rhs, t, vars);
      if (r >= 0 && r != l) return false;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++vars[i] < n) break;
      vars[i] = 0;
      if (i == 0) return true;
    }
  }
}

// A hole that would complete a term: the term's last step reads cell
// (row, col), which must hold `value` for the term to equal a given result.
struct PendingCell {
  int row = -1;
  int col = -1;
  int value = -1;
};

// Like eval_partial. When the value is unknown only because of the final
// step, that step's op and operands are returned through top_op, a_out and
// b_out; otherwise top_op is left as (or set to) Var.
int eval_with_pending(const Term& term, const PartialTable& t, const Element* vars,
                      TermOp& top_op, int& a_out, int& b_out) {
  int stack[kMaxTermStack];
  int top = 0;
  const std::size_t last = term.code.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const TermInstr& in = term.code[i];
    int v;
    switch (in.op) {
      case TermOp::Var: stack[top++] = vars[in.var]; continue;
      case TermOp::One: stack[top++] = 0; continue;
      case TermOp::LInv: v = t.rdiv(0, stack[top - 1]); break;
      case TermOp::RInv: v = t.ldiv(stack[top - 1], 0); break;
      default: {
        const int b = stack[--top];
        const int a = stack[top - 1];
        v = in.op == TermOp::Mul ? t.mul(a, b) : in.op == TermOp::LDiv ? t.ldiv(a, b) : t.rdiv(a, b);
        if (v < 0 && i == last) {
          top_op = in.op;
          a_out = a;
          b_out = b;
        }
      }
    }
    if (v < 0) {
      if (i == last && (in.op == TermOp::LInv || in.op == TermOp::RInv)) {
        top_op = in.op;
        a_out = stack[top - 1];
        b_out = -1;
      } else if (i != last) {
        top_op = TermOp::Var;
      }
      return -1;
    }
    stack[top - 1] = v;
  }
  return stack[0];
}

// The cell and value that make a term whose last step is `op` on (a, b)
// evaluate to `target`.
PendingCell force_cell(TermOp op, int a, int b, int target) {
  switch (op) {
    case TermOp::Mul: return {a, b, target};                // a*b = target
    case TermOp::LDiv: return {a, target, b};               // a*target = b
    case TermOp::RDiv: return {target, b, a};               // target*b = a
    case TermOp::LInv: return {target, a, 0};               // target*a = 1
    case TermOp::RInv: return {a, target, 0};               // a*target = 1
    default: return {};
  }
}

}  // namespace

PropagationVerdict propagate_identities(const PartialTable& partial,
                                        const std::vector<const Identity*>& identities) {
  for (const Identity* id : identities) {
    if (!identity_consistent(partial, *id)) return PropagationVerdict::Contradiction;
  }
  return PropagationVerdict::Consistent;
}

PropagationVerdict propagate_identity(const PartialTable& partial,
                                      std::string_view variety_id) {
  return propagate_identities(partial, required_identities(variety_id));
}

void validate_spec(const SearchSpec& spec) {
  if (spec.order == 0 || spec.order > kMaxSearchOrder) {
    throw LoopError(ErrorKind::InvalidSpec,
                    "search order must be in 1.." + std::to_string(kMaxSearchOrder));
  }
  if (spec.shards == 0) throw LoopError(ErrorKind::InvalidSpec, "shard count must be positive");
  std::set<std::string> req;
  for (const auto& r : spec.required) req.insert(find_variety(r).id);
  for (const auto& f : spec.forbidden) {
    if (req.count(find_variety(f).id)) {
      throw LoopError(ErrorKind::InvalidSpec,
                      "variety '" + f + "' is both required and forbidden");
    }
  }
  for (const auto& prefix : spec.prefixes) {
    for (const CellAssignment& a : prefix) {
      if (a.row >= spec.order || a.col >= spec.order || a.value >= spec.order) {
        throw LoopError(ErrorKind::InvalidSpec, "prefix cell out of range");
      }
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
 public:
  Searcher(const SearchSpec& spec, const std::function<bool(const LoopTable&)>& visit)
      : spec_(spec), visit_(visit), table_(spec.order), start_(Clock::now()) {
    std::set<const Identity*> seen;
    for (const auto& r : spec.required) {
      for (const Identity* id : required_identities(r)) {
        if (seen.insert(id).second) identities_.push_back(id);
      }
    }
    // Cheap identities first: they fail earliest.
    std::stable_sort(identities_.begin(), identities_.end(),
                     [](const Identity* a, const Identity* b) { return a->arity() < b->arity(); });
  }

  SearchResult run() {
    result_.order = spec_.order;
    if (!spec_.empty_shard) {
      if (spec_.prefixes.empty()) {
        descend();
      } else {
        for (const auto& prefix : spec_.prefixes) {
          if (!run_prefix(prefix)) break;
        }
      }
    }
    result_.elapsed_seconds = seconds();
    return result_;
  }

 private:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  // Judges every determined instance and fills cells that an instance forces
  // (one side known, the other missing only its last step), to a fixpoint.
  // Placed cells are appended to `forced` so the caller can undo them.
  bool deduce(std::vector<std::pair<std::size_t, std::size_t>>& forced) {
    if (!spec_.propagate) return true;
    if (!spec_.deduce) {
      return propagate_identities(table_, identities_) == PropagationVerdict::Consistent;
    }
    const std::size_t n = spec_.order;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Identity* id : identities_) {
        const std::size_t k = id->arity();
        Element vars[kMaxVariables] = {};
        while (true) {
          TermOp lop = TermOp::Var, rop = TermOp::Var;
          int la = 0, lb = 0, ra = 0, rb = 0;
          const int l = eval_with_pending(id->lhs, table_, vars, lop, la, lb);
          const int r = eval_with_pending(id->rhs, table_, vars, rop, ra, rb);
          PendingCell cell;
          if (l >= 0 && r >= 0) {
            if (l != r) return false;
          } else if (l >= 0 && rop != TermOp::Var) {
            cell = force_cell(rop, ra, rb, l);
          } else if (r >= 0 && lop != TermOp::Var) {
            cell = force_cell(lop, la, lb, r);
          }
          if (cell.row >= 0) {
            const auto row = static_cast<std::size_t>(cell.row);
            const auto col = static_cast<std::size_t>(cell.col);
            const int have = table_.at(row, col);
            if (have != PartialTable::kHole) {
              if (have != cell.value) return false;
            } else {
              if (!table_.can_place(row, col, cell.value)) return false;
              table_.place(row, col, cell.value);
              forced.emplace_back(row, col);
              changed = true;
            }
          }
          std::size_t i = k;
          bool done = k == 0;
          while (i > 0) {
            --i;
            if (++vars[i] < n) break;
            vars[i] = 0;
            if (i == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    return true;
  }

  // deduce() followed by the recursive search; undoes forced cells.
  bool descend() {
    std::vector<std::pair<std::size_t, std::size_t>> forced;
    bool go_on = true;
    if (deduce(forced)) go_on = dfs();
    for (auto it = forced.rbegin(); it != forced.rend(); ++it) table_.clear(it->first, it->second);
    return go_on;
  }

  void count_node() {
    ++result_.visited;
    if (spec_.budget.max_nodes != 0 && result_.visited > spec_.budget.max_nodes) {
      throw LoopError(ErrorKind::BudgetExceeded,
                      "node budget of " + std::to_string(spec_.budget.max_nodes) + " exceeded",
                      static_cast<std::int64_t>(spec_.budget.max_nodes));
    }
    if (spec_.budget.max_seconds > 0 && (result_.visited & 1023) == 0 &&
        seconds() > spec_.budget.max_seconds) {
      throw LoopError(ErrorKind::BudgetExceeded, "time budget exceeded");
    }
  }

  bool run_prefix(const std::vector<CellAssignment>& prefix) {
    std::vector<std::pair<std::size_t, std::size_t>> placed;
    bool ok = true;
    for (const CellAssignment& a : prefix) {
      if (table_.at(a.row, a.col) == a.value) continue;
      if (!table_.can_place(a.row, a.col, a.value)) {
        ok = false;
        break;
      }
      table_.place(a.row, a.col, a.value);
      placed.emplace_back(a.row, a.col);
    }
    bool go_on = true;
    if (ok) go_on = descend();
    for (auto it = placed.rbegin(); it != placed.rend(); ++it) table_.clear(it->first, it->second);
    return go_on;
  }

  // Returns false to stop the whole search.
  bool dfs() {
    const std::size_t n = spec_.order;
    if (table_.holes() == 0) return leaf();
    std::size_t best_r = 0, best_c = 0;
    int best = 65;
    for (std::size_t r = 1; r < n && best > 0; ++r) {
      for (std::size_t c = 1; c < n; ++c) {
        if (table_.at(r, c) != PartialTable::kHole) continue;
        const int cnt = std::popcount(table_.candidates(r, c));
        if (cnt < best) {
          best = cnt;
          best_r = r;
          best_c = c;
          if (cnt == 0 || spec_.cell_order == CellOrder::RowMajor) break;
        }
      }
      if (spec_.cell_order == CellOrder::RowMajor && best < 65) break;
    }
    if (best == 0) return true;
    std::uint64_t cand = table_.candidates(best_r, best_c);
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      count_node();
      table_.place(best_r, best_c, v);
      const bool go_on = descend();
      table_.clear(best_r, best_c);
      if (!go_on) return false;
    }
    return true;
  }

  bool leaf() {
    LoopTable q = table_.to_loop();
    for (const Identity* id : identities_) {
      if (!holds(*id, q)) return true;
    }
    for (const auto& f : spec_.forbidden) {
      if (check_variety(q, f)) return true;
    }
    if (spec_.isomorphs == IsomorphHandling::UpToIso) {
      std::vector<Element> key = canonical_key(q);
      if (!seen_.insert(key).second) return true;
      q = LoopTable::from_cells_unchecked(q.order(), std::move(key));
    }
    ++result_.found;
    return visit_(q);
  }

  const SearchSpec& spec_;
  const std::function<bool(const LoopTable&)>& visit_;
  PartialTable table_;
  std::vector<const Identity*> identities_;
  std::set<std::vector<Element>> seen_;
  SearchResult result_;
  Clock::time_point start_;
};

}  // namespace

SearchResult enumerate(const SearchSpec& spec,
                       const std::function<bool(const LoopTable&)>& visit) {
  validate_spec(spec);
  return Searcher(spec, visit).run();
}

SearchResult enumerate(const SearchSpec& spec) {
  std::vector<LoopTable> loops;
  const std::function<bool(const LoopTable&)> visit = [&](const LoopTable& q) {
    if (spec.mode != SearchMode::Count) loops.push_back(q);
    return spec.mode != SearchMode::First;
  };
  SearchResult r = enumerate(spec, visit);
  r.loops = std::move(loops);
  return r;
}

namespace {

void row_one_prefixes(std::size_t n, std::size_t depth, std::vector<CellAssignment>& cur,
                      std::uint64_t used, std::vector<std::vector<CellAssignment>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  const std::size_t c = cur.size() + 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == 1 || v == c || (used >> v & 1)) continue;
    cur.push_back({1, static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(v)});
    row_one_prefixes(n, depth, cur, used | (std::uint64_t{1} << v), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SearchSpec> shard(const SearchSpec& spec, std::size_t k) {
  if (k == 0) throw LoopError(ErrorKind::InvalidSpec, "shard count must be positive");
  validate_spec(spec);
  if (k == 1) return {spec};

  std::vector<std::vector<CellAssignment>> prefixes = spec.prefixes;
  if (prefixes.empty() && !spec.empty_shard) {
    const std::size_t n = spec.order;
    if (n < 2) {
      prefixes.push_back({});
    } else {
      for (std::size_t depth = 1; depth < n; ++depth) {
        prefixes.clear();
        std::vector<CellAssignment> cur;
        row_one_prefixes(n, depth, cur, std::uint64_t{1} << 1, prefixes);
        if (prefixes.size() >= k) break;
      }
      if (prefixes.empty()) prefixes.push_back({});
    }
  }

  std::vector<SearchSpec> out(k, spec);
  for (auto& s : out) {
    s.prefixes.clear();
    s.shards = 1;
  }
  for (std::size_t i = 0; i < prefixes.size(); ++i) out[i % k].prefixes.push_back(prefixes[i]);
  for (auto& s : out) {
    if (s.prefixes.empty()) s.empty_shard = true;
  }
  return out;
}

SearchResult run_sharded(const SearchSpec& spec) {
  validate_spec(spec);
  if (spec.shards == 1) return enumerate(spec);
  const auto start = Clock::now();
  std::vector<SearchSpec> specs = shard(spec, spec.shards);
  std::vector<SearchResult> results(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  const bool keep = spec.mode != SearchMode::Count || spec.isomorphs == IsomorphHandling::UpToIso;
  {
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      workers.emplace_back([&, i] {
        try {
          SearchSpec s = specs[i];
          if (keep && s.mode == SearchMode::Count) s.mode = SearchMode::Collect;
          results[i] = enumerate(s);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SearchResult merged;
  merged.order = spec.order;
  std::set<std::vector<Element>> seen;
  for (SearchResult& r : results) {
    merged.visited += r.visited;
    if (!keep) {
      merged.found += r.found;
      continue;
    }
    for (LoopTable& q : r.loops) {
      if (spec.isomorphs == IsomorphHandling::UpToIso) {
        std::vector<Element> key(q.cells().begin(), q.cells().end());
        if (!seen.insert(std::move(key)).second) continue;
      }
      if (spec.mode == SearchMode::First && !merged.loops.empty()) break;
      ++merged.found;
      if (spec.mode != SearchMode::Count) merged.loops.push_back(std::move(q));
    }
  }
  merged.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return merged;
}

std::uint64_t count_up_to_isomorphism(std::size_t order, const SearchSpec& spec) {
  SearchSpec s = spec;
  s.order = order;
  s.mode = SearchMode::Count;
  s.isomorphs = IsomorphHandling::UpToIso;
  return s.shards > 1 ? run_sharded(s).found : enumerate(s).found;
}

std::optional<MinimalOrderResult> minimal_order(const std::vector<std::string>& required,
                                                const std::vector<std::string>& forbidden,
                                                std::size_t max_order,
                                                const SearchBudget& budget) {
  for (std::size_t n = 1; n <= max_order; ++n) {
    SearchSpec s;
    s.order = n;
    s.required = required;
    s.forbidden = forbidden;
    s.mode = SearchMode::First;
    s.budget = budget;
    SearchResult r = enumerate(s);
    if (!r.loops.empty()) return MinimalOrderResult{n, std::move(r.loops.front())};
  }
  return std::nullopt;
}

std::string summary_line(const SearchResult& result) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "order=%zu visited=%llu found=%llu elapsed=%.3f",
                result.order, static_cast<unsigned long long>(result.visited),
                static_cast<unsigned long long>(result.found), result.elapsed_seconds);
  return buf;
}

}  // namespace loops
